#include "vty/projection/relation.hpp"

#include <algorithm>
#include <cstdint>

#include "vty/error.hpp"

namespace vty::projection {

std::string_view answer_name(Answer answer) {
  switch (answer) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "unknown";
}

logic::Calculus with_axioms(const logic::Calculus& base, const FormulaSet& axioms, unsigned depth) {
  logic::Calculus c = base;
  c.axioms.insert(axioms.begin(), axioms.end());
  c.closure_depth = depth;
  return c;
}

namespace {

struct Search {
  std::optional<logic::Proof> proof;
  bool truncated = false;
};

Search search(const logic::Calculus& base, const std::vector<Formula>& members, std::uint32_t mask,
              const Formula& theorem, const RelationOptions& options) {
  FormulaSet chosen;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (mask & (1u << i)) chosen.insert(members[i]);
  }
  try {
    auto result = logic::proves(with_axioms(base, chosen, options.depth), theorem, options.depth, options.theorem_cap);
    return {std::move(result.proof), false};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DepthExplosion) throw;
    return {std::nullopt, true};
  }
}

FormulaSet subset(const std::vector<Formula>& members, std::uint32_t mask) {
  FormulaSet out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (mask & (1u << i)) out.insert(members[i]);
  }
  return out;
}

void require_cap(const FormulaSet& axioms) {
  if (axioms.size() > kSubsetCap) {
    throw Error(ErrorCode::SubsetCapExceeded, std::to_string(axioms.size()) + " axioms exceed the subset cap of " +
                                                  std::to_string(kSubsetCap));
  }
}

// Masks of `n` bits ordered by popcount, then by the lowest differing member.
std::vector<std::uint32_t> masks_by_size(std::size_t n) {
  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  auto key = [](std::uint32_t m) {
    // Reversed bits sort member 0 first within a size class.
    std::uint32_t r = 0;
    for (int i = 0; i < 32; ++i) r |= ((m >> i) & 1u) << (31 - i);
    return r;
  };
  std::sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return key(a) > key(b);
  });
  return masks;
}

}  // namespace

Relation classify_relation(const FormulaSet& axioms, const Formula& theorem, const logic::Calculus& base,
                           const RelationOptions& options) {
  if (options.irreducibility) require_cap(axioms);
  Relation r;
  r.depth = options.depth;
  std::vector<Formula> members(axioms.begin(), axioms.end());
  std::vector<Formula> with_theorem = members;
  with_theorem.push_back(theorem);
  r.consistent_with = logic::satisfying_assignment(with_theorem, options.atom_cap) ? Answer::Yes : Answer::No;
  r.entailed = logic::entails(members, theorem, options.atom_cap);

  const std::uint32_t full = members.empty() ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << members.size()) - 1);
  Search top = search(base, members, full, theorem, options);
  r.truncated = top.truncated;
  if (!top.proof) return r;
  r.sufficient = Answer::Yes;
  r.proof = std::move(top.proof);
  if (!options.irreducibility) return r;

  r.irreducible = Answer::Yes;
  // Sufficiency is monotone in the axiom set, so the maximal proper subsets
  // decide irreducibility.
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::uint32_t mask = full & ~(1u << i);
    Search s = search(base, members, mask, theorem, options);
    r.truncated = r.truncated || s.truncated;
    if (s.proof) {
      r.irreducible = Answer::No;
      r.smaller = subset(members, mask);
      return r;
    }
  }
  if (r.truncated) r.irreducible = Answer::Unknown;
  return r;
}

MinimalSubsets minimal_axiom_subsets(const FormulaSet& axioms, const Formula& theorem, const logic::Calculus& base,
                                     const RelationOptions& options) {
  require_cap(axioms);
  MinimalSubsets out;
  out.depth = options.depth;
  std::vector<Formula> members(axioms.begin(), axioms.end());
  std::vector<std::uint32_t> found;
  for (std::uint32_t mask : masks_by_size(members.size())) {
    bool covered = std::any_of(found.begin(), found.end(), [&](std::uint32_t f) { return (mask & f) == f; });
    if (covered) continue;
    Search s = search(base, members, mask, theorem, options);
    out.truncated = out.truncated || s.truncated;
    if (s.proof) {
      found.push_back(mask);
      out.subsets.push_back(subset(members, mask));
    }
  }
  return out;
}

}  // namespace vty::projection
