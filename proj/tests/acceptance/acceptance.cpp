#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli_support.hpp"
#include "oracle/closure_oracle.hpp"
#include "projection/generators.hpp"
#include "support.hpp"
#include "variety/fixtures.hpp"
#include "vty/error.hpp"
#include "vty/logic/closure.hpp"
#include "vty/models/encoding.hpp"
#include "vty/models/fixed_output.hpp"
#include "vty/models/witnesses.hpp"
#include "vty/projection/projection.hpp"
#include "vty/projection/relation.hpp"
#include "vty/variety/prevariety.hpp"

using namespace vty;
using vty::testing::F;
using vty::testing::Gen;
using vty::testing::set_of;

namespace {

constexpr unsigned kCalculi = 30;
constexpr unsigned kMaxDepth = 4;
constexpr double kClosureSeconds = 60;
constexpr unsigned kComponentLists = 120;
constexpr unsigned kRegistries = 1000;
constexpr unsigned kProbes = 100'000;
constexpr double kFixedOutputSeconds = 300;
constexpr unsigned kDifferentialCases = 150;

// Collects failures for one criterion; the first few are echoed.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::size_t count() const { return count_; }
  std::string failures() const {
    std::string out;
    for (const auto& f : failures_) out += "\n    " + f;
    if (failed_ > failures_.size()) out += "\n    ...";
    return out;
  }

 private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

std::map<std::string, unsigned> engine_levels(const logic::ClosureResult& r) {
  std::map<std::string, unsigned> out;
  for (const auto& t : r.theorems) out.emplace(t.formula.text(), t.level);
  return out;
}

std::string closure_oracle(Check& c) {
  Gen gen(0xacce01);
  auto start = Clock::now();
  for (unsigned i = 0; i < kCalculi; ++i) {
    logic::Calculus calc = vty::testing::random_calculus(gen);
    for (unsigned d = 0; d <= kMaxDepth; ++d) {
      std::string where = "calculus " + std::to_string(i) + " depth " + std::to_string(d);
      try {
        c.expect(engine_levels(logic::closure(calc, d)) == oracle::brute_closure(calc, d), where);
      } catch (const Error& e) {
        c.expect(false, where + ": " + e.what());
      }
    }
  }
  double elapsed = seconds_since(start);
  c.expect(elapsed < kClosureSeconds, "took " + fmt_seconds(elapsed));
  return std::to_string(kCalculi) + " calculi, depth 0.." + std::to_string(kMaxDepth) + ", " + fmt_seconds(elapsed);
}

bool names(const variety::CheckReport& r, const std::string& subject) {
  if (r.pass || r.diagnostics.empty()) return false;
  return std::all_of(r.diagnostics.begin(), r.diagnostics.end(),
                     [&](const variety::Diagnostic& d) { return d.subject == subject; });
}

std::string prevariety_mutations(Check& c) {
  Gen gen(0xacce02);
  std::size_t deletions = 0;
  for (unsigned trial = 0; trial < kComponentLists; ++trial) {
    auto pv = variety::assemble_prevariety(vty::testing::random_components(gen));
    std::string tag = "list " + std::to_string(trial);
    c.expect(variety::check_prevariety(pv).pass, tag + ": assembled triad fails");
    for (const auto& f : pv.axioms) {
      auto cut = pv;
      cut.axioms.erase(f);
      ++deletions;
      c.expect(names(variety::check_prevariety(cut), f.text()), tag + ": axiom " + f.text());
    }
    for (const auto& f : pv.theorems) {
      auto cut = pv;
      cut.theorems.erase(f);
      ++deletions;
      c.expect(names(variety::check_prevariety(cut), f.text()), tag + ": theorem " + f.text());
    }
    for (std::size_t i = 0; i < pv.rules.size(); ++i) {
      auto cut = pv;
      cut.rules.erase(cut.rules.begin() + static_cast<long>(i));
      ++deletions;
      c.expect(names(variety::check_prevariety(cut), pv.rules[i].name()), tag + ": rule " + pv.rules[i].name());
    }
  }
  return std::to_string(kComponentLists) + " lists, " + std::to_string(deletions) + " deletions";
}

void golden(Check& c, const std::string& name) {
  for (const auto& g : vty::testing::golden_cases()) {
    if (g.name != name) continue;
    auto r = vty::testing::cli(g.args);
    std::string expected = vty::testing::read_file(std::filesystem::path(VTY_GOLDEN_DIR) / name);
    c.expect(!expected.empty() && r.out == expected, name + " differs");
    c.expect(r.code == g.code, name + " exit " + std::to_string(r.code));
    return;
  }
  c.expect(false, "no golden case " + name);
}

std::string inconsistent_knowledge(Check& c) {
  golden(c, "inconsistent_kb.check-prevariety.json");
  golden(c, "inconsistent_kb.consistency.json");
  auto report = vty::testing::cli({"check-prevariety", "inconsistent_kb.vty"}).json();
  const auto& k = report["prevarieties"][0]["consistency"];
  for (const char* id : {"K1", "K2", "K3"}) c.expect(k["components"][id] == "CONSISTENT", std::string(id));
  c.expect(k["global"] == "INCONSISTENT", "global");
  c.expect(k["minimal_inconsistent_pairs"] == nlohmann::json::parse(R"([["K1","K2"]])"), "pairs");
  return "golden reports match";
}

std::vector<variety::DiagnosticCode> codes(const variety::CheckReport& r) {
  std::vector<variety::DiagnosticCode> out;
  for (const auto& d : r.diagnostics) out.push_back(d.code);
  return out;
}

std::string witnesses(Check& c) {
  using variety::DiagnosticCode;
  golden(c, "shared_core.check-variety.json");
  golden(c, "shared_core_nowitness.check-variety.json");
  golden(c, "bijective.check-prevariety.json");
  golden(c, "bijective.check-variety.json");
  golden(c, "bijective_collide.check-prevariety.json");

  auto pv = variety::assemble_prevariety(vty::testing::shared_core_components());
  c.expect(variety::check_variety(pv, 2, {vty::testing::shared_core_witness()}).pass, "core with witness");
  auto bare = variety::check_variety(pv, 2, {});
  c.expect(!bare.pass && codes(bare) == std::vector{DiagnosticCode::MissingWitness}, "core without witness");

  auto strict = variety::assemble_prevariety(
      {vty::testing::component("B2", {"p", "(-> p q)", "(-> q r)"}, {"p", "(-> p q)", "(-> q r)", "q"})});
  auto as_prevariety = variety::check_bijective_variety(strict, variety::BijectiveMode::Prevariety, 1, {});
  auto as_variety = variety::check_bijective_variety(strict, variety::BijectiveMode::Variety, 1, {});
  c.expect(as_prevariety.pass, "prevariety mode passes");
  c.expect(!as_variety.pass && codes(as_variety) == std::vector{DiagnosticCode::NotClosed}, "variety mode fails");
  return "5 golden reports, library checks agree";
}

std::vector<std::string> ids(const std::vector<projection::Placement>& list) {
  std::vector<std::string> out;
  for (const auto& p : list) out.push_back(p.class_id);
  return out;
}

std::string projection_fidelity(Check& c) {
  using namespace projection;
  const std::vector<std::string> universal = {"T", "RAM", "KA", "RM", "PRF", "ITM1", "PETM", "LPRF"};
  const std::vector<std::string> limited = {"TT", "FA"};
  Registry seed = seed_registry();
  c.expect(seed.classes.size() == 10, "seed has 10 classes");
  for (const char* id : {"fixed_output_undecidable", "fixed_output_recognizable"}) {
    const TheoremRecord* t = seed.find_theorem(id);
    c.expect(t != nullptr, std::string("missing ") + id);
    if (!t) continue;
    Projection p = project(seed, *t);
    c.expect(ids(p.corollaries) == universal, std::string(id) + " corollaries");
    c.expect(ids(p.not_applicable) == limited, std::string(id) + " not applicable");
    c.expect(p.unknown.empty(), std::string(id) + " unknown");
  }

  Gen gen(0xacce05);
  for (unsigned trial = 0; trial < kRegistries; ++trial) {
    std::string tag = "registry " + std::to_string(trial);
    Registry r = vty::testing::random_registry(gen);
    TheoremRecord t = vty::testing::random_theorem(gen);
    Projection p = project(r, t);
    std::multiset<std::string> seen, expected;
    for (const auto* list : {&p.corollaries, &p.not_applicable, &p.unknown}) {
      for (const auto& e : *list) seen.insert(e.class_id);
    }
    for (const auto& cls : r.classes) expected.insert(cls.id);
    c.expect(seen == expected, tag + ": not a partition");
    for (const auto& cls : r.classes) {
      bool all = std::all_of(t.dependencies.begin(), t.dependencies.end(),
                             [&](const std::string& a) { return cls.status_of(a) == Status::Satisfied; });
      auto cor = ids(p.corollaries);
      c.expect(all == (std::find(cor.begin(), cor.end(), cls.id) != cor.end()), tag + ": membership " + cls.id);
    }

    auto base = ids(p.corollaries);
    Registry up = r;
    auto& cls = up.classes[gen.below(up.classes.size())];
    const auto& a = kSeedAxioms[gen.below(kSeedAxioms.size())];
    cls.statuses[a] = {Status::Satisfied, Evidence::citation("upgrade")};
    auto upgraded = ids(project(up, t).corollaries);
    c.expect(std::includes(upgraded.begin(), upgraded.end(), base.begin(), base.end()), tag + ": upgrade shrank");

    TheoremRecord more = t;
    more.dependencies.insert(kSeedAxioms[gen.below(kSeedAxioms.size())]);
    more.unconditional = false;
    auto fewer = ids(project(r, more).corollaries);
    c.expect(std::includes(base.begin(), base.end(), fewer.begin(), fewer.end()), tag + ": dependency grew");
  }
  return "seed partition exact, " + std::to_string(kRegistries) + " random registries";
}

std::string relation_classifier(Check& c) {
  using namespace projection;
  for (const auto& base : {logic::presets::hilbert(), logic::presets::modus_ponens_only()}) {
    std::string tag = " (" + base.id + ")";
    auto pair = classify_relation(set_of({"p", "(-> p q)"}), F("q"), base);
    c.expect(pair.sufficient == Answer::Yes && pair.irreducible == Answer::Yes, "{p, p->q} |- q" + tag);

    auto redundant = classify_relation(set_of({"p", "q", "(-> p q)"}), F("q"), base);
    c.expect(redundant.sufficient == Answer::Yes && redundant.irreducible == Answer::No, "{p, q, p->q} |- q" + tag);
    auto minimal = minimal_axiom_subsets(set_of({"p", "q", "(-> p q)"}), F("q"), base);
    c.expect(minimal.subsets == std::vector<logic::FormulaSet>{set_of({"q"}), set_of({"p", "(-> p q)"})},
             "minimal subsets" + tag);

    auto weak = classify_relation(set_of({"(-> p q)"}), F("q"), base);
    c.expect(weak.consistent_with == Answer::Yes && weak.sufficient == Answer::Unknown && !weak.entailed,
             "{p->q} |/- q" + tag);
  }
  return "3 relations on 2 bases";
}

std::string fixed_output(Check& c) {
  using namespace models;
  auto start = Clock::now();
  BruteBounds b;
  b.max_instructions = 3;
  b.max_registers = 1;
  b.inputs = {0, 1};
  b.fuel = 50;

  std::vector<RegisterMachine> world;
  enumerate_machines(3, 1, [&](const RegisterMachine& m) { world.push_back(m); });
  c.expect(world.size() == count_machines(3, 1), "world size");

  constexpr std::uint64_t kOutputs = 5;
  const std::vector<std::uint64_t> schedule{5, 50};
  std::vector<std::set<std::uint64_t>> positives(kOutputs);
  std::size_t total = 0;
  for (std::uint64_t y = 0; y < kOutputs; ++y) {
    for (const auto& h : fixed_output_brute(b, y).hits) positives[y].insert(h.index);
    std::set<std::uint64_t> recognized;
    for (std::uint64_t i = 0; i < world.size(); ++i) {
      auto r = fixed_output_recognize(world[i], y, schedule, b.inputs);
      if (r.yes()) recognized.insert(i);
    }
    c.expect(recognized == positives[y], "positives differ for y=" + std::to_string(y));
    total += positives[y].size();
  }

  std::mt19937_64 rng(0xacce07);
  std::size_t yes = 0;
  for (unsigned probe = 0; probe < kProbes; ++probe) {
    std::string tag = "probe " + std::to_string(probe);
    const bool in_world = probe % 2 == 0;
    std::uint64_t index = in_world ? rng() % world.size() : 0;
    RegisterMachine m = in_world ? world[index] : random_machine(rng, 5, 2);
    std::uint64_t y = rng() % kOutputs;
    std::uint64_t fuel = 1 + rng() % 50;
    std::vector<std::uint64_t> inputs{0, 1};
    auto r = fixed_output_recognize(m, y, {fuel}, inputs);
    if (!r.yes()) continue;
    ++yes;
    Trace direct = run_machine(m, r.certificate->input, r.certificate->fuel);
    c.expect(direct.halted() && direct.output == y, tag + ": false positive");
    if (in_world) c.expect(positives[y].contains(index), tag + ": outside the oracle");
    std::uint64_t more = fuel + 1 + rng() % 50;
    c.expect(fixed_output_recognize(m, y, {more}, inputs).yes(), tag + ": lost at fuel " + std::to_string(more));
  }
  double elapsed = seconds_since(start);
  c.expect(elapsed < kFixedOutputSeconds, "took " + fmt_seconds(elapsed));
  return std::to_string(world.size()) + " machines, " + std::to_string(total) + " oracle positives over y<" +
         std::to_string(kOutputs) + ", " + std::to_string(kProbes) + " probes (" + std::to_string(yes) +
         " yes), " + fmt_seconds(elapsed);
}

std::string universality(Check& c) {
  using namespace models;
  auto suite = run_witness("rm_universal_differential");
  c.expect(suite && suite->passed && suite->cases >= 100, "shipped differential suite");

  std::mt19937_64 rng(0xacce08);
  for (unsigned i = 0; i < kDifferentialCases; ++i) {
    RegisterMachine m = random_machine(rng, 8, 4);
    std::uint64_t input = rng() % 8, fuel = 1 + rng() % 120;
    Trace direct = run_machine(m, input, fuel);
    UniversalTrace u = universal_run(encode_program(m), input, fuel);
    c.expect(direct.outcome == u.trace.outcome && direct.output == u.trace.output && direct.steps == u.trace.steps,
             "case " + std::to_string(i));
  }
  return std::to_string(suite ? suite->cases : 0) + " shipped + " + std::to_string(kDifferentialCases) +
         " fresh cases";
}

std::string determinism(Check& c) {
  std::set<std::string> commands;
  for (const auto& g : vty::testing::golden_cases()) {
    auto first = vty::testing::cli(g.args);
    auto second = vty::testing::cli(g.args);
    c.expect(first.out == second.out && first.code == second.code, g.name);
    commands.insert(g.args[0] == "--format" ? g.args[2] : g.args[0]);
  }
  return std::to_string(vty::testing::golden_cases().size()) + " invocations over " +
         std::to_string(commands.size()) + " commands";
}

struct Criterion {
  int id;
  const char* name;
  std::function<std::string(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "closure matches brute-force enumeration", closure_oracle},
      {2, "prevariety round trip and deletion detection", prevariety_mutations},
      {3, "inconsistent knowledge scenario", inconsistent_knowledge},
      {4, "witness and bijective checks", witnesses},
      {5, "projection partition and monotonicity", projection_fidelity},
      {6, "relation classifier", relation_classifier},
      {7, "bounded fixed output recognizer", fixed_output},
      {8, "universal interpreter differential", universality},
      {9, "byte-identical CLI output", determinism},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    std::string detail;
    try {
      detail = cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.ok() ? "PASS" : "FAIL") << " " << cr.id << " " << cr.name << ": " << detail << " ["
              << check.count() << " checks]" << check.failures() << "\n";
    if (!check.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
