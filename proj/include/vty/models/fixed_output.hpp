#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "vty/models/register_machine.hpp"

namespace vty::models {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

struct BruteBounds {
  std::size_t max_instructions = 1;
  std::size_t max_registers = 1;
  std::vector<std::uint64_t> inputs{0};
  std::uint64_t fuel = 10;
  std::uint64_t cap = kDefaultEnumerationCap;
};

struct BruteHit {
  // Position in the canonical enumeration.
  std::uint64_t index = 0;
  RegisterMachine machine;
  std::uint64_t input = 0;
  std::uint64_t steps = 0;
};

struct BruteResult {
  std::vector<BruteHit> hits;
  std::uint64_t machines = 0;
  std::uint64_t runs = 0;
};

// Number of programs of length <= n over registers < r with targets in
// range.
std::uint64_t count_machines(std::size_t max_instructions, std::size_t max_registers);

// Calls `visit` on every machine in canonical order: by length, then
// lexicographically by instruction (HALT, INC by register and target, DECJZ
// by register and targets).
template <class F>
void enumerate_machines(std::size_t max_instructions, std::size_t max_registers, F&& visit);

// Throws ENUMERATION_CAP_EXCEEDED when machines x inputs exceeds the cap.
BruteResult fixed_output_brute(const BruteBounds& bounds, std::uint64_t y);

struct Certificate {
  std::uint64_t input = 0;
  std::uint64_t fuel = 0;
  // Schedule stage that found it.
  std::size_t stage = 0;
};

struct Recognition {
  std::optional<Certificate> certificate;
  std::uint64_t runs = 0;

  bool yes() const noexcept { return certificate.has_value(); }
};

// Stage t runs inputs 0..t (or the first t + 1 entries of `inputs` when
// given) with fuel schedule[t]. Throws INVALID_ARGUMENT unless the schedule
// is nonempty and strictly increasing.
Recognition fixed_output_recognize(const RegisterMachine& m, std::uint64_t y, const std::vector<std::uint64_t>& schedule,
                                   const std::optional<std::vector<std::uint64_t>>& inputs = std::nullopt);

// Replays a certificate.
bool replay(const RegisterMachine& m, std::uint64_t y, const Certificate& c);

// Implementation of the enumeration template.
std::vector<Instruction> instruction_alphabet(std::size_t length, std::size_t max_registers);

template <class F>
void enumerate_machines(std::size_t max_instructions, std::size_t max_registers, F&& visit) {
  for (std::size_t len = 0; len <= max_instructions; ++len) {
    auto alphabet = instruction_alphabet(len, max_registers);
    std::vector<std::size_t> digits(len, 0);
    RegisterMachine m;
    m.registers = max_registers;
    m.program.assign(len, Instruction::halt());
    while (true) {
      for (std::size_t i = 0; i < len; ++i) m.program[i] = alphabet[digits[i]];
      visit(static_cast<const RegisterMachine&>(m));
      std::size_t i = len;
      while (i > 0 && digits[i - 1] + 1 == alphabet.size()) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
}

}  // namespace vty::models
