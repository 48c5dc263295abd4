#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace vty::models {

struct Instruction {
  enum class Op { Inc, DecJz, Halt };
  Op op = Op::Halt;
  std::size_t reg = 0;
  // Inc: next. DecJz: next if zero.
  std::size_t target = 0;
  // DecJz: next if positive.
  std::size_t alt = 0;

  static Instruction inc(std::size_t reg, std::size_t next) { return {Op::Inc, reg, next, 0}; }
  static Instruction decjz(std::size_t reg, std::size_t if_zero, std::size_t if_pos) {
    return {Op::DecJz, reg, if_zero, if_pos};
  }
  static Instruction halt() { return {}; }

  friend bool operator==(const Instruction&, const Instruction&) = default;
  friend auto operator<=>(const Instruction&, const Instruction&) = default;
};

// Jump target program.size() is the halt index.
struct RegisterMachine {
  std::size_t registers = 1;
  std::vector<Instruction> program;

  std::size_t halt_index() const noexcept { return program.size(); }
  friend bool operator==(const RegisterMachine&, const RegisterMachine&) = default;
};

// Smallest register count covering every index used, at least 1.
std::size_t registers_used(const std::vector<Instruction>& program);
RegisterMachine make_machine(std::vector<Instruction> program);

// Throws INVALID_ARGUMENT naming the first bad instruction.
void validate(const RegisterMachine& m);

struct Trace {
  enum class Outcome { Halt, OutOfFuel };
  Outcome outcome = Outcome::OutOfFuel;
  std::uint64_t output = 0;
  // Executed instructions; HALT counts, falling off the end does not.
  std::uint64_t steps = 0;
  // Program counter before each step, when requested.
  std::vector<std::size_t> log;

  bool halted() const noexcept { return outcome == Outcome::Halt; }
  friend bool operator==(const Trace&, const Trace&) = default;
};

// One fuel unit per executed instruction. Input in register 0, output read
// from register 0.
Trace run_machine(const RegisterMachine& m, std::uint64_t input, std::uint64_t fuel, bool log = false);
// Registers start from `initial` (padded with zeros).
Trace run_machine(const RegisterMachine& m, const std::vector<std::uint64_t>& initial, std::uint64_t fuel,
                  bool log = false);

// `INC r k`, `DECJZ r kz kp`, `HALT`, one per line.
std::string format_machine(const RegisterMachine& m);
// Throws PARSE_ERROR with the line number, INVALID_ARGUMENT for bad targets.
RegisterMachine parse_machine(const std::string& text);

// Well-formed program of length <= max_length over registers < max_registers.
RegisterMachine random_machine(std::mt19937_64& rng, std::size_t max_length, std::size_t max_registers);

}  // namespace vty::models
