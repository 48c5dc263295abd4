#include "vty/models/register_machine.hpp"

#include <algorithm>
#include <sstream>

#include "vty/error.hpp"

namespace vty::models {

std::size_t registers_used(const std::vector<Instruction>& program) {
  std::size_t n = 1;
  for (const auto& in : program) {
    if (in.op != Instruction::Op::Halt) n = std::max(n, in.reg + 1);
  }
  return n;
}

RegisterMachine make_machine(std::vector<Instruction> program) {
  RegisterMachine m;
  m.registers = registers_used(program);
  m.program = std::move(program);
  return m;
}

void validate(const RegisterMachine& m) {
  const std::size_t end = m.halt_index();
  if (m.registers == 0) throw Error(ErrorCode::InvalidArgument, "machine needs at least one register");
  for (std::size_t i = 0; i < m.program.size(); ++i) {
    const auto& in = m.program[i];
    auto where = "instruction " + std::to_string(i);
    if (in.op == Instruction::Op::Halt) continue;
    if (in.reg >= m.registers) throw Error(ErrorCode::InvalidArgument, where + ": register out of range");
    if (in.target > end || (in.op == Instruction::Op::DecJz && in.alt > end)) {
      throw Error(ErrorCode::InvalidArgument, where + ": jump target out of range");
    }
  }
}

Trace run_machine(const RegisterMachine& m, std::uint64_t input, std::uint64_t fuel, bool log) {
  return run_machine(m, std::vector<std::uint64_t>{input}, fuel, log);
}

Trace run_machine(const RegisterMachine& m, const std::vector<std::uint64_t>& initial, std::uint64_t fuel, bool log) {
  std::vector<std::uint64_t> r(std::max(m.registers, initial.size()), 0);
  std::copy(initial.begin(), initial.end(), r.begin());
  Trace t;
  std::size_t pc = 0;
  while (true) {
    if (pc >= m.program.size()) {
      t.outcome = Trace::Outcome::Halt;
      break;
    }
    if (t.steps == fuel) {
      t.outcome = Trace::Outcome::OutOfFuel;
      break;
    }
    if (log) t.log.push_back(pc);
    ++t.steps;
    const Instruction& in = m.program[pc];
    if (in.op == Instruction::Op::Halt) {
      t.outcome = Trace::Outcome::Halt;
      break;
    }
    if (in.op == Instruction::Op::Inc) {
      ++r[in.reg];
      pc = in.target;
    } else if (r[in.reg] == 0) {
      pc = in.target;
    } else {
      --r[in.reg];
      pc = in.alt;
    }
  }
  t.output = r[0];
  return t;
}

std::string format_machine(const RegisterMachine& m) {
  std::string out;
  for (const auto& in : m.program) {
    switch (in.op) {
      case Instruction::Op::Inc:
        out += "INC " + std::to_string(in.reg) + " " + std::to_string(in.target) + "\n";
        break;
      case Instruction::Op::DecJz:
        out += "DECJZ " + std::to_string(in.reg) + " " + std::to_string(in.target) + " " + std::to_string(in.alt) +
               "\n";
        break;
      case Instruction::Op::Halt: out += "HALT\n"; break;
    }
  }
  return out;
}

namespace {

std::size_t parse_index(const std::string& word, std::size_t line) {
  if (word.empty() || word.size() > 9 || !std::all_of(word.begin(), word.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                                           word + "'");
  }
  return std::stoul(word);
}

}  // namespace

RegisterMachine parse_machine(const std::string& text) {
  std::vector<Instruction> program;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream words(raw);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    auto arity = [&](std::size_t n) {
      if (w.size() != n + 1) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + w[0] + " takes " +
                                               std::to_string(n) + " operands");
      }
    };
    if (w.empty()) throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": empty line");
    if (w[0] == "INC") {
      arity(2);
      program.push_back(Instruction::inc(parse_index(w[1], line), parse_index(w[2], line)));
    } else if (w[0] == "DECJZ") {
      arity(3);
      program.push_back(
          Instruction::decjz(parse_index(w[1], line), parse_index(w[2], line), parse_index(w[3], line)));
    } else if (w[0] == "HALT") {
      arity(0);
      program.push_back(Instruction::halt());
    } else {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": unknown instruction '" + w[0] + "'");
    }
  }
  RegisterMachine m = make_machine(std::move(program));
  validate(m);
  return m;
}

RegisterMachine random_machine(std::mt19937_64& rng, std::size_t max_length, std::size_t max_registers) {
  auto below = [&](std::uint64_t n) { return n == 0 ? 0 : rng() % n; };
  std::size_t len = below(max_length + 1);
  RegisterMachine m;
  m.registers = std::max<std::size_t>(max_registers, 1);
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t reg = below(m.registers);
    switch (below(5)) {
      case 0: m.program.push_back(Instruction::halt()); break;
      case 1:
      case 2: m.program.push_back(Instruction::inc(reg, below(len + 1))); break;
      default: m.program.push_back(Instruction::decjz(reg, below(len + 1), below(len + 1))); break;
    }
  }
  return m;
}

}  // namespace vty::models
