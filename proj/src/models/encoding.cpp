#include "vty/models/encoding.hpp"

#include <boost/multiprecision/integer.hpp>

#include "vty/error.hpp"

namespace vty::models {

BigInt pair(const BigInt& a, const BigInt& b) {
  BigInt w = a + b;
  return w * (w + 1) / 2 + b;
}

std::pair<BigInt, BigInt> unpair(const BigInt& z) {
  if (z < 0) throw Error(ErrorCode::DecodeError, "negative code");
  // w = floor((sqrt(8z + 1) - 1) / 2)
  BigInt w = (boost::multiprecision::sqrt(BigInt(8 * z + 1)) - 1) / 2;
  BigInt b = z - w * (w + 1) / 2;
  return {w - b, b};
}

BigInt encode_instruction(const Instruction& in) {
  switch (in.op) {
    case Instruction::Op::Halt: return 0;
    case Instruction::Op::Inc: return 1 + 2 * pair(in.reg, in.target);
    case Instruction::Op::DecJz: return 2 + 2 * pair(in.reg, pair(in.target, in.alt));
  }
  return 0;
}

BigInt encode_list(const std::vector<BigInt>& items) {
  BigInt code = 0;
  for (auto it = items.rbegin(); it != items.rend(); ++it) code = 1 + pair(*it, code);
  return code;
}

BigInt encode_program(const RegisterMachine& m) {
  std::vector<BigInt> codes;
  for (const auto& in : m.program) codes.push_back(encode_instruction(in));
  return encode_list(codes);
}

namespace {

std::size_t small(const BigInt& v, std::size_t limit, const char* what) {
  if (v >= limit) throw Error(ErrorCode::DecodeError, std::string(what) + " out of range");
  return v.convert_to<std::size_t>();
}

// (op, reg, target, alt) with unchecked targets.
Instruction decode_instruction(const BigInt& c, std::size_t target_limit, std::uint64_t* host_steps) {
  if (c == 0) return Instruction::halt();
  if (c % 2 == 1) {
    auto [r, k] = unpair((c - 1) / 2);
    if (host_steps) ++*host_steps;
    return Instruction::inc(small(r, kMaxDecodedRegister, "register index"), small(k, target_limit, "jump target"));
  }
  auto [r, t] = unpair((c - 2) / 2);
  auto [kz, kp] = unpair(t);
  if (host_steps) *host_steps += 2;
  return Instruction::decjz(small(r, kMaxDecodedRegister, "register index"), small(kz, target_limit, "jump target"),
                            small(kp, target_limit, "jump target"));
}

}  // namespace

RegisterMachine decode_program(const BigInt& code) {
  if (code < 0) throw Error(ErrorCode::DecodeError, "negative code");
  std::vector<BigInt> items;
  BigInt rest = code;
  while (rest != 0) {
    if (items.size() == kMaxDecodedLength) throw Error(ErrorCode::DecodeError, "program longer than 4096 instructions");
    auto [c, tail] = unpair(rest - 1);
    items.push_back(std::move(c));
    rest = std::move(tail);
  }
  std::vector<Instruction> program;
  for (const auto& c : items) program.push_back(decode_instruction(c, items.size() + 1, nullptr));
  return make_machine(std::move(program));
}

namespace {

// Register file kept as an encoded list of fixed length.
struct EncodedRegisters {
  BigInt code;
  std::size_t size;
  std::uint64_t* host_steps;

  BigInt get(std::size_t i) const {
    BigInt rest = code;
    for (std::size_t j = 0;; ++j) {
      auto [head, tail] = unpair(rest - 1);
      ++*host_steps;
      if (j == i) return head;
      rest = std::move(tail);
    }
  }

  void add(std::size_t i, int delta) {
    std::vector<BigInt> prefix;
    BigInt rest = code;
    for (std::size_t j = 0; j < i; ++j) {
      auto [head, tail] = unpair(rest - 1);
      ++*host_steps;
      prefix.push_back(std::move(head));
      rest = std::move(tail);
    }
    auto [head, tail] = unpair(rest - 1);
    ++*host_steps;
    BigInt rebuilt = 1 + pair(head + delta, tail);
    ++*host_steps;
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
      rebuilt = 1 + pair(*it, rebuilt);
      ++*host_steps;
    }
    code = std::move(rebuilt);
  }
};

}  // namespace

UniversalTrace universal_run(const BigInt& code, std::uint64_t input, std::uint64_t fuel) {
  const RegisterMachine checked = decode_program(code);
  const std::size_t length = checked.program.size();

  UniversalTrace out;
  std::uint64_t& host = out.host_steps;
  std::vector<BigInt> initial(checked.registers, 0);
  initial[0] = input;
  EncodedRegisters regs{encode_list(initial), checked.registers, &host};

  std::size_t pc = 0;
  Trace& t = out.trace;
  while (true) {
    if (pc >= length) {
      t.outcome = Trace::Outcome::Halt;
      break;
    }
    if (t.steps == fuel) {
      t.outcome = Trace::Outcome::OutOfFuel;
      break;
    }
    ++t.steps;
    // Fetch instruction pc from the program code.
    BigInt rest = code;
    BigInt current;
    for (std::size_t j = 0; j <= pc; ++j) {
      auto [head, tail] = unpair(rest - 1);
      ++host;
      current = std::move(head);
      rest = std::move(tail);
    }
    Instruction in = decode_instruction(current, length + 1, &host);
    if (in.op == Instruction::Op::Halt) {
      t.outcome = Trace::Outcome::Halt;
      break;
    }
    if (in.op == Instruction::Op::Inc) {
      regs.add(in.reg, +1);
      pc = in.target;
    } else if (regs.get(in.reg) == 0) {
      pc = in.target;
    } else {
      regs.add(in.reg, -1);
      pc = in.alt;
    }
  }
  t.output = regs.get(0).convert_to<std::uint64_t>();
  out.overhead = t.steps == 0 ? 0.0 : static_cast<double>(host) / static_cast<double>(t.steps);
  return out;
}

}  // namespace vty::models
