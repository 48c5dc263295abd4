#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vty/models/register_machine.hpp"

namespace vty::models {

using BigInt = boost::multiprecision::cpp_int;

// Cantor pairing: pair(a, b) = (a + b)(a + b + 1) / 2 + b.
BigInt pair(const BigInt& a, const BigInt& b);
// Inverse of pair; throws DECODE_ERROR on a negative argument.
std::pair<BigInt, BigInt> unpair(const BigInt& z);

// HALT = 0, INC(r, k) = 1 + 2 pair(r, k), DECJZ(r, kz, kp) = 2 + 2 pair(r, pair(kz, kp)).
BigInt encode_instruction(const Instruction& in);
// [] = 0, c :: rest = 1 + pair(c, rest).
BigInt encode_list(const std::vector<BigInt>& items);
BigInt encode_program(const RegisterMachine& m);

inline constexpr std::size_t kMaxDecodedRegister = 64;
inline constexpr std::size_t kMaxDecodedLength = 4096;

// Throws DECODE_ERROR for negative codes, register indices >= 64, programs
// longer than 4096 instructions or jump targets past the halt index.
RegisterMachine decode_program(const BigInt& code);

struct UniversalTrace {
  Trace trace;
  // Pairing and unpairing operations performed by the interpreter.
  std::uint64_t host_steps = 0;
  // host_steps per guest step.
  double overhead = 0.0;
};

// Runs the program straight from its code: instructions are fetched by
// unpairing the code and registers live in an encoded list. Guest fuel is
// counted exactly as run_machine counts it.
UniversalTrace universal_run(const BigInt& code, std::uint64_t input, std::uint64_t fuel);

}  // namespace vty::models
