#include <map>

#include "doctest.h"
#include "vty/error.hpp"
#include "vty/models/encoding.hpp"

using namespace vty::models;

namespace {

// Walks the diagonals in order: the n-th pair visited has code n.
std::map<std::pair<unsigned, unsigned>, unsigned> diagonal_codes(unsigned limit) {
  std::map<std::pair<unsigned, unsigned>, unsigned> out;
  unsigned n = 0;
  for (unsigned w = 0; n < limit; ++w) {
    for (unsigned b = 0; b <= w && n < limit; ++b) out[{w - b, b}] = n++;
  }
  return out;
}

bool decode_fails(const BigInt& code) {
  try {
    decode_program(code);
    return false;
  } catch (const vty::Error& e) {
    return e.code() == vty::ErrorCode::DecodeError;
  }
}

}  // namespace

TEST_CASE("pairing matches diagonal enumeration") {
  for (const auto& [ab, n] : diagonal_codes(5000)) {
    CHECK(pair(ab.first, ab.second) == n);
    auto [a, b] = unpair(n);
    CHECK(a == ab.first);
    CHECK(b == ab.second);
  }
  BigInt big = BigInt(1) << 200;
  auto [a, b] = unpair(big);
  CHECK(pair(a, b) == big);
}

TEST_CASE("golden program codes") {
  CHECK(encode_program(make_machine({Instruction::inc(0, 1)})) == 16);
  CHECK(encode_program(make_machine({Instruction::decjz(1, 2, 1), Instruction::inc(0, 0)})) == 4098);
  CHECK(encode_program(make_machine({})) == 0);
  CHECK(encode_instruction(Instruction::halt()) == 0);
  CHECK(encode_instruction(Instruction::inc(0, 0)) == 1);
  CHECK(encode_instruction(Instruction::decjz(1, 2, 1)) == 88);
  CHECK(decode_program(16) == make_machine({Instruction::inc(0, 1)}));
  CHECK(decode_program(4098) == make_machine({Instruction::decjz(1, 2, 1), Instruction::inc(0, 0)}));
}

TEST_CASE("codes outside the program range are rejected") {
  // 67 is [INC(0, 2)]: the jump target lies past the halt index.
  CHECK(decode_fails(67));
  CHECK(decode_fails(-1));
  CHECK(decode_fails(encode_list({encode_instruction(Instruction::inc(64, 0))})));
  CHECK_FALSE(decode_fails(encode_list({encode_instruction(Instruction::inc(63, 0))})));
  CHECK_THROWS_AS(universal_run(67, 0, 10), vty::Error);
}

TEST_CASE("property: encoding round-trips") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto m = random_machine(rng, 8, 4);
    m.registers = registers_used(m.program);
    CHECK(decode_program(encode_program(m)) == m);
  }
  // Every code below 2000 either decodes to a program that re-encodes to it
  // or is rejected.
  for (int c = 0; c < 2000; ++c) {
    if (!decode_fails(c)) CHECK(encode_program(decode_program(c)) == c);
  }
}

TEST_CASE("universal interpreter agrees with direct execution") {
  auto one = universal_run(16, 0, 10);
  CHECK(one.trace.halted());
  CHECK(one.trace.output == 1);
  CHECK(one.trace.steps == 1);

  std::mt19937_64 rng(11);
  double worst = 0;
  for (int i = 0; i < 120; ++i) {
    auto m = random_machine(rng, 6, 3);
    std::uint64_t input = rng() % 6, fuel = 1 + rng() % 60;
    auto direct = run_machine(m, input, fuel);
    auto u = universal_run(encode_program(m), input, fuel);
    CHECK(direct.outcome == u.trace.outcome);
    CHECK(direct.output == u.trace.output);
    CHECK(direct.steps == u.trace.steps);
    if (u.trace.steps) CHECK(u.overhead >= 1.0);
    worst = std::max(worst, u.overhead);
  }
  CHECK(worst > 1.0);
}
