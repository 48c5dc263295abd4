#include "vty/models/witnesses.hpp"

#include <random>

#include "vty/models/dfa.hpp"
#include "vty/models/encoding.hpp"

namespace vty::models {

std::vector<std::string> witness_ids() {
  return {"fa_totality_exhaustive", "rm_self_loop_diverges", "rm_universal_differential"};
}

namespace {

projection::WitnessOutcome differential() {
  std::mt19937_64 rng(20240601);
  projection::WitnessOutcome out{true, 0, ""};
  for (std::size_t i = 0; i < kDifferentialSuiteSize; ++i) {
    RegisterMachine m = random_machine(rng, 6, 3);
    std::uint64_t input = rng() % 6;
    std::uint64_t fuel = 1 + rng() % 60;
    Trace direct = run_machine(m, input, fuel);
    UniversalTrace universal = universal_run(encode_program(m), input, fuel);
    ++out.cases;
    if (!(direct.outcome == universal.trace.outcome && direct.output == universal.trace.output &&
          direct.steps == universal.trace.steps)) {
      out.passed = false;
      out.detail = "mismatch on case " + std::to_string(i);
      break;
    }
  }
  return out;
}

projection::WitnessOutcome fa_totality() {
  projection::WitnessOutcome out{true, 0, ""};
  auto words = all_words("a", 4);
  for (const Dfa& d : all_dfas(2, "a")) {
    for (const auto& w : words) {
      ++out.cases;
      if (dfa_run(d, w).transitions != w.size()) {
        out.passed = false;
        out.detail = "run did not consume the word";
      }
    }
  }
  return out;
}

projection::WitnessOutcome self_loop() {
  projection::WitnessOutcome out{true, 0, ""};
  RegisterMachine loop = make_machine({Instruction::inc(0, 0)});
  for (std::uint64_t input = 0; input < 10; ++input) {
    ++out.cases;
    if (run_machine(loop, input, 1000).halted()) {
      out.passed = false;
      out.detail = "self-loop halted";
    }
  }
  return out;
}

}  // namespace

std::optional<projection::WitnessOutcome> run_witness(const std::string& id) {
  if (id == "rm_universal_differential") return differential();
  if (id == "fa_totality_exhaustive") return fa_totality();
  if (id == "rm_self_loop_diverges") return self_loop();
  return std::nullopt;
}

}  // namespace vty::models
