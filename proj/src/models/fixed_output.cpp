#include "vty/models/fixed_output.hpp"

#include "vty/error.hpp"

namespace vty::models {

std::vector<Instruction> instruction_alphabet(std::size_t length, std::size_t max_registers) {
  std::vector<Instruction> out{Instruction::halt()};
  for (std::size_t r = 0; r < max_registers; ++r) {
    for (std::size_t k = 0; k <= length; ++k) out.push_back(Instruction::inc(r, k));
  }
  for (std::size_t r = 0; r < max_registers; ++r) {
    for (std::size_t kz = 0; kz <= length; ++kz) {
      for (std::size_t kp = 0; kp <= length; ++kp) out.push_back(Instruction::decjz(r, kz, kp));
    }
  }
  return out;
}

std::uint64_t count_machines(std::size_t max_instructions, std::size_t max_registers) {
  std::uint64_t total = 0;
  for (std::size_t len = 0; len <= max_instructions; ++len) {
    const std::uint64_t t = len + 1;
    const std::uint64_t per = 1 + max_registers * t + max_registers * t * t;
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < len; ++i) {
      if (n > kDefaultEnumerationCap * 1000) return UINT64_MAX;
      n *= per;
    }
    total += n;
  }
  return total;
}

BruteResult fixed_output_brute(const BruteBounds& bounds, std::uint64_t y) {
  if (bounds.max_registers == 0) throw Error(ErrorCode::InvalidArgument, "at least one register is required");
  const std::uint64_t machines = count_machines(bounds.max_instructions, bounds.max_registers);
  const std::uint64_t inputs = bounds.inputs.size();
  if (machines == UINT64_MAX || (inputs && machines > bounds.cap / inputs)) {
    throw Error(ErrorCode::EnumerationCapExceeded,
                "enumeration exceeds the cap of " + std::to_string(bounds.cap) + " runs");
  }
  BruteResult out;
  out.machines = machines;
  std::uint64_t index = 0;
  enumerate_machines(bounds.max_instructions, bounds.max_registers, [&](const RegisterMachine& m) {
    for (std::uint64_t input : bounds.inputs) {
      ++out.runs;
      Trace t = run_machine(m, input, bounds.fuel);
      if (t.halted() && t.output == y) out.hits.push_back({index, m, input, t.steps});
    }
    ++index;
  });
  return out;
}

Recognition fixed_output_recognize(const RegisterMachine& m, std::uint64_t y, const std::vector<std::uint64_t>& schedule,
                                   const std::optional<std::vector<std::uint64_t>>& inputs) {
  if (schedule.empty()) throw Error(ErrorCode::InvalidArgument, "fuel schedule is empty");
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (schedule[i] <= schedule[i - 1]) throw Error(ErrorCode::InvalidArgument, "fuel schedule is not increasing");
  }
  Recognition out;
  for (std::size_t stage = 0; stage < schedule.size(); ++stage) {
    const std::uint64_t fuel = schedule[stage];
    const std::size_t count = inputs ? std::min(stage + 1, inputs->size()) : stage + 1;
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t input = inputs ? (*inputs)[i] : i;
      ++out.runs;
      Trace t = run_machine(m, input, fuel);
      if (t.halted() && t.output == y) {
        out.certificate = Certificate{input, fuel, stage};
        return out;
      }
    }
  }
  return out;
}

bool replay(const RegisterMachine& m, std::uint64_t y, const Certificate& c) {
  Trace t = run_machine(m, c.input, c.fuel);
  return t.halted() && t.output == y;
}

}  // namespace vty::models
