#include "vty/models/dfa.hpp"

#include "vty/error.hpp"

namespace vty::models {

Dfa::Dfa(std::size_t states, std::string alphabet, std::vector<std::vector<std::size_t>> transitions,
         std::size_t start, std::set<std::size_t> accepting)
    : states_(states),
      alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
      start_(start),
      accepting_(std::move(accepting)) {
  if (states_ == 0 || start_ >= states_) throw Error(ErrorCode::InvalidArgument, "start state out of range");
  if (transitions_.size() != states_) throw Error(ErrorCode::InvalidArgument, "transition table needs one row per state");
  for (const auto& row : transitions_) {
    if (row.size() != alphabet_.size()) throw Error(ErrorCode::InvalidArgument, "transition table is not total");
    for (std::size_t s : row) {
      if (s >= states_) throw Error(ErrorCode::InvalidArgument, "transition to a state out of range");
    }
  }
  for (std::size_t s : accepting_) {
    if (s >= states_) throw Error(ErrorCode::InvalidArgument, "accepting state out of range");
  }
}

std::size_t Dfa::next(std::size_t state, char symbol) const {
  auto i = alphabet_.find(symbol);
  if (i == std::string::npos) {
    throw Error(ErrorCode::BadSymbol, std::string("symbol '") + symbol + "' is not in the alphabet");
  }
  return transitions_[state][i];
}

DfaRun dfa_run(const Dfa& d, const std::string& word) {
  DfaRun run;
  std::size_t state = d.start();
  for (char c : word) {
    state = d.next(state, c);
    ++run.transitions;
  }
  run.accepted = d.accepting().contains(state);
  return run;
}

std::vector<Dfa> all_dfas(std::size_t max_states, const std::string& alphabet) {
  std::vector<Dfa> out;
  for (std::size_t n = 1; n <= max_states; ++n) {
    const std::size_t cells = n * alphabet.size();
    std::vector<std::size_t> digits(cells, 0);
    while (true) {
      std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(alphabet.size()));
      for (std::size_t c = 0; c < cells; ++c) table[c / alphabet.size()][c % alphabet.size()] = digits[c];
      for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
          std::set<std::size_t> acc;
          for (std::size_t s = 0; s < n; ++s) {
            if (mask & (std::size_t{1} << s)) acc.insert(s);
          }
          out.emplace_back(n, alphabet, table, start, acc);
        }
      }
      std::size_t i = cells;
      while (i > 0 && digits[i - 1] + 1 == n) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
  return out;
}

std::vector<std::string> all_words(const std::string& alphabet, std::size_t max_length) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char c : alphabet) out.push_back(out[i] + c);
    }
    begin = end;
  }
  return out;
}

}  // namespace vty::models
