#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace vty::models {

class Dfa {
 public:
  // transitions[state][symbol index]. Throws INVALID_ARGUMENT unless the
  // table is total and every state index is in range.
  Dfa(std::size_t states, std::string alphabet, std::vector<std::vector<std::size_t>> transitions, std::size_t start,
      std::set<std::size_t> accepting);

  std::size_t states() const noexcept { return states_; }
  const std::string& alphabet() const noexcept { return alphabet_; }
  std::size_t start() const noexcept { return start_; }
  const std::set<std::size_t>& accepting() const noexcept { return accepting_; }
  std::size_t next(std::size_t state, char symbol) const;

 private:
  std::size_t states_;
  std::string alphabet_;
  std::vector<std::vector<std::size_t>> transitions_;
  std::size_t start_;
  std::set<std::size_t> accepting_;
};

struct DfaRun {
  bool accepted = false;
  std::size_t transitions = 0;
};

// Throws BAD_SYMBOL for a symbol outside the alphabet.
DfaRun dfa_run(const Dfa& d, const std::string& word);

// Every complete DFA with 1..max_states states over `alphabet`, all start
// states and accepting sets.
std::vector<Dfa> all_dfas(std::size_t max_states, const std::string& alphabet);
// All words over `alphabet` of length <= max_length, shortest first.
std::vector<std::string> all_words(const std::string& alphabet, std::size_t max_length);

}  // namespace vty::models
