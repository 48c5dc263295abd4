#include "vty/cli/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "vty/error.hpp"
#include "vty/logic/parse.hpp"
#include "vty/models/witnesses.hpp"

namespace vty::cli {

namespace {

template <class T>
const T* find_by_id(const std::vector<T>& items, const std::string& id) {
  auto it = std::find_if(items.begin(), items.end(), [&](const T& x) { return x.id == id; });
  return it == items.end() ? nullptr : &*it;
}

}  // namespace

const CalculusDecl* Manifest::find_calculus(const std::string& id) const { return find_by_id(calculi, id); }
const MapDecl* Manifest::find_map(const std::string& id) const { return find_by_id(maps, id); }
const ComponentDecl* Manifest::find_component(const std::string& id) const { return find_by_id(components, id); }
const PrevarietyDecl* Manifest::find_prevariety(const std::string& id) const { return find_by_id(prevarieties, id); }
const MachineDecl* Manifest::find_machine(const std::string& id) const { return find_by_id(machines, id); }

namespace {

struct Line {
  std::size_t number = 0;
  std::string text;
  std::string keyword;
  // Remainder after the keyword and the 0-based column where it starts.
  std::string rest;
  std::size_t rest_column = 0;
};

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& message) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column + 1) + ": " + message);
}

[[noreturn]] void unresolved(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::UnresolvedReference, "line " + std::to_string(line) + ": unresolved reference to " + what);
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-' ||
           c == '.';
  });
}

struct Word {
  std::string text;
  std::size_t column;
};

std::vector<Word> split_words(const std::string& s, std::size_t base) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    if (i == s.size()) break;
    std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    out.push_back({s.substr(start, i - start), base + start});
  }
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t n = 0;
    bool leading = true;
    while (std::getline(in, raw)) {
      ++n;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::size_t i = 0;
      while (i < raw.size() && is_space(raw[i])) ++i;
      if (i == raw.size()) continue;
      if (raw[i] == '#') {
        if (leading) manifest_.header.push_back(raw);
        continue;
      }
      leading = false;
      Line line;
      line.number = n;
      line.text = raw;
      std::size_t k = i;
      while (k < raw.size() && !is_space(raw[k])) ++k;
      line.keyword = raw.substr(i, k - i);
      while (k < raw.size() && is_space(raw[k])) ++k;
      std::size_t end = raw.size();
      while (end > k && is_space(raw[end - 1])) --end;
      line.rest = raw.substr(k, end - k);
      line.rest_column = k;
      lines_.push_back(std::move(line));
    }
  }

  Manifest run() {
    while (pos_ < lines_.size()) top_level(lines_[pos_++]);
    resolve();
    return std::move(manifest_);
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  Manifest manifest_;
  std::map<std::string, std::size_t> ref_lines_;
  std::set<std::string> signature_;

  // ---- helpers ----

  std::string identifier(const Line& l, const char* what) {
    auto words = split_words(l.rest, l.rest_column);
    if (words.size() != 1 || !is_identifier(words[0].text)) {
      fail(l.number, l.rest_column, std::string("expected a single ") + what + " identifier");
    }
    return words[0].text;
  }

  std::string text_argument(const Line& l, const char* what) {
    if (l.rest.empty()) fail(l.number, l.rest_column, std::string("expected ") + what);
    return l.rest;
  }

  void check_signature(const Formula& f, const Line& l, std::size_t column) {
    if (signature_.empty()) return;
    for (const auto& a : logic::atoms_of(f)) {
      if (!signature_.contains(a)) {
        throw Error(ErrorCode::UnresolvedReference, "line " + std::to_string(l.number) + ", column " +
                                                        std::to_string(column + 1) + ": atom '" + a +
                                                        "' is not in the signature");
      }
    }
  }

  std::vector<Formula> formulas(const Line& l, std::string_view text, std::size_t base, bool meta) {
    std::vector<Formula> out;
    std::size_t p = 0;
    while (true) {
      while (p < text.size() && is_space(text[p])) ++p;
      if (p == text.size()) break;
      std::size_t start = p;
      try {
        out.push_back(logic::parse_formula_at(text, p, meta));
      } catch (const logic::SyntaxError& e) {
        fail(l.number, base + e.offset(), e.what());
      }
      check_signature(out.back(), l, base + start);
    }
    return out;
  }

  Formula formula(const Line& l, bool meta = false) {
    auto fs = formulas(l, l.rest, l.rest_column, meta);
    if (fs.size() != 1) fail(l.number, l.rest_column, "expected exactly one formula");
    return fs[0];
  }

  logic::InferenceRule rule(const Line& l) {
    auto words = split_words(l.rest, l.rest_column);
    if (words.empty() || !is_identifier(words[0].text)) fail(l.number, l.rest_column, "expected a rule name");
    const std::string name = words[0].text;
    if (words.size() == 2 && words[1].text == "substitution") return logic::InferenceRule::substitution(name);
    std::size_t after = words.size() > 1 ? words[1].column - l.rest_column : l.rest.size();
    std::string body = l.rest.substr(after);
    std::size_t arrow = body.find("=>");
    if (arrow == std::string::npos) fail(l.number, l.rest_column + after, "expected '=>' before the conclusion");
    std::size_t base = l.rest_column + after;
    auto premises = formulas(l, std::string_view(body).substr(0, arrow), base, true);
    auto conclusion = formulas(l, std::string_view(body).substr(arrow + 2), base + arrow + 2, true);
    if (premises.empty()) fail(l.number, base, "a rule needs at least one premise");
    if (conclusion.size() != 1) fail(l.number, base + arrow + 2, "expected exactly one conclusion");
    try {
      return logic::InferenceRule::schema(name, std::move(premises), conclusion[0]);
    } catch (const Error& e) {
      fail(l.number, l.rest_column, e.what());
    }
  }

  std::size_t positive(const Word& w, std::size_t line, bool allow_zero = false) {
    const std::string& s = w.text;
    if (s.empty() || s.size() > 18 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      fail(line, w.column, "expected a non-negative integer");
    }
    std::size_t v = std::stoull(s);
    if (v == 0 && !allow_zero) fail(line, w.column, "expected a positive integer");
    return v;
  }

  // Section body: lines up to `end`.
  std::vector<Line> body(const Line& head) {
    std::vector<Line> out;
    while (pos_ < lines_.size()) {
      const Line& l = lines_[pos_++];
      if (l.keyword == "end") {
        if (!l.rest.empty()) fail(l.number, l.rest_column, "unexpected text after 'end'");
        return out;
      }
      out.push_back(l);
    }
    fail(head.number, 0, "section '" + head.keyword + "' is missing 'end'");
  }

  void claim(std::set<std::string>& ids, const std::string& id, const Line& l, const char* what) {
    if (!ids.insert(id).second) fail(l.number, l.rest_column, std::string("duplicate ") + what + " id '" + id + "'");
  }

  std::set<std::string> calculus_ids_, map_ids_{"identity"}, component_ids_, prevariety_ids_, witness_ids_,
      machine_ids_, class_ids_, theorem_ids_;

  // ---- top level ----

  void top_level(const Line& l) {
    const std::string& k = l.keyword;
    if (k == "signature") return signature(l);
    if (k == "bounds") return bounds(l);
    if (k == "declare-axiom") return declare_axiom(l);
    if (k == "calculus") return calculus(l);
    if (k == "map") return map(l);
    if (k == "component") return component(l);
    if (k == "prevariety") return prevariety(l);
    if (k == "witness") return witness(l);
    if (k == "machine") return machine(l);
    if (k == "class") return klass(l);
    if (k == "theorem") return theorem(l);
    fail(l.number, l.text.find(k), "unknown statement '" + k + "'");
  }

  void signature(const Line& l) {
    if (!manifest_.signature.empty()) fail(l.number, 0, "signature declared twice");
    auto words = split_words(l.rest, l.rest_column);
    if (words.empty()) fail(l.number, l.rest_column, "expected atom names");
    for (const auto& w : words) {
      if (!logic::is_atom_name(w.text)) fail(l.number, w.column, "'" + w.text + "' is not an atom name");
      if (!signature_.insert(w.text).second) fail(l.number, w.column, "atom '" + w.text + "' declared twice");
      manifest_.signature.push_back(w.text);
    }
  }

  void bounds(const Line& l) {
    for (const auto& w : split_words(l.rest, l.rest_column)) {
      auto eq = w.text.find('=');
      if (eq == std::string::npos) fail(l.number, w.column, "expected key=value");
      std::string key = w.text.substr(0, eq);
      Word value{w.text.substr(eq + 1), w.column + eq + 1};
      std::size_t v = positive(value, l.number);
      if (key == "depth") {
        manifest_.bounds.depth = static_cast<unsigned>(v);
      } else if (key == "atoms") {
        manifest_.bounds.atoms = v;
      } else if (key == "enum") {
        manifest_.bounds.enumeration = v;
      } else if (key == "cap") {
        manifest_.bounds.cap = v;
      } else {
        fail(l.number, w.column, "unknown bound '" + key + "'");
      }
    }
  }

  void declare_axiom(const Line& l) {
    auto words = split_words(l.rest, l.rest_column);
    if (words.size() < 2 || !is_identifier(words[0].text)) {
      fail(l.number, l.rest_column, "expected an axiom id and its statement");
    }
    const std::string& id = words[0].text;
    if (manifest_.registry.axioms.contains(id)) fail(l.number, words[0].column, "axiom '" + id + "' declared twice");
    manifest_.registry.axioms[id] = l.rest.substr(words[1].column - l.rest_column);
  }

  void calculus(const Line& head) {
    CalculusDecl c;
    c.id = identifier(head, "calculus");
    claim(calculus_ids_, c.id, head, "calculus");
    for (const Line& l : body(head)) {
      const std::string& k = l.keyword;
      if (k == "preset") {
        std::string name = identifier(l, "preset");
        if (!logic::presets::by_name(name)) fail(l.number, l.rest_column, "unknown preset '" + name + "'");
        if (c.preset) fail(l.number, l.rest_column, "preset given twice");
        c.preset = name;
      } else if (k == "axiom") {
        c.axioms.insert(formula(l));
      } else if (k == "schema") {
        auto words = split_words(l.rest, l.rest_column);
        if (words.size() < 2 || !is_identifier(words[0].text)) fail(l.number, l.rest_column, "expected a schema id");
        std::size_t off = words[1].column - l.rest_column;
        auto fs = formulas(l, std::string_view(l.rest).substr(off), l.rest_column + off, true);
        if (fs.size() != 1) fail(l.number, words[1].column, "expected exactly one pattern");
        c.schemas.push_back({words[0].text, fs[0]});
      } else if (k == "rule") {
        c.rules.push_back(rule(l));
      } else if (k == "depth") {
        auto words = split_words(l.rest, l.rest_column);
        if (words.size() != 1) fail(l.number, l.rest_column, "expected a depth");
        c.depth = static_cast<unsigned>(positive(words[0], l.number, true));
      } else if (k == "atoms") {
        for (const auto& w : split_words(l.rest, l.rest_column)) {
          if (!logic::is_atom_name(w.text)) fail(l.number, w.column, "'" + w.text + "' is not an atom name");
          c.atoms.insert(w.text);
        }
      } else {
        fail(l.number, l.text.find(k), "unknown calculus entry '" + k + "'");
      }
    }
    try {
      logic::Calculus built = materialize(c, std::nullopt);
      logic::validate_calculus(built);
    } catch (const Error& e) {
      fail(head.number, head.rest_column, e.what());
    }
    manifest_.calculi.push_back(std::move(c));
  }

  void map(const Line& head) {
    auto words = split_words(head.rest, head.rest_column);
    if (words.size() != 2 || !is_identifier(words[0].text) || (words[1].text != "rename" && words[1].text != "table")) {
      fail(head.number, head.rest_column, "expected 'map ID rename' or 'map ID table'");
    }
    MapDecl m;
    m.id = words[0].text;
    claim(map_ids_, m.id, head, "map");
    const bool table = words[1].text == "table";
    std::map<std::string, std::string> renaming;
    std::vector<std::pair<Formula, Formula>> pairs;
    std::optional<FormulaSet> domain;
    for (const Line& l : body(head)) {
      if (l.keyword == "rename" && !table) {
        auto w = split_words(l.rest, l.rest_column);
        if (w.size() != 2 || !logic::is_atom_name(w[0].text) || !logic::is_atom_name(w[1].text)) {
          fail(l.number, l.rest_column, "expected two atom names");
        }
        if (!renaming.emplace(w[0].text, w[1].text).second) fail(l.number, w[0].column, "atom renamed twice");
      } else if (l.keyword == "pair" && table) {
        auto fs = formulas(l, l.rest, l.rest_column, false);
        if (fs.size() != 2) fail(l.number, l.rest_column, "expected two formulas");
        for (const auto& [from, _] : pairs) {
          if (from == fs[0]) fail(l.number, l.rest_column, "formula " + from.text() + " mapped twice");
        }
        pairs.emplace_back(fs[0], fs[1]);
      } else if (l.keyword == "domain") {
        if (!domain) domain.emplace();
        domain->insert(formula(l));
      } else {
        fail(l.number, l.text.find(l.keyword), "unexpected map entry '" + l.keyword + "'");
      }
    }
    m.map = table ? variety::FormulaMap::table(pairs, domain) : variety::FormulaMap::renaming(renaming, domain);
    manifest_.maps.push_back(std::move(m));
  }

  void reference(const std::string& key, std::size_t line) { ref_lines_.emplace(key, line); }

  void component(const Line& head) {
    ComponentDecl c;
    c.id = identifier(head, "component");
    claim(component_ids_, c.id, head, "component");
    bool has_calculus = false;
    for (const Line& l : body(head)) {
      if (l.keyword == "calculus") {
        c.calculus = identifier(l, "calculus");
        has_calculus = true;
        reference("component:" + c.id + ":calculus", l.number);
      } else if (l.keyword == "axiom-map") {
        c.axiom_map = identifier(l, "map");
        reference("component:" + c.id + ":axiom-map", l.number);
      } else if (l.keyword == "theorem-map") {
        c.theorem_map = identifier(l, "map");
        reference("component:" + c.id + ":theorem-map", l.number);
      } else if (l.keyword == "designate") {
        c.designated.insert(formula(l));
      } else {
        fail(l.number, l.text.find(l.keyword), "unexpected component entry '" + l.keyword + "'");
      }
    }
    if (!has_calculus) fail(head.number, head.rest_column, "component '" + c.id + "' names no calculus");
    manifest_.components.push_back(std::move(c));
  }

  void prevariety(const Line& head) {
    PrevarietyDecl p;
    p.id = identifier(head, "prevariety");
    claim(prevariety_ids_, p.id, head, "prevariety");
    bool listed = false;
    for (const Line& l : body(head)) {
      if (l.keyword == "quasi") {
        if (!l.rest.empty()) fail(l.number, l.rest_column, "'quasi' takes no argument");
        p.quasi = true;
      } else if (l.keyword == "component") {
        p.components.push_back(identifier(l, "component"));
        reference("prevariety:" + p.id + ":component:" + p.components.back(), l.number);
      } else if (l.keyword == "triad") {
        if (l.rest != "auto") fail(l.number, l.rest_column, "expected 'triad auto'");
        p.automatic = true;
      } else if (l.keyword == "triad-axiom") {
        p.axioms.insert(formula(l));
        listed = true;
      } else if (l.keyword == "triad-rule") {
        p.rules.push_back(rule(l));
        listed = true;
      } else if (l.keyword == "triad-theorem") {
        p.theorems.insert(formula(l));
        listed = true;
      } else {
        fail(l.number, l.text.find(l.keyword), "unexpected prevariety entry '" + l.keyword + "'");
      }
    }
    if (p.automatic && listed) fail(head.number, head.rest_column, "'triad auto' cannot be combined with a listed triad");
    if (p.components.empty()) fail(head.number, head.rest_column, "prevariety '" + p.id + "' has no components");
    manifest_.prevarieties.push_back(std::move(p));
  }

  void witness(const Line& head) {
    WitnessDecl w;
    w.id = identifier(head, "witness");
    claim(witness_ids_, w.id, head, "witness");
    for (const Line& l : body(head)) {
      const std::string key = "witness:" + w.id + ":" + l.keyword;
      if (l.keyword == "prevariety") {
        w.prevariety = identifier(l, "prevariety");
        reference(key, l.number);
      } else if (l.keyword == "covers") {
        for (const auto& word : split_words(l.rest, l.rest_column)) {
          if (!is_identifier(word.text)) fail(l.number, word.column, "expected component ids");
          w.covers.push_back(word.text);
          reference(key + ":" + word.text, l.number);
        }
      } else if (l.keyword == "calculus") {
        w.calculus = identifier(l, "calculus");
        reference(key, l.number);
      } else if (l.keyword == "axiom-projection") {
        w.axiom_projection = identifier(l, "map");
        reference(key, l.number);
      } else if (l.keyword == "theorem-projection") {
        w.theorem_projection = identifier(l, "map");
        reference(key, l.number);
      } else if (l.keyword == "theorem") {
        w.theorems.insert(formula(l));
      } else {
        fail(l.number, l.text.find(l.keyword), "unexpected witness entry '" + l.keyword + "'");
      }
    }
    if (w.prevariety.empty() || w.calculus.empty() || w.covers.empty()) {
      fail(head.number, head.rest_column, "witness needs prevariety, covers and calculus");
    }
    manifest_.witnesses.push_back(std::move(w));
  }

  void machine(const Line& head) {
    MachineDecl m;
    m.id = identifier(head, "machine");
    claim(machine_ids_, m.id, head, "machine");
    std::vector<models::Instruction> program;
    for (const Line& l : body(head)) {
      auto words = split_words(l.rest, l.rest_column);
      auto arity = [&](std::size_t n) {
        if (words.size() != n) fail(l.number, l.rest_column, l.keyword + " takes " + std::to_string(n) + " operands");
      };
      if (l.keyword == "INC") {
        arity(2);
        program.push_back(models::Instruction::inc(positive(words[0], l.number, true), positive(words[1], l.number, true)));
      } else if (l.keyword == "DECJZ") {
        arity(3);
        program.push_back(models::Instruction::decjz(positive(words[0], l.number, true), positive(words[1], l.number, true),
                                                     positive(words[2], l.number, true)));
      } else if (l.keyword == "HALT") {
        arity(0);
        program.push_back(models::Instruction::halt());
      } else {
        fail(l.number, l.text.find(l.keyword), "unknown instruction '" + l.keyword + "'");
      }
    }
    m.machine = models::make_machine(std::move(program));
    try {
      models::validate(m.machine);
    } catch (const Error& e) {
      fail(head.number, head.rest_column, e.what());
    }
    manifest_.machines.push_back(std::move(m));
  }

  void klass(const Line& head) {
    projection::ClassProfile c;
    c.id = identifier(head, "class");
    claim(class_ids_, c.id, head, "class");
    for (const Line& l : body(head)) {
      if (l.keyword == "name") {
        c.name = text_argument(l, "a display name");
      } else if (l.keyword == "status") {
        auto words = split_words(l.rest, l.rest_column);
        if (words.size() < 2) fail(l.number, l.rest_column, "expected an axiom id and a status");
        const std::string& axiom = words[0].text;
        if (c.statuses.contains(axiom)) fail(l.number, words[0].column, "status of '" + axiom + "' given twice");
        reference("class:" + c.id + ":axiom:" + axiom, l.number);
        auto status = projection::status_from_name(words[1].text);
        if (!status) fail(l.number, words[1].column, "expected satisfied, violated or unknown");
        projection::AxiomStatus s{*status, {}};
        if (words.size() > 2) {
          const std::string& kind = words[2].text;
          auto tail = [&](std::size_t i) {
            if (words.size() <= i) fail(l.number, words.back().column, "missing evidence argument");
            return l.rest.substr(words[i].column - l.rest_column);
          };
          if (kind == "citation") {
            s.evidence = projection::Evidence::citation(tail(3));
          } else if (kind == "exec-positive") {
            if (words.size() != 5) fail(l.number, words[2].column, "expected exec-positive WITNESS SIZE");
            s.evidence = projection::Evidence::exec_positive(words[3].text, positive(words[4], l.number));
            reference("evidence:" + words[3].text, l.number);
          } else if (kind == "exec-exhaustive") {
            if (words.size() < 5) fail(l.number, words[2].column, "expected exec-exhaustive WITNESS DOMAIN");
            s.evidence = projection::Evidence::exec_exhaustive(words[3].text, tail(4));
            reference("evidence:" + words[3].text, l.number);
          } else {
            fail(l.number, words[2].column, "unknown evidence kind '" + kind + "'");
          }
        }
        if (s.status != projection::Status::Unknown && s.evidence.kind == projection::Evidence::Kind::None) {
          fail(l.number, l.rest_column, "a satisfied or violated status needs evidence");
        }
        c.statuses[axiom] = std::move(s);
      } else {
        fail(l.number, l.text.find(l.keyword), "unexpected class entry '" + l.keyword + "'");
      }
    }
    manifest_.registry.classes.push_back(std::move(c));
  }

  void theorem(const Line& head) {
    projection::TheoremRecord t;
    t.id = identifier(head, "theorem");
    claim(theorem_ids_, t.id, head, "theorem");
    for (const Line& l : body(head)) {
      if (l.keyword == "statement") {
        t.statement = text_argument(l, "a statement");
      } else if (l.keyword == "depends") {
        for (const auto& w : split_words(l.rest, l.rest_column)) {
          t.dependencies.insert(w.text);
          reference("theorem:" + t.id + ":axiom:" + w.text, l.number);
        }
      } else if (l.keyword == "unconditional") {
        t.unconditional = true;
      } else if (l.keyword == "source") {
        t.source = text_argument(l, "a source");
      } else {
        fail(l.number, l.text.find(l.keyword), "unexpected theorem entry '" + l.keyword + "'");
      }
    }
    if (t.dependencies.empty() && !t.unconditional) {
      fail(head.number, head.rest_column, "theorem '" + t.id + "' has no dependencies and is not unconditional");
    }
    manifest_.registry.theorems.push_back(std::move(t));
  }

  // ---- resolution ----

  void need(bool ok, const std::string& key, const std::string& what) {
    if (!ok) unresolved(ref_lines_.count(key) ? ref_lines_.at(key) : 0, what);
  }

  void resolve() {
    for (const auto& c : manifest_.components) {
      need(calculus_ids_.contains(c.calculus), "component:" + c.id + ":calculus", "calculus '" + c.calculus + "'");
      need(map_ids_.contains(c.axiom_map), "component:" + c.id + ":axiom-map", "map '" + c.axiom_map + "'");
      need(map_ids_.contains(c.theorem_map), "component:" + c.id + ":theorem-map", "map '" + c.theorem_map + "'");
    }
    for (const auto& p : manifest_.prevarieties) {
      for (const auto& id : p.components) {
        need(component_ids_.contains(id), "prevariety:" + p.id + ":component:" + id, "component '" + id + "'");
      }
    }
    for (const auto& w : manifest_.witnesses) {
      const std::string key = "witness:" + w.id + ":";
      need(prevariety_ids_.contains(w.prevariety), key + "prevariety", "prevariety '" + w.prevariety + "'");
      for (const auto& id : w.covers) {
        need(component_ids_.contains(id), key + "covers:" + id, "component '" + id + "'");
      }
      need(calculus_ids_.contains(w.calculus), key + "calculus", "calculus '" + w.calculus + "'");
      need(map_ids_.contains(w.axiom_projection), key + "axiom-projection", "map '" + w.axiom_projection + "'");
      need(map_ids_.contains(w.theorem_projection), key + "theorem-projection", "map '" + w.theorem_projection + "'");
    }
    const auto& axioms = manifest_.registry.axioms;
    auto known_witnesses = models::witness_ids();
    for (const auto& c : manifest_.registry.classes) {
      for (const auto& [axiom, s] : c.statuses) {
        need(axioms.contains(axiom), "class:" + c.id + ":axiom:" + axiom, "axiom '" + axiom + "'");
        if (s.evidence.executable()) {
          bool found = std::find(known_witnesses.begin(), known_witnesses.end(), s.evidence.text) !=
                       known_witnesses.end();
          need(found, "evidence:" + s.evidence.text, "witness '" + s.evidence.text + "'");
        }
      }
    }
    for (const auto& t : manifest_.registry.theorems) {
      for (const auto& d : t.dependencies) {
        need(axioms.contains(d), "theorem:" + t.id + ":axiom:" + d, "axiom '" + d + "'");
      }
    }
  }

 public:
  static logic::Calculus materialize(const CalculusDecl& c, std::optional<unsigned> depth) {
    logic::Calculus out;
    if (c.preset) out = *logic::presets::by_name(*c.preset);
    out.id = c.id;
    out.axioms.insert(c.axioms.begin(), c.axioms.end());
    out.schemas.insert(out.schemas.end(), c.schemas.begin(), c.schemas.end());
    out.rules.insert(out.rules.end(), c.rules.begin(), c.rules.end());
    out.atoms.insert(c.atoms.begin(), c.atoms.end());
    if (c.depth) out.closure_depth = *c.depth;
    if (depth) out.closure_depth = *depth;
    return out;
  }
};

}  // namespace

Manifest parse_manifest(const std::string& text) { return Parser(text).run(); }

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read manifest");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest(buffer.str());
}

namespace {

void section_break(std::string& out) {
  if (!out.empty()) out += "\n";
}

}  // namespace

std::string serialize_manifest(const Manifest& m) {
  std::string out;
  for (const auto& h : m.header) out += h + "\n";
  std::string preamble;
  if (!m.signature.empty()) {
    preamble += "signature";
    for (const auto& a : m.signature) preamble += " " + a;
    preamble += "\n";
  }
  const Bounds& b = m.bounds;
  if (b.depth || b.atoms || b.enumeration || b.cap) {
    preamble += "bounds";
    if (b.depth) preamble += " depth=" + std::to_string(*b.depth);
    if (b.atoms) preamble += " atoms=" + std::to_string(*b.atoms);
    if (b.enumeration) preamble += " enum=" + std::to_string(*b.enumeration);
    if (b.cap) preamble += " cap=" + std::to_string(*b.cap);
    preamble += "\n";
  }
  for (const auto& [id, statement] : m.registry.axioms) preamble += "declare-axiom " + id + " " + statement + "\n";
  if (!preamble.empty()) {
    section_break(out);
    out += preamble;
  }

  for (const auto& c : m.calculi) {
    section_break(out);
    out += "calculus " + c.id + "\n";
    if (c.preset) out += "  preset " + *c.preset + "\n";
    for (const auto& a : c.axioms) out += "  axiom " + a.text() + "\n";
    for (const auto& s : c.schemas) out += "  schema " + s.id + " " + s.pattern.text() + "\n";
    for (const auto& r : c.rules) out += "  rule " + r.describe() + "\n";
    if (c.depth) out += "  depth " + std::to_string(*c.depth) + "\n";
    if (!c.atoms.empty()) {
      out += "  atoms";
      for (const auto& a : c.atoms) out += " " + a;
      out += "\n";
    }
    out += "end\n";
  }
  for (const auto& d : m.maps) {
    section_break(out);
    const bool table = d.map.kind() == variety::FormulaMap::Kind::Table;
    out += "map " + d.id + (table ? " table\n" : " rename\n");
    for (const auto& [from, to] : d.map.atom_renaming()) out += "  rename " + from + " " + to + "\n";
    for (const auto& [from, to] : d.map.pairs()) out += "  pair " + from.text() + " " + to.text() + "\n";
    if (d.map.domain()) {
      for (const auto& f : *d.map.domain()) out += "  domain " + f.text() + "\n";
    }
    out += "end\n";
  }
  for (const auto& c : m.components) {
    section_break(out);
    out += "component " + c.id + "\n  calculus " + c.calculus + "\n";
    if (c.axiom_map != "identity") out += "  axiom-map " + c.axiom_map + "\n";
    if (c.theorem_map != "identity") out += "  theorem-map " + c.theorem_map + "\n";
    for (const auto& f : c.designated) out += "  designate " + f.text() + "\n";
    out += "end\n";
  }
  for (const auto& p : m.prevarieties) {
    section_break(out);
    out += "prevariety " + p.id + "\n";
    if (p.quasi) out += "  quasi\n";
    for (const auto& c : p.components) out += "  component " + c + "\n";
    if (p.automatic) out += "  triad auto\n";
    for (const auto& f : p.axioms) out += "  triad-axiom " + f.text() + "\n";
    for (const auto& r : p.rules) out += "  triad-rule " + r.describe() + "\n";
    for (const auto& f : p.theorems) out += "  triad-theorem " + f.text() + "\n";
    out += "end\n";
  }
  for (const auto& w : m.witnesses) {
    section_break(out);
    out += "witness " + w.id + "\n  prevariety " + w.prevariety + "\n  covers";
    for (const auto& c : w.covers) out += " " + c;
    out += "\n  calculus " + w.calculus + "\n";
    if (w.axiom_projection != "identity") out += "  axiom-projection " + w.axiom_projection + "\n";
    if (w.theorem_projection != "identity") out += "  theorem-projection " + w.theorem_projection + "\n";
    for (const auto& f : w.theorems) out += "  theorem " + f.text() + "\n";
    out += "end\n";
  }
  for (const auto& d : m.machines) {
    section_break(out);
    out += "machine " + d.id + "\n";
    std::istringstream lines(models::format_machine(d.machine));
    for (std::string line; std::getline(lines, line);) out += "  " + line + "\n";
    out += "end\n";
  }
  for (const auto& c : m.registry.classes) {
    section_break(out);
    out += "class " + c.id + "\n";
    if (!c.name.empty()) out += "  name " + c.name + "\n";
    for (const auto& [axiom, s] : c.statuses) {
      out += "  status " + axiom + " " + std::string(projection::status_name(s.status));
      switch (s.evidence.kind) {
        case projection::Evidence::Kind::None: break;
        case projection::Evidence::Kind::Citation: out += " citation " + s.evidence.text; break;
        case projection::Evidence::Kind::ExecPositive:
          out += " exec-positive " + s.evidence.text + " " + std::to_string(s.evidence.suite_size);
          break;
        case projection::Evidence::Kind::ExecExhaustive:
          out += " exec-exhaustive " + s.evidence.text + " " + s.evidence.domain;
          break;
      }
      out += "\n";
    }
    out += "end\n";
  }
  for (const auto& t : m.registry.theorems) {
    section_break(out);
    out += "theorem " + t.id + "\n";
    if (!t.statement.empty()) out += "  statement " + t.statement + "\n";
    if (!t.dependencies.empty()) {
      out += "  depends";
      for (const auto& d : t.dependencies) out += " " + d;
      out += "\n";
    }
    if (t.unconditional) out += "  unconditional\n";
    if (!t.source.empty()) out += "  source " + t.source + "\n";
    out += "end\n";
  }
  return out;
}

logic::Calculus resolve_calculus(const Manifest& m, const std::string& id, std::optional<unsigned> depth) {
  const CalculusDecl* c = m.find_calculus(id);
  if (!c) throw Error(ErrorCode::UnresolvedReference, "unresolved reference to calculus '" + id + "'");
  logic::Calculus out = Parser::materialize(*c, depth);
  if (!c->depth && !depth) out.closure_depth = m.bounds.depth_or_default();
  return out;
}

namespace {

const variety::FormulaMap& resolve_map(const Manifest& m, const std::string& id) {
  static const variety::FormulaMap identity = variety::FormulaMap::identity();
  if (id == "identity") return identity;
  const MapDecl* d = m.find_map(id);
  if (!d) throw Error(ErrorCode::UnresolvedReference, "unresolved reference to map '" + id + "'");
  return d->map;
}

}  // namespace

variety::Prevariety resolve_prevariety(const Manifest& m, const PrevarietyDecl& decl, std::optional<unsigned> depth) {
  std::vector<variety::Component> components;
  for (const auto& id : decl.components) {
    const ComponentDecl* c = m.find_component(id);
    if (!c) throw Error(ErrorCode::UnresolvedReference, "unresolved reference to component '" + id + "'");
    components.push_back({c->id, resolve_calculus(m, c->calculus, depth), resolve_map(m, c->axiom_map),
                          resolve_map(m, c->theorem_map), c->designated});
  }
  variety::Prevariety pv;
  if (decl.automatic) {
    pv = variety::assemble_prevariety(components);
  } else {
    pv.axioms = decl.axioms;
    pv.rules = decl.rules;
    pv.theorems = decl.theorems;
    pv.components = std::move(components);
  }
  pv.quasi = decl.quasi;
  return pv;
}

std::vector<variety::VarietyWitness> resolve_witnesses(const Manifest& m, const std::string& prevariety,
                                                       std::optional<unsigned> depth) {
  std::vector<variety::VarietyWitness> out;
  for (const auto& w : m.witnesses) {
    if (w.prevariety != prevariety) continue;
    out.push_back({w.id, w.covers, resolve_calculus(m, w.calculus, depth), resolve_map(m, w.axiom_projection),
                   resolve_map(m, w.theorem_projection), w.theorems});
  }
  return out;
}

}  // namespace vty::cli
