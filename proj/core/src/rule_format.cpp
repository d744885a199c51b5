#include "fuzzynav/rule_format.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace fuzzynav {

std::string Diagnostic::to_string() const {
  if (line <= 0) return message;
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

namespace {

constexpr std::array<std::string_view, 4> kRoles{"angle", "distance", "right",
                                                 "left"};

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == ',') {
      tokens.push_back({line.substr(i, 1), static_cast<int>(i) + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ',' && line[i] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    tokens.push_back(
        {line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  const auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && s.front() != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

std::optional<double> parse_number(std::string_view s) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

int role_index(std::string_view name) {
  for (std::size_t i = 0; i < kRoles.size(); ++i) {
    if (kRoles[i] == name) return static_cast<int>(i);
  }
  return -1;
}

struct LabelRef {
  std::string label;
  int column;
};

struct PendingRule {
  int line;
  std::array<LabelRef, 4> labels;  // angle, distance, right, left
};

struct DeclaredVariable {
  int line = 0;
  bool universe_ok = true;
  LinguisticVariable var;
  std::map<std::string, int> term_lines;
};

class Parser {
 public:
  ParseResult run(std::string_view text) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      std::string_view line = text.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      parse_line(line_no, line);
      if (end == text.size()) break;
      pos = end + 1;
    }
    return finish();
  }

 private:
  void error(int line, int column, std::string message) {
    diagnostics_.push_back({line, column, std::move(message)});
  }

  // Checks that tokens[i] exists and equals `keyword`.
  bool expect(int line, const std::vector<Token>& tokens, std::size_t i,
              std::string_view keyword, int eol_column) {
    if (i >= tokens.size()) {
      error(line, eol_column,
            "unexpected end of line, expected '" + std::string(keyword) + "'");
      return false;
    }
    if (tokens[i].text != keyword) {
      error(line, tokens[i].column,
            "expected '" + std::string(keyword) + "' but found '" +
                std::string(tokens[i].text) + "'");
      return false;
    }
    return true;
  }

  bool expect_identifier(int line, const std::vector<Token>& tokens,
                         std::size_t i, std::string_view what, int eol_column) {
    if (i >= tokens.size()) {
      error(line, eol_column,
            "unexpected end of line, expected " + std::string(what));
      return false;
    }
    if (!is_identifier(tokens[i].text)) {
      error(line, tokens[i].column,
            "expected " + std::string(what) + " but found '" +
                std::string(tokens[i].text) + "'");
      return false;
    }
    return true;
  }

  std::optional<double> expect_number(int line,
                                      const std::vector<Token>& tokens,
                                      std::size_t i, int eol_column) {
    if (i >= tokens.size()) {
      error(line, eol_column, "unexpected end of line, expected a number");
      return std::nullopt;
    }
    auto value = parse_number(tokens[i].text);
    if (!value) {
      error(line, tokens[i].column,
            "expected a number but found '" + std::string(tokens[i].text) +
                "'");
    }
    return value;
  }

  bool expect_end(int line, const std::vector<Token>& tokens, std::size_t n) {
    if (tokens.size() > n) {
      error(line, tokens[n].column,
            "unexpected trailing token '" + std::string(tokens[n].text) + "'");
      return false;
    }
    return true;
  }

  void parse_line(int line, std::string_view text) {
    const std::vector<Token> tokens = tokenize(text);
    if (tokens.empty()) return;
    const int eol = static_cast<int>(text.size()) + 1;
    const std::string_view head = tokens[0].text;
    if (head == "var") {
      parse_var(line, tokens, eol);
    } else if (head == "term") {
      parse_term(line, tokens, eol);
    } else if (head == "rule") {
      parse_rule(line, tokens, eol);
    } else {
      error(line, tokens[0].column,
            "unknown statement '" + std::string(head) +
                "' (expected var, term or rule)");
    }
  }

  void parse_var(int line, const std::vector<Token>& t, int eol) {
    if (!expect_identifier(line, t, 1, "a variable name", eol)) return;
    if (!expect(line, t, 2, "range", eol)) return;
    const auto lo = expect_number(line, t, 3, eol);
    if (!lo) return;
    const auto hi = expect_number(line, t, 4, eol);
    if (!hi || !expect_end(line, t, 5)) return;

    const std::string name(t[1].text);
    const int role = role_index(name);
    if (role < 0) {
      error(line, t[1].column,
            "unknown variable '" + name +
                "' (expected one of angle, distance, right, left)");
      return;
    }
    auto& slot = vars_[static_cast<std::size_t>(role)];
    if (slot) {
      error(line, t[1].column,
            "variable '" + name + "' already defined at line " +
                std::to_string(slot->line));
      return;
    }
    DeclaredVariable declared;
    declared.line = line;
    declared.var = LinguisticVariable{name, Universe{*lo, *hi}, {}};
    if (!(*lo < *hi)) {
      error(line, t[3].column,
            "empty range for variable '" + name + "' (requires lo < hi)");
      declared.universe_ok = false;
    }
    slot = std::move(declared);
  }

  void parse_term(int line, const std::vector<Token>& t, int eol) {
    if (!expect_identifier(line, t, 1, "a variable name", eol)) return;
    if (!expect_identifier(line, t, 2, "a term label", eol)) return;
    if (!expect(line, t, 3, "tri", eol)) return;
    std::array<double, 3> pts{};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto v = expect_number(line, t, 4 + k, eol);
      if (!v) return;
      pts[k] = *v;
    }
    if (!expect_end(line, t, 7)) return;

    const std::string var_name(t[1].text);
    const std::string label(t[2].text);
    DeclaredVariable* declared = find_var(var_name);
    if (!declared) {
      error(line, t[1].column, "unknown variable '" + var_name + "'");
      return;
    }
    std::optional<TriangularMf> mf;
    try {
      mf.emplace(pts[0], pts[1], pts[2]);
    } catch (const std::invalid_argument& e) {
      error(line, t[4].column, std::string("invalid triangle: ") + e.what());
      return;
    }
    if (auto it = declared->term_lines.find(label);
        it != declared->term_lines.end()) {
      error(line, t[2].column,
            "duplicate term '" + label + "' for variable '" + var_name +
                "' (first defined at line " + std::to_string(it->second) +
                ")");
      return;
    }
    const Universe& u = declared->var.universe;
    if (declared->universe_ok && (mf->left() < u.lo || mf->right() > u.hi)) {
      error(line, t[4].column,
            "term '" + label + "' extends outside the range of variable '" +
                var_name + "'");
      return;
    }
    declared->term_lines.emplace(label, line);
    declared->var.terms.push_back(Term{label, *mf});
  }

  void parse_rule(int line, const std::vector<Token>& t, int eol) {
    // rule if angle is L and distance is L then right is L , left is L
    static constexpr std::array<std::string_view, 17> shape{
        "rule", "if",    "angle", "is", "",  "and", "distance", "is", "",
        "then", "right", "is",    "",   ",", "left", "is",      ""};
    PendingRule rule{line, {}};
    std::size_t slot = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (shape[i].empty()) {
        if (!expect_identifier(line, t, i, "a term label", eol)) return;
        rule.labels[slot++] = {std::string(t[i].text), t[i].column};
      } else if (!expect(line, t, i, shape[i], eol)) {
        return;
      }
    }
    if (!expect_end(line, t, shape.size())) return;
    rules_.push_back(std::move(rule));
  }

  DeclaredVariable* find_var(std::string_view name) {
    const int role = role_index(name);
    if (role < 0) return nullptr;
    auto& slot = vars_[static_cast<std::size_t>(role)];
    return slot ? &*slot : nullptr;
  }

  ParseResult finish() {
    const bool any_var = std::any_of(vars_.begin(), vars_.end(),
                                     [](const auto& v) { return v.has_value(); });
    if (!any_var) {
      error(0, 0, "no variables defined");
      return {std::nullopt, std::move(diagnostics_)};
    }
    bool all_vars = true;
    for (std::size_t i = 0; i < kRoles.size(); ++i) {
      if (!vars_[i]) {
        error(0, 0, "variable '" + std::string(kRoles[i]) + "' not defined");
        all_vars = false;
        continue;
      }
      const DeclaredVariable& d = *vars_[i];
      if (!d.universe_ok) continue;
      for (const std::string& issue : check_variable(d.var)) {
        error(d.line, 1, issue);
      }
    }
    if (rules_.empty()) error(0, 0, "no rules defined");

    // Resolve labels and record grid cells.
    std::map<std::pair<std::string, std::string>, int> cells;
    bool antecedents_ok = true;
    for (const PendingRule& r : rules_) {
      bool cell_ok = true;
      for (std::size_t k = 0; k < 4; ++k) {
        const auto& declared = vars_[k];
        if (!declared) {
          cell_ok = cell_ok && k >= 2;
          continue;
        }
        if (declared->var.find(r.labels[k].label) < 0) {
          error(r.line, r.labels[k].column,
                "unknown term '" + r.labels[k].label + "' for variable '" +
                    std::string(kRoles[k]) + "'");
          if (k < 2) cell_ok = false;
        }
      }
      if (!cell_ok) {
        antecedents_ok = false;
        continue;
      }
      const std::pair key{r.labels[0].label, r.labels[1].label};
      if (auto [it, inserted] = cells.emplace(key, r.line); !inserted) {
        error(r.line, 1,
              "duplicate rule cell (" + key.first + ", " + key.second +
                  ") (first defined at line " + std::to_string(it->second) +
                  ")");
      }
    }
    if (all_vars && antecedents_ok) {
      for (const Term& a : vars_[0]->var.terms) {
        for (const Term& d : vars_[1]->var.terms) {
          if (!cells.contains({a.label, d.label})) {
            error(0, 0,
                  "incomplete grid: (" + a.label + ", " + d.label +
                      ") undefined");
          }
        }
      }
    }

    if (!diagnostics_.empty()) return {std::nullopt, std::move(diagnostics_)};

    RuleBase rb{vars_[0]->var, vars_[1]->var, vars_[2]->var, vars_[3]->var,
                {}};
    rb.rules.reserve(rules_.size());
    for (const PendingRule& r : rules_) {
      rb.rules.push_back(Rule{r.labels[0].label, r.labels[1].label,
                              r.labels[2].label, r.labels[3].label});
    }
    sort_rules(rb);
    for (const std::string& issue : validate(rb)) error(0, 0, issue);
    if (!diagnostics_.empty()) return {std::nullopt, std::move(diagnostics_)};
    return {std::move(rb), {}};
  }

  std::array<std::optional<DeclaredVariable>, 4> vars_;
  std::vector<PendingRule> rules_;
  std::vector<Diagnostic> diagnostics_;
};

void render_variable(std::string& out, const LinguisticVariable& var) {
  out += "var " + var.name + " range " + format_number(var.universe.lo) + " " +
         format_number(var.universe.hi) + "\n";
  for (const Term& t : var.terms) {
    out += "term " + var.name + " " + t.label + " tri " +
           format_number(t.mf.left()) + " " + format_number(t.mf.peak()) +
           " " + format_number(t.mf.right()) + "\n";
  }
}

void sort_terms(LinguisticVariable& var) {
  std::stable_sort(var.terms.begin(), var.terms.end(),
                   [](const Term& a, const Term& b) {
                     const auto ka = std::array{a.mf.peak(), a.mf.left(),
                                                a.mf.right()};
                     const auto kb = std::array{b.mf.peak(), b.mf.left(),
                                                b.mf.right()};
                     return ka < kb;
                   });
}

}  // namespace

ParseResult parse_rulebase(std::string_view text) { return Parser{}.run(text); }

std::string render_rulebase(const RuleBase& rb) {
  RuleBase canonical = rb;
  for (LinguisticVariable* var : {&canonical.angle, &canonical.distance,
                                  &canonical.right, &canonical.left}) {
    sort_terms(*var);
  }
  sort_rules(canonical);

  std::string out;
  out += "# fuzzy rule base: " + std::to_string(canonical.angle.terms.size()) +
         " angle terms x " + std::to_string(canonical.distance.terms.size()) +
         " distance terms, " + std::to_string(canonical.rules.size()) +
         " rules\n\n";
  for (const LinguisticVariable* var : {&canonical.angle, &canonical.distance,
                                        &canonical.right, &canonical.left}) {
    render_variable(out, *var);
    out += "\n";
  }
  for (const Rule& r : canonical.rules) {
    out += "rule if angle is " + r.angle_term + " and distance is " +
           r.distance_term + " then right is " + r.right_term + ", left is " +
           r.left_term + "\n";
  }
  return out;
}

}  // namespace fuzzynav
