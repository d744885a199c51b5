#ifndef FUZZYNAV_RULE_FORMAT_HPP_
#define FUZZYNAV_RULE_FORMAT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzynav/rule_base.hpp"

namespace fuzzynav {

// Line-oriented rule-definition format ('#' starts a comment):
//
//   var <name> range <lo> <hi>
//   term <var> <label> tri <left> <peak> <right>
//   rule if angle is <label> and distance is <label> then right is <label>, left is <label>
//
// <name> is one of angle, distance, right, left. See docs/rule_format.md for
// the full grammar.

struct Diagnostic {
  int line = 0;    // 1-based; 0 when the problem is not tied to a line
  int column = 0;  // 1-based
  std::string message;

  /// "line:column: message", or just the message when line == 0.
  std::string to_string() const;
};

struct ParseResult {
  std::optional<RuleBase> rule_base;  // set iff diagnostics is empty
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return rule_base.has_value(); }
};

/// Parses and fully validates a rule file. Rules come back in grid order.
ParseResult parse_rulebase(std::string_view text);

/// Canonical text: variables in role order, terms sorted by position, rules
/// in grid order. Numbers use the shortest representation that round-trips.
std::string render_rulebase(const RuleBase& rb);

}  // namespace fuzzynav

#endif  // FUZZYNAV_RULE_FORMAT_HPP_
