#ifndef FUZZYNAV_RULE_BASE_HPP_
#define FUZZYNAV_RULE_BASE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzynav/membership.hpp"

namespace fuzzynav {

/// IF angle is <angle_term> AND distance is <distance_term>
/// THEN right is <right_term>, left is <left_term>.
struct Rule {
  std::string angle_term;
  std::string distance_term;
  std::string right_term;
  std::string left_term;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Two-input, two-output Mamdani system: the four linguistic variables and a
/// complete rule grid over (angle term, distance term).
struct RuleBase {
  LinguisticVariable angle;
  LinguisticVariable distance;
  LinguisticVariable right;
  LinguisticVariable left;
  std::vector<Rule> rules;

  std::size_t grid_size() const {
    return angle.terms.size() * distance.terms.size();
  }

  /// The rule for one grid cell, or nullptr if the cell is undefined.
  const Rule* find_rule(std::string_view angle_term,
                        std::string_view distance_term) const;

  friend bool operator==(const RuleBase&, const RuleBase&) = default;
};

/// Violations of the RuleBase invariants (empty iff the rule base is usable).
std::vector<std::string> validate(const RuleBase& rb);

/// Sorts rules into grid order: angle term order major, distance term order
/// minor. Rules with unresolved antecedents go last, in their original order.
void sort_rules(RuleBase& rb);

enum class RuleSetSize { Three = 3, Five = 5, Seven = 7 };

std::string_view to_string(RuleSetSize size);
std::optional<RuleSetSize> rule_set_size_from_int(int n);

/// Universes used by the built-in controllers. The angle universe is always
/// [-pi, pi]. Distance errors beyond max_distance are clamped, which keeps the
/// far-column rules (and their steering) active until the robot closes in.
struct DefaultLayout {
  double max_distance = 12.205;  ///< distance universe is [0, max_distance]
  double max_speed = 2.0;        ///< wheel speed universe is [0, max_speed]
};

/// The 3/5/7-term controllers with uniformly partitioned universes and the
/// reference rule grids.
RuleBase builtin(RuleSetSize size, const DefaultLayout& layout = {});

/// Term labels of the built-in controllers in universe order (lowest first).
struct BuiltinLabels {
  std::vector<std::string> angle;
  std::vector<std::string> distance;
  std::vector<std::string> speed;
};
BuiltinLabels builtin_labels(RuleSetSize size);

}  // namespace fuzzynav

#endif  // FUZZYNAV_RULE_BASE_HPP_
