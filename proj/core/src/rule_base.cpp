#include "fuzzynav/rule_base.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace fuzzynav {

const Rule* RuleBase::find_rule(std::string_view angle_term,
                                std::string_view distance_term) const {
  for (const Rule& r : rules) {
    if (r.angle_term == angle_term && r.distance_term == distance_term) {
      return &r;
    }
  }
  return nullptr;
}

std::vector<std::string> validate(const RuleBase& rb) {
  std::vector<std::string> issues;
  for (const LinguisticVariable* var : {&rb.angle, &rb.distance, &rb.right,
                                        &rb.left}) {
    for (std::string& issue : check_variable(*var)) {
      issues.push_back(std::move(issue));
    }
  }

  auto cell = [](const std::string& a, const std::string& d) {
    return "(" + a + ", " + d + ")";
  };

  std::map<std::pair<std::string, std::string>, int> seen;
  for (const Rule& r : rb.rules) {
    const std::string where = "rule " + cell(r.angle_term, r.distance_term);
    bool resolved = true;
    if (rb.angle.find(r.angle_term) < 0) {
      issues.push_back(where + ": unresolved antecedent, angle has no term '" +
                       r.angle_term + "'");
      resolved = false;
    }
    if (rb.distance.find(r.distance_term) < 0) {
      issues.push_back(where +
                       ": unresolved antecedent, distance has no term '" +
                       r.distance_term + "'");
      resolved = false;
    }
    if (rb.right.find(r.right_term) < 0) {
      issues.push_back(where + ": unresolved consequent, right has no term '" +
                       r.right_term + "'");
    }
    if (rb.left.find(r.left_term) < 0) {
      issues.push_back(where + ": unresolved consequent, left has no term '" +
                       r.left_term + "'");
    }
    if (resolved && ++seen[{r.angle_term, r.distance_term}] >= 2) {
      issues.push_back("duplicate cell " + cell(r.angle_term, r.distance_term));
    }
  }

  for (const Term& a : rb.angle.terms) {
    for (const Term& d : rb.distance.terms) {
      if (!seen.contains({a.label, d.label})) {
        issues.push_back("incomplete grid: " + cell(a.label, d.label) +
                         " undefined");
      }
    }
  }
  return issues;
}

void sort_rules(RuleBase& rb) {
  auto key = [&](const Rule& r) {
    const int a = rb.angle.find(r.angle_term);
    const int d = rb.distance.find(r.distance_term);
    if (a < 0 || d < 0) return std::pair{1 << 30, 0};
    return std::pair{a, d};
  };
  std::stable_sort(rb.rules.begin(), rb.rules.end(),
                   [&](const Rule& x, const Rule& y) { return key(x) < key(y); });
}

std::string_view to_string(RuleSetSize size) {
  switch (size) {
    case RuleSetSize::Three:
      return "3";
    case RuleSetSize::Five:
      return "5";
    case RuleSetSize::Seven:
      return "7";
  }
  return "?";
}

std::optional<RuleSetSize> rule_set_size_from_int(int n) {
  switch (n) {
    case 3:
      return RuleSetSize::Three;
    case 5:
      return RuleSetSize::Five;
    case 7:
      return RuleSetSize::Seven;
    default:
      return std::nullopt;
  }
}

}  // namespace fuzzynav
