#include "fuzzynav/membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

namespace fuzzynav {

double Universe::clamp(double x) const { return std::clamp(x, lo, hi); }

TriangularMf::TriangularMf(double left, double peak, double right)
    : left_(left), peak_(peak), right_(right) {
  if (!std::isfinite(left) || !std::isfinite(peak) || !std::isfinite(right)) {
    throw std::invalid_argument("triangle breakpoints must be finite");
  }
  if (!(left <= peak && peak <= right)) {
    throw std::invalid_argument("triangle requires left <= peak <= right");
  }
  if (!(right - left > 0.0)) {
    throw std::invalid_argument("triangle support must be non-empty");
  }
}

double TriangularMf::operator()(double x) const {
  if (x < left_) return is_left_shoulder() ? 1.0 : 0.0;
  if (x > right_) return is_right_shoulder() ? 1.0 : 0.0;
  if (x == peak_) return 1.0;
  if (x < peak_) return (x - left_) / (peak_ - left_);
  return (right_ - x) / (right_ - peak_);
}

int LinguisticVariable::find(std::string_view label) const {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].label == label) return static_cast<int>(i);
  }
  return -1;
}

const Term* LinguisticVariable::term(std::string_view label) const {
  const int i = find(label);
  return i < 0 ? nullptr : &terms[static_cast<std::size_t>(i)];
}

LinguisticVariable uniform_partition(std::string name, Universe universe,
                                     const std::vector<std::string>& labels) {
  if (labels.size() < 2) {
    throw std::invalid_argument("uniform partition needs at least two terms");
  }
  if (!(universe.lo < universe.hi)) {
    throw std::invalid_argument("universe must satisfy lo < hi");
  }
  const std::size_t n = labels.size();
  std::vector<double> peaks(n);
  for (std::size_t i = 0; i < n; ++i) {
    peaks[i] = universe.lo + universe.width() * static_cast<double>(i) /
                                 static_cast<double>(n - 1);
  }
  // Pin the ends so shoulders sit exactly on the universe boundary.
  peaks.front() = universe.lo;
  peaks.back() = universe.hi;

  LinguisticVariable var{std::move(name), universe, {}};
  var.terms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i == 0 ? peaks[0] : peaks[i - 1];
    const double right = i + 1 == n ? peaks[i] : peaks[i + 1];
    var.terms.push_back(Term{labels[i], TriangularMf(left, peaks[i], right)});
  }
  return var;
}

std::vector<double> fuzzify(const LinguisticVariable& var, double x) {
  const double clamped = var.universe.clamp(x);
  std::vector<double> degrees;
  degrees.reserve(var.terms.size());
  for (const Term& t : var.terms) degrees.push_back(t.mf(clamped));
  return degrees;
}

namespace {

// Open interval on which a term has strictly positive membership.
std::pair<double, double> positive_support(const TriangularMf& mf) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {mf.is_left_shoulder() ? -inf : mf.left(),
          mf.is_right_shoulder() ? inf : mf.right()};
}

}  // namespace

std::vector<std::string> check_variable(const LinguisticVariable& var) {
  std::vector<std::string> issues;
  const std::string prefix = "variable '" + var.name + "': ";
  const Universe& u = var.universe;
  if (!(u.lo < u.hi)) {
    issues.push_back(prefix + "empty universe (requires lo < hi)");
    return issues;
  }
  if (var.terms.empty()) {
    issues.push_back(prefix + "no terms defined");
    return issues;
  }

  std::set<std::string> seen;
  for (const Term& t : var.terms) {
    if (!seen.insert(t.label).second) {
      issues.push_back(prefix + "duplicate term label '" + t.label + "'");
    }
    if (t.mf.left() < u.lo || t.mf.right() > u.hi) {
      issues.push_back(prefix + "term '" + t.label +
                       "' extends outside the universe");
    }
  }

  // Every point of [lo, hi] must lie strictly inside some positive support.
  std::vector<std::pair<double, double>> supports;
  for (const Term& t : var.terms) supports.push_back(positive_support(t.mf));
  double x = u.lo;
  while (true) {
    double reach = -std::numeric_limits<double>::infinity();
    for (const auto& [a, b] : supports) {
      if (a < x && b > x) reach = std::max(reach, b);
    }
    if (!(reach > x)) {
      issues.push_back(prefix + "no term covers x = " + std::to_string(x));
      break;
    }
    if (reach > u.hi) break;
    x = reach;
  }
  return issues;
}

}  // namespace fuzzynav
