#ifndef FUZZYNAV_MEMBERSHIP_HPP_
#define FUZZYNAV_MEMBERSHIP_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace fuzzynav {

/// Closed interval [lo, hi] a linguistic variable is defined over.
struct Universe {
  double lo = 0.0;
  double hi = 1.0;

  double clamp(double x) const;
  double midpoint() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }

  friend bool operator==(const Universe&, const Universe&) = default;
};

/// Triangular membership function (left foot, peak, right foot).
///
/// A left shoulder is encoded as left == peak and holds membership 1 for
/// every x <= peak; a right shoulder (peak == right) holds 1 for x >= peak.
/// Any other x outside [left, right] has membership 0.
class TriangularMf {
 public:
  /// Throws std::invalid_argument unless left <= peak <= right and
  /// right - left > 0.
  TriangularMf(double left, double peak, double right);

  double left() const { return left_; }
  double peak() const { return peak_; }
  double right() const { return right_; }

  bool is_left_shoulder() const { return left_ == peak_; }
  bool is_right_shoulder() const { return peak_ == right_; }

  /// Degree of membership of x, always in [0, 1].
  double operator()(double x) const;

  friend bool operator==(const TriangularMf&, const TriangularMf&) = default;

 private:
  double left_;
  double peak_;
  double right_;
};

inline double mf_eval(const TriangularMf& mf, double x) { return mf(x); }

struct Term {
  std::string label;
  TriangularMf mf;

  friend bool operator==(const Term&, const Term&) = default;
};

struct LinguisticVariable {
  std::string name;
  Universe universe;
  std::vector<Term> terms;

  /// Index of the term with this label, or -1.
  int find(std::string_view label) const;
  const Term* term(std::string_view label) const;

  friend bool operator==(const LinguisticVariable&,
                         const LinguisticVariable&) = default;
};

/// Evenly spaced peaks across the universe, each triangle's feet sitting on
/// the neighbouring peaks (50% overlap). The outermost terms are shoulders.
/// Labels are assigned left to right.
LinguisticVariable uniform_partition(std::string name, Universe universe,
                                     const std::vector<std::string>& labels);

/// Degrees of every term of `var` at x (clamped to the universe first),
/// in term order.
std::vector<double> fuzzify(const LinguisticVariable& var, double x);

/// Human-readable violations of the LinguisticVariable invariants: non-empty
/// universe, supports inside it, unique labels, and full coverage.
std::vector<std::string> check_variable(const LinguisticVariable& var);

}  // namespace fuzzynav

#endif  // FUZZYNAV_MEMBERSHIP_HPP_
