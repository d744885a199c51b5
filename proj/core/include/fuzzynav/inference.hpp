#ifndef FUZZYNAV_INFERENCE_HPP_
#define FUZZYNAV_INFERENCE_HPP_

#include <span>
#include <string>
#include <vector>

#include "fuzzynav/errors.hpp"
#include "fuzzynav/membership.hpp"
#include "fuzzynav/rule_base.hpp"

namespace fuzzynav {

struct FiredConsequent {
  std::string label;
  double strength = 0.0;  // in (0, 1]

  friend bool operator==(const FiredConsequent&,
                         const FiredConsequent&) = default;
};

struct FiredRules {
  std::vector<FiredConsequent> right;
  std::vector<FiredConsequent> left;
};

/// Min-AND over the two antecedents of every rule. Rules that do not fire
/// are omitted. Inputs are clamped to their universes.
FiredRules fire_rules(const RuleBase& rb, double angle_error,
                      double distance_error);

/// Max-of-clipped aggregation of the fired consequents of one output.
///
/// The curve is stored exactly as a piecewise-linear function on the output
/// universe: vertices include every triangle breakpoint, every clip corner
/// and every crossing between two clipped sets.
class AggregatedOutput {
 public:
  struct Vertex {
    double x;
    double mu;
  };

  /// Empty aggregation (mu == 0 everywhere).
  explicit AggregatedOutput(Universe universe);

  const Universe& universe() const { return universe_; }
  std::span<const Vertex> vertices() const { return vertices_; }
  double max_strength() const { return max_strength_; }

  /// Membership of x; 0 outside the universe.
  double operator()(double x) const;

 private:
  friend AggregatedOutput aggregate(const LinguisticVariable&,
                                    std::span<const FiredConsequent>);

  Universe universe_;
  std::vector<Vertex> vertices_;
  double max_strength_ = 0.0;
};

/// Throws ValidationError if a fired label is not a term of `var`.
AggregatedOutput aggregate(const LinguisticVariable& var,
                           std::span<const FiredConsequent> fired);

struct CentroidOptions {
  /// Uniform samples across the universe, endpoints included.
  int samples = 1001;
  /// Merge the curve's own vertices into the grid. The piecewise-linear
  /// interpolant is then the curve itself and the centroid is exact.
  bool include_vertices = true;
  /// Area below which the aggregation counts as empty.
  double zero_area_tol = 1e-12;
};

struct CentroidResult {
  double value = 0.0;
  bool zero_area = false;
};

/// Centre of mass of the aggregated curve, clamped to its universe. An empty
/// curve yields the universe midpoint with zero_area set.
CentroidResult defuzz_centroid(const AggregatedOutput& agg,
                               const CentroidOptions& options = {});

struct InferenceResult {
  double right = 0.0;
  double left = 0.0;
  bool right_zero_area = false;
  bool left_zero_area = false;
};

/// fuzzify -> fire_rules -> aggregate -> defuzz_centroid, per output.
InferenceResult infer(const RuleBase& rb, double angle_error,
                      double distance_error,
                      const CentroidOptions& options = {});

}  // namespace fuzzynav

#endif  // FUZZYNAV_INFERENCE_HPP_
