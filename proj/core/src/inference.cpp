#include "fuzzynav/inference.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

namespace fuzzynav {

FiredRules fire_rules(const RuleBase& rb, double angle_error,
                      double distance_error) {
  const std::vector<double> angle_deg = fuzzify(rb.angle, angle_error);
  const std::vector<double> dist_deg = fuzzify(rb.distance, distance_error);

  FiredRules fired;
  for (const Rule& rule : rb.rules) {
    const int ia = rb.angle.find(rule.angle_term);
    const int id = rb.distance.find(rule.distance_term);
    if (ia < 0 || id < 0) {
      throw ValidationError("rule references unknown antecedent (" +
                            rule.angle_term + ", " + rule.distance_term + ")");
    }
    const double strength = std::min(angle_deg[static_cast<std::size_t>(ia)],
                                     dist_deg[static_cast<std::size_t>(id)]);
    if (strength <= 0.0) continue;
    fired.right.push_back({rule.right_term, strength});
    fired.left.push_back({rule.left_term, strength});
  }
  return fired;
}

AggregatedOutput::AggregatedOutput(Universe universe)
    : universe_(universe),
      vertices_{{universe.lo, 0.0}, {universe.hi, 0.0}} {}

double AggregatedOutput::operator()(double x) const {
  if (x < universe_.lo || x > universe_.hi) return 0.0;
  const auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), x,
      [](const Vertex& v, double value) { return v.x < value; });
  if (it == vertices_.end()) return vertices_.back().mu;
  if (it->x == x || it == vertices_.begin()) return it->mu;
  const Vertex& a = *(it - 1);
  const Vertex& b = *it;
  const double t = (x - a.x) / (b.x - a.x);
  return a.mu + t * (b.mu - a.mu);
}

namespace {

struct ClippedSet {
  const TriangularMf* mf;
  double height;

  double operator()(double x) const { return std::min(height, (*mf)(x)); }
};

void sort_unique(std::vector<double>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

AggregatedOutput aggregate(const LinguisticVariable& var,
                           std::span<const FiredConsequent> fired) {
  // One clip height per term; duplicate labels combine by max.
  std::vector<double> heights(var.terms.size(), 0.0);
  for (const FiredConsequent& f : fired) {
    const int i = var.find(f.label);
    if (i < 0) {
      throw ValidationError("unknown term '" + f.label + "' for variable '" +
                            var.name + "'");
    }
    auto& h = heights[static_cast<std::size_t>(i)];
    h = std::max(h, std::clamp(f.strength, 0.0, 1.0));
  }

  std::vector<ClippedSet> sets;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (heights[i] > 0.0) sets.push_back({&var.terms[i].mf, heights[i]});
  }

  const Universe& u = var.universe;
  AggregatedOutput out(u);
  if (sets.empty()) return out;

  std::vector<double> xs{u.lo, u.hi};
  auto add = [&](double x) {
    if (x > u.lo && x < u.hi) xs.push_back(x);
  };
  for (const ClippedSet& s : sets) {
    const TriangularMf& mf = *s.mf;
    add(mf.left());
    add(mf.peak());
    add(mf.right());
    if (s.height < 1.0) {
      if (!mf.is_left_shoulder()) {
        add(mf.left() + s.height * (mf.peak() - mf.left()));
      }
      if (!mf.is_right_shoulder()) {
        add(mf.right() - s.height * (mf.right() - mf.peak()));
      }
    }
  }
  sort_unique(xs);

  // Each clipped set is linear between consecutive candidates, so the max
  // envelope can only bend where two of them cross.
  const std::size_t base = xs.size();
  for (std::size_t k = 0; k + 1 < base; ++k) {
    const double a = xs[k];
    const double b = xs[k + 1];
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        const double da = sets[i](a) - sets[j](a);
        const double db = sets[i](b) - sets[j](b);
        if ((da > 0.0 && db < 0.0) || (da < 0.0 && db > 0.0)) {
          add(a + (b - a) * da / (da - db));
        }
      }
    }
  }
  sort_unique(xs);

  out.vertices_.clear();
  out.vertices_.reserve(xs.size());
  for (double x : xs) {
    double mu = 0.0;
    for (const ClippedSet& s : sets) mu = std::max(mu, s(x));
    out.vertices_.push_back({x, mu});
  }
  for (const ClippedSet& s : sets) {
    out.max_strength_ = std::max(out.max_strength_, s.height);
  }
  return out;
}

CentroidResult defuzz_centroid(const AggregatedOutput& agg,
                               const CentroidOptions& options) {
  const Universe& u = agg.universe();
  const int n = std::max(options.samples, 2);

  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(n) + agg.vertices().size());
  for (int i = 0; i < n; ++i) {
    xs.push_back(u.lo + u.width() * static_cast<double>(i) /
                            static_cast<double>(n - 1));
  }
  xs.back() = u.hi;
  if (options.include_vertices) {
    for (const auto& v : agg.vertices()) xs.push_back(v.x);
  }
  sort_unique(xs);

  // Exact moments of the piecewise-linear interpolant through the samples.
  double area = 0.0;
  double moment = 0.0;
  double x0 = xs.front();
  double mu0 = agg(x0);
  for (std::size_t k = 1; k < xs.size(); ++k) {
    const double x1 = xs[k];
    const double mu1 = agg(x1);
    const double h = x1 - x0;
    area += 0.5 * h * (mu0 + mu1);
    moment += h / 6.0 * (x0 * (2.0 * mu0 + mu1) + x1 * (mu0 + 2.0 * mu1));
    x0 = x1;
    mu0 = mu1;
  }

  if (area < options.zero_area_tol) return {u.midpoint(), true};
  return {u.clamp(moment / area), false};
}

InferenceResult infer(const RuleBase& rb, double angle_error,
                      double distance_error, const CentroidOptions& options) {
  const FiredRules fired = fire_rules(rb, angle_error, distance_error);
  const CentroidResult right =
      defuzz_centroid(aggregate(rb.right, fired.right), options);
  const CentroidResult left =
      defuzz_centroid(aggregate(rb.left, fired.left), options);
  return {right.value, left.value, right.zero_area, left.zero_area};
}

}  // namespace fuzzynav
