#include "cayley/metric.hpp"

#include <algorithm>

#include "cayley/error.hpp"

namespace cayley {

Metric::Metric(const GenSet& gs, int radius, const ResourceLimits& limits)
    : ball_(std::make_shared<const BallIndex>(build_ball(gs, radius, limits))) {}

Metric::Metric(BallIndex ball) : ball_(std::make_shared<const BallIndex>(std::move(ball))) {}

Metric::Metric(std::shared_ptr<const BallIndex> ball) : ball_(std::move(ball)) {
  if (!ball_) throw InputError("metric needs a ball");
}

std::optional<int> Metric::length(const GroupElement& g) const {
  if (auto d = ball_->distance_of(g)) return d;
  // Outside the ball: any geodesic of length <= 2R crosses Sph(R).
  const int r = ball_->radius();
  auto [first, last] = ball_->sphere_range(r);
  std::optional<int> best;
  for (auto i = first; i < last; ++i) {
    if (auto rest = ball_->distance_of(ball_->element(i).inverse() * g)) {
      if (!best || *rest < *best) best = *rest;
    }
  }
  if (!best) return std::nullopt;
  return r + *best;
}

bool Metric::within(const GroupElement& x, const GroupElement& y, int bound) const {
  if (bound < 0) return false;
  if (bound > ball_->radius()) throw InputError("distance bound exceeds the metric radius");
  auto d = ball_->distance_of(x.inverse() * y);
  return d && *d <= bound;
}

std::vector<GroupElement> Metric::offsets(int rho) const {
  if (rho > ball_->radius()) throw InputError("offset radius exceeds the metric radius");
  std::vector<GroupElement> out;
  if (rho < 0) return out;
  auto [first, last] = ball_->sphere_range(rho);
  (void)first;
  out.assign(ball_->elements().begin(), ball_->elements().begin() + last);
  return out;
}

}  // namespace cayley
