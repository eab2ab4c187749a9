#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cayley/ball.hpp"

namespace cayley {

// Word metric queries backed by a ball of radius R: exact lengths up to R,
// and distances up to 2R through a midpoint on Sph(R).
class Metric {
 public:
  Metric(const GenSet& gs, int radius, const ResourceLimits& limits = {});
  explicit Metric(BallIndex ball);
  explicit Metric(std::shared_ptr<const BallIndex> ball);

  const BallIndex& ball() const { return *ball_; }
  const GenSet& genset() const { return ball_->genset(); }
  int radius() const { return ball_->radius(); }

  // |g| when |g| <= 2R, else nullopt.
  std::optional<int> length(const GroupElement& g) const;
  // d(x, y) = |x^{-1} y| when at most 2R, else nullopt.
  std::optional<int> distance(const GroupElement& x, const GroupElement& y) const {
    return length(x.inverse() * y);
  }
  // d(x, y) <= bound. Requires bound <= R.
  bool within(const GroupElement& x, const GroupElement& y, int bound) const;

  // Elements g with |g| <= rho (rho <= R) in (distance, key) order.
  std::vector<GroupElement> offsets(int rho) const;

 private:
  std::shared_ptr<const BallIndex> ball_;
};

}  // namespace cayley
