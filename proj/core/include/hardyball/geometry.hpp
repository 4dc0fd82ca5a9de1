#pragma once

#include <span>
#include <utility>
#include <vector>

namespace hardyball::geometry {

/// A point strictly inside the unit ball B^n, n >= 2.
class BallPoint {
 public:
  explicit BallPoint(std::vector<double> coords);

  /// The on-axis representative r*e1 of every point with |x| = r.
  static BallPoint axis(double radius, int dim);

  int dim() const { return static_cast<int>(coords_.size()); }
  double radius() const { return radius_; }
  std::span<const double> coords() const { return coords_; }

  /// True when the point lies on the nonnegative e1 axis (all other
  /// coordinates exactly zero), which unlocks the zonal 1D reductions.
  bool on_axis() const;

 private:
  std::vector<double> coords_;
  double radius_ = 0.0;
};

/// A unit vector on the sphere S^{n-1}. Constructors renormalize inputs
/// whose Euclidean norm is within 1e-9 of 1 and reject anything farther
/// out, so after construction | |coords| - 1 | <= 1e-12 always holds.
class SpherePoint {
 public:
  explicit SpherePoint(std::vector<double> coords);

  static SpherePoint pole(int dim);  // e1

  int dim() const { return static_cast<int>(coords_.size()); }
  std::span<const double> coords() const { return coords_; }

 private:
  std::vector<double> coords_;
};

/// Poisson kernel P(x, zeta) = (1 - |x|^2) / |x - zeta|^n.
double poisson_kernel(const BallPoint& x, const SpherePoint& zeta);

/// sup over zeta of P(x, zeta) = (1 + |x|)^n / (1 - |x|^2)^{n-1}.
/// This equals the sharp p = 1 prefactor, with C_1(x) = (1 + |x|)^n.
double poisson_kernel_sup(const BallPoint& x);

/// The axis Mobius transform of the ball restricted to the sphere,
///   T_r(y) = (1 - r^2) (y - r e1) / |y - r e1|^2 - r e1,
/// an involution of S^{n-1}. General base points reduce to this by a
/// rotation taking x to |x| e1.
SpherePoint mobius_axis(double x_radius, int dim, const SpherePoint& y);

/// Jacobian of T_r : S -> S at eta, ((1 - r^2) / |eta - r e1|^2)^{n-1}.
double mobius_sphere_jacobian(double x_radius, int dim,
                              const SpherePoint& eta);

/// Both sides of the change-of-variables distance identity
/// |r e1 - zeta| = (1 - r^2) / |eta - r e1| with zeta = -T_r(eta),
/// returned as (direct distance, closed form). Test-support only.
std::pair<double, double> mobius_distance_identity(double x_radius, int dim,
                                                   const SpherePoint& eta);

}  // namespace hardyball::geometry
