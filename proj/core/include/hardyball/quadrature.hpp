#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "hardyball/geometry.hpp"

namespace hardyball::quadrature {

/// Shared configuration for the adaptive 1D rule and the Monte Carlo
/// estimators. Identical configs (seed included) give bit-identical
/// Monte Carlo output.
struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 60;
  std::int64_t mc_samples = 100000;
  std::uint64_t seed = 0;
};

enum class EstimateMethod { adaptive_1d, monte_carlo };

std::string to_string(EstimateMethod m);

struct IntegralEstimate {
  double value = 0.0;
  /// For monte_carlo this is the standard error of the mean.
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
  EstimateMethod method = EstimateMethod::adaptive_1d;
};

/// Adaptive Gauss-Kronrod 7/15 integration of f over [a, b]. Splits the
/// interval with the largest embedded error estimate until the total
/// satisfies max(abs_tol, rel_tol * |value|), or throws when an interval
/// would have to be bisected beyond max_depth.
IntegralEstimate integrate_1d(const std::function<double(double)>& f,
                              double a, double b,
                              const QuadratureConfig& cfg);

/// Uniform point on S^{dim-1}, deterministic per (seed, index): samples
/// are independent standard normal vectors (counter-based generator),
/// normalized. Parallel or out-of-order evaluation cannot change them.
geometry::SpherePoint uniform_sphere_sample(int dim, std::uint64_t seed,
                                            std::uint64_t index);

/// Boundary data on S^{n-1}. A function constructed with a zonal profile
/// g (value depends only on the polar angle theta from e1) additionally
/// unlocks the reduced 1D integration paths.
class BoundaryFunction {
 public:
  static BoundaryFunction general(
      int dim, std::function<double(const geometry::SpherePoint&)> f);
  static BoundaryFunction zonal(int dim, std::function<double(double)> profile);

  int dim() const { return dim_; }
  double operator()(const geometry::SpherePoint& zeta) const;
  bool has_zonal_profile() const { return static_cast<bool>(profile_); }
  double zonal_profile(double theta) const;

 private:
  BoundaryFunction() = default;
  int dim_ = 0;
  std::function<double(const geometry::SpherePoint&)> general_;
  std::function<double(double)> profile_;
};

/// Normalizing constant of the zonal reduction,
/// Gamma(n/2) / (sqrt(pi) Gamma((n-1)/2)), so that
/// integral_S g(angle(zeta,e1)) dsigma = zonal_weight(n) *
/// integral_0^pi g(theta) sin^{n-2}(theta) dtheta.
double zonal_weight(int dim);

/// Quadrature of the defining integral
///   integral_0^pi sin^{n-2}(t) (1 + r^2 - 2 r cos t)^{nq/2 - n + 1} dt,
/// the independent oracle for sharp::zonal_integral. Valid on the full
/// range 0 <= r <= 1; at r = 1 the substitution t = 2u exposes the
/// integrable endpoint.
IntegralEstimate zonal_integral_quad(int dim, double q, double r,
                                     const QuadratureConfig& cfg);

/// Monte Carlo estimate of I_q = integral_S P(x, zeta)^q dsigma(zeta).
IntegralEstimate kernel_power_mc(int dim, double q,
                                 const geometry::BallPoint& x,
                                 const QuadratureConfig& cfg);

/// Poisson extension u(x) = integral_S P(x, zeta) f(zeta) dsigma(zeta).
/// Uses the reduced 1D quadrature when f is zonal and x is on the e1
/// axis, Monte Carlo otherwise.
IntegralEstimate poisson_integral(const BoundaryFunction& f,
                                  const geometry::BallPoint& x,
                                  const QuadratureConfig& cfg);

/// Boundary L^p(sigma) norm (integral_S |f|^p dsigma)^{1/p}, which for
/// continuous data equals the harmonic Hardy space norm of the Poisson
/// extension. Requires 1 < p < infinity.
IntegralEstimate hp_norm(const BoundaryFunction& f, double p,
                         const QuadratureConfig& cfg);

}  // namespace hardyball::quadrature
