#pragma once

// Numerical evaluation of
//   R_{n,m} = int_C z^{alpha'} zbar^{alpha} (1 - lambda z)^{beta'} (1 - lambda zbar)^{beta} dz dzbar
// with dz dzbar = -2i dA, for real lambda > 0, by tanh-sinh quadrature in
// polar coordinates around 0 and around 1/lambda.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <future>
#include <numbers>
#include <vector>

#include "planebranch/arith.hpp"
#include "planebranch/errors.hpp"
#include "planebranch/residue.hpp"

namespace planebranch {

struct QuadConfig {
  double rel_tol = 1e-5;
  double r_max = 1e3;          // truncation radius in z; the tail beyond is integrated after inversion
  int max_subdivisions = 10;   // tanh-sinh halvings (outer) and trapezoid doublings (inner)
  double split_radius = 0.5;   // radius, in w = lambda z, of the disks around 0 and 1
  bool parallel = true;
};

struct QuadResult {
  Complex value;
  double error_estimate = 0.0;
  Complex tail;             // contribution of |z| > r_max
  double tail_bound = 0.0;  // analytic bound on |tail|
  long evaluations = 0;
};

namespace detail {

/// Neumaier-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(Complex x) {
    add_part(sum_re_, comp_re_, x.real());
    add_part(sum_im_, comp_im_, x.imag());
  }
  Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double sum_re_ = 0, comp_re_ = 0, sum_im_ = 0, comp_im_ = 0;
};

struct Estimate {
  Complex value;
  double l1 = 0.0;     // integral of |f|, the scale for tolerances
  double error = 0.0;
  long evaluations = 0;
};

/// Tanh-sinh rule on [lo, hi]. f receives (x, x - lo); the second argument
/// keeps full precision near a singular left endpoint.
template <class F>
Estimate tanh_sinh(F&& f, double lo, double hi, double tol, int max_levels) {
  constexpr double t_max = 6.0;
  constexpr double half_pi = std::numbers::pi / 2;
  const double L = hi - lo;
  Estimate est;
  CompensatedSum sum;
  double l1 = 0.0;
  auto node = [&](double t) {
    const double y = half_pi * std::sinh(t);
    const double from_lo = L / (1.0 + std::exp(-2.0 * y));
    const double cy = std::cosh(y);
    const double w = L * half_pi * std::cosh(t) / (2.0 * cy * cy);
    if (!(from_lo > 0.0) || !(w > 0.0) || from_lo >= L) return;
    const Complex v = f(lo + from_lo, from_lo);
    ++est.evaluations;
    sum.add(w * v);
    l1 += w * std::abs(v);
  };

  double h = 1.0;
  for (double t = -t_max; t <= t_max + 1e-12; t += h) node(t);
  Complex prev = h * sum.value();
  for (int level = 1; level <= max_levels; ++level) {
    h /= 2;
    for (double t = -t_max + h; t < t_max; t += 2 * h) node(t);
    const Complex cur = h * sum.value();
    est.value = cur;
    est.l1 = h * l1;
    est.error = std::abs(cur - prev);
    if (level >= 3 && est.error <= tol * est.l1) return est;
    prev = cur;
  }
  throw Error(ErrorKind::ConvergenceFailure, "tanh-sinh budget exhausted");
}

/// Periodic trapezoid rule for f on [0, 2 pi), doubling the node count.
template <class F>
Estimate periodic_trapezoid(F&& f, double tol, int max_levels) {
  constexpr double two_pi = 2 * std::numbers::pi;
  Estimate est;
  int N = 32;
  CompensatedSum sum;
  double l1 = 0.0;
  for (int k = 0; k < N; ++k) {
    const Complex v = f(two_pi * k / N);
    sum.add(v);
    l1 += std::abs(v);
  }
  est.evaluations = N;
  Complex prev = two_pi / N * sum.value();
  for (int level = 1; level <= max_levels; ++level) {
    for (int k = 1; k < 2 * N; k += 2) {
      const Complex v = f(two_pi * k / (2 * N));
      sum.add(v);
      l1 += std::abs(v);
    }
    est.evaluations += N;
    N *= 2;
    const Complex cur = two_pi / N * sum.value();
    est.value = cur;
    est.l1 = two_pi / N * l1;
    est.error = std::abs(cur - prev);
    if (est.error <= tol * est.l1) return est;
    prev = cur;
  }
  throw Error(ErrorKind::ConvergenceFailure, "trapezoid budget exhausted");
}

struct Exponents {
  double two_alpha;  // 2 alpha
  double two_beta;   // 2 beta
  int n, m;
};

/// |w|^{2 alpha} w^n |1 - w|^{2 beta} (1 - w)^m
inline Complex kernel(const Exponents& ex, Complex w) {
  const Complex one_minus = 1.0 - w;
  return std::pow(std::abs(w), ex.two_alpha) * std::pow(w, ex.n) * std::pow(std::abs(one_minus), ex.two_beta) *
         std::pow(one_minus, ex.m);
}

}  // namespace detail

inline void check_convergence_region(const RnmParams& p) {
  const Rational a = 2 * p.alpha + p.n, b = 2 * p.beta + p.m;
  if (!(a > -2 && b > -2 && a + b < -2))
    throw Error(ErrorKind::DomainError, "outside the absolute-convergence region (need 2a+n > -2, 2b+m > -2, sum < -2)");
}

/// Quadrature value of R_{n,m}(alpha, beta; lambda) for real lambda > 0.
inline QuadResult rnm_quadrature(const RnmParams& p, const QuadConfig& cfg = {}) {
  check_convergence_region(p);
  if (p.lambda.imag() != 0.0 || !(p.lambda.real() > 0.0))
    throw Error(ErrorKind::DomainError, "quadrature needs real lambda > 0");
  if (!(cfg.rel_tol > 0.0)) throw Error(ErrorKind::PreconditionViolated, "rel_tol must be positive");
  const double lambda = p.lambda.real();
  if (!(cfg.r_max > 2.0 / lambda)) throw Error(ErrorKind::PreconditionViolated, "r_max must exceed 2/lambda");
  const double rho = cfg.split_radius;
  if (!(rho > 0.0 && rho < 0.5 + 1e-15)) throw Error(ErrorKind::PreconditionViolated, "split_radius must lie in (0, 1/2]");

  using namespace detail;
  const Exponents ex{2 * to_double(p.alpha), 2 * to_double(p.beta), static_cast<int>(p.n), static_cast<int>(p.m)};
  const double s0 = ex.two_alpha + ex.n;  // |w|^{s0} near 0
  const double s1 = ex.two_beta + ex.m;   // |1 - w|^{s1} near 1
  const double total = s0 + s1;           // decay r^{total} at infinity
  const double R_out = 1.0 + rho;         // inner edge of the outer region
  const double R_max = cfg.r_max * lambda;
  const double inner_tol = cfg.rel_tol * 1e-2;
  const int levels = cfg.max_subdivisions;

  // Disk |w| < rho: r^{s0 + 1} times the angular integral of the regular part.
  auto disk0 = [&] {
    return tanh_sinh(
        [&](double, double r) {
          auto inner = periodic_trapezoid(
              [&](double th) {
                const Complex w = std::polar(r, th);
                const Complex om = 1.0 - w;
                return std::polar(1.0, ex.n * th) * std::pow(std::abs(om), ex.two_beta) * std::pow(om, ex.m);
              },
              inner_tol, levels);
          return std::pow(r, s0 + 1) * inner.value;
        },
        0.0, rho, cfg.rel_tol, levels);
  };
  // Disk |w - 1| < rho, w = 1 + t e^{i phi}.
  auto disk1 = [&] {
    return tanh_sinh(
        [&](double, double t) {
          auto inner = periodic_trapezoid(
              [&](double ph) {
                const Complex w = 1.0 + std::polar(t, ph);
                return std::pow(std::abs(w), ex.two_alpha) * std::pow(w, ex.n) * std::polar(1.0, ex.m * ph);
              },
              inner_tol, levels);
          return (ex.m % 2 == 0 ? 1.0 : -1.0) * std::pow(t, s1 + 1) * inner.value;
        },
        0.0, rho, cfg.rel_tol, levels);
  };
  // Annulus 1 - rho < |w| < 1 + rho minus the disk around 1. For r < 1 - rho
  // the circle misses that disk, so [rho, 1 - rho] is a full annulus.
  auto near_annulus = [&] {
    auto full = tanh_sinh(
        [&](double r, double) {
          auto inner = periodic_trapezoid([&](double th) { return kernel(ex, std::polar(r, th)); }, inner_tol, levels);
          return r * inner.value;
        },
        rho, 1.0 - rho, cfg.rel_tol, levels);
    auto cut = tanh_sinh(
        [&](double r, double) {
          const double c = std::clamp((r * r + 1.0 - rho * rho) / (2.0 * r), -1.0, 1.0);
          const double th0 = std::acos(c);
          auto inner = tanh_sinh([&](double th, double) { return kernel(ex, std::polar(r, th)); }, th0,
                                 2 * std::numbers::pi - th0, inner_tol, levels);
          return r * inner.value;
        },
        1.0 - rho, R_out, cfg.rel_tol, levels);
    Estimate e;
    e.value = full.value + cut.value;
    e.l1 = full.l1 + cut.l1;
    e.error = full.error + cut.error;
    e.evaluations = full.evaluations + cut.evaluations;
    return e;
  };
  // R_out < |w| < R_max in the variable v = log r.
  auto far_annulus = [&] {
    return tanh_sinh(
        [&](double v, double) {
          const double r = std::exp(v);
          auto inner = periodic_trapezoid([&](double th) { return kernel(ex, std::polar(r, th)); }, inner_tol, levels);
          return r * r * inner.value;
        },
        std::log(R_out), std::log(R_max), cfg.rel_tol, levels);
  };
  // |w| > R_max with u = R_max / r: r^{total + 1} dr = R_max^{total + 2} u^{-total - 3} du,
  // and the kernel is r^{total} times a bounded factor.
  auto tail = [&] {
    return tanh_sinh(
        [&](double, double u) {
          const double r = R_max / u;
          auto inner = periodic_trapezoid(
              [&](double th) {
                const Complex inv = std::polar(1.0 / r, -th);  // 1/w
                const Complex om = 1.0 - inv;
                // (1 - w) = -w (1 - 1/w)
                return std::polar(1.0, (ex.n + ex.m) * th) * (ex.m % 2 == 0 ? 1.0 : -1.0) *
                       std::pow(std::abs(om), ex.two_beta) * std::pow(om, ex.m);
              },
              inner_tol, levels);
          return std::pow(R_max, total + 2) * std::pow(u, -total - 3) * inner.value;
        },
        0.0, 1.0, cfg.rel_tol, levels);
  };

  std::vector<std::function<Estimate()>> parts = {disk0, disk1, near_annulus, far_annulus, tail};
  std::vector<Estimate> results(parts.size());
  if (cfg.parallel) {
    std::vector<std::future<Estimate>> futures;
    for (auto& part : parts) futures.push_back(std::async(std::launch::async, part));
    for (std::size_t k = 0; k < parts.size(); ++k) results[k] = futures[k].get();
  } else {
    for (std::size_t k = 0; k < parts.size(); ++k) results[k] = parts[k]();
  }

  CompensatedSum sum;
  QuadResult out;
  for (const auto& r : results) {
    sum.add(r.value);
    out.error_estimate += r.error;
    out.evaluations += r.evaluations;
  }
  // dz dzbar = -2i dA_z and dA_z = dA_w / lambda^2; |z|^{2 alpha + n} = |w|^{2 alpha + n} / lambda^{2 alpha + n}
  const Complex factor = Complex(0.0, -2.0) * std::pow(lambda, -(s0 + 2.0));
  out.value = factor * sum.value();
  out.tail = factor * results.back().value;
  out.error_estimate *= std::abs(factor);
  // |1 - w| <= r (1 + 1/R_max) and >= r (1 - 1/R_max) on the tail
  const double kappa = std::max(std::pow(1.0 - 1.0 / R_max, s1), std::pow(1.0 + 1.0 / R_max, s1));
  out.tail_bound = std::abs(factor) * 2 * std::numbers::pi * kappa * std::pow(R_max, total + 2) / -(total + 2);
  return out;
}

struct VanishingResult {
  Complex value;
  double radial_mass = 0.0;  // integral of |z^{alpha'} zbar^{alpha}| |dz dzbar| over |z| <= R
  double ratio = 0.0;        // |value| / radial_mass
};

/// int_{|z| <= R} z^{alpha + n} zbar^{alpha} dz dzbar for n != 0, evaluated
/// with a non-periodic rule for the angular factor.
inline VanishingResult vanishing_integral_check(long long n, const Rational& alpha, double R, const QuadConfig& cfg = {}) {
  if (n == 0) throw Error(ErrorKind::PreconditionViolated, "n = 0 is handled symbolically");
  if (!(R > 0.0)) throw Error(ErrorKind::PreconditionViolated, "R must be positive");
  const double s = to_double(2 * alpha + n) + 1.0;
  if (!(s > -1.0)) throw Error(ErrorKind::DomainError, "radial integral diverges at 0 (need 2 alpha + n > -2)");
  auto radial = detail::tanh_sinh([&](double, double r) { return Complex(std::pow(r, s), 0.0); }, 0.0, R, cfg.rel_tol * 1e-3,
                                  cfg.max_subdivisions);
  auto angular = detail::tanh_sinh([&](double th, double) { return std::polar(1.0, double(n) * th); }, 0.0,
                                   2 * std::numbers::pi, cfg.rel_tol * 1e-3, cfg.max_subdivisions);
  VanishingResult out;
  out.value = Complex(0.0, -2.0) * radial.value * angular.value;
  out.radial_mass = 2.0 * 2 * std::numbers::pi * radial.value.real();
  out.ratio = std::abs(out.value) / out.radial_mass;
  return out;
}

/// The n = 0 case: inner part -2 pi i R^{2(a+1)}/(a+1) and the continued outer
/// part +2 pi i R^{2(a+1)}/(a+1), as exact coefficients of 2 pi i R^{2(a+1)}.
struct SymbolicCancellation {
  Rational inner, outer, sum;
};

inline SymbolicCancellation vanishing_integral_symbolic(const Rational& alpha) {
  if (alpha == -1) throw Error(ErrorKind::DomainError, "alpha = -1");
  // -2i * 2 pi * int_0^R r^{2a+1} dr = -2 pi i R^{2a+2} / (a + 1); the outer
  // integral continues to -R^{2a+2} / (2a + 2).
  const Rational radial_inner = Rational(1) / (2 * (alpha + 1));
  const Rational radial_outer = -radial_inner;
  SymbolicCancellation c;
  c.inner = -2 * radial_inner;
  c.outer = -2 * radial_outer;
  c.sum = c.inner + c.outer;
  return c;
}

}  // namespace planebranch
