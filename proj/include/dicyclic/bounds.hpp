#pragma once

// Closed-form convergence bounds for the two walks and numeric certificates for
// the cosine inequalities they rest on.
//
// For odd n the theorems bound TV^2 from above and TV from below. The *_upper
// functions return the square root of the TV^2 bound so every column of a
// BoundRow is a total-variation distance.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "dicyclic/cmatrix.hpp"
#include "dicyclic/measure.hpp"
#include "dicyclic/representations.hpp"
#include "dicyclic/walks.hpp"

namespace dicyclic {

struct BoundRow {
  std::int64_t n;
  std::int64_t k;
  WalkKind kind;
  double tv_exact;
  std::optional<double> upper;
  std::optional<double> lower;

  bool sandwich_holds() const {
    return (!upper || tv_exact <= *upper) && (!lower || *lower <= tv_exact);
  }
};

// Upper bound lemma: TV(P^{*k}, U)^2 <= 1/4 sum_{rho != 1} d_rho Tr(F^k (F^k)^*),  F = P^(rho).
inline double diaconis_upper_rhs(const Spectrum& spectrum, std::int64_t k) {
  double s = 0.0;
  for (std::size_t i = 0; i < spectrum.irreps.size(); ++i) {
    const Irrep& rep = spectrum.irreps[i];
    if (rep.is_trivial()) continue;
    s += rep.degree() * frobenius_sq(mat_power(spectrum.transforms[i], k));
  }
  return 0.25 * s;
}

inline double diaconis_upper_rhs(const Measure& Q, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("diaconis_upper_rhs requires k >= 1");
  return diaconis_upper_rhs(fourier_transform(Q), k);
}

namespace detail {

inline void require_odd(std::int64_t n, const char* who) {
  if (n < 1 || n % 2 == 0) throw std::domain_error(std::string(who) + ": n must be odd and positive, got " + std::to_string(n));
}

inline void require_lower_n(std::int64_t n, const char* who) {
  require_odd(n, who);
  if (n < 7) throw std::domain_error(std::string(who) + ": requires n >= 7, got " + std::to_string(n));
}

inline void require_k(std::int64_t k, std::int64_t min_k, const char* who) {
  if (k < min_k)
    throw std::domain_error(std::string(who) + ": requires k >= " + std::to_string(min_k) + ", got " + std::to_string(k));
}

constexpr double pi = std::numbers::pi;

}  // namespace detail

// sum_{r >= 1} exp(-r^2 rate) <= exp(-rate) / (1 - exp(-3 rate)), using r^2 - 1 >= 3(r - 1).
inline double geometric_tail_bound(double rate) {
  if (!(rate > 0.0)) throw std::domain_error("geometric_tail_bound: rate must be positive");
  return std::exp(-rate) / -std::expm1(-3.0 * rate);
}

// The series the tail bound majorizes: sum_{r=1}^{(n-1)/2} exp(-r^2 rate).
inline double geometric_tail_sum(std::int64_t n, double rate) {
  double s = 0.0;
  for (std::int64_t r = 1; r <= (n - 1) / 2; ++r) s += std::exp(-static_cast<double>(r * r) * rate);
  return s;
}

inline double asym_upper(std::int64_t n, std::int64_t k) {
  detail::require_odd(n, "asym_upper");
  detail::require_k(k, 2, "asym_upper");
  const double nn = static_cast<double>(n);
  const double rate = detail::pi * detail::pi * static_cast<double>(k - 1) / (nn * nn);
  return std::sqrt(nn * std::exp2(-static_cast<double>(k + 1)) + 0.5 * geometric_tail_bound(rate));
}

inline double asym_lower(std::int64_t n, std::int64_t k) {
  detail::require_lower_n(n, "asym_lower");
  detail::require_k(k, 1, "asym_lower");
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  const double pi = detail::pi;
  return 0.25 * std::exp(-pi * pi * kk / (2.0 * nn * nn) - std::pow(pi, 4) * kk / (12.0 * std::pow(nn, 4)) -
                         17.0 * std::pow(pi, 5) * kk / (120.0 * std::pow(nn, 5)));
}

inline double sym_upper(std::int64_t n, std::int64_t k) {
  detail::require_odd(n, "sym_upper");
  detail::require_k(k, 1, "sym_upper");
  const double nn = static_cast<double>(n);
  const double rate = detail::pi * detail::pi * static_cast<double>(k) / (2.0 * nn * nn);
  const double four_pow = std::exp2(-2.0 * static_cast<double>(k));
  return std::sqrt((3.0 * nn - 1.0) / 4.0 * four_pow + 0.5 * geometric_tail_bound(rate));
}

// May be negative for small k; a negative lower bound is vacuous and returned as is.
inline double sym_lower(std::int64_t n, std::int64_t k) {
  detail::require_lower_n(n, "sym_lower");
  detail::require_k(k, 1, "sym_lower");
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  const double pi = detail::pi;
  return 0.25 * std::exp(-pi * pi * kk / (4.0 * nn * nn) - std::pow(pi, 4) * kk / (96.0 * std::pow(nn, 4)) -
                         std::pow(pi, 5) * kk / (400.0 * std::pow(nn, 5))) -
         std::exp2(-static_cast<double>(k + 2));
}

// Bounds with their hypotheses checked; nullopt where a theorem does not apply.
inline std::optional<double> upper_bound(WalkKind kind, std::int64_t n, std::int64_t k) {
  if (n < 1 || n % 2 == 0) return std::nullopt;
  if (kind == WalkKind::asymmetric) return k >= 2 ? std::optional(asym_upper(n, k)) : std::nullopt;
  return k >= 1 ? std::optional(sym_upper(n, k)) : std::nullopt;
}

inline std::optional<double> lower_bound(WalkKind kind, std::int64_t n, std::int64_t k) {
  if (n < 7 || n % 2 == 0 || k < 1) return std::nullopt;
  return kind == WalkKind::asymmetric ? asym_lower(n, k) : sym_lower(n, k);
}

struct Diagonalization {
  std::array<complex, 2> eigvals;
  double check;  // max-entry reconstruction error against 2 * Q^(rho_r)
};

namespace detail {

inline void require_even_r(const GroupParams& p, std::int64_t r, const char* who) {
  if (r % 2 != 0) throw std::domain_error(std::string(who) + ": r must be even, got " + std::to_string(r));
  if (r < 1 || r > p.n - 1) throw std::domain_error(std::string(who) + ": r out of range [1, n-1]");
}

}  // namespace detail

// 2 Q^(rho_r) = [[w^r, 1], [1, w^-r]] = V diag(0, w^r + w^-r) V^-1 for the asymmetric walk.
inline Diagonalization diag_asym(const GroupParams& p, std::int64_t r) {
  detail::require_even_r(p, r, "diag_asym");
  const complex w = detail::root_of_unity(r, p);
  const complex wi = std::conj(w);
  const complex lambda = w + wi;
  if (std::abs(lambda) < 1e-12) throw std::domain_error("diag_asym: w^r + w^-r vanishes, factorization is singular");

  const CMatrix V = CMatrix::of(wi, w, -1.0, 1.0);
  const CMatrix D = CMatrix::diag(0.0, lambda);
  const CMatrix V_inv = (1.0 / lambda) * CMatrix::of(1.0, -w, 1.0, wi);
  const CMatrix target = 2.0 * fourier_transform(make_walk(WalkKind::asymmetric, p), Irrep::rho(r));
  return {{complex(0.0), lambda}, max_abs_diff(V * D * V_inv, target)};
}

// 2 Q^(rho_r) = H diag(cos(r pi/n) + 1, cos(r pi/n) - 1) H for the symmetric walk, H the 2x2 Hadamard.
inline Diagonalization diag_sym(const GroupParams& p, std::int64_t r) {
  detail::require_even_r(p, r, "diag_sym");
  const double c = std::cos(detail::pi * static_cast<double>(r) / static_cast<double>(p.n));
  const double h = std::numbers::sqrt2 / 2.0;
  const CMatrix H = CMatrix::of(h, h, h, -h);
  const CMatrix D = CMatrix::diag(c + 1.0, c - 1.0);
  const CMatrix target = 2.0 * fourier_transform(make_walk(WalkKind::symmetric, p), Irrep::rho(r));
  return {{complex(c + 1.0), complex(c - 1.0)}, max_abs_diff(H * D * H, target)};
}

// f(s) = Tr(rho_r(s)) / 2, real with |f| <= 1 and U(f) = 0.
inline double test_function(std::int64_t r, const Element& s, const GroupParams& p) {
  return 0.5 * character(Irrep::rho(r), s, p).real();
}

inline double test_function_expectation(const Measure& P, std::int64_t r) {
  const auto& p = P.params();
  double acc = 0.0;
  const auto w = P.dense();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0.0) acc += w[i] * test_function(r, element_at(i, p), p);
  return acc;
}

// TV(P, U) >= |P(f)| / 2 = |Tr P^(rho_r)| / 4.
inline double lower_bound_functional(const Measure& P, std::int64_t r) {
  const Irrep rep = Irrep::rho(r);
  if (!is_valid(rep, P.params())) throw std::domain_error("lower_bound_functional: r out of range [1, n-1]");
  return 0.25 * std::abs(trace(fourier_transform(P, rep)));
}

struct IneqCertificate {
  int proposition;
  std::int64_t grid_points;
  double max_violation;  // max of lhs - rhs over the grid; positive means the inequality fails
  double worst_x;

  bool passed(double tol = 1e-12) const { return max_violation <= tol; }
};

struct CosineInequality {
  double domain_hi;  // domain is [0, domain_hi]
  double (*lhs)(double);
  double (*rhs)(double);
};

// The four inequalities in lhs <= rhs form.
inline CosineInequality cosine_inequality(int proposition) {
  switch (proposition) {
    case 1:
      return {detail::pi / 2, [](double x) { return std::cos(x); }, [](double x) { return std::exp(-x * x / 2); }};
    case 2:
      return {detail::pi, [](double x) { return (1 + std::cos(x)) / 2; }, [](double x) { return std::exp(-x * x / 4); }};
    case 3:
      return {0.5,
              [](double x) { return std::exp(-x * x / 2 - std::pow(x, 4) / 12 - 17 * std::pow(x, 5) / 120); },
              [](double x) { return std::cos(x); }};
    case 4:
      return {0.5,
              [](double x) { return std::exp(-x * x / 4 - std::pow(x, 4) / 96 - std::pow(x, 5) / 400); },
              [](double x) { return (std::cos(x) + 1) / 2; }};
    default:
      throw std::invalid_argument("cosine inequality proposition must be 1..4, got " + std::to_string(proposition));
  }
}

inline IneqCertificate certify_cosine_inequality(int proposition, std::int64_t grid_points) {
  if (grid_points < 2) throw std::invalid_argument("certify_cosine_inequality: grid_points must be >= 2");
  const auto ineq = cosine_inequality(proposition);
  IneqCertificate cert{proposition, grid_points, -INFINITY, 0.0};
  for (std::int64_t i = 0; i < grid_points; ++i) {
    const double x = ineq.domain_hi * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    const double v = ineq.lhs(x) - ineq.rhs(x);
    if (v > cert.max_violation) {
      cert.max_violation = v;
      cert.worst_x = x;
    }
  }
  return cert;
}

// Fifth derivative of log(cos x).
inline double log_cos_d5(double x) {
  const double t = std::tan(x), sec = 1.0 / std::cos(x);
  return -16 * t * std::pow(sec, 4) - 8 * t * t * t * sec * sec;
}

// Fifth derivative of log((1 + cos x) / 2), and its derivative.
inline double log_half_one_plus_cos_d5(double x) {
  return std::pow(1.0 / std::cos(x / 2), 5) * (-11 * std::sin(x / 2) + std::sin(1.5 * x)) / 8;
}

inline double log_half_one_plus_cos_d6(double z) {
  return -(33 - 26 * std::cos(z) + std::cos(2 * z)) * std::pow(1.0 / std::cos(z / 2), 6) / 16;
}

struct DerivativeConstants {
  double c3;           // log_cos_d5(1/2), needs |c3| <= 17
  double c4;           // log_half_one_plus_cos_d5(1/2), needs |c4| <= 0.3
  double max_d6;       // max of log_half_one_plus_cos_d6 on a 1001-point grid over [0, 1/2], needs < 0

  bool passed() const { return std::abs(c3) <= 17.0 && std::abs(c4) <= 0.3 && max_d6 < 0.0; }
};

inline DerivativeConstants certify_derivative_constants() {
  DerivativeConstants out{log_cos_d5(0.5), log_half_one_plus_cos_d5(0.5), -INFINITY};
  for (int i = 0; i <= 1000; ++i) out.max_d6 = std::max(out.max_d6, log_half_one_plus_cos_d6(0.5 * i / 1000.0));
  return out;
}

}  // namespace dicyclic
