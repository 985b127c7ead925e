#pragma once

// The two random walks on Dic_n, their convolution powers and distance to uniform.
//
// Convolution follows the left-multiplication convention
//   (P1 * P2)(s) = sum_t P1(s t^-1) P2(t),
// so Q^{*k} = Q * Q^{*(k-1)} is the law after k steps from the identity.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dicyclic/group.hpp"
#include "dicyclic/measure.hpp"
#include "dicyclic/representations.hpp"

namespace dicyclic {

enum class WalkKind { asymmetric, symmetric };

inline std::string_view walk_name(WalkKind kind) { return kind == WalkKind::asymmetric ? "asym" : "sym"; }

inline WalkKind parse_walk(std::string_view s) {
  if (s == "asym" || s == "asymmetric") return WalkKind::asymmetric;
  if (s == "sym" || s == "symmetric") return WalkKind::symmetric;
  throw std::invalid_argument("unknown walk '" + std::string(s) + "' (expected asym or sym)");
}

class MixingDivergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// asymmetric: 1/2 on a and x.  symmetric: 1/4 on a, a^{2n-1}, x, a^n x (merging when n = 1).
inline Measure make_walk(WalkKind kind, const GroupParams& p) {
  if (kind == WalkKind::asymmetric) return Measure(p, {{rotation(p, 1), 0.5}, {reflection(p, 0), 0.5}});
  return Measure(p, {{rotation(p, 1), 0.25},
                     {rotation(p, 2 * p.n - 1), 0.25},
                     {reflection(p, 0), 0.25},
                     {reflection(p, p.n), 0.25}});
}

inline Measure convolve(const Measure& P1, const Measure& P2) {
  if (!(P1.params() == P2.params())) throw std::invalid_argument("convolve: measures on different groups");
  const auto& p = P1.params();
  Measure out(p);
  const auto w1 = P1.dense();
  const auto w2 = P2.dense();
  auto dst = out.dense();
  for (std::size_t i = 0; i < w1.size(); ++i) {
    if (w1[i] == 0.0) continue;
    const Element u = element_at(i, p);
    for (std::size_t j = 0; j < w2.size(); ++j) {
      if (w2[j] == 0.0) continue;
      dst[index_of(multiply(u, element_at(j, p), p), p)] += w1[i] * w2[j];
    }
  }
  return out;
}

// k-1 successive convolutions; kept as the reference route.
inline Measure convolution_power_direct(const Measure& Q, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("convolution power requires k >= 1");
  Measure acc = Q;
  for (std::int64_t i = 1; i < k; ++i) acc = convolve(Q, acc);
  return acc;
}

inline Measure convolution_power_fourier(const Measure& Q, std::int64_t k, const FourierBasis& basis) {
  if (k < 1) throw std::invalid_argument("convolution power requires k >= 1");
  return fourier_inverse(spectrum_power(fourier_transform(Q, basis), k), basis);
}

inline Measure convolution_power_fourier(const Measure& Q, std::int64_t k) {
  return convolution_power_fourier(Q, k, FourierBasis(Q.params()));
}

// max_A |P(A) - U(A)|, via the half-L1 identity.
inline double tv_distance(const Measure& P) {
  const double u = 1.0 / static_cast<double>(P.params().order());
  double s = 0.0;
  for (double w : P.dense()) s += std::abs(w - u);
  return 0.5 * s;
}

struct TvPoint {
  std::int64_t k;
  double tv;
};

struct TvSeries {
  std::vector<TvPoint> points;  // k = 1..k_max
  bool monotone = true;         // recorded only
};

inline TvSeries tv_series(const Measure& Q, std::int64_t k_max) {
  if (k_max < 1) throw std::invalid_argument("tv_series requires k_max >= 1");
  const FourierBasis basis(Q.params());
  const Spectrum base = fourier_transform(Q, basis);
  Spectrum current = base;

  TvSeries out;
  out.points.reserve(static_cast<std::size_t>(k_max));
  for (std::int64_t k = 1; k <= k_max; ++k) {
    if (k > 1)
      for (std::size_t r = 0; r < current.transforms.size(); ++r)
        current.transforms[r] = mat_mul(base.transforms[r], current.transforms[r]);
    const double tv = tv_distance(fourier_inverse(current, basis));
    if (!out.points.empty() && tv > out.points.back().tv) out.monotone = false;
    out.points.push_back({k, tv});
  }
  return out;
}

inline TvSeries tv_series(WalkKind kind, const GroupParams& p, std::int64_t k_max) {
  return tv_series(make_walk(kind, p), k_max);
}

inline std::int64_t mixing_time_cap(const GroupParams& p) { return 100 * p.n * p.n; }

// Smallest k with tv(Q^{*k}) <= epsilon, by doubling then bisection.
//
// Throws std::domain_error for a periodic walk, NotIrreducible for a non-generating
// support and MixingDivergence if tv stays above epsilon at the 100 n^2 cap.
inline std::int64_t mixing_time(const Measure& Q, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("mixing_time: epsilon must lie in (0, 1]");
  const auto& p = Q.params();
  const auto period = aperiodicity_certificate(p, Q.support());
  if (period != 1) throw std::domain_error("mixing_time: walk has period " + std::to_string(period));

  const FourierBasis basis(p);
  const Spectrum base = fourier_transform(Q, basis);
  const auto tv_at = [&](std::int64_t k) { return tv_distance(fourier_inverse(spectrum_power(base, k), basis)); };

  const std::int64_t cap = mixing_time_cap(p);
  std::int64_t lo = 0;  // tv(lo) > epsilon, or lo = 0
  std::int64_t hi = 1;
  while (tv_at(hi) > epsilon) {
    if (hi >= cap)
      throw MixingDivergence("tv still above " + std::to_string(epsilon) + " at k = " + std::to_string(cap));
    lo = hi;
    hi = std::min(2 * hi, cap);
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (tv_at(mid) > epsilon)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

inline std::int64_t mixing_time(WalkKind kind, const GroupParams& p, double epsilon) {
  return mixing_time(make_walk(kind, p), epsilon);
}

}  // namespace dicyclic
