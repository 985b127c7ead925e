#pragma once

// Self-check suite behind `dicyclic verify`: group axioms, representation theory,
// Fourier inversion, cross-route convolution agreement, the gcd lemma, the cosine
// certificates and the bound sandwiches.

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dicyclic/bounds.hpp"
#include "dicyclic/cli.hpp"
#include "dicyclic/group.hpp"
#include "dicyclic/representations.hpp"
#include "dicyclic/walks.hpp"

namespace dicyclic::verify {

struct Options {
  std::int64_t grid_points = 100000;
  std::int64_t n_max = 9;
  std::int64_t gcd_limit = 1000000;
  double upper_scale = 1.0;  // < 1 injects a fault into the sandwich checks
};

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

namespace detail {

inline std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

inline CheckResult group_axioms(const Options& o) {
  for (std::int64_t n = 1; n <= o.n_max; ++n) {
    const GroupParams p(n);
    const auto G = enumerate(p);
    const auto e = identity(p);
    for (const auto& g : G) {
      if (multiply(e, g, p) != g || multiply(g, e, p) != g)
        return {"group-axioms", false, "identity fails at n=" + std::to_string(n)};
      const auto gi = inverse(g, p);
      if (multiply(g, gi, p) != e || multiply(gi, g, p) != e || inverse(gi, p) != g)
        return {"group-axioms", false, "inverse fails at n=" + std::to_string(n)};
      for (const auto& h : G) {
        const auto gh = multiply(g, h, p);
        if (!is_valid(gh, p)) return {"group-axioms", false, "closure fails at n=" + std::to_string(n)};
        for (const auto& k : G)
          if (multiply(gh, k, p) != multiply(g, multiply(h, k, p), p))
            return {"group-axioms", false, "associativity fails at n=" + std::to_string(n)};
      }
    }
  }
  for (std::int64_t n = 1; n <= 50; ++n) {
    const GroupParams p(n);
    const auto a = rotation(p, 1), x = reflection(p, 0), e = identity(p);
    const bool ok = power(a, 2 * n, p) == e && multiply(x, x, p) == power(a, n, p) &&
                    multiply(multiply(x, a, p), inverse(x, p), p) == inverse(a, p);
    if (!ok) return {"group-axioms", false, "defining relations fail at n=" + std::to_string(n)};
  }
  return {"group-axioms", true, "n <= " + std::to_string(o.n_max) + " exhaustive, relations n <= 50"};
}

inline CheckResult representations(const Options& o) {
  double worst = 0.0;
  for (std::int64_t n = 1; n <= o.n_max; ++n) {
    const GroupParams p(n);
    const auto G = enumerate(p);
    const auto irreps = list_irreps(p);
    std::int64_t dim_sq = 0;
    for (const auto& rep : irreps) dim_sq += rep.degree() * rep.degree();
    if (dim_sq != p.order()) return {"representations", false, "sum of d^2 != 4n at n=" + std::to_string(n)};

    const auto a = rotation(p, 1), x = reflection(p, 0);
    for (const auto& rep : irreps) {
      const auto I = CMatrix::identity(rep.degree());
      const auto ev = [&](const Element& g) { return evaluate(rep, g, p); };
      worst = std::max(worst, max_abs_diff(ev(multiply(multiply(x, a, p), inverse(x, p), p)), ev(inverse(a, p))));
      worst = std::max(worst, max_abs_diff(ev(multiply(x, x, p)), ev(power(a, n, p))));
      worst = std::max(worst, max_abs_diff(mat_power(ev(a), 2 * n), I));
      for (const auto& g : G) {
        const auto Rg = ev(g);
        worst = std::max(worst, max_abs_diff(Rg * conj_transpose(Rg), I));
        for (const auto& h : G) worst = std::max(worst, max_abs_diff(ev(multiply(g, h, p)), Rg * ev(h)));
      }
    }
    for (const auto& r1 : irreps)
      for (const auto& r2 : irreps) {
        complex inner = 0.0;
        for (const auto& g : G) inner += character(r1, g, p) * std::conj(character(r2, g, p));
        inner /= static_cast<double>(p.order());
        worst = std::max(worst, std::abs(inner - complex(r1 == r2 ? 1.0 : 0.0)));
      }
  }
  return {"representations", worst <= 1e-10, "max error " + sci(worst) + " over n <= " + std::to_string(o.n_max)};
}

inline Measure seeded_measure(const GroupParams& p, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  Measure m(p);
  double total = 0.0;
  for (auto& w : m.dense()) total += (w = dist(rng));
  for (auto& w : m.dense()) w /= total;
  return m;
}

inline CheckResult fourier_roundtrip(const Options& o) {
  double worst = 0.0;
  for (std::int64_t n = 1; n <= o.n_max; ++n) {
    const GroupParams p(n);
    const FourierBasis basis(p);
    const std::vector<Measure> cases{Measure::point_mass(p, identity(p)), Measure::uniform(p),
                                     make_walk(WalkKind::asymmetric, p), make_walk(WalkKind::symmetric, p),
                                     seeded_measure(p, static_cast<unsigned>(n))};
    for (const auto& P : cases)
      worst = std::max(worst, max_abs_diff(fourier_inverse(fourier_transform(P, basis), basis), P));
  }
  return {"fourier-roundtrip", worst < 1e-10, "max error " + sci(worst)};
}

inline CheckResult convolution_agreement(const Options& o) {
  double worst = 0.0;
  for (std::int64_t n = 1; n <= o.n_max; n += 2) {
    const GroupParams p(n);
    const FourierBasis basis(p);
    for (auto kind : {WalkKind::asymmetric, WalkKind::symmetric}) {
      const auto Q = make_walk(kind, p);
      Measure direct = Q;
      for (std::int64_t k = 1; k <= 100; ++k) {
        if (k > 1) direct = convolve(Q, direct);
        worst = std::max(worst, max_abs_diff(direct, convolution_power_fourier(Q, k, basis)));
      }
    }
  }
  return {"convolution-agreement", worst < 1e-10, "max error " + sci(worst) + ", odd n <= " + std::to_string(o.n_max) + ", k <= 100"};
}

inline CheckResult gcd_lemma(const Options& o) {
  for (std::int64_t n = 1; n <= o.gcd_limit; n += 2)
    if (!gcd_check(n).coprime) return {"gcd-lemma", false, "gcd(2n, n+4) != 1 at odd n=" + std::to_string(n)};
  if (gcd_check(4).coprime) return {"gcd-lemma", false, "expected even counterexample n=4"};
  return {"gcd-lemma", true, "odd n <= " + std::to_string(o.gcd_limit) + "; n=4 gives gcd 8"};
}

inline CheckResult aperiodicity(const Options& o) {
  for (std::int64_t n = 1; n <= std::max<std::int64_t>(o.n_max, 15); n += 2) {
    const GroupParams p(n);
    for (auto kind : {WalkKind::asymmetric, WalkKind::symmetric})
      if (aperiodicity_certificate(p, make_walk(kind, p).support()) != 1)
        return {"aperiodicity", false, std::string(walk_name(kind)) + " walk periodic at n=" + std::to_string(n)};
  }
  return {"aperiodicity", true, "both walks, odd n <= " + std::to_string(std::max<std::int64_t>(o.n_max, 15))};
}

inline CheckResult cosine(int prop, const Options& o) {
  const auto c = certify_cosine_inequality(prop, o.grid_points);
  return {"cosine-prop-" + std::to_string(prop), c.passed(),
          "max violation " + sci(c.max_violation) + " on " + std::to_string(o.grid_points) + " points"};
}

inline CheckResult derivative_constants(const Options&) {
  const auto d = certify_derivative_constants();
  std::ostringstream os;
  os << "c3=" << d.c3 << " c4=" << d.c4 << " max f'=" << d.max_d6;
  return {"derivative-constants", d.passed(), os.str()};
}

inline constexpr std::int64_t kSandwichNs[] = {7, 9, 11, 13, 15};

inline CheckResult sandwich(WalkKind kind, const Options& o) {
  std::int64_t checked = 0;
  for (auto n : kSandwichNs) {
    for (const auto& row : cli::sweep_cell(n, kind, 3 * n * n, true, o.upper_scale)) {
      ++checked;
      if (!row.sandwich_holds())
        return {"sandwich-" + std::string(walk_name(kind)), false,
                "violation at n=" + std::to_string(n) + " k=" + std::to_string(row.k)};
    }
  }
  return {"sandwich-" + std::string(walk_name(kind)), true, std::to_string(checked) + " rows, n in {7..15}, k <= 3n^2"};
}

inline CheckResult upper_bound_lemma(const Options& o) {
  std::int64_t checked = 0;
  for (auto n : kSandwichNs) {
    const GroupParams p(n);
    for (auto kind : {WalkKind::asymmetric, WalkKind::symmetric}) {
      const auto Q = make_walk(kind, p);
      const auto spectrum = fourier_transform(Q);
      const auto series = tv_series(Q, 3 * n * n);
      for (const auto& pt : series.points) {
        const double rhs = diaconis_upper_rhs(spectrum, pt.k);
        const auto closed = upper_bound(kind, n, pt.k);
        ++checked;
        if (pt.tv * pt.tv > rhs)
          return {"upper-bound-lemma", false, "tv^2 > rhs at n=" + std::to_string(n) + " k=" + std::to_string(pt.k)};
        if (closed && *closed * o.upper_scale * *closed * o.upper_scale < rhs)
          return {"upper-bound-lemma", false,
                  "closed form below Fourier sum at n=" + std::to_string(n) + " k=" + std::to_string(pt.k)};
      }
    }
  }
  return {"upper-bound-lemma", true, std::to_string(checked) + " (n, walk, k) cells"};
}

inline CheckResult lower_bound_functional_check(const Options&) {
  const GroupParams p(7);
  for (auto kind : {WalkKind::asymmetric, WalkKind::symmetric}) {
    const auto Q = make_walk(kind, p);
    Measure P = Q;
    for (std::int64_t k = 1; k <= 100; ++k) {
      if (k > 1) P = convolve(Q, P);
      const double tv = tv_distance(P);
      for (std::int64_t r = 1; r < p.n; ++r) {
        const double f = lower_bound_functional(P, r);
        if (f > tv || std::abs(f - 0.5 * std::abs(test_function_expectation(P, r))) > 1e-12)
          return {"lower-bound-functional", false, "fails at k=" + std::to_string(k) + " r=" + std::to_string(r)};
      }
    }
  }
  return {"lower-bound-functional", true, "n=7, all r, k <= 100"};
}

}  // namespace detail

inline std::vector<CheckResult> run_all(const Options& o) {
  using detail::cosine;
  const std::vector<std::pair<std::string, std::function<CheckResult()>>> checks{
      {"group-axioms", [&] { return detail::group_axioms(o); }},
      {"representations", [&] { return detail::representations(o); }},
      {"fourier-roundtrip", [&] { return detail::fourier_roundtrip(o); }},
      {"convolution-agreement", [&] { return detail::convolution_agreement(o); }},
      {"gcd-lemma", [&] { return detail::gcd_lemma(o); }},
      {"aperiodicity", [&] { return detail::aperiodicity(o); }},
      {"cosine-prop-1", [&] { return cosine(1, o); }},
      {"cosine-prop-2", [&] { return cosine(2, o); }},
      {"cosine-prop-3", [&] { return cosine(3, o); }},
      {"cosine-prop-4", [&] { return cosine(4, o); }},
      {"derivative-constants", [&] { return detail::derivative_constants(o); }},
      {"sandwich-asym", [&] { return detail::sandwich(WalkKind::asymmetric, o); }},
      {"sandwich-sym", [&] { return detail::sandwich(WalkKind::symmetric, o); }},
      {"upper-bound-lemma", [&] { return detail::upper_bound_lemma(o); }},
      {"lower-bound-functional", [&] { return detail::lower_bound_functional_check(o); }},
  };
  // Checks are independent; run them concurrently and report in declaration order.
  std::vector<std::future<CheckResult>> pending;
  for (const auto& [name, fn] : checks) pending.push_back(std::async(std::launch::async, fn));
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    try {
      out.push_back(pending[i].get());
    } catch (const std::exception& e) {
      out.push_back({checks[i].first, false, std::string("exception: ") + e.what()});
    }
  }
  return out;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.grid_points < 2 || o.n_max < 1 || o.gcd_limit < 1) {
    err << "error: --grid-points must be >= 2, --n-max and --gcd-limit >= 1\n";
    return cli::kExitUsage;
  }
  const auto results = run_all(o);
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(24) << r.name << r.detail << '\n';
    if (!r.passed) {
      err << "failed check: " << r.name << '\n';
      all = false;
    }
  }
  return all ? cli::kExitOk : cli::kExitCheckFailed;
}

}  // namespace dicyclic::verify
