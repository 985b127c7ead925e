// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "dicyclic/bounds.hpp"
#include "dicyclic/group.hpp"
#include "dicyclic/representations.hpp"
#include "dicyclic/walks.hpp"

using namespace dicyclic;

namespace {

constexpr WalkKind kWalks[] = {WalkKind::asymmetric, WalkKind::symmetric};
constexpr std::int64_t kSandwichNs[] = {7, 9, 11, 13, 15};
constexpr std::int64_t kHeadlineNs[] = {9, 11, 13, 15};

// Mixing times at epsilon = 0.25, recorded from the first verified run.
struct MixingFixture {
  std::int64_t n, asym, sym;
};
constexpr MixingFixture kMixingFixtures[] = {{9, 17, 31}, {11, 24, 46}, {13, 33, 65}, {15, 44, 86}};

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

// Direct powers Q^{*1..k_max}, the exact oracle for every TV value below.
std::vector<double> direct_tv(const Measure& Q, std::int64_t k_max) {
  std::vector<double> tv{0.0};
  Measure P = Q;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    if (k > 1) P = convolve(Q, P);
    tv.push_back(tv_distance(P));
  }
  return tv;
}

Outcome ac1_oracle_equivalence() {
  double worst = 0.0;
  for (std::int64_t n : {1, 3, 5, 7, 9}) {
    const GroupParams p(n);
    const FourierBasis basis(p);
    for (auto kind : kWalks) {
      const auto Q = make_walk(kind, p);
      Measure direct = Q;
      for (std::int64_t k = 1; k <= 100; ++k) {
        if (k > 1) direct = convolve(Q, direct);
        worst = std::max(worst, max_abs_diff(direct, convolution_power_fourier(Q, k, basis)));
      }
    }
  }
  return {worst <= 1e-10, "max |direct - fourier| = " + fmt(worst) + " (tol 1e-10)"};
}

Outcome sandwich(WalkKind kind) {
  const std::int64_t k_min = kind == WalkKind::asymmetric ? 2 : 1;
  std::int64_t violations = 0, checked = 0;
  for (auto n : kSandwichNs) {
    const auto tv = direct_tv(make_walk(kind, GroupParams(n)), 3 * n * n);
    for (std::int64_t k = k_min; k <= 3 * n * n; ++k) {
      const double lo = *lower_bound(kind, n, k);
      const double hi = *upper_bound(kind, n, k);
      ++checked;
      if (!(lo <= tv[k] && tv[k] <= hi)) ++violations;
    }
  }
  return {violations == 0, std::to_string(checked) + " (n,k) pairs, " + std::to_string(violations) + " violations"};
}

Outcome ac4_genericity() {
  std::int64_t upper_fail = 0, lower_fail = 0, pairs = 0;
  for (auto n : kSandwichNs)
    for (auto kind : kWalks) {
      const auto Q = make_walk(kind, GroupParams(n));
      const auto spectrum = fourier_transform(Q);
      const auto tv = direct_tv(Q, 3 * n * n);
      for (std::int64_t k = 1; k <= 3 * n * n; ++k, ++pairs)
        if (diaconis_upper_rhs(spectrum, k) < tv[k] * tv[k]) ++upper_fail;
    }
  const std::int64_t n = 7;
  for (auto kind : kWalks) {
    const auto Q = make_walk(kind, GroupParams(n));
    Measure P = Q;
    for (std::int64_t k = 1; k <= 100; ++k) {
      if (k > 1) P = convolve(Q, P);
      const double tv = tv_distance(P);
      for (std::int64_t r = 1; r < n; ++r)
        if (lower_bound_functional(P, r) > tv) ++lower_fail;
    }
  }
  return {upper_fail == 0 && lower_fail == 0, "upper-lemma failures " + std::to_string(upper_fail) + "/" +
                                                  std::to_string(pairs) + ", lower-functional failures " +
                                                  std::to_string(lower_fail)};
}

Outcome ac5_representations() {
  double worst = 0.0;
  bool degree_sum_ok = true;
  for (std::int64_t n = 1; n <= 9; ++n) {
    const GroupParams p(n);
    const auto elems = enumerate(p);
    const auto reps = list_irreps(p);
    std::int64_t deg_sq = 0;
    for (const auto& rep : reps) deg_sq += rep.degree() * rep.degree();
    degree_sum_ok = degree_sum_ok && deg_sq == p.order();

    std::vector<std::vector<CMatrix>> img(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (const auto& g : elems) img[i].push_back(evaluate(reps[i], g, p));

    const Element a = rotation(p, 1), x = reflection(p, 0);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const auto& rep = reps[i];
      const auto I = CMatrix::identity(rep.degree());
      for (std::size_t gi = 0; gi < elems.size(); ++gi) {
        worst = std::max(worst, max_abs_diff(mat_mul(img[i][gi], conj_transpose(img[i][gi])), I));
        for (std::size_t hi = 0; hi < elems.size(); ++hi) {
          const auto gh = index_of(multiply(elems[gi], elems[hi], p), p);
          worst = std::max(worst, max_abs_diff(mat_mul(img[i][gi], img[i][hi]), img[i][gh]));
        }
      }
      const auto A = evaluate(rep, a, p), X = evaluate(rep, x, p);
      worst = std::max(worst, max_abs_diff(mat_power(A, 2 * n), I));
      worst = std::max(worst, max_abs_diff(mat_mul(X, X), mat_power(A, n)));
      const auto Xinv = evaluate(rep, inverse(x, p), p);
      worst = std::max(worst, max_abs_diff(mat_mul(mat_mul(X, A), Xinv), evaluate(rep, inverse(a, p), p)));
    }
    // <chi_i, chi_j> = delta_ij
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j) {
        complex s = 0;
        for (std::size_t gi = 0; gi < elems.size(); ++gi) s += trace(img[i][gi]) * std::conj(trace(img[j][gi]));
        s /= static_cast<double>(elems.size());
        worst = std::max(worst, std::abs(s - complex(i == j ? 1.0 : 0.0)));
      }
  }
  return {worst <= 1e-10 && degree_sum_ok,
          "max error " + fmt(worst) + " (tol 1e-10), sum d^2 = 4n " + (degree_sum_ok ? "holds" : "FAILS")};
}

Outcome ac6_gcd_scan() {
  const auto t0 = std::chrono::steady_clock::now();
  std::int64_t bad = 0;
  for (std::int64_t n = 1; n <= 1000000; n += 2)
    if (std::gcd(2 * n, n + 4) != 1 || !gcd_check(n).coprime) ++bad;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool counterexample = !gcd_check(4).coprime && std::gcd(8, 8) == 8;
  return {bad == 0 && counterexample && secs < 1.0, std::to_string(bad) + " odd failures up to 1e6, n=4 gcd = " +
                                                        std::to_string(gcd_check(4).gcd) + ", " + fmt(secs) + " s"};
}

Outcome ac7_certificates() {
  std::ostringstream os;
  bool ok = true;
  for (int prop = 1; prop <= 4; ++prop) {
    const auto c = certify_cosine_inequality(prop, 100000);
    ok = ok && c.grid_points == 100000 && c.max_violation <= 1e-12;
    os << "P" << prop << " " << fmt(c.max_violation) << ", ";
  }
  const auto d = certify_derivative_constants();
  ok = ok && std::abs(d.c3) <= 17.0 && std::abs(d.c4) <= 0.3 && d.passed();
  os << "|c3| = " << std::abs(d.c3) << ", |c4| = " << std::abs(d.c4);
  return {ok, os.str()};
}

struct Mixing {
  std::int64_t n, asym, sym;
};

std::vector<Mixing> mixing_times() {
  std::vector<Mixing> out;
  for (auto n : kHeadlineNs) {
    const GroupParams p(n);
    out.push_back({n, mixing_time(WalkKind::asymmetric, p, 0.25), mixing_time(WalkKind::symmetric, p, 0.25)});
  }
  return out;
}

Outcome ac8_headline(const std::vector<Mixing>& m) {
  std::ostringstream os;
  bool ok = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double ratio = static_cast<double>(m[i].sym) / static_cast<double>(m[i].asym);
    const auto& f = kMixingFixtures[i];
    ok = ok && ratio >= 1.5 && ratio <= 2.5 && f.n == m[i].n && std::abs(m[i].asym - f.asym) <= 1 &&
         std::abs(m[i].sym - f.sym) <= 1;
    os << "n=" << m[i].n << " " << m[i].sym << "/" << m[i].asym << "=" << std::round(ratio * 1000) / 1000 << " ";
  }
  return {ok, os.str() + "(band [1.5, 2.5], fixtures +-1)"};
}

Outcome ac9_scaling(const std::vector<Mixing>& m) {
  auto spread = [&](auto pick) {
    double lo = 1e300, hi = 0.0;
    for (const auto& row : m) {
      const double v = static_cast<double>(pick(row)) / static_cast<double>(row.n * row.n);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    return hi / lo;
  };
  const double a = spread([](const Mixing& r) { return r.asym; });
  const double s = spread([](const Mixing& r) { return r.sym; });
  std::ostringstream os;
  os.precision(4);
  os << "max/min of k_mix/n^2: asym " << a << ", sym " << s << " (limit 1.5)";
  return {a < 1.5 && s < 1.5, os.str()};
}

}  // namespace

int main() {
  std::vector<Mixing> mixing;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 direct and Fourier powers agree", ac1_oracle_equivalence},
      {"AC2 asymmetric walk sandwich", [] { return sandwich(WalkKind::asymmetric); }},
      {"AC3 symmetric walk sandwich", [] { return sandwich(WalkKind::symmetric); }},
      {"AC4 generic upper lemma and lower functional", ac4_genericity},
      {"AC5 representation suite", ac5_representations},
      {"AC6 gcd scan", ac6_gcd_scan},
      {"AC7 cosine certificates and derivative constants", ac7_certificates},
      {"AC8 symmetric walk takes about twice as long",
       [&] {
         mixing = mixing_times();
         return ac8_headline(mixing);
       }},
      {"AC9 mixing time of order n^2", [&] { return ac9_scaling(mixing); }},
  };

  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %s: %s [%.2f s]\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    if (!o.passed) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
