#pragma once

// Irreducible representations of Dic_n and the non-commutative Fourier transform.
//
// Dic_n has four 1-dimensional irreps psi_0..psi_3, whose values on the generators
// depend on the parity of n, and n-1 two-dimensional irreps rho_r, 1 <= r <= n-1:
//
//   rho_r(a) = diag(w^r, w^-r),  rho_r(x) = [[0, (-1)^r], [1, 0]],  w = exp(i pi / n).
//
// Fourier transform of a measure P at rho: P^(rho) = sum_s P(s) rho(s). Inversion:
//
//   P(s) = 1/(4n) sum_rho d_rho Tr(rho(s^-1) P^(rho)).

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicyclic/cmatrix.hpp"
#include "dicyclic/group.hpp"
#include "dicyclic/measure.hpp"

namespace dicyclic {

class InversionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Irrep {
  enum class Kind { one_dim, two_dim };

  Kind kind = Kind::one_dim;
  std::int64_t index = 0;  // psi index in [0, 3], or r in [1, n-1]

  static Irrep psi(std::int64_t i) { return {Kind::one_dim, i}; }
  static Irrep rho(std::int64_t r) { return {Kind::two_dim, r}; }

  int degree() const { return kind == Kind::one_dim ? 1 : 2; }
  bool is_trivial() const { return kind == Kind::one_dim && index == 0; }
  std::string name() const { return (kind == Kind::one_dim ? "psi_" : "rho_") + std::to_string(index); }

  friend bool operator==(const Irrep&, const Irrep&) = default;
};

inline bool is_valid(const Irrep& rep, const GroupParams& p) {
  if (rep.kind == Irrep::Kind::one_dim) return rep.index >= 0 && rep.index <= 3;
  return rep.index >= 1 && rep.index <= p.n - 1;
}

// psi_0..psi_3 first, then rho_1..rho_{n-1}.
inline std::vector<Irrep> list_irreps(const GroupParams& p) {
  std::vector<Irrep> out;
  out.reserve(static_cast<std::size_t>(p.n + 3));
  for (int i = 0; i < 4; ++i) out.push_back(Irrep::psi(i));
  for (std::int64_t r = 1; r <= p.n - 1; ++r) out.push_back(Irrep::rho(r));
  return out;
}

namespace detail {

// exp(i pi m / n), evaluated from the reduced angle so large m does not accumulate error.
inline complex root_of_unity(std::int64_t m, const GroupParams& p) {
  const double angle = std::numbers::pi * static_cast<double>(p.reduce(m)) / static_cast<double>(p.n);
  return {std::cos(angle), std::sin(angle)};
}

struct OneDimTable {
  int a;        // +-1
  complex x;    // +-1 or +-i
};

inline OneDimTable one_dim_table(std::int64_t i, const GroupParams& p) {
  const complex I{0.0, 1.0};
  if (p.n % 2 == 1) {
    constexpr std::array<int, 4> a{1, 1, -1, -1};
    const std::array<complex, 4> x{1.0, -1.0, I, -I};
    return {a[i], x[i]};
  }
  constexpr std::array<int, 4> a{1, 1, -1, -1};
  const std::array<complex, 4> x{1.0, -1.0, 1.0, -1.0};
  return {a[i], x[i]};
}

}  // namespace detail

inline CMatrix evaluate(const Irrep& rep, const Element& g, const GroupParams& p) {
  if (!is_valid(rep, p)) throw std::invalid_argument("irrep " + rep.name() + " not defined for Dic_" + std::to_string(p.n));
  if (!is_valid(g, p)) throw std::invalid_argument("element " + to_string(g) + " not in Dic_" + std::to_string(p.n));

  if (rep.kind == Irrep::Kind::one_dim) {
    const auto t = detail::one_dim_table(rep.index, p);
    complex v = (t.a == -1 && g.exponent % 2 == 1) ? -1.0 : 1.0;
    if (g.has_x) v *= t.x;
    return CMatrix::scalar(v);
  }

  const std::int64_t r = rep.index;
  const complex w = detail::root_of_unity(r * g.exponent, p);
  const complex w_inv = std::conj(w);
  if (!g.has_x) return CMatrix::diag(w, w_inv);
  // diag(w, w^-1) * [[0, s], [1, 0]]
  const double s = (r % 2 == 0) ? 1.0 : -1.0;
  return CMatrix::of(0.0, s * w, w_inv, 0.0);
}

inline complex character(const Irrep& rep, const Element& g, const GroupParams& p) {
  return trace(evaluate(rep, g, p));
}

// Evaluations of every irrep at every element, cached for repeated transforms.
class FourierBasis {
 public:
  explicit FourierBasis(GroupParams p) : params_(p), irreps_(list_irreps(p)), elements_(enumerate(p)) {
    table_.reserve(irreps_.size() * elements_.size());
    for (const auto& rep : irreps_)
      for (const auto& g : elements_) table_.push_back(evaluate(rep, g, p));
  }

  const GroupParams& params() const { return params_; }
  const std::vector<Irrep>& irreps() const { return irreps_; }
  const std::vector<Element>& elements() const { return elements_; }

  const CMatrix& at(std::size_t irrep_idx, std::size_t element_idx) const {
    return table_[irrep_idx * elements_.size() + element_idx];
  }

 private:
  GroupParams params_;
  std::vector<Irrep> irreps_;
  std::vector<Element> elements_;
  std::vector<CMatrix> table_;
};

// One transform per irrep, aligned with list_irreps(params).
struct Spectrum {
  GroupParams params;
  std::vector<Irrep> irreps;
  std::vector<CMatrix> transforms;

  const CMatrix& operator[](const Irrep& rep) const {
    for (std::size_t i = 0; i < irreps.size(); ++i)
      if (irreps[i] == rep) return transforms[i];
    throw std::out_of_range("spectrum has no entry for " + rep.name());
  }
};

inline CMatrix fourier_transform(const Measure& P, const Irrep& rep) {
  const auto& p = P.params();
  if (!is_valid(rep, p)) throw std::invalid_argument("fourier_transform: " + rep.name() + " is not an irrep for this n");
  CMatrix acc(rep.degree());
  const auto w = P.dense();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0.0) acc += w[i] * evaluate(rep, element_at(i, p), p);
  return acc;
}

inline Spectrum fourier_transform(const Measure& P, const FourierBasis& basis) {
  if (!(P.params() == basis.params())) throw std::invalid_argument("fourier_transform: basis built for a different group");
  Spectrum out{P.params(), basis.irreps(), {}};
  out.transforms.reserve(basis.irreps().size());
  const auto w = P.dense();
  for (std::size_t r = 0; r < basis.irreps().size(); ++r) {
    CMatrix acc(basis.irreps()[r].degree());
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != 0.0) acc += w[i] * basis.at(r, i);
    out.transforms.push_back(acc);
  }
  return out;
}

inline Spectrum fourier_transform(const Measure& P) { return fourier_transform(P, FourierBasis(P.params())); }

inline Spectrum spectrum_power(const Spectrum& s, std::int64_t k) {
  Spectrum out{s.params, s.irreps, {}};
  out.transforms.reserve(s.transforms.size());
  for (const auto& m : s.transforms) out.transforms.push_back(mat_power(m, k));
  return out;
}

inline constexpr double kInversionTolerance = 1e-9;

// Throws InversionError if a recovered weight has imaginary part or negativity
// beyond kInversionTolerance.
inline Measure fourier_inverse(const Spectrum& s, const FourierBasis& basis) {
  const auto& p = s.params;
  if (!(p == basis.params())) throw std::invalid_argument("fourier_inverse: basis built for a different group");
  if (s.irreps != basis.irreps() || s.transforms.size() != s.irreps.size())
    throw std::invalid_argument("fourier_inverse: need exactly one transform per irrep of Dic_" + std::to_string(p.n));
  for (std::size_t r = 0; r < s.irreps.size(); ++r)
    if (s.transforms[r].dim() != s.irreps[r].degree())
      throw DimensionMismatch("fourier_inverse: transform at " + s.irreps[r].name() + " has wrong dimension");

  Measure out(p);
  const double scale = 1.0 / static_cast<double>(p.order());
  const auto& elems = basis.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const std::size_t inv_idx = index_of(inverse(elems[i], p), p);
    complex acc = 0.0;
    for (std::size_t r = 0; r < s.irreps.size(); ++r) {
      const CMatrix& R = basis.at(r, inv_idx);
      const CMatrix& F = s.transforms[r];
      complex tr;
      if (R.dim() == 1) {
        tr = R(0, 0) * F(0, 0);
      } else {
        tr = R(0, 0) * F(0, 0) + R(0, 1) * F(1, 0) + R(1, 0) * F(0, 1) + R(1, 1) * F(1, 1);
      }
      acc += static_cast<double>(s.irreps[r].degree()) * tr;
    }
    acc *= scale;
    if (std::abs(acc.imag()) >= kInversionTolerance)
      throw InversionError("fourier_inverse: imaginary residue " + std::to_string(acc.imag()) + " at " + to_string(elems[i]));
    if (acc.real() < -kInversionTolerance)
      throw InversionError("fourier_inverse: negative weight " + std::to_string(acc.real()) + " at " + to_string(elems[i]));
    out.set(elems[i], acc.real());
  }
  return out;
}

inline Measure fourier_inverse(const Spectrum& s) { return fourier_inverse(s, FourierBasis(s.params)); }

}  // namespace dicyclic
