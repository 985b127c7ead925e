#pragma once

// Exact arithmetic on the dicyclic group Dic_n = <a, x | a^{2n} = 1, x^2 = a^n, x a x^{-1} = a^{-1}>.
//
// Every element has a unique normal form a^k or a^k x with 0 <= k < 2n, so
// an element is stored as (exponent mod 2n, has_x) and multiplied in O(1).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dicyclic {

class NotIrreducible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupParams {
  std::int64_t n = 1;

  explicit GroupParams(std::int64_t n_) : n(n_) {
    if (n < 1) throw std::invalid_argument("Dic_n requires n >= 1, got " + std::to_string(n));
  }

  std::int64_t order() const { return 4 * n; }
  std::int64_t modulus() const { return 2 * n; }
  // Reduces any integer exponent into [0, 2n).
  std::int64_t reduce(std::int64_t e) const {
    const auto m = modulus();
    e %= m;
    return e < 0 ? e + m : e;
  }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

struct Element {
  std::int64_t exponent = 0;
  bool has_x = false;

  friend auto operator<=>(const Element&, const Element&) = default;
};

inline Element identity(const GroupParams&) { return {0, false}; }

inline Element rotation(const GroupParams& p, std::int64_t k) { return {p.reduce(k), false}; }
inline Element reflection(const GroupParams& p, std::int64_t k) { return {p.reduce(k), true}; }

inline bool is_valid(const Element& g, const GroupParams& p) {
  return g.exponent >= 0 && g.exponent < p.modulus();
}

inline Element multiply(const Element& g, const Element& h, const GroupParams& p) {
  if (!g.has_x && !h.has_x) return {p.reduce(g.exponent + h.exponent), false};
  if (!g.has_x && h.has_x) return {p.reduce(g.exponent + h.exponent), true};
  if (g.has_x && !h.has_x) return {p.reduce(g.exponent - h.exponent), true};
  return {p.reduce(g.exponent - h.exponent + p.n), false};
}

inline Element inverse(const Element& g, const GroupParams& p) {
  if (!g.has_x) return {p.reduce(-g.exponent), false};
  return {p.reduce(g.exponent + p.n), true};
}

inline Element power(Element g, std::int64_t k, const GroupParams& p) {
  if (k < 0) {
    g = inverse(g, p);
    k = -k;
  }
  Element acc = identity(p);
  while (k > 0) {
    if (k & 1) acc = multiply(acc, g, p);
    g = multiply(g, g, p);
    k >>= 1;
  }
  return acc;
}

// Dense position of g in enumerate(p): rotations occupy [0, 2n), reflections [2n, 4n).
inline std::size_t index_of(const Element& g, const GroupParams& p) {
  return static_cast<std::size_t>(g.exponent + (g.has_x ? p.modulus() : 0));
}

inline Element element_at(std::size_t index, const GroupParams& p) {
  const auto i = static_cast<std::int64_t>(index);
  return i < p.modulus() ? Element{i, false} : Element{i - p.modulus(), true};
}

inline std::vector<Element> enumerate(const GroupParams& p) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(p.order()));
  for (std::int64_t k = 0; k < p.modulus(); ++k) out.push_back({k, false});
  for (std::int64_t k = 0; k < p.modulus(); ++k) out.push_back({k, true});
  return out;
}

// Text form "a^k" or "a^k*x".
inline std::string to_string(const Element& g) {
  return "a^" + std::to_string(g.exponent) + (g.has_x ? "*x" : "");
}

inline Element parse_element(std::string_view text, const GroupParams& p) {
  const auto bad = [&] { return std::invalid_argument("malformed element: '" + std::string(text) + "'"); };
  if (text.size() < 3 || text.substr(0, 2) != "a^") throw bad();
  std::string_view rest = text.substr(2);
  bool has_x = false;
  if (rest.ends_with("*x")) {
    has_x = true;
    rest.remove_suffix(2);
  }
  if (rest.empty()) throw bad();
  std::int64_t k = 0;
  for (char c : rest) {
    if (c < '0' || c > '9') throw bad();
    k = k * 10 + (c - '0');
    if (k >= p.modulus()) throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
  }
  return {k, has_x};
}

struct GcdCheck {
  std::int64_t gcd;
  bool coprime;
};

// gcd(2n, n+4); equal to 1 for every odd n, which makes the asymmetric walk aperiodic.
inline GcdCheck gcd_check(std::int64_t n) {
  const auto g = std::gcd(2 * n, n + 4);
  return {g, g == 1};
}

// Period of the walk driven by `support`: gcd of all word lengths L <= 4n+4 whose
// product is the identity. Returns 1 iff the walk is aperiodic.
//
// Throws NotIrreducible if the support does not generate the whole group.
inline std::int64_t aperiodicity_certificate(const GroupParams& p, const std::vector<Element>& support) {
  if (support.empty()) throw std::invalid_argument("aperiodicity_certificate: empty support");
  for (const auto& s : support)
    if (!is_valid(s, p)) throw std::invalid_argument("aperiodicity_certificate: invalid support element");

  const auto order = static_cast<std::size_t>(p.order());
  std::vector<char> layer(order, 0), next(order, 0), seen(order, 0);
  layer[index_of(identity(p), p)] = 1;

  std::int64_t period = 0;
  const std::int64_t depth = p.order() + 4;
  for (std::int64_t len = 1; len <= depth; ++len) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t i = 0; i < order; ++i) {
      if (!layer[i]) continue;
      const Element g = element_at(i, p);
      for (const auto& s : support) next[index_of(multiply(g, s, p), p)] = 1;
    }
    layer.swap(next);
    for (std::size_t i = 0; i < order; ++i) seen[i] |= layer[i];
    if (layer[index_of(identity(p), p)]) period = std::gcd(period, len);
  }

  const bool all_reached = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  if (!all_reached || period == 0)
    throw NotIrreducible("support does not generate Dic_" + std::to_string(p.n));
  return period;
}

}  // namespace dicyclic
