#pragma once

#include <cmath>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dicyclic/group.hpp"

namespace dicyclic {

// A (signed, in general) weight function on Dic_n, stored densely in enumerate() order.
// Probability measures are the ones with non-negative weights summing to 1.
class Measure {
 public:
  explicit Measure(GroupParams params) : params_(params), w_(static_cast<std::size_t>(params.order()), 0.0) {}

  // Duplicate elements merge additively.
  Measure(GroupParams params, std::initializer_list<std::pair<Element, double>> weights) : Measure(params) {
    for (const auto& [g, w] : weights) add(g, w);
  }

  static Measure point_mass(GroupParams params, const Element& g) {
    Measure m(params);
    m.add(g, 1.0);
    return m;
  }

  static Measure uniform(GroupParams params) {
    Measure m(params);
    std::fill(m.w_.begin(), m.w_.end(), 1.0 / static_cast<double>(params.order()));
    return m;
  }

  const GroupParams& params() const { return params_; }

  double operator[](const Element& g) const { return w_[checked_index(g)]; }

  void add(const Element& g, double weight) { w_[checked_index(g)] += weight; }
  void set(const Element& g, double weight) { w_[checked_index(g)] = weight; }

  std::span<const double> dense() const { return w_; }
  std::span<double> dense() { return w_; }

  double total() const {
    double s = 0.0;
    for (double v : w_) s += v;
    return s;
  }

  double min_weight() const { return *std::min_element(w_.begin(), w_.end()); }

  std::vector<Element> support() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] != 0.0) out.push_back(element_at(i, params_));
    return out;
  }

  bool is_probability(double tol = 1e-12) const {
    return std::abs(total() - 1.0) <= tol && min_weight() >= -tol;
  }

  friend double max_abs_diff(const Measure& a, const Measure& b) {
    if (!(a.params_ == b.params_)) throw std::invalid_argument("max_abs_diff: measures on different groups");
    double m = 0.0;
    for (std::size_t i = 0; i < a.w_.size(); ++i) m = std::max(m, std::abs(a.w_[i] - b.w_[i]));
    return m;
  }

 private:
  std::size_t checked_index(const Element& g) const {
    if (!is_valid(g, params_)) throw std::invalid_argument("element " + to_string(g) + " not in Dic_" + std::to_string(params_.n));
    return index_of(g, params_);
  }

  GroupParams params_;
  std::vector<double> w_;
};

}  // namespace dicyclic
