#pragma once

// Command implementations behind the dicyclic tool. Each command writes its
// result to `out`, diagnostics to `err`, and returns the process exit code:
// 0 success, 1 mathematical check failure, 2 usage error.

#include <algorithm>
#include <cmath>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dicyclic/bounds.hpp"
#include "dicyclic/representations.hpp"
#include "dicyclic/walks.hpp"

namespace dicyclic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { csv, json };

inline Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw UsageError("unknown format '" + s + "' (expected csv or json)");
}

struct SweepConfig {
  std::vector<std::int64_t> n_list;
  std::optional<std::int64_t> k_max;  // nullopt: 3 n^2 per n
  std::vector<WalkKind> walks{WalkKind::asymmetric, WalkKind::symmetric};
  double epsilon = 0.25;
  Format format = Format::csv;
  bool bounds = true;
  double upper_scale = 1.0;  // fault injection for the verification suite; 1 in normal use

  std::int64_t k_max_for(std::int64_t n) const { return k_max ? *k_max : 3 * n * n; }
};

// Sorts and dedups n_list and the walk list; throws UsageError on invalid input.
inline SweepConfig normalized(SweepConfig c) {
  if (c.n_list.empty()) throw UsageError("--n: at least one value required");
  for (auto n : c.n_list) {
    if (n < 1) throw UsageError("--n: values must be >= 1, got " + std::to_string(n));
    if (c.bounds && n % 2 == 0)
      throw UsageError("--n: even n = " + std::to_string(n) + " is only allowed with bounds disabled (--no-bounds)");
  }
  if (c.k_max && *c.k_max < 1) throw UsageError("--k-max must be >= 1 or 'auto'");
  if (c.walks.empty()) throw UsageError("--walk: at least one walk required");
  if (!(c.epsilon > 0.0 && c.epsilon <= 1.0)) throw UsageError("--epsilon must lie in (0, 1]");
  std::sort(c.n_list.begin(), c.n_list.end());
  c.n_list.erase(std::unique(c.n_list.begin(), c.n_list.end()), c.n_list.end());
  std::sort(c.walks.begin(), c.walks.end());
  c.walks.erase(std::unique(c.walks.begin(), c.walks.end()), c.walks.end());
  return c;
}

inline std::int64_t first_row_k(WalkKind kind) { return kind == WalkKind::asymmetric ? 2 : 1; }

// Rows for one (n, walk) cell: k from 2 (asymmetric) or 1 (symmetric) to k_max.
inline std::vector<BoundRow> sweep_cell(std::int64_t n, WalkKind kind, std::int64_t k_max, bool with_bounds,
                                        double upper_scale = 1.0) {
  const GroupParams p(n);
  const auto series = tv_series(kind, p, k_max);
  std::vector<BoundRow> rows;
  for (const auto& pt : series.points) {
    if (pt.k < first_row_k(kind)) continue;
    BoundRow row{n, pt.k, kind, pt.tv, std::nullopt, std::nullopt};
    if (with_bounds) {
      row.upper = upper_bound(kind, n, pt.k);
      if (row.upper) *row.upper *= upper_scale;
      row.lower = lower_bound(kind, n, pt.k);
    }
    rows.push_back(row);
  }
  return rows;
}

// All rows in (n, walk, k) order; cells run concurrently.
inline std::vector<BoundRow> sweep(const SweepConfig& config) {
  std::vector<std::future<std::vector<BoundRow>>> cells;
  for (auto n : config.n_list)
    for (auto kind : config.walks)
      cells.push_back(std::async(std::launch::async, sweep_cell, n, kind, config.k_max_for(n), config.bounds,
                                 config.upper_scale));
  std::vector<BoundRow> rows;
  for (auto& f : cells) {
    auto part = f.get();
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

namespace detail {

inline std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

inline nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

// Entries row-major as [re, im]; +0.0 folds negative zeros.
inline nlohmann::json matrix_json(const CMatrix& m) {
  auto out = nlohmann::json::array();
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out.push_back({m(i, j).real() + 0.0, m(i, j).imag() + 0.0});
  return out;
}

}  // namespace detail

inline void write_rows_csv(const std::vector<BoundRow>& rows, std::ostream& out) {
  out << "n,k,walk,tv_exact,upper,lower\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.k << ',' << walk_name(r.kind) << ',' << detail::format_double(r.tv_exact) << ','
        << (r.upper ? detail::format_double(*r.upper) : "") << ','
        << (r.lower ? detail::format_double(*r.lower) : "") << '\n';
  }
}

inline nlohmann::json rows_json(const std::vector<BoundRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"n", r.n},
                   {"k", r.k},
                   {"walk", walk_name(r.kind)},
                   {"tv_exact", r.tv_exact},
                   {"upper", detail::optional_json(r.upper)},
                   {"lower", detail::optional_json(r.lower)}});
  return arr;
}

inline int cmd_analyze(const SweepConfig& raw, std::ostream& out, std::ostream& err) {
  SweepConfig config;
  try {
    config = normalized(raw);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto rows = sweep(config);
  if (config.format == Format::csv)
    write_rows_csv(rows, out);
  else
    out << rows_json(rows).dump(2) << '\n';

  int violations = 0;
  for (const auto& r : rows) {
    if (r.sandwich_holds()) continue;
    ++violations;
    err << "sandwich violation: n=" << r.n << " walk=" << walk_name(r.kind) << " k=" << r.k
        << " lower=" << (r.lower ? detail::format_double(*r.lower) : "-") << " tv=" << detail::format_double(r.tv_exact)
        << " upper=" << (r.upper ? detail::format_double(*r.upper) : "-") << '\n';
  }
  if (violations > 0) {
    err << violations << " sandwich violation(s)\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

struct MixingRow {
  std::int64_t n;
  std::int64_t asym;
  std::int64_t sym;
  double ratio() const { return static_cast<double>(sym) / static_cast<double>(asym); }
};

inline double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

inline int cmd_mixing_time(const SweepConfig& raw, std::ostream& out, std::ostream& err) {
  SweepConfig config = raw;
  config.bounds = false;  // even n is allowed; a periodic walk is reported as a failure below
  try {
    config = normalized(config);
    if (config.epsilon >= 1.0) throw UsageError("--epsilon must lie in (0, 1)");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  struct Cell {
    std::future<std::int64_t> asym, sym;
  };
  std::vector<Cell> cells;
  for (auto n : config.n_list) {
    const GroupParams p(n);
    cells.push_back({std::async(std::launch::async, [p, &config] { return mixing_time(WalkKind::asymmetric, p, config.epsilon); }),
                     std::async(std::launch::async, [p, &config] { return mixing_time(WalkKind::symmetric, p, config.epsilon); })});
  }

  std::vector<MixingRow> rows;
  bool failed = false;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto n = config.n_list[i];
    try {
      const auto a = cells[i].asym.get();
      const auto s = cells[i].sym.get();
      rows.push_back({n, a, s});
    } catch (const std::exception& e) {
      err << "mixing time failed for n=" << n << ": " << e.what() << '\n';
      failed = true;
    }
  }
  if (failed) return kExitCheckFailed;

  if (config.format == Format::csv) {
    out << "n,asym,sym,ratio\n";
    for (const auto& r : rows)
      out << r.n << ',' << r.asym << ',' << r.sym << ',' << std::fixed << std::setprecision(3) << r.ratio()
          << std::defaultfloat << '\n';
  } else {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back({{"n", r.n}, {"asym", r.asym}, {"sym", r.sym}, {"ratio", round3(r.ratio())}});
    out << arr.dump(2) << '\n';
  }
  return kExitOk;
}

inline nlohmann::json irreps_json(const GroupParams& p) {
  nlohmann::json doc{{"n", p.n}, {"parity", p.n % 2 == 0 ? "even" : "odd"}};
  auto arr = nlohmann::json::array();
  const Element a = rotation(p, 1);
  const Element x = reflection(p, 0);
  for (const auto& rep : list_irreps(p))
    arr.push_back({{"name", rep.name()},
                   {"degree", rep.degree()},
                   {"a", detail::matrix_json(evaluate(rep, a, p))},
                   {"x", detail::matrix_json(evaluate(rep, x, p))}});
  doc["irreps"] = arr;
  return doc;
}

inline int cmd_dump_irreps(std::int64_t n, std::ostream& out, std::ostream& err) {
  if (n < 1) {
    err << "error: --n must be >= 1\n";
    return kExitUsage;
  }
  out << irreps_json(GroupParams(n)).dump(2) << '\n';
  return kExitOk;
}

}  // namespace dicyclic::cli
