#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "jifkit/indicators.hpp"
#include "jifkit/model.hpp"

namespace jifkit {

/// One indicator evaluated across a journal list. Entries where the indicator
/// is UNDEFINED carry defined=false and are excluded pairwise or per group by
/// the statistics below, never silently.
struct IndicatorVector {
  std::string indicator_name;
  std::vector<std::string> ids;
  std::vector<double> values;
  std::vector<bool> defined;
};

enum class CorrelationMethod { pearson, spearman };
enum class SdConvention { sample, population };

namespace detail {

inline double pearson_core(std::span<const double> x, std::span<const double> y,
                           const std::string& label) {
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    raise(ErrorCode::ZeroVariance, label + ": an argument has zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

/// Ranks with ties averaged, as Spearman needs.
inline std::vector<double> average_ranks(std::span<const double> v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t k = i;
    while (k + 1 < n && v[order[k + 1]] == v[order[i]]) ++k;
    const double shared = 0.5 * static_cast<double>(i + k) + 1.0;
    for (std::size_t t = i; t <= k; ++t) ranks[order[t]] = shared;
    i = k + 1;
  }
  return ranks;
}

inline double median_of_sorted(std::span<const double> sorted) {
  const std::size_t n = sorted.size();
  const std::size_t mid = n / 2;
  return (n % 2 == 1) ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
}

inline double mean_of(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double sum_sq_dev(std::span<const double> v, double mean) {
  double s = 0.0;
  for (double x : v) {
    const double d = x - mean;
    s += d * d;
  }
  return s;
}

}  // namespace detail

/// Correlation over the jointly defined entries of two aligned vectors.
/// Pearson by default; Spearman ranks first (ties averaged).
inline double correlation(const IndicatorVector& x, const IndicatorVector& y,
                          CorrelationMethod method = CorrelationMethod::pearson) {
  if (x.values.size() != y.values.size() || x.defined.size() != x.values.size() ||
      y.defined.size() != y.values.size() || x.ids != y.ids)
    throw std::invalid_argument("correlation: vectors are not aligned to one journal list");
  const std::string label = "correlation(" + x.indicator_name + ", " + y.indicator_name + ")";
  std::vector<double> xs, ys;
  xs.reserve(x.values.size());
  ys.reserve(y.values.size());
  for (std::size_t i = 0; i < x.values.size(); ++i) {
    if (x.defined[i] && y.defined[i]) {
      xs.push_back(x.values[i]);
      ys.push_back(y.values[i]);
    }
  }
  if (xs.size() < 3)
    raise(ErrorCode::InsufficientData,
          label + ": only " + std::to_string(xs.size()) +
              " jointly defined values (need at least 3)");
  if (method == CorrelationMethod::spearman) {
    xs = detail::average_ranks(xs);
    ys = detail::average_ranks(ys);
  }
  return detail::pearson_core(xs, ys, label);
}

/// Symmetric correlation matrix with a unit diagonal, in the input order of
/// the vectors. Any per-pair error propagates.
inline std::vector<std::vector<double>> correlation_matrix(
    std::span<const IndicatorVector> vectors,
    CorrelationMethod method = CorrelationMethod::pearson) {
  if (vectors.size() < 2)
    raise(ErrorCode::InsufficientData, "correlation matrix needs at least 2 vectors");
  const std::size_t k = vectors.size();
  std::vector<std::vector<double>> m(k, std::vector<double>(k, 1.0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      m[i][j] = m[j][i] = correlation(vectors[i], vectors[j], method);
  return m;
}

/// Per-category central tendency and spread of one indicator.
struct GroupSummary {
  std::string category;
  std::string indicator_name;
  std::size_t count = 0;     ///< defined values summarized
  std::size_t excluded = 0;  ///< undefined values dropped from this category
  double median = 0.0;
  double mean = 0.0;
  double sd = 0.0;
};

/// Median (midpoint convention), mean, and standard deviation per category,
/// categories in lexicographic order. Undefined values are excluded per group
/// with the count surfaced; a category left with nothing defined is an error.
inline std::vector<GroupSummary> group_summary(const IndicatorVector& values,
                                               const Grouping& grouping,
                                               SdConvention convention = SdConvention::sample) {
  if (values.ids.size() != values.values.size() || values.defined.size() != values.values.size())
    throw std::invalid_argument("group_summary: vector fields are not aligned");
  std::map<std::string, std::pair<std::vector<double>, std::size_t>> by_category;
  for (std::size_t i = 0; i < values.ids.size(); ++i) {
    const auto it = grouping.find(values.ids[i]);
    if (it == grouping.end())
      throw std::invalid_argument("group_summary: journal '" + values.ids[i] +
                                  "' missing from grouping");
    auto& bucket = by_category[it->second];
    if (values.defined[i])
      bucket.first.push_back(values.values[i]);
    else
      ++bucket.second;
  }
  if (by_category.empty())
    raise(ErrorCode::EmptyGroup, "indicator '" + values.indicator_name + "': nothing to summarize");
  std::vector<GroupSummary> out;
  out.reserve(by_category.size());
  for (auto& [category, bucket] : by_category) {
    auto& vals = bucket.first;
    if (vals.empty())
      raise(ErrorCode::EmptyGroup,
            "indicator '" + values.indicator_name + "': category '" + category +
                "' has no defined values");
    std::sort(vals.begin(), vals.end());
    GroupSummary s;
    s.category = category;
    s.indicator_name = values.indicator_name;
    s.count = vals.size();
    s.excluded = bucket.second;
    s.median = detail::median_of_sorted(vals);
    s.mean = detail::mean_of(vals);
    if (vals.size() > 1) {
      const double div = (convention == SdConvention::sample)
                             ? static_cast<double>(vals.size() - 1)
                             : static_cast<double>(vals.size());
      s.sd = std::sqrt(detail::sum_sq_dev(vals, s.mean) / div);
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// Per-category counts of journals peaking at each rolling window index j.
struct MaturityTally {
  std::string category;
  std::map<int, std::size_t> counts;     ///< window index j (1..h) -> journals
  std::map<int, double> percentages;     ///< 100 * count / defined total
  std::size_t excluded = 0;              ///< journals with undefined maturity

  [[nodiscard]] std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [j, c] : counts) t += c;
    return t;
  }
};

/// Tallies maturity times per category, j = maturity - 1. Journals without a
/// defined maturity are excluded and counted; a category whose journals are
/// all excluded still gets an all-zero row.
inline std::vector<MaturityTally> maturity_tally(std::span<const IndicatorReport> reports,
                                                 const Grouping& grouping) {
  if (reports.empty()) return {};
  const int h = static_cast<int>(reports.front().rolling.size());
  std::map<std::string, MaturityTally> by_category;
  for (const auto& rep : reports) {
    const auto it = grouping.find(rep.journal_id);
    if (it == grouping.end())
      throw std::invalid_argument("maturity_tally: journal '" + rep.journal_id +
                                  "' missing from grouping");
    auto [slot, inserted] = by_category.try_emplace(it->second);
    if (inserted) {
      slot->second.category = it->second;
      for (int j = 1; j <= h; ++j) slot->second.counts[j] = 0;
    }
    if (rep.maturity_time)
      ++slot->second.counts[*rep.maturity_time - 1];
    else
      ++slot->second.excluded;
  }
  std::vector<MaturityTally> out;
  out.reserve(by_category.size());
  for (auto& [category, tally] : by_category) {
    const auto total = tally.total();
    for (const auto& [j, c] : tally.counts)
      tally.percentages[j] =
          total == 0 ? 0.0 : 100.0 * static_cast<double>(c) / static_cast<double>(total);
    out.push_back(std::move(tally));
  }
  return out;
}

/// Sums tallies into one pooled row (the "Total" line).
inline MaturityTally pool_tallies(std::span<const MaturityTally> tallies,
                                  std::string name = "Total") {
  MaturityTally pooled;
  pooled.category = std::move(name);
  for (const auto& t : tallies) {
    pooled.excluded += t.excluded;
    for (const auto& [j, c] : t.counts) pooled.counts[j] += c;
  }
  const auto total = pooled.total();
  for (const auto& [j, c] : pooled.counts)
    pooled.percentages[j] =
        total == 0 ? 0.0 : 100.0 * static_cast<double>(c) / static_cast<double>(total);
  return pooled;
}

/// One-way decomposition of an indicator's pooled variance into within- and
/// between-category parts, population divisors throughout so that
/// within + between = total holds exactly.
struct VarianceDecomposition {
  std::string indicator_name;
  std::size_t group_count = 0;
  std::size_t value_count = 0;  ///< defined values decomposed
  std::size_t excluded = 0;     ///< undefined values dropped
  double grand_mean = 0.0;
  double within_group_variance = 0.0;
  double between_group_variance = 0.0;
  double total_variance = 0.0;
  double reduction = 0.0;  ///< within - between
  double ratio = 0.0;      ///< between / within; +inf when within is zero

  [[nodiscard]] bool ratio_defined() const noexcept { return std::isfinite(ratio); }
};

inline VarianceDecomposition variance_decomposition(const IndicatorVector& values,
                                                    const Grouping& grouping) {
  if (values.ids.size() != values.values.size() || values.defined.size() != values.values.size())
    throw std::invalid_argument("variance_decomposition: vector fields are not aligned");
  std::map<std::string, std::vector<double>> groups;
  std::size_t excluded = 0;
  for (std::size_t i = 0; i < values.ids.size(); ++i) {
    const auto it = grouping.find(values.ids[i]);
    if (it == grouping.end())
      throw std::invalid_argument("variance_decomposition: journal '" + values.ids[i] +
                                  "' missing from grouping");
    if (values.defined[i])
      groups[it->second].push_back(values.values[i]);
    else
      ++excluded;
  }
  std::size_t n_total = 0;
  for (const auto& [category, vals] : groups) n_total += vals.size();
  if (n_total == 0)
    raise(ErrorCode::AllUndefined,
          "indicator '" + values.indicator_name + "': no defined values");
  if (groups.size() < 2)
    raise(ErrorCode::SingleGroup,
          "indicator '" + values.indicator_name + "': only one category ('" +
              groups.begin()->first + "'); need at least 2");

  VarianceDecomposition d;
  d.indicator_name = values.indicator_name;
  d.group_count = groups.size();
  d.value_count = n_total;
  d.excluded = excluded;

  double grand_sum = 0.0;
  for (const auto& [category, vals] : groups)
    for (double v : vals) grand_sum += v;
  d.grand_mean = grand_sum / static_cast<double>(n_total);

  double within_ss = 0.0, between_ss = 0.0;
  for (const auto& [category, vals] : groups) {
    const double gm = detail::mean_of(vals);
    within_ss += detail::sum_sq_dev(vals, gm);
    const double dm = gm - d.grand_mean;
    between_ss += static_cast<double>(vals.size()) * dm * dm;
  }
  d.within_group_variance = within_ss / static_cast<double>(n_total);
  d.between_group_variance = between_ss / static_cast<double>(n_total);
  d.total_variance = d.within_group_variance + d.between_group_variance;
  d.reduction = d.within_group_variance - d.between_group_variance;
  if (d.within_group_variance > 0.0)
    d.ratio = d.between_group_variance / d.within_group_variance;
  else if (d.between_group_variance > 0.0)
    d.ratio = std::numeric_limits<double>::infinity();
  else
    d.ratio = std::numeric_limits<double>::quiet_NaN();
  return d;
}

/// Indicator columns of a dataset in the canonical order R_1..R_h, 2M-JIF,
/// then 5-JIF when requested and the horizon allows. reports must align with
/// the dataset's records.
inline std::vector<IndicatorVector> indicator_columns(const Dataset& dataset,
                                                      std::span<const IndicatorReport> reports,
                                                      bool include_five_jif) {
  if (reports.size() != dataset.records.size())
    throw std::invalid_argument("indicator_columns: reports do not align with records");
  std::vector<std::string> ids;
  ids.reserve(dataset.records.size());
  for (const auto& r : dataset.records) ids.push_back(r.id);

  const int h = dataset.horizon - 1;
  std::vector<IndicatorVector> columns;
  auto add_column = [&](std::string name, auto&& pick) {
    IndicatorVector col;
    col.indicator_name = std::move(name);
    col.ids = ids;
    col.values.reserve(reports.size());
    col.defined.reserve(reports.size());
    for (const auto& rep : reports) {
      const IndicatorValue v = pick(rep);
      col.values.push_back(v.value());
      col.defined.push_back(v.defined());
    }
    columns.push_back(std::move(col));
  };
  for (int j = 1; j <= h; ++j)
    add_column("R_" + std::to_string(j), [j](const IndicatorReport& rep) {
      return rep.rolling[static_cast<std::size_t>(j) - 1];
    });
  add_column("2M-JIF", [](const IndicatorReport& rep) { return rep.two_m_jif; });
  if (include_five_jif && dataset.horizon >= 5)
    add_column("5-JIF", [](const IndicatorReport& rep) { return rep.fixed.at(5); });
  return columns;
}

}  // namespace jifkit
