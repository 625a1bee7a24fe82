#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jifkit/model.hpp"

namespace jifkit {

/// n-year impact factor: citations received in the census year by items
/// published in the previous n years, over the items published in those years.
inline IndicatorValue n_jif(const JournalRecord& record, int n) {
  if (n < 1 || n > record.horizon())
    raise(ErrorCode::WindowOutOfRange,
          "journal '" + record.id + "': n-JIF window n=" + std::to_string(n) +
              " outside [1, " + std::to_string(record.horizon()) + "]");
  IndicatorValue v;
  for (int j = 1; j <= n; ++j) {
    v.numerator += record.cit(j);
    v.denominator += record.art(j);
  }
  return v;
}

inline IndicatorValue two_jif(const JournalRecord& record) { return n_jif(record, 2); }
inline IndicatorValue five_jif(const JournalRecord& record) { return n_jif(record, 5); }

/// Rolling impact factor R_j: a 2-year window shifted j years back from the
/// census year. R_1 coincides with the 2-year impact factor.
inline IndicatorValue rolling_jif(const JournalRecord& record, int j) {
  if (j < 1 || j > record.horizon() - 1)
    raise(ErrorCode::WindowOutOfRange,
          "journal '" + record.id + "': rolling window j=" + std::to_string(j) +
              " outside [1, " + std::to_string(record.horizon() - 1) + "]");
  return {record.cit(j) + record.cit(j + 1), record.art(j) + record.art(j + 1)};
}

/// The maximizing lag and value of the rolling family, or nullopt when every
/// window has a zero denominator. Ties resolve to the smallest j; comparisons
/// are exact on integer cross products.
[[nodiscard]] inline std::optional<std::pair<int, IndicatorValue>> best_rolling_window(
    const JournalRecord& record) {
  std::optional<std::pair<int, IndicatorValue>> best;
  const int h = record.horizon() - 1;
  for (int j = 1; j <= h; ++j) {
    const IndicatorValue w = rolling_jif(record, j);
    if (!w.defined()) continue;
    if (!best || compare_exact(w, best->second) > 0) best = {j, w};
  }
  return best;
}

/// 2-year maximum impact factor: the most advantageous rolling window. Carries
/// the attaining window's numerator and denominator; UNDEFINED only when no
/// window is computable.
inline IndicatorValue two_m_jif(const JournalRecord& record) {
  const auto best = best_rolling_window(record);
  return best ? best->second : IndicatorValue{};
}

/// Years from census to peak 2-year citation rate: j*+1 for the maximizing
/// lag j*. nullopt when no window is computable.
inline std::optional<int> impact_maturity_time(const JournalRecord& record) {
  const auto best = best_rolling_window(record);
  if (!best) return std::nullopt;
  return best->first + 1;
}

struct ImpactDecomposition {
  double two_jif = 0.0;    ///< the ordinary 2-year window
  double unmeasured = 0.0; ///< impact observed by the maximum window but not the 2-year one
};

/// Splits the maximum-window impact of a journal with equal yearly output
/// into the 2-year impact factor plus the remainder the fixed window misses.
/// Requires constant, positive citable_items.
inline ImpactDecomposition decompose_unmeasured_impact(const JournalRecord& record) {
  const auto& items = record.citable_items;
  for (Count a : items)
    if (a != items.front())
      raise(ErrorCode::NonConstantItems,
            "journal '" + record.id + "': yearly item counts differ; the decomposition "
            "is only defined for equal yearly output");
  if (items.front() <= 0)
    raise(ErrorCode::NonConstantItems,
          "journal '" + record.id + "': yearly item count is zero; the decomposition "
          "needs positive output");
  const auto best = best_rolling_window(record);  // always defined here
  const Count den = 2 * items.front();
  const int j = best->first;
  const Count peak = record.cit(j) + record.cit(j + 1);
  const Count recent = record.cit(1) + record.cit(2);
  return {static_cast<double>(recent) / static_cast<double>(den),
          static_cast<double>(peak - recent) / static_cast<double>(den)};
}

/// One plottable point of a journal's citation-age distribution.
struct AgeProfileRow {
  int age_years = 0;
  Count citations = 0;
  Count citable_items = 0;
  IndicatorValue per_item_rate;  // UNDEFINED when the year has no items

  friend bool operator==(const AgeProfileRow&, const AgeProfileRow&) = default;
};

inline std::vector<AgeProfileRow> citation_age_profile(const JournalRecord& record) {
  std::vector<AgeProfileRow> rows;
  rows.reserve(static_cast<std::size_t>(record.horizon()));
  for (int j = 1; j <= record.horizon(); ++j)
    rows.push_back({j, record.cit(j), record.art(j), {record.cit(j), record.art(j)}});
  return rows;
}

/// Every indicator for one journal: the rolling family r[1..h] (h = Y-1), its
/// maximum, the maturity time, and the fixed windows (n=2 always, n=5 when
/// the history allows).
struct IndicatorReport {
  std::string journal_id;
  std::vector<IndicatorValue> rolling;
  IndicatorValue two_m_jif;
  std::optional<int> maturity_time;
  std::map<int, IndicatorValue> fixed;

  friend bool operator==(const IndicatorReport&, const IndicatorReport&) = default;
};

inline IndicatorReport report(const JournalRecord& record) {
  IndicatorReport out;
  out.journal_id = record.id;
  const int h = record.horizon() - 1;
  out.rolling.reserve(static_cast<std::size_t>(h));
  for (int j = 1; j <= h; ++j) out.rolling.push_back(rolling_jif(record, j));
  if (const auto best = best_rolling_window(record)) {
    out.two_m_jif = best->second;
    out.maturity_time = best->first + 1;
  }
  out.fixed[2] = n_jif(record, 2);
  if (record.horizon() >= 5) out.fixed[5] = n_jif(record, 5);
  return out;
}

}  // namespace jifkit
