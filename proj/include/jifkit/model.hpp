#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jifkit {

/// One code per named failure mode of validation, window arithmetic,
/// statistics preconditions, parsing, and serialization.
enum class ErrorCode {
  NegativeCount,
  LengthMismatch,
  ShortHistory,
  EmptyId,
  WindowOutOfRange,
  NonConstantItems,
  InsufficientData,
  ZeroVariance,
  EmptyGroup,
  SingleGroup,
  AllUndefined,
  ParseError,
  DuplicateCell,
  GapInYears,
  MixedCensusYears,
  SchemaError,
  HorizonMismatch,
  EmptyPayload,
  IoError,
};

inline const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NegativeCount: return "NegativeCount";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ShortHistory: return "ShortHistory";
    case ErrorCode::EmptyId: return "EmptyId";
    case ErrorCode::WindowOutOfRange: return "WindowOutOfRange";
    case ErrorCode::NonConstantItems: return "NonConstantItems";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::EmptyGroup: return "EmptyGroup";
    case ErrorCode::SingleGroup: return "SingleGroup";
    case ErrorCode::AllUndefined: return "AllUndefined";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateCell: return "DuplicateCell";
    case ErrorCode::GapInYears: return "GapInYears";
    case ErrorCode::MixedCensusYears: return "MixedCensusYears";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::HorizonMismatch: return "HorizonMismatch";
    case ErrorCode::EmptyPayload: return "EmptyPayload";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

/// Citation and item counts are exact integers end to end; ratios are only
/// materialized as doubles at the output boundary.
using Count = std::int64_t;

/// A citation ratio kept as an exact integer fraction. UNDEFINED (zero
/// denominator) means the window contains no citable items.
struct IndicatorValue {
  Count numerator = 0;
  Count denominator = 0;

  [[nodiscard]] bool defined() const noexcept { return denominator != 0; }

  [[nodiscard]] double value() const noexcept {
    if (!defined()) return std::numeric_limits<double>::quiet_NaN();
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }

  friend bool operator==(const IndicatorValue&, const IndicatorValue&) = default;
};

/// Exact three-way comparison of two defined ratios by 128-bit cross
/// multiplication; never touches floating point.
[[nodiscard]] inline int compare_exact(const IndicatorValue& a, const IndicatorValue& b) {
  using Wide = __int128;
  const Wide lhs = static_cast<Wide>(a.numerator) * static_cast<Wide>(b.denominator);
  const Wide rhs = static_cast<Wide>(b.numerator) * static_cast<Wide>(a.denominator);
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

/// One journal's census-year citation row. citations[j-1] is the number of
/// citations received in the census year by items the journal published j
/// years earlier; citable_items[j-1] is the item count of that year. Index j
/// always means exactly "j years before census".
struct JournalRecord {
  std::string id;
  std::string category;
  int census_year = 0;
  std::vector<Count> citations;
  std::vector<Count> citable_items;

  /// Number of target years Y covered by this record.
  [[nodiscard]] int horizon() const noexcept { return static_cast<int>(citations.size()); }

  /// Citations to items published j years before census (1-based).
  [[nodiscard]] Count cit(int j) const { return citations.at(static_cast<std::size_t>(j) - 1); }
  /// Citable items published j years before census (1-based).
  [[nodiscard]] Count art(int j) const { return citable_items.at(static_cast<std::size_t>(j) - 1); }

  friend bool operator==(const JournalRecord&, const JournalRecord&) = default;
};

/// Checks every JournalRecord invariant and returns the record unchanged.
/// Idempotent: a valid record passes through bit-identically.
inline JournalRecord validate_record(JournalRecord raw) {
  if (raw.id.empty()) raise(ErrorCode::EmptyId, "journal id is empty");
  if (raw.category.empty())
    raise(ErrorCode::EmptyId, "journal '" + raw.id + "': category is empty");
  if (raw.citations.size() != raw.citable_items.size())
    raise(ErrorCode::LengthMismatch,
          "journal '" + raw.id + "': " + std::to_string(raw.citations.size()) +
              " citation counts vs " + std::to_string(raw.citable_items.size()) +
              " item counts");
  if (raw.citations.size() < 2)
    raise(ErrorCode::ShortHistory,
          "journal '" + raw.id + "': needs at least 2 target years, has " +
              std::to_string(raw.citations.size()));
  for (Count c : raw.citations)
    if (c < 0)
      raise(ErrorCode::NegativeCount,
            "journal '" + raw.id + "': negative citation count " + std::to_string(c));
  for (Count a : raw.citable_items)
    if (a < 0)
      raise(ErrorCode::NegativeCount,
            "journal '" + raw.id + "': negative item count " + std::to_string(a));
  return raw;
}

/// Journal id -> category code.
using Grouping = std::map<std::string, std::string, std::less<>>;

/// A validated collection of records sharing one census year and one horizon.
/// Record order is whatever the constructor received; parse_dataset
/// canonicalizes to lexicographic journal id. An empty dataset (horizon 0) is
/// legal but unusable downstream.
struct Dataset {
  int census_year = 0;
  int horizon = 0;
  std::vector<JournalRecord> records;

  [[nodiscard]] bool empty() const noexcept { return records.empty(); }

  [[nodiscard]] Grouping grouping() const {
    Grouping g;
    for (const auto& r : records) g.emplace(r.id, r.category);
    return g;
  }

  [[nodiscard]] std::vector<std::string> categories() const {
    std::set<std::string> seen;
    for (const auto& r : records) seen.insert(r.category);
    return {seen.begin(), seen.end()};
  }

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

/// Validates each record and the dataset invariants: shared census year,
/// uniform horizon, unique journal ids.
inline Dataset make_dataset(std::vector<JournalRecord> records) {
  Dataset ds;
  if (records.empty()) return ds;
  for (auto& r : records) r = validate_record(std::move(r));
  ds.census_year = records.front().census_year;
  ds.horizon = records.front().horizon();
  std::set<std::string_view> ids;
  for (const auto& r : records) {
    if (r.census_year != ds.census_year)
      raise(ErrorCode::MixedCensusYears,
            "journal '" + r.id + "' has census year " + std::to_string(r.census_year) +
                ", expected " + std::to_string(ds.census_year));
    if (r.horizon() != ds.horizon)
      raise(ErrorCode::HorizonMismatch,
            "journal '" + r.id + "' covers " + std::to_string(r.horizon()) +
                " target years, expected " + std::to_string(ds.horizon));
    if (!ids.insert(r.id).second)
      raise(ErrorCode::DuplicateCell, "duplicate journal id '" + r.id + "'");
  }
  ds.records = std::move(records);
  return ds;
}

}  // namespace jifkit
