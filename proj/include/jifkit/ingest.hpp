#pragma once

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jifkit/csv.hpp"
#include "jifkit/indicators.hpp"
#include "jifkit/model.hpp"
#include "jifkit/stats.hpp"

namespace jifkit {

enum class Schema { long_csv, wide_csv };
enum class OutputFormat { csv, tsv, json };

inline constexpr std::array<std::string_view, 6> kLongHeader = {
    "journal", "category", "census_year", "target_year", "citations", "citable_items"};

namespace detail {

inline long long field_int(const csv::Row& row, std::size_t index, std::string_view what) {
  const auto v = csv::to_int(row.fields[index]);
  if (!v)
    raise(ErrorCode::ParseError, "line " + std::to_string(row.line) + ", column " +
                                     std::to_string(index + 1) + ": expected an integer " +
                                     std::string(what) + ", got '" + row.fields[index] + "'");
  return *v;
}

inline Count field_count(const csv::Row& row, std::size_t index, std::string_view what,
                         const std::string& journal) {
  const long long v = field_int(row, index, what);
  if (v < 0)
    raise(ErrorCode::NegativeCount, "line " + std::to_string(row.line) + ": negative " +
                                        std::string(what) + " for journal '" + journal + "'");
  return v;
}

inline void check_field_count(const csv::Row& row, std::size_t expected) {
  if (row.fields.size() != expected)
    raise(ErrorCode::ParseError, "line " + std::to_string(row.line) + ": expected " +
                                     std::to_string(expected) + " fields, got " +
                                     std::to_string(row.fields.size()));
}

inline std::string journal_field(const csv::Row& row) {
  if (row.fields[0].empty())
    raise(ErrorCode::EmptyId, "line " + std::to_string(row.line) + ": empty journal id");
  return row.fields[0];
}

inline void check_census(std::optional<int>& census, int year, const csv::Row& row) {
  if (!census) {
    census = year;
  } else if (*census != year) {
    raise(ErrorCode::MixedCensusYears,
          "line " + std::to_string(row.line) + ": census year " + std::to_string(year) +
              " differs from " + std::to_string(*census));
  }
}

inline Dataset parse_long(const std::vector<csv::Row>& rows) {
  struct Cell {
    Count citations = 0;
    Count citable_items = 0;
  };
  struct Pending {
    std::string category;
    std::size_t category_line = 0;
    std::map<int, Cell> by_year;
  };
  std::map<std::string, Pending> journals;  // lexicographic id order
  std::optional<int> census;

  for (std::size_t r = 1; r < rows.size(); ++r) {
    const csv::Row& row = rows[r];
    check_field_count(row, 6);
    const std::string journal = journal_field(row);
    const int census_year = static_cast<int>(field_int(row, 2, "census_year"));
    const int target_year = static_cast<int>(field_int(row, 3, "target_year"));
    if (census_year <= target_year)
      raise(ErrorCode::ParseError, "line " + std::to_string(row.line) + ": census year " +
                                       std::to_string(census_year) +
                                       " must be greater than target year " +
                                       std::to_string(target_year));
    check_census(census, census_year, row);
    Cell cell{field_count(row, 4, "citations", journal),
              field_count(row, 5, "citable_items", journal)};

    auto& pending = journals[journal];
    if (pending.by_year.empty()) {
      pending.category = row.fields[1];
      pending.category_line = row.line;
    } else if (pending.category != row.fields[1]) {
      raise(ErrorCode::ParseError, "line " + std::to_string(row.line) + ": journal '" + journal +
                                       "' listed under category '" + row.fields[1] +
                                       "' but previously '" + pending.category + "'");
    }
    if (!pending.by_year.emplace(target_year, cell).second)
      raise(ErrorCode::DuplicateCell, "line " + std::to_string(row.line) + ": duplicate row for journal '" +
                                          journal + "', target year " + std::to_string(target_year));
  }

  std::vector<JournalRecord> records;
  records.reserve(journals.size());
  for (auto& [id, pending] : journals) {
    const int horizon = static_cast<int>(pending.by_year.size());
    const int newest = pending.by_year.rbegin()->first;
    if (newest != *census - 1)
      raise(ErrorCode::GapInYears, "journal '" + id + "': most recent target year is " +
                                       std::to_string(newest) + ", expected " +
                                       std::to_string(*census - 1));
    JournalRecord rec;
    rec.id = id;
    rec.category = pending.category;
    rec.census_year = *census;
    rec.citations.reserve(static_cast<std::size_t>(horizon));
    rec.citable_items.reserve(static_cast<std::size_t>(horizon));
    for (int j = 1; j <= horizon; ++j) {
      const auto it = pending.by_year.find(*census - j);
      if (it == pending.by_year.end())
        raise(ErrorCode::GapInYears, "journal '" + id + "': missing target year " +
                                         std::to_string(*census - j));
      rec.citations.push_back(it->second.citations);
      rec.citable_items.push_back(it->second.citable_items);
    }
    records.push_back(std::move(rec));
  }
  return make_dataset(std::move(records));
}

inline Dataset parse_wide(const std::vector<csv::Row>& rows) {
  const auto& header = rows.front().fields;
  const auto schema_error = [&](const std::string& what) {
    raise(ErrorCode::SchemaError, "wide schema: " + what);
  };
  if (header.size() < 7 || (header.size() - 3) % 2 != 0)
    schema_error("header must be journal,category,census_year,cit_1..cit_Y,art_1..art_Y with Y >= 2");
  const int horizon = static_cast<int>((header.size() - 3) / 2);
  if (header[0] != "journal" || header[1] != "category" || header[2] != "census_year")
    schema_error("header must start with journal,category,census_year");
  for (int k = 1; k <= horizon; ++k) {
    if (header[static_cast<std::size_t>(2 + k)] != "cit_" + std::to_string(k))
      schema_error("column " + std::to_string(3 + k) + " must be cit_" + std::to_string(k));
    if (header[static_cast<std::size_t>(2 + horizon + k)] != "art_" + std::to_string(k))
      schema_error("column " + std::to_string(3 + horizon + k) + " must be art_" +
                   std::to_string(k));
  }

  std::map<std::string, JournalRecord> journals;
  std::optional<int> census;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const csv::Row& row = rows[r];
    check_field_count(row, header.size());
    JournalRecord rec;
    rec.id = journal_field(row);
    rec.category = row.fields[1];
    rec.census_year = static_cast<int>(field_int(row, 2, "census_year"));
    check_census(census, rec.census_year, row);
    for (int k = 1; k <= horizon; ++k)
      rec.citations.push_back(
          field_count(row, static_cast<std::size_t>(2 + k), "citations", rec.id));
    for (int k = 1; k <= horizon; ++k)
      rec.citable_items.push_back(
          field_count(row, static_cast<std::size_t>(2 + horizon + k), "citable_items", rec.id));
    const std::string id = rec.id;
    if (!journals.emplace(id, std::move(rec)).second)
      raise(ErrorCode::DuplicateCell,
            "line " + std::to_string(row.line) + ": duplicate journal '" + id + "'");
  }
  std::vector<JournalRecord> records;
  records.reserve(journals.size());
  for (auto& [id, rec] : journals) records.push_back(std::move(rec));
  return make_dataset(std::move(records));
}

}  // namespace detail

/// Parses delimited text in either schema into a validated Dataset. Records
/// come out in lexicographic journal-id order, so long-form parsing is
/// insensitive to input row order.
inline Dataset parse_dataset(std::string_view text, Schema schema) {
  const std::vector<csv::Row> rows = csv::parse(text);
  if (rows.empty()) raise(ErrorCode::SchemaError, "empty input: missing header row");
  if (schema == Schema::long_csv) {
    const auto& header = rows.front().fields;
    const bool ok = header.size() == kLongHeader.size() &&
                    std::equal(header.begin(), header.end(), kLongHeader.begin());
    if (!ok)
      raise(ErrorCode::SchemaError,
            "long schema: header must be journal,category,census_year,target_year,"
            "citations,citable_items");
    return detail::parse_long(rows);
  }
  return detail::parse_wide(rows);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) raise(ErrorCode::IoError, "error reading '" + path.string() + "'");
  return text;
}

inline void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) raise(ErrorCode::IoError, "error writing '" + path.string() + "'");
}

inline Dataset parse_dataset_file(const std::filesystem::path& path, Schema schema) {
  return parse_dataset(read_file(path), schema);
}

/// Serializes a dataset back to delimited text; inverse of parse_dataset for
/// any valid dataset in canonical order.
inline std::string write_dataset(const Dataset& dataset, Schema schema) {
  std::string out;
  if (schema == Schema::long_csv) {
    std::vector<std::string> header(kLongHeader.begin(), kLongHeader.end());
    out += csv::join(header, ',');
    for (const auto& rec : dataset.records) {
      for (int j = 1; j <= rec.horizon(); ++j) {
        const std::vector<std::string> row = {
            rec.id,
            rec.category,
            std::to_string(rec.census_year),
            std::to_string(rec.census_year - j),
            std::to_string(rec.cit(j)),
            std::to_string(rec.art(j)),
        };
        out += csv::join(row, ',');
      }
    }
    return out;
  }
  if (dataset.empty())
    raise(ErrorCode::EmptyPayload, "wide serialization needs at least one record");
  std::vector<std::string> header = {"journal", "category", "census_year"};
  for (int k = 1; k <= dataset.horizon; ++k) header.push_back("cit_" + std::to_string(k));
  for (int k = 1; k <= dataset.horizon; ++k) header.push_back("art_" + std::to_string(k));
  out += csv::join(header, ',');
  for (const auto& rec : dataset.records) {
    std::vector<std::string> row = {rec.id, rec.category, std::to_string(rec.census_year)};
    for (int j = 1; j <= rec.horizon(); ++j) row.push_back(std::to_string(rec.cit(j)));
    for (int j = 1; j <= rec.horizon(); ++j) row.push_back(std::to_string(rec.art(j)));
    out += csv::join(row, ',');
  }
  return out;
}

namespace detail {

inline char delimiter_of(OutputFormat format) { return format == OutputFormat::tsv ? '\t' : ','; }

inline std::string ratio_cell(const IndicatorValue& v, int places) {
  return v.defined() ? csv::format_ratio(v.numerator, v.denominator, places) : "NA";
}

inline nlohmann::json value_json(const IndicatorValue& v) {
  nlohmann::json j;
  j["numerator"] = v.numerator;
  j["denominator"] = v.denominator;
  j["value"] = v.defined() ? nlohmann::json(v.value()) : nlohmann::json(nullptr);
  return j;
}

inline std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace detail

/// Indicator table for a dataset (one row per journal): R_1..R_h, 2M-JIF,
/// 5-JIF when the horizon allows, and the maturity time. 3-decimal fixed
/// point in csv/tsv, full precision in json.
inline std::string write_report(const Dataset& dataset, std::span<const IndicatorReport> reports,
                                OutputFormat format) {
  if (reports.empty()) raise(ErrorCode::EmptyPayload, "no indicator reports to write");
  if (reports.size() != dataset.records.size())
    throw std::invalid_argument("write_report: reports do not align with records");
  const int h = dataset.horizon - 1;
  const bool five = dataset.horizon >= 5;

  if (format == OutputFormat::json) {
    nlohmann::json doc;
    doc["census_year"] = dataset.census_year;
    doc["horizon"] = dataset.horizon;
    nlohmann::json journals = nlohmann::json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& rec = dataset.records[i];
      const auto& rep = reports[i];
      nlohmann::json j;
      j["journal"] = rep.journal_id;
      j["category"] = rec.category;
      nlohmann::json rolling = nlohmann::json::array();
      for (const auto& v : rep.rolling) rolling.push_back(detail::value_json(v));
      j["rolling"] = std::move(rolling);
      j["two_m_jif"] = detail::value_json(rep.two_m_jif);
      j["maturity_time"] =
          rep.maturity_time ? nlohmann::json(*rep.maturity_time) : nlohmann::json(nullptr);
      nlohmann::json fixed = nlohmann::json::object();
      for (const auto& [n, v] : rep.fixed) fixed[std::to_string(n)] = detail::value_json(v);
      j["fixed"] = std::move(fixed);
      journals.push_back(std::move(j));
    }
    doc["journals"] = std::move(journals);
    return detail::dump(doc);
  }

  const char delim = detail::delimiter_of(format);
  std::vector<std::string> header = {"journal", "category"};
  for (int j = 1; j <= h; ++j) header.push_back("R_" + std::to_string(j));
  header.emplace_back("2M-JIF");
  if (five) header.emplace_back("5-JIF");
  header.emplace_back("maturity_time");
  std::string out = csv::join(header, delim);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& rec = dataset.records[i];
    const auto& rep = reports[i];
    std::vector<std::string> row = {rep.journal_id, rec.category};
    for (const auto& v : rep.rolling) row.push_back(detail::ratio_cell(v, 3));
    row.push_back(detail::ratio_cell(rep.two_m_jif, 3));
    if (five) row.push_back(detail::ratio_cell(rep.fixed.at(5), 3));
    row.push_back(rep.maturity_time ? std::to_string(*rep.maturity_time) : "NA");
    out += csv::join(row, delim);
  }
  return out;
}

/// One category's correlation matrix over a fixed indicator ordering.
/// NaN cells mean the pair was not computable (too few journals or a constant
/// column) and render as NA / null.
struct CorrelationBlock {
  std::string category;
  std::vector<std::string> indicator_names;
  std::vector<std::vector<double>> matrix;
};

inline std::string write_report(std::span<const CorrelationBlock> blocks, OutputFormat format,
                                std::string_view method) {
  if (blocks.empty()) raise(ErrorCode::EmptyPayload, "no correlation blocks to write");
  if (format == OutputFormat::json) {
    nlohmann::json doc;
    doc["method"] = std::string(method);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& block : blocks) {
      nlohmann::json b;
      b["category"] = block.category;
      b["indicators"] = block.indicator_names;
      b["matrix"] = block.matrix;  // NaN serializes as null
      arr.push_back(std::move(b));
    }
    doc["blocks"] = std::move(arr);
    return detail::dump(doc);
  }
  const char delim = detail::delimiter_of(format);
  const std::vector<std::string> header = {"category", "indicator_a", "indicator_b",
                                           "correlation"};
  std::string out = csv::join(header, delim);
  for (const auto& block : blocks) {
    for (std::size_t i = 0; i < block.indicator_names.size(); ++i) {
      for (std::size_t j = i; j < block.indicator_names.size(); ++j) {
        const double r = block.matrix[i][j];
        const std::vector<std::string> row = {block.category, block.indicator_names[i],
                                              block.indicator_names[j],
                                              std::isnan(r) ? "NA" : csv::format_fixed(r, 2)};
        out += csv::join(row, delim);
      }
    }
  }
  return out;
}

/// Per-category summaries followed by the maturity tallies (pooled row
/// included by the caller). csv/tsv renders the two tables back to back,
/// separated by a blank line.
inline std::string write_report(std::span<const GroupSummary> summaries,
                                std::span<const MaturityTally> tallies, OutputFormat format,
                                std::string_view sd_convention) {
  if (summaries.empty() && tallies.empty())
    raise(ErrorCode::EmptyPayload, "nothing to summarize");
  if (format == OutputFormat::json) {
    nlohmann::json doc;
    doc["sd_convention"] = std::string(sd_convention);
    nlohmann::json s = nlohmann::json::array();
    for (const auto& g : summaries) {
      nlohmann::json j;
      j["category"] = g.category;
      j["indicator"] = g.indicator_name;
      j["count"] = g.count;
      j["excluded"] = g.excluded;
      j["median"] = g.median;
      j["mean"] = g.mean;
      j["sd"] = g.sd;
      s.push_back(std::move(j));
    }
    doc["summaries"] = std::move(s);
    nlohmann::json t = nlohmann::json::array();
    for (const auto& tally : tallies) {
      nlohmann::json j;
      j["category"] = tally.category;
      j["excluded"] = tally.excluded;
      nlohmann::json bins = nlohmann::json::array();
      for (const auto& [window, count] : tally.counts) {
        nlohmann::json bin;
        bin["window_j"] = window;
        bin["maturity_time"] = window + 1;
        bin["count"] = count;
        bin["percent"] = tally.percentages.at(window);
        bins.push_back(std::move(bin));
      }
      j["bins"] = std::move(bins);
      t.push_back(std::move(j));
    }
    doc["maturity_tally"] = std::move(t);
    return detail::dump(doc);
  }
  const char delim = detail::delimiter_of(format);
  std::string out;
  if (!summaries.empty()) {
    const std::vector<std::string> header = {"category", "indicator", "count", "excluded",
                                             "median",   "mean",      "sd"};
    out += csv::join(header, delim);
    for (const auto& g : summaries) {
      const std::vector<std::string> row = {
          g.category,          g.indicator_name,           std::to_string(g.count),
          std::to_string(g.excluded), csv::format_fixed(g.median, 3),
          csv::format_fixed(g.mean, 3),  csv::format_fixed(g.sd, 3)};
      out += csv::join(row, delim);
    }
  }
  if (!tallies.empty()) {
    if (!out.empty()) out += '\n';
    const std::vector<std::string> header = {"category", "window_j", "maturity_time",
                                             "count",    "percent",  "excluded"};
    out += csv::join(header, delim);
    for (const auto& tally : tallies) {
      for (const auto& [window, count] : tally.counts) {
        const std::vector<std::string> row = {
            tally.category,
            std::to_string(window),
            std::to_string(window + 1),
            std::to_string(count),
            csv::format_fixed(tally.percentages.at(window), 1),
            std::to_string(tally.excluded)};
        out += csv::join(row, delim);
      }
    }
  }
  return out;
}

/// One row per indicator with the population-divisor decomposition. The
/// divisor convention is stated in a leading comment line (csv/tsv) or a
/// `divisors` field (json). An infinite ratio renders as `inf` / null.
inline std::string write_report(std::span<const VarianceDecomposition> decompositions,
                                OutputFormat format) {
  if (decompositions.empty()) raise(ErrorCode::EmptyPayload, "no variance rows to write");
  if (format == OutputFormat::json) {
    nlohmann::json doc;
    doc["divisors"] = "population";
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : decompositions) {
      nlohmann::json j;
      j["indicator"] = d.indicator_name;
      j["categories"] = d.group_count;
      j["journals"] = d.value_count;
      j["excluded"] = d.excluded;
      j["grand_mean"] = d.grand_mean;
      j["within_group_variance"] = d.within_group_variance;
      j["between_group_variance"] = d.between_group_variance;
      j["total_variance"] = d.total_variance;
      j["reduction"] = d.reduction;
      j["ratio"] = std::isfinite(d.ratio) ? nlohmann::json(d.ratio) : nlohmann::json(nullptr);
      arr.push_back(std::move(j));
    }
    doc["indicators"] = std::move(arr);
    return detail::dump(doc);
  }
  const char delim = detail::delimiter_of(format);
  std::string out = "# variance divisors: population (N)\n";
  const std::vector<std::string> header = {
      "indicator",        "categories",            "journals", "excluded",
      "grand_mean",       "within_group_variance", "between_group_variance",
      "total_variance",   "reduction",             "ratio"};
  out += csv::join(header, delim);
  for (const auto& d : decompositions) {
    std::string ratio;
    if (std::isnan(d.ratio))
      ratio = "NA";
    else if (std::isinf(d.ratio))
      ratio = "inf";
    else
      ratio = csv::format_fixed(d.ratio, 3);
    const std::vector<std::string> row = {d.indicator_name,
                                          std::to_string(d.group_count),
                                          std::to_string(d.value_count),
                                          std::to_string(d.excluded),
                                          csv::format_fixed(d.grand_mean, 3),
                                          csv::format_fixed(d.within_group_variance, 3),
                                          csv::format_fixed(d.between_group_variance, 3),
                                          csv::format_fixed(d.total_variance, 3),
                                          csv::format_fixed(d.reduction, 3),
                                          ratio};
    out += csv::join(row, delim);
  }
  return out;
}

/// Citation-age rows for the selected records (dataset order).
inline std::string write_profiles(const Dataset& dataset, std::span<const std::size_t> indices,
                                  OutputFormat format) {
  if (indices.empty()) raise(ErrorCode::EmptyPayload, "no journals to profile");
  if (format == OutputFormat::json) {
    nlohmann::json doc;
    doc["census_year"] = dataset.census_year;
    nlohmann::json arr = nlohmann::json::array();
    for (const std::size_t i : indices) {
      const auto& rec = dataset.records.at(i);
      nlohmann::json j;
      j["journal"] = rec.id;
      j["category"] = rec.category;
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : citation_age_profile(rec)) {
        nlohmann::json r;
        r["age_years"] = row.age_years;
        r["citations"] = row.citations;
        r["citable_items"] = row.citable_items;
        r["per_item_rate"] = row.per_item_rate.defined()
                                 ? nlohmann::json(row.per_item_rate.value())
                                 : nlohmann::json(nullptr);
        rows.push_back(std::move(r));
      }
      j["rows"] = std::move(rows);
      arr.push_back(std::move(j));
    }
    doc["journals"] = std::move(arr);
    return detail::dump(doc);
  }
  const char delim = detail::delimiter_of(format);
  const std::vector<std::string> header = {"journal", "age_years", "citations", "citable_items",
                                           "per_item_rate"};
  std::string out = csv::join(header, delim);
  for (const std::size_t i : indices) {
    const auto& rec = dataset.records.at(i);
    for (const auto& row : citation_age_profile(rec)) {
      const std::vector<std::string> cells = {rec.id, std::to_string(row.age_years),
                                              std::to_string(row.citations),
                                              std::to_string(row.citable_items),
                                              detail::ratio_cell(row.per_item_rate, 3)};
      out += csv::join(cells, delim);
    }
  }
  return out;
}

/// Parsed form of the json report document, for round-trips and downstream
/// tooling.
struct ReportRow {
  std::string category;
  IndicatorReport report;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ReportSet {
  int census_year = 0;
  int horizon = 0;
  std::vector<ReportRow> rows;

  friend bool operator==(const ReportSet&, const ReportSet&) = default;
};

namespace detail {

inline IndicatorValue value_from_json(const nlohmann::json& j) {
  IndicatorValue v;
  v.numerator = j.at("numerator").get<Count>();
  v.denominator = j.at("denominator").get<Count>();
  return v;
}

}  // namespace detail

inline ReportSet parse_report_json(std::string_view text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) raise(ErrorCode::ParseError, "malformed json report document");
  try {
    ReportSet set;
    set.census_year = doc.at("census_year").get<int>();
    set.horizon = doc.at("horizon").get<int>();
    for (const auto& j : doc.at("journals")) {
      ReportRow row;
      row.category = j.at("category").get<std::string>();
      row.report.journal_id = j.at("journal").get<std::string>();
      for (const auto& v : j.at("rolling"))
        row.report.rolling.push_back(detail::value_from_json(v));
      row.report.two_m_jif = detail::value_from_json(j.at("two_m_jif"));
      if (!j.at("maturity_time").is_null())
        row.report.maturity_time = j.at("maturity_time").get<int>();
      for (const auto& [key, v] : j.at("fixed").items()) {
        const auto n = csv::to_int(key);
        if (!n) raise(ErrorCode::ParseError, "bad fixed-window key '" + key + "'");
        row.report.fixed[static_cast<int>(*n)] = detail::value_from_json(v);
      }
      set.rows.push_back(std::move(row));
    }
    return set;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ParseError, std::string("json report document: ") + e.what());
  }
}

}  // namespace jifkit
