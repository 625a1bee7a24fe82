#pragma once

#include <cstdlib>
#include <iostream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "jifkit/ingest.hpp"

namespace jifkit::cli {

/// Everything one invocation needs. An empty `indicators` list means all of
/// R_1..R_h, 2M-JIF, and 5-JIF when the horizon allows; an empty `output`
/// means standard output.
struct RunConfig {
  std::string input;
  Schema schema = Schema::long_csv;
  OutputFormat format = OutputFormat::csv;
  std::string output;
  std::vector<std::string> indicators;
  std::string group_by = "category";
  CorrelationMethod method = CorrelationMethod::pearson;
  SdConvention sd = SdConvention::sample;
  std::string journal;
};

namespace detail {

inline bool use_color(const std::ostream& err) {
  if (std::getenv("JIFKIT_NO_COLOR") != nullptr) return false;
  return &err == &std::cerr && ::isatty(2) != 0;
}

inline void diagnostic(std::ostream& err, const std::string& message) {
  if (use_color(err))
    err << "\x1b[31mjifkit: error:\x1b[0m " << message << "\n";
  else
    err << "jifkit: error: " << message << "\n";
}

inline std::vector<IndicatorReport> reports_for(const Dataset& dataset) {
  std::vector<IndicatorReport> out;
  out.reserve(dataset.records.size());
  for (const auto& rec : dataset.records) out.push_back(report(rec));
  return out;
}

inline Dataset subset_by_category(const Dataset& dataset, const std::string& category) {
  std::vector<JournalRecord> records;
  for (const auto& rec : dataset.records)
    if (rec.category == category) records.push_back(rec);
  return make_dataset(std::move(records));
}

/// Pairwise correlations over R_1..R_h and 2M-JIF; pairs that cannot be
/// computed (too few journals, constant column) become NaN cells instead of
/// failing the whole command.
inline CorrelationBlock correlation_block(std::string label, const Dataset& dataset,
                                          CorrelationMethod method) {
  const auto reports = reports_for(dataset);
  const auto columns = indicator_columns(dataset, reports, /*include_five_jif=*/false);
  CorrelationBlock block;
  block.category = std::move(label);
  for (const auto& col : columns) block.indicator_names.push_back(col.indicator_name);
  const std::size_t k = columns.size();
  block.matrix.assign(k, std::vector<double>(k, std::numeric_limits<double>::quiet_NaN()));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      try {
        block.matrix[i][j] = block.matrix[j][i] = correlation(columns[i], columns[j], method);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InsufficientData && e.code() != ErrorCode::ZeroVariance)
          throw;
      }
    }
  }
  return block;
}

}  // namespace detail

inline std::string run_compute(const RunConfig& cfg) {
  const Dataset ds = parse_dataset_file(cfg.input, cfg.schema);
  const auto reports = detail::reports_for(ds);
  return write_report(ds, reports, cfg.format);
}

inline std::string run_correlate(const RunConfig& cfg) {
  const Dataset ds = parse_dataset_file(cfg.input, cfg.schema);
  std::vector<CorrelationBlock> blocks;
  for (const auto& category : ds.categories())
    blocks.push_back(
        detail::correlation_block(category, detail::subset_by_category(ds, category), cfg.method));
  blocks.push_back(detail::correlation_block("Total", ds, cfg.method));
  const char* method = cfg.method == CorrelationMethod::pearson ? "pearson" : "spearman";
  return write_report(blocks, cfg.format, method);
}

inline std::string run_summarize(const RunConfig& cfg) {
  const Dataset ds = parse_dataset_file(cfg.input, cfg.schema);
  const auto reports = detail::reports_for(ds);
  const Grouping grouping = ds.grouping();
  const auto columns = indicator_columns(ds, reports, /*include_five_jif=*/true);

  std::vector<std::vector<GroupSummary>> per_column;
  per_column.reserve(columns.size());
  for (const auto& col : columns) per_column.push_back(group_summary(col, grouping, cfg.sd));
  // regroup category-major so each category's indicators sit together
  std::vector<GroupSummary> ordered;
  if (!per_column.empty()) {
    const std::size_t n_categories = per_column.front().size();
    for (std::size_t c = 0; c < n_categories; ++c)
      for (const auto& col : per_column) ordered.push_back(col[c]);
  }

  auto tallies = maturity_tally(reports, grouping);
  if (!tallies.empty()) tallies.push_back(pool_tallies(tallies));
  const char* sd = cfg.sd == SdConvention::sample ? "sample" : "population";
  return write_report(ordered, tallies, cfg.format, sd);
}

inline std::string run_variance(const RunConfig& cfg) {
  const Dataset ds = parse_dataset_file(cfg.input, cfg.schema);
  const auto reports = detail::reports_for(ds);
  const Grouping grouping = ds.grouping();
  const auto columns = indicator_columns(ds, reports, /*include_five_jif=*/true);
  std::vector<VarianceDecomposition> rows;
  rows.reserve(columns.size());
  for (const auto& col : columns) rows.push_back(variance_decomposition(col, grouping));
  return write_report(rows, cfg.format);
}

inline std::string run_profile(const RunConfig& cfg) {
  const Dataset ds = parse_dataset_file(cfg.input, cfg.schema);
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < ds.records.size(); ++i)
    if (cfg.journal.empty() || ds.records[i].id == cfg.journal) indices.push_back(i);
  if (indices.empty()) {
    if (cfg.journal.empty()) raise(ErrorCode::EmptyPayload, "no journals in dataset");
    raise(ErrorCode::EmptyPayload, "journal '" + cfg.journal + "' not found in dataset");
  }
  return write_profiles(ds, indices, cfg.format);
}

/// Entry point shared by the binary and the tests: argv-style arguments
/// without the program name. Returns the process exit status; 0 iff nothing
/// was diagnosed.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed- and variable-window journal impact indicators"};
  app.name("jifkit");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string schema = "long";
  std::string format = "csv";
  std::string method = "pearson";
  std::string sd = "sample";

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", cfg.input, "input dataset path")->required();
    cmd->add_option("--schema", schema, "input schema")
        ->check(CLI::IsMember({"long", "wide"}))
        ->capture_default_str();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "tsv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", cfg.output, "output path (default: standard output)");
  };
  const auto add_group_by = [&](CLI::App* cmd) {
    cmd->add_option("--group-by", cfg.group_by, "grouping key")
        ->check(CLI::IsMember({"category"}))
        ->capture_default_str();
  };

  CLI::App* compute = app.add_subcommand("compute", "per-journal impact indicators");
  add_common(compute);

  CLI::App* correlate =
      app.add_subcommand("correlate", "indicator correlation matrices per category plus Total");
  add_common(correlate);
  add_group_by(correlate);
  correlate->add_option("--method", method, "correlation method")
      ->check(CLI::IsMember({"pearson", "spearman"}))
      ->capture_default_str();

  CLI::App* summarize =
      app.add_subcommand("summarize", "per-category summaries and maturity tallies");
  add_common(summarize);
  add_group_by(summarize);
  summarize->add_option("--sd", sd, "standard deviation divisor")
      ->check(CLI::IsMember({"sample", "population"}))
      ->capture_default_str();

  CLI::App* variance =
      app.add_subcommand("variance", "within/between-category variance decomposition");
  add_common(variance);
  add_group_by(variance);

  CLI::App* profile = app.add_subcommand("profile", "citation-age rows for plotting");
  add_common(profile);
  profile->add_option("--journal", cfg.journal, "restrict to one journal id");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("jifkit");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    cfg.schema = schema == "long" ? Schema::long_csv : Schema::wide_csv;
    cfg.format = format == "csv"   ? OutputFormat::csv
                 : format == "tsv" ? OutputFormat::tsv
                                   : OutputFormat::json;
    cfg.method =
        method == "pearson" ? CorrelationMethod::pearson : CorrelationMethod::spearman;
    cfg.sd = sd == "sample" ? SdConvention::sample : SdConvention::population;

    std::string payload;
    if (compute->parsed())
      payload = run_compute(cfg);
    else if (correlate->parsed())
      payload = run_correlate(cfg);
    else if (summarize->parsed())
      payload = run_summarize(cfg);
    else if (variance->parsed())
      payload = run_variance(cfg);
    else
      payload = run_profile(cfg);

    if (!cfg.output.empty())
      write_file(cfg.output, payload);
    else
      out << payload;
    return 0;
  } catch (const Error& e) {
    detail::diagnostic(err, e.what());
    return 1;
  } catch (const std::exception& e) {
    detail::diagnostic(err, e.what());
    return 1;
  }
}

}  // namespace jifkit::cli
