#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jifkit/model.hpp"

// Minimal comma-separated dialect shared by every schema in this project:
// UTF-8, mandatory header, comma delimiter, double-quoted fields (with ""
// escapes) taken verbatim, unquoted fields trimmed of surrounding spaces and
// tabs. Quoted fields may span lines. Parsing reports 1-based line numbers.
namespace jifkit::csv {

struct Row {
  std::size_t line = 0;  // physical line the row starts on
  std::vector<std::string> fields;
};

inline std::vector<Row> parse(std::string_view text) {
  std::vector<Row> rows;
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (text[i] == '\n') {  // blank line
      ++line;
      ++i;
      continue;
    }
    if (text[i] == '\r') {
      ++i;
      if (i < n && text[i] == '\n') ++i;
      ++line;
      continue;
    }
    Row row;
    row.line = line;
    bool row_done = false;
    while (!row_done) {
      while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
      std::string field;
      if (i < n && text[i] == '"') {
        ++i;
        for (;;) {
          if (i >= n)
            raise(ErrorCode::ParseError,
                  "line " + std::to_string(row.line) + ": unterminated quoted field");
          const char ch = text[i];
          if (ch == '"') {
            if (i + 1 < n && text[i + 1] == '"') {
              field += '"';
              i += 2;
            } else {
              ++i;
              break;
            }
          } else {
            if (ch == '\n') ++line;
            field += ch;
            ++i;
          }
        }
        while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
        if (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r')
          raise(ErrorCode::ParseError,
                "line " + std::to_string(line) + ": unexpected character after closing quote");
      } else {
        const std::size_t start = i;
        while (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') ++i;
        field.assign(text.substr(start, i - start));
        while (!field.empty() && (field.back() == ' ' || field.back() == '\t'))
          field.pop_back();
      }
      row.fields.push_back(std::move(field));
      if (i >= n) {
        row_done = true;
      } else if (text[i] == ',') {
        ++i;
      } else if (text[i] == '\n') {
        ++i;
        ++line;
        row_done = true;
      } else {  // '\r'
        ++i;
        if (i < n && text[i] == '\n') ++i;
        ++line;
        row_done = true;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string escape(std::string_view field, char delimiter) {
  const bool edge_ws = !field.empty() && (field.front() == ' ' || field.front() == '\t' ||
                                          field.back() == ' ' || field.back() == '\t');
  const bool special = field.find_first_of("\"\r\n") != std::string_view::npos ||
                       field.find(delimiter) != std::string_view::npos;
  if (!special && !edge_ws) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out += '"';
  for (const char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

inline std::string join(std::span<const std::string> fields, char delimiter) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += delimiter;
    out += escape(fields[i], delimiter);
  }
  out += '\n';
  return out;
}

/// Strict integer parse: the whole field must be one base-10 integer.
inline std::optional<long long> to_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  long long v = 0;
  const char* const first = s.data();
  const char* const last = first + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return v;
}

namespace detail {
inline constexpr long long kPow10[] = {1LL,
                                       10LL,
                                       100LL,
                                       1000LL,
                                       10000LL,
                                       100000LL,
                                       1000000LL,
                                       10000000LL,
                                       100000000LL,
                                       1000000000LL};

inline std::string digits_with_point(unsigned long long magnitude, int places, bool negative) {
  const auto scale = static_cast<unsigned long long>(kPow10[places]);
  std::string out;
  if (negative && magnitude != 0) out += '-';
  out += std::to_string(magnitude / scale);
  if (places > 0) {
    std::string frac = std::to_string(magnitude % scale);
    out += '.';
    out.append(static_cast<std::size_t>(places) - frac.size(), '0');
    out += frac;
  }
  return out;
}
}  // namespace detail

/// Fixed-point rendering with `places` decimals, halves away from zero.
/// The value must be finite and modest in magnitude; indicator-scale numbers.
inline std::string format_fixed(double v, int places) {
  const auto scaled = static_cast<double>(detail::kPow10[places]) * v;
  const long long rounded = std::llround(scaled);  // llround: halfway away from zero
  const bool negative = rounded < 0;
  const auto magnitude =
      negative ? -static_cast<unsigned long long>(rounded) : static_cast<unsigned long long>(rounded);
  return detail::digits_with_point(magnitude, places, negative);
}

/// Exact decimal rendering of an integer ratio, halves away from zero.
/// Never rounds through a double: correct even at exact decimal ties
/// (9/8 at two places is 1.13, not 1.12).
inline std::string format_ratio(Count numerator, Count denominator, int places) {
  const bool negative = (numerator < 0) != (denominator < 0);
  using Wide = unsigned __int128;
  const Wide num = numerator < 0 ? Wide(-(numerator + 1)) + 1 : Wide(numerator);
  const Wide den = denominator < 0 ? Wide(-(denominator + 1)) + 1 : Wide(denominator);
  Wide scaled = num * Wide(detail::kPow10[places]);
  Wide q = scaled / den;
  const Wide r = scaled % den;
  if (2 * r >= den) ++q;
  return detail::digits_with_point(static_cast<unsigned long long>(q), places, negative);
}

}  // namespace jifkit::csv
