#pragma once

// Shared fixture: a 24-journal sample from the 2011 JCR across eight
// categories (census 2011, five target years), its expected indicator table
// at 3 decimals, and deterministic random-input generators for the property
// suites. The embedded csv must stay byte-identical to
// data/jcr2011_sample24.csv; a test asserts that.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "jifkit/jifkit.hpp"

namespace fixture {

inline constexpr std::string_view kWideCsv =
    R"(journal,category,census_year,cit_1,cit_2,cit_3,cit_4,cit_5,art_1,art_2,art_3,art_4,art_5
AIAA J,EA,2011,239,354,474,418,467,275,286,301,311,356
AM NAT,E,2011,663,1052,1028,1159,1003,171,192,190,197,179
ANN NY ACAD SCI,MS,2011,2505,3382,3827,2947,3193,702,1164,975,1034,1415
ASTRON ASTROPHYS,A&A,2011,8657,8330,6992,7174,6270,1916,1787,1789,1977,1935
ASTROPHYS J,A&A,2011,14641,17267,12160,11738,10412,2501,2796,2128,2848,2707
BIOL PHILOS,H&PS,2011,66,29,39,59,49,39,40,36,35,28
BIOMETRIKA,B,2011,103,203,222,246,225,79,81,75,74,79
BRIT J PHILOS SCI,H&PS,2011,27,41,59,38,45,31,31,32,32,28
ECOLOGY,E,2011,1292,2073,2317,2227,2237,357,337,345,317,333
ECONOMETRICA,MIA,2011,136,239,228,326,373,65,61,47,51,53
EXP HEMATOL,MR&E,2011,308,485,627,644,570,127,146,172,214,194
FASEB J,B,2011,2348,2633,2845,2655,3200,462,410,412,388,486
HIST SCI,H&PS,2011,9,15,12,12,10,17,19,14,17,16
IEEE T AERO ELEC SYS,EA,2011,124,163,216,270,302,136,126,128,133,117
J ECONOMETRICS,MIA,2011,156,165,435,541,448,139,99,161,176,124
J GUID CONTROL DYNAM,EA,2011,151,213,261,268,208,187,200,183,203,177
LIFE SCI,MR&E,2011,538,675,883,1364,1919,228,252,289,498,702
P NATL ACAD SCI USA,MS,2011,31558,41331,39642,38547,35707,3764,3765,3508,3494,3306
P ROY SOC A-MATH PHY,MS,2011,397,346,323,453,359,183,194,175,197,196
PHYS REV D,A&A,2011,13330,12498,11508,8183,7528,2854,2813,2863,2268,2375
PLOS ONE,B,2011,22741,22780,15676,7041,765,6722,4403,2717,1230,137
STRUCT EQU MODELING,MIA,2011,99,193,98,308,374,31,31,30,29,28
TRENDS ECOL EVOL,E,2011,965,1476,1527,1468,1594,75,80,92,89,78
VACCINE,MR&E,2011,3729,4702,3787,3536,3182,1105,1134,905,1046,928
)";

/// Expected per-journal indicator table: R_1..R_4, 2M-JIF, 5-JIF at three
/// decimals and the exact maturity time. Verified independently against the
/// raw counts before the library existed.
struct ExpectedRow {
  const char* journal;
  const char* category;
  const char* cells[6];  // R_1, R_2, R_3, R_4, 2M-JIF, 5-JIF
  int maturity;
};

inline constexpr ExpectedRow kExpected[24] = {
    {"AIAA J", "EA", {"1.057", "1.411", "1.458", "1.327", "1.458", "1.277"}, 4},
    {"AM NAT", "E", {"4.725", "5.445", "5.651", "5.750", "5.750", "5.280"}, 5},
    {"ANN NY ACAD SCI", "MS", {"3.155", "3.370", "3.372", "2.507", "3.372", "2.997"}, 4},
    {"ASTRON ASTROPHYS", "A&A", {"4.587", "4.285", "3.762", "3.437", "4.587", "3.979"}, 2},
    {"ASTROPHYS J", "A&A", {"6.024", "5.976", "4.803", "3.987", "6.024", "5.102"}, 2},
    {"BIOL PHILOS", "H&PS", {"1.203", "0.895", "1.380", "1.714", "1.714", "1.360"}, 5},
    {"BIOMETRIKA", "B", {"1.913", "2.724", "3.141", "3.078", "3.141", "2.575"}, 4},
    {"BRIT J PHILOS SCI", "H&PS", {"1.097", "1.587", "1.516", "1.383", "1.587", "1.364"}, 3},
    {"ECOLOGY", "E", {"4.849", "6.437", "6.864", "6.868", "6.868", "6.007"}, 5},
    {"ECONOMETRICA", "MIA", {"2.976", "4.324", "5.653", "6.721", "6.721", "4.700"}, 5},
    {"EXP HEMATOL", "MR&E", {"2.905", "3.497", "3.293", "2.975", "3.497", "3.088"}, 3},
    {"FASEB J", "B", {"5.712", "6.664", "6.875", "6.699", "6.875", "6.340"}, 4},
    {"HIST SCI", "H&PS", {"0.667", "0.818", "0.774", "0.667", "0.818", "0.699"}, 3},
    {"IEEE T AERO ELEC SYS", "EA", {"1.095", "1.492", "1.862", "2.288", "2.288", "1.680"}, 5},
    {"J ECONOMETRICS", "MIA", {"1.349", "2.308", "2.896", "3.297", "3.297", "2.496"}, 5},
    {"J GUID CONTROL DYNAM", "EA", {"0.941", "1.238", "1.370", "1.253", "1.370", "1.159"}, 4},
    {"LIFE SCI", "MR&E", {"2.527", "2.880", "2.855", "2.736", "2.880", "2.732"}, 3},
    {"P NATL ACAD SCI USA", "MS", {"9.681", "11.133", "11.167", "10.920", "11.167", "10.472"}, 4},
    {"P ROY SOC A-MATH PHY", "MS", {"1.971", "1.813", "2.086", "2.066", "2.086", "1.987"}, 4},
    {"PHYS REV D", "A&A", {"4.558", "4.229", "3.838", "3.384", "4.558", "4.027"}, 2},
    {"PLOS ONE", "B", {"4.092", "5.401", "5.756", "5.710", "5.756", "4.537"}, 4},
    {"STRUCT EQU MODELING", "MIA", {"4.710", "4.770", "6.881", "11.965", "11.965", "7.195"}, 5},
    {"TRENDS ECOL EVOL", "E", {"15.748", "17.459", "16.547", "18.335", "18.335", "16.981"}, 5},
    {"VACCINE", "MR&E", {"3.766", "4.163", "3.753", "3.403", "4.163", "3.700"}, 3},
};

/// Pooled maturity tally of the fixture, keyed by window index j.
/// maturity 2 x3, 3 x5, 4 x8, 5 x8 — counted from the expected table above.
inline constexpr std::pair<int, std::size_t> kPooledTally[4] = {
    {1, 3}, {2, 5}, {3, 8}, {4, 8}};

inline jifkit::Dataset dataset() {
  return jifkit::parse_dataset(kWideCsv, jifkit::Schema::wide_csv);
}

inline jifkit::JournalRecord record(const std::string& id) {
  for (const auto& rec : dataset().records)
    if (rec.id == id) return rec;
  throw std::runtime_error("fixture journal not found: " + id);
}

// ---------------------------------------------------------------------------
// Deterministic generators. Engine output is reduced by modulo so the streams
// are identical on every platform; the slight bias is irrelevant here.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  double real(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + unit * (hi - lo);
  }

  bool chance(double p) { return real(0.0, 1.0) < p; }

 private:
  std::mt19937_64 engine_;
};

/// A valid record with horizon in [min_horizon, max_horizon] and counts in
/// [0, max_count]. zero_item_rate injects empty publication years so some
/// windows go UNDEFINED.
inline jifkit::JournalRecord random_record(Rng& rng, int min_horizon = 2, int max_horizon = 8,
                                           jifkit::Count max_count = 1000,
                                           double zero_item_rate = 0.15) {
  jifkit::JournalRecord rec;
  rec.id = "J" + std::to_string(rng.uniform(0, 999999));
  rec.category = "C" + std::to_string(rng.uniform(0, 9));
  rec.census_year = static_cast<int>(rng.uniform(1980, 2025));
  const int horizon = static_cast<int>(rng.uniform(min_horizon, max_horizon));
  for (int j = 0; j < horizon; ++j) {
    rec.citations.push_back(rng.uniform(0, max_count));
    rec.citable_items.push_back(rng.chance(zero_item_rate) ? 0 : rng.uniform(1, max_count));
  }
  return jifkit::validate_record(std::move(rec));
}

/// A valid dataset with ids already in canonical (lexicographic) order.
inline jifkit::Dataset random_dataset(Rng& rng, std::size_t max_records = 12) {
  const int census = static_cast<int>(rng.uniform(1990, 2024));
  const int horizon = static_cast<int>(rng.uniform(2, 7));
  const std::size_t count = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_records)));
  static const char* const kCategories[] = {"A&A", "B", "E,co", "H \"PS\"", "MIA"};
  std::vector<jifkit::JournalRecord> records;
  for (std::size_t i = 0; i < count; ++i) {
    jifkit::JournalRecord rec;
    rec.id = "J" + std::string(1, static_cast<char>('A' + (i / 26) % 26)) +
             std::string(1, static_cast<char>('A' + i % 26));
    if (rng.chance(0.2)) rec.id += ", PART " + std::to_string(rng.uniform(1, 9));
    if (rng.chance(0.1)) rec.id += " \"Q\"";
    rec.category = kCategories[static_cast<std::size_t>(rng.uniform(0, 4))];
    rec.census_year = census;
    for (int j = 0; j < horizon; ++j) {
      rec.citations.push_back(rng.uniform(0, 99999));
      rec.citable_items.push_back(rng.chance(0.1) ? 0 : rng.uniform(1, 9999));
    }
    records.push_back(std::move(rec));
  }
  return jifkit::make_dataset(std::move(records));
}

inline bool rel_close(double a, double b, double tol) {
  if (a == b) return true;
  const double diff = a > b ? a - b : b - a;
  const double mag = std::max(std::abs(a), std::abs(b));
  return diff <= tol * std::max(mag, 1.0);
}

}  // namespace fixture
