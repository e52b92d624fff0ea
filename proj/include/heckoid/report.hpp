#pragma once

#include <string>
#include <vector>

#include "heckoid/candidate_search.hpp"
#include "heckoid/criterion.hpp"
#include "heckoid/farey.hpp"
#include "heckoid/slope_half.hpp"

namespace heckoid {

// Quotes a field when it holds a comma, quote or newline.
std::string csv_field(const std::string& s);
// Records of a CSV text; quoted fields may hold commas and doubled quotes.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

// "(p,q;r/s,n)_i".
GroupSymbol parse_symbol(const std::string& text);

inline constexpr const char* kSlopeHalfHeader =
    "index,symbol,field_discriminant,min_poly_string,min_poly_coeffs_json";

std::string slope_half_csv(const std::vector<SlopeHalfRow>& rows);
std::string slope_half_json(const std::vector<SlopeHalfRow>& rows);
// Both check that the string and coefficient columns agree.
std::vector<SlopeHalfRow> parse_slope_half_csv(const std::string& text);
std::vector<SlopeHalfRow> parse_slope_half_json(const std::string& text);

// Rows compared by symbol; "-" golden row missing, "+" extra row, "~" row
// whose discriminant or polynomial differs.
struct GoldenDiff {
  std::vector<std::string> lines;
  bool ok() const { return lines.empty(); }
};
GoldenDiff diff_slope_half(const std::vector<SlopeHalfRow>& got, const std::vector<SlopeHalfRow>& golden);

std::string criterion_json(const GammaCandidate& cand, int root_index, const CriterionReport& r);
std::string relator_json(Order p, Order q, const RelatorSearchResult& res);
// One line, no trailing newline.
std::string candidate_json(const CandidatePoint& c);
// Header re,im,degree,status.
std::string point_cloud_csv(const std::vector<CandidatePoint>& pts);

}  // namespace heckoid
