#pragma once

#include <ostream>
#include <vector>

#include <json.hpp>

#include "echlat/embed.hpp"

namespace echlat::cli {

struct CsvOptions {
  unsigned digits = 12;
  bool exact = false;
};

void write_staircase_csv(std::ostream& os, const std::vector<StaircaseRow>& rows, const CsvOptions& opts);

// Closed-form polyline and volume curve over the sample grid.
void write_staircase_svg(std::ostream& os, const StairParams& P, const std::vector<StaircaseRow>& rows);

nlohmann::ordered_json to_json(const QuadraticNumber& x, unsigned digits);
nlohmann::ordered_json to_json(const CFunResult& r, unsigned digits);
nlohmann::ordered_json to_json(const EmbedDecision& d);
nlohmann::ordered_json staircase_json(const std::vector<StaircaseRow>& rows, unsigned digits);

}  // namespace echlat::cli
