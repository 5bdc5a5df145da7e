#include "emit.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace echlat::cli {

void write_staircase_csv(std::ostream& os, const std::vector<StaircaseRow>& rows, const CsvOptions& opts) {
  os << "a,closed_form,oracle_lower,oracle_upper,volume";
  if (opts.exact) os << ",a_exact,closed_form_exact,oracle_lower_exact,oracle_upper_exact,volume_exact";
  os << '\n';
  for (const auto& r : rows) {
    os << QuadraticNumber(r.a).to_decimal(opts.digits) << ',' << QuadraticNumber(r.closed_form).to_decimal(opts.digits)
       << ',' << r.oracle.lower.to_decimal(opts.digits) << ',' << r.oracle.upper.to_decimal(opts.digits) << ','
       << r.volume.to_decimal(opts.digits);
    if (opts.exact) {
      os << ',' << r.a.to_string() << ',' << r.closed_form.to_string() << ',' << r.oracle.lower.to_string() << ','
         << r.oracle.upper.to_string() << ',' << r.volume.to_string();
    }
    os << '\n';
  }
}

void write_staircase_svg(std::ostream& os, const StairParams& P, const std::vector<StaircaseRow>& rows) {
  constexpr double width = 800;
  constexpr double height = 500;
  constexpr double margin = 50;
  double xmin = 1;
  double xmax = 1;
  double ymin = 1;
  double ymax = 1;
  for (const auto& r : rows) {
    xmax = std::max(xmax, r.a.to_double());
    ymax = std::max({ymax, r.closed_form.to_double(), r.volume.to_double()});
    ymin = std::min({ymin, r.volume.to_double()});
  }
  if (xmax <= xmin) xmax = xmin + 1;
  if (ymax <= ymin) ymax = ymin + 1;
  auto px = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin); };
  auto py = [&](double y) { return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin); };

  std::ostringstream stair;
  std::ostringstream vol;
  stair << std::fixed << std::setprecision(3);
  vol << std::fixed << std::setprecision(3);
  for (const auto& r : rows) {
    stair << px(r.a.to_double()) << ',' << py(r.closed_form.to_double()) << ' ';
    vol << px(r.a.to_double()) << ',' << py(r.volume.to_double()) << ' ';
  }
  os << std::fixed << std::setprecision(3);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
     << width << ' ' << height << "\">\n";
  os << "<title>c(a, " << P.k << "/" << P.l << ")</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
     << height - margin << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << width - margin << "\" y=\"" << height - margin / 3 << "\" text-anchor=\"end\">a = "
     << xmax << "</text>\n";
  os << "<text x=\"" << margin << "\" y=\"" << height - margin / 3 << "\">a = " << xmin << "</text>\n";
  os << "<text x=\"" << margin / 5 << "\" y=\"" << margin - 10 << "\">c = " << ymax << "</text>\n";
  os << "<polyline fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"4 3\" points=\"" << vol.str() << "\"/>\n";
  os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"" << stair.str() << "\"/>\n";
  os << "</svg>\n";
}

nlohmann::ordered_json to_json(const QuadraticNumber& x, unsigned digits) {
  return {{"exact", x.to_string()}, {"decimal", x.to_decimal(digits)}};
}

nlohmann::ordered_json to_json(const CFunResult& r, unsigned digits) {
  nlohmann::ordered_json j;
  j["lower"] = to_json(r.lower, digits);
  j["upper"] = to_json(r.upper, digits);
  j["attained_k"] = r.attained_k ? nlohmann::ordered_json(*r.attained_k) : nlohmann::ordered_json(nullptr);
  j["exact"] = r.exact;
  return j;
}

nlohmann::ordered_json to_json(const EmbedDecision& d) {
  nlohmann::ordered_json j;
  j["embeds"] = d.embeds;
  if (d.witness) {
    const auto& w = *d.witness;
    j["witness"] = {{"t", w.t.get_str()},
                    {"scale", w.scale.to_string()},
                    {"k", w.k.get_str()},
                    {"source_value", w.source_value.to_string()},
                    {"target_value", w.target_value.to_string()}};
  }
  return j;
}

nlohmann::ordered_json staircase_json(const std::vector<StaircaseRow>& rows, unsigned digits) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"a", r.a.to_string()},
                   {"closed_form", r.closed_form.to_string()},
                   {"oracle", to_json(r.oracle, digits)},
                   {"volume", to_json(r.volume, digits)},
                   {"inside", r.inside}});
  }
  return arr;
}

}  // namespace echlat::cli
