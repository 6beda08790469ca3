#include "lct/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lct/errors.hpp"

namespace lct::io {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_sampled(std::ostream& os, const eng::SampledFunction& f) {
  os << (f.grid.radial ? "r,re,im\n" : "x,re,im\n");
  for (int i = 0; i < f.grid.size(); ++i)
    os << format_double(f.grid.nodes[i]) << ',' << format_double(f.values[i].real())
       << ',' << format_double(f.values[i].imag()) << '\n';
}

namespace {

std::vector<double> parse_row(const std::string& line, int expected, int line_no) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stod(cell, &pos));
      if (pos != cell.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("bad numeric cell '" + cell + "'", line_no);
    }
  }
  if (static_cast<int>(out.size()) != expected)
    throw ParseError("expected " + std::to_string(expected) + " columns", line_no);
  return out;
}

eng::Grid grid_from_nodes(std::vector<double> nodes, bool radial) {
  // Signals arriving through files carry nodes only; trapezoid weights are
  // attached so norms and transforms remain computable.
  eng::Grid g;
  g.radial = radial;
  if (nodes.size() < 2) throw ParseError("need at least two samples", 0);
  for (size_t i = 1; i < nodes.size(); ++i)
    if (nodes[i] <= nodes[i - 1]) throw ParseError("nodes must be increasing", static_cast<int>(i + 2));
  g.weights.resize(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) {
    const double lo = (i == 0) ? nodes[0] : 0.5 * (nodes[i - 1] + nodes[i]);
    const double hi = (i + 1 == nodes.size()) ? nodes.back() : 0.5 * (nodes[i] + nodes[i + 1]);
    g.weights[i] = hi - lo;
  }
  g.xmin = radial ? 0.0 : nodes.front();
  g.xmax = nodes.back();
  g.nodes = std::move(nodes);
  return g;
}

}  // namespace

eng::SampledFunction read_sampled(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty input", 1);
  const bool radial = !line.empty() && line[0] == 'r';
  if (line != "r,re,im" && line != "x,re,im")
    throw ParseError("expected header r,re,im or x,re,im", 1);
  std::vector<double> nodes;
  std::vector<cplx> values;
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<double> row = parse_row(line, 3, line_no);
    nodes.push_back(row[0]);
    values.emplace_back(row[1], row[2]);
  }
  eng::SampledFunction f;
  f.grid = grid_from_nodes(std::move(nodes), radial);
  f.values = std::move(values);
  return f;
}

void write_two_component(std::ostream& os, const eng::TwoComponentSampled& f) {
  os << "r,re_p,im_p,re_m,im_m\n";
  for (int i = 0; i < f.grid.size(); ++i)
    os << format_double(f.grid.nodes[i]) << ',' << format_double(f.plus[i].real()) << ','
       << format_double(f.plus[i].imag()) << ',' << format_double(f.minus[i].real())
       << ',' << format_double(f.minus[i].imag()) << '\n';
}

eng::TwoComponentSampled read_two_component(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty input", 1);
  if (line != "r,re_p,im_p,re_m,im_m")
    throw ParseError("expected header r,re_p,im_p,re_m,im_m", 1);
  std::vector<double> nodes;
  std::vector<cplx> plus, minus;
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<double> row = parse_row(line, 5, line_no);
    nodes.push_back(row[0]);
    plus.emplace_back(row[1], row[2]);
    minus.emplace_back(row[3], row[4]);
  }
  eng::TwoComponentSampled f;
  f.grid = grid_from_nodes(std::move(nodes), true);
  f.plus = std::move(plus);
  f.minus = std::move(minus);
  return f;
}

std::string report_json(const eng::TransformReport& rep) {
  nlohmann::json j;
  j["schema"] = "lct-report/1";
  j["unitarityDefect"] = rep.unitarity_defect;
  j["compositionSign"] = rep.composition_sign == 0
                             ? "undetermined"
                             : (rep.composition_sign > 0 ? "+1" : "-1");
  j["maxAbsError"] = rep.max_abs_error;
  j["gridWarning"] = rep.grid_warning;
  j["notes"] = rep.notes;
  return j.dump(2);
}

}  // namespace lct::io
