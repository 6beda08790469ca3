#pragma once
#include <iosfwd>
#include <string>

#include "lct/engine.hpp"

namespace lct::io {

// 17 significant digits: values survive a write/read round trip bit-exactly.
std::string format_double(double v);

// header "x,re,im" (line grids) or "r,re,im" (radial grids)
void write_sampled(std::ostream& os, const eng::SampledFunction& f);
eng::SampledFunction read_sampled(std::istream& is);  // throws ParseError

// header "r,re_p,im_p,re_m,im_m"
void write_two_component(std::ostream& os, const eng::TwoComponentSampled& f);
eng::TwoComponentSampled read_two_component(std::istream& is);

std::string report_json(const eng::TransformReport& rep);

}  // namespace lct::io
