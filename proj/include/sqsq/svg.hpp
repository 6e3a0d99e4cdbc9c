#ifndef SQSQ_SVG_HPP
#define SQSQ_SVG_HPP

#include <string>

#include "sqsq/geometry.hpp"

namespace sqsq {

struct SvgOptions {
    double scale = 4.0;       // drawing units per dissection unit
    double stroke = 1.0;
    double font_size = 0.0;   // 0 = per-element automatic
    std::string fill = "white";
    std::string stroke_color = "black";
    bool labels = true;       // side length centered inside each element
};

// One outline rectangle plus one square per element, each with its size
// centered inside. Output bytes are deterministic for fixed input/options.
std::string render_svg(const Dissection& d, const SvgOptions& opt = {});

}  // namespace sqsq

#endif
