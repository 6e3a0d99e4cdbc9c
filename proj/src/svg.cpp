#include "sqsq/svg.hpp"

#include <cmath>
#include <sstream>

#include "sqsq/errors.hpp"

namespace sqsq {

namespace {

// Fixed-format number: trims trailing zeros so output is locale-proof and
// byte-stable.
std::string num(double x) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << x;
    std::string s = os.str();
    while (s.find('.') != std::string::npos && (s.back() == '0' || s.back() == '.')) {
        const char c = s.back();
        s.pop_back();
        if (c == '.') break;
    }
    return s;
}

}  // namespace

std::string render_svg(const Dissection& d, const SvgOptions& opt) {
    require_valid(d);
    const double k = opt.scale;
    const double margin = opt.stroke;
    const double w = d.width * k + 2 * margin;
    const double h = d.height * k + 2 * margin;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w)
       << "\" height=\"" << num(h) << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n";
    auto rect = [&](double x, double y, double rw, double rh) {
        os << "  <rect x=\"" << num(x + margin) << "\" y=\"" << num(y + margin) << "\" width=\""
           << num(rw) << "\" height=\"" << num(rh) << "\" fill=\"" << opt.fill << "\" stroke=\""
           << opt.stroke_color << "\" stroke-width=\"" << num(opt.stroke) << "\"/>\n";
    };
    rect(0, 0, d.width * k, d.height * k);
    for (const Element& e : d.elements) rect(e.x * k, e.y * k, e.size * k, e.size * k);
    if (opt.labels) {
        for (const Element& e : d.elements) {
            const double cx = (e.x + e.size / 2.0) * k + margin;
            const double cy = (e.y + e.size / 2.0) * k + margin;
            const double fs = opt.font_size > 0 ? opt.font_size
                                                : std::max(1.0, e.size * k * 0.35);
            os << "  <text x=\"" << num(cx) << "\" y=\"" << num(cy) << "\" font-size=\"" << num(fs)
               << "\" font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"central\">"
               << e.size << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace sqsq
