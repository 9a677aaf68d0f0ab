#pragma once

#include <sstream>
#include <string>

#include "thompson/element.hpp"

namespace thompson {

// SVG rendering of the graph of an element on [0,1]^2, in the style of the
// usual square diagrams: the diagonal for reference, the graph as a polyline,
// breakpoints marked. Coordinates go through double here and nowhere else.
inline std::string render_svg(const FElement& f) {
    constexpr double side = 480.0;
    constexpr double margin = 24.0;
    const double span = side - 2 * margin;
    auto px = [&](double t) { return margin + span * t; };
    auto py = [&](double t) { return side - margin - span * t; }; // flip: SVG y grows downward

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
        << "\" viewBox=\"0 0 " << side << " " << side << "\">\n";
    svg << "  <rect x=\"" << px(0) << "\" y=\"" << py(1) << "\" width=\"" << span << "\" height=\""
        << span << "\" fill=\"white\" stroke=\"#444\"/>\n";
    svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1) << "\" y2=\""
        << py(1) << "\" stroke=\"#bbb\" stroke-dasharray=\"4 4\"/>\n";

    svg << "  <polyline fill=\"none\" stroke=\"#0b62a4\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const Breakpoint& p : f.breakpoints()) {
        if (!first) svg << ' ';
        svg << px(p.x.to_double()) << ',' << py(p.y.to_double());
        first = false;
    }
    svg << "\"/>\n";

    for (const Breakpoint& p : f.breakpoints()) {
        svg << "  <circle cx=\"" << px(p.x.to_double()) << "\" cy=\"" << py(p.y.to_double())
            << "\" r=\"3.5\" fill=\"#0b62a4\"><title>(" << to_string(p.x) << ", " << to_string(p.y)
            << ")</title></circle>\n";
    }

    svg << "  <text x=\"" << px(0) - 14 << "\" y=\"" << py(0) + 14 << "\" font-size=\"12\">0</text>\n";
    svg << "  <text x=\"" << px(1) + 4 << "\" y=\"" << py(0) + 14 << "\" font-size=\"12\">1</text>\n";
    svg << "  <text x=\"" << px(0) - 14 << "\" y=\"" << py(1) + 4 << "\" font-size=\"12\">1</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace thompson
