#ifndef OSLCM_SVG_HPP
#define OSLCM_SVG_HPP

#include <algorithm>
#include <sstream>
#include <string>

#include "oslcm/core.hpp"

namespace oslcm {

/// Straight-line drawing of the network: X on the top row at unit spacing,
/// Y on the bottom row at the positions induced by the order.
inline std::string render_svg(const two_layer_network &net, const y_order &order) {
    const auto rank = rank_of(net, order);

    const int spacing = 28;
    const int margin = 30;
    const int top = 40;
    const int bottom = 180;
    const int slots = std::max(std::max(net.x_count, net.y_count), 1);
    const int width = 2 * margin + spacing * (slots - 1);
    const int height = bottom + 40;

    const auto x_pos = [&](int x) { return margin + spacing * (x - 1); };
    const auto y_pos = [&](int y) { return margin + spacing * rank[y - 1]; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "  <g stroke=\"#555\" stroke-width=\"1\">\n";
    for (const edge e : net.edges)
        svg << "    <line x1=\"" << x_pos(e.x) << "\" y1=\"" << top << "\" x2=\"" << y_pos(e.y)
            << "\" y2=\"" << bottom << "\"/>\n";
    svg << "  </g>\n";
    svg << "  <g fill=\"#1f77b4\">\n";
    for (int x = 1; x <= net.x_count; ++x)
        svg << "    <circle cx=\"" << x_pos(x) << "\" cy=\"" << top << "\" r=\"4\"/>\n";
    svg << "  </g>\n";
    svg << "  <g fill=\"#d62728\">\n";
    for (int y = 1; y <= net.y_count; ++y)
        svg << "    <circle cx=\"" << y_pos(y) << "\" cy=\"" << bottom << "\" r=\"4\"/>\n";
    svg << "  </g>\n";
    svg << "  <g font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n";
    for (int x = 1; x <= net.x_count; ++x)
        svg << "    <text x=\"" << x_pos(x) << "\" y=\"" << top - 10 << "\">x" << x << "</text>\n";
    for (int y = 1; y <= net.y_count; ++y)
        svg << "    <text x=\"" << y_pos(y) << "\" y=\"" << bottom + 16 << "\">y" << y << "</text>\n";
    svg << "  </g>\n</svg>\n";
    return svg.str();
}

}  // namespace oslcm

#endif
