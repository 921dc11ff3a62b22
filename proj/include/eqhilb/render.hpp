#pragma once

// ASCII and SVG pictures of colored Young diagrams with optional arrow overlays.

#include <algorithm>
#include <array>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "eqhilb/coloring.hpp"
#include "eqhilb/partition.hpp"
#include "eqhilb/tangent.hpp"

namespace eqhilb {

/// Residue as a single character: 0-9, then a-z, then '*'.
inline char residue_char(int s) {
    if (s < 10) return static_cast<char>('0' + s);
    if (s < 36) return static_cast<char>('a' + (s - 10));
    return '*';
}

inline std::string render_ascii_colored(const GroupParams& g, const Partition& p) {
    return render_ascii(p, [&](Box b) { return residue_char(color(g, b)); });
}

struct SvgOptions {
    int cell = 24;
    bool row0_at_bottom = true;
    bool labels = true;
};

namespace detail {
inline constexpr std::array<const char*, 12> kPalette = {
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#42d4f4", "#f032e6", "#bfef45", "#fabed4", "#469990", "#dcbeff"};

inline const char* fill_for(int residue) {
    return kPalette[static_cast<std::size_t>(residue) % kPalette.size()];
}

/// Draws one diagram into `out` with its lower-left lattice corner at (x0, y0).
inline void svg_diagram(std::ostringstream& out, const GroupParams& g, const Partition& p,
                        std::span<const Arrow> arrows, const SvgOptions& opt, int x0, int y0,
                        int height_cells) {
    const int c = opt.cell;
    auto px = [&](double i) { return x0 + i * c; };
    auto py = [&](double j) {
        return opt.row0_at_bottom ? y0 + (height_cells - j) * c : y0 + j * c;
    };
    for (Box b : p.boxes()) {
        const int s = color(g, b);
        const double top = opt.row0_at_bottom ? py(b.j + 1) : py(b.j);
        out << "<rect x=\"" << px(b.i) << "\" y=\"" << top << "\" width=\"" << c
            << "\" height=\"" << c << "\" fill=\"" << fill_for(s)
            << "\" stroke=\"#000\" stroke-width=\"1\"/>\n";
        if (opt.labels)
            out << "<text x=\"" << px(b.i + 0.5) << "\" y=\"" << (top + c * 0.68)
                << "\" font-size=\"" << c / 2 << "\" text-anchor=\"middle\">" << s << "</text>\n";
    }
    for (const Arrow& a : arrows) {
        const char* stroke = a.kind == ArrowKind::D ? "#000" : "#555";
        out << "<line x1=\"" << px(a.tail.i + 0.5) << "\" y1=\"" << py(a.tail.j + 0.5)
            << "\" x2=\"" << px(a.head.i + 0.5) << "\" y2=\"" << py(a.head.j + 0.5)
            << "\" stroke=\"" << stroke << "\" stroke-width=\"2\" marker-end=\"url(#head)\"/>\n";
    }
}

inline void svg_header(std::ostringstream& out, int width, int height) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" "
           "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\"/></marker></defs>\n";
}
}  // namespace detail

/// A single diagram; arrows (for example the invariant ones) are drawn from
/// tail cell center to head cell center.
inline std::string render_svg(const GroupParams& g, const Partition& p,
                              std::span<const Arrow> arrows = {}, SvgOptions opt = {}) {
    int w = p.num_cols() + 1;
    int h = p.num_rows() + 1;
    for (const Arrow& a : arrows) {
        w = std::max({w, a.tail.i + 1, a.head.i + 1});
        h = std::max({h, a.tail.j + 1, a.head.j + 1});
    }
    std::ostringstream out;
    const int pad = opt.cell / 2;
    detail::svg_header(out, w * opt.cell + 2 * pad, h * opt.cell + 2 * pad);
    detail::svg_diagram(out, g, p, arrows, opt, pad, pad, h);
    out << "</svg>\n";
    return out.str();
}

/// Several diagrams side by side, bottoms aligned.
inline std::string render_svg_gallery(const GroupParams& g, std::span<const Partition> parts,
                                      SvgOptions opt = {}) {
    int h = 1;
    int w = 0;
    for (const auto& p : parts) {
        h = std::max(h, p.num_rows());
        w += std::max(p.num_cols(), 1) + 1;
    }
    std::ostringstream out;
    const int pad = opt.cell / 2;
    detail::svg_header(out, w * opt.cell + 2 * pad, h * opt.cell + 2 * pad);
    int x = pad;
    for (const auto& p : parts) {
        detail::svg_diagram(out, g, p, {}, opt, x, pad, h);
        x += (std::max(p.num_cols(), 1) + 1) * opt.cell;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace eqhilb
