#include "rrc/staircase_svg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rrc {

namespace {

constexpr long long kCell = 32;
constexpr long long kMargin = 48;

struct Frame {
    long long bound;  // lattice view spans [0, bound] in both directions
    long long px(long long x) const { return kMargin + x * kCell; }
    long long py(long long y) const { return kMargin + (bound - y) * kCell; }
};

// Closed staircase polygon of the region of an ideal, clipped to the frame.
std::string region_path(const Frame& f, const MonomialIdeal& ideal) {
    std::vector<ExpVec> gens = ideal.gens();
    std::sort(gens.begin(), gens.end());  // x ascending, y descending
    const long long top = f.bound;
    std::ostringstream p;
    p << "M" << f.px(gens.front()[0]) << " " << f.py(top);
    long long y = top;
    for (const auto& g : gens) {
        p << " L" << f.px(g[0]) << " " << f.py(y);
        y = g[1];
        p << " L" << f.px(g[0]) << " " << f.py(y);
    }
    p << " L" << f.px(top) << " " << f.py(y);
    p << " L" << f.px(top) << " " << f.py(top);
    p << " Z";
    return p.str();
}

void dots(std::ostringstream& os, const Frame& f, const MonomialIdeal& ideal,
          const char* fill) {
    for (const auto& g : ideal.gens())
        os << "  <circle cx=\"" << f.px(g[0]) << "\" cy=\"" << f.py(g[1])
           << "\" r=\"4\" fill=\"" << fill << "\"/>\n";
}

}  // namespace

std::string staircase_svg(const std::vector<std::string>& vars, const MonomialIdeal& input,
                          const MonomialIdeal& result) {
    if (input.nvars() != 2 || result.nvars() != 2)
        throw std::invalid_argument("staircase_svg: two-variable ideals only");

    long long maxc = 1;
    for (const auto* i : {&input, &result})
        for (const auto& g : i->gens())
            for (long long e : g) maxc = std::max(maxc, e);
    Frame f{maxc + 2};

    const long long size = kMargin + (f.bound + 1) * kCell + 12;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
       << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    os << "  <rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";

    os << "  <path d=\"" << region_path(f, result)
       << "\" fill=\"#bcd7ee\" stroke=\"#5b8db8\" stroke-width=\"1\"/>\n";
    os << "  <path d=\"" << region_path(f, input)
       << "\" fill=\"#4a7fab\" fill-opacity=\"0.55\" stroke=\"#1f4e79\" "
          "stroke-width=\"1\"/>\n";

    // axes with integer ticks
    os << "  <line x1=\"" << f.px(0) << "\" y1=\"" << f.py(0) << "\" x2=\""
       << f.px(f.bound) << "\" y2=\"" << f.py(0)
       << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    os << "  <line x1=\"" << f.px(0) << "\" y1=\"" << f.py(0) << "\" x2=\"" << f.px(0)
       << "\" y2=\"" << f.py(f.bound) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (long long t = 0; t <= f.bound; ++t) {
        os << "  <text x=\"" << f.px(t) << "\" y=\"" << f.py(0) + 18
           << "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"monospace\">" << t
           << "</text>\n";
        os << "  <text x=\"" << f.px(0) - 12 << "\" y=\"" << f.py(t) + 4
           << "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"monospace\">" << t
           << "</text>\n";
    }
    os << "  <text x=\"" << f.px(f.bound) << "\" y=\"" << f.py(0) + 36
       << "\" font-size=\"13\" text-anchor=\"end\" font-family=\"monospace\">" << vars[0]
       << " exponent</text>\n";
    os << "  <text x=\"" << f.px(0) - 32 << "\" y=\"" << f.py(f.bound) - 14
       << "\" font-size=\"13\" text-anchor=\"start\" font-family=\"monospace\">" << vars[1]
       << " exponent</text>\n";

    dots(os, f, result, "#1f4e79");
    dots(os, f, input, "#0b2a44");

    os << "</svg>\n";
    return os.str();
}

}  // namespace rrc
