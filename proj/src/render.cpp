#include "gauge_radii/render.hpp"

#include <cstdio>

namespace gauge_radii {

namespace {

std::string real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

void csv_row(std::ostream& os, const DiagramData& d, const std::string& strategy, const SamplePoint& p) {
    os << d.gauge << ',' << strategy << ',' << d.seed << ',' << p.index << ',' << real(p.x) << ',' << real(p.y)
       << ',' << real(p.r) << ',' << real(p.D) << ',' << real(p.R) << ',' << real(p.s) << ','
       << p.worst_inequality << ',' << real(p.worst_slack) << '\n';
}

constexpr double kSize = 600.0;
constexpr double kMargin = 60.0;

double px(double x) { return kMargin + x * kSize; }
double py(double y) { return kMargin + (1.0 - y) * kSize; }

}  // namespace

void write_csv(std::ostream& os, const DiagramData& data) {
    os << "gauge,strategy,seed,index,x,y,r,D,R,s,worst_inequality,worst_slack\n";
    const std::string strategy = to_string(data.strategy);
    for (const auto& p : data.samples) csv_row(os, data, strategy, p);
    for (const auto& p : data.families) csv_row(os, data, "family", p);
}

void write_svg(std::ostream& os, const DiagramData& data) {
    const double full = kSize + 2 * kMargin;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << full << "\" height=\"" << full
       << "\" viewBox=\"0 0 " << full << ' ' << full << "\" font-family=\"sans-serif\" font-size=\"14\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << full / 2 << "\" y=\"30\" text-anchor=\"middle\" font-size=\"18\">(r/R, D/2R) diagram, gauge "
       << data.gauge << "</text>\n";

    // axes and grid
    os << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (int i = 0; i <= 4; ++i) {
        const double t = i / 4.0;
        os << "<line x1=\"" << fixed(px(t)) << "\" y1=\"" << fixed(py(0)) << "\" x2=\"" << fixed(px(t)) << "\" y2=\""
           << fixed(py(1)) << "\"/>\n";
        os << "<line x1=\"" << fixed(px(0)) << "\" y1=\"" << fixed(py(t)) << "\" x2=\"" << fixed(px(1)) << "\" y2=\""
           << fixed(py(t)) << "\"/>\n";
    }
    os << "</g>\n<rect x=\"" << px(0) << "\" y=\"" << py(1) << "\" width=\"" << kSize << "\" height=\"" << kSize
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double t = i / 4.0;
        os << "<text x=\"" << fixed(px(t)) << "\" y=\"" << fixed(py(0) + 20) << "\" text-anchor=\"middle\">"
           << fixed(t).substr(0, 4) << "</text>\n";
        os << "<text x=\"" << fixed(px(0) - 8) << "\" y=\"" << fixed(py(t) + 5) << "\" text-anchor=\"end\">"
           << fixed(t).substr(0, 4) << "</text>\n";
    }
    os << "<text x=\"" << full / 2 << "\" y=\"" << full - 15 << "\" text-anchor=\"middle\">r/R</text>\n"
       << "<text x=\"18\" y=\"" << full / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << full / 2
       << ")\">D/(2R)</text>\n";

    os << "<g fill=\"#3b6fb6\" fill-opacity=\"0.45\">\n";
    for (const auto& p : data.samples)
        os << "<circle cx=\"" << fixed(px(p.x)) << "\" cy=\"" << fixed(py(p.y)) << "\" r=\"1.3\"/>\n";
    os << "</g>\n";

    if (data.spec) {
        for (const auto& c : data.spec->curves) {
            const bool proved = c.status == CurveStatus::Proved;
            os << "<polyline fill=\"none\" stroke=\"" << (proved ? "black" : "#c0392b") << "\" stroke-width=\"2\""
               << (proved ? "" : " stroke-dasharray=\"8 5\"") << " data-curve=\"" << c.name << "\" data-status=\""
               << to_string(c.status) << "\" points=\"";
            constexpr int kSteps = 200;
            for (int i = 0; i <= kSteps; ++i) {
                const Point q = c.at(static_cast<double>(i) / kSteps);
                os << (i ? " " : "") << fixed(px(q.x)) << ',' << fixed(py(q.y));
            }
            os << "\"/>\n";
        }
    }

    os << "<g fill=\"#e67e22\" stroke=\"#7f3f00\" stroke-width=\"0.5\">\n";
    for (const auto& p : data.families) {
        if (p.source.rfind("jung_", 0) == 0) continue;
        os << "<circle cx=\"" << fixed(px(p.x)) << "\" cy=\"" << fixed(py(p.y)) << "\" r=\"3\"/>\n";
    }
    os << "</g>\n";
    for (const auto& p : data.families) {
        if (p.source.rfind("jung_", 0) != 0) continue;
        const std::string label = p.source == "jung_T" ? "T" : "T'";
        os << "<circle cx=\"" << fixed(px(p.x)) << "\" cy=\"" << fixed(py(p.y))
           << "\" r=\"6\" fill=\"black\" data-family=\"" << p.source << "\"/>\n"
           << "<text x=\"" << fixed(px(p.x)) << "\" y=\"" << fixed(py(p.y) + 22)
           << "\" text-anchor=\"middle\" font-weight=\"bold\">" << label << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace gauge_radii
