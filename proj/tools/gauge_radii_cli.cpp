// Command-line front end over the C interface.

#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "gauge_radii.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kInput = 2, kCheckFailed = 3, kInternal = 4 };

struct ContextDeleter {
    void operator()(gr_context* c) const { gr_context_free(c); }
};
struct PolygonDeleter {
    void operator()(gr_polygon* p) const { gr_polygon_free(p); }
};
struct ReportDeleter {
    void operator()(gr_report* r) const { gr_report_free(r); }
};
struct SamplesDeleter {
    void operator()(gr_samples* s) const { gr_samples_free(s); }
};

using Context = std::unique_ptr<gr_context, ContextDeleter>;
using Polygon = std::unique_ptr<gr_polygon, PolygonDeleter>;

// Thrown to unwind to main with an exit code once the message is printed.
struct Failure {
    int code;
};

int exit_code(gr_status st) {
    switch (st) {
    case GR_OK: return kOk;
    case GR_NUMERICAL: return kCheckFailed;
    case GR_INTERNAL: return kInternal;
    default: return kInput;
    }
}

void ensure(gr_context* ctx, gr_status st) {
    if (st == GR_OK) return;
    std::fprintf(stderr, "error: %s (%s)\n", gr_last_error(ctx), gr_status_name(st));
    throw Failure{exit_code(st)};
}

Context make_context(const std::string& tol) {
    gr_context* raw = nullptr;
    const gr_status st = gr_context_new(&raw);
    if (st != GR_OK) {
        std::fprintf(stderr, "error: bad GAUGE_RADII_TOL (%s)\n", gr_status_name(st));
        throw Failure{kInput};
    }
    Context ctx(raw);
    if (!tol.empty()) ensure(ctx.get(), gr_context_set_tolerances(ctx.get(), tol.c_str()));
    return ctx;
}

Polygon load_body(gr_context* ctx, const std::string& path) {
    gr_polygon* p = nullptr;
    ensure(ctx, gr_polygon_load(ctx, path.c_str(), &p));
    return Polygon(p);
}

Polygon open_gauge(gr_context* ctx, const std::string& spec) {
    gr_polygon* p = nullptr;
    ensure(ctx, gr_polygon_open(ctx, spec.c_str(), &p));
    return Polygon(p);
}

std::string pt(const double* p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%.10g, %.10g)", p[0] + 0.0, p[1] + 0.0);  // no "-0"
    return buf;
}

struct Options {
    std::string body;
    std::string gauge;
    std::string tol;
    bool corrupt = false;
    std::size_t n = 1000;
    std::uint64_t seed = 0;
    std::string strategy = "mix";
    std::string csv;
    std::string svg;
    int grid = 10;
};

int cmd_radii(const Options& o) {
    auto ctx = make_context(o.tol);
    auto k = load_body(ctx.get(), o.body);
    auto c = open_gauge(ctx.get(), o.gauge);
    gr_profile p{};
    ensure(ctx.get(), gr_radii(ctx.get(), k.get(), c.get(), &p));
    std::printf("r = %.10g\nD = %.10g\nR = %.10g\ns = %.10g\n", p.r + 0.0, p.D + 0.0, p.R + 0.0, p.s + 0.0);
    const double xy[2] = {p.x, p.y};
    std::printf("diagram point = %s\n", pt(xy).c_str());
    std::printf("incenter = %s\ncircumcenter = %s\n", pt(p.incenter).c_str(), pt(p.circumcenter).c_str());
    std::printf("diameter pair = %s %s\n", pt(p.diameter_first).c_str(), pt(p.diameter_second).c_str());
    return kOk;
}

int cmd_check(const Options& o) {
    auto ctx = make_context(o.tol);
    auto k = load_body(ctx.get(), o.body);
    auto c = open_gauge(ctx.get(), o.gauge);
    gr_report* raw = nullptr;
    ensure(ctx.get(), gr_check(ctx.get(), k.get(), c.get(), o.corrupt ? GR_CHECK_CORRUPT_POINT : 0, &raw));
    std::unique_ptr<gr_report, ReportDeleter> rep(raw);
    std::fputs(gr_report_text(rep.get()), stdout);
    return gr_report_all_passed(rep.get()) ? kOk : kCheckFailed;
}

int cmd_diagram(const Options& o) {
    auto ctx = make_context(o.tol);
    auto c = open_gauge(ctx.get(), o.gauge);
    gr_samples* raw = nullptr;
    ensure(ctx.get(), gr_diagram_sample(ctx.get(), c.get(), o.n, o.seed, o.strategy.c_str(), &raw));
    std::unique_ptr<gr_samples, SamplesDeleter> samples(raw);
    if (!o.csv.empty()) ensure(ctx.get(), gr_samples_write_csv(ctx.get(), samples.get(), o.csv.c_str()));
    if (!o.svg.empty()) ensure(ctx.get(), gr_samples_write_svg(ctx.get(), samples.get(), o.svg.c_str()));

    double worst = 0.0;
    for (std::size_t i = 0; i < gr_samples_size(samples.get()); ++i) {
        double slack = 0.0;
        gr_samples_point(samples.get(), i, nullptr, nullptr, &slack);
        if (i == 0 || slack < worst) worst = slack;
    }
    std::printf("gauge %s: %zu samples, %zu family points, worst slack %.10g\n", gr_polygon_kind(c.get()),
                gr_samples_size(samples.get()), gr_samples_family_size(samples.get()), worst);
    return kOk;
}

int cmd_families(const Options& o) {
    auto ctx = make_context(o.tol);
    char* table = nullptr;
    ensure(ctx.get(), gr_families_table(ctx.get(), o.gauge.c_str(), o.grid, &table));
    std::fputs(table, stdout);
    gr_string_free(table);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inradius, diameter and circumradius of planar convex bodies under polygonal gauges"};
    app.require_subcommand(1);
    Options o;

    auto add_tol = [&](CLI::App* sub) {
        sub->add_option("--tol", o.tol,
                        "tolerance override: a number for the inequality and classification "
                        "tolerances, or geo=,lp=,cert=,classify=,inequality= pairs");
    };

    auto* radii = app.add_subcommand("radii", "r, D, R, s and the diagram point of K against C");
    radii->add_option("-K,--body", o.body, "polygon file")->required();
    radii->add_option("-C,--gauge", o.gauge, "polygon file or gauge kind")->required();
    add_tol(radii);

    auto* check = app.add_subcommand("check", "inequalities, containment certificate and reduction");
    check->add_option("-K,--body", o.body, "polygon file")->required();
    check->add_option("-C,--gauge", o.gauge, "polygon file or gauge kind")->required();
    check->add_flag("--corrupt-point", o.corrupt)->group("");  // negative control for tests
    add_tol(check);

    auto* diagram = app.add_subcommand("diagram", "sample the diagram and write CSV/SVG");
    diagram->add_option("--gauge", o.gauge, "gauge kind or polygon file")->required();
    diagram->add_option("-n,--n", o.n, "number of random bodies")->default_val(1000);
    diagram->add_option("--seed", o.seed, "random seed")->default_val(0);
    diagram->add_option("--strategy", o.strategy, "hull, interp or mix")->default_val("mix");
    diagram->add_option("--csv", o.csv, "CSV output path");
    diagram->add_option("--svg", o.svg, "SVG output path");
    add_tol(diagram);

    auto* families = app.add_subcommand("families", "extremal family values against their closed forms");
    families->add_option("--gauge", o.gauge, "triangle, hexagon or pentagon")->required();
    families->add_option("--grid", o.grid, "parameter steps")->default_val(10);
    add_tol(families);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*radii) return cmd_radii(o);
        if (*check) return cmd_check(o);
        if (*diagram) return cmd_diagram(o);
        if (*families) return cmd_families(o);
    } catch (const Failure& f) {
        return f.code;
    }
    return kUsage;
}
