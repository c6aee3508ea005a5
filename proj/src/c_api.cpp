#include "gauge_radii.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <new>
#include <sstream>

#include "gauge_radii/containment.hpp"
#include "gauge_radii/diagram.hpp"
#include "gauge_radii/error.hpp"
#include "gauge_radii/families.hpp"
#include "gauge_radii/polygon_io.hpp"
#include "gauge_radii/render.hpp"
#include "gauge_radii/sampling.hpp"

using namespace gauge_radii;

struct gr_context {
    Tolerances tol;
    std::string error;
};

struct gr_polygon {
    ConvexPolygon body;
    std::optional<GaugeKind> kind;
    std::string kind_name;
};

struct gr_report {
    std::vector<InequalityResult> inequalities;
    bool inequalities_passed = false;
    bool certificate_valid = false;
    bool reduction_passed = false;
    std::string text;
};

struct gr_samples {
    DiagramData data;
};

namespace {

gr_status to_status(ErrorCode c) {
    switch (c) {
    case ErrorCode::InvalidArgument: return GR_INVALID_ARGUMENT;
    case ErrorCode::Degenerate: return GR_DEGENERATE;
    case ErrorCode::Parse: return GR_PARSE;
    case ErrorCode::Io: return GR_IO;
    case ErrorCode::Numerical: return GR_NUMERICAL;
    case ErrorCode::Unsupported: return GR_UNSUPPORTED;
    }
    return GR_INTERNAL;
}

template <class F>
gr_status guarded(gr_context* ctx, F&& fn) {
    if (!ctx) return GR_INVALID_ARGUMENT;
    ctx->error.clear();
    try {
        fn();
        return GR_OK;
    } catch (const Error& e) {
        ctx->error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        ctx->error = "out of memory";
    } catch (const std::exception& e) {
        ctx->error = e.what();
    } catch (...) {
        ctx->error = "unknown failure";
    }
    return GR_INTERNAL;
}

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string point(Point p) { return "(" + num(p.x) + ", " + num(p.y) + ")"; }

gr_polygon* wrap(ConvexPolygon body, std::optional<GaugeKind> kind) {
    std::string name = kind ? kind->name() : "custom";
    return new gr_polygon{std::move(body), kind, std::move(name)};
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
    out << content;
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
}

void build_report(gr_report& rep, const ConvexPolygon& k, const gr_polygon& c, const Tolerances& tol, int flags) {
    const Gauge gauge(c.body, tol);
    auto profile = radii_profile(k, gauge);
    std::ostringstream os;
    os << "profile r=" << num(profile.r) << " D=" << num(profile.D) << " R=" << num(profile.R)
       << " s=" << num(profile.s) << " point=" << point({profile.x, profile.y}) << '\n';
    if (flags & GR_CHECK_CORRUPT_POINT) {
        profile.y += 0.5;
        os << "test hook: diagram point corrupted to " << point({profile.x, profile.y}) << '\n';
    }

    rep.inequalities = inequality_suite(profile, c.kind, tol);
    rep.inequalities_passed = true;
    os << "inequalities (slack >= -tolerance passes):\n";
    for (const auto& r : rep.inequalities) {
        rep.inequalities_passed = rep.inequalities_passed && r.passed();
        char line[160];
        std::snprintf(line, sizeof line, "  %-22s slack=%-18.10g tol=%-10.3g %s\n", r.name.c_str(), r.slack,
                      r.tolerance, r.passed() ? "pass" : "FAIL");
        os << line;
    }

    try {
        const auto red = reduce(k, gauge);
        const auto chk = validate_certificate(red.certificate, red.body, gauge.body(), tol.cert);
        rep.certificate_valid = chk.valid();
        os << format_certificate(red.certificate) << '\n'
           << "certificate check: boundary=" << num(chk.boundary_slack) << " body=" << num(chk.body_slack)
           << " cone=" << num(chk.cone_slack) << " hull=" << num(chk.hull_residual) << ' '
           << (chk.valid() ? "valid" : "INVALID") << '\n';

        const auto& b = red.body_radii;
        const auto& t = red.simplex_radii;
        const double r_gap = t.r - b.r;
        const double d_gap = t.D - b.D;
        const double R_err = std::abs(t.R - 1.0);
        rep.reduction_passed = r_gap <= tol.cert && d_gap <= tol.cert && R_err <= tol.cert;
        os << "reduction: " << (red.prism.is_strip() ? "strip" : "triangle") << " prism, simplex with "
           << red.simplex.size() << " vertices; |R(T,S)-1|=" << num(R_err) << " r(T,S)-r(K,C)=" << num(r_gap)
           << " D(T,S)-D(K,C)=" << num(d_gap);
        if (red.symmetric_radii) {
            const double rs = red.symmetric_radii->r - b.r;
            const double ds = red.symmetric_radii->D - b.D;
            rep.reduction_passed = rep.reduction_passed && rs <= tol.cert && ds <= tol.cert;
            os << "; symmetric r gap=" << num(rs) << " D gap=" << num(ds);
        }
        os << (rep.reduction_passed ? " ok" : " FAILED") << '\n';
    } catch (const Error& e) {
        if (e.code() != ErrorCode::Numerical) throw;
        rep.certificate_valid = false;
        os << "certificate: " << e.what() << '\n';
    }

    if (k.size() == 3) {
        const auto bc = bohnenblust_equality_check(k, c.body, tol);
        os << "bohnenblust equality: " << (bc.holds ? "holds" : "does not hold")
           << " difference=" << num(bc.difference_violation) << " intersection=" << num(bc.intersection_violation)
           << '\n';
    }
    const bool ok = rep.inequalities_passed && rep.certificate_valid && rep.reduction_passed;
    os << "result: " << (ok ? "pass" : "FAIL") << '\n';
    rep.text = os.str();
}

}  // namespace

extern "C" {

gr_status gr_context_new(gr_context** out) {
    if (!out) return GR_INVALID_ARGUMENT;
    *out = nullptr;
    auto* ctx = new (std::nothrow) gr_context{};
    if (!ctx) return GR_INTERNAL;
    if (const char* env = std::getenv("GAUGE_RADII_TOL"); env && *env) {
        const auto st = guarded(ctx, [&] { ctx->tol = apply_tolerance_override(ctx->tol, env); });
        if (st != GR_OK) {
            delete ctx;
            return st;
        }
    }
    *out = ctx;
    return GR_OK;
}

void gr_context_free(gr_context* ctx) { delete ctx; }

gr_status gr_context_set_tolerances(gr_context* ctx, const char* spec) {
    return guarded(ctx, [&] {
        require(spec != nullptr, "null tolerance spec");
        ctx->tol = apply_tolerance_override(ctx->tol, spec);
    });
}

const char* gr_last_error(const gr_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

const char* gr_status_name(gr_status status) {
    switch (status) {
    case GR_OK: return "ok";
    case GR_INVALID_ARGUMENT: return "invalid argument";
    case GR_DEGENERATE: return "degenerate input";
    case GR_PARSE: return "parse error";
    case GR_IO: return "io error";
    case GR_NUMERICAL: return "numerical failure";
    case GR_UNSUPPORTED: return "unsupported";
    case GR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

gr_status gr_polygon_load(gr_context* ctx, const char* path, gr_polygon** out) {
    return guarded(ctx, [&] {
        require(path && out, "null argument");
        *out = wrap(read_polygon(path), std::nullopt);
    });
}

gr_status gr_polygon_from_kind(gr_context* ctx, const char* kind, gr_polygon** out) {
    return guarded(ctx, [&] {
        require(kind && out, "null argument");
        const auto k = parse_gauge_kind(kind);
        *out = wrap(make_gauge(k), k);
    });
}

gr_status gr_polygon_from_vertices(gr_context* ctx, const double* xy, size_t n, gr_polygon** out) {
    return guarded(ctx, [&] {
        require(xy && out, "null argument");
        std::vector<Point> pts;
        for (size_t i = 0; i < n; ++i) pts.push_back({xy[2 * i], xy[2 * i + 1]});
        *out = wrap(ConvexPolygon::from_ccw(std::move(pts), ctx->tol.geo), std::nullopt);
    });
}

gr_status gr_polygon_open(gr_context* ctx, const char* spec, gr_polygon** out) {
    return guarded(ctx, [&] {
        require(spec && out, "null argument");
        const std::string s = spec;
        try {
            const auto k = parse_gauge_kind(s);
            *out = wrap(make_gauge(k), k);
            return;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Unsupported) throw;
            const bool looks_like_path = s.find('/') != std::string::npos || s.find('.') != std::string::npos;
            std::error_code ec;
            if (!looks_like_path && !std::filesystem::exists(s, ec)) throw;
        }
        *out = wrap(read_polygon(s), std::nullopt);
    });
}

void gr_polygon_free(gr_polygon* p) { delete p; }

size_t gr_polygon_size(const gr_polygon* p) { return p ? p->body.size() : 0; }

gr_status gr_polygon_vertex(const gr_polygon* p, size_t i, double* x, double* y) {
    if (!p || !x || !y || i >= p->body.size()) return GR_INVALID_ARGUMENT;
    *x = p->body[i].x;
    *y = p->body[i].y;
    return GR_OK;
}

const char* gr_polygon_kind(const gr_polygon* p) { return p ? p->kind_name.c_str() : ""; }

gr_status gr_radii(gr_context* ctx, const gr_polygon* k, const gr_polygon* c, gr_profile* out) {
    return guarded(ctx, [&] {
        require(k && c && out, "null argument");
        const auto p = radii_profile(k->body, c->body, ctx->tol);
        *out = gr_profile{p.r, p.D, p.R, p.s, p.x, p.y,
                          {p.incenter.x, p.incenter.y},
                          {p.circumcenter.x, p.circumcenter.y},
                          {p.diameter_first.x, p.diameter_first.y},
                          {p.diameter_second.x, p.diameter_second.y}};
    });
}

gr_status gr_check(gr_context* ctx, const gr_polygon* k, const gr_polygon* c, int flags, gr_report** out) {
    return guarded(ctx, [&] {
        require(k && c && out, "null argument");
        auto rep = std::make_unique<gr_report>();
        build_report(*rep, k->body, *c, ctx->tol, flags);
        *out = rep.release();
    });
}

void gr_report_free(gr_report* rep) { delete rep; }

size_t gr_report_inequality_count(const gr_report* rep) { return rep ? rep->inequalities.size() : 0; }

gr_status gr_report_inequality(const gr_report* rep, size_t i, const char** name, double* slack, double* tolerance,
                               int* passed) {
    if (!rep || i >= rep->inequalities.size()) return GR_INVALID_ARGUMENT;
    const auto& r = rep->inequalities[i];
    if (name) *name = r.name.c_str();
    if (slack) *slack = r.slack;
    if (tolerance) *tolerance = r.tolerance;
    if (passed) *passed = r.passed() ? 1 : 0;
    return GR_OK;
}

int gr_report_inequalities_passed(const gr_report* rep) { return rep && rep->inequalities_passed ? 1 : 0; }
int gr_report_certificate_valid(const gr_report* rep) { return rep && rep->certificate_valid ? 1 : 0; }

int gr_report_all_passed(const gr_report* rep) {
    return rep && rep->inequalities_passed && rep->certificate_valid && rep->reduction_passed ? 1 : 0;
}

const char* gr_report_text(const gr_report* rep) { return rep ? rep->text.c_str() : ""; }

gr_status gr_diagram_sample(gr_context* ctx, const gr_polygon* gauge, size_t n, uint64_t seed, const char* strategy,
                            gr_samples** out) {
    return guarded(ctx, [&] {
        require(gauge && strategy && out, "null argument");
        auto s = std::make_unique<gr_samples>();
        const Gauge g(gauge->body, ctx->tol);
        auto& d = s->data;
        d.gauge = gauge->kind_name;
        d.strategy = parse_strategy(strategy);
        d.seed = seed;
        d.samples = sample_bodies(g, gauge->kind, n, seed, d.strategy);
        if (gauge->kind) {
            try {
                d.spec = boundary_spec(*gauge->kind);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::Unsupported) throw;
                d.spec = universal_spec(g.asymmetry());
            }
            d.families = family_points(g, *gauge->kind, 50);
        } else {
            d.spec = universal_spec(g.asymmetry());
        }
        *out = s.release();
    });
}

void gr_samples_free(gr_samples* s) { delete s; }
size_t gr_samples_size(const gr_samples* s) { return s ? s->data.samples.size() : 0; }
size_t gr_samples_family_size(const gr_samples* s) { return s ? s->data.families.size() : 0; }

gr_status gr_samples_point(const gr_samples* s, size_t i, double* x, double* y, double* worst_slack) {
    if (!s || i >= s->data.samples.size()) return GR_INVALID_ARGUMENT;
    const auto& p = s->data.samples[i];
    if (x) *x = p.x;
    if (y) *y = p.y;
    if (worst_slack) *worst_slack = p.worst_slack;
    return GR_OK;
}

gr_status gr_samples_write_csv(gr_context* ctx, const gr_samples* s, const char* path) {
    return guarded(ctx, [&] {
        require(s && path, "null argument");
        std::ostringstream os;
        write_csv(os, s->data);
        write_file(path, os.str());
    });
}

gr_status gr_samples_write_svg(gr_context* ctx, const gr_samples* s, const char* path) {
    return guarded(ctx, [&] {
        require(s && path, "null argument");
        std::ostringstream os;
        write_svg(os, s->data);
        write_file(path, os.str());
    });
}

gr_status gr_families_table(gr_context* ctx, const char* kind, int grid, char** out) {
    return guarded(ctx, [&] {
        require(kind && out, "null argument");
        const auto k = parse_gauge_kind(kind);
        const auto members = family_members(k, grid);
        if (members.empty()) throw Error(ErrorCode::Unsupported, "no extremal family catalogued for gauge " + k.name());
        const Gauge g(make_gauge(k), ctx->tol);
        std::vector<RadiiProfile> profiles(members.size());
        parallel_for(members.size(), 0, [&](std::size_t i) { profiles[i] = radii_profile(members[i].body, g); });
        std::ostringstream os;
        os << "family parameter x y expected_x expected_y error\n";
        for (std::size_t i = 0; i < members.size(); ++i) {
            const auto& m = members[i];
            const auto& p = profiles[i];
            os << m.family << ' ' << num(m.parameter) << ' ' << num(p.x) << ' ' << num(p.y);
            if (m.expected) {
                const double err = std::max(std::abs(p.x - m.expected->x), std::abs(p.y - m.expected->y));
                os << ' ' << num(m.expected->x) << ' ' << num(m.expected->y) << ' ' << num(err) << '\n';
            } else {
                os << " - - -\n";
            }
        }
        *out = dup_string(os.str());
    });
}

void gr_string_free(char* s) { std::free(s); }

}  // extern "C"
