#pragma once

/* C interface to the gauge radii library. All handles are opaque; every
   fallible call returns a gr_status and leaves a message in the context. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GAUGE_RADII_BUILD)
#    define GR_API __declspec(dllexport)
#  else
#    define GR_API __declspec(dllimport)
#  endif
#else
#  define GR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gr_status {
    GR_OK = 0,
    GR_INVALID_ARGUMENT = 1,
    GR_DEGENERATE = 2,
    GR_PARSE = 3,
    GR_IO = 4,
    GR_NUMERICAL = 5,
    GR_UNSUPPORTED = 6,
    GR_INTERNAL = 7
} gr_status;

typedef struct gr_context gr_context;
typedef struct gr_polygon gr_polygon;
typedef struct gr_report gr_report;
typedef struct gr_samples gr_samples;

/* Context: tolerances and last error. Defaults come from GAUGE_RADII_TOL when set. */
GR_API gr_status gr_context_new(gr_context** out);
GR_API void gr_context_free(gr_context* ctx);
/* "1e-6" sets the inequality and classification tolerances;
   "geo=1e-9,lp=1e-9,cert=1e-6,classify=1e-6,inequality=1e-7" sets any subset. */
GR_API gr_status gr_context_set_tolerances(gr_context* ctx, const char* spec);
GR_API const char* gr_last_error(const gr_context* ctx);
GR_API const char* gr_status_name(gr_status status);

/* Polygons. A polygon made from a kind name remembers the kind, which
   enables the gauge-specific inequalities and boundary curves. */
GR_API gr_status gr_polygon_load(gr_context* ctx, const char* path, gr_polygon** out);
GR_API gr_status gr_polygon_from_kind(gr_context* ctx, const char* kind, gr_polygon** out);
/* xy holds n interleaved coordinates x0,y0,x1,y1,... */
GR_API gr_status gr_polygon_from_vertices(gr_context* ctx, const double* xy, size_t n, gr_polygon** out);
/* A kind name when `spec` parses as one, otherwise a polygon file. */
GR_API gr_status gr_polygon_open(gr_context* ctx, const char* spec, gr_polygon** out);
GR_API void gr_polygon_free(gr_polygon* p);
GR_API size_t gr_polygon_size(const gr_polygon* p);
GR_API gr_status gr_polygon_vertex(const gr_polygon* p, size_t i, double* x, double* y);
/* Kind name ("triangle", "disk:720", ...) or "custom". */
GR_API const char* gr_polygon_kind(const gr_polygon* p);

typedef struct gr_profile {
    double r, D, R, s;
    double x, y;
    double incenter[2];
    double circumcenter[2];
    double diameter_first[2];
    double diameter_second[2];
} gr_profile;

GR_API gr_status gr_radii(gr_context* ctx, const gr_polygon* k, const gr_polygon* c, gr_profile* out);

/* Check report: inequality suite, containment certificate, reduction and,
   for triangles, the Bohnenblust equality test. */
enum { GR_CHECK_CORRUPT_POINT = 1 };

GR_API gr_status gr_check(gr_context* ctx, const gr_polygon* k, const gr_polygon* c, int flags, gr_report** out);
GR_API void gr_report_free(gr_report* rep);
GR_API size_t gr_report_inequality_count(const gr_report* rep);
GR_API gr_status gr_report_inequality(const gr_report* rep, size_t i, const char** name, double* slack,
                                      double* tolerance, int* passed);
GR_API int gr_report_inequalities_passed(const gr_report* rep);
/* 1 valid, 0 invalid or missing. */
GR_API int gr_report_certificate_valid(const gr_report* rep);
GR_API int gr_report_all_passed(const gr_report* rep);
/* Multi-line human readable report, owned by the report. */
GR_API const char* gr_report_text(const gr_report* rep);

/* Diagram sampling. strategy: "hull", "interp" or "mix". Gauges made from a
   kind name also get boundary curves and extremal family points. */
GR_API gr_status gr_diagram_sample(gr_context* ctx, const gr_polygon* gauge, size_t n, uint64_t seed,
                                   const char* strategy, gr_samples** out);
GR_API void gr_samples_free(gr_samples* s);
GR_API size_t gr_samples_size(const gr_samples* s);
GR_API size_t gr_samples_family_size(const gr_samples* s);
GR_API gr_status gr_samples_point(const gr_samples* s, size_t i, double* x, double* y, double* worst_slack);
GR_API gr_status gr_samples_write_csv(gr_context* ctx, const gr_samples* s, const char* path);
GR_API gr_status gr_samples_write_svg(gr_context* ctx, const gr_samples* s, const char* path);

/* Extremal-family table for a gauge kind on `grid` parameter steps: one line
   per member with LP and closed-form diagram points. Free with gr_string_free. */
GR_API gr_status gr_families_table(gr_context* ctx, const char* kind, int grid, char** out);
GR_API void gr_string_free(char* s);

#ifdef __cplusplus
}
#endif
