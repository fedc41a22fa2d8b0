#include <cassert>
#include <cmath>
#include <cstddef>

#include "dhsim/kernels.hpp"

// Reference kernels. Plain loops, no intrinsics; these define the semantics
// the SIMD variants must reproduce.

namespace dhsim::kernels {
namespace {

// One point of the order-k Irwin-Hall density via the B-spline recurrence.
// v[j] carries M_m(x - j); level 1 has a single 1 at slot floor(x).
double ih_pdf_point(int k, double x) {
    assert(k >= 1 && k <= kMaxOrder);
    if (k == 1) return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0;
    if (!(x > 0.0) || x >= static_cast<double>(k)) return 0.0;
    double v[kMaxOrder + 1] = {0.0};
    const int j0 = static_cast<int>(x);  // floor, x > 0
    v[j0] = 1.0;
    for (int m = 2; m <= k; ++m) {
        const double inv = 1.0 / (m - 1);
        const int hi = k - m;
        for (int j = 0; j <= hi; ++j) {
            const double y = x - j;
            v[j] = (y * v[j] + (m - y) * v[j + 1]) * inv;
        }
    }
    return v[0];
}

// One point of the order-k Irwin-Hall CDF: F_k(x) = sum_{j=0}^{floor(x)}
// M_{k+1}(x - j). Runs the pdf recurrence at order k+1 over a window wide
// enough to keep all top-level shifts, then sums them.
double ih_cdf_point(int k, double x) {
    assert(k >= 1 && k <= kMaxOrder);
    if (!(x > 0.0)) return 0.0;
    if (x >= static_cast<double>(k)) return 1.0;
    const int order = k + 1;
    const int top = static_cast<int>(x);  // shifts 0..top survive to the top level
    double v[2 * kMaxOrder + 2] = {0.0};
    v[top] = 1.0;  // M_1(x - top) = 1
    for (int m = 2; m <= order; ++m) {
        const double inv = 1.0 / (m - 1);
        const int hi = top + (order - m);
        for (int j = 0; j <= hi; ++j) {
            const double y = x - j;
            v[j] = (y * v[j] + (m - y) * v[j + 1]) * inv;
        }
    }
    double acc = 0.0;
    for (int j = top; j >= 0; --j) acc += v[j];
    return acc < 1.0 ? acc : 1.0;
}

void ih_pdf(int k, const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = ih_pdf_point(k, x[i]);
}

void ih_cdf(int k, const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = ih_cdf_point(k, x[i]);
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i] + y[i];
}

double dot(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void mean_var(const double* x, std::size_t n, double* mean, double* var) {
    if (n == 0) {
        *mean = 0.0;
        *var = 0.0;
        return;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    const double m = s / static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = x[i] - m;
        ss += d * d;
    }
    *mean = m;
    *var = ss / static_cast<double>(n);
}

double max_abs_diff(const double* x, const double* y, std::size_t n) {
    double gap = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::fabs(x[i] - y[i]);
        if (d > gap) gap = d;
    }
    return gap;
}

}  // namespace

namespace detail {
const Kernels scalar_table = {ih_pdf, ih_cdf, axpy, dot, mean_var, max_abs_diff, "scalar"};
}

}  // namespace dhsim::kernels
