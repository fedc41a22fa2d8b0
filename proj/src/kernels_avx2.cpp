// AVX2 kernel variants. This translation unit is the only one built with
// -mavx2 -mfma; dispatch selects it at runtime after a cpuid check, so the
// rest of the binary stays runnable on baseline x86-64.

#include <cstddef>

#include "dhsim/kernels.hpp"

namespace dhsim::kernels::detail {
const Kernels* avx2_table_ptr();
}

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace dhsim::kernels {
namespace {

constexpr int kSlots = 2 * kMaxOrder + 2;

// Four points of the Irwin-Hall pdf at once. v[j] holds M_m(x_lane - j)
// for each of the 4 lanes; lanes outside the support never get their
// initial 1 and stay identically zero through the recurrence.
inline __m256d ih_pdf_block(int k, __m256d x) {
    if (k == 1) {
        const __m256d ge0 = _mm256_cmp_pd(x, _mm256_setzero_pd(), _CMP_GE_OQ);
        const __m256d lt1 = _mm256_cmp_pd(x, _mm256_set1_pd(1.0), _CMP_LT_OQ);
        return _mm256_and_pd(_mm256_and_pd(ge0, lt1), _mm256_set1_pd(1.0));
    }
    alignas(32) double xl[4];
    _mm256_store_pd(xl, x);
    __m256d v[kSlots];
    for (int j = 0; j < k; ++j) v[j] = _mm256_setzero_pd();
    bool any = false;
    for (int lane = 0; lane < 4; ++lane) {
        if (xl[lane] > 0.0 && xl[lane] < static_cast<double>(k)) {
            const int j0 = static_cast<int>(xl[lane]);
            alignas(32) double tmp[4];
            _mm256_store_pd(tmp, v[j0]);
            tmp[lane] = 1.0;
            v[j0] = _mm256_load_pd(tmp);
            any = true;
        }
    }
    if (!any) return _mm256_setzero_pd();
    for (int m = 2; m <= k; ++m) {
        const __m256d inv = _mm256_set1_pd(1.0 / (m - 1));
        const __m256d mv = _mm256_set1_pd(static_cast<double>(m));
        const int hi = k - m;
        for (int j = 0; j <= hi; ++j) {
            const __m256d y = _mm256_sub_pd(x, _mm256_set1_pd(static_cast<double>(j)));
            const __m256d t =
                _mm256_add_pd(_mm256_mul_pd(y, v[j]),
                              _mm256_mul_pd(_mm256_sub_pd(mv, y), v[j + 1]));
            v[j] = _mm256_mul_pd(t, inv);
        }
    }
    return v[0];
}

// Four points of the Irwin-Hall CDF at once, via the order-(k+1) recurrence
// with a window wide enough to keep all surviving shifts, then a masked
// per-lane sum over j <= floor(x_lane).
inline __m256d ih_cdf_block(int k, __m256d x) {
    alignas(32) double xl[4];
    _mm256_store_pd(xl, x);
    const int order = k + 1;
    int top_max = -1;
    for (int lane = 0; lane < 4; ++lane) {
        if (xl[lane] > 0.0 && xl[lane] < static_cast<double>(k)) {
            const int t = static_cast<int>(xl[lane]);
            if (t > top_max) top_max = t;
        }
    }
    __m256d dp = _mm256_setzero_pd();
    if (top_max >= 0) {
        __m256d v[kSlots];
        const int width = top_max + order;  // slots 0..width-1 used at level 1
        for (int j = 0; j < width; ++j) v[j] = _mm256_setzero_pd();
        for (int lane = 0; lane < 4; ++lane) {
            if (xl[lane] > 0.0 && xl[lane] < static_cast<double>(k)) {
                const int j0 = static_cast<int>(xl[lane]);
                alignas(32) double tmp[4];
                _mm256_store_pd(tmp, v[j0]);
                tmp[lane] = 1.0;
                v[j0] = _mm256_load_pd(tmp);
            }
        }
        for (int m = 2; m <= order; ++m) {
            const __m256d inv = _mm256_set1_pd(1.0 / (m - 1));
            const __m256d mv = _mm256_set1_pd(static_cast<double>(m));
            const int hi = top_max + (order - m);
            for (int j = 0; j <= hi; ++j) {
                const __m256d y = _mm256_sub_pd(x, _mm256_set1_pd(static_cast<double>(j)));
                const __m256d t =
                    _mm256_add_pd(_mm256_mul_pd(y, v[j]),
                                  _mm256_mul_pd(_mm256_sub_pd(mv, y), v[j + 1]));
                v[j] = _mm256_mul_pd(t, inv);
            }
        }
        // acc += v[j] where j <= floor(x_lane); extra lanes add exact zeros
        const __m256d top_pd = _mm256_floor_pd(x);
        for (int j = 0; j <= top_max; ++j) {
            const __m256d mask =
                _mm256_cmp_pd(_mm256_set1_pd(static_cast<double>(j)), top_pd, _CMP_LE_OQ);
            dp = _mm256_add_pd(dp, _mm256_and_pd(mask, v[j]));
        }
        dp = _mm256_min_pd(dp, _mm256_set1_pd(1.0));
    }
    // lanes with x >= k saturate to 1
    const __m256d ge_k = _mm256_cmp_pd(x, _mm256_set1_pd(static_cast<double>(k)), _CMP_GE_OQ);
    return _mm256_blendv_pd(dp, _mm256_set1_pd(1.0), ge_k);
}

template <__m256d (*Block)(int, __m256d)>
void ih_apply(int k, const double* x, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, Block(k, _mm256_loadu_pd(x + i)));
    if (i < n) {
        // pad the tail so every point runs through the same code path
        alignas(32) double xin[4] = {-1.0, -1.0, -1.0, -1.0};
        alignas(32) double res[4];
        for (std::size_t j = i; j < n; ++j) xin[j - i] = x[j];
        _mm256_store_pd(res, Block(k, _mm256_load_pd(xin)));
        for (std::size_t j = i; j < n; ++j) out[j] = res[j - i];
    }
}

void ih_pdf(int k, const double* x, double* out, std::size_t n) {
    ih_apply<ih_pdf_block>(k, x, out, n);
}

void ih_cdf(int k, const double* x, double* out, std::size_t n) {
    ih_apply<ih_cdf_block>(k, x, out, n);
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d t = _mm256_add_pd(_mm256_mul_pd(av, _mm256_loadu_pd(x + i)),
                                        _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, t);
    }
    for (; i < n; ++i) y[i] = a * x[i] + y[i];
}

double dot(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

void mean_var(const double* x, std::size_t n, double* mean, double* var) {
    if (n == 0) {
        *mean = 0.0;
        *var = 0.0;
        return;
    }
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) s += x[i];
    const double m = s / static_cast<double>(n);

    const __m256d mv = _mm256_set1_pd(m);
    __m256d acc2 = _mm256_setzero_pd();
    i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), mv);
        acc2 = _mm256_fmadd_pd(d, d, acc2);
    }
    _mm256_store_pd(lanes, acc2);
    double ss = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) {
        const double d = x[i] - m;
        ss += d * d;
    }
    *mean = m;
    *var = ss / static_cast<double>(n);
}

double max_abs_diff(const double* x, const double* y, std::size_t n) {
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d gmax = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        gmax = _mm256_max_pd(gmax, _mm256_andnot_pd(sign_mask, d));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, gmax);
    double gap = lanes[0];
    for (int l = 1; l < 4; ++l)
        if (lanes[l] > gap) gap = lanes[l];
    for (; i < n; ++i) {
        const double d = x[i] > y[i] ? x[i] - y[i] : y[i] - x[i];
        if (d > gap) gap = d;
    }
    return gap;
}

const Kernels avx2_table = {ih_pdf, ih_cdf, axpy, dot, mean_var, max_abs_diff, "avx2"};

}  // namespace

namespace detail {
const Kernels* avx2_table_ptr() { return &avx2_table; }
}

}  // namespace dhsim::kernels

#else

namespace dhsim::kernels::detail {
const Kernels* avx2_table_ptr() { return nullptr; }
}

#endif
