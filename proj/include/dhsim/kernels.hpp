#pragma once

#include <cstddef>

namespace dhsim::kernels {

enum class Isa { Scalar, Avx2 };

// Function table for the array kernels behind the statistics core. The
// scalar entries are the reference implementations; the AVX2 variants are
// equivalence-tested against them (tests/test_kernels.cpp).
//
// irwin_hall_pdf/cdf evaluate the order-k Irwin-Hall density/CDF on its
// standard support [0, k] at n points. Evaluation uses the cardinal
// B-spline recurrence
//     M_1(y) = 1 on [0,1),
//     M_m(y) = (y * M_{m-1}(y) + (m - y) * M_{m-1}(y-1)) / (m - 1),
// which involves only non-negative terms on the support, unlike the
// closed-form alternating sum whose cancellation error blows up with k.
// The CDF uses the telescoping identity F_k(x) = sum_j M_{k+1}(x - j),
// j = 0..floor(x), again all non-negative.
struct Kernels {
    void (*irwin_hall_pdf)(int k, const double* x, double* out, std::size_t n);
    void (*irwin_hall_cdf)(int k, const double* x, double* out, std::size_t n);
    // y[i] += a * x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    double (*dot)(const double* x, const double* y, std::size_t n);
    // two-pass mean and (population) variance
    void (*mean_var)(const double* x, std::size_t n, double* mean, double* var);
    // max_i |x[i] - y[i]|  (KS sup gap, density sup-norm comparisons)
    double (*max_abs_diff)(const double* x, const double* y, std::size_t n);
    const char* name;
};

// Largest Irwin-Hall order the kernels accept (scratch buffers are sized
// for it; the Poisson truncation cap keeps real inputs well below).
inline constexpr int kMaxOrder = 255;

const Kernels& active();        // runtime-dispatched table
const Kernels& table(Isa isa);  // a specific table (tests, benchmarks)
bool supported(Isa isa);
void force(Isa isa);  // pin dispatch to one table; throws if unsupported
void reset_dispatch();

}  // namespace dhsim::kernels
