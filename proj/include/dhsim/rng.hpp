#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <random>

namespace dhsim {

// Deterministic sampling helpers on top of std::mt19937_64. The engine's
// output sequence is fixed by the standard; the distributions here are
// hand-rolled (inverse CDF / rejection) so that a given seed produces the
// same stream on every standard library, which is what makes reports
// byte-reproducible across builds.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform double in [0, 1), 53 random bits
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // unbiased uniform integer in [lo, hi]
    std::uint64_t uniform_u64(std::uint64_t lo, std::uint64_t hi) {
        assert(lo <= hi);
        const std::uint64_t n = hi - lo + 1;  // n == 0 means the full 2^64 range
        if (n == 0) return next_u64();
        const std::uint64_t reject_below = (0 - n) % n;
        std::uint64_t x = next_u64();
        while (x < reject_below) x = next_u64();
        return lo + x % n;
    }

    double exponential(double rate) {
        assert(rate > 0.0);
        return -std::log1p(-uniform()) / rate;
    }

    // Pareto (Lomax-free, classic form): support [scale, inf)
    double pareto(double shape, double scale) {
        assert(shape > 0.0 && scale > 0.0);
        return scale * std::pow(1.0 - uniform(), -1.0 / shape);
    }

    // Knuth product-of-uniforms Poisson sampler; fine for the moderate
    // means used here (exp(-mean) must not underflow, mean <~ 700).
    int poisson(double mean) {
        assert(mean >= 0.0 && mean < 700.0);
        if (mean <= 0.0) return 0;
        const double limit = std::exp(-mean);
        int k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform();
        } while (p > limit);
        return k - 1;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace dhsim
