#pragma once

#include <span>
#include <vector>

#include "dhsim/rng.hpp"

namespace dhsim::stats {

struct MomentPair {
    double mean = 0.0;
    double variance = 0.0;
};

// conditional_pdf switches from the exact piecewise-polynomial evaluation to
// the normal approximation beyond this k; the approximation error there is
// far below every tolerance used in this project.
inline constexpr int kGaussianSwitchDefault = 50;

// Poisson-mixture distribution of the aggregate delay of one object:
// an atom of weight exp(-lambda*z) at d = z plus, for each k >= 1,
// a Poisson(lambda*z)-weighted shifted/scaled Irwin-Hall component on
// [z, (k+1)z]. k_max truncates the mixture where the Poisson tail drops
// below 1e-12 (capped at 10*lambda*z + 50).
struct DelayDistribution {
    double lambda = 0.0;  // arrival rate, 1/ms
    double z = 1.0;       // fetch latency, ms
    int k_max = 0;
    int gaussian_switch_k = kGaussianSwitchDefault;

    static DelayDistribution make(double lambda, double z,
                                  int gaussian_switch_k = kGaussianSwitchDefault);

    double atom_weight() const;     // exp(-lambda*z)
    double support_end() const { return (k_max + 1) * z; }
};

// P(N = k) for N ~ Poisson(lambda*z); rejects k < 0.
double poisson_count_pmf(int k, double lambda, double z);

// Conditional density of the aggregate delay given k >= 1 coalesced
// arrivals: shifted/scaled Irwin-Hall on [z, (k+1)z]. Rejects k = 0 (that
// case is the atom at z, reported by mixture_pdf).
double conditional_pdf(double d, int k, double z,
                       int gaussian_switch_k = kGaussianSwitchDefault);
void conditional_pdf_grid(int k, double z, std::span<const double> d,
                          std::span<double> out,
                          int gaussian_switch_k = kGaussianSwitchDefault);

struct MixtureDensity {
    double atom_weight = 0.0;   // mass at d == z, kept separate from the density
    double continuous = 0.0;    // density of the k >= 1 part at d
};
MixtureDensity mixture_pdf(double d, const DelayDistribution& dist);
void mixture_pdf_grid(const DelayDistribution& dist, std::span<const double> d,
                      std::span<double> out);

// P(D <= d); right-continuous, jumps by the atom weight at d == z.
double mixture_cdf(double d, const DelayDistribution& dist);
void mixture_cdf_grid(const DelayDistribution& dist, std::span<const double> d,
                      std::span<double> out);

// E[D | N=k] = z(1 + k/2), Var(D | N=k) = k z^2 / 12.
MomentPair conditional_moments(int k, double z);

// E[D] = z(1 + lambda z / 2), Var(D) = z^3 lambda / 3.
MomentPair delay_moments(double lambda, double z);

// Normal parameters matching the conditional moments, for large k.
MomentPair gaussian_approx(int k, double z);

double normal_pdf(double x, double mean, double variance);
double normal_cdf(double x, double mean, double variance);

// Monte Carlo oracle: k ~ Poisson(lambda*z), then z + sum of k U(0, z).
double sample_aggregate_delay(double lambda, double z, Rng& rng);

// Integrals of the continuous mixture part over its support, exact for the
// piecewise-polynomial density (Gauss-Legendre per unit segment, enough
// nodes for the highest polynomial degree in the mixture).
struct MixtureIntegrals {
    double mass = 0.0;           // integral of the continuous density
    double mean = 0.0;           // integral of d * f(d)
    double second_moment = 0.0;  // integral of d^2 * f(d)
};
MixtureIntegrals integrate_continuous(const DelayDistribution& dist);

// Gauss-Legendre nodes/weights on [0, 1].
void gauss_legendre_unit(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Two-sided KS statistic between a sample (sorted in place) and the mixture CDF.
double ks_statistic(std::vector<double>& samples, const DelayDistribution& dist);

}  // namespace dhsim::stats
