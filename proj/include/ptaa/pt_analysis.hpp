#pragma once

#include <utility>
#include <vector>

#include "ptaa/eigensolver.hpp"
#include "ptaa/lattice.hpp"

namespace ptaa {

enum class phase : int { symmetric = 0, broken = 1 };

struct phase_label {
    phase kind = phase::symmetric;
    double max_abs_im = 0.0; // largest |Im E| in the spectrum
    double tol_used = 0.0;   // absolute reality tolerance that was applied
};

using index_pair = std::pair<int, int>; // 1-based ranks, lo < hi

struct threshold_result {
    bool found = false;      // false: still symmetric at gamma_max
    double gamma_pt = 0.0;   // bracket midpoint, in units of J
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int presample_count = 0;
    double gamma_max = 0.0;
    std::vector<index_pair> breaking_pairs; // filled when found
};

struct scaling_fit_result {
    double c_beta = 0.0;   // prefactor of the C/N law
    double exponent = 0.0; // fitted power of N
    double r_squared = 0.0;
};

inline constexpr double reality_tol = 1e-8;        // relative to classification scale
inline constexpr double bisection_tol = 1e-6;      // absolute bracket width, units of J
inline constexpr int presample_points = 256;
inline constexpr double default_gamma_max = 10.0;  // units of J

// magnitude bound used by the reality tolerance: 2J + sum(|V0_i| + gamma_i)
double classification_scale(const lattice_config& lat, const std::vector<potential_term>& terms);

phase_label classify(const spectrum& spec, double tol, double scale);

phase_label classify_point(const lattice_config& lat, const std::vector<potential_term>& terms);

// presample-then-bisect search for the first Symmetric -> Broken crossing of a single term
threshold_result find_threshold(const lattice_config& lat, double v0, double beta,
                                double gamma_max = default_gamma_max);

// conjugate pairs just past threshold, as adjacent real-part ranks (n, n+1)
std::vector<index_pair> breaking_indices(const lattice_config& lat, double v0, double beta,
                                         double gamma_max = default_gamma_max);

// average gain-site potential: closed forms for even and odd N
double average_gain(int n, double beta);

struct extrema_prediction {
    std::vector<double> maxima; // (2k+1)/2N, k = 0..N-1
    std::vector<double> minima; // k/N, k = 1..N-1
};

extrema_prediction predict_extrema(int n);

// log-log least squares over (N, gamma_pt) samples at fixed beta
scaling_fit_result scaling_fit(const std::vector<std::pair<int, double>>& thresholds);

} // namespace ptaa
