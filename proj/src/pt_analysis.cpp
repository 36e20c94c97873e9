#include "ptaa/pt_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "ptaa/errors.hpp"

namespace ptaa {

namespace {

std::vector<index_pair> conjugate_pairs(const spectrum& spec, double tol_abs) {
    const int n = static_cast<int>(spec.values.size());
    std::vector<int> complex_idx;
    for (int i = 0; i < n; ++i)
        if (std::abs(spec.values[i].imag()) > tol_abs)
            complex_idx.push_back(i);
    if (complex_idx.empty())
        return {};
    if (complex_idx.size() % 2 != 0)
        throw analysis_error("odd number of complex eigenvalues, conjugation symmetry violated");

    // match each upper-half eigenvalue to the nearest unused lower-half one
    std::vector<int> upper, lower;
    for (int i : complex_idx)
        (spec.values[i].imag() > 0.0 ? upper : lower).push_back(i);
    if (upper.size() != lower.size())
        throw analysis_error("complex eigenvalues do not split into conjugate halves");

    std::vector<index_pair> pairs;
    std::vector<bool> used(lower.size(), false);
    for (int i : upper) {
        const cdouble target = std::conj(spec.values[i]);
        int best = -1;
        double best_dist = 0.0;
        for (size_t m = 0; m < lower.size(); ++m) {
            if (used[m])
                continue;
            const double dist = std::abs(spec.values[lower[m]] - target);
            if (best < 0 || dist < best_dist) {
                best = static_cast<int>(m);
                best_dist = dist;
            }
        }
        const int jdx = lower[best];
        const double allowed =
            std::max(16.0 * (spec.residuals[i] + spec.residuals[jdx]), 0.25 * tol_abs);
        if (best_dist > allowed)
            throw analysis_error("ambiguous conjugate pairing: distance " +
                                 std::to_string(best_dist) + " exceeds residual bound " +
                                 std::to_string(allowed));
        used[best] = true;
        // spectrum is sorted by (Re, Im), so positions are the real-part ranks
        pairs.emplace_back(std::min(i, jdx) + 1, std::max(i, jdx) + 1);
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

std::vector<index_pair> pairs_just_past_threshold(const lattice_config& lat, double v0,
                                                  double beta, const threshold_result& thr) {
    const double scale = classification_scale(lat, {{v0, thr.gamma_pt, beta}});
    const int lattice_n = lat.n;
    double delta = 1e-3;
    for (int attempt = 0;; ++attempt) {
        const double gamma = std::max(thr.gamma_pt * (1.0 + delta), thr.bracket_hi);
        const auto spec = eigenvalues(build_hamiltonian(lat, {{v0, gamma, beta}}));
        auto pairs = conjugate_pairs(spec, reality_tol * scale);
        const size_t expected_max = (v0 == 0.0) ? 2 : 1;
        if (pairs.size() > expected_max && attempt < 10) {
            delta *= 0.5; // a later pair has already broken; probe closer to threshold
            continue;
        }
        if (pairs.empty())
            throw analysis_error("no complex pair found just past threshold");
        if (pairs.size() > expected_max)
            throw analysis_error("more broken pairs than a first crossing allows: " +
                                 std::to_string(pairs.size()));
        for (const auto& [a, b] : pairs) {
            if (b != a + 1)
                throw analysis_error("breaking pair (" + std::to_string(a) + "," +
                                     std::to_string(b) + ") is not adjacent in rank");
        }
        if (v0 == 0.0) {
            // pure loss-gain spectra break in particle-hole mirrored duos
            const std::set<index_pair> have(pairs.begin(), pairs.end());
            for (const auto& [a, b] : pairs) {
                const index_pair mirror{lattice_n + 1 - b, lattice_n + 1 - a};
                if (have.find(mirror) == have.end())
                    throw analysis_error("mirror pair (" + std::to_string(mirror.first) + "," +
                                         std::to_string(mirror.second) + ") missing for (" +
                                         std::to_string(a) + "," + std::to_string(b) + ")");
            }
        }
        return pairs;
    }
}

} // namespace

double classification_scale(const lattice_config& lat, const std::vector<potential_term>& terms) {
    double s = 2.0 * lat.j;
    for (const auto& t : terms)
        s += std::abs(t.v0) + t.gamma;
    return s;
}

phase_label classify(const spectrum& spec, double tol, double scale) {
    if (spec.values.empty())
        throw std::invalid_argument("empty spectrum");
    if (!(tol > 0.0))
        throw std::invalid_argument("tolerance must be positive");
    phase_label label;
    label.max_abs_im = spec.max_abs_imag();
    label.tol_used = tol * scale;
    label.kind = label.max_abs_im > label.tol_used ? phase::broken : phase::symmetric;
    return label;
}

phase_label classify_point(const lattice_config& lat, const std::vector<potential_term>& terms) {
    const auto spec = eigenvalues(build_hamiltonian(lat, terms));
    return classify(spec, reality_tol, classification_scale(lat, terms));
}

threshold_result find_threshold(const lattice_config& lat, double v0, double beta,
                                double gamma_max) {
    validate(lat);
    if (!(gamma_max > 0.0))
        throw std::invalid_argument("gamma_max must be positive");
    validate(potential_term{v0, 0.0, beta});

    auto broken_at = [&](double gamma) {
        return classify_point(lat, {{v0, gamma, beta}}).kind == phase::broken;
    };

    threshold_result res;
    res.presample_count = presample_points;
    res.gamma_max = gamma_max;

    double lo = 0.0, hi = 0.0;
    bool crossed = false;
    for (int k = 1; k <= presample_points; ++k) {
        const double g = gamma_max * k / presample_points;
        if (broken_at(g)) {
            hi = g;
            crossed = true;
            break;
        }
        lo = g;
    }
    if (!crossed) {
        res.found = false;
        return res;
    }

    const double width = bisection_tol * lat.j;
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        if (broken_at(mid))
            hi = mid;
        else
            lo = mid;
    }
    res.found = true;
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    res.gamma_pt = 0.5 * (lo + hi);
    res.breaking_pairs = pairs_just_past_threshold(lat, v0, beta, res);
    return res;
}

std::vector<index_pair> breaking_indices(const lattice_config& lat, double v0, double beta,
                                         double gamma_max) {
    const auto thr = find_threshold(lat, v0, beta, gamma_max);
    if (!thr.found)
        throw analysis_error("no threshold below gamma_max = " + std::to_string(gamma_max) +
                             ", breaking indices undefined");
    return thr.breaking_pairs;
}

double average_gain(int n, double beta) {
    if (n < 2)
        throw std::invalid_argument("lattice size must be at least 2");
    if (!(beta > 0.0) || !(beta < 1.0))
        throw std::invalid_argument("average gain requires 0 < beta < 1");
    const double pi = std::numbers::pi;
    if (n % 2 == 0) {
        const double s = std::sin(0.5 * n * pi * beta);
        return s * s / std::sin(pi * beta);
    }
    return std::sin(0.5 * pi * beta * (n - 1)) * std::sin(0.5 * pi * beta * (n + 1)) /
           std::sin(pi * beta);
}

extrema_prediction predict_extrema(int n) {
    if (n < 2)
        throw std::invalid_argument("lattice size must be at least 2");
    extrema_prediction out;
    out.maxima.reserve(n);
    for (int k = 0; k < n; ++k)
        out.maxima.push_back((2.0 * k + 1.0) / (2.0 * n));
    out.minima.reserve(n - 1);
    for (int k = 1; k < n; ++k)
        out.minima.push_back(static_cast<double>(k) / n);
    return out;
}

scaling_fit_result scaling_fit(const std::vector<std::pair<int, double>>& thresholds) {
    std::set<int> sizes;
    for (const auto& [n, g] : thresholds) {
        if (n < 2 || !(g > 0.0))
            throw std::invalid_argument("scaling fit needs N >= 2 and positive thresholds");
        sizes.insert(n);
    }
    if (sizes.size() < 3)
        throw std::invalid_argument("scaling fit needs at least 3 distinct lattice sizes");

    const double m = static_cast<double>(thresholds.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [n, g] : thresholds) {
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(g);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / m;

    double ss_res = 0.0, ss_tot = 0.0;
    const double ymean = sy / m;
    for (const auto& [n, g] : thresholds) {
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(g);
        const double fit = intercept + slope * x;
        ss_res += (y - fit) * (y - fit);
        ss_tot += (y - ymean) * (y - ymean);
    }

    scaling_fit_result out;
    out.exponent = slope;
    out.c_beta = std::exp(intercept);
    out.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return out;
}

} // namespace ptaa
