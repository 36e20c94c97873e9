#include "ptaa/two_potential.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "ptaa/errors.hpp"
#include "ptaa/sweep.hpp"

namespace ptaa {

namespace {

struct scaled_plane {
    lattice_config lat;
    double beta1, beta2;
    double gamma1_pt, gamma2_pt;

    phase label_at(double g1_scaled, double g2_scaled) const {
        return classify_point(lat, {{0.0, g1_scaled * gamma1_pt, beta1},
                                    {0.0, g2_scaled * gamma2_pt, beta2}})
            .kind;
    }
};

scaled_plane make_plane(const lattice_config& lat, double beta1, double beta2) {
    validate(lat);
    if (beta1 == beta2)
        throw std::invalid_argument("the two potentials must have distinct periodicities");
    const auto t1 = find_threshold(lat, 0.0, beta1);
    const auto t2 = find_threshold(lat, 0.0, beta2);
    if (!t1.found)
        throw analysis_error("no single-potential threshold for beta = " + std::to_string(beta1) +
                             ", scaled axes undefined");
    if (!t2.found)
        throw analysis_error("no single-potential threshold for beta = " + std::to_string(beta2) +
                             ", scaled axes undefined");
    return {lat, beta1, beta2, t1.gamma_pt, t2.gamma_pt};
}

// bisect the Symmetric/Broken crossing on the segment between two oppositely
// labeled points; one coordinate is held fixed
double refine_crossing(const scaled_plane& plane, bool vary_first, double fixed, double a,
                       double b, phase label_a) {
    while (b - a > boundary_refine_tol) {
        const double mid = 0.5 * (a + b);
        const phase lm = vary_first ? plane.label_at(mid, fixed) : plane.label_at(fixed, mid);
        if (lm == label_a)
            a = mid;
        else
            b = mid;
    }
    return 0.5 * (a + b);
}

} // namespace

phase_boundary map_boundary(const lattice_config& lat, double beta1, double beta2, double r_max,
                            int resolution) {
    if (resolution < 2)
        throw std::invalid_argument("raster needs at least 2 points per axis");
    if (!(r_max > 0.0))
        throw std::invalid_argument("r_max must be positive");
    const auto plane = make_plane(lat, beta1, beta2);

    phase_boundary out;
    out.beta1 = beta1;
    out.beta2 = beta2;
    out.gamma1_pt = plane.gamma1_pt;
    out.gamma2_pt = plane.gamma2_pt;
    out.r_max = r_max;
    out.resolution = resolution;
    out.grid.assign(static_cast<size_t>(resolution) * resolution, 0);

    const double h = r_max / (resolution - 1);
    parallel_for(static_cast<long long>(resolution) * resolution, default_workers(),
                 [&](long long idx) {
                     const int ix = static_cast<int>(idx % resolution);
                     const int iy = static_cast<int>(idx / resolution);
                     const phase p = plane.label_at(ix * h, iy * h);
                     out.grid[idx] = p == phase::broken ? 1 : 0;
                 });

    // crossing edges, horizontal sweep first, refined to the tolerance
    for (int iy = 0; iy < resolution; ++iy)
        for (int ix = 0; ix + 1 < resolution; ++ix)
            if (out.at(ix, iy) != out.at(ix + 1, iy)) {
                const phase la = out.at(ix, iy) ? phase::broken : phase::symmetric;
                const double g =
                    refine_crossing(plane, true, iy * h, ix * h, (ix + 1) * h, la);
                out.boundary_points.emplace_back(g, iy * h);
            }
    for (int ix = 0; ix < resolution; ++ix)
        for (int iy = 0; iy + 1 < resolution; ++iy)
            if (out.at(ix, iy) != out.at(ix, iy + 1)) {
                const phase la = out.at(ix, iy) ? phase::broken : phase::symmetric;
                const double g =
                    refine_crossing(plane, false, ix * h, iy * h, (iy + 1) * h, la);
                out.boundary_points.emplace_back(ix * h, g);
            }

    // a cut with three or more constant-label runs witnesses re-entrance
    auto runs_in_row = [&](int iy) {
        int runs = 1;
        for (int ix = 0; ix + 1 < resolution; ++ix)
            if (out.at(ix, iy) != out.at(ix + 1, iy))
                ++runs;
        return runs;
    };
    auto runs_in_col = [&](int ix) {
        int runs = 1;
        for (int iy = 0; iy + 1 < resolution; ++iy)
            if (out.at(ix, iy) != out.at(ix, iy + 1))
                ++runs;
        return runs;
    };
    for (int iy = 0; iy < resolution && !out.reentrant; ++iy)
        if (runs_in_row(iy) >= 3) {
            out.reentrant = true;
            out.witness = {0, iy * h};
        }
    for (int ix = 0; ix < resolution && !out.reentrant; ++ix)
        if (runs_in_col(ix) >= 3) {
            out.reentrant = true;
            out.witness = {1, ix * h};
        }
    return out;
}

interaction classify_interaction(const lattice_config& lat, double beta1, double beta2) {
    if (beta1 == beta2)
        throw std::invalid_argument("the two potentials must have distinct periodicities");
    const auto p1 = breaking_indices(lat, 0.0, beta1);
    const auto p2 = breaking_indices(lat, 0.0, beta2);
    const std::set<index_pair> s1(p1.begin(), p1.end());
    const std::set<index_pair> s2(p2.begin(), p2.end());
    return s1 == s2 ? interaction::cooperative : interaction::competitive;
}

std::vector<cut_interval> reentrance_scan(const lattice_config& lat, double beta1, double beta2,
                                          double gamma2_scaled, double gamma1_max_scaled,
                                          int steps) {
    if (steps < 2)
        throw std::invalid_argument("cut needs at least 2 sample points");
    if (!(gamma2_scaled >= 0.0))
        throw std::invalid_argument("gamma2 must be non-negative");
    if (!(gamma1_max_scaled > 0.0))
        throw std::invalid_argument("cut extent must be positive");
    const auto plane = make_plane(lat, beta1, beta2);

    std::vector<phase> labels(steps);
    parallel_for(steps, default_workers(), [&](long long k) {
        labels[k] = plane.label_at(gamma1_max_scaled * k / (steps - 1), gamma2_scaled);
    });

    std::vector<cut_interval> intervals;
    double start = 0.0;
    for (int k = 0; k + 1 < steps; ++k) {
        if (labels[k] == labels[k + 1])
            continue;
        const double a = gamma1_max_scaled * k / (steps - 1);
        const double b = gamma1_max_scaled * (k + 1) / (steps - 1);
        const double cross = refine_crossing(plane, true, gamma2_scaled, a, b, labels[k]);
        intervals.push_back({start, cross, labels[k]});
        start = cross;
    }
    intervals.push_back({start, gamma1_max_scaled, labels[steps - 1]});
    return intervals;
}

} // namespace ptaa
