#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ptaa/lattice.hpp"
#include "ptaa/pt_analysis.hpp"

namespace ptaa {

enum class interaction : int { cooperative = 0, competitive = 1 };

struct witness_cut {
    // 0: horizontal (fixed gamma2', varying gamma1'); 1: vertical
    int orientation = 0;
    double fixed_coord = 0.0; // in scaled units
};

struct phase_boundary {
    double beta1 = 0.0;
    double beta2 = 0.0;
    double gamma1_pt = 0.0; // single-potential thresholds defining the scaled axes
    double gamma2_pt = 0.0;
    double r_max = 0.0;
    int resolution = 0;
    // grid[iy * resolution + ix] classifies (gamma1' = ix*h, gamma2' = iy*h), h = r_max/(res-1)
    std::vector<std::uint8_t> grid;
    // Symmetric/Broken crossing points refined along grid edges, scaled coordinates
    std::vector<std::pair<double, double>> boundary_points;
    bool reentrant = false;
    witness_cut witness; // valid when reentrant

    std::uint8_t at(int ix, int iy) const { return grid[static_cast<size_t>(iy) * resolution + ix]; }
};

inline constexpr double default_r_max = 3.0;
inline constexpr int default_resolution = 121;
inline constexpr double boundary_refine_tol = 1e-4; // scaled units

phase_boundary map_boundary(const lattice_config& lat, double beta1, double beta2,
                            double r_max = default_r_max, int resolution = default_resolution);

// Competitive iff the two single-potential breaking-index sets differ
interaction classify_interaction(const lattice_config& lat, double beta1, double beta2);

struct cut_interval {
    double lo = 0.0; // gamma1' range, refined endpoints
    double hi = 0.0;
    phase label = phase::symmetric;
};

// phase structure along the horizontal cut gamma2' = gamma2_scaled
std::vector<cut_interval> reentrance_scan(const lattice_config& lat, double beta1, double beta2,
                                          double gamma2_scaled, double gamma1_max_scaled,
                                          int steps);

} // namespace ptaa
