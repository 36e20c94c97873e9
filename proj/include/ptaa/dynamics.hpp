#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "ptaa/lattice.hpp"

namespace ptaa {

struct intensity_field {
    int n = 0;
    double t_max = 0.0;
    int steps = 0;
    std::vector<double> times;     // steps+1 samples, 0..t_max
    std::vector<double> intensity; // (steps+1) x n row-major, intensity[it*n + (k-1)]
    std::vector<double> total;     // sum over sites per time sample

    double at(int it, int site) const { return intensity[static_cast<size_t>(it) * n + site - 1]; }
};

// repeated application of exp(-iH*dt); throws overflow_error when amplitudes pass 1e150
intensity_field propagate(const tridiagonal_op& h, const std::vector<cdouble>& psi0,
                          double t_max, int steps);

// unit kick on one site (1-based)
std::vector<cdouble> site_kick(int n, int site);

// half the least-squares slope of log(total) over [t_lo, t_hi]: an estimate of max Im E
double growth_rate(const intensity_field& field, double t_lo, double t_hi);

// bounded iff the second-half peak exceeds the first-half peak by no more than 10%
std::pair<bool, double> boundedness_check(const intensity_field& field);

// dense matrix exponential, scaling and squaring with the degree-13 diagonal Pade approximant
std::vector<cdouble> expm(const std::vector<cdouble>& a, int n);

// c = a*b for dense n x n row-major; serial reference
void matmul_serial(const std::vector<cdouble>& a, const std::vector<cdouble>& b,
                   std::vector<cdouble>& c, int n);

// same contract, rows distributed across threads; bitwise identical to matmul_serial
void matmul_parallel(const std::vector<cdouble>& a, const std::vector<cdouble>& b,
                     std::vector<cdouble>& c, int n);

} // namespace ptaa
