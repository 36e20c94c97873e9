#pragma once

#include <complex>
#include <vector>

#include "ptaa/lattice.hpp"

namespace ptaa {

struct spectrum {
    // all N eigenvalues, ascending by (real, imag)
    std::vector<cdouble> values;
    // per-eigenvalue Newton-correction magnitudes |p(E)/p'(E)|, floored at recurrence noise
    std::vector<double> residuals;
    // true when the dense unitary-QR path produced the values instead of the tridiagonal QL
    bool dense_fallback = false;

    double max_abs_imag() const;
};

// spectral magnitude used for solver tolerances: 2J + max |diag|
double solver_scale(const tridiagonal_op& h);

// all eigenvalues with verified trace identities; throws solver_error on non-convergence
spectrum eigenvalues(const tridiagonal_op& h);

struct char_poly_value {
    cdouble value;      // det(zI - H) = value * 2^exp2
    cdouble derivative; // d/dz det(zI - H) = derivative * 2^exp2
    int exp2;
};

// three-term determinant recurrence with power-of-two rescaling
char_poly_value char_poly_eval(const tridiagonal_op& h, cdouble z);

// p(z)/p'(z); the rescaling exponent cancels in the ratio
cdouble newton_correction(const tridiagonal_op& h, cdouble z);

} // namespace ptaa
