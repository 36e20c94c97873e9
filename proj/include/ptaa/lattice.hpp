#pragma once

#include <complex>
#include <vector>

namespace ptaa {

using cdouble = std::complex<double>;

struct lattice_config {
    int n = 2;      // site count
    double j = 1.0; // hopping energy, the energy unit

    double center() const { return 0.5 * (n + 1); }
};

// one modulation term V0*cos(2*pi*beta*(n - n_c)) + i*gamma*sin(2*pi*beta*(n - n_c))
struct potential_term {
    double v0 = 0.0;
    double gamma = 0.0;
    double beta = 0.0; // 0 <= beta < 1; beta = 0 degenerates to the constant shift V0
};

// complex symmetric tridiagonal with uniform off-diagonal -J
struct tridiagonal_op {
    std::vector<cdouble> diag;
    double offdiag = -1.0;

    int size() const { return static_cast<int>(diag.size()); }
};

void validate(const lattice_config& lat);
void validate(const potential_term& term);

// V(n) for n = 1..N; V(n) = conj(V(N+1-n)) holds for every valid term
std::vector<cdouble> build_potential(const lattice_config& lat, const potential_term& term);

// H = H0 + sum of terms; open boundary conditions; at most two terms
tridiagonal_op build_hamiltonian(const lattice_config& lat,
                                 const std::vector<potential_term>& terms);

struct chain_mode {
    int p;              // 1..N
    double energy;      // -2J cos(p*pi/(N+1))
    int p_conjugate;    // N+1-p, the particle-hole partner
};

// spectrum of the bare chain, ascending in p
std::vector<chain_mode> hermitian_reference(const lattice_config& lat);

// unnormalized eigenfunction sample sin(p*pi*site/(N+1)) of the bare chain
double mode_amplitude(const lattice_config& lat, int p, int site);

} // namespace ptaa
