#include "ptaa/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ptaa {

void validate(const lattice_config& lat) {
    if (lat.n < 1)
        throw std::invalid_argument("lattice size must be at least 1, got " + std::to_string(lat.n));
    if (!(lat.j > 0.0) || !std::isfinite(lat.j))
        throw std::invalid_argument("hopping energy must be positive and finite");
}

void validate(const potential_term& term) {
    if (!std::isfinite(term.v0))
        throw std::invalid_argument("modulation amplitude must be finite");
    if (!(term.gamma >= 0.0) || !std::isfinite(term.gamma))
        throw std::invalid_argument("loss-gain strength must be non-negative");
    if (!(term.beta >= 0.0) || !(term.beta < 1.0))
        throw std::invalid_argument("periodicity must lie in [0, 1), got " + std::to_string(term.beta));
}

std::vector<cdouble> build_potential(const lattice_config& lat, const potential_term& term) {
    validate(lat);
    validate(term);
    const double nc = lat.center();
    const double w = 2.0 * std::numbers::pi * term.beta;
    std::vector<cdouble> v(lat.n);
    for (int n = 1; n <= lat.n; ++n) {
        // n - nc is exact (integer or half-integer), so mirror sites negate the
        // argument exactly and V(n) = conj(V(N+1-n)) holds at machine precision
        const double arg = w * (n - nc);
        v[n - 1] = cdouble(term.v0 * std::cos(arg), term.gamma * std::sin(arg));
    }
    return v;
}

tridiagonal_op build_hamiltonian(const lattice_config& lat,
                                 const std::vector<potential_term>& terms) {
    validate(lat);
    if (terms.size() > 2)
        throw std::invalid_argument("at most two potential terms are supported, got " +
                                    std::to_string(terms.size()));
    tridiagonal_op h;
    h.diag.assign(lat.n, cdouble(0.0, 0.0));
    h.offdiag = -lat.j;
    for (const auto& term : terms) {
        const auto v = build_potential(lat, term);
        for (int i = 0; i < lat.n; ++i)
            h.diag[i] += v[i];
    }
    return h;
}

std::vector<chain_mode> hermitian_reference(const lattice_config& lat) {
    validate(lat);
    std::vector<chain_mode> modes(lat.n);
    for (int p = 1; p <= lat.n; ++p) {
        const double k = p * std::numbers::pi / (lat.n + 1);
        modes[p - 1] = chain_mode{p, -2.0 * lat.j * std::cos(k), lat.n + 1 - p};
    }
    return modes;
}

double mode_amplitude(const lattice_config& lat, int p, int site) {
    validate(lat);
    if (p < 1 || p > lat.n)
        throw std::invalid_argument("mode index out of range");
    if (site < 1 || site > lat.n)
        throw std::invalid_argument("site index out of range");
    return std::sin(p * std::numbers::pi * site / (lat.n + 1));
}

} // namespace ptaa
