#include "ptaa/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ptaa/errors.hpp"

namespace ptaa {

namespace {

constexpr double amplitude_cap = 1e150;

// degree-13 diagonal Pade coefficients and its validity radius for the 1-norm
constexpr double pade13_theta = 5.371920351148152;
constexpr double pade13_b[14] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                 1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                 670442572800.0,      33522128640.0,       1323241920.0,
                                 40840800.0,          960960.0,            16380.0,
                                 182.0,               1.0};

void compute_row(const std::vector<cdouble>& a, const std::vector<cdouble>& b,
                 std::vector<cdouble>& c, int n, int i) {
    cdouble* crow = c.data() + static_cast<size_t>(i) * n;
    const cdouble* arow = a.data() + static_cast<size_t>(i) * n;
    for (int j = 0; j < n; ++j)
        crow[j] = cdouble(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
        const cdouble aik = arow[k];
        const cdouble* brow = b.data() + static_cast<size_t>(k) * n;
        for (int j = 0; j < n; ++j)
            crow[j] += aik * brow[j];
    }
}

double norm1(const std::vector<cdouble>& a, int n) {
    double best = 0.0;
    for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int i = 0; i < n; ++i)
            col += std::abs(a[static_cast<size_t>(i) * n + j]);
        best = std::max(best, col);
    }
    return best;
}

// X such that (v - u) X = (v + u), by partial-pivot LU on (v - u)
std::vector<cdouble> solve_pade(std::vector<cdouble> vminus, std::vector<cdouble> x, int n) {
    auto lu = [&vminus, n](int i, int j) -> cdouble& {
        return vminus[static_cast<size_t>(i) * n + j];
    };
    auto rhs = [&x, n](int i, int j) -> cdouble& { return x[static_cast<size_t>(i) * n + j]; };

    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(lu(col, col));
        for (int i = col + 1; i < n; ++i)
            if (std::abs(lu(i, col)) > best) {
                best = std::abs(lu(i, col));
                piv = i;
            }
        if (best == 0.0)
            throw analysis_error("propagator linear solve hit a singular pivot");
        if (piv != col) {
            for (int j = 0; j < n; ++j)
                std::swap(lu(piv, j), lu(col, j));
            for (int j = 0; j < n; ++j)
                std::swap(rhs(piv, j), rhs(col, j));
        }
        const cdouble d = lu(col, col);
        for (int i = col + 1; i < n; ++i) {
            const cdouble f = lu(i, col) / d;
            if (f == cdouble(0.0, 0.0))
                continue;
            for (int j = col + 1; j < n; ++j)
                lu(i, j) -= f * lu(col, j);
            for (int j = 0; j < n; ++j)
                rhs(i, j) -= f * rhs(col, j);
        }
    }
    for (int col = n - 1; col >= 0; --col) {
        const cdouble d = lu(col, col);
        for (int j = 0; j < n; ++j)
            rhs(col, j) /= d;
        for (int i = 0; i < col; ++i) {
            const cdouble f = lu(i, col);
            if (f == cdouble(0.0, 0.0))
                continue;
            for (int j = 0; j < n; ++j)
                rhs(i, j) -= f * rhs(col, j);
        }
    }
    return x;
}

} // namespace

void matmul_serial(const std::vector<cdouble>& a, const std::vector<cdouble>& b,
                   std::vector<cdouble>& c, int n) {
    for (int i = 0; i < n; ++i)
        compute_row(a, b, c, n, i);
}

void matmul_parallel(const std::vector<cdouble>& a, const std::vector<cdouble>& b,
                     std::vector<cdouble>& c, int n) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i)
        compute_row(a, b, c, n, i);
}

std::vector<cdouble> expm(const std::vector<cdouble>& a, int n) {
    if (n < 1 || a.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("matrix exponential needs a square matrix");

    auto mul = [n](const std::vector<cdouble>& x, const std::vector<cdouble>& y) {
        std::vector<cdouble> r(static_cast<size_t>(n) * n);
        if (n >= 64)
            matmul_parallel(x, y, r, n);
        else
            matmul_serial(x, y, r, n);
        return r;
    };

    int squarings = 0;
    std::vector<cdouble> as = a;
    const double eta = norm1(a, n);
    if (eta > pade13_theta) {
        squarings = static_cast<int>(std::ceil(std::log2(eta / pade13_theta)));
        const double f = std::ldexp(1.0, -squarings);
        for (auto& z : as)
            z *= f;
    }

    const auto a2 = mul(as, as);
    const auto a4 = mul(a2, a2);
    const auto a6 = mul(a2, a4);
    const size_t nn = static_cast<size_t>(n) * n;

    std::vector<cdouble> w(nn), u(nn), v(nn);
    for (size_t i = 0; i < nn; ++i)
        w[i] = pade13_b[13] * a6[i] + pade13_b[11] * a4[i] + pade13_b[9] * a2[i];
    w = mul(a6, w);
    for (size_t i = 0; i < nn; ++i)
        w[i] += pade13_b[7] * a6[i] + pade13_b[5] * a4[i] + pade13_b[3] * a2[i];
    for (int i = 0; i < n; ++i)
        w[static_cast<size_t>(i) * n + i] += pade13_b[1];
    u = mul(as, w);

    for (size_t i = 0; i < nn; ++i)
        v[i] = pade13_b[12] * a6[i] + pade13_b[10] * a4[i] + pade13_b[8] * a2[i];
    v = mul(a6, v);
    for (size_t i = 0; i < nn; ++i)
        v[i] += pade13_b[6] * a6[i] + pade13_b[4] * a4[i] + pade13_b[2] * a2[i];
    for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i) * n + i] += pade13_b[0];

    std::vector<cdouble> vmu(nn), vpu(nn);
    for (size_t i = 0; i < nn; ++i) {
        vmu[i] = v[i] - u[i];
        vpu[i] = v[i] + u[i];
    }
    auto x = solve_pade(std::move(vmu), std::move(vpu), n);
    for (int s = 0; s < squarings; ++s)
        x = mul(x, x);
    return x;
}

std::vector<cdouble> site_kick(int n, int site) {
    if (n < 1)
        throw std::invalid_argument("lattice size must be at least 1");
    if (site < 1 || site > n)
        throw std::invalid_argument("kick site out of range: " + std::to_string(site));
    std::vector<cdouble> psi(n, cdouble(0.0, 0.0));
    psi[site - 1] = cdouble(1.0, 0.0);
    return psi;
}

intensity_field propagate(const tridiagonal_op& h, const std::vector<cdouble>& psi0, double t_max,
                          int steps) {
    const int n = h.size();
    if (n < 1)
        throw std::invalid_argument("empty operator");
    if (psi0.size() != static_cast<size_t>(n))
        throw std::invalid_argument("initial state size does not match the lattice");
    if (!(t_max > 0.0))
        throw std::invalid_argument("propagation time must be positive");
    if (steps < 2)
        throw std::invalid_argument("at least 2 time steps are required");
    double norm_sq = 0.0;
    for (const auto& z : psi0)
        norm_sq += std::norm(z);
    if (std::abs(std::sqrt(norm_sq) - 1.0) > 1e-8)
        throw std::invalid_argument("initial state must be normalized to 1");

    const double dt = t_max / steps;
    std::vector<cdouble> gen(static_cast<size_t>(n) * n, cdouble(0.0, 0.0));
    const cdouble mi_dt(0.0, -dt);
    for (int i = 0; i < n; ++i)
        gen[static_cast<size_t>(i) * n + i] = mi_dt * h.diag[i];
    for (int i = 0; i < n - 1; ++i) {
        gen[static_cast<size_t>(i) * n + i + 1] = mi_dt * h.offdiag;
        gen[static_cast<size_t>(i + 1) * n + i] = mi_dt * h.offdiag;
    }
    const auto step_op = expm(gen, n);

    intensity_field field;
    field.n = n;
    field.t_max = t_max;
    field.steps = steps;
    field.times.resize(steps + 1);
    field.intensity.resize(static_cast<size_t>(steps + 1) * n);
    field.total.resize(steps + 1);

    std::vector<cdouble> psi = psi0;
    std::vector<cdouble> next(n);
    for (int it = 0; it <= steps; ++it) {
        field.times[it] = t_max * it / steps;
        double tot = 0.0;
        double amax = 0.0;
        for (int k = 0; k < n; ++k) {
            const double inten = std::norm(psi[k]);
            field.intensity[static_cast<size_t>(it) * n + k] = inten;
            tot += inten;
            amax = std::max(amax, std::abs(psi[k]));
        }
        field.total[it] = tot;
        if (amax > amplitude_cap)
            throw overflow_error("amplitude overflow at t = " + std::to_string(field.times[it]) +
                                     "; last valid time " + std::to_string(field.times[it - 1]),
                                 field.times[it - 1]);
        if (it == steps)
            break;
        for (int i = 0; i < n; ++i) {
            cdouble acc(0.0, 0.0);
            const cdouble* row = step_op.data() + static_cast<size_t>(i) * n;
            for (int k = 0; k < n; ++k)
                acc += row[k] * psi[k];
            next[i] = acc;
        }
        psi.swap(next);
    }
    return field;
}

double growth_rate(const intensity_field& field, double t_lo, double t_hi) {
    if (!(t_lo >= 0.0) || !(t_hi <= field.t_max) || !(t_lo < t_hi))
        throw std::invalid_argument("fit window must lie inside the time grid");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    long long m = 0;
    for (int it = 0; it <= field.steps; ++it) {
        const double t = field.times[it];
        if (t < t_lo - 1e-12 || t > t_hi + 1e-12)
            continue;
        const double tot = field.total[it];
        if (!(tot > 0.0))
            throw analysis_error("non-positive total intensity inside the fit window");
        const double y = std::log(tot);
        sx += t;
        sy += y;
        sxx += t * t;
        sxy += t * y;
        ++m;
    }
    if (m < 2)
        throw std::invalid_argument("fit window contains fewer than 2 samples");
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return 0.5 * slope;
}

std::pair<bool, double> boundedness_check(const intensity_field& field) {
    if (!(field.t_max >= 10.0))
        throw std::invalid_argument("boundedness needs a span of at least 10 time units");
    const int half = field.steps / 2;
    double first = 0.0, second = 0.0, overall = 0.0;
    for (int it = 0; it <= field.steps; ++it) {
        const double tot = field.total[it];
        overall = std::max(overall, tot);
        if (it <= half)
            first = std::max(first, tot);
        else
            second = std::max(second, tot);
    }
    return {second <= 1.1 * first, overall};
}

} // namespace ptaa
