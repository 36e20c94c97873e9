#include "ptaa/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "ptaa/errors.hpp"

namespace ptaa {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr int sweep_cap_factor = 40;
constexpr double trace_rel_tol = 1e-10;

double cabs(const cdouble& z) { return std::abs(z); }

// choose the square-root branch that keeps g + r away from cancellation
cdouble aligned_sqrt(cdouble g) {
    cdouble r = std::sqrt(g * g + 1.0);
    if ((std::conj(g) * r).real() < 0.0)
        r = -r;
    return r;
}

// implicit-shift QL for a complex symmetric tridiagonal; rotations satisfy
// c^2 + s^2 = 1 and are not unitary, so results must pass the trace gates
std::optional<std::vector<cdouble>> ql_tridiagonal(const tridiagonal_op& h) {
    const int n = h.size();
    std::vector<cdouble> d = h.diag;
    std::vector<cdouble> e(n, cdouble(0.0, 0.0));
    for (int i = 0; i < n - 1; ++i)
        e[i] = cdouble(h.offdiag, 0.0);
    if (n == 1)
        return d;

    int total = 0;
    const int cap = sweep_cap_factor * n;
    for (int l = 0; l < n; ++l) {
        for (;;) {
            int m = l;
            while (m < n - 1 && cabs(e[m]) > 4.0 * eps * (cabs(d[m]) + cabs(d[m + 1])))
                ++m;
            if (m == l)
                break;
            if (total >= cap)
                return std::nullopt;
            ++total;

            cdouble g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            cdouble r = aligned_sqrt(g);
            g = d[m] - d[l] + e[l] / (g + r);
            cdouble s(1.0, 0.0);
            cdouble c(1.0, 0.0);
            cdouble p(0.0, 0.0);
            bool recovered = false;
            for (int i = m - 1; i >= l; --i) {
                cdouble f = s * e[i];
                cdouble b = c * e[i];
                r = std::sqrt(f * f + g * g);
                if (cabs(r) < 1e-2 * (cabs(f) + cabs(g)))
                    return std::nullopt; // rotation breakdown, isotropic direction
                e[i + 1] = r;
                if (r == cdouble(0.0, 0.0)) {
                    d[i + 1] -= p;
                    e[m] = cdouble(0.0, 0.0);
                    recovered = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (!recovered) {
                d[l] -= p;
                e[l] = g;
                e[m] = cdouble(0.0, 0.0);
            }
        }
    }
    return d;
}

struct givens_rotation {
    double c;
    cdouble s;
};

givens_rotation make_givens(cdouble x, cdouble y) {
    const double ax = cabs(x);
    const double ay = cabs(y);
    if (ay == 0.0)
        return {1.0, cdouble(0.0, 0.0)};
    if (ax == 0.0)
        return {0.0, std::conj(y) / ay};
    const double nrm = std::hypot(ax, ay);
    return {ax / nrm, (x / ax) * (std::conj(y) / nrm)};
}

// single-shift implicit QR with unitary rotations on the dense Hessenberg form;
// backward stable on every input at O(N^3) cost
std::vector<cdouble> dense_qr(const tridiagonal_op& h) {
    const int n = h.size();
    const double scale = solver_scale(h);
    std::vector<cdouble> m(static_cast<size_t>(n) * n, cdouble(0.0, 0.0));
    auto at = [&m, n](int i, int j) -> cdouble& { return m[static_cast<size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        at(i, i) = h.diag[i];
    for (int i = 0; i < n - 1; ++i) {
        at(i, i + 1) = cdouble(h.offdiag, 0.0);
        at(i + 1, i) = cdouble(h.offdiag, 0.0);
    }

    std::vector<cdouble> w(n);
    long long itn = static_cast<long long>(sweep_cap_factor) * n;
    int en = n - 1;
    int its = 0;
    while (en >= 0) {
        int l = en;
        while (l > 0) {
            double small = eps * (cabs(at(l - 1, l - 1)) + cabs(at(l, l)));
            if (small == 0.0)
                small = eps * scale;
            if (cabs(at(l, l - 1)) <= small)
                break;
            --l;
        }
        if (l == en) {
            w[en] = at(en, en);
            --en;
            its = 0;
            continue;
        }
        if (itn <= 0)
            throw solver_error("eigenvalue iteration cap exceeded on rows " +
                                   std::to_string(l + 1) + ".." + std::to_string(en + 1),
                               l, en);

        cdouble kappa;
        if (its % 20 == 19) {
            double x = cabs(at(en, en - 1));
            if (en - 2 >= l)
                x += cabs(at(en - 1, en - 2));
            kappa = cdouble(x, 0.0);
        } else {
            const cdouble a = at(en - 1, en - 1);
            const cdouble b = at(en - 1, en);
            const cdouble c = at(en, en - 1);
            const cdouble dd = at(en, en);
            const cdouble tr = a + dd;
            const cdouble det = a * dd - b * c;
            const cdouble disc = std::sqrt(tr * tr - 4.0 * det);
            const cdouble r1 = 0.5 * (tr + disc);
            const cdouble r2 = 0.5 * (tr - disc);
            kappa = (cabs(r1 - dd) < cabs(r2 - dd)) ? r1 : r2;
        }
        ++its;
        --itn;

        cdouble x = at(l, l) - kappa;
        cdouble y = at(l + 1, l);
        for (int k = l; k < en; ++k) {
            if (k > l) {
                x = at(k, k - 1);
                y = at(k + 1, k - 1);
            }
            const auto [c, s] = make_givens(x, y);
            const int c0 = std::max(l, k - 1);
            for (int jcol = c0; jcol <= en; ++jcol) {
                const cdouble hk = at(k, jcol);
                const cdouble hk1 = at(k + 1, jcol);
                at(k, jcol) = c * hk + s * hk1;
                at(k + 1, jcol) = -std::conj(s) * hk + c * hk1;
            }
            const int r1 = std::min(k + 2, en);
            for (int irow = l; irow <= r1; ++irow) {
                const cdouble hk = at(irow, k);
                const cdouble hk1 = at(irow, k + 1);
                at(irow, k) = hk * c + hk1 * std::conj(s);
                at(irow, k + 1) = -hk * s + hk1 * c;
            }
        }
    }
    return w;
}

bool trace_identities_hold(const tridiagonal_op& h, const std::vector<cdouble>& vals) {
    const int n = h.size();
    const double scale = solver_scale(h);
    const double jsq = h.offdiag * h.offdiag;
    cdouble sum(0.0, 0.0), sum_sq(0.0, 0.0);
    for (const auto& v : vals) {
        sum += v;
        sum_sq += v * v;
    }
    cdouble tr(0.0, 0.0), tr_sq(0.0, 0.0);
    for (const auto& d : h.diag) {
        tr += d;
        tr_sq += d * d;
    }
    tr_sq += 2.0 * (n - 1) * jsq;
    const double bound = trace_rel_tol * n * scale;
    return cabs(sum - tr) <= bound && cabs(sum_sq - tr_sq) <= bound * scale;
}

} // namespace

double spectrum::max_abs_imag() const {
    double m = 0.0;
    for (const auto& v : values)
        m = std::max(m, std::abs(v.imag()));
    return m;
}

double solver_scale(const tridiagonal_op& h) {
    double dmax = 0.0;
    for (const auto& d : h.diag)
        dmax = std::max(dmax, cabs(d));
    return 2.0 * std::abs(h.offdiag) + dmax;
}

char_poly_value char_poly_eval(const tridiagonal_op& h, cdouble z) {
    const int n = h.size();
    if (n < 1)
        throw std::invalid_argument("empty operator");
    const double jsq = h.offdiag * h.offdiag;

    // p_k and dp_k share one power-of-two exponent; renormalizing all four
    // state variables together keeps the recurrence exact in the ratio
    cdouble pm1(1.0, 0.0), p = z - h.diag[0];
    cdouble dm1(0.0, 0.0), dp(1.0, 0.0);
    int exp2 = 0;
    for (int k = 1; k < n; ++k) {
        const cdouble a = z - h.diag[k];
        const cdouble pn = a * p - jsq * pm1;
        const cdouble dn = p + a * dp - jsq * dm1;
        pm1 = p;
        p = pn;
        dm1 = dp;
        dp = dn;
        double mag = std::max(std::max(cabs(p), cabs(pm1)), std::max(cabs(dp), cabs(dm1)));
        if (!std::isfinite(mag))
            throw evaluation_error("determinant recurrence left the representable range at site " +
                                       std::to_string(k + 1),
                                   k + 1);
        while (mag > 0x1p+512) {
            pm1 *= 0x1p-512;
            p *= 0x1p-512;
            dm1 *= 0x1p-512;
            dp *= 0x1p-512;
            exp2 += 512;
            mag *= 0x1p-512;
        }
        while (mag != 0.0 && mag < 0x1p-512) {
            pm1 *= 0x1p+512;
            p *= 0x1p+512;
            dm1 *= 0x1p+512;
            dp *= 0x1p+512;
            exp2 -= 512;
            mag *= 0x1p+512;
        }
    }
    return {p, dp, exp2};
}

cdouble newton_correction(const tridiagonal_op& h, cdouble z) {
    const auto pv = char_poly_eval(h, z);
    if (pv.derivative == cdouble(0.0, 0.0))
        return cdouble(std::numeric_limits<double>::infinity(), 0.0);
    return pv.value / pv.derivative;
}

spectrum eigenvalues(const tridiagonal_op& h) {
    const int n = h.size();
    if (n < 1)
        throw std::invalid_argument("empty operator");

    spectrum out;
    auto ql = ql_tridiagonal(h);
    if (ql && trace_identities_hold(h, *ql)) {
        out.values = std::move(*ql);
    } else {
        out.values = dense_qr(h);
        out.dense_fallback = true;
        if (!trace_identities_hold(h, out.values))
            throw solver_error("eigenvalues failed the trace identities on both paths", 0, n - 1);
    }

    std::sort(out.values.begin(), out.values.end(), [](const cdouble& a, const cdouble& b) {
        if (a.real() != b.real())
            return a.real() < b.real();
        return a.imag() < b.imag();
    });

    const double floor = n * eps * solver_scale(h);
    out.residuals.resize(n);
    for (int i = 0; i < n; ++i)
        out.residuals[i] = std::max(cabs(newton_correction(h, out.values[i])), floor);
    return out;
}

} // namespace ptaa
