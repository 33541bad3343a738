#pragma once

// Test-only oracles, independent of the library code paths they check:
// residue enumeration, brute-force norm equations, and a symbolic
// second-derivative computation on the chart (x1, y1, x2, y2).

#include "padcam/cam.hpp"
#include "padcam/normalform.hpp"

#include <set>
#include <vector>

namespace padcam::testing {

inline Int pow_p_int(const Int& p, int k) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
    return r;
}

/// Squares modulo m by enumeration.
inline std::set<Int> squares_mod(const Int& m) {
    std::set<Int> s;
    for (Int z = 0; z < m; ++z) s.insert((z * z) % m);
    return s;
}

/// Brute-force solvability of z^2 = a x^2 + b y^2 mod p^e with a primitive
/// solution. Some coordinate of a primitive triple is a unit, so it is
/// enough to pin each coordinate to 1 in turn.
inline bool hilbert_brute(const Int& a_in, const Int& b_in, const Int& p, int e) {
    Int m = pow_p_int(p, e);
    auto mod = [&](Int x) { x %= m; if (x < 0) x += m; return x; };
    Int a = mod(a_in), b = mod(b_in);
    std::vector<char> sq(static_cast<size_t>(m.get_ui()), 0);
    for (Int z = 0; z < m; ++z) sq[mpz_class((z * z) % m).get_ui()] = 1;
    // z = 1: 1 - a x^2 must be b y^2
    std::vector<char> by2(static_cast<size_t>(m.get_ui()), 0);
    for (Int y = 0; y < m; ++y) by2[mpz_class((b * y * y) % m).get_ui()] = 1;
    for (Int x = 0; x < m; ++x)
        if (by2[mpz_class(mod(1 - a * x * x)).get_ui()]) return true;
    // x = 1: a + b y^2 must be a square
    for (Int y = 0; y < m; ++y)
        if (sq[mpz_class(mod(a + b * y * y)).get_ui()]) return true;
    // y = 1: a x^2 + b must be a square
    for (Int x = 0; x < m; ++x)
        if (sq[mpz_class(mod(a * x * x + b)).get_ui()]) return true;
    return false;
}

/// Hessians of J and H on the chart (x1, y1, x2, y2) obtained by expanding
/// z_i = z_i0 (1 - (x_i^2 + y_i^2)/2) to second order and reading off the
/// quadratic part; independent of the closed-form matrices.
struct ChartHessians {
    Mat4 MJ, MH;
};

inline ChartHessians chart_hessians(const SystemParams& params, int z1, int z2) {
    using Q = Quad4;  // vars: (x1, y1, x2, y2) here
    auto sq_half = [&](int i, int j) {
        // (x_i^2 + y_i^2)/2 for factor with vars (i, j)
        return (Q::term(Rat(1), i, i) + Q::term(Rat(1), j, j)).scaled(Rat(1) / 2);
    };
    Q one = Q::term(Rat(1), -1, -1);
    Q zq1 = (one - sq_half(0, 1)).scaled(Rat(z1));
    Q zq2 = (one - sq_half(2, 3)).scaled(Rat(z2));
    auto truncate2 = [](const Q& q) {
        Q r;
        for (const auto& [m, c] : q.coef) {
            int deg = m[0] + m[1] + m[2] + m[3];
            if (deg <= 2) r.coef[m] = c;
        }
        return r;
    };
    Q J = zq1.scaled(params.R1) + zq2.scaled(params.R2);
    Q coupling = Q::term(Rat(1), 0, 2) + Q::term(Rat(1), 1, 3) + truncate2(zq1 * zq2);
    Q H = zq1.scaled(1 - params.t) + coupling.scaled(params.t);
    auto hessian = [&](const Q& q) {
        Mat4 h;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Quad4::Mono m{0, 0, 0, 0};
                m[i] += 1;
                m[j] += 1;
                auto it = q.coef.find(m);
                Rat c = it == q.coef.end() ? Rat(0) : it->second;
                h[i][j] = (i == j) ? 2 * c : c;
            }
        return h;
    };
    return {hessian(truncate2(J)), hessian(truncate2(H))};
}

/// det(xI - A) for a rational 4x4 matrix, as dense coefficients c[0..4]
/// (c[d] multiplies x^d), by cofactor expansion over polynomials.
inline std::vector<Rat> charpoly_by_det(const Mat4& A) {
    using Poly = std::vector<Rat>;
    auto pmul = [](const Poly& a, const Poly& b) {
        Poly r(a.size() + b.size() - 1, Rat(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    auto padd = [](Poly a, const Poly& b) {
        if (b.size() > a.size()) a.resize(b.size(), Rat(0));
        for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
        return a;
    };
    std::vector<std::vector<Poly>> M(4, std::vector<Poly>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            M[i][j] = Poly{-A[i][j]};
            if (i == j) M[i][j].push_back(Rat(1));
        }
    // recursive cofactor on the polynomial matrix
    std::function<Poly(std::vector<std::vector<Poly>>)> det =
        [&](std::vector<std::vector<Poly>> m) -> Poly {
        size_t n = m.size();
        if (n == 1) return m[0][0];
        Poly acc{Rat(0)};
        for (size_t c = 0; c < n; ++c) {
            std::vector<std::vector<Poly>> sub;
            for (size_t i = 1; i < n; ++i) {
                std::vector<Poly> row;
                for (size_t j = 0; j < n; ++j)
                    if (j != c) row.push_back(m[i][j]);
                sub.push_back(std::move(row));
            }
            Poly term = pmul(m[0][c], det(sub));
            if (c % 2 == 1)
                for (Rat& x : term) x = -x;
            acc = padd(acc, term);
        }
        return acc;
    };
    Poly r = det(M);
    r.resize(5, Rat(0));
    return r;
}

} // namespace padcam::testing
