#include "padcam/cam.hpp"

#include <algorithm>
#include <stdexcept>

namespace padcam {

SystemParams::SystemParams(PadicContext c, Rat tt, Rat r1, Rat r2)
    : ctx(std::move(c)), t(std::move(tt)), R1(std::move(r1)), R2(std::move(r2)) {
    if (R1 == 0 || R2 == 0)
        throw std::domain_error("invalid parameters: R1, R2 must be nonzero");
    Ord to = ord(t, ctx);
    if (!to.infinite && to.v < 0)
        throw std::domain_error("invalid parameters: t must be a p-adic integer");
    if (ord_finite(R2, ctx) >= ord_finite(R1, ctx))
        throw std::domain_error("invalid parameters: need |R2|_p > |R1|_p > 0");
}

Observable Observable::constant(const Rat& c) {
    Observable o;
    if (c != 0) o.coef[{0, 0, 0, 0, 0, 0}] = c;
    return o;
}

Observable Observable::var(int i) {
    Observable o;
    Mono m{0, 0, 0, 0, 0, 0};
    m[i] = 1;
    o.coef[m] = 1;
    return o;
}

Observable Observable::operator+(const Observable& o) const {
    Observable r = *this;
    for (const auto& [m, c] : o.coef) {
        Rat& slot = r.coef[m];
        slot += c;
        if (slot == 0) r.coef.erase(m);
    }
    return r;
}

Observable Observable::operator-(const Observable& o) const {
    return *this + o.scaled(Rat(-1));
}

Observable Observable::scaled(const Rat& c) const {
    Observable r;
    if (c == 0) return r;
    for (const auto& [m, v] : coef) r.coef[m] = v * c;
    return r;
}

Observable Observable::operator*(const Observable& o) const {
    Observable r;
    for (const auto& [m1, c1] : coef)
        for (const auto& [m2, c2] : o.coef) {
            Mono m;
            int total = 0;
            for (int i = 0; i < 6; ++i) {
                m[i] = static_cast<std::uint8_t>(m1[i] + m2[i]);
                total += m[i];
            }
            if (total > 4) throw std::domain_error("observable degree cap exceeded");
            Rat& slot = r.coef[m];
            slot += c1 * c2;
            if (slot == 0) r.coef.erase(m);
        }
    return r;
}

Observable Observable::partial(int i) const {
    Observable r;
    for (const auto& [m, c] : coef) {
        if (m[i] == 0) continue;
        Mono d = m;
        d[i] -= 1;
        r.coef[d] = c * m[i];
    }
    return r;
}

Rat Observable::eval(const PhasePoint& p) const {
    std::array<Rat, 6> vals{p.first.x, p.first.y, p.first.z, p.second.x, p.second.y, p.second.z};
    Rat total = 0;
    for (const auto& [m, c] : coef) {
        Rat term = c;
        for (int i = 0; i < 6; ++i)
            for (int e = 0; e < m[i]; ++e) term *= vals[i];
        total += term;
    }
    return total;
}

Observable observable_J(const SystemParams& params) {
    return Observable::var(2).scaled(params.R1) + Observable::var(5).scaled(params.R2);
}

Observable observable_H(const SystemParams& params) {
    Observable coupling = Observable::var(0) * Observable::var(3) +
                          Observable::var(1) * Observable::var(4) +
                          Observable::var(2) * Observable::var(5);
    return Observable::var(2).scaled(1 - params.t) + coupling.scaled(params.t);
}

std::pair<Rat, Rat> eval_system(const SystemParams& params, const PhasePoint& pt) {
    return {observable_J(params).eval(pt), observable_H(params).eval(pt)};
}

SpherePoint stereographic(const Rat& u, const Rat& v) {
    Rat d = u * u + v * v + 1;
    if (d == 0) throw std::domain_error("pole of parametrization");
    return SpherePoint{2 * u / d, 2 * v / d, (u * u + v * v - 1) / d};
}

Rat poisson(const Observable& f, const Observable& g, const SystemParams& params,
            const PhasePoint& pt) {
    std::array<Rat, 6> df, dg;
    for (int i = 0; i < 6; ++i) {
        df[i] = f.partial(i).eval(pt);
        dg[i] = g.partial(i).eval(pt);
    }
    std::array<Rat, 6> vals{pt.first.x, pt.first.y, pt.first.z,
                            pt.second.x, pt.second.y, pt.second.z};
    Rat total = 0;
    for (int factor = 0; factor < 2; ++factor) {
        int x = 3 * factor, y = 3 * factor + 1, z = 3 * factor + 2;
        const Rat& R = factor == 0 ? params.R1 : params.R2;
        Rat s = (df[x] * dg[y] - df[y] * dg[x]) * vals[z] +
                (df[y] * dg[z] - df[z] * dg[y]) * vals[x] +
                (df[z] * dg[x] - df[x] * dg[z]) * vals[y];
        total += s / R;
    }
    return total;
}

namespace {

int rank_of(std::vector<std::vector<Rat>> m) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace

int jacobian_rank(const SystemParams& params, const PhasePoint& pt) {
    Observable J = observable_J(params), H = observable_H(params);
    std::vector<std::vector<Rat>> m(4, std::vector<Rat>(6, Rat(0)));
    for (int i = 0; i < 6; ++i) {
        m[0][i] = J.partial(i).eval(pt);
        m[1][i] = H.partial(i).eval(pt);
    }
    m[2][0] = pt.first.x;  m[2][1] = pt.first.y;  m[2][2] = pt.first.z;
    m[3][3] = pt.second.x; m[3][4] = pt.second.y; m[3][5] = pt.second.z;
    return rank_of(std::move(m)) - 2;
}

HessianData hessians(const SystemParams& params, int z1, int z2) {
    if ((z1 != 1 && z1 != -1) || (z2 != 1 && z2 != -1))
        throw std::invalid_argument("z1, z2 must be +-1");
    const Rat& t = params.t;
    Rat rz1(z1), rz2(z2);
    HessianData h;
    h.z1 = z1;
    h.z2 = z2;
    for (auto& row : h.MJ) row.fill(Rat(0));
    for (auto& row : h.MH) row.fill(Rat(0));
    for (auto& row : h.Omega) row.fill(Rat(0));
    h.MJ[0][0] = h.MJ[1][1] = -params.R1 / rz1;
    h.MJ[2][2] = h.MJ[3][3] = -params.R2 / rz2;
    Rat a = (t - t * rz2 - 1) / rz1;
    Rat b = -t * rz1 / rz2;
    h.MH[0][0] = h.MH[1][1] = a;
    h.MH[2][2] = h.MH[3][3] = b;
    h.MH[0][2] = h.MH[2][0] = h.MH[1][3] = h.MH[3][1] = t;
    h.Omega[0][1] = params.R1 / rz1;
    h.Omega[1][0] = -params.R1 / rz1;
    h.Omega[2][3] = params.R2 / rz2;
    h.Omega[3][2] = -params.R2 / rz2;
    return h;
}

const char* region_name(Region r) {
    switch (r) {
        case Region::Outer: return "outer";
        case Region::Inner: return "inner";
        default: return "limit";
    }
}

Region region(const SystemParams& params) {
    Rat w = params.k() * (2 * params.t - 1) * (2 * params.t - 1);
    Ord o = ord(w, params.ctx);
    if (o.infinite) return Region::Inner;   // t = 1/2 exactly
    if (o.v < 0) return Region::Outer;
    if (o.v > 0) return Region::Inner;
    return Region::Limit;
}

Rat critical_discriminant(const Rat& k, const Rat& t, int z1) {
    if (z1 != 1 && z1 != -1) throw std::invalid_argument("z1 must be +-1");
    Rat one_minus_2t = 1 - 2 * t;
    return -k * k * one_minus_2t * one_minus_2t - t * t + 2 * k * t * z1;
}

EigenQuadratic eigen_quadratic(const SystemParams& params, int z1, int z2) {
    if ((z1 != 1 && z1 != -1) || (z2 != 1 && z2 != -1))
        throw std::invalid_argument("z1, z2 must be +-1");
    const PadicContext& ctx = params.ctx;
    EigenQuadratic q;
    Rat k = params.k();
    const Rat& t = params.t;
    q.B = k * (t * z2 - t + 1) + t * z1;
    q.C = k * t * (t - 1) * z1;
    q.disc = -q.B * q.B - 4 * q.C;
    q.repeated_pair = q.disc == 0;
    q.opposite_pair = q.B == 0;
    q.zero_root = q.C == 0;

    // roots (-iB +- alpha) / 2 over the basis {1, alpha, i, i alpha}
    q.lambda = {Rat(0), Rat(1) / 2, -q.B / 2, Rat(0)};
    q.mu = {Rat(0), Rat(-1) / 2, -q.B / 2, Rat(0)};

    // Root valuations: both C/2-deep when the linear coefficient is small,
    // split otherwise (Newton polygon of x^2 + iBx + C).
    Ord ob = ord(q.B, ctx);
    Ord oc = ord(q.C, ctx);
    if (oc.infinite) {
        q.ord_lambda = ob.infinite ? ExtOrd::inf() : ExtOrd::fin(Rat(ob.v));
        q.ord_mu = ExtOrd::inf();
        q.lambda = {Rat(0), Rat(0), -q.B, Rat(0)};
        q.mu = {Rat(0), Rat(0), Rat(0), Rat(0)};
        q.label_rule = "zero-root";
        return q;
    }
    bool split = !ob.infinite && 2 * ob.v < oc.v;
    if (split) {
        q.ord_lambda = ExtOrd::fin(Rat(ob.v));
        q.ord_mu = ExtOrd::fin(Rat(oc.v - ob.v));
        // attach the small-valuation root to lambda via the canonical
        // embedding of alpha = sqrt(disc) (here -disc is a square)
        q.label_rule = "dominant-order";
        if (is_square(-q.disc, ctx)) {
            Ord plus = embedding_ord(-q.B / 2, Rat(1) / 2, -q.disc, ctx, RootSign::Plus);
            bool plus_is_small = !plus.infinite && Rat(plus.v) == Rat(ob.v);
            if (!plus_is_small) std::swap(q.lambda, q.mu);
        }
    } else {
        Rat half = Rat(oc.v) / 2;
        q.ord_lambda = ExtOrd::fin(half);
        q.ord_mu = ExtOrd::fin(half);
        q.label_rule = "canonical-branch";
    }
    return q;
}

std::vector<Rat> degenerate_t_values(const PadicContext& ctx, const Rat& k, int z1) {
    if (z1 != 1 && z1 != -1) throw std::invalid_argument("z1 must be +-1");
    if (k == 0) throw std::invalid_argument("k must be nonzero");
    std::vector<Rat> out;
    Rat kz = k * z1;
    if (!is_square(kz, ctx)) return out;
    if (!is_rational_square(kz)) return out;   // p-adic roots without exact form
    Rat s = rational_sqrt(kz);
    Rat den = 4 * k * k + 1;
    for (int sgn : {-1, 1}) {
        Rat t = (2 * k * k + kz + sgn * 2 * k * s) / den;
        Ord o = ord(t, ctx);
        if (o.infinite || o.v >= 0)
            if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
    std::sort(out.begin(), out.end(), [](const Rat& a, const Rat& b) { return cmp(a, b) < 0; });
    return out;
}

PhasePoint critical_point_coords(int z1, int z2) {
    return PhasePoint{SpherePoint{0, 0, Rat(z1)}, SpherePoint{0, 0, Rat(z2)}};
}

} // namespace padcam
