#include "padcam/classifier.hpp"

#include <sstream>
#include <stdexcept>

namespace padcam {

const char* point_name(CriticalPoint pt) {
    switch (pt) {
        case CriticalPoint::P: return "P";
        case CriticalPoint::Q: return "Q";
        case CriticalPoint::S: return "S";
        default: return "T";
    }
}

CriticalPoint point_from_name(const std::string& s) {
    if (s == "P") return CriticalPoint::P;
    if (s == "Q") return CriticalPoint::Q;
    if (s == "S") return CriticalPoint::S;
    if (s == "T") return CriticalPoint::T;
    throw std::invalid_argument("unknown critical point: " + s);
}

int point_z1(CriticalPoint pt) {
    return (pt == CriticalPoint::P || pt == CriticalPoint::S) ? 1 : -1;
}

int point_z2(CriticalPoint pt) {
    return (pt == CriticalPoint::P || pt == CriticalPoint::Q) ? 1 : -1;
}

namespace {

std::string ord_str(const Ord& o) {
    return o.infinite ? std::string("+inf") : std::to_string(o.v);
}

bool odd_ord(const Rat& x, const PadicContext& ctx) {
    long v = ord_finite(x, ctx);
    return ((v % 2) + 2) % 2 == 1;
}

Rat parity_c(const SystemParams& params, const Rat& r, ClassifierTrace& tr, const char* tag) {
    bool p3 = params.ctx.p % 4 == 3;
    bool odd = odd_ord(r, params.ctx);
    std::ostringstream os;
    os << tag << " ord=" << ord_finite(r, params.ctx) << (odd ? " odd" : " even");
    tr.note(os.str());
    if (p3 && odd) return Rat(params.ctx.p * params.ctx.p);
    return Rat(1);
}

} // namespace

Classification classify_closed_form(const SystemParams& params, CriticalPoint pt) {
    const PadicContext& ctx = params.ctx;
    const Int& p = ctx.p;
    int z1 = point_z1(pt), z2 = point_z2(pt);
    ClassifierTrace tr;
    tr.route = "closed-form";
    tr.point = point_name(pt);
    tr.z1 = z1;
    tr.z2 = z2;
    tr.region = region_name(region(params));

    Rat k = params.k();
    bool edge_t = params.t == 0 || params.t == 1;

    if (z2 == 1 || edge_t || region(params) == Region::Outer) {
        if (edge_t) tr.note("t in {0,1}: pencil shift applies, component parities");
        Rat c1 = parity_c(params, params.R1, tr, "R1");
        Rat c2 = parity_c(params, params.R2, tr, "R2");
        return {make_class1(c1, c2, p), false, tr};
    }

    // z2 = -1, t not in {0,1}, inner or limit (p odd here; p=2 is always outer)
    Region reg = region(params);
    bool p1 = p % 4 == 1;
    if (reg == Region::Inner) {
        Rat key = p1 ? k : Rat(k * z1);
        SquareKind kind = square_kind(key, ctx);
        tr.note(std::string("inner key class rep = ") + rat_str(square_class(key, ctx).value));
        if (p1) {
            Rat c0(smallest_nonresidue(p));
            switch (kind) {
                case SquareKind::Square: return {make_class1(Rat(1), Rat(1), p), false, tr};
                case SquareKind::UnitNonsquare: return {Class2{c0}, false, tr};
                case SquareKind::PrimeTimesSquare: return {Class2{Rat(p)}, false, tr};
                default: return {Class2{c0 * p}, false, tr};
            }
        }
        switch (kind) {
            case SquareKind::Square: return {Class2{Rat(-1)}, false, tr};
            case SquareKind::UnitNonsquare: {
                Rat c = parity_c(params, params.R2, tr, "R2");
                return {make_class1(c, c, p), false, tr};
            }
            case SquareKind::PrimeTimesSquare:
                return {Class3{{Rat(-p), Rat(-1), Rat(0), Rat(1), Rat(0)}}, false, tr};
            default:
                return {Class3{{Rat(p), Rat(-1), Rat(0), Rat(1), Rat(0)}}, false, tr};
        }
    }

    // limit region
    Rat D = critical_discriminant(k, params.t, z1);
    tr.note("limit discriminant = " + rat_str(D));
    if (D == 0) {
        tr.degenerate = true;
        tr.note("discriminant vanishes: degenerate point");
        if (p1) return {R3Form{}, true, tr};
        return {I3Form{Rat(-1)}, true, tr};
    }
    SquareKind kind = square_kind(D, ctx);
    if (p1) {
        Rat c0(smallest_nonresidue(p));
        switch (kind) {
            case SquareKind::Square: return {make_class1(Rat(1), Rat(1), p), false, tr};
            case SquareKind::UnitNonsquare: return {Class2{c0}, false, tr};
            case SquareKind::PrimeTimesSquare: return {Class2{Rat(p)}, false, tr};
            default: return {Class2{c0 * p}, false, tr};
        }
    }
    switch (kind) {
        case SquareKind::Square: return {Class2{Rat(-1)}, false, tr};
        case SquareKind::UnitNonsquare: {
            long m = ord_finite(params.R1 * params.R2 * D, ctx);
            std::ostringstream os;
            os << "ord(R1 R2 D) = " << m << " mod 4 = " << (((m % 4) + 4) % 4);
            tr.note(os.str());
            Rat c = (((m % 4) + 4) % 4 == 0) ? Rat(1) : Rat(p * p);
            return {make_class1(c, c, p), false, tr};
        }
        case SquareKind::PrimeTimesSquare:
            return {Class3{{Rat(-p), Rat(-1), Rat(0), Rat(1), Rat(1)}}, false, tr};
        default:
            return {Class3{{Rat(p), Rat(-1), Rat(0), Rat(1), Rat(1)}}, false, tr};
    }
}

// ---------------------------------------------------------------------------
// spectral route

namespace {

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rat s = 0;
            for (int l = 0; l < 4; ++l) s += a[i][l] * b[l][j];
            r[i][j] = s;
        }
    return r;
}

Rat mat_trace(const Mat4& a) { return a[0][0] + a[1][1] + a[2][2] + a[3][3]; }

Mat4 mat_add_diag(const Mat4& a, const Rat& c) {
    Mat4 r = a;
    for (int i = 0; i < 4; ++i) r[i][i] += c;
    return r;
}

std::vector<std::vector<Rat>> rat_kernel_basis(std::vector<std::vector<Rat>> m) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<long> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rat inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(static_cast<long>(c));
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (long c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[fc] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

// x + i*y with x, y over a shared quadratic extension; used only for the
// ramified eigenvector test where -1 stays a nonsquare upstairs.
struct BiExt {
    ExtElem x, y;

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    BiExt operator+(const BiExt& o) const { return {x + o.x, y + o.y}; }
    BiExt operator-(const BiExt& o) const { return {x - o.x, y - o.y}; }
    BiExt operator-() const { return {-x, -y}; }
    BiExt operator*(const BiExt& o) const {
        return {x * o.x - y * o.y, x * o.y + y * o.x};
    }
    BiExt operator/(const BiExt& o) const {
        ExtElem n = o.x * o.x + o.y * o.y;
        if (n.is_zero()) throw std::domain_error("division by zero in tower");
        BiExt num = *this * BiExt{o.x, -o.y};
        return {num.x / n, num.y / n};
    }
    BiExt conj_full() const { return {x.conj(), -(y.conj())}; }
};

std::vector<std::vector<BiExt>> bi_kernel_basis(std::vector<std::vector<BiExt>> m,
                                                const BiExt& zero, const BiExt& one) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<long> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        BiExt inv = one / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            BiExt f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivot_col.push_back(static_cast<long>(c));
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (long c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<BiExt>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<BiExt> v(cols, zero);
        v[fc] = one;
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

struct SymmetricPencil {
    Mat4 S, A;
    Rat a1, a2;
};

// kernel of A^2 + y^2 over the rationals; returns V with V^T S V != 0
std::vector<Rat> pairing_vector_rat(const Mat4& A, const Rat& y, const Mat4& S, Rat& q_out) {
    Mat4 M2 = mat_add_diag(mat_mul(A, A), y * y);
    std::vector<std::vector<Rat>> m(4, std::vector<Rat>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = M2[i][j];
    auto basis = rat_kernel_basis(std::move(m));
    if (basis.size() != 2) throw ContradictionError("unexpected eigenspace dimension");
    auto qform = [&](const std::vector<Rat>& v) {
        Rat q = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) q += v[i] * S[i][j] * v[j];
        return q;
    };
    std::vector<std::vector<Rat>> cands = {basis[0], basis[1]};
    {
        std::vector<Rat> sum(4);
        for (int i = 0; i < 4; ++i) sum[i] = basis[0][i] + basis[1][i];
        cands.push_back(std::move(sum));
    }
    for (auto& v : cands) {
        Rat q = qform(v);
        if (q != 0) {
            q_out = q;
            return v;
        }
    }
    throw ContradictionError("degenerate symplectic pairing");
}

std::vector<ExtElem> pairing_vector_ext(const Mat4& A, const ExtElem& y, const Mat4& S,
                                        ExtElem& q_out) {
    const ExtField& fld = y.fld;
    auto base = [&](const Rat& r) { return ExtElem::from_base(r, fld); };
    ExtElem y2 = y * y;
    Mat4 A2 = mat_mul(A, A);
    std::vector<std::vector<ExtElem>> m(4, std::vector<ExtElem>(4, base(Rat(0))));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            m[i][j] = base(A2[i][j]);
            if (i == j) m[i][j] = m[i][j] + y2;
        }
    auto basis = kernel_basis(std::move(m));
    if (basis.size() != 2) throw ContradictionError("unexpected eigenspace dimension");
    auto qform = [&](const std::vector<ExtElem>& v) {
        ExtElem q = base(Rat(0));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) q = q + v[i] * base(S[i][j]) * v[j];
        return q;
    };
    std::vector<std::vector<ExtElem>> cands = {basis[0], basis[1]};
    {
        std::vector<ExtElem> sum;
        for (int i = 0; i < 4; ++i) sum.push_back(basis[0][i] + basis[1][i]);
        cands.push_back(std::move(sum));
    }
    for (auto& v : cands) {
        ExtElem q = qform(v);
        if (!q.is_zero() && q.norm() != 0) {
            q_out = q;
            return v;
        }
    }
    throw ContradictionError("degenerate symplectic pairing");
}

// parity of ord(W) for the component at one embedding; W = 2i R2 y V^T S V
bool component_parity_even_rat(const SystemParams& params, const Rat& y, const Rat& q) {
    long o = ord_finite(y, params.ctx) + ord_finite(q, params.ctx) +
             ord_finite(params.R2, params.ctx);
    return ((o % 2) + 2) % 2 == 0;
}

bool component_parity_even_emb(const SystemParams& params, const ExtElem& y, const ExtElem& q,
                               RootSign sign) {
    Ord oy = embedding_ord(y.re, y.im, y.fld.d, params.ctx, sign);
    Ord oq = embedding_ord(q.re, q.im, q.fld.d, params.ctx, sign);
    if (oy.infinite || oq.infinite) throw ContradictionError("vanishing pairing data");
    long o = oy.v + oq.v + ord_finite(params.R2, params.ctx);
    return ((o % 2) + 2) % 2 == 0;
}

// b entry of the class-3 tuple: 0 iff ord(v^T Omega conj(v)) is an integer.
Rat class3_b_entry(const SystemParams& params, const Mat4& A, const Mat4& Omega, const Rat& Bp,
                   const Rat& disc, ClassifierTrace& tr) {
    ExtField K(params.ctx, disc);
    auto base = [&](const Rat& r) { return ExtElem::from_base(r, K); };
    BiExt zero{base(Rat(0)), base(Rat(0))};
    BiExt one{base(Rat(1)), base(Rat(0))};
    BiExt lambda{ExtElem(Rat(0), Rat(1) / 2, K), base(-Bp / 2)};
    std::vector<std::vector<BiExt>> m(4, std::vector<BiExt>(4, zero));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            m[i][j] = BiExt{base(A[i][j]), base(Rat(0))};
            if (i == j) m[i][j] = m[i][j] - lambda;
        }
    auto basis = bi_kernel_basis(std::move(m), zero, one);
    if (basis.size() != 1) throw ContradictionError("expected a simple eigenvalue");
    const auto& v = basis[0];
    BiExt W = zero;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (Omega[i][j] == 0) continue;
            BiExt term = v[i] * v[j].conj_full();
            W = W + BiExt{term.x * base(Omega[i][j]), term.y * base(Omega[i][j])};
        }
    // W lies in span{alpha, i}: coordinates w_alpha, w_i
    if (W.x.re != 0 || W.y.im != 0)
        throw ContradictionError("pairing not antisymmetric under conjugation");
    const Rat& wa = W.x.im;
    const Rat& wi = W.y.re;
    if (wa == 0 && wi == 0) throw ContradictionError("vanishing symplectic pairing");
    long dv = ord_finite(disc, params.ctx);
    bool integer_dominates;
    if (wi == 0) integer_dominates = false;
    else if (wa == 0) integer_dominates = true;
    else integer_dominates = 2 * ord_finite(wi, params.ctx) <
                             2 * ord_finite(wa, params.ctx) + dv;
    std::ostringstream os;
    os << "pairing coords: i-part ord " << (wi == 0 ? std::string("+inf")
                                                    : std::to_string(ord_finite(wi, params.ctx)))
       << ", alpha-part 2ord " << (wa == 0 ? std::string("+inf")
                                           : std::to_string(2 * ord_finite(wa, params.ctx) + dv));
    tr.note(os.str());
    return integer_dominates ? Rat(0) : Rat(1);
}

} // namespace

Mat4 pencil_matrix(const HessianData& h, const Rat& a1, const Rat& a2, const Rat& R2) {
    Mat4 S;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) S[i][j] = a1 * h.MJ[i][j] + a2 * h.MH[i][j];
    // Omega is block antidiagonal; invert blockwise
    Mat4 Oinv;
    for (auto& row : Oinv) row.fill(Rat(0));
    Rat a = h.Omega[0][1], b = h.Omega[2][3];
    Oinv[0][1] = -1 / a;
    Oinv[1][0] = 1 / a;
    Oinv[2][3] = -1 / b;
    Oinv[3][2] = 1 / b;
    Mat4 A = mat_mul(Oinv, S);
    for (auto& row : A)
        for (auto& e : row) e *= R2;
    return A;
}

std::pair<Rat, Rat> pencil_char_even(const Mat4& a) {
    // Faddeev-LeVerrier
    Mat4 M = a;
    Rat c1 = -mat_trace(M);
    M = mat_mul(a, mat_add_diag(M, c1));
    Rat c2 = -mat_trace(M) / 2;
    M = mat_mul(a, mat_add_diag(M, c2));
    Rat c3 = -mat_trace(M) / 3;
    M = mat_mul(a, mat_add_diag(M, c3));
    Rat c4 = -mat_trace(M) / 4;
    if (c1 != 0 || c3 != 0)
        throw ContradictionError("pencil characteristic polynomial is not even");
    return {c2, c4};
}

Classification classify_spectral(const SystemParams& params, CriticalPoint pt) {
    const PadicContext& ctx = params.ctx;
    const Int& p = ctx.p;
    int z1 = point_z1(pt), z2 = point_z2(pt);
    ClassifierTrace tr;
    tr.route = "spectral";
    tr.point = point_name(pt);
    tr.z1 = z1;
    tr.z2 = z2;
    tr.region = region_name(region(params));

    HessianData h = hessians(params, z1, z2);
    const Rat& t = params.t;
    std::vector<std::pair<Rat, Rat>> pencils = {
        {Rat(0), Rat(1)}, {Rat(-t * z1), Rat(1)}, {Rat(1), Rat(1)}, {Rat(z1), Rat(-1)},
        {Rat(-1), Rat(1)}, {Rat(2), Rat(1)},      {Rat(-2), Rat(1)}, {Rat(1), Rat(2)},
        {Rat(3), Rat(1)},  {Rat(-3), Rat(1)},     {Rat(1), Rat(3)},  {Rat(5), Rat(1)}};

    Mat4 A{}, S{};
    Rat E, F;
    bool found = false;
    Rat defE, defF;
    for (size_t i = 0; i < pencils.size(); ++i) {
        Mat4 Ai = pencil_matrix(h, pencils[i].first, pencils[i].second, params.R2);
        auto [Ei, Fi] = pencil_char_even(Ai);
        if (i == 0) {
            defE = Ei;
            defF = Fi;
        }
        if (Fi != 0 && Ei * Ei != 4 * Fi) {
            A = Ai;
            E = Ei;
            F = Fi;
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    S[r][c] = pencils[i].first * h.MJ[r][c] + pencils[i].second * h.MH[r][c];
            std::ostringstream os;
            os << "pencil (" << rat_str(pencils[i].first) << "," << rat_str(pencils[i].second)
               << ") has simple spectrum";
            tr.note(os.str());
            found = true;
            break;
        }
    }

    if (!found) {
        // every pencil member has repeated eigenvalues: degenerate point
        tr.degenerate = true;
        Rat y0 = -defE / 2;  // squared repeated eigenvalue of the default member
        tr.note("all pencil members repeated; eigenvalue^2 = " + rat_str(y0));
        if (is_square(y0, ctx)) return {R3Form{}, true, tr};
        if (is_square(-y0, ctx)) return {I3Form{Rat(-1)}, true, tr};
        throw ContradictionError("degenerate point with unexpected eigenvalue class");
    }

    // recover the factorization (x^2 + iBx + C)(x^2 - iBx + C)
    if (!is_rational_square(F)) throw ContradictionError("pencil determinant is not a square");
    Rat f0 = rational_sqrt(F);
    Rat Cp, Bp2;
    if (is_rational_square(E - 2 * f0)) {
        Cp = f0;
        Bp2 = E - 2 * f0;
    } else if (is_rational_square(E + 2 * f0)) {
        Cp = -f0;
        Bp2 = E + 2 * f0;
    } else {
        throw ContradictionError("pencil polynomial does not factor over the i-pairing");
    }
    Rat Bp = rational_sqrt(Bp2);
    Rat disc = -E - 2 * Cp;
    if (disc == 0) throw ContradictionError("simple spectrum with vanishing discriminant");
    tr.note("quadratic data: B = " + rat_str(Bp) + ", C = " + rat_str(Cp) +
            ", disc = " + rat_str(disc));

    if (p == 2) {
        if (is_square(-disc, ctx)) {
            tr.note("eigenvalues purely imaginary; only c = 1 admissible at p = 2");
            return {make_class1(Rat(1), Rat(1), p), false, tr};
        }
        throw ContradictionError("unexpected eigenvalue class at p = 2");
    }

    SquareKind kind = square_kind(disc, ctx);
    tr.note("disc class rep = " + rat_str(square_class(disc, ctx).value));
    if (p % 4 == 1) {
        Rat c0(smallest_nonresidue(p));
        switch (kind) {
            case SquareKind::Square: return {make_class1(Rat(1), Rat(1), p), false, tr};
            case SquareKind::UnitNonsquare: return {Class2{c0}, false, tr};
            case SquareKind::PrimeTimesSquare: return {Class2{Rat(p)}, false, tr};
            default: return {Class2{c0 * p}, false, tr};
        }
    }

    // p = 3 mod 4
    if (kind == SquareKind::Square) return {Class2{Rat(-1)}, false, tr};
    if (kind == SquareKind::UnitNonsquare) {
        // purely imaginary eigenvalue pairs; candidates {1, p^2} per component
        Rat d = -disc;  // a square in Qp
        Rat c1, c2;
        if (is_rational_square(d)) {
            Rat g0 = rational_sqrt(d);
            if (leading_digit(g0, ctx) > (p - 1) / 2) g0 = -g0;
            Rat q1, q2;
            Rat yp = (-Bp + g0) / 2, ym = (-Bp - g0) / 2;
            pairing_vector_rat(A, yp, S, q1);
            pairing_vector_rat(A, ym, S, q2);
            bool e1 = component_parity_even_rat(params, yp, q1);
            bool e2 = component_parity_even_rat(params, ym, q2);
            tr.note(std::string("pairing parities (rational branch): ") + (e1 ? "even" : "odd") +
                    "/" + (e2 ? "even" : "odd"));
            c1 = e1 ? Rat(1) : Rat(p * p);
            c2 = e2 ? Rat(1) : Rat(p * p);
        } else {
            ExtField K(ctx, d);
            ExtElem y(-Bp / 2, Rat(1) / 2, K);
            ExtElem q = ExtElem::from_base(Rat(0), K);
            pairing_vector_ext(A, y, S, q);
            bool e1 = component_parity_even_emb(params, y, q, RootSign::Plus);
            bool e2 = component_parity_even_emb(params, y, q, RootSign::Minus);
            tr.note(std::string("pairing parities (embedded branch): ") + (e1 ? "even" : "odd") +
                    "/" + (e2 ? "even" : "odd"));
            c1 = e1 ? Rat(1) : Rat(p * p);
            c2 = e2 ? Rat(1) : Rat(p * p);
        }
        return {make_class1(c1, c2, p), false, tr};
    }

    // ramified discriminant: class-3 tuple, sign from the class of disc
    Rat tuple_c = kind == SquareKind::PrimeTimesSquare ? Rat(-p) : Rat(p);
    Rat b = class3_b_entry(params, A, h.Omega, Bp, disc, tr);
    return {Class3{{tuple_c, Rat(-1), Rat(0), Rat(1), b}}, false, tr};
}

// ---------------------------------------------------------------------------
// parameter families

std::vector<SystemParams> branch_covering_params(const PadicContext& ctx, CriticalPoint pt,
                                                 size_t min_count) {
    const Int& p = ctx.p;
    int z1 = point_z1(pt);
    std::vector<SystemParams> out;
    auto push = [&](const Rat& t, const Rat& R1, const Rat& R2) {
        try {
            out.emplace_back(ctx, t, R1, R2);
        } catch (const std::domain_error&) {
        }
    };

    auto emit_generation = [&](long gen) {
        Rat tshift = gen == 0 ? Rat(0) : Rat(gen) * pow_int(Rat(p), 7);
        Rat rscale = Rat((2 * gen + 1) * (2 * gen + 1));  // odd square: parity preserved
        if (p == 2) {
            for (long tt : {0L, 1L, 2L, 3L, 5L, 8L})
                for (long r1 : {1L, 3L, 2L})
                    for (int e : {1, 2, 3})
                        for (long u : {1L, 3L, -1L, 5L}) {
                            Rat k = Rat(u) / pow_int(Rat(2), e);
                            push(Rat(tt) + tshift, Rat(r1) * rscale, Rat(r1) * rscale * k);
                        }
            return;
        }
        Rat c0(smallest_nonresidue(p));
        Rat t0 = p == 3 ? Rat(3) : Rat(2);
        // outer region and t edge values
        const std::vector<Rat> outer_ts = {Rat(0), Rat(1), t0, Rat(t0 + p), Rat(p)};
        const std::vector<Rat> r1s = {Rat(1), Rat(p)};
        for (const Rat& t : outer_ts)
            for (const Rat& r1 : r1s)
                for (int e : {1, 2})
                    for (int sgn : {1, -1})
                        push(t + tshift, r1 * rscale, Rat(sgn) * r1 * rscale / pow_int(Rat(p), e));
        // inner region: ord(2t-1) = m, ord(k) in {-2m+2, -2m+1}
        const std::vector<Rat> inner_units = {Rat(1), c0};
        for (int m : {2, 3}) {
            Rat t = (1 + pow_int(Rat(p), m)) / 2;
            for (const Rat& u : inner_units)
                for (int e : {2 * m - 2, 2 * m - 1})
                    for (const Rat& r1 : r1s) {
                        Rat k = u / pow_int(Rat(p), e);
                        push(Rat(t + tshift), Rat(r1 * rscale), Rat(k * r1 * rscale));
                    }
        }
        // limit region: ord(k) = -2m, ord(2t-1) = m
        for (int m : {1, 2}) {
            Rat t = (1 + pow_int(Rat(p), m)) / 2;
            long pl = p.get_si();
            for (long a = 1; a < pl; ++a)
                for (long b : {0L, 1L, 2L})
                    for (const Rat& r1 : r1s) {
                        Rat K = Rat(a) + Rat(b) * p;
                        Rat k = K / pow_int(Rat(p), 2 * m);
                        push(Rat(t + tshift), Rat(r1 * rscale), Rat(k * r1 * rscale));
                    }
        }
        // exact degenerate instances (limit region with vanishing discriminant)
        for (int m : {1, 2})
            for (long s0 : {1L, 2L, 3L}) {
                Rat s = Rat(s0) / pow_int(Rat(p), m);
                Rat k = Rat(z1) * s * s;
                for (const Rat& t : degenerate_t_values(ctx, k, z1))
                    for (const Rat& r1 : r1s) push(t, Rat(r1 * rscale), Rat(k * r1 * rscale));
            }
    };

    long gen = 0;
    emit_generation(gen);
    while (min_count > 0 && out.size() < min_count && gen < 64) emit_generation(++gen);
    return out;
}

FormSet enumerate_forms(const Int& p, CriticalPoint pt) {
    PadicContext ctx(p);
    FormSet forms;
    for (const SystemParams& params : branch_covering_params(ctx, pt))
        forms.insert(classify_closed_form(params, pt).form);
    return forms;
}

} // namespace padcam
