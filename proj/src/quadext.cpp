#include "padcam/quadext.hpp"

#include <algorithm>
#include <stdexcept>

namespace padcam {

ExtOrd ext_ord_min(const ExtOrd& a, const ExtOrd& b) {
    if (a.infinite) return b;
    if (b.infinite) return a;
    return cmp(a.v, b.v) <= 0 ? a : b;
}

ExtOrd ext_ord_add(const ExtOrd& a, const ExtOrd& b) {
    if (a.infinite || b.infinite) return ExtOrd::inf();
    return ExtOrd::fin(a.v + b.v);
}

ExtField::ExtField(PadicContext c, Rat dd) : ctx(std::move(c)), d(std::move(dd)) {
    if (d == 0) throw std::invalid_argument("extension discriminant must be nonzero");
}

ExtElem ExtElem::operator+(const ExtElem& o) const { return ExtElem(re + o.re, im + o.im, fld); }
ExtElem ExtElem::operator-(const ExtElem& o) const { return ExtElem(re - o.re, im - o.im, fld); }
ExtElem ExtElem::operator-() const { return ExtElem(-re, -im, fld); }

ExtElem ExtElem::operator*(const ExtElem& o) const {
    return ExtElem(re * o.re + fld.d * im * o.im, re * o.im + im * o.re, fld);
}

ExtElem ExtElem::operator/(const ExtElem& o) const {
    Rat n = o.norm();
    if (n == 0) throw std::domain_error("division by non-invertible extension element");
    ExtElem num = *this * o.conj();
    return ExtElem(num.re / n, num.im / n, fld);
}

ExtOrd ext_ord(const ExtElem& e) {
    if (e.is_zero()) return ExtOrd::inf();
    Rat n = e.norm();
    if (n == 0) throw std::domain_error("valuation undefined for split zero divisor");
    return ExtOrd::fin(Rat(ord_finite(n, e.fld.ctx)) / 2);
}

std::pair<Int, Int> ext_leading(const ExtElem& e) {
    const PadicContext& ctx = e.fld.ctx;
    long dv = ord_finite(e.fld.d, ctx);
    if (((dv % 2) + 2) % 2 == 1)
        throw std::domain_error("leading digit defined per half-power; use expansion");
    if (e.is_zero()) throw std::domain_error("zero has no leading digit");
    ExtOrd o = ext_ord(e);
    if (!o.is_integer()) throw std::domain_error("non-integer valuation in unramified field");
    long v = o.v.get_num().get_si();
    auto digit = [&](const Rat& part) -> Int {
        if (part == 0) return Int(0);
        Rat scaled = part * pow_int(Rat(ctx.p), -v);
        if (ord_finite(scaled, ctx) > 0) return Int(0);
        return unit_residue_mod(scaled, ctx, 1);
    };
    return {digit(e.re), digit(e.im)};
}

ExtSqrt ext_sqrt(const Rat& x, const ExtField& fld) {
    const PadicContext& ctx = fld.ctx;
    if (x == 0) return {ExtElem::from_base(Rat(0), fld), true};
    if (is_square(x, ctx)) {
        PadicExpansion r = hensel_sqrt(x, ctx);
        if (r.exact) return {ExtElem::from_base(*r.exact, fld), true};
        return {ExtElem::from_base(r.truncation(ctx.p), fld), false};
    }
    Rat q = x / fld.d;
    if (is_square(q, ctx)) {
        PadicExpansion r = hensel_sqrt(q, ctx);
        if (r.exact) return {ExtElem(Rat(0), *r.exact, fld), true};
        return {ExtElem(Rat(0), r.truncation(ctx.p), fld), false};
    }
    throw std::domain_error("square root not in Qp[alpha]: neither x nor x/d is a square");
}

bool dsq_contains(const Rat& c, const Rat& x, const PadicContext& ctx) {
    if (c == 0) throw std::invalid_argument("dsq_contains requires c != 0");
    if (x == 0) return true;
    if (is_square(c, ctx)) return true;
    return hilbert_symbol(x, c, ctx) == 1;
}

bool dsq_contains_ramified(const ExtElem& x) {
    const PadicContext& ctx = x.fld.ctx;
    long dv = ord_finite(x.fld.d, ctx);
    if (((dv % 2) + 2) % 2 == 0)
        throw std::invalid_argument("ramified criterion needs odd-valuation discriminant");
    Ord orr = ord(x.re, ctx);
    Ord ois = ord(x.im, ctx);
    if (ois.infinite) return true;
    if (orr.infinite) return false;
    return orr.v <= ois.v;
}

std::vector<std::vector<ExtElem>> kernel_basis(std::vector<std::vector<ExtElem>> m) {
    const size_t rows = m.size();
    const size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<long> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        ExtElem inv = ExtElem::from_base(Rat(1), m[r][c].fld) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            ExtElem f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivot_col.push_back(static_cast<long>(c));
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (long c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<ExtElem>> basis;
    const ExtField& fld = m[0][0].fld;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<ExtElem> v(cols, ExtElem::from_base(Rat(0), fld));
        v[free_c] = ExtElem::from_base(Rat(1), fld);
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -m[i][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

ExtVec eigenvector_of(const ExtMatrix& a, const ExtElem& lambda) {
    std::vector<std::vector<ExtElem>> m(4, std::vector<ExtElem>(4, lambda));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            m[i][j] = a[i][j];
            if (i == j) m[i][j] = m[i][j] - lambda;
        }
    auto basis = kernel_basis(std::move(m));
    if (basis.empty()) throw std::domain_error("not an eigenvalue");
    if (basis.size() > 1) throw std::domain_error("repeated eigenvalue");
    ExtVec v{ExtElem::from_base(Rat(0), lambda.fld), ExtElem::from_base(Rat(0), lambda.fld),
             ExtElem::from_base(Rat(0), lambda.fld), ExtElem::from_base(Rat(0), lambda.fld)};
    ExtElem scale = ExtElem::from_base(Rat(1), lambda.fld);
    bool found = false;
    for (int i = 0; i < 4; ++i) {
        if (!found && !basis[0][i].is_zero()) {
            scale = basis[0][i];
            found = true;
        }
    }
    for (int i = 0; i < 4; ++i) v[i] = basis[0][i] / scale;
    return v;
}

Ord embedding_ord(const Rat& a, const Rat& b, const Rat& d, const PadicContext& ctx,
                  RootSign sign) {
    if (a == 0 && b == 0) return Ord::inf();
    if (!is_square(d, ctx)) throw std::invalid_argument("embedding_ord needs a square d");
    if (is_rational_square(d)) {
        Rat g = rational_sqrt(d);
        if (ctx.p == 2) {
            if (g != 0 && unit_residue_mod(g, ctx, 2) != 1) g = -g;
        } else if (g != 0 && leading_digit(g, ctx) > (ctx.p - 1) / 2) {
            g = -g;
        }
        Rat value = sign == RootSign::Plus ? Rat(a + b * g) : Rat(a - b * g);
        return ord(value, ctx);
    }
    if (b == 0) return ord(a, ctx);
    if (a == 0) return Ord::fin(ord_finite(b, ctx) + ord_finite(d, ctx) / 2);
    long dv = ord_finite(d, ctx);
    long gv = dv / 2;
    long lo = std::min(ord_finite(a, ctx), ord_finite(b, ctx) + gv);
    Rat nrm = a * a - d * b * b;   // nonzero: sqrt(d) is irrational
    long hi = ord_finite(nrm, ctx) - lo;
    int margin = ctx.p == 2 ? 8 : 4;
    int prec = static_cast<int>(hi - lo) + margin;
    Int ghat = canonical_unit_sqrt_mod(unit_residue_mod(d, ctx, prec), ctx.p, prec);
    Rat g = Rat(ghat) * pow_int(Rat(ctx.p), gv);
    Rat value = sign == RootSign::Plus ? Rat(a + b * g) : Rat(a - b * g);
    // value approximates the true embedding to p^(lo + prec - margin/2);
    // the true valuation is <= hi, strictly below the noise floor
    Ord o = ord(value, ctx);
    if (o.infinite || o.v > hi)
        throw std::logic_error("embedding_ord precision exhausted");
    return o;
}

} // namespace padcam
