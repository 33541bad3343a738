#pragma once

#include "padcam/padic.hpp"

#include <array>
#include <utility>
#include <vector>

namespace padcam {

/// Half-integer valuation (quadratic extensions can ramify).
struct ExtOrd {
    bool infinite = false;
    Rat v = 0;                      // denominator at most 2

    static ExtOrd inf() { return ExtOrd{true, Rat(0)}; }
    static ExtOrd fin(Rat x) { return ExtOrd{false, std::move(x)}; }
    bool operator==(const ExtOrd& o) const {
        return infinite == o.infinite && (infinite || cmp(v, o.v) == 0);
    }
    bool is_integer() const { return !infinite && v.get_den() == 1; }
};

ExtOrd ext_ord_min(const ExtOrd& a, const ExtOrd& b);
ExtOrd ext_ord_add(const ExtOrd& a, const ExtOrd& b);

/// Qp[alpha] with alpha^2 = d. Kept as formal pairs even when d is a square
/// in Qp; callers branch on is_square(d) before relying on field structure.
struct ExtField {
    PadicContext ctx;
    Rat d;

    ExtField(PadicContext c, Rat dd);
    bool operator==(const ExtField& o) const {
        return ctx.p == o.ctx.p && cmp(d, o.d) == 0;
    }
};

struct ExtElem {
    Rat re, im;
    ExtField fld;

    ExtElem(Rat r, Rat i, ExtField f) : re(std::move(r)), im(std::move(i)), fld(std::move(f)) {}
    static ExtElem from_base(const Rat& r, const ExtField& f) { return ExtElem(r, 0, f); }

    bool is_zero() const { return re == 0 && im == 0; }
    ExtElem conj() const { return ExtElem(re, -im, fld); }
    Rat norm() const { return re * re - fld.d * im * im; }

    ExtElem operator+(const ExtElem& o) const;
    ExtElem operator-(const ExtElem& o) const;
    ExtElem operator-() const;
    ExtElem operator*(const ExtElem& o) const;
    ExtElem operator/(const ExtElem& o) const;
    bool operator==(const ExtElem& o) const { return re == o.re && im == o.im; }
};

ExtOrd ext_ord(const ExtElem& e);

/// Leading residue pair (a, b) of e * p^-ord(e); unramified d only.
std::pair<Int, Int> ext_leading(const ExtElem& e);

struct ExtSqrt {
    ExtElem value;
    bool exact;
};

/// Square root of a base-field element inside Qp[alpha]: rational part if x
/// is a square in Qp, pure-imaginary if x/d is. Irrational roots come back
/// as truncations at ctx precision.
ExtSqrt ext_sqrt(const Rat& x, const ExtField& fld);

/// Membership of x in {r^2 - c s^2 : r, s in Qp}.
bool dsq_contains(const Rat& c, const Rat& x, const PadicContext& ctx);

/// Extension-field variant used by the ramified criteria: x = r' + s'*alpha
/// with alpha^2 of odd valuation belongs iff ord(r') <= ord(s').
bool dsq_contains_ramified(const ExtElem& x);

using ExtVec = std::array<ExtElem, 4>;
using ExtMatrix = std::array<std::array<ExtElem, 4>, 4>;

/// Basis of the kernel of a square matrix over Qp[alpha], exact elimination.
std::vector<std::vector<ExtElem>> kernel_basis(std::vector<std::vector<ExtElem>> m);

/// Eigenvector for a simple eigenvalue, first nonzero entry normalized to 1.
ExtVec eigenvector_of(const ExtMatrix& a, const ExtElem& lambda);

enum class RootSign { Plus, Minus };

/// ord_p(a + b*sqrt(d)) where d is a square in Qp and sqrt(d) is the
/// canonical Hensel branch; RootSign::Minus uses the conjugate embedding.
/// Exact: works digit by digit with a provable termination bound.
Ord embedding_ord(const Rat& a, const Rat& b, const Rat& d, const PadicContext& ctx,
                  RootSign sign);

} // namespace padcam
