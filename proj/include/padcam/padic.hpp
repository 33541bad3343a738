#pragma once

#include "padcam/rational.hpp"

#include <optional>
#include <vector>

namespace padcam {

/// Prime and display precision for truncated expansions. All arithmetic
/// elsewhere is exact; the precision only bounds emitted digit strings.
struct PadicContext {
    Int p;
    int precision = 32;

    explicit PadicContext(Int prime, int digits = 32);
};

/// p-adic valuation value; infinite for 0.
struct Ord {
    bool infinite = false;
    long v = 0;

    static Ord inf() { return Ord{true, 0}; }
    static Ord fin(long x) { return Ord{false, x}; }
    bool operator==(const Ord& o) const {
        return infinite == o.infinite && (infinite || v == o.v);
    }
};

Ord ord(const Rat& x, const PadicContext& ctx);
/// Valuation of a nonzero rational; throws on zero.
long ord_finite(const Rat& x, const PadicContext& ctx);

/// (x * p^-ord(x)) mod p^k, as an integer in [0, p^k). Denominator must be
/// invertible, which holds after removing the p-part.
Int unit_residue_mod(const Rat& x, const PadicContext& ctx, int k);

Int leading_digit(const Rat& x, const PadicContext& ctx);

struct PadicExpansion {
    bool zero = false;
    long ord = 0;
    std::vector<Int> digits;            // least significant first, digits[0] != 0
    std::optional<Rat> exact;           // set when the value is exactly rational

    /// Value of the truncated expansion as a rational.
    Rat truncation(const Int& p) const;
};

PadicExpansion expand(const Rat& x, const PadicContext& ctx);

int legendre(const Int& a, const Int& p);

bool is_square(const Rat& x, const PadicContext& ctx);

/// Square root of a nonzero square, truncated to ctx.precision digits
/// (for p=2 the last two digits carry the usual lifting loss). Sign is
/// canonical: smallest leading residue for odd p, unit part 1 mod 4 for p=2.
PadicExpansion hensel_sqrt(const Rat& x, const PadicContext& ctx);

/// Canonical square root digits of a unit square u: returns s mod p^prec
/// with s*s = u mod p^prec (odd p) resp. mod 2^(prec-?) internally guarded.
Int canonical_unit_sqrt_mod(const Int& u, const Int& p, int prec);

Int smallest_nonresidue(const Int& p);

struct SquareClassRep {
    Rat value;
    bool operator==(const SquareClassRep& o) const { return cmp(value, o.value) == 0; }
    bool operator!=(const SquareClassRep& o) const { return !(*this == o); }
};

/// Canonical square class representative: {1, c0, p, c0*p} for odd p and
/// {1,-1,5,-5,2,-2,10,-10} for p=2.
SquareClassRep square_class(const Rat& x, const PadicContext& ctx);

std::vector<Rat> xp_set(const Int& p);
std::vector<Rat> yp_set(const Int& p);

/// Coarse square-class dispatch used by the classification branches.
enum class SquareKind { Square, UnitNonsquare, PrimeTimesSquare, OddNonsquare };

SquareKind square_kind(const Rat& x, const PadicContext& ctx);

/// +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over Qp.
int hilbert_symbol(const Rat& a, const Rat& b, const PadicContext& ctx);

bool two_squares_exists(const Rat& a, const PadicContext& ctx);

} // namespace padcam
