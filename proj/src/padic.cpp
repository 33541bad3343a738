#include "padcam/padic.hpp"

#include <sstream>
#include <stdexcept>

namespace padcam {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

Rat parse_padic_literal(const std::string& s, const Int& p) {
    auto semi = s.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("p-adic literal needs ';exp': " + s);
    long e = std::stol(s.substr(semi + 1));
    std::string body = s.substr(0, semi);
    std::vector<Int> digits;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, '.')) {
        if (tok.empty()) throw std::invalid_argument("bad p-adic literal: " + s);
        Int d(tok);
        if (d < 0 || d >= p) throw std::invalid_argument("digit out of range in: " + s);
        digits.push_back(d);
    }
    if (digits.empty()) throw std::invalid_argument("bad p-adic literal: " + s);
    Rat value = 0;
    Rat scale = pow_int(Rat(p), e);
    for (const Int& d : digits) {
        value += Rat(d) * scale;
        scale *= p;
    }
    value.canonicalize();
    return value;
}

Rat parse_number(const std::string& s, const Int& p) {
    if (s.find(';') != std::string::npos) return parse_padic_literal(s, p);
    return parse_rational(s);
}

std::string rat_str(const Rat& x) { return x.get_str(); }

bool is_rational_square(const Rat& x) {
    if (x < 0) return false;
    return mpz_perfect_square_p(x.get_num_mpz_t()) && mpz_perfect_square_p(x.get_den_mpz_t());
}

Rat rational_sqrt(const Rat& x) {
    if (!is_rational_square(x)) throw std::domain_error("not a rational square");
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
    return Rat(n, d);
}

Rat pow_int(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long n = e > 0 ? e : -e;
    Rat num, den;
    mpz_pow_ui(num.get_num_mpz_t(), b.get_num_mpz_t(), n);
    mpz_pow_ui(den.get_den_mpz_t(), b.get_den_mpz_t(), n);
    Rat r(num.get_num(), den.get_den());
    r.canonicalize();
    return r;
}

namespace {

bool is_prime_trial(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Int pow_p(const Int& p, int k) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("no modular inverse");
    return r;
}

} // namespace

PadicContext::PadicContext(Int prime, int digits) : p(std::move(prime)), precision(digits) {
    if (!is_prime_trial(p)) throw std::invalid_argument("p must be prime");
    if (precision < 1) throw std::invalid_argument("precision must be >= 1");
}

Ord ord(const Rat& x, const PadicContext& ctx) {
    if (x == 0) return Ord::inf();
    Int tmp;
    long vn = mpz_remove(tmp.get_mpz_t(), x.get_num_mpz_t(), ctx.p.get_mpz_t());
    long vd = mpz_remove(tmp.get_mpz_t(), x.get_den_mpz_t(), ctx.p.get_mpz_t());
    return Ord::fin(vn - vd);
}

long ord_finite(const Rat& x, const PadicContext& ctx) {
    Ord o = ord(x, ctx);
    if (o.infinite) throw std::domain_error("valuation of zero");
    return o.v;
}

Int unit_residue_mod(const Rat& x, const PadicContext& ctx, int k) {
    long v = ord_finite(x, ctx);
    Rat u = x * pow_int(Rat(ctx.p), -v);
    Int m = pow_p(ctx.p, k);
    Int num = u.get_num() % m;
    if (num < 0) num += m;
    Int den = u.get_den() % m;
    return (num * mod_inverse(den, m)) % m;
}

Int leading_digit(const Rat& x, const PadicContext& ctx) {
    if (x == 0) throw std::domain_error("zero has no leading digit");
    return unit_residue_mod(x, ctx, 1);
}

Rat PadicExpansion::truncation(const Int& p) const {
    if (zero) return Rat(0);
    Rat value = 0;
    Rat scale = pow_int(Rat(p), ord);
    for (const Int& d : digits) {
        value += Rat(d) * scale;
        scale *= p;
    }
    value.canonicalize();
    return value;
}

PadicExpansion expand(const Rat& x, const PadicContext& ctx) {
    PadicExpansion e;
    if (x == 0) {
        e.zero = true;
        e.exact = Rat(0);
        return e;
    }
    e.ord = ord_finite(x, ctx);
    Int r = unit_residue_mod(x, ctx, ctx.precision);
    for (int j = 0; j < ctx.precision; ++j) {
        e.digits.push_back(r % ctx.p);
        r /= ctx.p;
    }
    e.exact = x;
    return e;
}

int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

bool is_square(const Rat& x, const PadicContext& ctx) {
    if (x == 0) return true;
    long v = ord_finite(x, ctx);
    if (v % 2 != 0) return false;
    if (ctx.p == 2) return unit_residue_mod(x, ctx, 3) == 1;
    return legendre(unit_residue_mod(x, ctx, 1), ctx.p) == 1;
}

Int canonical_unit_sqrt_mod(const Int& u, const Int& p, int prec) {
    if (p == 2) {
        // unit square: u = 1 mod 8; root normalized to 1 mod 4
        int work = prec + 2;
        Int m = pow_p(p, work);
        Int uu = u % m;
        if (uu % 8 != 1) throw std::domain_error("not a square in Qp");
        Int s = 1;
        for (int j = 3; j < work; ++j) {
            Int mod_next = pow_p(p, j + 1);
            if ((s * s - uu) % mod_next != 0) s += pow_p(p, j - 1);
        }
        return s % pow_p(p, prec);
    }
    Int u0 = u % p;
    Int s0 = -1;
    for (Int c = 1; c < p; ++c)
        if ((c * c - u0) % p == 0) { s0 = c; break; }
    if (s0 < 0) throw std::domain_error("not a square in Qp");
    if (p - s0 < s0) s0 = p - s0;
    // Newton lifting, doubling precision each step
    Int s = s0;
    int have = 1;
    while (have < prec) {
        have = std::min(prec, 2 * have);
        Int m = pow_p(p, have);
        Int inv2s = mod_inverse((2 * s) % m, m);
        s = (s - (s * s - u % m) % m * inv2s) % m;
        if (s < 0) s += m;
    }
    Int m = pow_p(p, prec);
    Int r = s % m;
    // keep canonical branch: leading digit in [1, (p-1)/2]
    if (r % p > (p - 1) / 2) r = (m - r) % m;
    return r;
}

PadicExpansion hensel_sqrt(const Rat& x, const PadicContext& ctx) {
    if (x == 0) throw std::domain_error("not a square in Qp");
    if (!is_square(x, ctx)) throw std::domain_error("not a square in Qp");
    long v = ord_finite(x, ctx);
    PadicExpansion e;
    e.ord = v / 2;
    if (is_rational_square(x)) {
        Rat r = rational_sqrt(x);
        if (ctx.p == 2) {
            if (unit_residue_mod(r, ctx, 2) != 1) r = -r;
        } else {
            if (leading_digit(r, ctx) > (ctx.p - 1) / 2) r = -r;
        }
        PadicExpansion full = expand(r, ctx);
        full.exact = r;
        return full;
    }
    int margin = ctx.p == 2 ? 6 : 2;
    Int s = canonical_unit_sqrt_mod(unit_residue_mod(x, ctx, ctx.precision + margin),
                                    ctx.p, ctx.precision + margin);
    for (int j = 0; j < ctx.precision; ++j) {
        e.digits.push_back(s % ctx.p);
        s /= ctx.p;
    }
    return e;
}

Int smallest_nonresidue(const Int& p) {
    if (p == 2) throw std::domain_error("c0 undefined for p=2");
    for (Int c = 2; c < p; ++c)
        if (legendre(c, p) == -1) return c;
    throw std::logic_error("no nonresidue found");
}

SquareClassRep square_class(const Rat& x, const PadicContext& ctx) {
    if (x == 0) throw std::domain_error("square class of zero");
    long v = ord_finite(x, ctx);
    bool odd_v = ((v % 2) + 2) % 2 == 1;
    if (ctx.p == 2) {
        Int u = unit_residue_mod(x, ctx, 3);
        Rat unit_rep;
        if (u == 1) unit_rep = 1;
        else if (u == 3) unit_rep = -5;
        else if (u == 5) unit_rep = 5;
        else unit_rep = -1;
        return SquareClassRep{odd_v ? unit_rep * 2 : unit_rep};
    }
    bool res = legendre(unit_residue_mod(x, ctx, 1), ctx.p) == 1;
    Rat rep = res ? Rat(1) : Rat(smallest_nonresidue(ctx.p));
    if (odd_v) rep *= ctx.p;
    return SquareClassRep{rep};
}

std::vector<Rat> xp_set(const Int& p) {
    if (p == 2) return {1, -1, 2, -2, 3, -3, 6, -6, 12, -18, 24};
    Rat c0(smallest_nonresidue(p));
    if (p % 4 == 1) return {1, c0, Rat(p), c0 * p, c0 * c0 * p, c0 * c0 * c0 * p, c0 * p * p};
    return {1, -1, Rat(p), Rat(-p), Rat(p * p)};
}

std::vector<Rat> yp_set(const Int& p) {
    if (p == 2) return {-1, 2, -2, 3, -3, 6, -6};
    Rat c0(smallest_nonresidue(p));
    if (p % 4 == 1) return {c0, Rat(p), c0 * p};
    return {-1, Rat(p), Rat(-p)};
}

SquareKind square_kind(const Rat& x, const PadicContext& ctx) {
    if (x == 0) throw std::domain_error("square kind of zero");
    long v = ord_finite(x, ctx);
    if (((v % 2) + 2) % 2 == 0)
        return is_square(x, ctx) ? SquareKind::Square : SquareKind::UnitNonsquare;
    return is_square(x / ctx.p, ctx) ? SquareKind::PrimeTimesSquare : SquareKind::OddNonsquare;
}

int hilbert_symbol(const Rat& a, const Rat& b, const PadicContext& ctx) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol of zero");
    long alpha = ord_finite(a, ctx);
    long beta = ord_finite(b, ctx);
    if (ctx.p == 2) {
        Int u = unit_residue_mod(a, ctx, 3);
        Int v = unit_residue_mod(b, ctx, 3);
        auto eps = [](const Int& w) { return ((w - 1) / 2) % 2 != 0; };
        auto omega = [](const Int& w) { return ((w * w - 1) / 8) % 2 != 0; };
        int e = (eps(u) && eps(v) ? 1 : 0) + (alpha % 2 != 0 && omega(v) ? 1 : 0) +
                (beta % 2 != 0 && omega(u) ? 1 : 0);
        return e % 2 == 0 ? 1 : -1;
    }
    int lu = legendre(unit_residue_mod(a, ctx, 1), ctx.p);
    int lv = legendre(unit_residue_mod(b, ctx, 1), ctx.p);
    int sign = 1;
    bool eps_p = ((ctx.p - 1) / 2) % 2 != 0;
    if (alpha % 2 != 0 && beta % 2 != 0 && eps_p) sign = -sign;
    if (beta % 2 != 0 && lu == -1) sign = -sign;
    if (alpha % 2 != 0 && lv == -1) sign = -sign;
    return sign;
}

bool two_squares_exists(const Rat& a, const PadicContext& ctx) {
    if (a == 0) return true;
    return hilbert_symbol(a, Rat(-1), ctx) == 1;
}

} // namespace padcam
