#include "padcam/rank1.hpp"

#include <sstream>
#include <stdexcept>

namespace padcam {

const char* rank1_branch_name(Rank1Branch b) {
    switch (b) {
        case Rank1Branch::PoleFirst: return "pole-first";
        case Rank1Branch::PoleSecond: return "pole-second";
        case Rank1Branch::Generic: return "generic";
        case Rank1Branch::AlignedT1: return "aligned";
        default: return "antipodal";
    }
}

namespace {

struct LocusData {
    Rat z1, z2, ratio;   // ratio = (1-t-c)/(ck)
};

LocusData locus_data(const SystemParams& params, const Rat& c) {
    const Rat& t = params.t;
    Rat k = params.k();
    if (c == 0) throw std::domain_error("degenerate rank-1 data: c = 0");
    if (t == 0) throw std::domain_error("degenerate rank-1 data: t = 0");
    Rat w = 1 - t - c;
    if (w == 0) throw std::domain_error("degenerate rank-1 data: 1 - t - c = 0");
    LocusData d;
    d.z1 = (t / (c * k) + c * k / t - c * k * t / (w * w)) / 2;
    d.z2 = (t * w / (c * c * k * k) - t / w - w / t) / 2;
    d.ratio = w / (c * k);
    return d;
}

// small-height rational search for x^2 + y^2 = s; exact witnesses first
std::optional<std::pair<Rat, Rat>> circle_point_exact(const Rat& s) {
    if (is_rational_square(s)) return std::make_pair(rational_sqrt(s), Rat(0));
    for (int dn = 1; dn <= 20; ++dn)
        for (int nm = -20; nm <= 20; ++nm) {
            Rat y(nm, dn);
            y.canonicalize();
            Rat rest = s - y * y;
            if (rest == 0) return std::make_pair(Rat(0), y);
            if (is_rational_square(rest)) return std::make_pair(rational_sqrt(rest), y);
        }
    return std::nullopt;
}

std::pair<Rat, Rat> circle_point_truncated(const Rat& s, const PadicContext& ctx) {
    // pick y with s - y^2 a nonzero square in Qp, lift the root, truncate;
    // candidates are scaled to ord(s) so leading-digit cancellations are
    // reachable for every residue pattern
    long os = ord_finite(s, ctx);
    long base = os >= 0 ? os / 2 : -((-os + 1) / 2);   // floor(os/2)
    long wmax = ctx.p.get_si();
    wmax = std::max(16L, wmax * wmax);
    std::vector<Rat> ys;
    ys.push_back(Rat(0));
    for (long m = base - 3; m <= base + 3; ++m)
        for (long w = 1; w <= wmax; ++w) ys.push_back(Rat(w) * pow_int(Rat(ctx.p), m));
    for (const Rat& y : ys) {
        Rat rest = s - y * y;
        if (rest == 0) return {Rat(0), y};
        if (is_square(rest, ctx))
            return {hensel_sqrt(rest, ctx).truncation(ctx.p), y};
    }
    throw std::domain_error("no p-adic circle point found in bounded search");
}

Rat xp_square_class_key(const Rat& f, const PadicContext& ctx) {
    return square_class(f, ctx).value;
}

// rational proxy in the square class of sqrt(x); requires x a square in Qp
Rat sqrt_class_proxy(const Rat& x, const PadicContext& ctx) {
    PadicExpansion e = hensel_sqrt(x, ctx);
    if (e.exact) return *e.exact;
    // a short truncation already pins the square class
    Rat v = 0;
    Rat scale = pow_int(Rat(ctx.p), e.ord);
    int need = ctx.p == 2 ? 6 : 3;
    for (int i = 0; i < need && i < static_cast<int>(e.digits.size()); ++i) {
        v += Rat(e.digits[i]) * scale;
        scale *= ctx.p;
    }
    return v;
}

} // namespace

Rat f_invariant(const Rat& c, const Rat& k, const Rat& t) {
    if (c == 0) throw std::domain_error("f undefined: c = 0");
    if (t == 0) throw std::domain_error("f undefined: t = 0");
    if (k == 0) throw std::domain_error("f undefined: k = 0");
    Rat w = 1 - t - c;
    if (w == 0) throw std::domain_error("f undefined: 1 - t - c = 0");
    Rat z1 = (t / (c * k) + c * k / t - c * k * t / (w * w)) / 2;
    Rat z2 = (t * w / (c * c * k * k) - t / w - w / t) / 2;
    Rat a = w * w * (1 - t) * (1 - t) * (1 - z1 * z1);
    Rat b = w * w * z1 + c * c * k * z2;
    return a + b * b;
}

std::optional<Rank1Point> rank1_locus(const SystemParams& params, const Rat& c) {
    const PadicContext& ctx = params.ctx;
    if (params.t == 0) throw std::domain_error("use rank1_special for t = 0");
    LocusData d = locus_data(params, c);
    Rat s = 1 - d.z1 * d.z1;
    if (!two_squares_exists(s, ctx)) return std::nullopt;
    Rank1Point out;
    out.c = c;
    out.branch = Rank1Branch::Generic;
    out.z1 = d.z1;
    out.z2 = d.z2;
    Rat x1, y1;
    if (auto exact = circle_point_exact(s)) {
        x1 = exact->first;
        y1 = exact->second;
        out.exact_witness = true;
    } else {
        auto approx = circle_point_truncated(s, ctx);
        x1 = approx.first;
        y1 = approx.second;
        out.exact_witness = false;
    }
    out.point = PhasePoint{SpherePoint{x1, y1, d.z1},
                           SpherePoint{d.ratio * x1, d.ratio * y1, d.z2}};
    return out;
}

std::vector<Rank1Point> rank1_special(const SystemParams& params) {
    if (params.t != 0 && params.t != 1) throw std::domain_error("use rank1_locus");
    std::vector<Rank1Point> out;
    std::vector<SpherePoint> samples = {stereographic(Rat(1), Rat(0)),
                                        stereographic(Rat(1), Rat(1)),
                                        stereographic(Rat(2), Rat(1))};
    if (params.t == 0) {
        for (int pole : {1, -1}) {
            for (const SpherePoint& s : samples) {
                Rank1Point a;
                a.branch = Rank1Branch::PoleFirst;
                a.c = 0;
                a.point = PhasePoint{SpherePoint{0, 0, Rat(pole)}, s};
                a.z1 = Rat(pole);
                a.z2 = s.z;
                out.push_back(a);
                Rank1Point b;
                b.branch = Rank1Branch::PoleSecond;
                b.c = 1;
                b.point = PhasePoint{s, SpherePoint{0, 0, Rat(pole)}};
                b.z1 = s.z;
                b.z2 = Rat(pole);
                out.push_back(b);
            }
        }
        return out;
    }
    for (const SpherePoint& s : samples) {
        Rank1Point a;
        a.branch = Rank1Branch::AlignedT1;
        a.c = 0;
        a.point = PhasePoint{s, s};
        a.z1 = s.z;
        a.z2 = s.z;
        out.push_back(a);
        Rank1Point b;
        b.branch = Rank1Branch::AntipodalT1;
        b.c = 0;
        b.point = PhasePoint{s, SpherePoint{-s.x, -s.y, -s.z}};
        b.z1 = s.z;
        b.z2 = -s.z;
        out.push_back(b);
    }
    return out;
}

Rank1Form classify_rank1(const SystemParams& params, const Rank1Point& pt) {
    const PadicContext& ctx = params.ctx;
    const Int& p = ctx.p;
    bool p3 = p % 4 == 3;
    Rank1Form out;
    switch (pt.branch) {
        case Rank1Branch::PoleFirst:
        case Rank1Branch::AlignedT1:
        case Rank1Branch::AntipodalT1: {
            bool odd = (ord_finite(params.R1, ctx) % 2 + 2) % 2 == 1;
            out.c_prime = (p3 && odd) ? Rat(p * p) : Rat(1);
            out.notes.push_back(std::string("R1 parity branch: ord(R1) ") +
                                (odd ? "odd" : "even"));
            return out;
        }
        case Rank1Branch::PoleSecond: {
            bool odd = (ord_finite(params.R2, ctx) % 2 + 2) % 2 == 1;
            out.c_prime = (p3 && odd) ? Rat(p * p) : Rat(1);
            out.notes.push_back(std::string("R2 parity branch: ord(R2) ") +
                                (odd ? "odd" : "even"));
            return out;
        }
        case Rank1Branch::Generic: break;
    }

    Rat f = f_invariant(pt.c, params.k(), params.t);
    out.f_value = f;
    Rat target = xp_square_class_key(f, ctx);
    Rat arg_base = params.R1 * (pt.z1 * pt.z1 - 1);
    std::vector<Rat> winners;
    Rat winner_root;
    for (const Rat& cp : xp_set(p)) {
        Rat q = f / cp;
        if (!is_square(q, ctx)) continue;
        Rat r = sqrt_class_proxy(q, ctx);
        bool pass = false;
        for (int sgn : {1, -1}) {
            Rat arg = Rat(sgn) * r * arg_base;
            if (arg == 0) throw ContradictionError("vanishing rank-1 test argument");
            // membership in {u^2 + c' v^2}
            if (is_square(-cp, ctx) || hilbert_symbol(arg, -cp, ctx) == 1) {
                pass = true;
                if (sgn < 0) r = -r;
                break;
            }
        }
        std::ostringstream os;
        os << "candidate " << rat_str(cp) << ": root class test "
           << (pass ? "passed" : "failed");
        out.notes.push_back(os.str());
        if (pass) {
            winners.push_back(cp);
            winner_root = r;
        }
    }
    if (winners.empty())
        throw ContradictionError("classification contradiction: no admissible c'");
    if (winners.size() > 1)
        throw ContradictionError("classification contradiction: ambiguous c'");
    out.c_prime = winners[0];
    out.root_class_proxy = winner_root;
    out.notes.push_back("f class rep = " + rat_str(target));
    return out;
}

std::pair<SystemParams, Rat> realize_rank1_form(const PadicContext& ctx, const Rat& c_prime) {
    const Int& p = ctx.p;
    {
        bool found = false;
        for (const Rat& x : xp_set(p))
            if (cmp(x, c_prime) == 0) found = true;
        if (!found) throw std::invalid_argument("c' must come from X_p");
    }
    std::vector<Rat> units;
    if (p == 2) units = {Rat(1), Rat(-1), Rat(5), Rat(-5), Rat(3), Rat(-3), Rat(7), Rat(-7)};
    else units = {Rat(1), Rat(smallest_nonresidue(p)), Rat(-1), Rat(2), Rat(3)};

    struct Cand {
        Rat t, c, k;
    };
    std::vector<Cand> cands;
    // deep-valuation recipe: c of order 3 or 4, t of order 2, k very large
    for (int ce : {3, 4})
        for (const Rat& cu : units)
            for (int ke : {-8, -10, -12})
                for (const Rat& ku : units)
                    cands.push_back({pow_int(Rat(p), 2), Rat(cu * pow_int(Rat(p), ce)),
                                     Rat(ku * pow_int(Rat(p), ke))});
    // moderate-valuation fallback: at p = 2 the deep regime has an empty
    // circle (1 - z1^2 fails the two-square test), so search nearer scales
    for (int te : {2, 3})
        for (long tu : {1L, 3L})
            for (int ce : {1, 2, 3, 4, 5})
                for (const Rat& cu : units)
                    for (int ke : {-3, -4, -5, -6})
                        for (const Rat& ku : units)
                            cands.push_back({Rat(Rat(tu) * pow_int(Rat(p), te)),
                                             Rat(cu * pow_int(Rat(p), ce)),
                                             Rat(ku * pow_int(Rat(p), ke))});

    std::vector<Rat> r1s = {Rat(1), Rat(p)};
    if (p == 2) {
        r1s.push_back(Rat(3));
        r1s.push_back(Rat(6));
    } else {
        r1s.push_back(Rat(smallest_nonresidue(p)));
        r1s.push_back(Rat(Rat(smallest_nonresidue(p)) * p));
    }

    for (const Cand& cd : cands) {
        Rat w = 1 - cd.t - cd.c;
        if (cd.c == 0 || cd.t == 0 || cd.t == 1 || w == 0) continue;
        // cheap screen before any witness search
        Rat z1 = (cd.t / (cd.c * cd.k) + cd.c * cd.k / cd.t - cd.c * cd.k * cd.t / (w * w)) / 2;
        Rat s = 1 - z1 * z1;
        if (s == 0 || !two_squares_exists(s, ctx)) continue;
        Rat f = f_invariant(cd.c, cd.k, cd.t);
        if (f == 0 || !is_square(f / c_prime, ctx)) continue;
        std::optional<Rank1Point> pt;
        try {
            SystemParams base(ctx, cd.t, Rat(1), cd.k);
            pt = rank1_locus(base, cd.c);
        } catch (const std::domain_error&) {
            continue;
        }
        if (!pt) continue;
        for (const Rat& r1 : r1s) {
            try {
                SystemParams params(ctx, cd.t, r1, Rat(cd.k * r1));
                Rank1Form form = classify_rank1(params, *pt);
                if (cmp(form.c_prime, c_prime) == 0) return {params, cd.c};
            } catch (const ContradictionError&) {
            } catch (const std::domain_error&) {
            }
        }
    }
    throw ContradictionError("rank-1 realization search exhausted for c' = " +
                             rat_str(c_prime));
}

std::pair<Rat, Rat> image_curve(const SystemParams& params, const Rat& c) {
    const PadicContext& ctx = params.ctx;
    LocusData d = locus_data(params, c);
    Rat s = 1 - d.z1 * d.z1;
    if (!two_squares_exists(s, ctx)) throw std::domain_error("empty rank-1 locus");
    Rat J = params.R1 * d.z1 + params.R2 * d.z2;
    Rat H = (1 - params.t) * d.z1 + params.t * (d.ratio * s + d.z1 * d.z2);
    return {J, H};
}

} // namespace padcam
