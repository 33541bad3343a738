#include "padcam/rank1.hpp"

#include <doctest.h>

#include <random>

using namespace padcam;

namespace {

Rat rnd_rat(std::mt19937_64& rng, int height = 12) {
    std::uniform_int_distribution<int> num(-height, height), den(1, height);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

// family with z1 = 3/5 exactly: c = 1 - 2t, c k = 5t/6
struct CircleFamily {
    SystemParams params;
    Rat c;
};

CircleFamily pythagorean_instance(const PadicContext& ctx, int m) {
    Rat t = ctx.p == 2 ? Rat(2 * m + 1) : Rat((1 + pow_int(Rat(ctx.p), m)) / 2);
    Rat c = 1 - 2 * t;
    Rat k = 5 * t / (6 * (1 - 2 * t));
    return {SystemParams(ctx, t, Rat(1), k), c};
}

// multiplier relation: (c/R1) dJ - dH lies in the span of the constraint
// gradients at the point
bool multiplier_relation_holds(const SystemParams& params, const PhasePoint& m, const Rat& c) {
    Observable J = observable_J(params), H = observable_H(params);
    std::array<Rat, 6> vals{m.first.x, m.first.y, m.first.z,
                            m.second.x, m.second.y, m.second.z};
    std::vector<std::vector<Rat>> rows(3, std::vector<Rat>(6, Rat(0)));
    for (int i = 0; i < 6; ++i)
        rows[0][i] = (c / params.R1) * J.partial(i).eval(m) - H.partial(i).eval(m);
    for (int i = 0; i < 3; ++i) rows[1][i] = vals[i];
    for (int i = 3; i < 6; ++i) rows[2][i] = vals[i];
    // rank must stay 2
    int rank = 0;
    for (size_t col = 0, r = 0; col < 6 && r < 3; ++col) {
        size_t sel = 3;
        for (size_t i = r; i < 3; ++i)
            if (rows[i][col] != 0) { sel = i; break; }
        if (sel == 3) continue;
        std::swap(rows[r], rows[sel]);
        for (size_t i = 0; i < 3; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Rat f = rows[i][col] / rows[r][col];
            for (size_t j = col; j < 6; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
        rank = static_cast<int>(r);
    }
    return rank == 2;
}

} // namespace

TEST_CASE("f invariant") {
    PadicContext c5(5);
    CHECK_THROWS_AS((void)f_invariant(Rat(0), Rat(1, 5), Rat(1)), std::domain_error);
    CHECK_THROWS_AS((void)f_invariant(Rat(2), Rat(1, 5), Rat(0)), std::domain_error);
    CHECK_THROWS_AS((void)f_invariant(Rat(-1), Rat(1, 5), Rat(2)), std::domain_error);

    // deep-valuation law, pinned by exact evaluation: class(f) = class(-c).
    // The coarse leading-term c^3 k^2 / (2 t^2) drops a sign and a factor 2;
    // exact expansion gives f = -4 c w^3 (ck/2t)^2 (1 + O(p)).
    Rat f = f_invariant(Rat(500), pow_int(Rat(5), -12), Rat(25));
    CHECK(square_class(f, c5) == square_class(Rat(-500), c5));
    CHECK(square_class(f, c5).value == 5);
    for (const Int& p : {Int(5), Int(7), Int(13)}) {
        PadicContext ctx(p);
        for (long cu : {1L, 2L, 3L})
            for (int ce : {3, 4})
                for (int ke : {-8, -10, -12}) {
                    Rat c = Rat(cu) * pow_int(Rat(p), ce);
                    Rat ff = f_invariant(c, pow_int(Rat(p), ke), pow_int(Rat(p), 2));
                    CHECK(square_class(ff, ctx) == square_class(-c, ctx));
                }
    }
}

TEST_CASE("second-factor sphere identity") {
    // ((1-t-c)/(ck))^2 (1 - z1^2) + z2^2 = 1 as a rational identity
    std::mt19937_64 rng(67);
    int done = 0;
    while (done < 120) {
        Rat c = rnd_rat(rng), k = rnd_rat(rng), t = rnd_rat(rng);
        if (c == 0 || k == 0 || t == 0 || 1 - t - c == 0) continue;
        Rat w = 1 - t - c;
        Rat z1 = (t / (c * k) + c * k / t - c * k * t / (w * w)) / 2;
        Rat z2 = (t * w / (c * c * k * k) - t / w - w / t) / 2;
        Rat rho = w / (c * k);
        CHECK(rho * rho * (1 - z1 * z1) + z2 * z2 == 1);
        ++done;
    }
}

TEST_CASE("rank-1 locus structure") {
    for (const Int& p : {Int(2), Int(3), Int(5), Int(7), Int(13)}) {
        PadicContext ctx(p);
        for (int m : {1, 2, 3}) {
            if (p == 5 && m == 1) continue;   // k lands at valuation 0 there
            CircleFamily fam = pythagorean_instance(ctx, m);
            auto pt = rank1_locus(fam.params, fam.c);
            REQUIRE(pt.has_value());
            CHECK(pt->exact_witness);
            CHECK(pt->z1 == Rat(3, 5));
            CHECK(pt->point.first.on_sphere());
            CHECK(pt->point.second.on_sphere());
            CHECK(jacobian_rank(fam.params, pt->point) == 1);
            CHECK(multiplier_relation_holds(fam.params, pt->point, fam.c));
            // scaling law x2/x1 = y2/y1 = (1-t-c)/(ck)
            Rat rho = (1 - fam.params.t - fam.c) / (fam.c * fam.params.k());
            if (pt->point.first.x != 0)
                CHECK(pt->point.second.x / pt->point.first.x == rho);
        }
    }
}

TEST_CASE("special rank-1 families at t = 0 and t = 1") {
    PadicContext c7(7);
    SystemParams p0(c7, Rat(0), Rat(2), Rat(3, 7));
    auto fam0 = rank1_special(p0);
    CHECK(fam0.size() == 12);
    for (const Rank1Point& pt : fam0) {
        CHECK(pt.point.first.on_sphere());
        CHECK(pt.point.second.on_sphere());
        CHECK(jacobian_rank(p0, pt.point) == 1);
    }
    SystemParams p1(c7, Rat(1), Rat(2), Rat(3, 7));
    auto fam1 = rank1_special(p1);
    CHECK(fam1.size() == 6);
    for (const Rank1Point& pt : fam1) CHECK(jacobian_rank(p1, pt.point) == 1);

    SystemParams pg(c7, Rat(2), Rat(2), Rat(3, 7));
    CHECK_THROWS_AS((void)rank1_special(pg), std::domain_error);
}

TEST_CASE("rank-1 types") {
    PadicContext c7(7), c5(5);
    // parity rules on the pole and t = 1 families
    {
        SystemParams odd1(c7, Rat(0), Rat(7), Rat(1, 7));
        auto fams = rank1_special(odd1);
        for (const Rank1Point& pt : fams) {
            Rank1Form f = classify_rank1(odd1, pt);
            if (pt.branch == Rank1Branch::PoleFirst) CHECK(f.c_prime == 49);   // ord(R1) odd
            if (pt.branch == Rank1Branch::PoleSecond) CHECK(f.c_prime == 49);  // ord(R2) odd
        }
        SystemParams even1(c7, Rat(1), Rat(1), Rat(1, 7));
        for (const Rank1Point& pt : rank1_special(even1)) {
            Rank1Form f = classify_rank1(even1, pt);
            CHECK(f.c_prime == 1);   // ord(R1) even at t = 1
        }
        SystemParams p5odd(c5, Rat(0), Rat(5), Rat(1, 5));
        for (const Rank1Point& pt : rank1_special(p5odd)) {
            Rank1Form f = classify_rank1(p5odd, pt);
            CHECK(f.c_prime == 1);   // p = 1 mod 4: always elliptic
        }
    }
    // generic branch postconditions and square-rescaling stability
    for (int m : {1, 2}) {
        CircleFamily fam = pythagorean_instance(c7, m);
        auto pt = rank1_locus(fam.params, fam.c);
        REQUIRE(pt.has_value());
        Rank1Form f = classify_rank1(fam.params, *pt);
        REQUIRE(f.f_value.has_value());
        CHECK(is_square(*f.f_value / f.c_prime, c7));
        SystemParams scaled(c7, fam.params.t, 4 * fam.params.R1, 4 * fam.params.R2);
        Rank1Form g = classify_rank1(scaled, *pt);
        CHECK(f.c_prime == g.c_prime);
    }
}

TEST_CASE("image of the rank-1 locus") {
    PadicContext c7(7);
    CircleFamily fam = pythagorean_instance(c7, 1);
    auto img = image_curve(fam.params, fam.c);
    // the image only uses z1, z2 and the rotation-invariant pairing; check
    // against direct evaluation at two distinct circle witnesses
    auto pt = rank1_locus(fam.params, fam.c);
    REQUIRE(pt.has_value());
    auto [j1, h1] = eval_system(fam.params, pt->point);
    CHECK(j1 == img.first);
    CHECK(h1 == img.second);
    // rotate the witness by the rational rotation (3/5, 4/5)
    PhasePoint rotated = pt->point;
    auto rot = [](const SpherePoint& s) {
        return SpherePoint{Rat(3, 5) * s.x - Rat(4, 5) * s.y,
                           Rat(4, 5) * s.x + Rat(3, 5) * s.y, s.z};
    };
    rotated.first = rot(rotated.first);
    rotated.second = rot(rotated.second);
    CHECK(rotated.first.on_sphere());
    auto [j2, h2] = eval_system(fam.params, rotated);
    CHECK(j2 == img.first);
    CHECK(h2 == img.second);

    // pole family at t = 0: J = z1 R1 + R2 z2, H = z1
    PadicContext c5(5);
    SystemParams p0(c5, Rat(0), Rat(2), Rat(3, 5));
    for (const Rank1Point& pt0 : rank1_special(p0)) {
        auto [j, h] = eval_system(p0, pt0.point);
        if (pt0.branch == Rank1Branch::PoleFirst) {
            CHECK(j == pt0.z1 * p0.R1 + p0.R2 * pt0.point.second.z);
            CHECK(h == pt0.z1);
        }
    }
    // aligned family at t = 1: H = 1
    SystemParams p1(c5, Rat(1), Rat(2), Rat(3, 5));
    for (const Rank1Point& pt1 : rank1_special(p1)) {
        auto [j, h] = eval_system(p1, pt1.point);
        if (pt1.branch == Rank1Branch::AlignedT1) CHECK(h == 1);
        if (pt1.branch == Rank1Branch::AntipodalT1) CHECK(h == -1);
    }
}

TEST_CASE("rank-1 realization round trip at p = 5") {
    PadicContext c5(5);
    for (const Rat& cp : xp_set(Int(5))) {
        auto [params, c] = realize_rank1_form(c5, cp);
        auto pt = rank1_locus(params, c);
        REQUIRE(pt.has_value());
        Rank1Form f = classify_rank1(params, *pt);
        CHECK(f.c_prime == cp);
    }
    CHECK_THROWS_AS((void)realize_rank1_form(c5, Rat(3)), std::invalid_argument);
}
