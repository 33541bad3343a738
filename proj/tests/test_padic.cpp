#include "padcam/padic.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace padcam;
using padcam::testing::hilbert_brute;
using padcam::testing::squares_mod;

namespace {

Rat rnd_rat(std::mt19937_64& rng, int height = 30) {
    std::uniform_int_distribution<int> num(-height, height), den(1, height);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("valuations") {
    PadicContext c3(3), c5(5), c7(7);
    CHECK(ord(Rat(18), c3) == Ord::fin(2));
    CHECK(ord(Rat(1, 50), c5) == Ord::fin(-2));
    CHECK(ord(Rat(0), c7).infinite);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rat x = rnd_rat(rng), y = rnd_rat(rng);
        if (x == 0 || y == 0) continue;
        CHECK(ord_finite(x * y, c7) == ord_finite(x, c7) + ord_finite(y, c7));
        if (x + y != 0) {
            long m = std::min(ord_finite(x, c7), ord_finite(y, c7));
            CHECK(ord_finite(x + y, c7) >= m);
            if (ord_finite(x, c7) != ord_finite(y, c7)) CHECK(ord_finite(x + y, c7) == m);
        }
    }
}

TEST_CASE("leading digits and expansions") {
    PadicContext c3(3), c5(5);
    PadicContext c7(7, 2);
    CHECK(leading_digit(Rat(18), c3) == 2);
    // oracle: the inverse of 2 mod 7 by enumeration
    Int inv2 = 0;
    for (Int z = 1; z < 7; ++z)
        if ((2 * z) % 7 == 1) inv2 = z;
    CHECK(inv2 == 4);
    CHECK(leading_digit(Rat(1, 2), c7) == inv2);
    CHECK(leading_digit(Rat(-1), c5) == 4);

    PadicContext c3n(3, 3);
    PadicExpansion e = expand(Rat(18), c3n);
    CHECK(e.ord == 2);
    REQUIRE(e.digits.size() == 3);
    CHECK(e.digits[0] == 2);
    CHECK(e.digits[1] == 0);
    CHECK(e.digits[2] == 0);

    PadicExpansion h = expand(Rat(1, 2), c7);
    CHECK(h.ord == 0);
    CHECK(h.digits[0] == 4);
    CHECK(h.digits[1] == 3);
    // 4 + 3*7 = 25 and 2*25 = 1 mod 49
    CHECK((2 * 25) % 49 == 1);

    PadicContext c5n(5, 3);
    PadicExpansion m = expand(Rat(-1), c5n);
    CHECK(m.ord == 0);
    for (const Int& d : m.digits) CHECK(d == 4);

    CHECK(expand(Rat(0), c5n).zero);
    CHECK_THROWS_AS((void)leading_digit(Rat(0), c5n), std::domain_error);
}

TEST_CASE("square detection") {
    PadicContext c7(7), c2(2);
    // oracle: enumerate residues mod 7
    std::set<Int> sq7;
    for (Int z = 1; z < 7; ++z) sq7.insert((z * z) % 7);
    CHECK(sq7 == std::set<Int>{1, 2, 4});
    CHECK(is_square(Rat(2), c7));
    CHECK_FALSE(is_square(Rat(7), c7));
    // oracle: brute force y mod 2^6
    bool found = false;
    for (Int y = 0; y < 64; ++y)
        if ((y * y) % 64 == 17) found = true;
    CHECK(found);
    CHECK(is_square(Rat(17), c2));
    CHECK(is_square(Rat(0), c7));
    CHECK_FALSE(is_square(Rat(5), c7));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Rat x = rnd_rat(rng);
        CHECK(is_square(x * x, c7));
        CHECK(is_square(x * x, c2));
    }
}

TEST_CASE("hensel square roots") {
    PadicContext c7(7, 3);
    PadicExpansion r = hensel_sqrt(Rat(2), c7);
    CHECK(r.ord == 0);
    Rat v = r.truncation(Int(7));
    CHECK(v == 108);  // 108^2 - 2 = 0 mod 343
    CHECK((Int(108) * 108 - 2) % 343 == 0);

    PadicContext c5(5);
    PadicExpansion two = hensel_sqrt(Rat(4), c5);
    REQUIRE(two.exact.has_value());
    CHECK(*two.exact == 2);

    PadicContext c7d(7);
    PadicExpansion frac = hensel_sqrt(Rat(9, 4), c7d);
    REQUIRE(frac.exact.has_value());
    CHECK((*frac.exact == Rat(3, 2) || *frac.exact == Rat(-3, 2)));
    CHECK(*frac.exact * *frac.exact == Rat(9, 4));

    CHECK_THROWS_AS((void)hensel_sqrt(Rat(7), c7d), std::domain_error);

    // p = 2 precision contract: s^2 = x mod 2^(N-2) for units
    PadicContext c2(2, 12);
    PadicExpansion s = hensel_sqrt(Rat(17), c2);
    Rat sv = s.truncation(Int(2));
    Rat diff = sv * sv - 17;
    CHECK(ord_finite(diff, c2) >= 12 - 2);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        Rat x = rnd_rat(rng);
        if (x == 0) continue;
        PadicContext ctx(7, 10);
        PadicExpansion e = hensel_sqrt(x * x, ctx);
        Rat err = e.truncation(Int(7)) * e.truncation(Int(7)) - x * x;
        if (err != 0) CHECK(ord_finite(err, ctx) >= ord_finite(x * x, ctx) + 10);
    }
}

TEST_CASE("smallest nonresidue") {
    // oracle: enumerate squares
    for (long p : {5L, 7L, 13L}) {
        std::set<Int> sq;
        for (Int z = 1; z < p; ++z) sq.insert((z * z) % p);
        Int expected = 0;
        for (Int c = 2; c < p; ++c)
            if (!sq.count(c)) { expected = c; break; }
        CHECK(smallest_nonresidue(Int(p)) == expected);
    }
    CHECK(smallest_nonresidue(Int(5)) == 2);
    CHECK(smallest_nonresidue(Int(7)) == 3);
    CHECK(smallest_nonresidue(Int(13)) == 2);
    CHECK_THROWS_AS((void)smallest_nonresidue(Int(2)), std::domain_error);
}

TEST_CASE("square classes") {
    PadicContext c5(5), c7(7), c3(3);
    CHECK(square_class(Rat(1, 5), c5).value == 5);
    CHECK(square_class(Rat(50), c7).value == 1);
    // -18 = -2 * 9 and -2 = 1 mod 3 is a residue
    CHECK(legendre(Int(1), Int(3)) == 1);
    CHECK(square_class(Rat(-18), c3).value == 1);

    std::mt19937_64 rng(17);
    for (const Int& p : {Int(2), Int(3), Int(5), Int(7), Int(13)}) {
        PadicContext ctx(p);
        for (int i = 0; i < 100; ++i) {
            Rat x = rnd_rat(rng), y = rnd_rat(rng);
            if (x == 0 || y == 0) continue;
            CHECK(square_class(x * y * y, ctx) == square_class(x, ctx));
            CHECK(is_square(x / square_class(x, ctx).value, ctx));
        }
    }
}

TEST_CASE("X_p and Y_p") {
    CHECK(xp_set(Int(7)) == std::vector<Rat>{1, -1, 7, -7, 49});
    CHECK(xp_set(Int(5)) == std::vector<Rat>{1, 2, 5, 10, 20, 40, 50});
    CHECK(yp_set(Int(2)) == std::vector<Rat>{-1, 2, -2, 3, -3, 6, -6});

    for (const Int& p : {Int(2), Int(3), Int(5), Int(7), Int(13)}) {
        PadicContext ctx(p);
        auto xs = xp_set(p);
        auto ys = yp_set(p);
        size_t nx = p == 2 ? 11 : (p % 4 == 1 ? 7 : 5);
        size_t ny = p == 2 ? 7 : 3;
        CHECK(xs.size() == nx);
        CHECK(ys.size() == ny);
        // class collisions inside X_p are exactly the expected pairs
        std::map<std::string, int> by_class;
        for (const Rat& x : xs) by_class[rat_str(square_class(x, ctx).value)]++;
        size_t expected_classes = p == 2 ? 8 : (p % 4 == 1 ? 4 : 4);
        CHECK(by_class.size() == expected_classes);
        if (p == 5) {
            CHECK(square_class(Rat(10), ctx) == square_class(Rat(40), ctx));
            CHECK(square_class(Rat(5), ctx) == square_class(Rat(20), ctx));
            CHECK(square_class(Rat(2), ctx) == square_class(Rat(50), ctx));
        }
    }
}

TEST_CASE("hilbert symbol") {
    PadicContext c7(7);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        Rat b = rnd_rat(rng);
        if (b == 0) continue;
        CHECK(hilbert_symbol(Rat(1), b, c7) == 1);
    }
    CHECK(hilbert_symbol(Rat(7), Rat(-1), c7) == -1);
    CHECK(hilbert_symbol(Rat(2), Rat(7), c7) == 1);
    // brute-force oracles mod 7^4
    CHECK(hilbert_brute(Int(7), Int(-1), Int(7), 4) == false);
    CHECK(hilbert_brute(Int(2), Int(7), Int(7), 4) == true);

    // symmetry and bimultiplicativity
    for (const Int& p : {Int(2), Int(3), Int(5), Int(7)}) {
        PadicContext ctx(p);
        for (int i = 0; i < 60; ++i) {
            Rat a = rnd_rat(rng), b = rnd_rat(rng), b2 = rnd_rat(rng);
            if (a == 0 || b == 0 || b2 == 0) continue;
            CHECK(hilbert_symbol(a, b, ctx) == hilbert_symbol(b, a, ctx));
            CHECK(hilbert_symbol(a, b * b2, ctx) ==
                  hilbert_symbol(a, b, ctx) * hilbert_symbol(a, b2, ctx));
        }
    }
}

TEST_CASE("two squares") {
    PadicContext c5(5), c13(13), c7(7);
    std::mt19937_64 rng(29);
    for (int i = 0; i < 50; ++i) {
        Rat a = rnd_rat(rng);
        CHECK(two_squares_exists(a, c5));
        CHECK(two_squares_exists(a, c13));
    }
    CHECK_FALSE(two_squares_exists(Rat(7), c7));
    CHECK(two_squares_exists(Rat(0), c7));
}

TEST_CASE("square kind dispatch") {
    PadicContext c7(7);
    CHECK(square_kind(Rat(2), c7) == SquareKind::Square);
    CHECK(square_kind(Rat(3), c7) == SquareKind::UnitNonsquare);
    CHECK(square_kind(Rat(1, 7), c7) == SquareKind::PrimeTimesSquare);
    CHECK(square_kind(Rat(3, 7), c7) == SquareKind::OddNonsquare);
}

TEST_CASE("literal parsing") {
    CHECK(parse_rational("-3/6") == Rat(-1, 2));
    CHECK(parse_number("1.2.0.1;-2", Int(3)) == Rat(1, 9) + Rat(2, 3) + Rat(0) + Rat(3));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_padic_literal("5.1;0", Int(3)));
}
