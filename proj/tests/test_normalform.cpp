#include "padcam/normalform.hpp"

#include <doctest.h>

using namespace padcam;

namespace {

Quad4 q_term(const Rat& c, int i, int j) { return Quad4::term(c, i, j); }

} // namespace

TEST_CASE("normal form bookkeeping") {
    Int p(7);
    NormalForm a = make_class1(Rat(49), Rat(1), p);
    const auto& c1 = std::get<Class1>(a);
    CHECK(c1.c1 == 1);
    CHECK(c1.c2 == 49);
    NormalForm b = make_class1(Rat(1), Rat(49), p);
    CHECK(nf_equal(a, b));
    CHECK(nf_class_tag(a) == "1");
    CHECK(nf_class_tag(NormalForm(R3Form{})) == "R3");
    CHECK(nf_class_tag(NormalForm(I3Form{Rat(-1)})) == "I3");
    CHECK_FALSE(nf_equal(a, NormalForm(R3Form{})));
    CHECK(nf_less(a, NormalForm(R3Form{})));
    // idempotent normalization
    NormalForm c = make_class1(c1.c1, c1.c2, p);
    CHECK(nf_equal(a, c));
    CHECK_THROWS(make_class1(Rat(3), Rat(1), p));   // 3 not in X_7
}

TEST_CASE("expanded quadratic pairs") {
    constexpr int X = 0, XI = 1, Y = 2, ETA = 3;
    // focus-focus
    auto [f1, f2] = expand_normal_form(Class2{Rat(-1)});
    CHECK(f1 == q_term(Rat(1), X, ETA) + q_term(Rat(-1), Y, XI));
    CHECK(f2 == q_term(Rat(1), X, XI) + q_term(Rat(1), Y, ETA));

    auto [r1, r2] = expand_normal_form(R3Form{});
    CHECK(r1 == q_term(Rat(1), X, XI) + q_term(Rat(1), Y, ETA));
    CHECK(r2 == q_term(Rat(1), Y, XI));

    // class-3 tuple, checked against independent symbolic substitution
    Rat p(7);
    auto [g1, g2] = expand_normal_form(Class3{{p, Rat(-1), Rat(0), Rat(1), Rat(0)}});
    Quad4 expect1 = q_term(Rat(1) / (2 * p), X, X) + q_term(Rat(1, 2), Y, Y) +
                    q_term(Rat(1, 2), ETA, ETA) + q_term(p / 2, XI, XI);
    CHECK(g1 == expect1);
    Quad4 expect2 = q_term(Rat(1), X, Y) + q_term(p, XI, ETA);
    CHECK(g2 == expect2);

    auto [i1, i2] = expand_normal_form(I3Form{Rat(-1)});
    CHECK(i1 == q_term(Rat(1), X, ETA) + q_term(Rat(-1), Y, XI));
    CHECK(i2 == q_term(Rat(1, 2), X, X) + q_term(Rat(1, 2), Y, Y));

    CHECK_THROWS_AS((void)expand_normal_form(Class3{{Rat(1), Rat(-1), Rat(0), Rat(1), Rat(1)}}),
                    std::domain_error);   // c = b^2
}

TEST_CASE("expanded pairs Poisson-commute") {
    Int seven(7), five(5), two(2);
    std::vector<NormalForm> forms = {
        make_class1(Rat(1), Rat(1), seven),
        make_class1(Rat(1), Rat(49), seven),
        make_class1(Rat(49), Rat(49), seven),
        Class2{Rat(-1)},
        Class2{Rat(2)},
        Class2{Rat(5)},
        Class2{Rat(10)},
        Class3{{Rat(7), Rat(-1), Rat(0), Rat(1), Rat(0)}},
        Class3{{Rat(-7), Rat(-1), Rat(0), Rat(1), Rat(0)}},
        Class3{{Rat(7), Rat(-1), Rat(0), Rat(1), Rat(1)}},
        Class3{{Rat(-7), Rat(-1), Rat(0), Rat(1), Rat(1)}},
        R3Form{},
        I3Form{Rat(-1)},
        I3Form{Rat(3)},
    };
    for (const NormalForm& f : forms) {
        auto [g1, g2] = expand_normal_form(f);
        CHECK(poisson4(g1, g2).is_zero());
    }
}
