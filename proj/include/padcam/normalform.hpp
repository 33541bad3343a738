#pragma once

#include "padcam/padic.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace padcam {

// Rank-0 normal form shapes. Class1 carries an unordered pair from X_p,
// Class2 an element of Y_p, Class3 the 5-tuple (c, t1, t2, a, b); R3 and
// I3(c) are the degenerate shapes reachable here.
struct Class1 {
    Rat c1, c2;
};
struct Class2 {
    Rat c;
};
struct Class3 {
    std::array<Rat, 5> tuple;
};
struct R3Form {};
struct I3Form {
    Rat c;
};

using NormalForm = std::variant<Class1, Class2, Class3, R3Form, I3Form>;

/// Class1 with the pair sorted by position in X_p.
NormalForm make_class1(const Rat& c1, const Rat& c2, const Int& p);

bool nf_equal(const NormalForm& a, const NormalForm& b);
bool nf_less(const NormalForm& a, const NormalForm& b);
std::string nf_class_tag(const NormalForm& f);
std::vector<Rat> nf_param_list(const NormalForm& f);
std::string nf_str(const NormalForm& f);

struct NormalFormLess {
    bool operator()(const NormalForm& a, const NormalForm& b) const { return nf_less(a, b); }
};

/// Quadratic polynomials in local symplectic coordinates (x, xi, y, eta).
struct Quad4 {
    using Mono = std::array<std::uint8_t, 4>;
    std::map<Mono, Rat> coef;

    static Quad4 term(const Rat& c, int i, int j);   // c * v_i * v_j
    Quad4 operator+(const Quad4& o) const;
    Quad4 operator-(const Quad4& o) const;
    Quad4 scaled(const Rat& c) const;
    Quad4 partial(int i) const;
    Quad4 operator*(const Quad4& o) const;
    bool is_zero() const { return coef.empty(); }
    bool operator==(const Quad4& o) const { return coef == o.coef; }
};

/// Bracket with {x, xi} = {y, eta} = 1.
Quad4 poisson4(const Quad4& f, const Quad4& g);

/// Explicit quadratic pair (g1, g2) of a normal form.
std::pair<Quad4, Quad4> expand_normal_form(const NormalForm& f);

} // namespace padcam
