#include "padcam/normalform.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace padcam {

namespace {

long xp_index(const Rat& c, const Int& p) {
    auto xs = xp_set(p);
    for (size_t i = 0; i < xs.size(); ++i)
        if (cmp(xs[i], c) == 0) return static_cast<long>(i);
    throw std::invalid_argument("class-1 parameter not in X_p: " + rat_str(c));
}

int nf_tag_index(const NormalForm& f) { return static_cast<int>(f.index()); }

} // namespace

NormalForm make_class1(const Rat& c1, const Rat& c2, const Int& p) {
    if (xp_index(c1, p) <= xp_index(c2, p)) return Class1{c1, c2};
    return Class1{c2, c1};
}

std::vector<Rat> nf_param_list(const NormalForm& f) {
    std::vector<Rat> out;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Class1>) out = {v.c1, v.c2};
            else if constexpr (std::is_same_v<T, Class2>) out = {v.c};
            else if constexpr (std::is_same_v<T, Class3>)
                out.assign(v.tuple.begin(), v.tuple.end());
            else if constexpr (std::is_same_v<T, I3Form>) out = {v.c};
        },
        f);
    return out;
}

std::string nf_class_tag(const NormalForm& f) {
    switch (f.index()) {
        case 0: return "1";
        case 1: return "2";
        case 2: return "3";
        case 3: return "R3";
        default: return "I3";
    }
}

bool nf_equal(const NormalForm& a, const NormalForm& b) {
    if (a.index() != b.index()) return false;
    auto pa = nf_param_list(a), pb = nf_param_list(b);
    if (pa.size() != pb.size()) return false;
    for (size_t i = 0; i < pa.size(); ++i)
        if (cmp(pa[i], pb[i]) != 0) return false;
    return true;
}

bool nf_less(const NormalForm& a, const NormalForm& b) {
    if (nf_tag_index(a) != nf_tag_index(b)) return nf_tag_index(a) < nf_tag_index(b);
    auto pa = nf_param_list(a), pb = nf_param_list(b);
    for (size_t i = 0; i < std::min(pa.size(), pb.size()); ++i) {
        int c = cmp(pa[i], pb[i]);
        if (c != 0) return c < 0;
    }
    return pa.size() < pb.size();
}

std::string nf_str(const NormalForm& f) {
    std::ostringstream os;
    os << "class " << nf_class_tag(f);
    auto ps = nf_param_list(f);
    if (!ps.empty()) {
        os << "(";
        for (size_t i = 0; i < ps.size(); ++i) os << (i ? "," : "") << rat_str(ps[i]);
        os << ")";
    }
    return os.str();
}

Quad4 Quad4::term(const Rat& c, int i, int j) {
    Quad4 q;
    if (c == 0) return q;
    Mono m{0, 0, 0, 0};
    if (i >= 0) m[i] += 1;
    if (j >= 0) m[j] += 1;
    q.coef[m] = c;
    return q;
}

Quad4 Quad4::operator+(const Quad4& o) const {
    Quad4 r = *this;
    for (const auto& [m, c] : o.coef) {
        Rat& slot = r.coef[m];
        slot += c;
        if (slot == 0) r.coef.erase(m);
    }
    return r;
}

Quad4 Quad4::operator-(const Quad4& o) const { return *this + o.scaled(Rat(-1)); }

Quad4 Quad4::scaled(const Rat& c) const {
    Quad4 r;
    if (c == 0) return r;
    for (const auto& [m, v] : coef) r.coef[m] = v * c;
    return r;
}

Quad4 Quad4::partial(int i) const {
    Quad4 r;
    for (const auto& [m, c] : coef) {
        if (m[i] == 0) continue;
        Mono d = m;
        d[i] -= 1;
        r.coef[d] = c * m[i];
    }
    return r;
}

Quad4 Quad4::operator*(const Quad4& o) const {
    Quad4 r;
    for (const auto& [m1, c1] : coef)
        for (const auto& [m2, c2] : o.coef) {
            Mono m;
            for (int i = 0; i < 4; ++i) m[i] = static_cast<std::uint8_t>(m1[i] + m2[i]);
            Rat& slot = r.coef[m];
            slot += c1 * c2;
            if (slot == 0) r.coef.erase(m);
        }
    return r;
}

Quad4 poisson4(const Quad4& f, const Quad4& g) {
    // vars (x, xi, y, eta) = (0, 1, 2, 3)
    Quad4 r = f.partial(0) * g.partial(1) - f.partial(1) * g.partial(0) +
              f.partial(2) * g.partial(3) - f.partial(3) * g.partial(2);
    return r;
}

std::pair<Quad4, Quad4> expand_normal_form(const NormalForm& f) {
    constexpr int X = 0, XI = 1, Y = 2, ETA = 3;
    if (const auto* c1 = std::get_if<Class1>(&f)) {
        Quad4 g1 = Quad4::term(Rat(1), X, X) + Quad4::term(c1->c1, XI, XI);
        Quad4 g2 = Quad4::term(Rat(1), Y, Y) + Quad4::term(c1->c2, ETA, ETA);
        return {g1, g2};
    }
    if (const auto* c2 = std::get_if<Class2>(&f)) {
        Quad4 g1 = Quad4::term(Rat(1), X, ETA) + Quad4::term(c2->c, Y, XI);
        Quad4 g2 = Quad4::term(Rat(1), X, XI) + Quad4::term(Rat(1), Y, ETA);
        return {g1, g2};
    }
    if (const auto* c3 = std::get_if<Class3>(&f)) {
        const Rat& c = c3->tuple[0];
        const Rat& t1 = c3->tuple[1];
        const Rat& t2 = c3->tuple[2];
        const Rat& a = c3->tuple[3];
        const Rat& b = c3->tuple[4];
        Rat cb = c - b * b;
        if (cb == 0 || a == 0) throw std::domain_error("invalid class-3 tuple");
        // coefficient grids for x^i y^(2-i) and xi^i eta^(2-i), i = 0..2
        std::array<Rat, 3> C1{a * c / (2 * cb), b / (-cb), Rat(1) / (2 * a * cb)};
        std::array<Rat, 3> C2{a * b * c / (-2 * cb), c / cb, b / (-2 * a * cb)};
        std::array<Rat, 3> D1{-(t1 + b * t2) / (2 * a), -b * t1 - c * t2,
                              -a * c * (t1 + b * t2) / 2};
        std::array<Rat, 3> D2{-(b * t1 + c * t2) / (2 * a), -c * (t1 + b * t2),
                              -a * c * (b * t1 + c * t2) / 2};
        auto assemble = [&](const std::array<Rat, 3>& cs, const std::array<Rat, 3>& ds) {
            Quad4 g;
            int pos[3][2] = {{Y, Y}, {X, Y}, {X, X}};
            int mom[3][2] = {{ETA, ETA}, {XI, ETA}, {XI, XI}};
            for (int i = 0; i < 3; ++i) {
                g = g + Quad4::term(cs[i], pos[i][0], pos[i][1]);
                g = g + Quad4::term(ds[i], mom[i][0], mom[i][1]);
            }
            return g;
        };
        return {assemble(C1, D1), assemble(C2, D2)};
    }
    if (std::holds_alternative<R3Form>(f)) {
        Quad4 g1 = Quad4::term(Rat(1), X, XI) + Quad4::term(Rat(1), Y, ETA);
        Quad4 g2 = Quad4::term(Rat(1), Y, XI);
        return {g1, g2};
    }
    // second component uses the position block: (x^2 - c y^2)/2 is the
    // centralizer partner of x eta + c y xi (the momentum-block variant
    // fails to commute)
    const auto& i3 = std::get<I3Form>(f);
    Quad4 g1 = Quad4::term(Rat(1), X, ETA) + Quad4::term(i3.c, Y, XI) +
               Quad4::term((1 + i3.c) / 2, Y, Y);
    Quad4 g2 = Quad4::term(Rat(1) / 2, X, X) + Quad4::term(-i3.c / 2, Y, Y);
    return {g1, g2};
}

} // namespace padcam
