#pragma once

#include "padcam/cam.hpp"
#include "padcam/normalform.hpp"

#include <set>
#include <string>
#include <vector>

namespace padcam {

enum class CriticalPoint { P, Q, S, T };

const char* point_name(CriticalPoint pt);
CriticalPoint point_from_name(const std::string& s);
int point_z1(CriticalPoint pt);
int point_z2(CriticalPoint pt);

/// Everything needed to replay a classification decision.
struct ClassifierTrace {
    std::string route;
    std::string point;
    int z1 = 0, z2 = 0;
    std::string region;
    bool degenerate = false;
    std::vector<std::string> notes;

    void note(std::string s) { notes.push_back(std::move(s)); }
};

struct Classification {
    NormalForm form;
    bool degenerate = false;
    ClassifierTrace trace;
};

/// Region/branch tables: the closed-form route.
Classification classify_closed_form(const SystemParams& params, CriticalPoint pt);

/// First-principles route: pencil characteristic polynomial, square-class
/// analysis of its discriminant, eigenvector pairing tests.
Classification classify_spectral(const SystemParams& params, CriticalPoint pt);

/// Pencil matrix R2 * Omega^-1 * (a1 M_J + a2 M_H).
Mat4 pencil_matrix(const HessianData& h, const Rat& a1, const Rat& a2, const Rat& R2);

/// (E, F) with det(xI - A) = x^4 + E x^2 + F; rejects non-even polynomials.
std::pair<Rat, Rat> pencil_char_even(const Mat4& a);

/// Deterministic parameter families covering every classification branch at
/// the given point; at least min_count tuples when min_count > 0.
std::vector<SystemParams> branch_covering_params(const PadicContext& ctx, CriticalPoint pt,
                                                 size_t min_count = 0);

using FormSet = std::set<NormalForm, NormalFormLess>;

/// Distinct normal forms realized over the branch-covering families.
FormSet enumerate_forms(const Int& p, CriticalPoint pt);

/// Raised when the two classification routes disagree or a spectral
/// invariant fails; carries both traces where available.
struct ContradictionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace padcam
