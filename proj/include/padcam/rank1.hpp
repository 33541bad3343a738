#pragma once

#include "padcam/cam.hpp"
#include "padcam/classifier.hpp"

#include <optional>
#include <string>
#include <vector>

namespace padcam {

enum class Rank1Branch { PoleFirst, PoleSecond, Generic, AlignedT1, AntipodalT1 };

const char* rank1_branch_name(Rank1Branch b);

/// A rank-1 critical point. For the generic branch the multiplier c is the
/// R1-absorbed one: (c / R1) dJ = dH at the point.
struct Rank1Point {
    PhasePoint point;
    Rat c;
    Rank1Branch branch;
    bool exact_witness = true;
    Rat z1, z2;
};

struct Rank1Form {
    Rat c_prime;
    // audit data for the generic branch
    std::optional<Rat> f_value;
    std::optional<Rat> root_class_proxy;   // rational in the square class of the chosen root
    std::vector<std::string> notes;
};

/// f(c, k, t): square of the transversal eigenvalue up to the square
/// (c (1-t-c) R2)^2; its square class drives the classification.
Rat f_invariant(const Rat& c, const Rat& k, const Rat& t);

/// Rank-1 point for a given multiplier c, when the first-sphere circle
/// x1^2 + y1^2 = 1 - z1^2 has points over Qp. Exact rational witnesses are
/// preferred; otherwise a truncated lift is attached.
std::optional<Rank1Point> rank1_locus(const SystemParams& params, const Rat& c);

/// The t = 0 / t = 1 families, with sampled representatives.
std::vector<Rank1Point> rank1_special(const SystemParams& params);

Rank1Form classify_rank1(const SystemParams& params, const Rank1Point& pt);

/// Parameters realizing a requested transversal type c' from X_p.
std::pair<SystemParams, Rat> realize_rank1_form(const PadicContext& ctx, const Rat& c_prime);

/// Image (J, H) of the rank-1 locus for multiplier c; independent of the
/// chosen circle witness.
std::pair<Rat, Rat> image_curve(const SystemParams& params, const Rat& c);

} // namespace padcam
