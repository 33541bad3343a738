#pragma once

#include "padcam/quadext.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace padcam {

/// Valid parameter triple: t integral (ord >= 0), |R2|_p > |R1|_p > 0.
struct SystemParams {
    PadicContext ctx;
    Rat t, R1, R2;

    SystemParams(PadicContext c, Rat tt, Rat r1, Rat r2);
    Rat k() const { return R2 / R1; }
};

struct SpherePoint {
    Rat x, y, z;
    bool on_sphere() const { return x * x + y * y + z * z == 1; }
};

struct PhasePoint {
    SpherePoint first, second;
};

/// Sparse polynomial in (x1, y1, z1, x2, y2, z2), total degree capped at 4.
struct Observable {
    using Mono = std::array<std::uint8_t, 6>;
    std::map<Mono, Rat> coef;

    static Observable constant(const Rat& c);
    static Observable var(int i);

    Observable operator+(const Observable& o) const;
    Observable operator-(const Observable& o) const;
    Observable operator*(const Observable& o) const;
    Observable scaled(const Rat& c) const;
    Observable partial(int i) const;
    Rat eval(const PhasePoint& p) const;
};

Observable observable_J(const SystemParams& params);
Observable observable_H(const SystemParams& params);

std::pair<Rat, Rat> eval_system(const SystemParams& params, const PhasePoint& pt);

SpherePoint stereographic(const Rat& u, const Rat& v);

/// Poisson bracket {f, g} evaluated at a point, expanded over the
/// fundamental sphere brackets {x_i,y_i} = z_i/R_i (cyclically).
Rat poisson(const Observable& f, const Observable& g, const SystemParams& params,
            const PhasePoint& pt);

/// Rank of the system differential restricted to the product-sphere tangent.
int jacobian_rank(const SystemParams& params, const PhasePoint& pt);

using Mat4 = std::array<std::array<Rat, 4>, 4>;

struct HessianData {
    Mat4 MJ, MH, Omega;
    int z1, z2;
};

HessianData hessians(const SystemParams& params, int z1, int z2);

enum class Region { Outer, Inner, Limit };

const char* region_name(Region r);

/// Outer/inner/limit by the sign of ord(k (2t-1)^2); t = 1/2 counts as inner.
Region region(const SystemParams& params);

/// Delta(k, t, z1) = -k^2 (1-2t)^2 - t^2 + 2 k t z1.
Rat critical_discriminant(const Rat& k, const Rat& t, int z1);

/// Data of the quadratic x^2 + iBx + C whose roots are the distinguished
/// eigenvalue pair of R2 Omega^-1 M_H. Roots are reported as coordinates
/// over the basis {1, alpha, i, i*alpha} with alpha^2 = disc.
struct EigenQuadratic {
    Rat B, C;
    Rat disc;                        // -B^2 - 4C
    bool repeated_pair = false;      // disc == 0 (lambda == mu)
    bool opposite_pair = false;      // B == 0  (lambda == -mu)
    bool zero_root = false;          // C == 0
    bool degenerate() const { return repeated_pair; }
    ExtOrd ord_lambda, ord_mu;
    std::array<Rat, 4> lambda, mu;   // coordinates over {1, alpha, i, i alpha}
    std::string label_rule;
};

EigenQuadratic eigen_quadratic(const SystemParams& params, int z1, int z2);

/// Integral rational roots t of Delta(k, t, z1) = 0; at most two. Roots that
/// exist p-adically but have no exact rational representation are omitted.
std::vector<Rat> degenerate_t_values(const PadicContext& ctx, const Rat& k, int z1);

PhasePoint critical_point_coords(int z1, int z2);

} // namespace padcam
