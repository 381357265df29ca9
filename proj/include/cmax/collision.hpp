#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>

#include "cmax/core.hpp"
#include "cmax/kinematics.hpp"
#include "cmax/xform.hpp"

namespace cmax {

/// Collinear two-particle collision setup: characteristic masses m_c1, m_c2,
/// the center-of-mass frame moving at v_cm relative to the lab, and particle
/// speeds +/- v_prime inside the CM frame. After the perfectly inelastic
/// merge both particles move at v_cm in the lab.
class CollisionScenario {
public:
    CollisionScenario(const InvariantSpeedContext& ctx, double m_c1, double m_c2,
                      double v_cm, double v_prime)
        : m_c1_(m_c1), m_c2_(m_c2), v_cm_(v_cm), v_prime_(v_prime) {
        if (!(std::isfinite(m_c1) && m_c1 >= 0.0 && std::isfinite(m_c2) && m_c2 >= 0.0))
            throw InvalidArgument("InvalidArgument: characteristic masses must be >= 0");
        check_speed(ctx, v_cm, "v_cm");
        check_speed(ctx, v_prime, "v_prime");
    }

    double m_c1() const { return m_c1_; }
    double m_c2() const { return m_c2_; }
    double v_cm() const { return v_cm_; }
    double v_prime() const { return v_prime_; }

private:
    static void check_speed(const InvariantSpeedContext& ctx, double v, const char* name) {
        if (!(std::abs(v) < ctx.c_m())) {
            std::ostringstream msg;
            msg << "SpeedExceedsMaximum: |" << name << "| = " << std::abs(v)
                << " >= c_m = " << ctx.c_m();
            throw SpeedExceedsMaximum(msg.str());
        }
    }

    double m_c1_, m_c2_, v_cm_, v_prime_;
};

struct LabVelocities {
    double v1;
    double v2;
};

/// Lab-frame particle speeds from the CM-frame speeds:
///   v1 = (v' + v)/(1 + v v'/c_m^2),  v2 = (-v' + v)/(1 - v v'/c_m^2).
inline LabVelocities lab_velocities(const InvariantSpeedContext& ctx,
                                    const CollisionScenario& s) {
    const double cm2 = ctx.c_m() * ctx.c_m();
    const double a = s.v_cm() * s.v_prime() / cm2;
    const double d1 = 1.0 + a;
    const double d2 = 1.0 - a;
    if (d1 == 0.0 || d2 == 0.0)
        throw CompositionSingularity("CompositionSingularity: 1 +/- v*v'/c_m^2 vanished");
    return {(s.v_prime() + s.v_cm()) / d1, (-s.v_prime() + s.v_cm()) / d2};
}

/// |m1 v1 + m2 v2 - (m1 + m2) v| normalized, with the relativistic masses
/// taken from the mass-velocity law. Vanishes for identical particles.
inline double momentum_conservation_residual(const InvariantSpeedContext& ctx,
                                             const CollisionScenario& s) {
    const LabVelocities lv = lab_velocities(ctx, s);
    const double m1 = mass_of_velocity(ctx, s.m_c1(), lv.v1);
    const double m2 = mass_of_velocity(ctx, s.m_c2(), lv.v2);
    const double before = m1 * lv.v1 + m2 * lv.v2;
    const double after = (m1 + m2) * s.v_cm();
    return std::abs(before - after) /
           (std::abs(m1 * lv.v1) + std::abs(m2 * lv.v2) + 1e-300);
}

/// Residual of m(v1)(1 - v v'/c_m^2) = m(v2)(1 + v v'/c_m^2) with the
/// relativistic masses supplied by the caller.
inline double mass_ratio_residual_from_masses(const InvariantSpeedContext& ctx, double m1,
                                              double m2, double v_cm, double v_prime) {
    const double a = v_cm * v_prime / (ctx.c_m() * ctx.c_m());
    const double lhs = m1 * (1.0 - a);
    const double rhs = m2 * (1.0 + a);
    return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1e-300);
}

inline double mass_ratio_residual(const InvariantSpeedContext& ctx,
                                  const CollisionScenario& s) {
    const LabVelocities lv = lab_velocities(ctx, s);
    const double m1 = mass_of_velocity(ctx, s.m_c1(), lv.v1);
    const double m2 = mass_of_velocity(ctx, s.m_c2(), lv.v2);
    return mass_ratio_residual_from_masses(ctx, m1, m2, s.v_cm(), s.v_prime());
}

/// Max pairwise relative spread of the invariant mass product across a list
/// of speeds. Zero (up to round-off) for any fixed m_c.
inline double invariant_product_check(const InvariantSpeedContext& ctx, double m_c,
                                      std::span<const double> speeds) {
    if (speeds.empty()) return 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double v : speeds) {
        const double p = invariant_mass_product(ctx, m_c, v);
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    return (hi - lo) / std::max(std::abs(hi), 1e-300);
}

/// Full per-scenario report: lab speeds and masses, conservation residuals,
/// and the energy/mass totals before and after the inelastic merge. Energy
/// conservation is reported, never asserted.
struct CollisionReport {
    double v1, v2;
    double m1, m2;
    RegimeTag regime1, regime2;
    double momentum_residual;
    double mass_ratio_residual;
    double energy_before, energy_after;
    double mass_before, mass_after;
};

inline CollisionReport collision_report(const InvariantSpeedContext& ctx,
                                        const CollisionScenario& s) {
    const LabVelocities lv = lab_velocities(ctx, s);
    const double m1 = mass_of_velocity(ctx, s.m_c1(), lv.v1);
    const double m2 = mass_of_velocity(ctx, s.m_c2(), lv.v2);
    const double g1 = gamma_factor(ctx, lv.v1);
    const double g2 = gamma_factor(ctx, lv.v2);
    const double gv = gamma_factor(ctx, s.v_cm());
    const double cm2 = ctx.c_m() * ctx.c_m();

    CollisionReport r{};
    r.v1 = lv.v1;
    r.v2 = lv.v2;
    r.m1 = m1;
    r.m2 = m2;
    r.regime1 = classify_regime(ctx, std::abs(lv.v1));
    r.regime2 = classify_regime(ctx, std::abs(lv.v2));
    r.momentum_residual = momentum_conservation_residual(ctx, s);
    r.mass_ratio_residual = mass_ratio_residual_from_masses(ctx, m1, m2, s.v_cm(), s.v_prime());
    r.energy_before = s.m_c1() * g1 * cm2 + s.m_c2() * g2 * cm2;
    r.energy_after = (s.m_c1() + s.m_c2()) * gv * cm2;
    r.mass_before = m1 + m2;
    r.mass_after = mass_of_velocity(ctx, s.m_c1(), s.v_cm()) +
                   mass_of_velocity(ctx, s.m_c2(), s.v_cm());
    return r;
}

} // namespace cmax
