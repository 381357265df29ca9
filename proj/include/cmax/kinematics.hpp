#pragma once

#include <cmath>
#include <sstream>

#include "cmax/core.hpp"
#include "cmax/xform.hpp"

namespace cmax {

/// Energy-momentum carrier. Satisfies the mass shell
/// E^2 - p^2 c_m^2 = m_c^2 c_m^4 when produced by four_momentum.
struct FourMomentum {
    double E = 0.0;
    double px = 0.0;
    double py = 0.0;
    double pz = 0.0;
};

inline Vec3 momentum_vec(const FourMomentum& fm) { return {fm.px, fm.py, fm.pz}; }

namespace detail {
inline void require_speed_below_cm(const InvariantSpeedContext& ctx, double speed) {
    if (!(std::abs(speed) < ctx.c_m())) {
        std::ostringstream msg;
        msg << "SpeedExceedsMaximum: |v| = " << std::abs(speed) << " >= c_m = " << ctx.c_m();
        throw SpeedExceedsMaximum(msg.str());
    }
}
inline void require_nonnegative_mass(double m) {
    if (!(std::isfinite(m) && m >= 0.0))
        throw InvalidArgument("InvalidArgument: mass must be finite and >= 0");
}
} // namespace detail

/// Mass-velocity law with the characteristic mass m_c = m(c) as reference:
///   m(v) = m_c sqrt((c_m^2 - c^2) / (c_m^2 - v^2)).
/// Finite and monotone increasing on the whole range [0, c_m).
inline double mass_of_velocity(const InvariantSpeedContext& ctx, double m_c, double speed) {
    detail::require_nonnegative_mass(m_c);
    detail::require_speed_below_cm(ctx, speed);
    const double cm2 = ctx.c_m() * ctx.c_m();
    return m_c * std::sqrt((cm2 - ctx.c() * ctx.c()) / (cm2 - speed * speed));
}

inline double mass_of_velocity(const InvariantSpeedContext& ctx, double m_c,
                               const Velocity3& v) {
    return mass_of_velocity(ctx, m_c, v.speed());
}

/// Standard light-speed-bounded mass dilation m = m_0 / sqrt(1 - v^2/c^2),
/// with the rest mass as reference. Kept separate from mass_of_velocity;
/// valid only for |v| < c and never mixed with the c_m law.
inline double rest_mass_dilation(const InvariantSpeedContext& ctx, double m_0, double speed) {
    detail::require_nonnegative_mass(m_0);
    if (!(std::abs(speed) < ctx.c())) {
        std::ostringstream msg;
        msg << "InvalidArgument: rest_mass_dilation needs |v| = " << std::abs(speed)
            << " < c = " << ctx.c();
        throw InvalidArgument(msg.str());
    }
    const double beta = speed / ctx.c();
    return m_0 / std::sqrt(1.0 - beta * beta);
}

/// m(v) sqrt(1 - v^2/c_m^2); constant in v for a fixed particle, equal to
/// m_c sqrt(1 - c^2/c_m^2). Computed as the literal product so constancy is
/// a meaningful check, not an identity of the implementation.
inline double invariant_mass_product(const InvariantSpeedContext& ctx, double m_c,
                                     double speed) {
    const double m = mass_of_velocity(ctx, m_c, speed);
    const double beta = speed / ctx.c_m();
    return m * std::sqrt(1.0 - beta * beta);
}

inline double invariant_mass_product(const InvariantSpeedContext& ctx, double m_c,
                                     const Velocity3& v) {
    return invariant_mass_product(ctx, m_c, v.speed());
}

/// 4-velocity U = gamma (c_m, v) in the real-metric representation.
/// Normalization U.U = c_m^2 for every |v| < c_m.
inline FourVector four_velocity(const InvariantSpeedContext& ctx, const Velocity3& v) {
    const double g = gamma_factor(ctx, v);
    return {g * ctx.c_m(), g * v.vx(), g * v.vy(), g * v.vz()};
}

/// 4-momentum: p = m_c gamma v, E = m_c gamma c_m^2.
inline FourMomentum four_momentum(const InvariantSpeedContext& ctx, double m_c,
                                  const Velocity3& v) {
    detail::require_nonnegative_mass(m_c);
    const double g = gamma_factor(ctx, v);
    return {m_c * g * ctx.c_m() * ctx.c_m(), m_c * g * v.vx(), m_c * g * v.vy(),
            m_c * g * v.vz()};
}

/// Mass-shell diagnostic |E^2 - p^2 c_m^2 - m_c^2 c_m^4| / max(E^2, 1).
inline double energy_momentum_residual(const InvariantSpeedContext& ctx,
                                       const FourMomentum& fm, double m_c) {
    const double cm2 = ctx.c_m() * ctx.c_m();
    const double p2 = fm.px * fm.px + fm.py * fm.py + fm.pz * fm.pz;
    const double shell = fm.E * fm.E - p2 * cm2 - m_c * m_c * cm2 * cm2;
    return std::abs(shell) / std::max(fm.E * fm.E, 1.0);
}

/// Mass-energy relation E = m(v) c_m^3 / sqrt(c_m^2 - c^2), written in terms
/// of the velocity-dependent mass.
inline double energy_from_mass(const InvariantSpeedContext& ctx, double m_v) {
    detail::require_nonnegative_mass(m_v);
    const double cm = ctx.c_m();
    return m_v * cm * cm * cm / std::sqrt(cm * cm - ctx.c() * ctx.c());
}

/// Characteristic mass of a photon of frequency nu moving at c:
///   m = h nu sqrt(1 - c^2/c_m^2) / c_m^2.
inline double photon_mass_at_c(const InvariantSpeedContext& ctx, double nu) {
    if (!(std::isfinite(nu) && nu > 0.0))
        throw InvalidArgument("InvalidArgument: photon frequency must be finite and > 0");
    const double cm = ctx.c_m();
    const double beta_c = ctx.c() / cm;
    return ctx.h() * nu * std::sqrt(1.0 - beta_c * beta_c) / (cm * cm);
}

/// A photon of base frequency nu (its frequency at speed c) travelling at
/// speed v in [c, c_m).
class PhotonSpec {
public:
    PhotonSpec(const InvariantSpeedContext& ctx, double nu, double v) : nu_(nu), v_(v) {
        if (!(std::isfinite(nu) && nu > 0.0))
            throw InvalidArgument("InvalidArgument: photon frequency must be finite and > 0");
        if (!(v >= ctx.c())) {
            std::ostringstream msg;
            msg << "SpeedBelowLight: photon speed v = " << v << " < c = " << ctx.c();
            throw SpeedBelowLight(msg.str());
        }
        detail::require_speed_below_cm(ctx, v);
    }

    double nu() const { return nu_; }
    double v() const { return v_; }

private:
    double nu_;
    double v_;
};

struct SuperluminalPhoton {
    double mass;
    double energy;
    double frequency;
};

/// Mass, energy and boosted frequency of a photon at speed v >= c:
///   m   = (h nu / c_m^3) (c_m^2 - c^2) / sqrt(c_m^2 - v^2)
///   E   = h nu sqrt((c_m^2 - c^2)/(c_m^2 - v^2)) = h nu'
///   nu' = nu sqrt((c_m^2 - c^2)/(c_m^2 - v^2)),   nu'(c) = nu exactly.
inline SuperluminalPhoton superluminal_photon(const InvariantSpeedContext& ctx,
                                              const PhotonSpec& spec) {
    const double cm = ctx.c_m();
    const double num = cm * cm - ctx.c() * ctx.c();
    const double den = cm * cm - spec.v() * spec.v();
    const double ratio = num / den;
    const double hnu = ctx.h() * spec.nu();
    const double frequency = spec.nu() * std::sqrt(ratio);
    const double energy = hnu * std::sqrt(ratio);
    const double mass = hnu / (cm * cm * cm) * num / std::sqrt(den);
    return {mass, energy, frequency};
}

} // namespace cmax
