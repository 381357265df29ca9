#pragma once

#include <cmath>
#include <limits>
#include <sstream>

#include "cmax/core.hpp"

namespace cmax {

/// Relative velocity of the primed frame along the shared x/x' axis,
/// validated to |v_rel| < c_m. Boosts along other axes are not supported.
class BoostParameter {
public:
    BoostParameter(const InvariantSpeedContext& ctx, double v_rel) : v_rel_(v_rel) {
        if (!(std::abs(v_rel) < ctx.c_m())) {
            std::ostringstream msg;
            msg << "BoostAtMaximumSpeed: |v_rel| = " << std::abs(v_rel)
                << " >= c_m = " << ctx.c_m() << " (gamma diverges)";
            throw BoostAtMaximumSpeed(msg.str());
        }
    }

    double v_rel() const { return v_rel_; }

private:
    double v_rel_;
};

/// gamma(v) = 1/sqrt(1 - v^2/c_m^2) for a raw speed.
inline double gamma_factor(const InvariantSpeedContext& ctx, double speed) {
    const double s = std::abs(speed);
    if (!(s < ctx.c_m())) {
        std::ostringstream msg;
        msg << "SpeedExceedsMaximum: |v| = " << s << " >= c_m = " << ctx.c_m();
        throw SpeedExceedsMaximum(msg.str());
    }
    const double beta = s / ctx.c_m();
    return 1.0 / std::sqrt(1.0 - beta * beta);
}

inline double gamma_factor(const InvariantSpeedContext& ctx, const Velocity3& v) {
    return gamma_factor(ctx, v.speed());
}

/// Map an event from the primed frame to the unprimed frame. The boost is
/// along x with c_m as the invariant speed:
///   x = gamma (x' + v t'),  t = gamma (t' + v x'/c_m^2),  y and z unchanged.
inline FourVector boost_event(const InvariantSpeedContext& ctx, const BoostParameter& b,
                              const FourVector& event_primed) {
    const double beta = b.v_rel() / ctx.c_m();
    const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
    return {gamma * (event_primed.t_component + beta * event_primed.x),
            gamma * (event_primed.x + beta * event_primed.t_component),
            event_primed.y, event_primed.z};
}

/// Inverse map: unprimed frame back to the primed frame (boost with -v_rel).
inline FourVector inverse_boost_event(const InvariantSpeedContext& ctx,
                                      const BoostParameter& b, const FourVector& event) {
    return boost_event(ctx, BoostParameter(ctx, -b.v_rel()), event);
}

/// Velocity composition: a particle moving at u' in the primed frame moves at
///   u_x = (u'_x + v) / D,  u_y = u'_y sqrt(1 - v^2/c_m^2) / D,  D = 1 + v u'_x / c_m^2
/// in the unprimed frame (u_z as u_y). Accepts raw components so the fixed
/// point |u'| = c_m and the light-speed cases are expressible; anything
/// beyond c_m is rejected.
inline Vec3 compose_velocity(const InvariantSpeedContext& ctx, const BoostParameter& b,
                             const Vec3& u_primed) {
    const double cm = ctx.c_m();
    const double s = norm(u_primed);
    // allow |u'| == c_m up to a few ulps so that the exact fixed point passes
    if (!(s <= cm * (1.0 + 8.0 * std::numeric_limits<double>::epsilon()))) {
        std::ostringstream msg;
        msg << "SpeedExceedsMaximum: |u'| = " << s << " > c_m = " << cm;
        throw SpeedExceedsMaximum(msg.str());
    }
    const double v = b.v_rel();
    const double denom = 1.0 + v * u_primed.x / (cm * cm);
    if (denom == 0.0)
        throw CompositionSingularity(
            "CompositionSingularity: 1 + v*u'_x/c_m^2 vanished");
    const double beta = v / cm;
    const double root = std::sqrt(1.0 - beta * beta);
    return {(u_primed.x + v) / denom, u_primed.y * root / denom, u_primed.z * root / denom};
}

/// Composition with the relative velocity negated; right-inverse of
/// compose_velocity where both are defined.
inline Vec3 inverse_compose_velocity(const InvariantSpeedContext& ctx,
                                     const BoostParameter& b, const Vec3& u) {
    return compose_velocity(ctx, BoostParameter(ctx, -b.v_rel()), u);
}

/// Invariant interval between two events:
///   ds^2 = c_m^2 dt^2 - dx^2 - dy^2 - dz^2.
/// Events store c_m*t in the time slot, so this needs no context constants;
/// the parameter documents the convention.
inline double interval_squared([[maybe_unused]] const InvariantSpeedContext& ctx,
                               const FourVector& a, const FourVector& b) {
    const double dt = a.t_component - b.t_component;
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return dt * dt - dx * dx - dy * dy - dz * dz;
}

/// Proper time dtau = sqrt(ds^2)/c_m. Negative ds^2 has no real proper time
/// here: event pairs not connected by a sub-c_m worldline are rejected.
inline double proper_time(const InvariantSpeedContext& ctx, double ds_squared) {
    if (ds_squared < 0.0) {
        std::ostringstream msg;
        msg << "ImaginaryProperTime: ds^2 = " << ds_squared << " < 0";
        throw ImaginaryProperTime(msg.str());
    }
    return std::sqrt(ds_squared) / ctx.c_m();
}

/// Residual of the gamma-composition identity
///   1 + u'_x v / c_m^2 = gamma(u) / (gamma(u') gamma(v))
/// for collinear composition; zero for all valid speeds.
inline double gamma_composition_residual(const InvariantSpeedContext& ctx, double v_rel,
                                         double u_primed_x) {
    const BoostParameter b(ctx, v_rel);
    const double cm = ctx.c_m();
    if (!(std::abs(u_primed_x) < cm)) {
        std::ostringstream msg;
        msg << "SpeedExceedsMaximum: |u'_x| = " << std::abs(u_primed_x)
            << " >= c_m = " << cm;
        throw SpeedExceedsMaximum(msg.str());
    }
    const Vec3 u = compose_velocity(ctx, b, Vec3{u_primed_x, 0.0, 0.0});
    const double lhs = 1.0 + u_primed_x * v_rel / (cm * cm);
    const double rhs = std::sqrt(1.0 - (u_primed_x / cm) * (u_primed_x / cm)) *
                       std::sqrt(1.0 - (v_rel / cm) * (v_rel / cm)) /
                       std::sqrt(1.0 - (u.x / cm) * (u.x / cm));
    return std::abs(lhs - rhs);
}

} // namespace cmax
