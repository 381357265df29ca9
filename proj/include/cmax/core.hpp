#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "cmax/errors.hpp"
#include "cmax/vec3.hpp"

namespace cmax {

/// Relative tolerance used to decide whether a speed sits on the light-speed
/// boundary. Chosen at the double-precision round-off scale.
inline constexpr double default_luminal_tol = 1e-12;

/// Bundle of physical constants fixing the unit system: light speed c, the
/// invariant maximum speed c_m, and the reduced Planck constant.
///
/// Every formula in the library reads its constants from a context instance;
/// there are no global constants. Immutable after construction and safe to
/// share across threads.
class InvariantSpeedContext {
public:
    InvariantSpeedContext(double c, double c_m, double hbar)
        : c_(c), c_m_(c_m), hbar_(hbar) {
        if (!(std::isfinite(c) && c > 0.0))
            throw NonPositiveConstant("NonPositiveConstant: c must be finite and positive");
        if (!(std::isfinite(hbar) && hbar > 0.0))
            throw NonPositiveConstant("NonPositiveConstant: hbar must be finite and positive");
        if (!(std::isfinite(c_m) && c_m > 0.0))
            throw NonPositiveConstant("NonPositiveConstant: c_m must be finite and positive");
        if (!(c_m > c)) {
            std::ostringstream msg;
            msg << "MaxSpeedNotAboveLightSpeed: c_m = " << c_m
                << " must exceed c = " << c << " strictly";
            throw MaxSpeedNotAboveLightSpeed(msg.str());
        }
    }

    double c() const { return c_; }
    double c_m() const { return c_m_; }
    double hbar() const { return hbar_; }

    /// Planck constant h = 2*pi*hbar. Photon formulas are written in terms
    /// of h; the context keeps hbar as the single source of truth.
    double h() const { return 2.0 * M_PI * hbar_; }

private:
    double c_;
    double c_m_;
    double hbar_;
};

inline InvariantSpeedContext make_context(double c, double c_m, double hbar) {
    return InvariantSpeedContext(c, c_m, hbar);
}

/// Classification of a speed relative to (c, c_m).
enum class RegimeTag { Subluminal, Luminal, Superluminal };

inline const char* to_string(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::Subluminal: return "subluminal";
        case RegimeTag::Luminal: return "luminal";
        case RegimeTag::Superluminal: return "superluminal";
    }
    return "unknown";
}

/// Classify a non-negative speed. The three outcomes partition [0, c_m):
/// luminal within a band of half-width tol*c around c, subluminal below,
/// superluminal above.
inline RegimeTag classify_regime(const InvariantSpeedContext& ctx, double speed,
                                 double tol = default_luminal_tol) {
    const double s = std::abs(speed);
    if (!(s < ctx.c_m())) {
        std::ostringstream msg;
        msg << "SpeedExceedsMaximum: |v| = " << s << " >= c_m = " << ctx.c_m();
        throw SpeedExceedsMaximum(msg.str());
    }
    if (std::abs(s - ctx.c()) <= tol * ctx.c()) return RegimeTag::Luminal;
    return s < ctx.c() ? RegimeTag::Subluminal : RegimeTag::Superluminal;
}

/// A 3-velocity validated against the context: |v| < c_m strictly.
class Velocity3 {
public:
    Velocity3(const InvariantSpeedContext& ctx, double vx, double vy, double vz)
        : v_{vx, vy, vz} {
        const double s = norm(v_);
        if (!(s < ctx.c_m())) {
            std::ostringstream msg;
            msg << "SpeedExceedsMaximum: |v| = " << s << " >= c_m = " << ctx.c_m();
            throw SpeedExceedsMaximum(msg.str());
        }
    }

    Velocity3(const InvariantSpeedContext& ctx, const Vec3& v)
        : Velocity3(ctx, v.x, v.y, v.z) {}

    double vx() const { return v_.x; }
    double vy() const { return v_.y; }
    double vz() const { return v_.z; }
    const Vec3& vec() const { return v_; }
    double speed() const { return norm(v_); }

private:
    Vec3 v_;
};

inline RegimeTag classify_regime(const InvariantSpeedContext& ctx, const Velocity3& v,
                                 double tol = default_luminal_tol) {
    return classify_regime(ctx, v.speed(), tol);
}

/// Space-time event or momentum 4-vector with real components and metric
/// signature (+,-,-,-). For events the time slot stores c_m*t; for momenta
/// it stores E/c_m.
struct FourVector {
    double t_component = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline double minkowski_square(const FourVector& a) {
    return a.t_component * a.t_component - a.x * a.x - a.y * a.y - a.z * a.z;
}

/// Build an event 4-vector from coordinate time and position.
inline FourVector make_event(const InvariantSpeedContext& ctx, double t, double x,
                             double y, double z) {
    return {ctx.c_m() * t, x, y, z};
}

inline double event_time(const InvariantSpeedContext& ctx, const FourVector& e) {
    return e.t_component / ctx.c_m();
}

/// A point particle: characteristic mass m_c (the mass at speed c), position,
/// validated velocity, and the regime the speed falls into.
struct ParticleState {
    double m_c;
    Vec3 position;
    Velocity3 velocity;
    RegimeTag regime;
};

inline ParticleState make_particle_state(const InvariantSpeedContext& ctx, double m_c,
                                         const Vec3& position, const Velocity3& velocity,
                                         double tol = default_luminal_tol) {
    if (!(std::isfinite(m_c) && m_c >= 0.0))
        throw InvalidArgument("InvalidArgument: characteristic mass must be finite and >= 0");
    return ParticleState{m_c, position, velocity, classify_regime(ctx, velocity, tol)};
}

} // namespace cmax
