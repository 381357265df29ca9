#pragma once

#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

#include "cmax/core.hpp"
#include "cmax/kinematics.hpp"
#include "cmax/xform.hpp"

namespace cmax {

/// Ordinary force F(t, state). Must return finite components for every state
/// the integrator visits.
using ForceLaw = std::function<Vec3(double t, const ParticleState& state)>;

/// Covariant force: spatial part K = gamma F and fourth component
/// K4 = v.K / c_m (the power term divided by c_m).
struct FourForce {
    Vec3 K;
    double K4;
};

inline FourForce four_force(const InvariantSpeedContext& ctx, const Vec3& F,
                            const Velocity3& v) {
    const double g = gamma_factor(ctx, v);
    const Vec3 K = g * F;
    return {K, dot(v.vec(), K) / ctx.c_m()};
}

/// Invert p = m_c gamma v:  v = p / sqrt(m_c^2 + p^2/c_m^2).
/// |v| < c_m for every finite p when m_c > 0.
inline Vec3 velocity_from_momentum(const InvariantSpeedContext& ctx, double m_c,
                                   const Vec3& p) {
    const double cm = ctx.c_m();
    return (1.0 / std::sqrt(m_c * m_c + norm_squared(p) / (cm * cm))) * p;
}

inline Vec3 momentum_from_velocity(const InvariantSpeedContext& ctx, double m_c,
                                   const Velocity3& v) {
    return (m_c * gamma_factor(ctx, v)) * v.vec();
}

/// E(p) = c_m sqrt(m_c^2 c_m^2 + p^2), the mass-shell energy.
inline double energy_from_momentum(const InvariantSpeedContext& ctx, double m_c,
                                   const Vec3& p) {
    const double cm = ctx.c_m();
    return cm * std::sqrt(m_c * m_c * cm * cm + norm_squared(p));
}

enum class Integrator { ClassicRk4 };

inline const char* to_string(Integrator i) {
    switch (i) {
        case Integrator::ClassicRk4: return "rk4";
    }
    return "unknown";
}

struct TrajectorySample {
    double t;
    Vec3 position;
    Vec3 velocity;
    Vec3 momentum;
    double energy;
};

/// Time series produced by simulate_trajectory. Strictly increasing t,
/// |v| < c_m at every sample, energy on the mass shell of the momentum.
struct TrajectoryRecord {
    std::vector<TrajectorySample> samples;
    double dt = 0.0;
    Integrator integrator = Integrator::ClassicRk4;
};

namespace detail {

struct PhaseDeriv {
    Vec3 dx;
    Vec3 dp;
};

inline PhaseDeriv phase_derivative(const InvariantSpeedContext& ctx, const ForceLaw& law,
                                   double m_c, double t, const Vec3& x, const Vec3& p) {
    const Vec3 v = velocity_from_momentum(ctx, m_c, p);
    const ParticleState s = make_particle_state(ctx, m_c, x, Velocity3(ctx, v));
    const Vec3 F = law(t, s);
    if (!is_finite(F)) {
        std::ostringstream msg;
        msg << "ForceLawNonFinite: force law returned non-finite components at t = " << t;
        throw ForceLawNonFinite(msg.str());
    }
    return {v, F};
}

/// One classical 4th-order step of dx/dt = v(p), dp/dt = F.
inline void rk4_step(const InvariantSpeedContext& ctx, const ForceLaw& law, double m_c,
                     double t, double dt, Vec3& x, Vec3& p) {
    const PhaseDeriv k1 = phase_derivative(ctx, law, m_c, t, x, p);
    const PhaseDeriv k2 = phase_derivative(ctx, law, m_c, t + 0.5 * dt,
                                           x + 0.5 * dt * k1.dx, p + 0.5 * dt * k1.dp);
    const PhaseDeriv k3 = phase_derivative(ctx, law, m_c, t + 0.5 * dt,
                                           x + 0.5 * dt * k2.dx, p + 0.5 * dt * k2.dp);
    const PhaseDeriv k4 =
        phase_derivative(ctx, law, m_c, t + dt, x + dt * k3.dx, p + dt * k3.dp);
    x = x + (dt / 6.0) * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
    p = p + (dt / 6.0) * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp);
}

inline void require_dynamics_args(double m_c, double dt) {
    if (!(dt > 0.0)) {
        std::ostringstream msg;
        msg << "NonPositiveStep: dt = " << dt << " must be > 0";
        throw NonPositiveStep(msg.str());
    }
    if (!(m_c > 0.0))
        throw InvalidArgument("InvalidArgument: dynamics integration requires m_c > 0");
}

} // namespace detail

/// Advance one step of dp/dt = F, dx/dt = v(p). The state variable is the
/// momentum: p-space is unconstrained, and v(p) keeps |v| < c_m for any
/// finite momentum.
inline ParticleState step_state(const InvariantSpeedContext& ctx, const ForceLaw& law,
                                const ParticleState& state, double dt, double t_now = 0.0) {
    detail::require_dynamics_args(state.m_c, dt);
    Vec3 x = state.position;
    Vec3 p = momentum_from_velocity(ctx, state.m_c, state.velocity);
    detail::rk4_step(ctx, law, state.m_c, t_now, dt, x, p);
    const Vec3 v = velocity_from_momentum(ctx, state.m_c, p);
    return make_particle_state(ctx, state.m_c, x, Velocity3(ctx, v));
}

/// Integrate n_steps from t = 0 and record every sample (n_steps + 1 rows).
inline TrajectoryRecord simulate_trajectory(const InvariantSpeedContext& ctx,
                                            const ForceLaw& law, const ParticleState& initial,
                                            double dt, long n_steps) {
    detail::require_dynamics_args(initial.m_c, dt);
    if (n_steps < 1)
        throw InvalidArgument("InvalidArgument: n_steps must be >= 1");

    TrajectoryRecord record;
    record.dt = dt;
    record.integrator = Integrator::ClassicRk4;
    record.samples.reserve(static_cast<std::size_t>(n_steps) + 1);

    Vec3 x = initial.position;
    Vec3 p = momentum_from_velocity(ctx, initial.m_c, initial.velocity);
    const double m_c = initial.m_c;

    auto push = [&](double t) {
        record.samples.push_back({t, x, velocity_from_momentum(ctx, m_c, p), p,
                                  energy_from_momentum(ctx, m_c, p)});
    };
    push(0.0);
    for (long i = 0; i < n_steps; ++i) {
        detail::rk4_step(ctx, law, m_c, static_cast<double>(i) * dt, dt, x, p);
        push(static_cast<double>(i + 1) * dt);
    }
    return record;
}

namespace detail {

inline ParticleState sample_state(const InvariantSpeedContext& ctx, double m_c,
                                  const TrajectorySample& s) {
    return make_particle_state(ctx, m_c, s.position, Velocity3(ctx, s.velocity));
}

inline double sample_power(const InvariantSpeedContext& ctx, const ForceLaw& law, double m_c,
                           const TrajectorySample& s) {
    const Vec3 F = law(s.t, sample_state(ctx, m_c, s));
    return dot(F, s.velocity);
}

} // namespace detail

/// Work integral along the recorded trajectory via composite Simpson
/// quadrature of F.v (3/8 rule on a trailing odd segment).
inline double work_integral(const InvariantSpeedContext& ctx, const ForceLaw& law,
                            double m_c, const TrajectoryRecord& record) {
    const auto& s = record.samples;
    if (s.size() < 2)
        throw TooFewSamples("TooFewSamples: work integral needs at least 2 samples");
    std::vector<double> power(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        power[i] = detail::sample_power(ctx, law, m_c, s[i]);

    const double h = record.dt;
    const std::size_t n = s.size() - 1; // interval count
    if (n == 1) return 0.5 * h * (power[0] + power[1]);

    double W = 0.0;
    const std::size_t even_part = (n % 2 == 0) ? n : n - 3; // Simpson covers [0, even_part]
    for (std::size_t i = 0; i + 2 <= even_part; i += 2)
        W += h / 3.0 * (power[i] + 4.0 * power[i + 1] + power[i + 2]);
    if (n % 2 != 0) {
        const std::size_t j = n - 3;
        W += 3.0 * h / 8.0 * (power[j] + 3.0 * power[j + 1] + 3.0 * power[j + 2] + power[n]);
    }
    return W;
}

/// |Delta E - integral of F.v dt| / max(|Delta E|, tiny). Fourth-order small
/// for trajectories produced by simulate_trajectory.
inline double work_energy_residual(const InvariantSpeedContext& ctx, const ForceLaw& law,
                                   double m_c, const TrajectoryRecord& record) {
    const auto& s = record.samples;
    if (s.size() < 2)
        throw TooFewSamples("TooFewSamples: residual needs at least 2 samples");
    const double dE = s.back().energy - s.front().energy;
    const double W = work_integral(ctx, law, m_c, record);
    return std::abs(dE - W) / std::max(std::abs(dE), 1e-300);
}

/// Max over interior samples of |dE/dt - F.v| with dE/dt by central
/// difference, normalized by the largest interior |dE/dt|.
inline double power_residual(const InvariantSpeedContext& ctx, const TrajectoryRecord& record,
                             const ForceLaw& law, double m_c) {
    const auto& s = record.samples;
    if (s.size() < 3)
        throw TooFewSamples("TooFewSamples: power residual needs at least 3 samples");
    double worst = 0.0;
    double scale = 0.0;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        const double dEdt = (s[i + 1].energy - s[i - 1].energy) / (2.0 * record.dt);
        const double P = detail::sample_power(ctx, law, m_c, s[i]);
        worst = std::max(worst, std::abs(dEdt - P));
        scale = std::max(scale, std::abs(dEdt));
    }
    return worst / std::max(scale, 1e-300);
}

} // namespace cmax
