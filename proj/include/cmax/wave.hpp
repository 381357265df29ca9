#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <utility>
#include <vector>

#include "cmax/core.hpp"
#include "cmax/fft.hpp"

namespace cmax {

using Complex = std::complex<double>;

/// Complex scalar field on a periodic 1D grid, together with its time
/// derivative. Both layers live at the same time t; second-order-in-time
/// evolution needs exactly this pair as initial data.
struct ScalarFieldGrid {
    std::vector<Complex> psi;
    std::vector<Complex> dpsi_dt;
    double dx = 0.0;
    double t = 0.0;

    std::size_t size() const { return psi.size(); }
    double length() const { return static_cast<double>(psi.size()) * dx; }
};

/// Two-component spinor field on a periodic 1D grid.
struct SpinorFieldGrid {
    std::vector<Complex> upper;
    std::vector<Complex> lower;
    double dx = 0.0;
    double t = 0.0;

    std::size_t size() const { return upper.size(); }
    double length() const { return static_cast<double>(upper.size()) * dx; }
};

struct SolverParams {
    double dt = 0.0;
    long n_steps = 0;
    double cfl_safety = 1.0;
};

namespace detail {

inline bool all_finite(const std::vector<Complex>& v) {
    for (const Complex& c : v)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

inline void require_grid_shape(std::size_t n, double dx) {
    if (n < 8) throw InvalidArgument("InvalidArgument: grid needs at least 8 points");
    if (!(dx > 0.0)) throw InvalidArgument("InvalidArgument: grid spacing must be > 0");
}

inline void require_params(const SolverParams& p) {
    if (!(p.dt > 0.0)) {
        std::ostringstream msg;
        msg << "NonPositiveStep: dt = " << p.dt << " must be > 0";
        throw NonPositiveStep(msg.str());
    }
    if (p.n_steps < 1) throw InvalidArgument("InvalidArgument: n_steps must be >= 1");
    if (!(p.cfl_safety > 0.0 && p.cfl_safety <= 1.0))
        throw InvalidArgument("InvalidArgument: cfl_safety must lie in (0, 1]");
}

/// Rest angular frequency m_c c_m^2 / hbar.
inline double mass_frequency(const InvariantSpeedContext& ctx, double m_c) {
    return m_c * ctx.c_m() * ctx.c_m() / ctx.hbar();
}

} // namespace detail

/// Dispersion relation of the scalar wave equation:
///   omega(k) = sqrt(c_m^2 k^2 + m_c^2 c_m^4 / hbar^2).
/// Equivalently E = hbar omega sits on the mass shell at p = hbar k.
inline double kg_dispersion(const InvariantSpeedContext& ctx, double m_c, double k) {
    const double mu = detail::mass_frequency(ctx, m_c);
    const double ck = ctx.c_m() * k;
    return std::sqrt(ck * ck + mu * mu);
}

inline ScalarFieldGrid make_scalar_grid(std::size_t n, double length) {
    detail::require_grid_shape(n, length / static_cast<double>(n));
    ScalarFieldGrid g;
    g.psi.assign(n, Complex{0.0, 0.0});
    g.dpsi_dt.assign(n, Complex{0.0, 0.0});
    g.dx = length / static_cast<double>(n);
    return g;
}

/// Single plane-wave mode k = 2 pi mode_index / length on the positive
/// dispersion branch: psi = A exp(ikx), dpsi/dt = -i omega psi.
inline ScalarFieldGrid make_kg_mode(const InvariantSpeedContext& ctx, double m_c,
                                    std::size_t n, double length, std::size_t mode_index,
                                    double amplitude = 1.0) {
    ScalarFieldGrid g = make_scalar_grid(n, length);
    const double k = 2.0 * M_PI * static_cast<double>(mode_index) / length;
    const double omega = kg_dispersion(ctx, m_c, k);
    for (std::size_t j = 0; j < n; ++j) {
        const double x = static_cast<double>(j) * g.dx;
        g.psi[j] = amplitude * std::polar(1.0, k * x);
        g.dpsi_dt[j] = Complex{0.0, -omega} * g.psi[j];
    }
    return g;
}

/// Projection of a grid field onto exp(ikx): sum_j f_j exp(-ik x_j) dx.
inline Complex spectral_amplitude(const std::vector<Complex>& field, double dx, double k) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < field.size(); ++j)
        acc += field[j] * std::polar(1.0, -k * static_cast<double>(j) * dx);
    return acc * dx;
}

/// Leapfrog integrator for the scalar wave equation with propagation speed
/// c_m and mass term (m_c c_m^2/hbar)^2:
///
///   psi^{n+1} = 2 psi^n - psi^{n-1} + dt^2 [ c_m^2 D2 psi^n - mu^2 psi^n ]
///
/// with the periodic three-point Laplacian D2. The first step is started
/// from (psi, dpsi_dt) by a second-order Taylor expansion.
///
/// The conserved discrete energy lives on the staggered layer pair:
///   E^{n+1/2} = dx/2 sum_j [ |(psi^{n+1}-psi^n)/dt|^2
///                          + c_m^2 Re(D+ psi^{n+1} conj(D+ psi^n))
///                          + mu^2 Re(psi^{n+1} conj(psi^n)) ]
/// and is constant to round-off across leapfrog steps, which is what
/// staggered_energy() reports.
class KgSolver {
public:
    KgSolver(const InvariantSpeedContext& ctx, const ScalarFieldGrid& initial, double m_c,
             double dt)
        : ctx_(ctx), dt_(dt), dx_(initial.dx), t0_(initial.t),
          mu_(detail::mass_frequency(ctx, m_c)), cur_(initial.psi),
          chi0_(initial.dpsi_dt) {
        detail::require_grid_shape(initial.size(), initial.dx);
        if (initial.dpsi_dt.size() != initial.psi.size())
            throw InvalidArgument("InvalidArgument: psi and dpsi_dt sizes differ");
        if (!(m_c >= 0.0))
            throw InvalidArgument("InvalidArgument: m_c must be >= 0");
        if (!(dt > 0.0)) {
            std::ostringstream msg;
            msg << "NonPositiveStep: dt = " << dt << " must be > 0";
            throw NonPositiveStep(msg.str());
        }
        if (!detail::all_finite(cur_) || !detail::all_finite(chi0_))
            throw NonFiniteField("NonFiniteField: initial data contains non-finite values");
        // full stability bound of the scheme, mass term included
        const double lambda = ctx.c_m() * dt / dx_;
        const double half_mass = 0.5 * mu_ * dt;
        if (lambda * lambda + half_mass * half_mass > 1.0) {
            std::ostringstream msg;
            msg << "CflViolation: (c_m*dt/dx)^2 + (mu*dt/2)^2 = "
                << lambda * lambda + half_mass * half_mass
                << " exceeds the leapfrog stability bound 1";
            throw CflViolation(msg.str());
        }
        prev_.assign(cur_.size(), Complex{0.0, 0.0});
        next_.assign(cur_.size(), Complex{0.0, 0.0});
        acc_.assign(cur_.size(), Complex{0.0, 0.0});
    }

    void step() {
        accel(cur_, acc_);
        const std::size_t n = cur_.size();
        if (steps_ == 0) {
            for (std::size_t j = 0; j < n; ++j)
                next_[j] = cur_[j] + dt_ * chi0_[j] + 0.5 * dt_ * dt_ * acc_[j];
        } else {
            for (std::size_t j = 0; j < n; ++j)
                next_[j] = 2.0 * cur_[j] - prev_[j] + dt_ * dt_ * acc_[j];
        }
        std::swap(prev_, cur_);
        std::swap(cur_, next_);
        ++steps_;
    }

    void run(long n) {
        for (long i = 0; i < n; ++i) step();
    }

    double time() const { return t0_ + static_cast<double>(steps_) * dt_; }
    long steps_taken() const { return steps_; }
    double dt() const { return dt_; }
    double dx() const { return dx_; }

    /// Field at the current time level.
    const std::vector<Complex>& field() const { return cur_; }

    /// Conserved discrete energy of the current staggered pair; defined once
    /// the first step has been taken.
    double staggered_energy() const {
        if (steps_ < 1)
            throw InvalidArgument(
                "InvalidArgument: staggered energy is defined after the first step");
        const std::size_t n = cur_.size();
        const double cm2 = ctx_.c_m() * ctx_.c_m();
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t jp = (j + 1 == n) ? 0 : j + 1;
            const Complex dtpsi = (cur_[j] - prev_[j]) / dt_;
            const Complex dxc = (cur_[jp] - cur_[j]) / dx_;
            const Complex dxp = (prev_[jp] - prev_[j]) / dx_;
            sum += std::norm(dtpsi);
            sum += cm2 * (dxc * std::conj(dxp)).real();
            sum += mu_ * mu_ * (cur_[j] * std::conj(prev_[j])).real();
        }
        return 0.5 * dx_ * sum;
    }

    /// Reconstruct (psi, dpsi_dt) at the current time. The derivative comes
    /// from a centered difference through a provisional next layer.
    ScalarFieldGrid snapshot() const {
        ScalarFieldGrid g;
        g.dx = dx_;
        g.t = time();
        g.psi = cur_;
        if (steps_ == 0) {
            g.dpsi_dt = chi0_;
            return g;
        }
        const std::size_t n = cur_.size();
        std::vector<Complex> acc(n);
        accel(cur_, acc);
        g.dpsi_dt.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            const Complex provisional = 2.0 * cur_[j] - prev_[j] + dt_ * dt_ * acc[j];
            g.dpsi_dt[j] = (provisional - prev_[j]) / (2.0 * dt_);
        }
        return g;
    }

private:
    void accel(const std::vector<Complex>& f, std::vector<Complex>& out) const {
        const std::size_t n = f.size();
        const double cm2 = ctx_.c_m() * ctx_.c_m();
        const double inv_dx2 = 1.0 / (dx_ * dx_);
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t jm = (j == 0) ? n - 1 : j - 1;
            const std::size_t jp = (j + 1 == n) ? 0 : j + 1;
            out[j] = cm2 * (f[jp] - 2.0 * f[j] + f[jm]) * inv_dx2 - mu_ * mu_ * f[j];
        }
    }

    InvariantSpeedContext ctx_;
    double dt_;
    double dx_;
    double t0_;
    double mu_;
    long steps_ = 0;
    std::vector<Complex> cur_;
    std::vector<Complex> chi0_;
    std::vector<Complex> prev_;
    std::vector<Complex> next_;
    std::vector<Complex> acc_;
};

/// Advance the scalar field by params.n_steps leapfrog steps. Enforces the
/// user's CFL margin c_m dt/dx <= cfl_safety on top of the hard stability
/// bound of the scheme.
inline ScalarFieldGrid evolve_kg(const InvariantSpeedContext& ctx,
                                 const ScalarFieldGrid& grid, double m_c,
                                 const SolverParams& params) {
    detail::require_params(params);
    const double lambda = ctx.c_m() * params.dt / grid.dx;
    if (lambda > params.cfl_safety) {
        std::ostringstream msg;
        msg << "CflViolation: c_m*dt/dx = " << lambda << " exceeds cfl_safety = "
            << params.cfl_safety;
        throw CflViolation(msg.str());
    }
    KgSolver solver(ctx, grid, m_c, params.dt);
    solver.run(params.n_steps);
    ScalarFieldGrid out = solver.snapshot();
    if (!detail::all_finite(out.psi) || !detail::all_finite(out.dpsi_dt))
        throw NonFiniteField("NonFiniteField: scalar field evolution blew up");
    return out;
}

/// Initialize mode k = 2 pi mode_index / length, evolve at CFL margin 0.5
/// for about one analytic period, and return the angular frequency measured
/// from the phase rotation rate of the mode's spectral amplitude.
inline double measure_dispersion(const InvariantSpeedContext& ctx, double m_c,
                                 std::size_t n, double length, std::size_t mode_index) {
    if (mode_index > n / 4)
        throw InvalidArgument("InvalidArgument: mode_index must be <= n/4");
    ScalarFieldGrid grid = make_kg_mode(ctx, m_c, n, length, mode_index);
    const double k = 2.0 * M_PI * static_cast<double>(mode_index) / length;
    const double omega0 = kg_dispersion(ctx, m_c, k);
    const double dt = 0.5 * grid.dx / ctx.c_m();
    long steps = 64;
    if (omega0 > 0.0)
        steps = std::max<long>(64, static_cast<long>(std::ceil(2.0 * M_PI / omega0 / dt)));

    KgSolver solver(ctx, grid, m_c, dt);
    Complex prev_amp = spectral_amplitude(solver.field(), grid.dx, k);
    double phase = 0.0;
    for (long i = 0; i < steps; ++i) {
        solver.step();
        const Complex amp = spectral_amplitude(solver.field(), grid.dx, k);
        phase += std::arg(prev_amp * std::conj(amp));
        prev_amp = amp;
    }
    return phase / (static_cast<double>(steps) * dt);
}

inline SpinorFieldGrid make_spinor_grid(std::size_t n, double length) {
    detail::require_grid_shape(n, length / static_cast<double>(n));
    SpinorFieldGrid g;
    g.upper.assign(n, Complex{0.0, 0.0});
    g.lower.assign(n, Complex{0.0, 0.0});
    g.dx = length / static_cast<double>(n);
    return g;
}

/// Positive-energy plane-wave eigenspinor at k = 2 pi mode_index / length.
/// In the 1+1D representation (alpha = sigma_x, beta = sigma_z) the spatial
/// symbol is H/hbar = c_m k sigma_x + mu sigma_z, whose +omega eigenvector
/// is proportional to (mu + omega, c_m k).
inline SpinorFieldGrid make_dirac_mode(const InvariantSpeedContext& ctx, double m_c,
                                       std::size_t n, double length, std::size_t mode_index,
                                       double amplitude = 1.0) {
    SpinorFieldGrid g = make_spinor_grid(n, length);
    const double k = 2.0 * M_PI * static_cast<double>(mode_index) / length;
    const double mu = detail::mass_frequency(ctx, m_c);
    const double omega = kg_dispersion(ctx, m_c, k);
    double u0 = mu + omega;
    double u1 = ctx.c_m() * k;
    const double nrm = std::sqrt(u0 * u0 + u1 * u1);
    if (nrm == 0.0) { // massless k = 0: any spinor is stationary
        u0 = 1.0;
        u1 = 0.0;
    } else {
        u0 /= nrm;
        u1 /= nrm;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const Complex phase = std::polar(amplitude, k * static_cast<double>(j) * g.dx);
        g.upper[j] = u0 * phase;
        g.lower[j] = u1 * phase;
    }
    return g;
}

/// Total norm of the spinor field, sum_j (|upper|^2 + |lower|^2) dx.
inline double spinor_norm(const SpinorFieldGrid& g) {
    double sum = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j)
        sum += std::norm(g.upper[j]) + std::norm(g.lower[j]);
    return sum * g.dx;
}

/// Largest angular frequency supported by the grid, sqrt((c_m k_max)^2 + mu^2)
/// with k_max = pi/dx. Governs the explicit time-step bound.
inline double dirac_max_frequency(const InvariantSpeedContext& ctx, double m_c, double dx) {
    const double mu = detail::mass_frequency(ctx, m_c);
    const double ck = ctx.c_m() * M_PI / dx;
    return std::sqrt(ck * ck + mu * mu);
}

namespace detail {

/// dpsi/dt = -c_m alpha d/dx psi - i mu beta psi, with alpha = sigma_x and
/// beta = sigma_z; the derivative is spectral on the periodic grid.
inline void dirac_rhs(const InvariantSpeedContext& ctx, double mu, double length,
                      const std::vector<Complex>& upper, const std::vector<Complex>& lower,
                      std::vector<Complex>& dupper, std::vector<Complex>& dlower) {
    const std::vector<Complex> dx_lower = fft::spectral_derivative(lower, length);
    const std::vector<Complex> dx_upper = fft::spectral_derivative(upper, length);
    const double cm = ctx.c_m();
    const Complex imu{0.0, mu};
    dupper.resize(upper.size());
    dlower.resize(upper.size());
    for (std::size_t j = 0; j < upper.size(); ++j) {
        dupper[j] = -cm * dx_lower[j] - imu * upper[j];
        dlower[j] = -cm * dx_upper[j] + imu * lower[j];
    }
}

} // namespace detail

/// Right-hand side of the first-order spinor wave equation: returns dpsi/dt
/// for the given field.
inline SpinorFieldGrid dirac_apply(const InvariantSpeedContext& ctx,
                                   const SpinorFieldGrid& grid, double m_c) {
    detail::require_grid_shape(grid.size(), grid.dx);
    if (grid.lower.size() != grid.upper.size())
        throw InvalidArgument("InvalidArgument: spinor component sizes differ");
    if (!detail::all_finite(grid.upper) || !detail::all_finite(grid.lower))
        throw NonFiniteField("NonFiniteField: spinor field contains non-finite values");
    SpinorFieldGrid out;
    out.dx = grid.dx;
    out.t = grid.t;
    detail::dirac_rhs(ctx, detail::mass_frequency(ctx, m_c), grid.length(), grid.upper,
                      grid.lower, out.upper, out.lower);
    return out;
}

/// Method-of-lines integrator: classical 4th-order stepping on dirac_apply
/// with the spectral spatial derivative. Requires dt * omega_max <= 1.
class DiracSolver {
public:
    DiracSolver(const InvariantSpeedContext& ctx, const SpinorFieldGrid& initial, double m_c,
                double dt)
        : ctx_(ctx), dt_(dt), dx_(initial.dx), t0_(initial.t),
          mu_(detail::mass_frequency(ctx, m_c)), length_(initial.length()),
          upper_(initial.upper), lower_(initial.lower) {
        detail::require_grid_shape(initial.size(), initial.dx);
        if (initial.lower.size() != initial.upper.size())
            throw InvalidArgument("InvalidArgument: spinor component sizes differ");
        if (!(m_c >= 0.0))
            throw InvalidArgument("InvalidArgument: m_c must be >= 0");
        if (!(dt > 0.0)) {
            std::ostringstream msg;
            msg << "NonPositiveStep: dt = " << dt << " must be > 0";
            throw NonPositiveStep(msg.str());
        }
        if (!detail::all_finite(upper_) || !detail::all_finite(lower_))
            throw NonFiniteField("NonFiniteField: initial data contains non-finite values");
        const double omega_max = dirac_max_frequency(ctx, m_c, dx_);
        if (dt * omega_max > 1.0) {
            std::ostringstream msg;
            msg << "StabilityViolation: dt*omega_max = " << dt * omega_max
                << " exceeds the bound 1 (omega_max = " << omega_max << ")";
            throw StabilityViolation(msg.str());
        }
    }

    void step() {
        const std::size_t n = upper_.size();
        detail::dirac_rhs(ctx_, mu_, length_, upper_, lower_, k1u_, k1l_);
        stage(upper_, lower_, k1u_, k1l_, 0.5 * dt_);
        detail::dirac_rhs(ctx_, mu_, length_, su_, sl_, k2u_, k2l_);
        stage(upper_, lower_, k2u_, k2l_, 0.5 * dt_);
        detail::dirac_rhs(ctx_, mu_, length_, su_, sl_, k3u_, k3l_);
        stage(upper_, lower_, k3u_, k3l_, dt_);
        detail::dirac_rhs(ctx_, mu_, length_, su_, sl_, k4u_, k4l_);
        const double w = dt_ / 6.0;
        for (std::size_t j = 0; j < n; ++j) {
            upper_[j] += w * (k1u_[j] + 2.0 * k2u_[j] + 2.0 * k3u_[j] + k4u_[j]);
            lower_[j] += w * (k1l_[j] + 2.0 * k2l_[j] + 2.0 * k3l_[j] + k4l_[j]);
        }
        ++steps_;
    }

    void run(long n) {
        for (long i = 0; i < n; ++i) step();
    }

    double time() const { return t0_ + static_cast<double>(steps_) * dt_; }
    long steps_taken() const { return steps_; }
    const std::vector<Complex>& upper() const { return upper_; }
    const std::vector<Complex>& lower() const { return lower_; }

    SpinorFieldGrid snapshot() const {
        SpinorFieldGrid g;
        g.upper = upper_;
        g.lower = lower_;
        g.dx = dx_;
        g.t = time();
        return g;
    }

private:
    void stage(const std::vector<Complex>& u, const std::vector<Complex>& l,
               const std::vector<Complex>& du, const std::vector<Complex>& dl, double h) {
        su_.resize(u.size());
        sl_.resize(u.size());
        for (std::size_t j = 0; j < u.size(); ++j) {
            su_[j] = u[j] + h * du[j];
            sl_[j] = l[j] + h * dl[j];
        }
    }

    InvariantSpeedContext ctx_;
    double dt_;
    double dx_;
    double t0_;
    double mu_;
    double length_;
    long steps_ = 0;
    std::vector<Complex> upper_, lower_;
    std::vector<Complex> su_, sl_;
    std::vector<Complex> k1u_, k1l_, k2u_, k2l_, k3u_, k3l_, k4u_, k4l_;
};

/// Advance the spinor field by params.n_steps. params.cfl_safety is a KG
/// concept and is ignored here; the binding constraint is dt * omega_max <= 1.
inline SpinorFieldGrid evolve_dirac(const InvariantSpeedContext& ctx,
                                    const SpinorFieldGrid& grid, double m_c,
                                    const SolverParams& params) {
    detail::require_params(params);
    DiracSolver solver(ctx, grid, m_c, params.dt);
    solver.run(params.n_steps);
    SpinorFieldGrid out = solver.snapshot();
    if (!detail::all_finite(out.upper) || !detail::all_finite(out.lower))
        throw NonFiniteField("NonFiniteField: spinor field evolution blew up");
    return out;
}

} // namespace cmax
