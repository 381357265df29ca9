// Command-line front end: generalized boosts, velocity composition, collision
// reports, trajectory integration and the 1D wave solvers, with CSV/JSONL
// output suitable for plotting. All numbers are printed with 17 significant
// digits so output files round-trip to the exact doubles.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cmax/cmax.hpp"

namespace {

using namespace cmax;

struct CommonOpts {
    double c = 1.0;
    double cm = 0.0;
    double hbar = 1.0;
    std::string output;
    std::string format = "csv";
    unsigned long long seed = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_format) {
    cmd->add_option("--c", o.c, "light speed c")->capture_default_str();
    cmd->add_option("--cm", o.cm, "invariant maximum speed c_m (must exceed c)")->required();
    cmd->add_option("--hbar", o.hbar, "reduced Planck constant")->capture_default_str();
    cmd->add_option("-o,--output", o.output, "output file (default: stdout)");
    if (with_format)
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"csv", "jsonl"}))
            ->capture_default_str();
    cmd->add_option("--seed", o.seed, "random seed for generated sweeps")
        ->capture_default_str();
}

InvariantSpeedContext context_of(const CommonOpts& o) {
    return make_context(o.c, o.cm, o.hbar);
}

/// Validation is complete before anything is written: compute into a string,
/// then emit in one go.
int write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return 1;
    }
    f << text;
    return f ? 0 : 1;
}

std::vector<double> parse_components(const std::string& s, std::size_t lo, std::size_t hi) {
    std::vector<double> out;
    for (const std::string& cell : split_csv_line(s)) out.push_back(parse_double(cell));
    if (out.size() < lo || out.size() > hi)
        throw InvalidArgument("InvalidArgument: expected " + std::to_string(lo) +
                              (hi != lo ? ".." + std::to_string(hi) : "") +
                              " comma-separated numbers in '" + s + "'");
    return out;
}

Vec3 parse_vec3(const std::string& s) {
    const auto v = parse_components(s, 3, 3);
    return {v[0], v[1], v[2]};
}

double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// ---------------------------------------------------------------------------
// boost
// ---------------------------------------------------------------------------

struct BoostOpts {
    CommonOpts common;
    double v = 0.0;
    std::vector<std::string> events;
    std::string events_csv;
    bool inverse = false;
};

int run_boost(const BoostOpts& o) {
    const auto ctx = context_of(o.common);
    const BoostParameter b(ctx, o.v);

    std::vector<FourVector> events;
    for (const std::string& e : o.events) {
        const auto c = parse_components(e, 4, 4); // x,y,z,t
        events.push_back(make_event(ctx, c[3], c[0], c[1], c[2]));
    }
    if (!o.events_csv.empty()) {
        std::ifstream f(o.events_csv);
        if (!f) {
            std::cerr << "error: cannot open events file '" << o.events_csv << "'\n";
            return 1;
        }
        const NumericTable table = read_numeric_csv(f);
        if (table.header != std::vector<std::string>{"x", "y", "z", "t"})
            throw InvalidArgument("InvalidArgument: events CSV must have header x,y,z,t");
        for (const auto& row : table.rows)
            events.push_back(make_event(ctx, row[3], row[0], row[1], row[2]));
    }
    if (events.empty())
        throw InvalidArgument("InvalidArgument: no events given (use --event or --events-csv)");

    std::ostringstream out;
    if (o.common.format == "csv") out << "x,y,z,t\n";
    for (const FourVector& e : events) {
        const FourVector r = o.inverse ? inverse_boost_event(ctx, b, e) : boost_event(ctx, b, e);
        const double t = event_time(ctx, r);
        if (o.common.format == "csv") {
            out << fmt17(r.x) << ',' << fmt17(r.y) << ',' << fmt17(r.z) << ',' << fmt17(t)
                << '\n';
        } else {
            out << JsonObject{}
                       .number("x", r.x)
                       .number("y", r.y)
                       .number("z", r.z)
                       .number("t", t)
                       .str()
                << '\n';
        }
    }
    return write_out(o.common.output, out.str());
}

// ---------------------------------------------------------------------------
// compose
// ---------------------------------------------------------------------------

struct ComposeOpts {
    CommonOpts common;
    double v = 0.0;
    std::string u;
    bool inverse = false;
    bool light_frame_check = false;
};

int run_compose(const ComposeOpts& o) {
    const auto ctx = context_of(o.common);
    std::ostringstream out;

    if (o.light_frame_check) {
        // view both light beams from a frame riding on one of them (v = c)
        const BoostParameter beam(ctx, ctx.c());
        const double co = inverse_compose_velocity(ctx, beam, Vec3{ctx.c(), 0, 0}).x;
        const double counter = inverse_compose_velocity(ctx, beam, Vec3{-ctx.c(), 0, 0}).x;
        const double cm2 = ctx.c_m() * ctx.c_m();
        const double closed_form = -2.0 * ctx.c() * cm2 / (ctx.c() * ctx.c() + cm2);
        out << JsonObject{}
                   .number("frame_speed", ctx.c())
                   .number("u_prime_copropagating", co)
                   .number("u_prime_counterpropagating", counter)
                   .number("closed_form", closed_form)
                   .number("lower_bound", -2.0 * ctx.c())
                   .number("upper_bound", -ctx.c())
                   .str()
            << '\n';
        return write_out(o.common.output, out.str());
    }

    if (o.u.empty())
        throw InvalidArgument("InvalidArgument: --u is required unless --light-frame-check");
    const auto comps = parse_components(o.u, 1, 3);
    const Vec3 u{comps[0], comps.size() > 1 ? comps[1] : 0.0,
                 comps.size() > 2 ? comps[2] : 0.0};
    const BoostParameter b(ctx, o.v);
    const Vec3 r = o.inverse ? inverse_compose_velocity(ctx, b, u) : compose_velocity(ctx, b, u);

    if (o.common.format == "csv")
        out << "ux,uy,uz\n"
            << fmt17(r.x) << ',' << fmt17(r.y) << ',' << fmt17(r.z) << '\n';
    else
        out << JsonObject{}.number("ux", r.x).number("uy", r.y).number("uz", r.z).str() << '\n';
    return write_out(o.common.output, out.str());
}

// ---------------------------------------------------------------------------
// collide
// ---------------------------------------------------------------------------

struct CollideOpts {
    CommonOpts common;
    double mc = 1.0;
    std::optional<double> mc1, mc2;
    std::optional<double> v, vprime;
    std::string batch;
    long random_count = 0;
};

std::string report_line(const InvariantSpeedContext& ctx, const CollisionScenario& s) {
    const CollisionReport r = collision_report(ctx, s);
    return JsonObject{}
        .number("m_c1", s.m_c1())
        .number("m_c2", s.m_c2())
        .number("v_cm", s.v_cm())
        .number("v_prime", s.v_prime())
        .number("v1", r.v1)
        .number("v2", r.v2)
        .number("m1", r.m1)
        .number("m2", r.m2)
        .text("regime1", to_string(r.regime1))
        .text("regime2", to_string(r.regime2))
        .number("momentum_residual", r.momentum_residual)
        .number("mass_ratio_residual", r.mass_ratio_residual)
        .number("energy_before", r.energy_before)
        .number("energy_after", r.energy_after)
        .number("mass_before", r.mass_before)
        .number("mass_after", r.mass_after)
        .str();
}

int run_collide(const CollideOpts& o) {
    const auto ctx = context_of(o.common);
    std::vector<CollisionScenario> scenarios;

    if (!o.batch.empty()) {
        std::ifstream f(o.batch);
        if (!f) {
            std::cerr << "error: cannot open batch file '" << o.batch << "'\n";
            return 1;
        }
        const NumericTable table = read_numeric_csv(f);
        if (table.header != std::vector<std::string>{"m_c1", "m_c2", "v_cm", "v_prime"})
            throw InvalidArgument(
                "InvalidArgument: batch CSV must have header m_c1,m_c2,v_cm,v_prime");
        for (const auto& row : table.rows)
            scenarios.emplace_back(ctx, row[0], row[1], row[2], row[3]);
    } else if (o.random_count > 0) {
        std::mt19937_64 gen(o.common.seed);
        const double bound = 0.99 * ctx.c_m();
        for (long i = 0; i < o.random_count; ++i) {
            const double v = (2.0 * uniform01(gen) - 1.0) * bound;
            const double vp = (2.0 * uniform01(gen) - 1.0) * bound;
            scenarios.emplace_back(ctx, o.mc, o.mc, v, vp);
        }
    } else {
        if (!o.v || !o.vprime)
            throw InvalidArgument(
                "InvalidArgument: give --v and --vprime, or --batch, or --random");
        const double m1 = o.mc1.value_or(o.mc);
        const double m2 = o.mc2.value_or(o.mc);
        scenarios.emplace_back(ctx, m1, m2, *o.v, *o.vprime);
    }

    std::ostringstream out;
    for (const CollisionScenario& s : scenarios) out << report_line(ctx, s) << '\n';
    return write_out(o.common.output, out.str());
}

// ---------------------------------------------------------------------------
// trajectory
// ---------------------------------------------------------------------------

struct TrajectoryOpts {
    CommonOpts common;
    double mc = 0.0;
    std::string v0;
    std::string x0 = "0,0,0";
    std::string force;
    double dt = 0.0;
    long steps = 0;
};

int run_trajectory(const TrajectoryOpts& o) {
    const auto ctx = context_of(o.common);
    const Vec3 F = parse_vec3(o.force);
    if (!is_finite(F)) throw InvalidArgument("InvalidArgument: force must be finite");
    const ForceLaw law = [F](double, const ParticleState&) { return F; };
    const auto initial =
        make_particle_state(ctx, o.mc, parse_vec3(o.x0), Velocity3(ctx, parse_vec3(o.v0)));

    const TrajectoryRecord record = simulate_trajectory(ctx, law, initial, o.dt, o.steps);
    const double residual = work_energy_residual(ctx, law, o.mc, record);

    std::ostringstream out;
    out << "t,x,y,z,vx,vy,vz,px,py,pz,E\n";
    for (const auto& s : record.samples) {
        out << fmt17(s.t) << ',' << fmt17(s.position.x) << ',' << fmt17(s.position.y) << ','
            << fmt17(s.position.z) << ',' << fmt17(s.velocity.x) << ',' << fmt17(s.velocity.y)
            << ',' << fmt17(s.velocity.z) << ',' << fmt17(s.momentum.x) << ','
            << fmt17(s.momentum.y) << ',' << fmt17(s.momentum.z) << ',' << fmt17(s.energy)
            << '\n';
    }
    out << "# work_energy_residual = " << fmt17(residual) << '\n';
    return write_out(o.common.output, out.str());
}

// ---------------------------------------------------------------------------
// wave
// ---------------------------------------------------------------------------

struct WaveOpts {
    CommonOpts common;
    std::string equation;
    double mc = 0.0;
    std::size_t n = 256;
    double length = 2.0 * M_PI;
    std::optional<double> dt;
    double cfl = 0.5;
    long steps = 0;
    std::optional<long> mode;
    std::string initial;
    long snap_every = 0;
    std::string summary;
};

void append_scalar_snapshot(std::ostringstream& out, const std::vector<Complex>& psi,
                            double dx, double t) {
    out << "# t = " << fmt17(t) << "\nx,re_psi,im_psi\n";
    for (std::size_t j = 0; j < psi.size(); ++j)
        out << fmt17(double(j) * dx) << ',' << fmt17(psi[j].real()) << ','
            << fmt17(psi[j].imag()) << '\n';
    out << '\n';
}

void append_spinor_snapshot(std::ostringstream& out, const std::vector<Complex>& upper,
                            const std::vector<Complex>& lower, double dx, double t) {
    out << "# t = " << fmt17(t) << "\nx,re_psi,im_psi,re_psi2,im_psi2\n";
    for (std::size_t j = 0; j < upper.size(); ++j)
        out << fmt17(double(j) * dx) << ',' << fmt17(upper[j].real()) << ','
            << fmt17(upper[j].imag()) << ',' << fmt17(lower[j].real()) << ','
            << fmt17(lower[j].imag()) << '\n';
    out << '\n';
}

ScalarFieldGrid scalar_initial_from_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::ios_base::failure("cannot open initial file '" + path + "'");
    const NumericTable table = read_numeric_csv(f);
    if (table.header != std::vector<std::string>{"x", "re_psi", "im_psi"})
        throw InvalidArgument("InvalidArgument: initial CSV must have header x,re_psi,im_psi");
    const std::size_t n = table.rows.size();
    if (n < 8) throw InvalidArgument("InvalidArgument: initial grid needs at least 8 rows");
    const double dx = table.rows[1][0] - table.rows[0][0];
    ScalarFieldGrid g = make_scalar_grid(n, dx * double(n));
    for (std::size_t j = 0; j < n; ++j)
        g.psi[j] = Complex{table.rows[j][1], table.rows[j][2]};
    // the file carries psi only; evolution starts from rest (dpsi_dt = 0)
    return g;
}

SpinorFieldGrid spinor_initial_from_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::ios_base::failure("cannot open initial file '" + path + "'");
    const NumericTable table = read_numeric_csv(f);
    if (table.header !=
        std::vector<std::string>{"x", "re_psi", "im_psi", "re_psi2", "im_psi2"})
        throw InvalidArgument(
            "InvalidArgument: initial CSV must have header x,re_psi,im_psi,re_psi2,im_psi2");
    const std::size_t n = table.rows.size();
    if (n < 8) throw InvalidArgument("InvalidArgument: initial grid needs at least 8 rows");
    const double dx = table.rows[1][0] - table.rows[0][0];
    SpinorFieldGrid g = make_spinor_grid(n, dx * double(n));
    for (std::size_t j = 0; j < n; ++j) {
        g.upper[j] = Complex{table.rows[j][1], table.rows[j][2]};
        g.lower[j] = Complex{table.rows[j][3], table.rows[j][4]};
    }
    return g;
}

int run_wave(const WaveOpts& o) {
    const auto ctx = context_of(o.common);
    if (o.mode && *o.mode < 0) throw InvalidArgument("InvalidArgument: --mode must be >= 0");
    if (!o.mode && o.initial.empty())
        throw InvalidArgument("InvalidArgument: give --mode or --initial");
    if (o.steps < 1) throw InvalidArgument("InvalidArgument: --steps must be >= 1");

    std::ostringstream snaps;
    JsonObject summary;
    summary.text("equation", o.equation);

    const bool track_mode = o.mode.has_value();
    double k = 0.0;
    double omega0 = 0.0;

    if (o.equation == "kg") {
        const ScalarFieldGrid grid =
            o.initial.empty()
                ? make_kg_mode(ctx, o.mc, o.n, o.length, static_cast<std::size_t>(*o.mode))
                : scalar_initial_from_csv(o.initial);
        if (track_mode) {
            k = 2.0 * M_PI * static_cast<double>(*o.mode) / grid.length();
            omega0 = kg_dispersion(ctx, o.mc, k);
        }
        const double dt = o.dt.value_or(o.cfl * grid.dx / ctx.c_m());
        const double lambda = ctx.c_m() * dt / grid.dx;
        if (lambda > o.cfl) {
            std::ostringstream msg;
            msg << "CflViolation: c_m*dt/dx = " << lambda << " exceeds cfl_safety = " << o.cfl;
            throw CflViolation(msg.str());
        }

        KgSolver solver(ctx, grid, o.mc, dt);
        append_scalar_snapshot(snaps, solver.field(), grid.dx, solver.time());
        Complex prev = spectral_amplitude(solver.field(), grid.dx, k);
        double phase = 0.0;
        double e0 = 0.0;
        double drift = 0.0;
        for (long i = 1; i <= o.steps; ++i) {
            solver.step();
            if (track_mode) {
                const Complex amp = spectral_amplitude(solver.field(), grid.dx, k);
                phase += std::arg(prev * std::conj(amp));
                prev = amp;
            }
            const double e = solver.staggered_energy();
            if (i == 1)
                e0 = e;
            else if (e0 != 0.0)
                drift = std::max(drift, std::abs(e - e0) / std::abs(e0));
            if (o.snap_every > 0 && i % o.snap_every == 0 && i != o.steps)
                append_scalar_snapshot(snaps, solver.field(), grid.dx, solver.time());
        }
        append_scalar_snapshot(snaps, solver.field(), grid.dx, solver.time());
        if (!detail::all_finite(solver.field()))
            throw NonFiniteField("NonFiniteField: scalar field evolution blew up");

        if (track_mode) {
            const double measured = phase / (static_cast<double>(o.steps) * dt);
            summary.number("k", k)
                .number("omega_measured", measured)
                .number("omega_analytic", omega0)
                .number("rel_error", omega0 != 0.0 ? std::abs(measured - omega0) / omega0
                                                   : std::abs(measured));
        }
        summary.number("energy_initial", e0).number("energy_drift", drift);
    } else if (o.equation == "dirac") {
        const SpinorFieldGrid grid =
            o.initial.empty()
                ? make_dirac_mode(ctx, o.mc, o.n, o.length, static_cast<std::size_t>(*o.mode))
                : spinor_initial_from_csv(o.initial);
        if (track_mode) {
            k = 2.0 * M_PI * static_cast<double>(*o.mode) / grid.length();
            omega0 = kg_dispersion(ctx, o.mc, k);
        }
        const double omega_max = dirac_max_frequency(ctx, o.mc, grid.dx);
        const double dt = o.dt.value_or(0.5 / omega_max);

        DiracSolver solver(ctx, grid, o.mc, dt);
        append_spinor_snapshot(snaps, solver.upper(), solver.lower(), grid.dx, solver.time());
        Complex prev = spectral_amplitude(solver.upper(), grid.dx, k);
        const double norm0 = spinor_norm(grid);
        double phase = 0.0;
        double drift = 0.0;
        for (long i = 1; i <= o.steps; ++i) {
            solver.step();
            if (track_mode) {
                const Complex amp = spectral_amplitude(solver.upper(), grid.dx, k);
                phase += std::arg(prev * std::conj(amp));
                prev = amp;
            }
            if (norm0 != 0.0)
                drift = std::max(drift,
                                 std::abs(spinor_norm(solver.snapshot()) - norm0) / norm0);
            if (o.snap_every > 0 && i % o.snap_every == 0 && i != o.steps)
                append_spinor_snapshot(snaps, solver.upper(), solver.lower(), grid.dx,
                                       solver.time());
        }
        append_spinor_snapshot(snaps, solver.upper(), solver.lower(), grid.dx, solver.time());
        if (!detail::all_finite(solver.upper()) || !detail::all_finite(solver.lower()))
            throw NonFiniteField("NonFiniteField: spinor field evolution blew up");

        if (track_mode) {
            const double measured = phase / (static_cast<double>(o.steps) * dt);
            summary.number("k", k)
                .number("omega_measured", measured)
                .number("omega_analytic", omega0)
                .number("rel_error", omega0 != 0.0 ? std::abs(measured - omega0) / omega0
                                                   : std::abs(measured));
        }
        summary.number("norm_initial", norm0).number("norm_drift", drift);
    } else {
        throw InvalidArgument("InvalidArgument: --equation must be kg or dirac");
    }

    const int rc = write_out(o.common.output, snaps.str());
    if (rc != 0) return rc;
    if (!o.summary.empty()) return write_out(o.summary, summary.str() + "\n");
    std::cout << summary.str() << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"relativistic kinematics with an invariant maximum speed"};
    app.require_subcommand(1);
    app.set_config("--config")->envname("CMAX_CONFIG");
    app.allow_config_extras(false);

    BoostOpts boost_opts;
    auto* boost_cmd = app.add_subcommand("boost", "transform events between frames");
    add_common(boost_cmd, boost_opts.common, true);
    boost_cmd->add_option("--v", boost_opts.v, "relative frame velocity along x")->required();
    boost_cmd->add_option("--event", boost_opts.events, "event as x,y,z,t (repeatable)");
    boost_cmd->add_option("--events-csv", boost_opts.events_csv,
                          "CSV file of events (header x,y,z,t)");
    boost_cmd->add_flag("--inverse", boost_opts.inverse, "apply the inverse boost");

    ComposeOpts compose_opts;
    auto* compose_cmd = app.add_subcommand("compose", "compose velocities between frames");
    add_common(compose_cmd, compose_opts.common, true);
    compose_cmd->add_option("--v", compose_opts.v, "relative frame velocity along x");
    compose_cmd->add_option("--u", compose_opts.u, "velocity, 'ux' or 'ux,uy,uz'");
    compose_cmd->add_flag("--inverse", compose_opts.inverse, "apply the inverse composition");
    compose_cmd->add_flag("--light-frame-check", compose_opts.light_frame_check,
                          "report both light beams as seen from a frame riding on one");

    CollideOpts collide_opts;
    auto* collide_cmd =
        app.add_subcommand("collide", "two-particle collinear collision reports");
    add_common(collide_cmd, collide_opts.common, false);
    collide_cmd->add_option("--mc", collide_opts.mc, "characteristic mass of both particles")
        ->capture_default_str();
    collide_cmd->add_option("--mc1", collide_opts.mc1, "characteristic mass of particle 1");
    collide_cmd->add_option("--mc2", collide_opts.mc2, "characteristic mass of particle 2");
    collide_cmd->add_option("--v", collide_opts.v, "CM-frame velocity in the lab");
    collide_cmd->add_option("--vprime", collide_opts.vprime, "particle speed in the CM frame");
    collide_cmd->add_option("--batch", collide_opts.batch,
                            "CSV of scenarios (header m_c1,m_c2,v_cm,v_prime)");
    collide_cmd->add_option("--random", collide_opts.random_count,
                            "generate this many random scenarios (uses --seed, --mc)");

    TrajectoryOpts traj_opts;
    auto* traj_cmd = app.add_subcommand("trajectory", "integrate motion under a constant force");
    add_common(traj_cmd, traj_opts.common, false);
    traj_cmd->add_option("--mc", traj_opts.mc, "characteristic mass (> 0)")->required();
    traj_cmd->add_option("--v0", traj_opts.v0, "initial velocity vx,vy,vz")->required();
    traj_cmd->add_option("--x0", traj_opts.x0, "initial position x,y,z")->capture_default_str();
    traj_cmd->add_option("--force", traj_opts.force, "constant force fx,fy,fz")->required();
    traj_cmd->add_option("--dt", traj_opts.dt, "time step")->required();
    traj_cmd->add_option("--steps", traj_opts.steps, "number of steps")->required();

    WaveOpts wave_opts;
    auto* wave_cmd = app.add_subcommand("wave", "evolve the 1D wave equations");
    add_common(wave_cmd, wave_opts.common, false);
    wave_cmd->add_option("--equation", wave_opts.equation, "kg or dirac")->required();
    wave_cmd->add_option("--mc", wave_opts.mc, "characteristic mass (>= 0)")->required();
    wave_cmd->add_option("--n", wave_opts.n, "grid points")->capture_default_str();
    wave_cmd->add_option("--length", wave_opts.length, "domain length")->capture_default_str();
    wave_cmd->add_option("--dt", wave_opts.dt, "time step (default: from stability bound)");
    wave_cmd->add_option("--cfl", wave_opts.cfl, "CFL safety factor in (0,1]")
        ->capture_default_str();
    wave_cmd->add_option("--steps", wave_opts.steps, "number of steps")->required();
    wave_cmd->add_option("--mode", wave_opts.mode, "initialize a single plane-wave mode");
    wave_cmd->add_option("--initial", wave_opts.initial, "initial field CSV");
    wave_cmd->add_option("--snap-every", wave_opts.snap_every,
                         "write a snapshot every N steps (0: final only)")
        ->capture_default_str();
    wave_cmd->add_option("--summary", wave_opts.summary,
                         "write the JSONL summary here (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*boost_cmd) return run_boost(boost_opts);
        if (*compose_cmd) return run_compose(compose_opts);
        if (*collide_cmd) return run_collide(collide_opts);
        if (*traj_cmd) return run_trajectory(traj_opts);
        if (*wave_cmd) return run_wave(wave_opts);
    } catch (const cmax::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
