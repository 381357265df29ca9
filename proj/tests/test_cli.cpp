// End-to-end tests of the command-line tool: flags, exit codes, file formats,
// config handling and determinism. The binary path comes from the build.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "cmax_cli_tests";
    fs::create_directories(dir);
    return dir;
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const fs::path dir = scratch_dir();
    const fs::path out = dir / ("stdout" + std::to_string(++counter) + ".txt");
    const fs::path err = dir / ("stderr" + std::to_string(counter) + ".txt");
    std::string cmd = env_prefix;
    if (!cmd.empty()) cmd += ' ';
    cmd += std::string(CMAX_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int raw = std::system(cmd.c_str());
    const int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return {code, slurp(out), slurp(err)};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

std::vector<double> csv_row(const std::string& line) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
    return out;
}

/// Pull a numeric field out of a one-line JSON object.
double json_field(const std::string& line, const std::string& key) {
    const std::string needle = "\"" + key + "\":";
    const auto pos = line.find(needle);
    REQUIRE(pos != std::string::npos);
    return std::stod(line.substr(pos + needle.size()));
}

} // namespace

TEST_CASE("cli boost") {
    SECTION("identity") {
        const auto r = run_cli("boost --cm 2 --v 0 --event 0,0,0,1");
        CHECK(r.code == 0);
        const auto rows = lines_of(r.out);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0] == "x,y,z,t");
        const auto row = csv_row(rows[1]);
        CHECK(row == std::vector<double>{0.0, 0.0, 0.0, 1.0});
    }

    SECTION("hand-evaluated boost") {
        const auto r = run_cli("boost --cm 2 --v 1.2 --event 0,0,0,1");
        CHECK(r.code == 0);
        const auto row = csv_row(lines_of(r.out)[1]);
        CHECK_THAT(row[0], Catch::Matchers::WithinRel(1.5, 1e-15));
        CHECK_THAT(row[3], Catch::Matchers::WithinRel(1.25, 1e-15));
    }

    SECTION("boost at c_m is rejected with exit 2") {
        const auto r = run_cli("boost --cm 2 --v 2.0 --event 0,0,0,1");
        CHECK(r.code == 2);
        CHECK(r.err.find("BoostAtMaximumSpeed") != std::string::npos);
        CHECK(r.out.empty()); // no partial output
    }

    SECTION("events from CSV, jsonl out") {
        const fs::path events = scratch_dir() / "events.csv";
        std::ofstream(events) << "x,y,z,t\n0,0,0,1\n1,0,0,0\n";
        const auto r =
            run_cli("boost --cm 2 --v 1.2 --events-csv " + events.string() + " --format jsonl");
        CHECK(r.code == 0);
        const auto rows = lines_of(r.out);
        REQUIRE(rows.size() == 2);
        CHECK_THAT(json_field(rows[0], "x"), Catch::Matchers::WithinRel(1.5, 1e-15));
        CHECK_THAT(json_field(rows[1], "t"), Catch::Matchers::WithinRel(0.375, 1e-15));
    }

    SECTION("no events is a validation error") {
        CHECK(run_cli("boost --cm 2 --v 1.2").code == 2);
    }

    SECTION("missing events file is an I/O error") {
        CHECK(run_cli("boost --cm 2 --v 1.2 --events-csv /nonexistent/events.csv").code == 1);
    }
}

TEST_CASE("cli compose") {
    SECTION("light-frame values") {
        const auto r = run_cli("compose --cm 2 --v 1.0 --u -1.0 --inverse");
        CHECK(r.code == 0);
        CHECK_THAT(csv_row(lines_of(r.out)[1])[0], Catch::Matchers::WithinRel(-1.6, 1e-15));
    }

    SECTION("maximum-speed fixed point") {
        const auto r = run_cli("compose --cm 2 --v 0.7 --u 2.0");
        CHECK(r.code == 0);
        CHECK_THAT(csv_row(lines_of(r.out)[1])[0], Catch::Matchers::WithinRel(2.0, 1e-12));
    }

    SECTION("frame speed at the bound is rejected") {
        const auto r = run_cli("compose --cm 1.5 --v 1.5 --u 0.5");
        CHECK(r.code == 2);
    }

    SECTION("light-frame check report") {
        const auto r = run_cli("compose --cm 2 --light-frame-check");
        CHECK(r.code == 0);
        const auto rows = lines_of(r.out);
        REQUIRE(rows.size() == 1);
        CHECK(json_field(rows[0], "u_prime_copropagating") == 0.0);
        CHECK_THAT(json_field(rows[0], "u_prime_counterpropagating"),
                   Catch::Matchers::WithinRel(-1.6, 1e-15));
        CHECK_THAT(json_field(rows[0], "closed_form"),
                   Catch::Matchers::WithinRel(-1.6, 1e-15));
    }
}

TEST_CASE("cli collide") {
    SECTION("single scenario report") {
        const auto r = run_cli("collide --cm 2 --v 1.2 --vprime 0.5 --mc 1");
        CHECK(r.code == 0);
        const auto rows = lines_of(r.out);
        REQUIRE(rows.size() == 1);
        CHECK(json_field(rows[0], "momentum_residual") <= 1e-12);
        CHECK(json_field(rows[0], "mass_ratio_residual") <= 1e-12);
        CHECK_THAT(json_field(rows[0], "v1"),
                   Catch::Matchers::WithinRel(1.7 / 1.15, 1e-15));
    }

    SECTION("coincident particles") {
        const auto r = run_cli("collide --cm 2 --v 1.2 --vprime 0 --mc 1");
        CHECK(r.code == 0);
        CHECK(json_field(r.out, "v1") == 1.2);
        CHECK(json_field(r.out, "v2") == 1.2);
    }

    SECTION("batch of 100 scenarios gives 100 report lines") {
        const fs::path batch = scratch_dir() / "batch.csv";
        {
            std::ofstream f(batch);
            f << "m_c1,m_c2,v_cm,v_prime\n";
            for (int i = 0; i < 100; ++i)
                f << "1,1," << 0.01 * i << "," << 0.015 * i << "\n";
        }
        const auto r = run_cli("collide --cm 2 --batch " + batch.string());
        CHECK(r.code == 0);
        CHECK(lines_of(r.out).size() == 100);
    }

    SECTION("invalid scenario exits 2") {
        CHECK(run_cli("collide --cm 2 --v 2.5 --vprime 0 --mc 1").code == 2);
    }

    SECTION("random sweeps are deterministic for a fixed seed") {
        const fs::path a = scratch_dir() / "sweep_a.jsonl";
        const fs::path b = scratch_dir() / "sweep_b.jsonl";
        CHECK(run_cli("collide --cm 2 --random 50 --seed 7 -o " + a.string()).code == 0);
        CHECK(run_cli("collide --cm 2 --random 50 --seed 7 -o " + b.string()).code == 0);
        const std::string ta = slurp(a);
        CHECK(ta == slurp(b));
        CHECK(lines_of(ta).size() == 50);
        // every generated identical-mass scenario conserves momentum
        for (const auto& line : lines_of(ta))
            CHECK(json_field(line, "momentum_residual") <= 1e-12);
    }
}

TEST_CASE("cli trajectory") {
    SECTION("free particle rows are constant-velocity") {
        const auto r = run_cli("trajectory --cm 2 --mc 1 --v0 1,0,0 --force 0,0,0 "
                               "--dt 0.1 --steps 5");
        CHECK(r.code == 0);
        const auto rows = lines_of(r.out);
        REQUIRE(rows.size() == 8); // header + 6 samples + residual trailer
        CHECK(rows[0] == "t,x,y,z,vx,vy,vz,px,py,pz,E");
        const auto last = csv_row(rows[6]);
        CHECK_THAT(last[1], Catch::Matchers::WithinRel(0.5, 1e-12)); // x = v t
        CHECK(rows[7].find("# work_energy_residual = ") == 0);
        CHECK(std::stod(rows[7].substr(rows[7].find('=') + 1)) == 0.0);
    }

    SECTION("constant force gives monotone energy and a small residual") {
        const auto r = run_cli("trajectory --cm 2 --mc 1 --v0 1,0,0 --force 1,0,0 "
                               "--dt 0.001 --steps 1000");
        CHECK(r.code == 0);
        const auto rows = lines_of(r.out);
        REQUIRE(rows.size() == 1003);
        double prev = 0.0;
        for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
            const double E = csv_row(rows[i]).back();
            CHECK(E > prev);
            prev = E;
        }
        const double residual = std::stod(rows.back().substr(rows.back().find('=') + 1));
        CHECK(residual <= 1e-8);
    }

    SECTION("zero step exits 2") {
        CHECK(run_cli("trajectory --cm 2 --mc 1 --v0 1,0,0 --force 1,0,0 --dt 0 --steps 10")
                  .code == 2);
    }
}

TEST_CASE("cli wave") {
    SECTION("massless dispersion within half a percent") {
        const auto r = run_cli("wave --equation kg --cm 2 --mc 0 --mode 1 --steps 400 -o " +
                               (scratch_dir() / "kg.csv").string());
        CHECK(r.code == 0);
        CHECK(json_field(r.out, "rel_error") <= 5e-3);
        CHECK(json_field(r.out, "energy_drift") <= 1e-6);
    }

    SECTION("spinor norm drift in the summary") {
        const auto r = run_cli("wave --equation dirac --cm 2 --mc 1 --mode 1 --steps 1000 -o " +
                               (scratch_dir() / "dirac.csv").string());
        CHECK(r.code == 0);
        CHECK(json_field(r.out, "norm_drift") <= 1e-8);
        CHECK(json_field(r.out, "rel_error") <= 1e-2);
    }

    SECTION("snapshot format") {
        const fs::path snap = scratch_dir() / "snaps.csv";
        const auto r = run_cli("wave --equation kg --cm 2 --mc 1 --n 64 --mode 1 --steps 20 "
                               "--snap-every 10 -o " +
                               snap.string());
        CHECK(r.code == 0);
        const auto rows = lines_of(slurp(snap));
        // three blocks (t = 0, mid, final), each: comment + header + 64 rows + blank
        int headers = 0, comments = 0;
        for (const auto& line : rows) {
            if (line == "x,re_psi,im_psi") ++headers;
            if (line.rfind("# t = ", 0) == 0) ++comments;
        }
        CHECK(headers == 3);
        CHECK(comments == 3);
    }

    SECTION("CFL violation names the bound and leaves no output file") {
        const fs::path out = scratch_dir() / "never_written.csv";
        const auto r = run_cli("wave --equation kg --cm 2 --mc 1 --mode 1 --steps 10 --dt 0.1 -o " +
                               out.string());
        CHECK(r.code == 2);
        CHECK(r.err.find("CflViolation") != std::string::npos);
        CHECK(!fs::exists(out));
    }

    SECTION("dirac rejects a step over the stability bound") {
        const auto r =
            run_cli("wave --equation dirac --cm 2 --mc 1 --mode 1 --steps 10 --dt 0.1");
        CHECK(r.code == 2);
        CHECK(r.err.find("StabilityViolation") != std::string::npos);
    }

    SECTION("initial field from CSV") {
        const fs::path init = scratch_dir() / "init.csv";
        {
            std::ofstream f(init);
            f << "x,re_psi,im_psi\n";
            const int n = 32;
            for (int j = 0; j < n; ++j) {
                const double x = j * (2.0 * M_PI / n);
                f << x << "," << std::cos(x) << "," << std::sin(x) << "\n";
            }
        }
        const auto r = run_cli("wave --equation kg --cm 2 --mc 1 --steps 50 --initial " +
                               init.string() + " -o " + (scratch_dir() / "from_init.csv").string());
        CHECK(r.code == 0);
        CHECK(json_field(r.out, "energy_drift") <= 1e-6);
    }
}

TEST_CASE("cli config file") {
    const fs::path cfg = scratch_dir() / "run.ini";
    std::ofstream(cfg) << "[boost]\ncm = 2.0\nv = 1.2\nevent = \"0,0,0,1\"\n";

    SECTION("config before the subcommand") {
        const auto r = run_cli("--config " + cfg.string() + " boost");
        CHECK(r.code == 0);
        CHECK_THAT(csv_row(lines_of(r.out)[1])[0], Catch::Matchers::WithinRel(1.5, 1e-15));
    }

    SECTION("CMAX_CONFIG env var points at the default config") {
        const auto r = run_cli("boost", "CMAX_CONFIG=" + cfg.string());
        CHECK(r.code == 0);
        CHECK_THAT(csv_row(lines_of(r.out)[1])[0], Catch::Matchers::WithinRel(1.5, 1e-15));
    }

    SECTION("flags override config values") {
        const auto r = run_cli("boost --v 0", "CMAX_CONFIG=" + cfg.string());
        CHECK(r.code == 0);
        const auto row = csv_row(lines_of(r.out)[1]);
        CHECK(row[0] == 0.0);
        CHECK(row[3] == 1.0);
    }

    SECTION("unknown config keys are rejected") {
        const fs::path bad = scratch_dir() / "bad.ini";
        std::ofstream(bad) << "[boost]\ncm = 2.0\nv = 1.2\nevent = \"0,0,0,1\"\nwhat = 1\n";
        CHECK(run_cli("--config " + bad.string() + " boost").code == 2);
    }
}

TEST_CASE("cli output files are byte-identical across reruns") {
    const fs::path a = scratch_dir() / "traj_a.csv";
    const fs::path b = scratch_dir() / "traj_b.csv";
    const std::string args = "trajectory --cm 2 --mc 1 --v0 1,0,0 --force 0.5,0.25,0 "
                             "--dt 0.01 --steps 200 -o ";
    CHECK(run_cli(args + a.string()).code == 0);
    CHECK(run_cli(args + b.string()).code == 0);
    CHECK(slurp(a) == slurp(b));
}
