#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "nlkpp/csv_io.hpp"
#include "nlkpp/errors.hpp"
#include "nlkpp/functionals.hpp"
#include "nlkpp/initial_condition.hpp"
#include "nlkpp/run_main.hpp"
#include "nlkpp/runner.hpp"

#include "test_helpers.hpp"

using namespace nlkpp;
using nlkpp::test::eigenmode_exact;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("run_simulation: lands exactly on t_final and snapshot times") {
    const GridSpec g = build_grid(2, 1.0, 1.0 / 16.0);
    SimParams p;
    p.mode = SolverMode::Heat;
    p.tau = 0.3; // does not divide t_final
    p.t_final = 1.0;
    p.record_every = 1;

    std::vector<double> seen;
    const RunResult run = run_simulation(eigenmode_exact(g, 1.0, 0.1, 0.0), p, {0.35, 1.0},
                                         [&](double t, const ScalarField&) { seen.push_back(t); });
    CHECK(run.series.back().t == 1.0);
    REQUIRE(seen.size() == 2);
    CHECK(seen[0] == 0.35);
    CHECK(seen[1] == 1.0);
    for (std::size_t i = 1; i < run.series.size(); ++i)
        CHECK(run.series.records[i].t > run.series.records[i - 1].t);
}

TEST_CASE("run_simulation: two-phase step schedule switches at tau_switch") {
    const GridSpec g = build_grid(1, 1.0, 1.0 / 16.0);
    SimParams p;
    p.mode = SolverMode::Heat;
    p.tau = 0.1;
    p.tau_init = 0.01;
    p.tau_switch = 0.05;
    p.t_final = 0.45;
    p.record_every = 1;
    const RunResult run = run_simulation(eigenmode_exact(g, 1.0, 0.1, 0.0), p);
    // 5 steps of 0.01, then steps of 0.1 truncated onto 0.45
    CHECK(run.series.records[1].t == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(run.series.records[5].t == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(run.series.records[6].t == doctest::Approx(0.15).epsilon(1e-12));
    CHECK(run.series.back().t == 0.45);
}

TEST_CASE("run_simulation: blow-up aborts with a clean partial series") {
    const GridSpec g = build_grid(2, 1.0, 1.0 / 16.0);
    SimParams p;
    p.alpha = 3.0;
    p.tau = 1e-2;
    p.t_final = 50.0;
    p.record_every = 10;
    p.blowup_threshold = 0.95; // crossed as uveers toward 1
    const RunResult run = run_simulation(ScalarField(g, 0.9), p);
    CHECK(run.status == RunStatus::Blowup);
    CHECK(run.blowup_t > 0.0);
    CHECK_FALSE(detect_blowup(run).global);
    for (const auto& rec : run.series.records) CHECK(rec.max_u <= 0.95);
}

TEST_CASE("run_simulation: zero initial data is a global degenerate fixed state") {
    const GridSpec g = build_grid(1, 1.0, 1.0 / 16.0);
    SimParams p;
    p.alpha = 3.0;
    p.tau = 1e-2;
    p.t_final = 0.5;
    const RunResult run = run_simulation(ScalarField(g, 0.0), p);
    CHECK(run.status == RunStatus::Global);
    CHECK(run.series.back().mass == 0.0);
    CHECK(run.series.back().max_u == 0.0);
}

TEST_CASE("snapshot csv: lossless %.17g round trip") {
    const GridSpec g = build_grid(2, 1.0, 0.125);
    std::mt19937 rng(555);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    ScalarField u(g);
    for (auto& v : u.values()) v = dist(rng);

    const std::string path = "/tmp/nlkpp_test_snapshot.csv";
    write_snapshot_csv(u, path);
    const ScalarField back = read_snapshot_csv(path, g);
    CHECK(back == u); // bitwise
    std::remove(path.c_str());
}

TEST_CASE("series csv: lossless round trip") {
    const GridSpec g = build_grid(1, 1.0, 1.0 / 16.0);
    SimParams p;
    p.mode = SolverMode::Heat;
    p.tau = 1e-2;
    p.t_final = 0.2;
    p.record_every = 2;
    const RunResult run = run_simulation(eigenmode_exact(g, 1.0, 0.1, 0.0), p);

    const std::string path = "/tmp/nlkpp_test_series.csv";
    write_series_csv(run.series, path);
    const MassSeries back = read_series_csv(path);
    REQUIRE(back.size() == run.series.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back.records[i].t == run.series.records[i].t);
        CHECK(back.records[i].mass == run.series.records[i].mass);
        CHECK(back.records[i].int_u_alpha == run.series.records[i].int_u_alpha);
    }
    std::remove(path.c_str());
}

TEST_CASE("run_main: byte-identical series.csv on repeated runs") {
    namespace fs = std::filesystem;
    const fs::path dir = "/tmp/nlkpp_test_rerun";
    fs::remove_all(dir);
    fs::create_directories(dir);

    RunConfig cfg = preset("case1");
    apply_overrides(cfg, {"params.t_final=0.5", "output.snapshot_times=none"});
    cfg.snapshot_dir = dir.string();
    cfg.report_path = (dir / "report.json").string();

    std::ostringstream log;
    cfg.series_path = (dir / "a.csv").string();
    CHECK(run_main(cfg, log) == 0);
    cfg.series_path = (dir / "b.csv").string();
    CHECK(run_main(cfg, log) == 0);
    CHECK(slurp((dir / "a.csv").string()) == slurp((dir / "b.csv").string()));
    fs::remove_all(dir);
}

TEST_CASE("run_main: snapshot files appear with the time-stamped names") {
    namespace fs = std::filesystem;
    const fs::path dir = "/tmp/nlkpp_test_snap";
    fs::remove_all(dir);
    fs::create_directories(dir);

    RunConfig cfg = preset("case1");
    apply_overrides(cfg, {"params.t_final=0.5", "output.snapshot_times=0.25,0.5"});
    cfg.snapshot_dir = dir.string();
    cfg.series_path = (dir / "series.csv").string();
    cfg.report_path = (dir / "report.json").string();

    std::ostringstream log;
    CHECK(run_main(cfg, log) == 0);
    CHECK(fs::exists(dir / "u_t0.25.csv"));
    CHECK(fs::exists(dir / "u_t0.5.csv"));
    const ScalarField snap = read_snapshot_csv((dir / "u_t0.5.csv").string(), cfg.make_grid());
    CHECK(snap.finite());
    fs::remove_all(dir);
}

TEST_CASE("mass series: append guards ordering and finiteness") {
    MassSeries s;
    MassRecord r;
    r.t = 0.0;
    s.append(r);
    CHECK_THROWS_AS(s.append(r), ValidationError); // equal t
    r.t = -1.0;
    CHECK_THROWS_AS(s.append(r), ValidationError);
    r.t = 1.0;
    r.mass = std::nan("");
    CHECK_THROWS_AS(s.append(r), ValidationError);
}
