#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "axisym/errors.hpp"
#include "axisym/evolve.hpp"
#include "axisym/fields.hpp"
#include "axisym/manufactured.hpp"

using namespace axisym;

TEST_CASE("validate rejects bad steps") {
    RunConfig c;
    c.dt = 0.0;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c.dt = 1.0;
    CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("stability bound"), ConfigError);
}

TEST_CASE("T = 0 gives only the initial sample") {
    RunConfig c;
    c.Nr = c.Nz = 16;
    c.T = 0.0;
    RunResult r = run(c);
    CHECK(r.series.size() == 1);
    CHECK(r.series.times()[0] == 0.0);
}

TEST_CASE("zero data stays zero") {
    RunConfig c;
    c.Nr = c.Nz = 16;
    c.dt = 1e-3;
    c.T = 1.0;
    c.sample_every = 100;
    RunResult r = run(c);
    CHECK(r.series.size() == 11);
    for (auto& id : r.series.names())
        for (double v : r.series.column(id)) CHECK(v == 0.0);
}

TEST_CASE("rigid rotation is steady in axis mode") {
    RunConfig c;
    c.eps = 0.0;
    c.Nr = c.Nz = 32;
    c.dt = 1e-3;
    c.init.u_kind = "rigid";
    c.init.u_amp = 0.7;
    FlowState s = initial_state(c);
    for (int k = 0; k < 10; ++k) {
        FlowState n = step(s, c);
        CHECK((n.u - s.u).max_abs() < 1e-10);
        CHECK(n.chi.max_abs() < 1e-10);
        s = n;
    }
}

TEST_CASE("small swirl obeys the maximum principle") {
    RunConfig c;
    c.eps = 0.0;
    c.Nr = c.Nz = 32;
    c.dt = 2e-4;
    c.T = 0.2;
    c.sample_every = 5;
    c.init.u_kind = "gaussian";
    c.init.u_amp = 0.1;
    c.init.u_rc = 0.4;
    c.init.u_sigma = 0.12;
    RunResult r = run(c);
    auto um = r.series.column("u_max");
    for (double v : um) CHECK(v <= um[0] * (1 + 1e-10));
}

TEST_CASE("manufactured rigid rotation: errors at round-off") {
    RunConfig c;
    c.eps = 0.0;
    c.T = 0.05;
    GridPtr g = build_grid(0.0, 1.0, 1.0, 32, 32);
    ManufacturedSolution m = ManufacturedSolution::rigid_rotation(*g, 1.0, 0.5);
    MmsTable t = mms_run(c, m, {16, 32}, 0.5);
    for (auto& row : t.rows) {
        CHECK(row.err_u < 1e-12);
        CHECK(row.err_chi < 1e-12);
    }
}

TEST_CASE("manufactured swirl and vorticity converge at second order") {
    RunConfig c;
    c.eps = 0.1;
    c.T = 0.02;
    GridPtr g = build_grid(0.1, 1.0, 1.0, 32, 32);
    MmsTable ts = mms_run(c, ManufacturedSolution::swirl_case(*g, 1.0), {16, 32, 64}, 0.5);
    for (double o : ts.order(&MmsRow::err_u)) CHECK(o >= 1.8);
    MmsTable tv = mms_run(c, ManufacturedSolution::vorticity_case(*g, 1.0), {16, 32, 64}, 0.5);
    for (double o : tv.order(&MmsRow::err_psi)) CHECK(o >= 1.8);
    for (double o : tv.order(&MmsRow::err_vz)) CHECK(o >= 1.5);
}

TEST_CASE("state dump round trip") {
    RunConfig c;
    c.Nr = c.Nz = 16;
    c.init.u_kind = "gaussian";
    c.init.u_amp = 0.3;
    FlowState s = initial_state(c);
    auto dir = std::filesystem::temp_directory_path() / "axisym_dump_test";
    std::filesystem::create_directories(dir);
    dump_state(s, dir.string());
    double t = -1;
    ScalarField u = load_field((dir / "state_u.csv").string(), s.grid, &t);
    CHECK(t == 0.0);
    CHECK((u - s.u).max_abs() == 0.0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("unknown initial data kinds are config errors") {
    RunConfig c;
    c.Nr = c.Nz = 16;
    c.init.u_kind = "spiral";
    CHECK_THROWS_AS(initial_state(c), ConfigError);
}
