#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "util.hpp"

#include <chrono>
#include <filesystem>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json schema()
{
    static json s = json::parse(testutil::read_file(std::string(ZETALAB_SOURCE_DIR) +
                                                    "/docs/report.schema.json"));
    return s;
}

void check_schema(const json& report)
{
    std::string why;
    bool ok = testutil::validate_schema(report, schema(), &why);
    INFO("schema violation: " << why);
    CHECK(ok);
}

json strip_timings(json j)
{
    j.erase("timings");
    return j;
}

} // namespace

TEST_CASE("analyze writes an auditable report and exits 0")
{
    auto r = testutil::run_cli("analyze --curve " + testutil::config_path("e_f2"));
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    check_schema(rep);
    CHECK(rep["zeta"]["P"] == json::array({"1", "0", "2"}));
    CHECK(rep["zeta"]["h"] == "3");
    for (const auto& c : rep["checks"]) CHECK(c["ok"] == true);
}

TEST_CASE("analyze reports the F_3 line residues")
{
    auto r = testutil::run_cli("analyze --curve " + testutil::config_path("p1_f3"));
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["zeta"]["P"] == json::array({"1"}));
    CHECK(rep["zeta"]["residues"]["s0_over_lnq"] == "-1/2");
    CHECK(rep["zeta"]["residues"]["s1_over_lnq"] == "3/2");
}

TEST_CASE("missing config file exits 2 with a machine-readable error")
{
    auto r = testutil::run_cli("analyze --curve no_such_file.cfg");
    CHECK(r.exit_code == 2);
    json err = json::parse(r.err);
    CHECK(err["error"]["type"] == "ParseError");
}

TEST_CASE("unknown suite exits 2")
{
    auto r = testutil::run_cli("verify --curve " + testutil::config_path("p1_f2") +
                               " --suite nonsense");
    CHECK(r.exit_code == 2);
}

TEST_CASE("poisson suite runs the d x shift grid")
{
    auto r = testutil::run_cli("verify --curve " + testutil::config_path("e_f2") +
                               " --suite poisson --seed 1");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    check_schema(rep);
    CHECK(rep["checks"].size() == 77);
    for (const auto& c : rep["checks"]) CHECK(c["ok"] == true);
}

TEST_CASE("explicit suite is deterministic under a fixed seed")
{
    std::string cmd = "verify --curve " + testutil::config_path("e_f3") +
                      " --suite explicit --seed 5";
    auto r1 = testutil::run_cli(cmd);
    auto r2 = testutil::run_cli(cmd);
    CHECK(r1.exit_code == 0);
    CHECK(strip_timings(json::parse(r1.out)) == strip_timings(json::parse(r2.out)));
}

TEST_CASE("cache round trip reproduces the report byte for byte")
{
    fs::path dir = fs::path("cache_test_dir");
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::string base = "analyze --curve " + testutil::config_path("e_f2") + " --cache " +
                       dir.string();
    auto r1 = testutil::run_cli(base);
    CHECK(r1.exit_code == 0);
    // one cache file, populated
    int files = 0;
    for (auto& e : fs::directory_iterator(dir)) {
        ++files;
        auto cached = zetalab::load_count_cache(e.path().string());
        CHECK(cached.size() >= 8);
    }
    CHECK(files == 1);
    auto r2 = testutil::run_cli(base);
    CHECK(r2.exit_code == 0);
    CHECK(strip_timings(json::parse(r1.out)).dump() == strip_timings(json::parse(r2.out)).dump());
    fs::remove_all(dir);
}

TEST_CASE("ZETALAB_CACHE overrides the --cache flag")
{
    fs::path env_dir = fs::path("cache_env_dir");
    fs::path flag_dir = fs::path("cache_flag_dir");
    fs::remove_all(env_dir);
    fs::remove_all(flag_dir);
    fs::create_directories(env_dir);
    fs::create_directories(flag_dir);
    setenv("ZETALAB_CACHE", env_dir.string().c_str(), 1);
    auto r = testutil::run_cli("analyze --curve " + testutil::config_path("p1_f2") + " --cache " +
                               flag_dir.string());
    unsetenv("ZETALAB_CACHE");
    CHECK(r.exit_code == 0);
    CHECK(!fs::is_empty(env_dir));
    CHECK(fs::is_empty(flag_dir));
    fs::remove_all(env_dir);
    fs::remove_all(flag_dir);
}

TEST_CASE("full suite on the line over F_2 finishes within ten seconds")
{
    auto t0 = std::chrono::steady_clock::now();
    auto r = testutil::run_cli("verify --curve " + testutil::config_path("p1_f2") +
                               " --suite all --seed 1");
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(r.exit_code == 0);
    CHECK(dt < 10.0);
}

TEST_CASE("analyze honors --max-degree and rejects depths below 2g+3")
{
    auto r = testutil::run_cli("analyze --curve " + testutil::config_path("e_f2") +
                               " --max-degree 5");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["counts"].size() == 5);
    CHECK(rep["zeta"]["P"] == json::array({"1", "0", "2"}));

    auto bad = testutil::run_cli("analyze --curve " + testutil::config_path("e_f2") +
                                 " --max-degree 4");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("number-field reports")
{
    auto r = testutil::run_cli("nf --disc 23");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    check_schema(rep);
    CHECK(rep["field"]["h"] == 3);
    for (const auto& c : rep["checks"]) CHECK(c["ok"] == true);

    auto bad = testutil::run_cli("nf --disc 12");
    CHECK(bad.exit_code == 2);

    auto xi = testutil::run_cli("nf --riemann 2");
    CHECK(xi.exit_code == 0);
    json xrep = json::parse(xi.out);
    double val = xrep["riemann"]["xi"][0];
    CHECK(std::abs(val - 0.5235987755982988) < 1e-9);

    auto none = testutil::run_cli("nf");
    CHECK(none.exit_code == 2);
}

TEST_CASE("check failures exit 1, usage errors exit 2")
{
    auto r = testutil::run_cli("verify --curve no_such_file.cfg --suite all");
    CHECK(r.exit_code == 2);

    // a poisoned cached count survives Moebius inversion but contradicts the
    // fitted numerator, so the analysis runs and a check comes back red
    fs::path dir = fs::path("cache_poison_dir");
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto curve = testutil::load_curve("e_f2");
    std::map<int, zetalab::Int> fake{{1, zetalab::Int(3)}, {2, zetalab::Int(9)},
                                     {3, zetalab::Int(27)}};
    zetalab::save_count_cache((dir / (curve.cache_id() + ".counts")).string(), fake);
    auto bad = testutil::run_cli("analyze --curve " + testutil::config_path("e_f2") +
                                 " --cache " + dir.string());
    CHECK(bad.exit_code == 1);
    json rep = json::parse(bad.out);
    bool some_failed = false;
    for (const auto& c : rep["checks"])
        if (c["ok"] == false) some_failed = true;
    CHECK(some_failed);
    fs::remove_all(dir);
}
