#include "zetalab/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) zetalab::fail(zetalab::errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const nlohmann::json& j, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << j.dump(2) << std::endl;
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        out << j.dump(2) << '\n';
    }
}

int exit_code_for(zetalab::errc code)
{
    switch (code) {
    case zetalab::errc::parse_error:
    case zetalab::errc::invalid_curve:
    case zetalab::errc::invalid_argument:
    case zetalab::errc::invalid_discriminant:
    case zetalab::errc::invalid_prime:
    case zetalab::errc::too_large:
        return 2;
    default:
        return 1;
    }
}

std::string cache_dir_from(const std::string& flag)
{
    if (const char* env = std::getenv("ZETALAB_CACHE"); env && *env) return env;
    return flag;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact zeta-function laboratory for curves over finite fields"};
    app.require_subcommand(1);

    std::string curve_path, out_path, cache_flag, suite = "all";
    int max_degree = 0;
    int trunc = 1;
    uint64_t seed = 0;
    int64_t disc = 0;
    std::vector<double> riemann_s;
    bool gaussian = false;

    auto* analyze = app.add_subcommand("analyze", "count, fit P(t) and run the zeta checks");
    analyze->add_option("--curve", curve_path, "curve config file")->required();
    analyze->add_option("--max-degree", max_degree, "largest extension degree to count");
    analyze->add_option("--out", out_path, "write the JSON report here");
    analyze->add_option("--cache", cache_flag, "count cache directory");

    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("--curve", curve_path, "curve config file")->required();
    verify->add_option("--suite", suite, "poisson|explicit|diagram|tate-iwasawa|all");
    verify->add_option("--seed", seed, "seed for the randomized checks");
    verify->add_option("--out", out_path, "write the JSON report here");
    verify->add_option("--cache", cache_flag, "count cache directory");

    auto* nf = app.add_subcommand("nf", "number-field battery");
    auto* disc_opt = nf->add_option("--disc", disc, "positive D with -D fundamental");
    auto* riemann_opt =
        nf->add_option("--riemann", riemann_s, "evaluate xi at s (one or two reals: re [im])")
            ->expected(1, 2);
    nf->add_flag("--gaussian", gaussian, "run the Gaussian Fourier/Mellin/Poisson battery");
    nf->add_option("--trunc", trunc, "minimum series truncation");
    nf->add_option("--out", out_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        auto t0 = Clock::now();
        if (analyze->parsed()) {
            zetalab::CurveModel curve = zetalab::parse_curve(slurp(curve_path));
            auto a = zetalab::analyze_curve(curve, max_degree, cache_dir_from(cache_flag));
            double count_ms = ms_since(t0);
            auto checks = zetalab::zeta_checks(a);
            nlohmann::json timings = {{"count_ms", count_ms}, {"total_ms", ms_since(t0)}};
            emit(zetalab::analyze_report(a, checks, timings), out_path);
            return zetalab::all_ok(checks) ? 0 : 1;
        }
        if (verify->parsed()) {
            zetalab::CurveModel curve = zetalab::parse_curve(slurp(curve_path));
            auto a = zetalab::analyze_curve(curve, 0, cache_dir_from(cache_flag));
            auto checks = zetalab::run_suite(a, suite, seed);
            nlohmann::json timings = {{"total_ms", ms_since(t0)}};
            emit(zetalab::verify_report(a, suite, checks, timings), out_path);
            return zetalab::all_ok(checks) ? 0 : 1;
        }
        // nf
        if (!disc_opt->count() && !riemann_opt->count() && !gaussian)
            zetalab::fail(zetalab::errc::invalid_argument,
                          "nf needs --disc, --riemann or --gaussian");
        std::vector<zetalab::CheckEntry> checks;
        nlohmann::json detail;
        nlohmann::json j;
        j["tool"] = {{"name", zetalab::kToolName}, {"version", zetalab::kToolVersion}};
        if (disc_opt->count()) {
            auto c = zetalab::nf_disc_checks(disc, trunc, &detail);
            checks.insert(checks.end(), c.begin(), c.end());
            j["field"] = detail;
        }
        if (riemann_opt->count()) {
            std::complex<double> s(riemann_s.at(0), riemann_s.size() > 1 ? riemann_s.at(1) : 0.0);
            nlohmann::json rd;
            auto c = zetalab::nf_riemann_checks(s, trunc, &rd);
            checks.insert(checks.end(), c.begin(), c.end());
            j["riemann"] = rd;
        }
        if (gaussian) {
            nlohmann::json gd;
            auto c = zetalab::nf_gaussian_checks(&gd);
            checks.insert(checks.end(), c.begin(), c.end());
            j["gaussian"] = gd;
        }
        j["checks"] = zetalab::checks_to_json(checks);
        j["timings"] = {{"total_ms", ms_since(t0)}};
        emit(j, out_path);
        return zetalab::all_ok(checks) ? 0 : 1;
    } catch (const zetalab::error& e) {
        nlohmann::json err = zetalab::error_object(zetalab::errc_name(e.code()), e.what());
        std::cerr << err.dump(2) << std::endl;
        if (!out_path.empty()) emit(err, out_path);
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << zetalab::error_object("Internal", e.what()).dump(2) << std::endl;
        return 1;
    }
}
