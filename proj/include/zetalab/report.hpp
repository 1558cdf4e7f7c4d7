#pragma once

#include "zetalab/curve.hpp"
#include "zetalab/zeta.hpp"

#include <json.hpp>

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace zetalab {

inline constexpr const char* kToolName = "zetalab";
inline constexpr const char* kToolVersion = "0.1.0";

// One verified identity; lhs/rhs are kept so reports are auditable without
// re-running. tolerance "0" marks an exact comparison.
struct CheckEntry {
    std::string name;
    bool ok = false;
    std::string lhs, rhs;
    std::string tolerance = "0";
};

nlohmann::json checks_to_json(const std::vector<CheckEntry>& checks);
bool all_ok(const std::vector<CheckEntry>& checks);

// Deterministic generator for the seeded verification suites. Raw engine
// output is reduced directly so the stream is identical across platforms.
class SuiteRng {
public:
    explicit SuiteRng(uint64_t seed) : eng_(seed) {}
    int uniform(int lo, int hi); // inclusive
    Rat rational();              // small rational, possibly negative
    uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

struct CurveAnalysis {
    CurveModel curve;
    std::vector<Int> counts;
    PointCountTable spectrum;
    ZetaData zeta;
};

// counts (cache-aware), spectrum, fit; max_degree 0 picks 2g+3.
CurveAnalysis analyze_curve(const CurveModel& curve, int max_degree, const std::string& cache_dir);

std::vector<CheckEntry> zeta_checks(const CurveAnalysis& a);

// Seeded invariant suites over the graded/torus/explicit-formula machinery.
std::vector<CheckEntry> suite_poisson(const CurveAnalysis& a);
std::vector<CheckEntry> suite_explicit(const CurveAnalysis& a, uint64_t seed);
std::vector<CheckEntry> suite_diagram(const CurveAnalysis& a, uint64_t seed);
std::vector<CheckEntry> suite_tate_iwasawa(const CurveAnalysis& a);
std::vector<CheckEntry> run_suite(const CurveAnalysis& a, const std::string& suite, uint64_t seed);

nlohmann::json analyze_report(const CurveAnalysis& a, const std::vector<CheckEntry>& checks,
                              const nlohmann::json& timings);
nlohmann::json verify_report(const CurveAnalysis& a, const std::string& suite,
                             const std::vector<CheckEntry>& checks, const nlohmann::json& timings);

// Number-field battery: class group, ideal counts (two paths), theta and
// residue identities, analytic cross-check.
std::vector<CheckEntry> nf_disc_checks(int64_t D, int trunc, nlohmann::json* detail);
std::vector<CheckEntry> nf_riemann_checks(std::complex<double> s, int trunc, nlohmann::json* detail);
std::vector<CheckEntry> nf_gaussian_checks(nlohmann::json* detail);

nlohmann::json error_object(const std::string& type, const std::string& message);

} // namespace zetalab
