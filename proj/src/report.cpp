#include "zetalab/report.hpp"

#include "zetalab/explicit_formula.hpp"
#include "zetalab/graded.hpp"
#include "zetalab/number_field.hpp"
#include "zetalab/torus.hpp"

#include <cmath>
#include <sstream>

namespace zetalab {

namespace {

std::string dbl(double v)
{
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

CheckEntry exact_check(const std::string& name, const std::string& lhs, const std::string& rhs)
{
    CheckEntry c;
    c.name = name;
    c.lhs = lhs;
    c.rhs = rhs;
    c.ok = (lhs == rhs);
    return c;
}

CheckEntry numeric_check(const std::string& name, double err, double tol)
{
    CheckEntry c;
    c.name = name;
    c.lhs = dbl(err);
    c.rhs = "0";
    c.tolerance = dbl(tol);
    c.ok = err <= tol;
    return c;
}

CheckEntry bool_check(const std::string& name, bool ok, const std::string& lhs,
                      const std::string& rhs)
{
    CheckEntry c;
    c.name = name;
    c.ok = ok;
    c.lhs = lhs;
    c.rhs = rhs;
    return c;
}

std::string join_ints(const std::vector<Int>& v)
{
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + "]";
}

std::string join_rats(const std::vector<Rat>& v)
{
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + "]";
}

} // namespace

nlohmann::json checks_to_json(const std::vector<CheckEntry>& checks)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name},
                       {"ok", c.ok},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs},
                       {"tolerance", c.tolerance}});
    }
    return arr;
}

bool all_ok(const std::vector<CheckEntry>& checks)
{
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

int SuiteRng::uniform(int lo, int hi)
{
    return lo + static_cast<int>(eng_() % static_cast<uint64_t>(hi - lo + 1));
}

Rat SuiteRng::rational()
{
    int num = uniform(-4, 4);
    int den = uniform(1, 3);
    return Rat(num, den);
}

CurveAnalysis analyze_curve(const CurveModel& curve, int max_degree, const std::string& cache_dir)
{
    CurveAnalysis a;
    a.curve = curve;
    int M = max_degree > 0 ? max_degree : std::max(2 * curve.genus + 3, 8);
    if (M < 2 * curve.genus + 3)
        fail(errc::invalid_argument, "max degree must be at least 2g+3");
    a.counts = counts_up_to(curve, M, cache_dir);
    a.spectrum = closed_point_spectrum(a.counts);
    a.spectrum.curve_id = curve.cache_id();
    std::vector<Int> fit_counts(a.counts.begin(),
                                a.counts.begin() + std::min<size_t>(a.counts.size(),
                                                                    static_cast<size_t>(2 * curve.genus)));
    a.zeta = fit_numerator(curve.q(), curve.genus, fit_counts);
    return a;
}

std::vector<CheckEntry> zeta_checks(const CurveAnalysis& a)
{
    std::vector<CheckEntry> out;
    const ZetaData& z = a.zeta;
    const int M = a.spectrum.max_degree();
    const double sqrt_q = std::sqrt(static_cast<double>(z.q));

    auto fe = functional_equation_check(z);
    out.push_back(bool_check("functional_equation_symmetry", fe.symmetric, "symmetric",
                             fe.symmetric ? "symmetric" : "asymmetric"));
    double worst = 0;
    for (double m : fe.root_moduli) worst = std::max(worst, std::abs(m - sqrt_q));
    out.push_back(numeric_check("rh_root_moduli", worst, 1e-9));

    auto res = class_number_and_residues(z);
    out.push_back(exact_check("residue_s0", to_string(res.res0.coeff), to_string(res.laurent_res0)));
    out.push_back(exact_check("residue_s1", to_string(res.res1.coeff), to_string(res.laurent_res1)));

    auto b_series = series_coefficients(z, M);
    out.push_back(exact_check("b_two_path", join_ints(b_series), join_ints(a.spectrum.b)));

    {
        bool ok = true;
        std::string lhs = "[", rhs = "[";
        Rat vol(z.class_number(), z.q - 1);
        for (int n = std::max(2 * z.g - 1, 0); n <= M; ++n) {
            Rat expected = vol * (rat_pow(Int(z.q), n + 1 - z.g) - 1);
            if (Rat(b_series[static_cast<size_t>(n)]) != expected) ok = false;
            lhs += b_series[static_cast<size_t>(n)].str() + ",";
            rhs += to_string(expected) + ",";
        }
        out.push_back(bool_check("riemann_roch_tail", ok, lhs + "]", rhs + "]"));
    }

    {
        bool ok = true;
        std::string lhs = "[", rhs = "[";
        for (int m = 2 * z.g + 1; m <= M; ++m) {
            Int pred = predict_count(z, m);
            ok = ok && (pred == a.spectrum.n(m));
            lhs += pred.str() + ",";
            rhs += a.spectrum.n(m).str() + ",";
        }
        out.push_back(bool_check("predict_out_of_sample", ok, lhs + "]", rhs + "]"));
    }

    {
        double worst_excess = 0;
        for (int m = 1; m <= M; ++m) {
            double nm = a.spectrum.n(m).convert_to<double>();
            double bound = 2.0 * z.g * std::pow(sqrt_q, m) + 1e-6;
            double excess = std::abs(nm - (std::pow(static_cast<double>(z.q), m) + 1.0)) - bound;
            worst_excess = std::max(worst_excess, excess);
        }
        out.push_back(numeric_check("weil_bound", std::max(worst_excess, 0.0), 0.0));
    }

    auto pp = principal_parts_check(z);
    out.push_back(bool_check("principal_parts", pp.ok, join_rats(pp.entire),
                             "polynomial of degree <= " + std::to_string(2 * z.g - 2)));

    for (int extra : {0, 5, 10}) {
        auto ti = tate_iwasawa_decomposition(z, 2 * z.g + extra);
        out.push_back(bool_check("tate_iwasawa N=" + std::to_string(2 * z.g + extra), ti.ok,
                                 join_rats(ti.lhs), "sum of four terms"));
    }

    if (M >= 2) {
        auto pnt = prime_counting_report(a.spectrum.a, M, z.q);
        double bound = 3.0 * z.g * std::pow(sqrt_q, -M) + std::pow(sqrt_q, -M + 2);
        out.push_back(numeric_check("pnt_degree_ratio m=" + std::to_string(M),
                                    std::abs(pnt.degree_ratio - 1.0), bound));
    }
    return out;
}

// ---- random generators for the seeded suites -----------------------------------

namespace {

HPS random_hps(SuiteRng& rng, int64_t q)
{
    Rat a = rng.rational();
    Rat b = rng.rational();
    return HPS(a, b, q); // collapses to rational when q is a square
}

GradedFunction random_d(SuiteRng& rng, int64_t q, bool rational_only)
{
    std::map<int, HPS> vals;
    int terms = rng.uniform(1, 5);
    for (int i = 0; i < terms; ++i) {
        int n = rng.uniform(-6, 6);
        HPS v = rational_only ? HPS(rng.rational()) : random_hps(rng, q);
        if (!v.is_zero()) vals[n] = v;
    }
    int hi = vals.empty() ? 0 : vals.rbegin()->first + 1;
    return GradedFunction::build(GradedSpace::d, q, std::move(vals), hi, HPS(0), HPS(0));
}

GradedFunction random_d_plus(SuiteRng& rng, int64_t q)
{
    std::map<int, HPS> vals;
    int terms = rng.uniform(0, 4);
    for (int i = 0; i < terms; ++i) vals[rng.uniform(-5, 5)] = random_hps(rng, q);
    int ts = rng.uniform(-2, 4);
    for (auto it = vals.begin(); it != vals.end();)
        it = it->first >= ts ? vals.erase(it) : ++it;
    return GradedFunction::build(GradedSpace::d_plus, q, std::move(vals), ts, HPS(0),
                                 random_hps(rng, q));
}

GradedFunction random_d_plus_plus(SuiteRng& rng, int64_t q)
{
    std::map<int, HPS> vals;
    int terms = rng.uniform(0, 4);
    for (int i = 0; i < terms; ++i) vals[rng.uniform(-5, 5)] = random_hps(rng, q);
    int ts = rng.uniform(-2, 4);
    for (auto it = vals.begin(); it != vals.end();)
        it = it->first >= ts ? vals.erase(it) : ++it;
    return GradedFunction::build(GradedSpace::d_plus_plus, q, std::move(vals), ts,
                                 random_hps(rng, q), random_hps(rng, q));
}

TorusRational random_torus_rational(SuiteRng& rng, int64_t q)
{
    LaurentPoly num;
    int lo = rng.uniform(-4, 0);
    int len = rng.uniform(1, 8);
    for (int i = 0; i < len; ++i) num += LaurentPoly::monomial(lo + i, random_hps(rng, q));
    return TorusRational(std::move(num), rng.uniform(0, 1), rng.uniform(0, 1), q);
}

// the pointwise rule n -> q^n f(-n), valid on finite support
GradedFunction pointwise_fourier_d(const GradedFunction& f, int64_t q)
{
    std::map<int, HPS> vals;
    for (const auto& [n, v] : f.explicit_values())
        vals[-n] = v * HPS(rat_pow(Int(q), -n));
    int hi = vals.empty() ? 0 : vals.rbegin()->first + 1;
    return GradedFunction::build(GradedSpace::d, q, std::move(vals), hi, HPS(0), HPS(0));
}

} // namespace

std::vector<CheckEntry> suite_poisson(const CurveAnalysis& a)
{
    std::vector<CheckEntry> out;
    for (int d = -5; d <= 5; ++d)
        for (int shift = -3; shift <= 3; ++shift) {
            auto pc = poisson_residue_check(a.zeta, d, shift);
            out.push_back(bool_check(
                "poisson d=" + std::to_string(d) + " shift=" + std::to_string(shift), pc.ok,
                to_string(pc.lhs_res0) + "+" + to_string(pc.lhs_res1),
                to_string(pc.rhs_res0) + "+" + to_string(pc.rhs_res1)));
        }
    return out;
}

std::vector<CheckEntry> suite_explicit(const CurveAnalysis& a, uint64_t seed)
{
    std::vector<CheckEntry> out;
    SuiteRng rng(seed * 2654435761ull + 17);
    for (int i = 0; i < 20; ++i) {
        GradedFunction f = random_d(rng, a.curve.q(), /*rational_only=*/true);
        auto sides = explicit_formula_sides(f, a.zeta, a.spectrum.a);
        out.push_back(bool_check("explicit_formula f#" + std::to_string(i), sides.ok,
                                 to_string(sides.lhs), to_string(sides.rhs)));
    }
    {
        auto ps = power_sums(a.zeta, 12);
        bool ok = true;
        for (int n = 1; n <= 12; ++n)
            if (ps.s_neg[static_cast<size_t>(n)] !=
                rat_pow(Int(a.zeta.q), -n) * ps.s_pos[static_cast<size_t>(n)])
                ok = false;
        out.push_back(bool_check("power_sum_pairing", ok, "s_{-n}", "q^{-n} s_n"));

        // cross-validate Newton sums against the numeric roots
        auto roots = numeric_inverse_roots(a.zeta);
        double worst = 0;
        for (int n = 1; n <= 8; ++n) {
            std::complex<double> s_float = 0;
            for (const auto& lam : roots) s_float += std::pow(lam, n);
            double newton = to_double(ps.s_pos[static_cast<size_t>(n)]);
            worst = std::max(worst, std::abs(s_float - std::complex<double>(newton, 0.0)) /
                                        std::max(1.0, std::abs(newton)));
        }
        out.push_back(numeric_check("power_sum_float_crosscheck", worst, 1e-8));
    }
    return out;
}

std::vector<CheckEntry> suite_diagram(const CurveAnalysis& a, uint64_t seed)
{
    std::vector<CheckEntry> out;
    const ZetaData& z = a.zeta;
    const int64_t q = z.q;
    SuiteRng rng(seed * 0x9e3779b97f4a7c15ull + 3);

    for (int d = -5; d <= 5; ++d) {
        HPS scale(rat_pow(Int(q), 1 - z.g - d));
        bool ok1 = involution_pullback(standard_global(z, d)) ==
                   standard_global(z, 2 - 2 * z.g - d).scaled(scale);
        out.push_back(bool_check("eq_comm_torus d=" + std::to_string(d), ok1, "i* F_d",
                                 "q^{1-g-d} F_{2-2g-d}"));
        bool ok2 = graded_fourier_pp(pushforward_standard(z, d), q) ==
                   pushforward_standard(z, 2 - 2 * z.g - d).scaled(scale);
        out.push_back(bool_check("eq_comm_graded d=" + std::to_string(d), ok2, "F pi_* f_d",
                                 "q^{1-g-d} pi_* f_{2-2g-d}"));
    }

    {
        bool ok = true;
        for (int i = 0; i < 20; ++i) {
            GradedFunction f = random_d(rng, q, false);
            ok = ok && (mellin(pointwise_fourier_d(f, q)) == involution_pullback(mellin(f)));
        }
        out.push_back(bool_check("mellin_conjugacy_D", ok, "M(Ff)", "i* Mf"));
    }
    {
        bool ok = true;
        for (int i = 0; i < 20; ++i) {
            GradedFunction f = random_d_plus(rng, q);
            int k = -2 + (i % 6);
            ok = ok && (mellin(local_fourier(f, q, k)) == torus_fourier_local(mellin(f), q, k));
        }
        out.push_back(bool_check("mellin_conjugacy_Dplus", ok, "M(F_x f)", "F_x(Mf)"));
    }
    {
        bool ok = true;
        for (int i = 0; i < 20; ++i) {
            GradedFunction f = random_d_plus_plus(rng, q);
            ok = ok && (mellin(graded_fourier_pp(f, q)) == involution_pullback(mellin(f)));
        }
        out.push_back(bool_check("mellin_conjugacy_Dpp", ok, "M(Ff)", "i* Mf"));
    }

    {
        const int64_t qs[] = {2, 3, 4, 5, 9};
        for (int64_t qx : qs) {
            bool ok = true;
            for (int kx = -2; kx <= 3; ++kx)
                for (int i = 0; i < 50; ++i) {
                    GradedFunction f = random_d_plus(rng, qx);
                    ok = ok && (local_fourier(local_fourier(f, qx, kx), qx, kx) == f);
                }
            out.push_back(bool_check("fourier_involution_Dplus q=" + std::to_string(qx), ok,
                                     "F(F(f))", "f"));
        }
    }
    {
        bool ok = true;
        for (int i = 0; i < 50; ++i) {
            GradedFunction f = random_d_plus_plus(rng, q);
            ok = ok && (graded_fourier_pp(graded_fourier_pp(f, q), q) == f);
        }
        out.push_back(bool_check("fourier_involution_Dpp", ok, "F(F(f))", "f"));
    }
    {
        bool ok = true;
        for (int i = 0; i < 50; ++i) {
            GradedFunction fd = random_d(rng, q, false);
            GradedFunction fp = random_d_plus(rng, q);
            GradedFunction fpp = random_d_plus_plus(rng, q);
            ok = ok && (inverse_mellin(mellin(fd)) == fd);
            ok = ok && (inverse_mellin(mellin(fp)) == fp);
            ok = ok && (inverse_mellin(mellin(fpp)) == fpp);
        }
        out.push_back(bool_check("mellin_roundtrip", ok, "M^{-1}(M(f))", "f"));
    }
    {
        bool ok = true;
        for (int i = 0; i < 20; ++i) {
            GradedFunction f = random_d(rng, q, false);
            ok = ok && (graded_fourier_pp(f, q) == pointwise_fourier_d(f, q));
        }
        out.push_back(bool_check("eq_fur_pointwise", ok, "F f", "n -> q^n f(-n)"));
    }
    {
        bool ok = true;
        for (int i = 0; i < 100; ++i) {
            auto r = residue_report(random_torus_rational(rng, q));
            ok = ok && r.sum.is_zero();
        }
        out.push_back(bool_check("residue_sum_zero", ok, "sum of four residues", "0"));
    }
    {
        bool ok = true;
        const TorusPoint pts[] = {TorusPoint::zero, TorusPoint::one, TorusPoint::q_inv,
                                  TorusPoint::infinity};
        const TorusPoint img[] = {TorusPoint::infinity, TorusPoint::q_inv, TorusPoint::one,
                                  TorusPoint::zero};
        for (int i = 0; i < 25; ++i) {
            TorusRational r = random_torus_rational(rng, q);
            TorusRational ri = involution_pullback(r);
            for (int j = 0; j < 4; ++j) {
                // i*(R dz/z) = -(i*R) dz/z
                HPS lhs = residue_at(r, pts[j]);
                HPS rhs = -residue_at(ri, img[j]);
                ok = ok && (lhs == rhs);
            }
        }
        out.push_back(bool_check("residue_involution_invariance", ok, "res_P(eta)",
                                 "res_{i(P)}(i* eta)"));
    }
    return out;
}

std::vector<CheckEntry> suite_tate_iwasawa(const CurveAnalysis& a)
{
    std::vector<CheckEntry> out;
    for (int extra : {0, 5, 10}) {
        auto ti = tate_iwasawa_decomposition(a.zeta, 2 * a.zeta.g + extra);
        out.push_back(bool_check("tate_iwasawa N=" + std::to_string(ti.truncation), ti.ok,
                                 join_rats(ti.lhs), "sum of four terms"));
    }
    auto pp = principal_parts_check(a.zeta);
    out.push_back(bool_check("principal_parts", pp.ok, join_rats(pp.entire),
                             "polynomial of degree <= " + std::to_string(2 * a.zeta.g - 2)));
    return out;
}

std::vector<CheckEntry> run_suite(const CurveAnalysis& a, const std::string& suite, uint64_t seed)
{
    if (suite == "poisson") return suite_poisson(a);
    if (suite == "explicit") return suite_explicit(a, seed);
    if (suite == "diagram") return suite_diagram(a, seed);
    if (suite == "tate-iwasawa") return suite_tate_iwasawa(a);
    if (suite == "all") {
        std::vector<CheckEntry> out = suite_poisson(a);
        auto e = suite_explicit(a, seed);
        out.insert(out.end(), e.begin(), e.end());
        auto d = suite_diagram(a, seed);
        out.insert(out.end(), d.begin(), d.end());
        auto t = suite_tate_iwasawa(a);
        out.insert(out.end(), t.begin(), t.end());
        auto zc = zeta_checks(a);
        out.insert(out.end(), zc.begin(), zc.end());
        return out;
    }
    fail(errc::invalid_argument, "unknown suite '" + suite + "'");
}

// ---- report assembly ------------------------------------------------------------

namespace {

nlohmann::json curve_json(const CurveModel& c)
{
    nlohmann::json j;
    j["name"] = c.name;
    j["model"] = curve_kind_name(c.kind);
    j["p"] = c.base->p();
    j["k"] = c.base->k();
    j["q"] = c.q();
    j["genus"] = c.genus;
    j["id"] = c.cache_id();
    return j;
}

nlohmann::json tool_json()
{
    return {{"name", kToolName}, {"version", kToolVersion}};
}

} // namespace

nlohmann::json analyze_report(const CurveAnalysis& a, const std::vector<CheckEntry>& checks,
                              const nlohmann::json& timings)
{
    nlohmann::json j;
    j["tool"] = tool_json();
    j["curve"] = curve_json(a.curve);
    nlohmann::json counts;
    for (int m = 1; m <= a.spectrum.max_degree(); ++m)
        counts[std::to_string(m)] = a.spectrum.n(m).str();
    j["counts"] = counts;

    nlohmann::json zeta;
    nlohmann::json pcoeff = nlohmann::json::array();
    for (const auto& c : a.zeta.P) pcoeff.push_back(c.str());
    zeta["P"] = pcoeff;
    auto res = class_number_and_residues(a.zeta);
    zeta["h"] = res.h.str();
    zeta["residues"] = {{"s0_over_lnq", to_string(res.res0.coeff)},
                        {"s1_over_lnq", to_string(res.res1.coeff)}};
    j["zeta"] = zeta;

    j["checks"] = checks_to_json(checks);
    j["timings"] = timings;
    return j;
}

nlohmann::json verify_report(const CurveAnalysis& a, const std::string& suite,
                             const std::vector<CheckEntry>& checks, const nlohmann::json& timings)
{
    nlohmann::json j;
    j["tool"] = tool_json();
    j["curve"] = curve_json(a.curve);
    j["suite"] = suite;
    j["checks"] = checks_to_json(checks);
    j["timings"] = timings;
    return j;
}

std::vector<CheckEntry> nf_disc_checks(int64_t D, int trunc, nlohmann::json* detail)
{
    std::vector<CheckEntry> out;
    ClassGroupData cg = class_number_bqf(D);

    if (detail) {
        nlohmann::json forms = nlohmann::json::array();
        for (const auto& f : cg.forms) forms.push_back({f.a, f.b, f.c});
        (*detail)["D"] = D;
        (*detail)["h"] = cg.h();
        (*detail)["w"] = cg.w();
        (*detail)["forms"] = forms;
    }

    {
        auto by_chi = ideal_counts(D, 30);
        auto by_forms = ideal_counts_by_forms(D, 30);
        std::string lhs = "[", rhs = "[";
        for (int n = 1; n <= 30; ++n) {
            lhs += std::to_string(by_chi[static_cast<size_t>(n)]) + ",";
            rhs += std::to_string(by_forms[static_cast<size_t>(n)]) + ",";
        }
        out.push_back(exact_check("ideal_counts_two_paths", lhs + "]", rhs + "]"));
        if (detail) {
            (*detail)["a"] = std::vector<int64_t>(by_chi.begin() + 1, by_chi.end());
        }
    }

    for (double y : {1.0, 0.5}) {
        auto th = theta_checks(D, y, trunc);
        out.push_back(numeric_check("theta_functional_equation y=" + dbl(y), th.rel_err, 1e-10));
        if (detail) (*detail)["theta_trunc_y=" + dbl(y)] = th.truncation;
    }
    {
        // fixed point of y -> 1/(Dy)
        auto th = theta_checks(D, 1.0 / std::sqrt(static_cast<double>(D)), trunc);
        out.push_back(numeric_check("theta_fixed_point", th.rel_err, 1e-12));
    }
    {
        auto ri = residue_identity_check(D, trunc);
        out.push_back(numeric_check("residue_identity", ri.abs_err, 1e-10));
        if (detail) {
            (*detail)["residue_lhs"] = ri.lhs;
            (*detail)["residue_rhs"] = ri.rhs;
        }
    }
    {
        double ha = analytic_class_number(D);
        out.push_back(numeric_check("analytic_class_number",
                                    std::abs(ha - static_cast<double>(cg.h())),
                                    0.01 * static_cast<double>(cg.h())));
        if (detail) (*detail)["h_analytic"] = ha;
    }
    return out;
}

std::vector<CheckEntry> nf_riemann_checks(std::complex<double> s, int trunc, nlohmann::json* detail)
{
    std::vector<CheckEntry> out;
    auto xi = riemann_xi(s, trunc);
    auto xi_ref = riemann_xi(std::complex<double>(1.0, 0.0) - s, trunc);
    out.push_back(numeric_check("xi_functional_equation", std::abs(xi - xi_ref), 1e-9));
    if (std::abs(s - std::complex<double>(2.0, 0.0)) < 1e-15)
        out.push_back(numeric_check("xi_at_2", std::abs(xi.real() - M_PI / 6.0), 1e-9));
    if (std::abs(s - std::complex<double>(0.5, 0.0)) < 1e-15)
        out.push_back(numeric_check("xi_real_on_critical_point", std::abs(xi.imag()), 1e-12));
    if (detail) {
        (*detail)["s"] = {s.real(), s.imag()};
        (*detail)["xi"] = {xi.real(), xi.imag()};
        (*detail)["xi_mirror"] = {xi_ref.real(), xi_ref.imag()};
    }
    return out;
}

std::vector<CheckEntry> nf_gaussian_checks(nlohmann::json* detail)
{
    std::vector<CheckEntry> out;
    struct Case {
        double a;
        int n;
        std::complex<double> s;
    };
    const Case cases[] = {{1.0, 0, {2.0, 0.0}},
                          {2.0, 1, {2.0, 0.0}},
                          {0.5, 0, {1.5, 0.5}},
                          {1.0, 1, {2.0, 0.0}}};
    int idx = 0;
    for (const auto& c : cases) {
        auto rep = gaussian_checks(c.a, c.n, c.s);
        std::string tag = " case#" + std::to_string(idx++);
        out.push_back(numeric_check("gaussian_fourier" + tag, rep.fourier_sup_err, 1e-8));
        out.push_back(numeric_check("gaussian_mellin" + tag, rep.mellin_rel_err, 1e-8));
        double worst = std::max({rep.poisson_err[0], rep.poisson_err[1], rep.poisson_err[2]});
        out.push_back(numeric_check("gaussian_poisson" + tag, worst, 1e-10));
        if (detail)
            (*detail)["case" + std::to_string(idx - 1)] = {{"fourier_sup_err", rep.fourier_sup_err},
                                                           {"mellin_rel_err", rep.mellin_rel_err}};
    }
    return out;
}

nlohmann::json error_object(const std::string& type, const std::string& message)
{
    nlohmann::json j;
    j["error"] = {{"type", type}, {"message", message}};
    return j;
}

} // namespace zetalab
