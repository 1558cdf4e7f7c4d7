#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "util.hpp"

#include "zetalab/explicit_formula.hpp"

using namespace zetalab;

namespace {
GradedFunction delta_d(int64_t q, int m, Rat c = Rat(1))
{
    return GradedFunction::delta(GradedSpace::d, q, m, HPS(c));
}
} // namespace

TEST_CASE("power sums of 1 + 2t^2")
{
    ZetaData e{2, 1, {Int(1), Int(0), Int(2)}};
    auto t = power_sums(e, 4);
    CHECK(t.s_pos[0] == Rat(2));
    CHECK(t.s_pos[1] == Rat(0));
    CHECK(t.s_pos[2] == Rat(-4));
    CHECK(t.s_neg[1] == Rat(0));
    CHECK(t.s_neg[2] == Rat(-1));
}

TEST_CASE("power sums of the trivial numerator vanish")
{
    ZetaData p1{3, 0, {Int(1)}};
    auto t = power_sums(p1, 6);
    for (int n = 1; n <= 6; ++n) {
        CHECK(t.s_pos[static_cast<size_t>(n)] == 0);
        CHECK(t.s_neg[static_cast<size_t>(n)] == 0);
    }
}

TEST_CASE("positive and negative power sums pair through the functional equation")
{
    for (const auto& name : testutil::curve_names()) {
        const ZetaData& z = testutil::analysis(name).zeta;
        auto t = power_sums(z, 12);
        for (int n = 1; n <= 12; ++n)
            CHECK(t.s_neg[static_cast<size_t>(n)] ==
                  rat_pow(Int(z.q), -n) * t.s_pos[static_cast<size_t>(n)]);
    }
}

TEST_CASE("Newton sums agree with the numeric roots")
{
    for (const auto& name : testutil::curve_names()) {
        const ZetaData& z = testutil::analysis(name).zeta;
        if (z.g == 0) continue;
        auto t = power_sums(z, 8);
        auto roots = numeric_inverse_roots(z);
        for (int n = 1; n <= 8; ++n) {
            std::complex<double> s = 0;
            for (const auto& lam : roots) s += std::pow(lam, n);
            CHECK(std::abs(s - std::complex<double>(to_double(t.s_pos[static_cast<size_t>(n)]), 0)) <
                  1e-8 * std::max(1.0, std::abs(to_double(t.s_pos[static_cast<size_t>(n)]))));
        }
    }
}

TEST_CASE("explicit formula anchor: the line with f = delta_1")
{
    const auto& a = testutil::analysis("p1_f2");
    auto sides = explicit_formula_sides(delta_d(2, 1), a.zeta, a.spectrum.a);
    CHECK(sides.ok);
    CHECK(sides.lhs == HPS(Rat(3, 2)));
    CHECK(sides.rhs == HPS(Rat(3, 2)));
}

TEST_CASE("explicit formula anchor: elliptic with f = delta_2")
{
    const auto& a = testutil::analysis("e_f2");
    auto sides = explicit_formula_sides(delta_d(2, 2), a.zeta, a.spectrum.a);
    CHECK(sides.ok);
    CHECK(sides.lhs == HPS(Rat(9, 4)));
    CHECK(sides.rhs == HPS(Rat(9, 4)));
}

TEST_CASE("explicit formula holds on the zero function")
{
    const auto& a = testutil::analysis("e_f3");
    auto sides = explicit_formula_sides(GradedFunction::zero(GradedSpace::d, 3), a.zeta,
                                        a.spectrum.a);
    CHECK(sides.ok);
    CHECK(sides.lhs.is_zero());
    CHECK(sides.rhs.is_zero());
}

TEST_CASE("explicit formula on random test functions, every curve")
{
    for (const auto& name : testutil::curve_names()) {
        const auto& a = testutil::analysis(name);
        SuiteRng rng(41);
        for (int i = 0; i < 20; ++i) {
            std::map<int, HPS> vals;
            for (int t = 0; t < 4; ++t) vals[rng.uniform(-6, 6)] = HPS(rng.rational());
            int hi = vals.empty() ? 0 : vals.rbegin()->first + 1;
            auto f = GradedFunction::build(GradedSpace::d, a.curve.q(), std::move(vals), hi,
                                           HPS(0), HPS(0));
            CHECK(explicit_formula_sides(f, a.zeta, a.spectrum.a).ok);
        }
    }
}

TEST_CASE("spectrum shorter than the support is reported")
{
    const auto& a = testutil::analysis("e_f2");
    std::vector<Int> short_table(a.spectrum.a.begin(), a.spectrum.a.begin() + 4);
    CHECK_THROWS_WITH_AS(explicit_formula_sides(delta_d(2, 7), a.zeta, short_table),
                         doctest::Contains("NeedMoreCounts"), error);
}

TEST_CASE("unramified local distribution")
{
    auto f = delta_d(2, 1) + delta_d(2, -1);
    CHECK(artin_unramified(f, 2) == HPS(3));
    CHECK(artin_unramified(delta_d(2, 0), 2).is_zero());
    CHECK(artin_unramified(delta_d(3, -3), 3) == HPS(27));
}

TEST_CASE("trace identity against out-of-sample counts")
{
    const auto& a = testutil::analysis("e_f2");
    std::map<int, Int> extra;
    for (int m = 3; m <= 6; ++m) extra[m] = a.spectrum.n(m);
    for (const auto& c : lefschetz_check(a.zeta, extra)) CHECK(c.ok);
    CHECK_THROWS_WITH_AS(lefschetz_check(a.zeta, {}), doctest::Contains("InvalidArgument"), error);
}

TEST_CASE("prime counting on the line over F_2")
{
    const auto& a = testutil::analysis("p1_f2"); // counted to degree 12
    auto rep = prime_counting_report(a.spectrum.a, 12, 2);
    CHECK(a.spectrum.a[12] == 335);
    CHECK(std::abs(rep.degree_ratio - 335.0 * 12 / 4096.0) < 1e-12);
    CHECK(std::abs(rep.degree_ratio - 1.0) < 0.05);

    auto rep1 = prime_counting_report(a.spectrum.a, 1, 2);
    CHECK(rep1.pi_n == 3);
}

TEST_CASE("elliptic curve over F_2: degree ratio at depth ten within five percent")
{
    const auto& a = testutil::analysis("e_f2");
    auto rep = prime_counting_report(a.spectrum.a, 10, 2);
    CHECK(std::abs(rep.degree_ratio - 1.0) < 0.05);
}

TEST_CASE("closed points equidistribute at the counted depth")
{
    for (const auto& name : testutil::curve_names()) {
        const auto& a = testutil::analysis(name);
        int m = a.spectrum.max_degree();
        auto rep = prime_counting_report(a.spectrum.a, m, a.curve.q());
        double rq = std::sqrt(static_cast<double>(a.curve.q()));
        double bound = 3.0 * a.curve.genus * std::pow(rq, -m) + std::pow(rq, -m + 2);
        CHECK(std::abs(rep.degree_ratio - 1.0) <= bound);
    }
}
