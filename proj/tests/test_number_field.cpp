#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "util.hpp"

#include "zetalab/number_field.hpp"

using namespace zetalab;

TEST_CASE("class numbers from reduced forms")
{
    const int64_t discs[] = {3, 4, 7, 8, 11, 15, 20, 23};
    const int64_t hs[] = {1, 1, 1, 1, 1, 2, 2, 3};
    for (size_t i = 0; i < 8; ++i) CHECK(class_number_bqf(discs[i]).h() == hs[i]);

    auto d3 = class_number_bqf(3);
    REQUIRE(d3.forms.size() == 1);
    CHECK(d3.forms[0].a == 1);
    CHECK(d3.forms[0].b == 1);
    CHECK(d3.forms[0].c == 1);

    auto d23 = class_number_bqf(23);
    REQUIRE(d23.forms.size() == 3);
    bool has116 = false, has213 = false, has2m13 = false;
    for (const auto& f : d23.forms) {
        if (f.a == 1 && f.b == 1 && f.c == 6) has116 = true;
        if (f.a == 2 && f.b == 1 && f.c == 3) has213 = true;
        if (f.a == 2 && f.b == -1 && f.c == 3) has2m13 = true;
    }
    CHECK(has116);
    CHECK(has213);
    CHECK(has2m13);

    auto d4 = class_number_bqf(4);
    REQUIRE(d4.forms.size() == 1);
    CHECK(d4.forms[0].b == 0);
}

TEST_CASE("unit counts")
{
    CHECK(class_number_bqf(3).w() == 6);
    CHECK(class_number_bqf(4).w() == 4);
    CHECK(class_number_bqf(7).w() == 2);
}

TEST_CASE("non-fundamental discriminants are rejected")
{
    for (int64_t d : {12, 16, 27, 9, 5})
        CHECK_THROWS_WITH_AS(class_number_bqf(d), doctest::Contains("InvalidDiscriminant"), error);
}

TEST_CASE("ideal counts, character examples")
{
    auto a4 = ideal_counts(4, 10);
    CHECK(a4[1] == 1);
    CHECK(a4[2] == 1);
    CHECK(a4[3] == 0);
    CHECK(a4[5] == 2);
    auto a3 = ideal_counts(3, 10);
    CHECK(a3[1] == 1);
    CHECK(a3[3] == 1);
    CHECK(a3[7] == 2);
}

TEST_CASE("ideal counts agree with the norm-form enumeration oracle")
{
    for (int64_t D : {3, 4, 7, 8, 11, 15, 20, 23})
        CHECK(ideal_counts(D, 30) == ideal_counts_by_forms(D, 30));
}

TEST_CASE("analytic class-number cross-check within one percent")
{
    for (int64_t D : {3, 4, 7, 8, 11, 15, 20, 23}) {
        auto cg = class_number_bqf(D);
        double ha = analytic_class_number(D);
        CHECK(std::abs(ha - static_cast<double>(cg.h())) <= 0.01 * static_cast<double>(cg.h()));
    }
}

TEST_CASE("theta functional equation")
{
    CHECK(theta_checks(3, 1.0, 1).rel_err < 1e-10);
    CHECK(theta_checks(4, 0.5, 1).rel_err < 1e-10);
    // fixed point y = 1/sqrt(D)
    CHECK(theta_checks(23, 1.0 / std::sqrt(23.0), 1).rel_err < 1e-12);
    CHECK_THROWS_WITH_AS(theta_checks(3, -1.0, 1), doctest::Contains("InvalidArgument"), error);
}

TEST_CASE("theta truncation is certified")
{
    auto rep = theta_checks(23, 1.0, 1);
    CHECK(rep.tail_bound < 1e-14 * rep.theta);
}

TEST_CASE("residue identity of the completed Dedekind zeta")
{
    for (int64_t D : {3, 4, 23}) {
        auto rep = residue_identity_check(D, 1);
        CHECK(rep.abs_err < 1e-10);
        CHECK(rep.tail_bound < 1e-12);
    }
}

TEST_CASE("xi at 2 equals pi/6")
{
    auto v = riemann_xi({2.0, 0.0}, 8);
    CHECK(std::abs(v.real() - M_PI / 6.0) < 1e-9);
    CHECK(std::abs(v.imag()) < 1e-12);
}

TEST_CASE("xi functional equation on a sample of points")
{
    const std::complex<double> samples[] = {{2, 0},   {3, 0},    {0.5, 7},  {-1.5, 0}, {4, 1},
                                            {0.25, 2}, {0.75, -2}, {5, 5},   {1.5, 3},  {2.5, 0.5}};
    for (auto s : samples)
        CHECK(std::abs(riemann_xi(s, 8) - riemann_xi(std::complex<double>(1, 0) - s, 8)) < 1e-9);
}

TEST_CASE("xi is real at the symmetry point")
{
    CHECK(std::abs(riemann_xi({0.5, 0.0}, 8).imag()) < 1e-12);
    // and matches the gamma-factor product there
    CHECK(std::abs(riemann_xi({0.5, 0.0}, 8).real() - (-3.976966225506513)) < 1e-9);
}

TEST_CASE("xi poles are reported")
{
    CHECK_THROWS_WITH_AS(riemann_xi({0.0, 0.0}, 4), doctest::Contains("PoleError"), error);
    CHECK_THROWS_WITH_AS(riemann_xi({1.0, 0.0}, 4), doctest::Contains("PoleError"), error);
}

TEST_CASE("Gaussian self-duality, Mellin value, Poisson summation")
{
    auto rep = gaussian_checks(1.0, 0, {2.0, 0.0});
    CHECK(rep.fourier_sup_err < 1e-8);
    CHECK(rep.mellin_rel_err < 1e-8);
    for (double e : rep.poisson_err) CHECK(e < 1e-10);

    // n=1, a=1, s=2: the integral is Gamma(2)/2 = 1/2
    auto rep2 = gaussian_checks(1.0, 1, {2.0, 0.0});
    CHECK(std::abs(rep2.mellin_target - std::complex<double>(0.5, 0.0)) < 1e-12);
    CHECK(std::abs(rep2.mellin_value - std::complex<double>(0.5, 0.0)) < 1e-8);

    auto rep3 = gaussian_checks(2.0, 0, {1.5, 0.5});
    CHECK(rep3.fourier_sup_err < 1e-8);
    CHECK(rep3.mellin_rel_err < 1e-8);

    CHECK_THROWS_WITH_AS(gaussian_checks(-1.0, 0, {2.0, 0.0}), doctest::Contains("InvalidArgument"),
                         error);
    CHECK_THROWS_WITH_AS(gaussian_checks(1.0, 0, {-3.0, 0.0}), doctest::Contains("InvalidArgument"),
                         error);
}

TEST_CASE("complex gamma function reference values")
{
    CHECK(std::abs(lanczos_gamma({1.0, 0.0}) - std::complex<double>(1.0, 0.0)) < 1e-13);
    CHECK(std::abs(lanczos_gamma({5.0, 0.0}) - std::complex<double>(24.0, 0.0)) < 1e-11);
    CHECK(std::abs(lanczos_gamma({0.5, 0.0}) - std::complex<double>(std::sqrt(M_PI), 0.0)) < 1e-13);
}

TEST_CASE("Kronecker symbol basics")
{
    // chi_{-4} is the nontrivial character mod 4
    CHECK(kronecker(Int(-4), Int(1)) == 1);
    CHECK(kronecker(Int(-4), Int(3)) == -1);
    CHECK(kronecker(Int(-4), Int(5)) == 1);
    CHECK(kronecker(Int(-4), Int(2)) == 0);
    // chi_{-8}(3) = (-8|3) = (1|3) = 1; chi_{-8}(5) = (-8|5) = (2|5) = -1
    CHECK(kronecker(Int(-8), Int(3)) == 1);
    CHECK(kronecker(Int(-8), Int(5)) == -1);
    // multiplicativity over a small range
    for (int64_t m = 1; m <= 20; ++m)
        for (int64_t n = 1; n <= 20; ++n)
            CHECK(kronecker(Int(-23), Int(m * n)) ==
                  kronecker(Int(-23), Int(m)) * kronecker(Int(-23), Int(n)));
}
