#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "util.hpp"

#include "zetalab/field.hpp"

#include <set>

using namespace zetalab;

TEST_CASE("prime field F_2 uses the sentinel modulus x")
{
    auto f = FieldSpec::build(2, 1);
    CHECK(f.q() == 2);
    CHECK(f.modulus() == std::vector<int64_t>{0, 1});
}

TEST_CASE("F_4 gets the unique monic irreducible quadratic")
{
    auto f = FieldSpec::build(2, 2);
    CHECK(f.q() == 4);
    CHECK(f.modulus() == std::vector<int64_t>{1, 1, 1});
}

TEST_CASE("F_9 modulus passes the exhaustive root-search oracle")
{
    auto f = FieldSpec::build(3, 2);
    CHECK(f.q() == 9);
    REQUIRE(f.modulus().size() == 3);
    CHECK(f.modulus()[2] == 1);
    // a rootless quadratic over F_3 is irreducible
    auto base = FieldSpec::build(3, 1);
    for (int64_t i = 0; i < 3; ++i) {
        FieldCoeffs x = base.element(i);
        std::vector<FieldCoeffs> lifted;
        for (int64_t c : f.modulus()) lifted.push_back(base.from_int(c));
        CHECK(!base.is_zero(base.eval_poly(lifted, x)));
    }
}

TEST_CASE("construction rejects bad input")
{
    CHECK_THROWS_WITH_AS(FieldSpec::build(4, 1), doctest::Contains("InvalidPrime"), error);
    CHECK_THROWS_WITH_AS(FieldSpec::build(2, 25), doctest::Contains("TooLarge"), error);
    CHECK_THROWS_WITH_AS(FieldSpec::build(1031, 2), doctest::Contains("TooLarge"), error);
}

TEST_CASE("arithmetic in F_4")
{
    auto f = FieldSpec::build(2, 2);
    FieldCoeffs u = f.gen();
    FieldCoeffs u1 = f.add(u, f.one());
    CHECK(f.mul(u, u1) == f.one());       // forced by u^2 = u + 1
    CHECK(f.inv(u) == u1);
    CHECK(f.pow(u, 4) == u);
    CHECK_THROWS_WITH_AS(f.inv(f.zero()), doctest::Contains("DivisionByZero"), error);

    auto f2 = FieldSpec::build(2, 1);
    CHECK_THROWS_WITH_AS(f.mul(u, f2.one()), doctest::Contains("SpecMismatch"), error);
}

TEST_CASE("Frobenius iterated k times fixes every element")
{
    struct Pk {
        int64_t p;
        int k;
    };
    for (auto [p, k] : {Pk{2, 1}, Pk{2, 2}, Pk{2, 4}, Pk{3, 2}, Pk{5, 2}, Pk{7, 1}}) {
        auto f = FieldSpec::build(p, k);
        for (int64_t i = 0; i < f.q(); ++i) {
            FieldCoeffs x = f.element(i);
            FieldCoeffs y = x;
            for (int j = 0; j < k; ++j) y = f.pow(y, static_cast<uint64_t>(p));
            CHECK(y == x);
        }
    }
}

TEST_CASE("every nonzero element has a working inverse")
{
    for (auto f : {FieldSpec::build(2, 4), FieldSpec::build(3, 2), FieldSpec::build(2, 3)}) {
        for (int64_t i = 1; i < f.q(); ++i) {
            FieldCoeffs a = f.element(i);
            CHECK(f.mul(a, f.inv(a)) == f.one());
        }
    }
}

TEST_CASE("enumeration lists q distinct elements")
{
    auto small = FieldSpec::build(2, 2);
    auto big = FieldSpec::build(2, 4);
    auto res = enumerate_and_embed(small, big);
    CHECK(res.elements.size() == 16);
    std::set<FieldCoeffs> seen(res.elements.begin(), res.elements.end());
    CHECK(seen.size() == 16);
}

TEST_CASE("embedding F_4 -> F_16 is a field homomorphism")
{
    auto small = FieldSpec::build(2, 2);
    auto big = FieldSpec::build(2, 4);
    auto res = enumerate_and_embed(small, big);

    // the image of the generator is a root of the small modulus
    std::vector<FieldCoeffs> lifted;
    for (int64_t c : small.modulus()) lifted.push_back(big.from_int(c));
    CHECK(big.is_zero(big.eval_poly(lifted, res.embedding.gen_image)));

    for (int64_t i = 0; i < small.q(); ++i)
        for (int64_t j = 0; j < small.q(); ++j) {
            FieldCoeffs a = small.element(i), b = small.element(j);
            CHECK(res.embedding.map(small.add(a, b)) ==
                  big.add(res.embedding.map(a), res.embedding.map(b)));
            CHECK(res.embedding.map(small.mul(a, b)) ==
                  big.mul(res.embedding.map(a), res.embedding.map(b)));
        }
}

TEST_CASE("prime field embeds identically")
{
    auto small = FieldSpec::build(2, 1);
    auto big = FieldSpec::build(2, 2);
    auto res = enumerate_and_embed(small, big);
    CHECK(res.embedding.map(small.zero()) == big.zero());
    CHECK(res.embedding.map(small.one()) == big.one());
}

TEST_CASE("no embedding F_4 -> F_8")
{
    auto small = FieldSpec::build(2, 2);
    auto big = FieldSpec::build(2, 3);
    CHECK_THROWS_WITH_AS(enumerate_and_embed(small, big), doctest::Contains("NoEmbedding"), error);
}

TEST_CASE("quadratic irreducibility agrees with the residue criterion mod 5")
{
    CHECK(poly_fp::is_irreducible({3, 0, 1}, 5));  // x^2 + 3: -3 = 2 is a non-residue
    CHECK(!poly_fp::is_irreducible({1, 0, 1}, 5)); // x^2 + 1 = (x+2)(x+3)
}
