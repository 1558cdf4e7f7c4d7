#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "util.hpp"

#include "zetalab/curve.hpp"

using namespace zetalab;

namespace {

// independent affine enumeration of y^2 + h(x) y = f(x) over F_{p^n}
Int oracle_count(int64_t p, int n, const std::vector<int64_t>& f, const std::vector<int64_t>& h)
{
    FieldSpec ext = FieldSpec::build(p, n);
    std::vector<FieldCoeffs> fl, hl;
    for (auto c : f) fl.push_back(ext.from_int(c));
    for (auto c : h) hl.push_back(ext.from_int(c));
    Int total = 0;
    for (int64_t i = 0; i < ext.q(); ++i)
        for (int64_t j = 0; j < ext.q(); ++j) {
            FieldCoeffs x = ext.element(i), y = ext.element(j);
            FieldCoeffs lhs = ext.mul(y, y);
            if (!hl.empty()) lhs = ext.add(lhs, ext.mul(ext.eval_poly(hl, x), y));
            if (lhs == ext.eval_poly(fl, x)) total += 1;
        }
    return total;
}

} // namespace

TEST_CASE("parse elliptic model")
{
    auto c = parse_curve("[curve]\nname = e\nmodel = elliptic\np = 2\nk = 1\nh = [1]\nf = [0,0,0,1]\n");
    CHECK(c.kind == CurveKind::elliptic);
    CHECK(c.genus == 1);
    CHECK(c.q() == 2);
}

TEST_CASE("any degree-one h parses as a genus-1 model")
{
    auto c = parse_curve("[curve]\nmodel = elliptic\np = 2\nk = 1\nh = [0,1]\nf = [0,0,0,1]\n");
    CHECK(c.genus == 1);
}

TEST_CASE("parse hyperelliptic model with negative coefficients")
{
    auto c = parse_curve("[curve]\nmodel = hyperelliptic\np = 5\nk = 1\nf = [0,-1,0,0,0,1]\n");
    CHECK(c.genus == 2);
    CHECK(c.f == std::vector<int64_t>{0, 4, 0, 0, 0, 1});
}

TEST_CASE("parse plane model with a monomial list")
{
    auto c = parse_curve(
        "[curve]\nname = fermat\nmodel = plane\np = 2\nk = 1\n"
        "poly = [[3,0,0,1],[0,3,0,1],[0,0,3,1]]\n");
    CHECK(c.kind == CurveKind::plane);
    CHECK(c.plane_degree == 3);
    CHECK(c.genus == 1);
    CHECK(count_points(c, 1) == 3);
}

TEST_CASE("squarefree check rejects f = x^4")
{
    CHECK_THROWS_WITH_AS(
        parse_curve("[curve]\nmodel = hyperelliptic\np = 5\nk = 1\nf = [0,0,0,0,1]\n"),
        doctest::Contains("InvalidCurve"), error);
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_WITH_AS(parse_curve("nonsense"), doctest::Contains("ParseError"), error);
    CHECK_THROWS_WITH_AS(parse_curve("[curve]\nmodel = elliptic\np = 2\n"),
                         doctest::Contains("ParseError"), error);
    CHECK_THROWS_WITH_AS(parse_curve("[curve]\nmodel = weierstrass\np = 2\nk = 1\n"),
                         doctest::Contains("ParseError"), error);
}

TEST_CASE("reference line over F_3 has q^m + 1 points")
{
    auto c = make_p1(3, 1);
    CHECK(count_points(c, 2) == 10);
    CHECK(count_points(c, 4) == 82);
}

TEST_CASE("point counts match the exhaustive pair oracle")
{
    auto c = testutil::load_curve("e_f2");
    CHECK(count_points(c, 1) == oracle_count(2, 1, c.f, c.h) + 1);
    CHECK(count_points(c, 1) == 3);
    CHECK(count_points(c, 2) == oracle_count(2, 2, c.f, c.h) + 1);
    CHECK(count_points(c, 2) == 9);

    auto h5 = testutil::load_curve("h_f5");
    CHECK(count_points(h5, 1) == oracle_count(5, 1, h5.f, h5.h) + 1);
    CHECK(count_points(h5, 2) == oracle_count(5, 2, h5.f, h5.h) + 1);

    auto e3 = testutil::load_curve("e_f3");
    CHECK(count_points(e3, 1) == oracle_count(3, 1, e3.f, e3.h) + 1);
    CHECK(count_points(e3, 2) == oracle_count(3, 2, e3.f, e3.h) + 1);
}

TEST_CASE("plane Fermat cubic over F_2")
{
    auto c = make_plane(2, 1,
                        {{3, 0, 0, 1}, {0, 3, 0, 1}, {0, 0, 3, 1}});
    CHECK(c.genus == 1);
    CHECK(count_points(c, 1) == 3);
    // its counts must satisfy the Weil bound for genus 1
    for (int m = 1; m <= 4; ++m) {
        double nm = count_points(c, m).convert_to<double>();
        double qm = std::pow(2.0, m);
        CHECK(std::abs(nm - (qm + 1.0)) <= 2.0 * std::sqrt(qm) + 1e-6);
    }
}

TEST_CASE("a plane line counts like the reference model")
{
    auto line = make_plane(2, 1, {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
    CHECK(line.genus == 0);
    for (int m = 1; m <= 4; ++m)
        CHECK(count_points(line, m) == count_points(make_p1(2, 1), m));
}

TEST_CASE("singular plane curve is rejected")
{
    // xyz = 0 has singular points wherever two coordinates vanish
    CHECK_THROWS_WITH_AS(make_plane(2, 1, {{1, 1, 1, 1}}), doctest::Contains("InvalidCurve"),
                         error);
}

TEST_CASE("closed-point spectrum for the line over F_2")
{
    std::vector<Int> counts = {3, 5, 9, 17, 33};
    auto t = closed_point_spectrum(counts);
    CHECK(t.a[1] == 3);
    CHECK(t.a[2] == 1);
    CHECK(t.a[3] == 2);
    CHECK(t.b[0] == 1);
    CHECK(t.b[2] == 7); // 2^3 - 1
}

TEST_CASE("spectrum for y^2 + y = x^3 over F_2")
{
    auto t = closed_point_spectrum({Int(3), Int(9)});
    CHECK(t.a[1] == 3);
    CHECK(t.a[2] == 3);
    CHECK(t.b[2] == 9);
}

TEST_CASE("Moebius round trip reproduces the counts")
{
    for (const auto& name : testutil::curve_names()) {
        const auto& a = testutil::analysis(name);
        for (int m = 1; m <= a.spectrum.max_degree(); ++m) {
            Int rebuilt = 0;
            for (int l = 1; l <= m; ++l)
                if (m % l == 0) rebuilt += Int(l) * a.spectrum.a[static_cast<size_t>(l)];
            CHECK(rebuilt == a.spectrum.n(m));
        }
    }
}

TEST_CASE("inconsistent counts are rejected")
{
    CHECK_THROWS_WITH_AS(closed_point_spectrum({Int(3), Int(2)}),
                         doctest::Contains("InconsistentCounts"), error);
}

TEST_CASE("count cache round trip and cache hits")
{
    std::string dir = ".";
    auto c = testutil::load_curve("e_f2");
    std::string path = dir + "/" + c.cache_id() + ".counts";
    std::remove(path.c_str());

    auto counts = counts_up_to(c, 3, dir);
    CHECK(counts == std::vector<Int>{3, 9, 9});
    auto cached = load_count_cache(path);
    CHECK(cached.size() == 3);
    CHECK(cached[2] == 9);

    // a poisoned entry coming back proves the cache is actually read
    cached[2] = 1234;
    save_count_cache(path, cached);
    auto again = counts_up_to(c, 3, dir);
    CHECK(again[1] == 1234);
    std::remove(path.c_str());
}
