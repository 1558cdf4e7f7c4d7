#include "zetalab/explicit_formula.hpp"

#include <cmath>

namespace zetalab {

PowerSumTable power_sums(const ZetaData& z, int n_max)
{
    if (n_max < 1) fail(errc::invalid_argument, "n_max must be >= 1");
    PowerSumTable t;
    t.q = z.q;
    t.P = z.P;

    std::vector<Rat> poly;
    for (const auto& c : z.P) poly.emplace_back(c);
    t.s_pos = power_sums_of_inverse_roots(poly, n_max);
    t.s_pos[0] = Rat(2 * z.g);

    // reciprocal polynomial: inverse roots 1/lambda, coefficients a_{2g-i}/a_{2g}
    const size_t deg = z.P.size() - 1;
    std::vector<Rat> recip(deg + 1);
    for (size_t i = 0; i <= deg; ++i)
        recip[i] = Rat(z.P[deg - i], z.P[deg]);
    t.s_neg = power_sums_of_inverse_roots(recip, n_max);
    t.s_neg[0] = Rat(2 * z.g);
    return t;
}

ExplicitFormulaSides explicit_formula_sides(const GradedFunction& f, const ZetaData& z,
                                            const std::vector<Int>& a_table)
{
    if (f.space() != GradedSpace::d)
        fail(errc::space_mismatch, "test function must be finitely supported");

    ExplicitFormulaSides out;
    int n_max = 0;
    for (const auto& [n, v] : f.explicit_values()) n_max = std::max(n_max, std::abs(n));

    if (n_max > 0 && static_cast<int>(a_table.size()) - 1 < n_max)
        fail(errc::need_more_counts,
             "closed-point spectrum known only to degree " + std::to_string(a_table.size() - 1));

    // lhs = Mf(q^{-1}) + Mf(1) - sum_m f(m) s_{-m}
    PowerSumTable ps = n_max > 0 ? power_sums(z, n_max) : PowerSumTable{z.q, z.P, {Rat(2 * z.g)}, {Rat(2 * z.g)}};
    HPS lhs(0);
    for (const auto& [m, v] : f.explicit_values()) {
        lhs += v * HPS(rat_pow(Int(z.q), -m)); // Mf(q^{-1})
        lhs += v;                              // Mf(1)
        lhs += -(v * HPS(ps.s(-m)));
    }
    out.lhs = lhs;

    HPS rhs = f.eval(0) * HPS(Rat(2 - 2 * z.g));
    for (int l = 1; l <= n_max; ++l) {
        if (a_table[static_cast<size_t>(l)] == 0) continue;
        HPS weight{Rat(a_table[static_cast<size_t>(l)] * l)};
        for (int n = 1; n * l <= n_max; ++n) {
            HPS term = f.eval(-n * l) + HPS(rat_pow(Int(z.q), -n * l)) * f.eval(n * l);
            rhs += weight * term;
        }
    }
    out.rhs = rhs;
    out.ok = (out.lhs == out.rhs);
    return out;
}

HPS artin_unramified(const GradedFunction& f, int64_t q_x)
{
    if (f.space() != GradedSpace::d)
        fail(errc::space_mismatch, "distribution is evaluated on finitely supported functions");
    HPS acc(0);
    for (const auto& [n, v] : f.explicit_values()) {
        if (n >= 1) acc += v;
        if (n <= -1) acc += HPS(rat_pow(Int(q_x), -n)) * v;
    }
    return acc;
}

std::vector<LefschetzCheck> lefschetz_check(const ZetaData& z, const std::map<int, Int>& extra_counts)
{
    if (extra_counts.empty()) fail(errc::invalid_argument, "need at least one extra count");
    std::vector<LefschetzCheck> out;
    for (const auto& [m, n] : extra_counts) {
        LefschetzCheck c;
        c.m = m;
        c.counted = n;
        c.predicted = predict_count(z, m);
        c.ok = (c.counted == c.predicted);
        out.push_back(std::move(c));
    }
    return out;
}

PrimeCountingReport prime_counting_report(const std::vector<Int>& a_table, int m, int64_t q)
{
    if (m < 1 || static_cast<int>(a_table.size()) - 1 < m)
        fail(errc::invalid_argument, "spectrum must reach degree m >= 1");
    PrimeCountingReport rep;
    rep.m = m;
    rep.pi_n = 0;
    for (int l = 1; l <= m; ++l) rep.pi_n += a_table[static_cast<size_t>(l)];
    double n_val = std::pow(static_cast<double>(q), m);
    rep.n_over_log = rep.pi_n.convert_to<double>() * std::log(n_val) / n_val;
    rep.degree_ratio = a_table[static_cast<size_t>(m)].convert_to<double>() * m / n_val;
    return rep;
}

} // namespace zetalab
