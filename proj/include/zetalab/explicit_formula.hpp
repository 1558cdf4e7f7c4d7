#pragma once

#include "zetalab/curve.hpp"
#include "zetalab/graded.hpp"
#include "zetalab/zeta.hpp"

#include <vector>

namespace zetalab {

// s_n = sum lambda^n and s_{-n} over the inverse roots of P, exact. The
// functional equation pairs lambda with q/lambda, so s_{-n} = q^{-n} s_n.
struct PowerSumTable {
    int64_t q = 0;
    std::vector<Int> P;
    std::vector<Rat> s_pos; // s_pos[n] = s_n, n = 0..n_max, s_0 = 2g
    std::vector<Rat> s_neg; // s_neg[n] = s_{-n}

    Rat s(int n) const
    {
        return n >= 0 ? s_pos.at(static_cast<size_t>(n)) : s_neg.at(static_cast<size_t>(-n));
    }
};

PowerSumTable power_sums(const ZetaData& z, int n_max);

struct ExplicitFormulaSides {
    HPS lhs; // M f at q^{-1} and 1, minus the sum over the zeta zeros
    HPS rhs; // (2-2g) f(0) + the closed-point sum
    bool ok = false;
};

// Both sides of the explicit formula for a finitely supported f; the point
// sum enters with a plus sign (the log-derivative of Z has positive
// coefficients at 0; the minus sign sometimes quoted does not balance even
// for the projective line).
ExplicitFormulaSides explicit_formula_sides(const GradedFunction& f, const ZetaData& z,
                                            const std::vector<Int>& a_table);

// Unramified local distribution sum_{n>=1} [f(n) + q_x^n f(-n)], vol(O*) = 1.
HPS artin_unramified(const GradedFunction& f, int64_t q_x);

struct LefschetzCheck {
    int m = 0;
    Int counted, predicted;
    bool ok = false;
};

// N_m = 1 + q^m - s_m against supplied out-of-sample counts.
std::vector<LefschetzCheck> lefschetz_check(const ZetaData& z,
                                            const std::map<int, Int>& extra_counts);

struct PrimeCountingReport {
    int m = 0;
    Int pi_n;            // number of closed points of degree <= m
    double n_over_log;   // pi_N * ln N / N at N = q^m
    double degree_ratio; // a_m * m / q^m, -> 1
};

PrimeCountingReport prime_counting_report(const std::vector<Int>& a_table, int m, int64_t q);

} // namespace zetalab
