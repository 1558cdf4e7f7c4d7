#pragma once

#include "zetalab/rational.hpp"

#include <complex>
#include <vector>

namespace zetalab {

// Exact residue of zeta at s = 0 or s = 1: the stored rational c stands for
// the real number c / ln q.
struct ResidueValue {
    Rat coeff;
};

// The pair (q, g) and the integer numerator P(t) of Z(t) = P(t)/((1-t)(1-qt)),
// deg P = 2g, ascending coefficients. Single source of truth for h = P(1),
// series coefficients b_n and the residues.
struct ZetaData {
    int64_t q = 0;
    int g = 0;
    std::vector<Int> P; // length 2g+1

    Int class_number() const; // P(1)
};

// Builds P from exactly the counts N_1..N_{2g} (none for g = 0): exponentiate
// the truncated log-series, multiply by (1-t)(1-qt), truncate at degree 2g.
// Throws CountsInconsistent if any coefficient fails to be an integer.
ZetaData fit_numerator(int64_t q, int g, const std::vector<Int>& counts);

struct FunctionalEquationReport {
    bool symmetric = false;            // a_{2g-i} = q^{g-i} a_i, exact
    std::vector<double> root_moduli;   // |lambda| for the inverse roots of P
};

FunctionalEquationReport functional_equation_check(const ZetaData& z);

// Numeric inverse roots lambda of P, multiplicities split off exactly first.
std::vector<std::complex<double>> numeric_inverse_roots(const ZetaData& z);

struct ResidueReportZeta {
    Int h;
    ResidueValue res0, res1;           // -h/(q-1), q^{1-g} h/(q-1), each / ln q
    Rat laurent_res0, laurent_res1;    // same values from the expansion of Z at t=1, q^{-1}
    bool consistent = false;
};

ResidueReportZeta class_number_and_residues(const ZetaData& z);

// b_0..b_{n_max} of P(t)/((1-t)(1-qt)).
std::vector<Int> series_coefficients(const ZetaData& z, int n_max);

// N_m = 1 + q^m - s_m with s_m = sum of m-th powers of the inverse roots,
// computed exactly by Newton's identities.
Int predict_count(const ZetaData& z, int m);

// s_1..s_{n_max} for the inverse roots of a polynomial prod (1 - lambda t)
// given by ascending coefficients. Exact.
std::vector<Rat> power_sums_of_inverse_roots(const std::vector<Rat>& poly, int n_max);

struct PrincipalPartsReport {
    std::vector<Rat> entire; // E(t) = Z(t) - both pole parts, ascending
    bool ok = false;         // E is a polynomial of degree <= 2g-2
};

PrincipalPartsReport principal_parts_check(const ZetaData& z);

struct TateIwasawaReport {
    int truncation = 0;
    std::vector<Rat> lhs, t_minus, t_fourier, t_c_dual, t_c; // degree 0..N
    bool ok = false;
};

// Coefficientwise identity between the truncated Dirichlet series and its
// four-term regularized decomposition, box weight on |deg| <= N.
TateIwasawaReport tate_iwasawa_decomposition(const ZetaData& z, int truncation);

} // namespace zetalab
