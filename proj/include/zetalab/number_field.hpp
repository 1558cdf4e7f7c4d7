#pragma once

#include "zetalab/rational.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace zetalab {

// Reduced positive-definite binary quadratic form a x^2 + b xy + c y^2 of
// discriminant b^2 - 4ac = -D: -a < b <= a <= c, and b >= 0 when a = c.
struct QuadraticForm {
    int64_t a, b, c;
};

// -D is a fundamental discriminant <= -3.
bool is_fundamental(int64_t D);

struct ClassGroupData {
    int64_t D = 0;
    std::vector<QuadraticForm> forms;
    int64_t h() const { return static_cast<int64_t>(forms.size()); }
    int w() const { return D == 3 ? 6 : D == 4 ? 4 : 2; } // unit count
};

// Class number by exhaustive reduced-form enumeration. Throws
// InvalidDiscriminant when -D is not fundamental.
ClassGroupData class_number_bqf(int64_t D);

// Kronecker symbol (a|n), full 2-adic and sign rules.
int kronecker(Int a, Int n);

// a(n) = sum_{d|n} chi_{-D}(d) for n = 1..n_max.
std::vector<int64_t> ideal_counts(int64_t D, int n_max);

// Independent oracle: norm-form representation counts summed over the class
// group, divided by the unit count.
std::vector<int64_t> ideal_counts_by_forms(int64_t D, int n_max);

// h from the value of L(1, chi_{-D}) by direct character summation; numeric.
double analytic_class_number(int64_t D, int64_t terms = 1000000);

struct ThetaReport {
    double theta = 0;        // theta_K(iy)
    double transformed = 0;  // (1/(y sqrt D)) theta_K(i/(Dy))
    double rel_err = 0;
    int truncation = 0;      // terms actually used
    double tail_bound = 0;   // certified bound on the dropped tail
};

// theta_K(iy) = h/w + sum a(n) e^{-2 pi n y} against its modular transform.
ThetaReport theta_checks(int64_t D, double y, int n_trunc);

struct ResidueIdentityReport {
    double lhs = 0, rhs = 0, abs_err = 0;
    int truncation = 0;
    double tail_bound = 0;
};

// h/w + sum_a e^{-2 pi Nm a} = h/(w sqrt D) + D^{-1/2} sum_a e^{-2 pi Nm a / D}.
ResidueIdentityReport residue_identity_check(int64_t D, int n_trunc);

// Completed Riemann xi as the symmetric incomplete-gamma series
// -1/s + 1/(s-1) + sum_n [E(s/2, pi n^2) + E((1-s)/2, pi n^2)].
std::complex<double> riemann_xi(std::complex<double> s, int n_trunc);

// E(a, x) = int_1^inf t^a e^{-xt} dt/t, continued fraction, complex a.
std::complex<double> incomplete_gamma_e(std::complex<double> a, double x);

std::complex<double> lanczos_gamma(std::complex<double> z);

struct GaussianReport {
    double fourier_sup_err = 0; // F(e^{-pi a x^2}) vs a^{-1/2} e^{-pi y^2 / a} on [-5,5]
    double mellin_rel_err = 0;  // quadrature vs (1/2) a^{-n-s/2} Gamma(s/2+n)
    std::complex<double> mellin_value, mellin_target;
    std::array<double, 3> poisson_err{}; // at t = 1/2, 1, 2
};

GaussianReport gaussian_checks(double a, int n, std::complex<double> s);

} // namespace zetalab
