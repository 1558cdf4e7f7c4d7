#include "zetalab/number_field.hpp"

#include "zetalab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace zetalab {

namespace {

bool squarefree(int64_t n)
{
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

} // namespace

bool is_fundamental(int64_t D)
{
    if (D < 3) return false;
    if (D % 4 == 3) return squarefree(D);                  // -D = 1 mod 4
    if (D % 4 == 0) {
        int64_t m = D / 4;                                 // -D/4 = -m, need = 2,3 mod 4
        return (m % 4 == 1 || m % 4 == 2) && squarefree(m);
    }
    return false;
}

ClassGroupData class_number_bqf(int64_t D)
{
    if (!is_fundamental(D))
        fail(errc::invalid_discriminant, "-" + std::to_string(D) + " is not fundamental");
    ClassGroupData out;
    out.D = D;
    for (int64_t a = 1; 3 * a * a <= D; ++a) {
        for (int64_t b = -a + 1; b <= a; ++b) {
            int64_t num = b * b + D;
            if (num % (4 * a) != 0) continue;
            int64_t c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
            out.forms.push_back({a, b, c});
        }
    }
    return out;
}

int kronecker(Int a, Int n)
{
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // strip twos from n; (a|2) depends on a mod 8
    while (n % 2 == 0) {
        n /= 2;
        Int r = ((a % 8) + 8) % 8;
        if (r == 3 || r == 5) result = -result;
    }
    a = ((a % n) + n) % n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            Int r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

std::vector<int64_t> ideal_counts(int64_t D, int n_max)
{
    if (!is_fundamental(D))
        fail(errc::invalid_discriminant, "-" + std::to_string(D) + " is not fundamental");
    std::vector<int64_t> a(static_cast<size_t>(n_max) + 1, 0);
    for (int d = 1; d <= n_max; ++d) {
        int chi = kronecker(Int(-D), Int(d));
        if (chi == 0) continue;
        for (int n = d; n <= n_max; n += d) a[static_cast<size_t>(n)] += chi;
    }
    return a;
}

std::vector<int64_t> ideal_counts_by_forms(int64_t D, int n_max)
{
    ClassGroupData cg = class_number_bqf(D);
    std::vector<int64_t> reps(static_cast<size_t>(n_max) + 1, 0);
    for (const auto& f : cg.forms) {
        // 4a(ax^2+bxy+cy^2) = (2ax+by)^2 + D y^2 bounds the search box
        int64_t ymax = static_cast<int64_t>(std::sqrt(4.0 * f.a * n_max / D)) + 1;
        int64_t xmax = static_cast<int64_t>(std::sqrt(4.0 * f.a * n_max)) / (2 * f.a) +
                       (std::abs(f.b) * ymax) / (2 * f.a) + 2;
        for (int64_t y = -ymax; y <= ymax; ++y)
            for (int64_t x = -xmax; x <= xmax; ++x) {
                int64_t v = f.a * x * x + f.b * x * y + f.c * y * y;
                if (v >= 1 && v <= n_max) reps[static_cast<size_t>(v)]++;
            }
    }
    const int w = cg.w();
    std::vector<int64_t> a(static_cast<size_t>(n_max) + 1, 0);
    for (int n = 1; n <= n_max; ++n) {
        if (reps[static_cast<size_t>(n)] % w != 0)
            fail(errc::inconsistent_counts, "representation count not divisible by the unit count");
        a[static_cast<size_t>(n)] = reps[static_cast<size_t>(n)] / w;
    }
    return a;
}

double analytic_class_number(int64_t D, int64_t terms)
{
    if (!is_fundamental(D))
        fail(errc::invalid_discriminant, "-" + std::to_string(D) + " is not fundamental");
    // chi_{-D} is periodic mod D
    std::vector<int> chi(static_cast<size_t>(D));
    for (int64_t r = 0; r < D; ++r) chi[static_cast<size_t>(r)] = kronecker(Int(-D), Int(r));
    double L = 0;
    for (int64_t n = terms; n >= 1; --n)
        L += chi[static_cast<size_t>(n % D)] / static_cast<double>(n);
    const int w = D == 3 ? 6 : D == 4 ? 4 : 2;
    return w * std::sqrt(static_cast<double>(D)) * L / (2.0 * M_PI);
}

namespace {

// certified bound on sum_{n>N} n x^n (a(n) <= d(n) <= n termwise)
double tail_bound_linear(double x, int N)
{
    // sum_{n>N} n x^n = x^{N+1} ((N+1)(1-x) + x) / (1-x)^2
    return std::pow(x, N + 1) * ((N + 1) * (1 - x) + x) / ((1 - x) * (1 - x));
}

int choose_truncation(double y_min, double target, int at_least)
{
    double x = std::exp(-2.0 * M_PI * y_min);
    int N = std::max(1, at_least);
    while (tail_bound_linear(x, N) > target && N < 100000) ++N;
    return N;
}

double theta_value(double y, const std::vector<int64_t>& a, int N, double hw)
{
    double s = hw;
    for (int n = 1; n <= N; ++n)
        s += a[static_cast<size_t>(n)] * std::exp(-2.0 * M_PI * n * y);
    return s;
}

} // namespace

ThetaReport theta_checks(int64_t D, double y, int n_trunc)
{
    if (y <= 0) fail(errc::invalid_argument, "theta is evaluated at z = iy with y > 0");
    ClassGroupData cg = class_number_bqf(D);
    const double hw = static_cast<double>(cg.h()) / cg.w();

    ThetaReport rep;
    const double y2 = 1.0 / (D * y);
    const double y_min = std::min(y, y2);
    rep.truncation = choose_truncation(y_min, 1e-14 * hw, n_trunc);
    rep.tail_bound = tail_bound_linear(std::exp(-2.0 * M_PI * y_min), rep.truncation);
    auto a = ideal_counts(D, rep.truncation);

    rep.theta = theta_value(y, a, rep.truncation, hw);
    rep.transformed = theta_value(y2, a, rep.truncation, hw) / (y * std::sqrt(static_cast<double>(D)));
    rep.rel_err = std::abs(rep.theta - rep.transformed) / std::abs(rep.theta);
    return rep;
}

ResidueIdentityReport residue_identity_check(int64_t D, int n_trunc)
{
    ClassGroupData cg = class_number_bqf(D);
    const double hw = static_cast<double>(cg.h()) / cg.w();
    const double sqD = std::sqrt(static_cast<double>(D));

    ResidueIdentityReport rep;
    rep.truncation = choose_truncation(1.0 / D, 1e-12, n_trunc);
    rep.tail_bound = tail_bound_linear(std::exp(-2.0 * M_PI / D), rep.truncation);
    auto a = ideal_counts(D, rep.truncation);

    rep.lhs = theta_value(1.0, a, rep.truncation, hw);
    rep.rhs = hw / sqD;
    for (int n = 1; n <= rep.truncation; ++n)
        rep.rhs += a[static_cast<size_t>(n)] * std::exp(-2.0 * M_PI * n / D) / sqD;
    rep.abs_err = std::abs(rep.lhs - rep.rhs);
    return rep;
}

std::complex<double> incomplete_gamma_e(std::complex<double> a, double x)
{
    // E(a,x) = e^{-x} / (x+1-a - 1(1-a)/(x+3-a - 2(2-a)/(x+5-a - ...))),
    // modified Lentz
    const double tiny = 1e-290;
    std::complex<double> b0 = x + 1.0 - a;
    std::complex<double> f = b0;
    if (std::abs(f) < tiny) f = tiny;
    std::complex<double> C = f, Dv = 0.0;
    for (int i = 1; i < 10000; ++i) {
        std::complex<double> an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        std::complex<double> bn = x + 2.0 * i + 1.0 - a;
        Dv = bn + an * Dv;
        if (std::abs(Dv) < tiny) Dv = tiny;
        C = bn + an / C;
        if (std::abs(C) < tiny) C = tiny;
        Dv = 1.0 / Dv;
        std::complex<double> delta = C * Dv;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x) / f;
}

std::complex<double> riemann_xi(std::complex<double> s, int n_trunc)
{
    if (s == std::complex<double>(0.0, 0.0) || s == std::complex<double>(1.0, 0.0))
        fail(errc::pole_error, "xi has poles at s = 0 and s = 1");
    // terms fall off like e^{-pi n^2}; n = 6 is already below 1e-40
    const int N = std::max(n_trunc, 6);
    std::complex<double> acc = -1.0 / s + 1.0 / (s - 1.0);
    for (int n = 1; n <= N; ++n) {
        double x = M_PI * n * n;
        acc += incomplete_gamma_e(s / 2.0, x);
        acc += incomplete_gamma_e((1.0 - s) / 2.0, x);
    }
    return acc;
}

std::complex<double> lanczos_gamma(std::complex<double> z)
{
    // g = 7, n = 9 coefficients
    static const double coeffs[9] = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // reflection
        return M_PI / (std::sin(M_PI * z) * lanczos_gamma(1.0 - z));
    }
    z -= 1.0;
    std::complex<double> x = coeffs[0];
    for (int i = 1; i < 9; ++i) x += coeffs[i] / (z + static_cast<double>(i));
    std::complex<double> t = z + 7.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

GaussianReport gaussian_checks(double a, int n, std::complex<double> s)
{
    if (a <= 0) fail(errc::invalid_argument, "a must be positive");
    if (s.real() + 2 * n <= 0) fail(errc::invalid_argument, "Re(s) + 2n must be positive");
    GaussianReport rep;

    // (i) trapezoid Fourier transform of e^{-pi a x^2} on a truncated grid
    {
        const double L = std::max(10.0, std::sqrt(46.0 / (M_PI * a)) + 1.0);
        const double inv_h = std::ceil(6.0 + std::sqrt(46.0 * a / M_PI));
        const double h = 1.0 / inv_h;
        const int M = static_cast<int>(std::ceil(L / h));
        double sup = 0;
        for (double y = -5.0; y <= 5.0 + 1e-9; y += 0.25) {
            double re = 0;
            for (int j = -M; j <= M; ++j) {
                double x = j * h;
                re += std::cos(2.0 * M_PI * x * y) * std::exp(-M_PI * a * x * x);
            }
            re *= h;
            double target = std::exp(-M_PI * y * y / a) / std::sqrt(a);
            sup = std::max(sup, std::abs(re - target));
        }
        rep.fourier_sup_err = sup;
    }

    // (ii) Mellin quadrature of x^{s+2n} e^{-a x^2} dx/x on the log line
    {
        const double sigma = s.real() + 2 * n;
        const double u_lo = -46.0 / sigma;
        double u_hi = 0.5 * std::log(64.0 / a) + 2.0;
        const double du = 1.0 / 64.0;
        std::complex<double> acc = 0;
        const std::complex<double> expo = s + 2.0 * static_cast<double>(n);
        for (double u = u_lo; u <= u_hi; u += du)
            acc += std::exp(expo * u - a * std::exp(2.0 * u));
        acc *= du;
        std::complex<double> target =
            0.5 * std::exp(-(static_cast<double>(n) + s / 2.0) * std::log(a)) *
            lanczos_gamma(s / 2.0 + static_cast<double>(n));
        rep.mellin_value = acc;
        rep.mellin_target = target;
        rep.mellin_rel_err = std::abs(acc - target) / std::abs(target);
    }

    // (iii) Poisson summation for the Gaussian at t = 1/2, 1, 2
    {
        const double ts[3] = {0.5, 1.0, 2.0};
        for (int i = 0; i < 3; ++i) {
            double t = ts[i];
            double lhs = 0, rhs = 0;
            for (int m = -12; m <= 12; ++m) {
                lhs += std::exp(-M_PI * m * m * t);
                rhs += std::exp(-M_PI * m * m / t);
            }
            rep.poisson_err[static_cast<size_t>(i)] = std::abs(lhs - rhs / std::sqrt(t));
        }
    }
    return rep;
}

} // namespace zetalab
