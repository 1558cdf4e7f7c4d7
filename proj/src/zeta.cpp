#include "zetalab/zeta.hpp"

#include "zetalab/errors.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace zetalab {

Int ZetaData::class_number() const
{
    Int h = 0;
    for (const auto& c : P) h += c;
    return h;
}

ZetaData fit_numerator(int64_t q, int g, const std::vector<Int>& counts)
{
    if (g < 0) fail(errc::invalid_argument, "genus must be >= 0");
    ZetaData z;
    z.q = q;
    z.g = g;
    if (g == 0) {
        z.P = {Int(1)};
        return z;
    }
    if (static_cast<int>(counts.size()) < 2 * g)
        fail(errc::invalid_argument, "fit needs counts N_1..N_{2g}");

    const int deg = 2 * g;
    // exp of log Z = sum N_m t^m / m, to order 2g
    std::vector<Rat> logz(static_cast<size_t>(deg) + 1, Rat(0));
    for (int m = 1; m <= deg; ++m) logz[static_cast<size_t>(m)] = Rat(counts[static_cast<size_t>(m - 1)], m);
    std::vector<Rat> e(static_cast<size_t>(deg) + 1, Rat(0));
    e[0] = 1;
    for (int n = 1; n <= deg; ++n) {
        Rat s = 0;
        for (int j = 1; j <= n; ++j) s += Rat(j) * logz[static_cast<size_t>(j)] * e[static_cast<size_t>(n - j)];
        e[static_cast<size_t>(n)] = s / n;
    }
    // multiply by (1-t)(1-qt) = 1 - (q+1) t + q t^2
    z.P.assign(static_cast<size_t>(deg) + 1, Int(0));
    for (int n = 0; n <= deg; ++n) {
        Rat c = e[static_cast<size_t>(n)];
        if (n >= 1) c -= Rat(q + 1) * e[static_cast<size_t>(n - 1)];
        if (n >= 2) c += Rat(q) * e[static_cast<size_t>(n - 2)];
        if (denominator(c) != 1)
            fail(errc::counts_inconsistent,
                 "coefficient of t^" + std::to_string(n) + " is not an integer: " + to_string(c));
        z.P[static_cast<size_t>(n)] = numerator(c);
    }
    return z;
}

namespace {

std::vector<Rat> trim_rat(std::vector<Rat> v)
{
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

std::vector<Rat> poly_derivative(const std::vector<Rat>& a)
{
    std::vector<Rat> r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * Rat(static_cast<int64_t>(i)));
    return trim_rat(std::move(r));
}

// remainder of a mod b over the rationals, b nonzero
std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b)
{
    a = trim_rat(std::move(a));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a = trim_rat(std::move(a));
    }
    return a;
}

std::vector<Rat> poly_div_exact(std::vector<Rat> a, const std::vector<Rat>& b)
{
    a = trim_rat(std::move(a));
    std::vector<Rat> quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        quot[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a = trim_rat(std::move(a));
    }
    return quot;
}

std::vector<Rat> poly_gcd_rat(std::vector<Rat> a, std::vector<Rat> b)
{
    a = trim_rat(std::move(a));
    b = trim_rat(std::move(b));
    while (!b.empty()) {
        auto r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

// Yun's square-free decomposition: returns S_1, S_2, ... with P ~ prod S_i^i.
std::vector<std::vector<Rat>> squarefree_decomposition(const std::vector<Rat>& p)
{
    std::vector<std::vector<Rat>> parts;
    auto g = poly_gcd_rat(p, poly_derivative(p));
    if (g.size() <= 1) {
        parts.push_back(trim_rat(p));
        return parts;
    }
    auto c = poly_div_exact(p, g);
    auto d = trim_rat(poly_div_exact(poly_derivative(p), g));
    {
        auto cd = poly_derivative(c);
        d.resize(std::max(d.size(), cd.size()), Rat(0));
        for (size_t i = 0; i < cd.size(); ++i) d[i] -= cd[i];
        d = trim_rat(std::move(d));
    }
    while (c.size() > 1) {
        auto s = poly_gcd_rat(c, d);
        parts.push_back(s);
        c = poly_div_exact(c, s);
        auto tmp = poly_div_exact(d, s);
        auto cd = poly_derivative(c);
        tmp.resize(std::max(tmp.size(), cd.size()), Rat(0));
        for (size_t i = 0; i < cd.size(); ++i) tmp[i] -= cd[i];
        d = trim_rat(std::move(tmp));
    }
    return parts;
}

// Durand-Kerner on a polynomial with distinct roots, ascending coefficients.
std::vector<std::complex<double>> roots_distinct(const std::vector<Rat>& poly)
{
    const int deg = static_cast<int>(poly.size()) - 1;
    if (deg <= 0) return {};
    std::vector<std::complex<double>> c(static_cast<size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) c[static_cast<size_t>(i)] = to_double(poly[static_cast<size_t>(i)]);
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (int i = deg; i >= 0; --i) acc = acc * x + c[static_cast<size_t>(i)];
        return acc / c[static_cast<size_t>(deg)];
    };
    double scale = std::pow(std::abs(c[0] / c[static_cast<size_t>(deg)]) + 1.0, 1.0 / deg);
    std::vector<std::complex<double>> r(static_cast<size_t>(deg));
    for (int j = 0; j < deg; ++j)
        r[static_cast<size_t>(j)] = scale * std::polar(1.0, 0.7 + 2.0 * M_PI * j / deg);
    for (int it = 0; it < 2000; ++it) {
        double moved = 0;
        for (int j = 0; j < deg; ++j) {
            std::complex<double> denom = 1;
            for (int l = 0; l < deg; ++l)
                if (l != j) denom *= r[static_cast<size_t>(j)] - r[static_cast<size_t>(l)];
            std::complex<double> delta = eval(r[static_cast<size_t>(j)]) / denom;
            r[static_cast<size_t>(j)] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-15 * scale) break;
    }
    return r;
}

// Roots of the monic reversal of P (these are the lambda's). Multiple roots
// are split off exactly first, so the iteration only ever sees simple roots.
std::vector<std::complex<double>> inverse_roots_numeric(const std::vector<Int>& P)
{
    const int deg = static_cast<int>(P.size()) - 1;
    if (deg <= 0) return {};
    std::vector<Rat> rev(static_cast<size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) rev[static_cast<size_t>(i)] = Rat(P[static_cast<size_t>(deg - i)]);
    std::vector<std::complex<double>> out;
    auto parts = squarefree_decomposition(rev);
    for (size_t mult = 1; mult <= parts.size(); ++mult)
        for (const auto& root : roots_distinct(parts[mult - 1]))
            for (size_t rep = 0; rep < mult; ++rep) out.push_back(root);
    return out;
}

// ascending-coefficient division by (1 - t); exact iff sum of coefficients is 0
bool divide_one_minus_t(const std::vector<Rat>& n, std::vector<Rat>& quot)
{
    if (n.empty()) { quot.clear(); return true; }
    quot.assign(n.size() - 1, Rat(0));
    Rat acc = 0;
    for (size_t i = 0; i + 1 < n.size(); ++i) {
        acc += n[i];
        quot[i] = acc;
    }
    acc += n.back();
    return acc == 0;
}

// division by (1 - q t); exact iff the running remainder vanishes
bool divide_one_minus_qt(const std::vector<Rat>& n, const Rat& q, std::vector<Rat>& quot)
{
    if (n.empty()) { quot.clear(); return true; }
    quot.assign(n.size() - 1, Rat(0));
    Rat acc = 0;
    for (size_t i = 0; i + 1 < n.size(); ++i) {
        acc = n[i] + q * acc;
        quot[i] = acc;
    }
    acc = n.back() + q * acc;
    return acc == 0;
}

} // namespace

std::vector<std::complex<double>> numeric_inverse_roots(const ZetaData& z)
{
    return inverse_roots_numeric(z.P);
}

FunctionalEquationReport functional_equation_check(const ZetaData& z)
{
    FunctionalEquationReport rep;
    const int deg = static_cast<int>(z.P.size()) - 1;
    rep.symmetric = true;
    for (int i = 0; i <= deg; ++i) {
        Rat lhs(z.P[static_cast<size_t>(deg - i)]);
        Rat rhs = rat_pow(Int(z.q), z.g - i) * Rat(z.P[static_cast<size_t>(i)]);
        if (lhs != rhs) { rep.symmetric = false; break; }
    }
    for (const auto& root : inverse_roots_numeric(z.P))
        rep.root_moduli.push_back(std::abs(root));
    std::sort(rep.root_moduli.begin(), rep.root_moduli.end());
    return rep;
}

ResidueReportZeta class_number_and_residues(const ZetaData& z)
{
    ResidueReportZeta r;
    r.h = z.class_number();
    r.res0.coeff = Rat(-r.h, z.q - 1);
    r.res1.coeff = rat_pow(Int(z.q), 1 - z.g) * Rat(r.h, z.q - 1);

    // res_{s=0} = -(1/ln q) res_{t=1}(Z dt/t), and the s=1 residue analogously
    // at t = q^{-1}; the t-residues come straight from the rational function.
    Rat p_at_1 = 0;   // P(1)
    Rat p_at_qi = 0;  // P(q^{-1})
    Rat qi = Rat(1, z.q);
    Rat pw = 1;
    for (const auto& c : z.P) {
        p_at_1 += Rat(c);
        p_at_qi += Rat(c) * pw;
        pw *= qi;
    }
    // res_{t=1}(Z dt/t) = [(t-1) Z / t]_{t=1} = -P(1)/(1-q)
    r.laurent_res0 = -(-p_at_1 / Rat(1 - z.q));
    // res_{t=q^{-1}}(Z dt/t) = [(t-q^{-1}) Z / t]_{t=q^{-1}} = -q^{1-g} P(q^{-1}) ... evaluated directly:
    // (t - q^{-1}) Z = -P(t)/(q (1-t)); at t = q^{-1} divide by t.
    Rat res_t_qi = -p_at_qi / (Rat(z.q) * (Rat(1) - qi)) / qi;
    r.laurent_res1 = -res_t_qi;

    r.consistent = (r.laurent_res0 == r.res0.coeff) && (r.laurent_res1 == r.res1.coeff);
    return r;
}

std::vector<Int> series_coefficients(const ZetaData& z, int n_max)
{
    if (n_max < 0) fail(errc::invalid_argument, "n_max must be >= 0");
    std::vector<Int> b(static_cast<size_t>(n_max) + 1, Int(0));
    for (size_t i = 0; i < z.P.size() && i <= static_cast<size_t>(n_max); ++i) b[i] = z.P[i];
    // multiply by 1/(1-t) then 1/(1-qt)
    for (int n = 1; n <= n_max; ++n) b[static_cast<size_t>(n)] += b[static_cast<size_t>(n - 1)];
    for (int n = 1; n <= n_max; ++n) b[static_cast<size_t>(n)] += Int(z.q) * b[static_cast<size_t>(n - 1)];
    return b;
}

std::vector<Rat> power_sums_of_inverse_roots(const std::vector<Rat>& poly, int n_max)
{
    std::vector<Rat> s(static_cast<size_t>(n_max) + 1, Rat(0));
    const int deg = static_cast<int>(poly.size()) - 1;
    for (int k = 1; k <= n_max; ++k) {
        Rat acc = 0;
        if (k <= deg) acc = Rat(-k) * poly[static_cast<size_t>(k)];
        for (int i = 1; i < k && i <= deg; ++i)
            acc -= poly[static_cast<size_t>(i)] * s[static_cast<size_t>(k - i)];
        s[static_cast<size_t>(k)] = acc;
    }
    return s;
}

Int predict_count(const ZetaData& z, int m)
{
    if (m < 1) fail(errc::invalid_argument, "m must be >= 1");
    std::vector<Rat> poly;
    for (const auto& c : z.P) poly.emplace_back(c);
    Rat s_m = power_sums_of_inverse_roots(poly, m)[static_cast<size_t>(m)];
    Rat n = Rat(1) + rat_pow(Int(z.q), m) - s_m;
    if (denominator(n) != 1) fail(errc::counts_inconsistent, "predicted count is not an integer");
    return numerator(n);
}

PrincipalPartsReport principal_parts_check(const ZetaData& z)
{
    PrincipalPartsReport rep;
    const Rat h(z.class_number());
    const Rat c0 = h / Rat(z.q - 1);                     // -res part at t=1 carries -c0/(1-t)
    const Rat c1 = rat_pow(Int(z.q), 1 - z.g) * c0;      // c1/(1-qt)

    // numerator of E(t) over (1-t)(1-qt)
    size_t len = std::max<size_t>(z.P.size(), 2);
    std::vector<Rat> num(len, Rat(0));
    for (size_t i = 0; i < z.P.size(); ++i) num[i] = Rat(z.P[i]);
    num[0] += c0 - c1;                   // + c0 (1-qt) - c1 (1-t)
    num[1] += -c0 * z.q + c1;

    std::vector<Rat> q1, q2;
    bool exact = divide_one_minus_t(num, q1);
    exact = exact && divide_one_minus_qt(q1, Rat(z.q), q2);
    rep.entire = trim_rat(std::move(q2));
    rep.ok = exact && (rep.entire.empty() ||
                       static_cast<int>(rep.entire.size()) - 1 <= std::max(2 * z.g - 2, 0));
    return rep;
}

TateIwasawaReport tate_iwasawa_decomposition(const ZetaData& z, int truncation)
{
    if (truncation < 2 * z.g)
        fail(errc::invalid_argument, "truncation must be >= 2g");
    TateIwasawaReport rep;
    rep.truncation = truncation;
    const int N = truncation;
    auto b = series_coefficients(z, N);
    auto b_at = [&](int n) -> Rat { return n < 0 ? Rat(0) : Rat(b[static_cast<size_t>(n)]); };

    const Rat half(1, 2);
    const Rat q1g = rat_pow(Int(z.q), 1 - z.g);
    const Rat vol = Rat(z.class_number(), z.q - 1); // h/(q-1)

    rep.lhs.assign(static_cast<size_t>(N) + 1, Rat(0));
    rep.t_minus = rep.lhs;
    rep.t_fourier = rep.lhs;
    rep.t_c_dual = rep.lhs;
    rep.t_c = rep.lhs;

    for (int n = 0; n <= N; ++n) rep.lhs[static_cast<size_t>(n)] = b_at(n);
    rep.t_minus[0] = half * b_at(0);
    rep.t_fourier[0] = q1g * half * b_at(2 * z.g - 2);
    rep.t_c_dual[0] = q1g * vol * half;
    rep.t_c[0] = -vol * half;
    for (int m = 1; m <= N; ++m) {
        Rat qm = rat_pow(Int(z.q), m);
        rep.t_fourier[static_cast<size_t>(m)] = q1g * b_at(2 * z.g - 2 - m) * qm;
        rep.t_c_dual[static_cast<size_t>(m)] = q1g * vol * qm;
        rep.t_c[static_cast<size_t>(m)] = -vol;
    }

    rep.ok = true;
    for (int n = 0; n <= N; ++n) {
        auto i = static_cast<size_t>(n);
        if (rep.lhs[i] != rep.t_minus[i] + rep.t_fourier[i] + rep.t_c_dual[i] + rep.t_c[i]) {
            rep.ok = false;
            break;
        }
    }
    return rep;
}

} // namespace zetalab
