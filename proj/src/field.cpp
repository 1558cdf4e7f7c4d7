#include "zetalab/field.hpp"

#include <algorithm>
#include <string>

namespace zetalab {

namespace {

int64_t mod_pos(int64_t a, int64_t p)
{
    int64_t r = a % p;
    return r < 0 ? r + p : r;
}

int64_t inv_mod_p(int64_t a, int64_t p)
{
    // extended Euclid on integers; a nonzero mod p
    int64_t t = 0, newt = 1, r = p, newr = mod_pos(a, p);
    while (newr != 0) {
        int64_t quot = r / newr;
        int64_t tmp = t - quot * newt;
        t = newt;
        newt = tmp;
        tmp = r - quot * newr;
        r = newr;
        newr = tmp;
    }
    return mod_pos(t, p);
}

} // namespace

bool is_prime(int64_t n)
{
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace poly_fp {

std::vector<int64_t> trim(std::vector<int64_t> a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int64_t> mul(const std::vector<int64_t>& a, const std::vector<int64_t>& b, int64_t p)
{
    if (a.empty() || b.empty()) return {};
    std::vector<int64_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod_pos(r[i + j] + a[i] * b[j], p);
    }
    return trim(std::move(r));
}

std::vector<int64_t> mod(std::vector<int64_t> a, const std::vector<int64_t>& m, int64_t p)
{
    a = trim(std::move(a));
    const size_t dm = m.size() - 1;
    const int64_t lead_inv = inv_mod_p(m.back(), p);
    while (a.size() > dm) {
        int64_t c = mod_pos(a.back() * lead_inv, p);
        size_t shift = a.size() - 1 - dm;
        if (c != 0)
            for (size_t i = 0; i <= dm; ++i)
                a[shift + i] = mod_pos(a[shift + i] - c * m[i], p);
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

std::vector<int64_t> gcd(std::vector<int64_t> a, std::vector<int64_t> b, int64_t p)
{
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        auto r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        // normalize monic
        int64_t li = inv_mod_p(a.back(), p);
        for (auto& c : a) c = mod_pos(c * li, p);
    }
    return a;
}

std::vector<int64_t> derivative(const std::vector<int64_t>& a, int64_t p)
{
    std::vector<int64_t> r;
    for (size_t i = 1; i < a.size(); ++i)
        r.push_back(mod_pos(a[i] * static_cast<int64_t>(i), p));
    return trim(std::move(r));
}

bool is_irreducible(const std::vector<int64_t>& m, int64_t p)
{
    const size_t deg = m.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    if (m[0] == 0) return false; // divisible by x
    // trial division by every monic polynomial of degree <= deg/2
    for (size_t d = 1; 2 * d <= deg; ++d) {
        int64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (int64_t idx = 0; idx < count; ++idx) {
            std::vector<int64_t> div(d + 1, 0);
            int64_t t = idx;
            for (size_t i = 0; i < d; ++i) { div[i] = t % p; t /= p; }
            div[d] = 1;
            if (mod(m, div, p).empty()) return false;
        }
    }
    return true;
}

} // namespace poly_fp

FieldSpec::FieldSpec(int64_t p, int k, std::vector<int64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus))
{
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;
}

FieldSpec FieldSpec::build(int64_t p, int k)
{
    if (!is_prime(p)) fail(errc::invalid_prime, "p = " + std::to_string(p) + " is not prime");
    if (k < 1) fail(errc::invalid_argument, "extension degree must be >= 1");
    int64_t q = 1;
    for (int i = 0; i < k; ++i) {
        if (q > kFieldCardinalityCap / p)
            fail(errc::too_large, "p^k exceeds the cardinality cap 2^20");
        q *= p;
    }
    if (q > kFieldCardinalityCap) fail(errc::too_large, "p^k exceeds the cardinality cap 2^20");

    if (k == 1) return FieldSpec(p, 1, {0, 1});

    // scan (c_0, c_1, ...) lexicographically, constant term most significant
    int64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int64_t n = 0; n < count; ++n) {
        std::vector<int64_t> m(static_cast<size_t>(k) + 1, 0);
        int64_t t = n;
        for (int i = k - 1; i >= 0; --i) { m[static_cast<size_t>(i)] = t % p; t /= p; }
        m[static_cast<size_t>(k)] = 1;
        if (poly_fp::is_irreducible(m, p)) return FieldSpec(p, k, std::move(m));
    }
    fail(errc::invalid_argument, "no irreducible polynomial found"); // unreachable
}

FieldCoeffs FieldSpec::one() const
{
    FieldCoeffs a = zero();
    a[0] = 1;
    return a;
}

FieldCoeffs FieldSpec::from_int(int64_t n) const
{
    FieldCoeffs a = zero();
    a[0] = mod_pos(n, p_);
    return a;
}

FieldCoeffs FieldSpec::gen() const
{
    if (k_ == 1) return one();
    FieldCoeffs a = zero();
    a[1] = 1;
    return a;
}

bool FieldSpec::is_zero(const FieldCoeffs& a) const
{
    return std::all_of(a.begin(), a.end(), [](int64_t c) { return c == 0; });
}

void FieldSpec::check_element(const FieldCoeffs& a) const
{
    if (a.size() != static_cast<size_t>(k_))
        fail(errc::spec_mismatch, "element has wrong coefficient length");
}

FieldCoeffs FieldSpec::add(const FieldCoeffs& a, const FieldCoeffs& b) const
{
    check_element(a);
    check_element(b);
    FieldCoeffs r(static_cast<size_t>(k_));
    for (int i = 0; i < k_; ++i) r[i] = mod_pos(a[i] + b[i], p_);
    return r;
}

FieldCoeffs FieldSpec::sub(const FieldCoeffs& a, const FieldCoeffs& b) const
{
    check_element(a);
    check_element(b);
    FieldCoeffs r(static_cast<size_t>(k_));
    for (int i = 0; i < k_; ++i) r[i] = mod_pos(a[i] - b[i], p_);
    return r;
}

FieldCoeffs FieldSpec::neg(const FieldCoeffs& a) const
{
    check_element(a);
    FieldCoeffs r(static_cast<size_t>(k_));
    for (int i = 0; i < k_; ++i) r[i] = mod_pos(-a[i], p_);
    return r;
}

FieldCoeffs FieldSpec::mul(const FieldCoeffs& a, const FieldCoeffs& b) const
{
    check_element(a);
    check_element(b);
    std::vector<int64_t> prod(2 * static_cast<size_t>(k_) - 1, 0);
    for (int i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < k_; ++j)
            prod[i + j] = mod_pos(prod[i + j] + a[i] * b[j], p_);
    }
    auto red = poly_fp::mod(std::move(prod), modulus_, p_);
    red.resize(static_cast<size_t>(k_), 0);
    return red;
}

FieldCoeffs FieldSpec::inv(const FieldCoeffs& a) const
{
    check_element(a);
    if (is_zero(a)) fail(errc::division_by_zero, "inverse of zero");
    // extended Euclid on polynomials: s*a + t*modulus = gcd = const
    std::vector<int64_t> r0 = modulus_, r1 = poly_fp::trim(a);
    std::vector<int64_t> s0 = {}, s1 = {1};
    while (!r1.empty() && r1.size() > 1) {
        // one division step: r0 = q*r1 + r2
        std::vector<int64_t> q(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
        std::vector<int64_t> rem = r0;
        int64_t lead_inv = inv_mod_p(r1.back(), p_);
        while (rem.size() >= r1.size() && !rem.empty()) {
            int64_t c = mod_pos(rem.back() * lead_inv, p_);
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = mod_pos(rem[shift + i] - c * r1[i], p_);
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        auto s2_term = poly_fp::mul(q, s1, p_);
        std::vector<int64_t> s2(std::max(s0.size(), s2_term.size()), 0);
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < s2_term.size(); ++i) s2[i] = mod_pos(s2[i] - s2_term[i], p_);
        s2 = poly_fp::trim(std::move(s2));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant; scale s1 by its inverse
    if (r1.empty()) fail(errc::division_by_zero, "element not invertible");
    int64_t c_inv = inv_mod_p(r1[0], p_);
    FieldCoeffs out = zero();
    for (size_t i = 0; i < s1.size(); ++i) out[i] = mod_pos(s1[i] * c_inv, p_);
    return out;
}

FieldCoeffs FieldSpec::pow(const FieldCoeffs& a, uint64_t e) const
{
    check_element(a);
    FieldCoeffs base = a, r = one();
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldCoeffs FieldSpec::element(int64_t index) const
{
    FieldCoeffs a = zero();
    for (int i = 0; i < k_; ++i) { a[i] = index % p_; index /= p_; }
    return a;
}

int64_t FieldSpec::index_of(const FieldCoeffs& a) const
{
    int64_t idx = 0;
    for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + a[static_cast<size_t>(i)];
    return idx;
}

FieldCoeffs FieldSpec::eval_poly(const std::vector<FieldCoeffs>& poly, const FieldCoeffs& x) const
{
    FieldCoeffs acc = zero();
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        acc = add(mul(acc, x), *it);
    return acc;
}

FieldCoeffs Embedding::map(const FieldCoeffs& a) const
{
    FieldCoeffs acc = big->zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        acc = big->add(big->mul(acc, gen_image), big->from_int(*it));
    return acc;
}

EnumerationResult enumerate_and_embed(const FieldSpec& small, const FieldSpec& big)
{
    if (small.p() != big.p() || big.k() % small.k() != 0)
        fail(errc::no_embedding,
             "F_" + std::to_string(small.q()) + " does not embed into F_" + std::to_string(big.q()));

    EnumerationResult res;
    res.elements.reserve(static_cast<size_t>(big.q()));
    for (int64_t i = 0; i < big.q(); ++i)
        res.elements.push_back(big.element(i));

    // lift the small modulus coefficients (in F_p) to big and root-search
    std::vector<FieldCoeffs> lifted;
    for (int64_t c : small.modulus()) lifted.push_back(big.from_int(c));
    for (const auto& cand : res.elements) {
        if (big.is_zero(big.eval_poly(lifted, cand))) {
            res.embedding = Embedding{&small, &big, cand};
            return res;
        }
    }
    fail(errc::no_embedding, "no root of the small modulus found"); // unreachable for valid input
}

} // namespace zetalab
