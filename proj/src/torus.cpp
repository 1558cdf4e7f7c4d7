#include "zetalab/torus.hpp"

namespace zetalab {

// ---- LaurentPoly --------------------------------------------------------------

void LaurentPoly::trim()
{
    size_t drop = 0;
    while (drop < c_.size() && c_[drop].is_zero()) ++drop;
    if (drop) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(drop));
        lo_ += static_cast<int>(drop);
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) lo_ = 0;
}

LaurentPoly LaurentPoly::monomial(int n, const HPS& c)
{
    LaurentPoly p;
    p.lo_ = n;
    p.c_ = {c};
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(int lo, std::vector<HPS> coeffs)
{
    LaurentPoly p;
    p.lo_ = lo;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

HPS LaurentPoly::coeff(int n) const
{
    if (c_.empty() || n < lo_ || n > hi()) return HPS(0);
    return c_[static_cast<size_t>(n - lo_)];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) { *this = o; return *this; }
    int nlo = std::min(lo_, o.lo_);
    int nhi = std::max(hi(), o.hi());
    std::vector<HPS> out(static_cast<size_t>(nhi - nlo + 1), HPS(0));
    for (int n = nlo; n <= nhi; ++n)
        out[static_cast<size_t>(n - nlo)] = coeff(n) + o.coeff(n);
    lo_ = nlo;
    c_ = std::move(out);
    trim();
    return *this;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly r = a;
    r += b.scaled(HPS(-1));
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    std::vector<HPS> out(a.c_.size() + b.c_.size() - 1, HPS(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentPoly::from_coeffs(a.lo_ + b.lo_, std::move(out));
}

LaurentPoly LaurentPoly::scaled(const HPS& s) const
{
    if (s.is_zero()) return LaurentPoly();
    LaurentPoly p = *this;
    for (auto& x : p.c_) x = x * s;
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::shifted(int k) const
{
    LaurentPoly p = *this;
    if (!p.c_.empty()) p.lo_ += k;
    return p;
}

HPS LaurentPoly::eval_at_one() const
{
    HPS s(0);
    for (const auto& x : c_) s += x;
    return s;
}

HPS LaurentPoly::eval_at(const Rat& z0) const
{
    HPS s(0);
    for (int n = lo_; n <= hi(); ++n) {
        if (coeff(n).is_zero()) continue;
        Rat pw = 1;
        if (n >= 0)
            for (int i = 0; i < n; ++i) pw *= z0;
        else
            for (int i = 0; i < -n; ++i) pw /= z0;
        s += coeff(n) * HPS(pw);
    }
    return s;
}

LaurentPoly LaurentPoly::subst_q_inv(int64_t q) const
{
    LaurentPoly out;
    for (int n = lo_; n <= hi(); ++n) {
        if (coeff(n).is_zero()) continue;
        out += monomial(-n, coeff(n) * HPS(rat_pow(Int(q), -n)));
    }
    return out;
}

LaurentPoly LaurentPoly::reversed() const
{
    LaurentPoly out;
    for (int n = lo_; n <= hi(); ++n)
        if (!coeff(n).is_zero()) out += monomial(-n, coeff(n));
    return out;
}

bool LaurentPoly::divide_one_minus_z(LaurentPoly& out) const
{
    // z^{lo} is a unit, so divide the plain-polynomial part: quotient
    // coefficients are the running prefix sums; exact iff they telescope to 0.
    if (is_zero()) { out = LaurentPoly(); return true; }
    std::vector<HPS> quot(c_.size() - 1, HPS(0));
    HPS acc(0);
    for (size_t i = 0; i + 1 < c_.size(); ++i) {
        acc += c_[i];
        quot[i] = acc;
    }
    acc += c_.back();
    if (!acc.is_zero()) return false;
    out = from_coeffs(lo_, std::move(quot));
    return true;
}

bool LaurentPoly::divide_one_minus_cz(const Rat& c, LaurentPoly& out) const
{
    if (is_zero()) { out = LaurentPoly(); return true; }
    std::vector<HPS> quot(c_.size() - 1, HPS(0));
    HPS acc(0);
    const HPS cc{c};
    for (size_t i = 0; i + 1 < c_.size(); ++i) {
        acc = c_[i] + cc * acc;
        quot[i] = acc;
    }
    acc = c_.back() + cc * acc;
    if (!acc.is_zero()) return false;
    out = from_coeffs(lo_, std::move(quot));
    return true;
}

// ---- TorusRational ------------------------------------------------------------

TorusRational::TorusRational(LaurentPoly num, int e1, int e2, int64_t q)
    : num_(std::move(num)), e1_(e1), e2_(e2), q_(q)
{
    if (e1 < 0 || e1 > 1 || e2 < 0 || e2 > 1)
        fail(errc::unsupported_pole, "pole orders above 1 at z=1, q^{-1} are not representable");
    if (q < 2) fail(errc::invalid_argument, "ambient q must be >= 2");
    if (num_.is_zero()) { e1_ = e2_ = 0; return; }
    LaurentPoly reduced;
    if (e1_ == 1 && num_.divide_one_minus_z(reduced)) {
        num_ = reduced;
        e1_ = 0;
    }
    if (e2_ == 1 && num_.divide_one_minus_cz(Rat(q_), reduced)) {
        num_ = reduced;
        e2_ = 0;
    }
    if (num_.is_zero()) e1_ = e2_ = 0;
}

TorusRational TorusRational::shifted(int k) const
{
    TorusRational r = *this;
    r.num_ = r.num_.shifted(k);
    return r;
}

TorusRational TorusRational::scaled(const HPS& c) const
{
    return TorusRational(num_.scaled(c), e1_, e2_, q_);
}

TorusRational operator+(const TorusRational& a, const TorusRational& b)
{
    if (a.q_ != b.q_) fail(errc::space_mismatch, "adding rationals over different tori");
    int e1 = std::max(a.e1_, b.e1_), e2 = std::max(a.e2_, b.e2_);
    auto lift = [&](const TorusRational& r) {
        LaurentPoly n = r.num_;
        if (e1 > r.e1_) n = n * (LaurentPoly::monomial(0, HPS(1)) + LaurentPoly::monomial(1, HPS(-1)));
        if (e2 > r.e2_)
            n = n * (LaurentPoly::monomial(0, HPS(1)) + LaurentPoly::monomial(1, HPS(Rat(-r.q_))));
        return n;
    };
    return TorusRational(lift(a) + lift(b), e1, e2, a.q_);
}

TorusRational operator-(const TorusRational& a, const TorusRational& b)
{
    return a + b.scaled(HPS(-1));
}

// ---- transforms ---------------------------------------------------------------

TorusRational mellin(const GradedFunction& f)
{
    int64_t q = f.q();
    if (q < 2) fail(errc::invalid_argument, "graded function carries no ambient q");
    LaurentPoly explicit_part;
    for (const auto& [n, v] : f.explicit_values()) explicit_part += LaurentPoly::monomial(n, v);

    const LaurentPoly one_minus_z =
        LaurentPoly::monomial(0, HPS(1)) + LaurentPoly::monomial(1, HPS(-1));
    const LaurentPoly one_minus_qz =
        LaurentPoly::monomial(0, HPS(1)) + LaurentPoly::monomial(1, HPS(Rat(-q)));

    const int t1 = f.tail_start();
    LaurentPoly num = explicit_part * one_minus_z * one_minus_qz;
    if (!f.tail_a().is_zero())
        num += one_minus_z *
               LaurentPoly::monomial(t1, f.tail_a() * HPS(rat_pow(Int(q), t1)));
    if (!f.tail_b().is_zero()) num += one_minus_qz * LaurentPoly::monomial(t1, f.tail_b());
    return TorusRational(std::move(num), 1, 1, q);
}

GradedFunction inverse_mellin(const TorusRational& r)
{
    const int64_t q = r.q();
    HPS c1(0), c2(0);
    if (r.e1())
        c1 = r.num().eval_at_one() / (r.e2() ? HPS(Rat(1 - q)) : HPS(1));
    if (r.e2())
        c2 = r.num().eval_at(Rat(1, q)) / (r.e1() ? HPS(Rat(q - 1, q)) : HPS(1));

    const LaurentPoly one_minus_z =
        LaurentPoly::monomial(0, HPS(1)) + LaurentPoly::monomial(1, HPS(-1));
    const LaurentPoly one_minus_qz =
        LaurentPoly::monomial(0, HPS(1)) + LaurentPoly::monomial(1, HPS(Rat(-q)));

    LaurentPoly rem = r.num();
    if (r.e1()) {
        LaurentPoly part = LaurentPoly::monomial(0, c1);
        if (r.e2()) part = part * one_minus_qz;
        rem = rem - part;
    }
    if (r.e2()) {
        LaurentPoly part = LaurentPoly::monomial(0, c2);
        if (r.e1()) part = part * one_minus_z;
        rem = rem - part;
    }
    LaurentPoly quot = rem;
    if (r.e1()) {
        LaurentPoly next;
        if (!quot.divide_one_minus_z(next))
            fail(errc::not_in_space, "remainder not divisible by (1-z)");
        quot = next;
    }
    if (r.e2()) {
        LaurentPoly next;
        if (!quot.divide_one_minus_cz(Rat(q), next))
            fail(errc::not_in_space, "remainder not divisible by (1-qz)");
        quot = next;
    }

    // f(n) = quot_n + c1 [n>=0] + c2 q^n [n>=0]
    const int ts = std::max(quot.is_zero() ? 0 : quot.hi() + 1, 0);
    std::map<int, HPS> vals;
    for (int n = std::min(quot.is_zero() ? 0 : quot.lo(), 0); n < ts; ++n) {
        HPS v = quot.coeff(n);
        if (n >= 0) v += c1 + c2 * HPS(rat_pow(Int(q), n));
        if (!v.is_zero()) vals[n] = v;
    }
    GradedSpace space = !c2.is_zero()   ? GradedSpace::d_plus_plus
                        : !c1.is_zero() ? GradedSpace::d_plus
                                        : GradedSpace::d;
    return GradedFunction::build(space, q, std::move(vals), ts, c2, c1);
}

TorusRational torus_fourier_local(const TorusRational& r, int64_t q_x, int k_x)
{
    if (r.q() != q_x) fail(errc::space_mismatch, "rational function lives over a different q");
    if (r.e2() != 0) fail(errc::not_in_space, "local transform needs a pole at z=1 only");

    LaurentPoly s = r.num().subst_q_inv(q_x);
    if (r.e1() == 1) {
        // prefactor collapses: q^{-k/2} z^{-k} S(z) / (1-z)
        return TorusRational(s.shifted(-k_x).scaled(half_power(q_x, -k_x)), 1, 0, q_x);
    }
    // q^{-k/2} z^{-k} (1 - q^{-1} z^{-1}) S(z) / (1-z)
    //   = -q^{-k/2-1} z^{-k-1} (1-qz) S(z) / (1-z)
    const LaurentPoly one_minus_qz =
        LaurentPoly::monomial(0, HPS(1)) + LaurentPoly::monomial(1, HPS(Rat(-q_x)));
    LaurentPoly num = (s * one_minus_qz).shifted(-k_x - 1).scaled(-half_power(q_x, -k_x - 2));
    return TorusRational(std::move(num), 1, 0, q_x);
}

TorusRational involution_pullback(const TorusRational& r)
{
    const int64_t q = r.q();
    LaurentPoly n = r.num().subst_q_inv(q);
    if (r.e1()) n = n.shifted(1).scaled(HPS(Rat(-q)));
    if (r.e2()) n = n.shifted(1).scaled(HPS(-1));
    // pole at 1 maps to pole at q^{-1} and conversely
    return TorusRational(std::move(n), r.e2(), r.e1(), q);
}

TorusRational standard_global(const ZetaData& z, int d)
{
    LaurentPoly num;
    for (size_t i = 0; i < z.P.size(); ++i)
        num += LaurentPoly::monomial(static_cast<int>(i) + d, HPS(Rat(z.P[i])));
    return TorusRational(std::move(num), 1, 1, z.q);
}

namespace {

// coefficients 0..n_max of 1/((1-z)^{e1} (1-cz)^{e2})
std::vector<HPS> denominator_series(int e1, int e2, const Rat& c, int n_max)
{
    std::vector<HPS> s(static_cast<size_t>(n_max) + 1, HPS(0));
    s[0] = HPS(1);
    if (e1)
        for (int n = 1; n <= n_max; ++n) s[static_cast<size_t>(n)] = s[static_cast<size_t>(n - 1)];
    if (e2) {
        const HPS cc{c};
        for (int n = 1; n <= n_max; ++n)
            s[static_cast<size_t>(n)] += cc * s[static_cast<size_t>(n - 1)];
    }
    return s;
}

// z^0 coefficient of N(z) * series(z) where only nonpositive degrees of N contribute
HPS constant_coefficient(const LaurentPoly& num, const std::vector<HPS>& series)
{
    HPS acc(0);
    for (int j = num.lo(); j <= std::min(num.hi(), 0); ++j) {
        int need = -j;
        if (need < static_cast<int>(series.size())) acc += num.coeff(j) * series[static_cast<size_t>(need)];
    }
    return acc;
}

} // namespace

HPS residue_at(const TorusRational& r, TorusPoint pt)
{
    const int64_t q = r.q();
    switch (pt) {
    case TorusPoint::one:
        if (!r.e1()) return HPS(0);
        // res_{z=1}(R dz/z) = -((1-z)R)|_{z=1}
        return -(r.num().eval_at_one() / (r.e2() ? HPS(Rat(1 - q)) : HPS(1)));
    case TorusPoint::q_inv:
        if (!r.e2()) return HPS(0);
        // res_{z=q^{-1}}(R dz/z) = -((1-qz)R)|_{z=q^{-1}}
        return -(r.num().eval_at(Rat(1, q)) / (r.e1() ? HPS(Rat(q - 1, q)) : HPS(1)));
    case TorusPoint::zero: {
        if (r.is_zero()) return HPS(0);
        int depth = std::max(0, -r.num().lo());
        auto series = denominator_series(r.e1(), r.e2(), Rat(q), depth);
        return constant_coefficient(r.num(), series);
    }
    case TorusPoint::infinity: {
        if (r.is_zero()) return HPS(0);
        // w = 1/z: R(1/w) = rev(N)(w) (-w)^{e1} (-w/q)^{e2} / ((1-w)^{e1}(1-w/q)^{e2}),
        // and dz/z = -dw/w.
        LaurentPoly m = r.num().reversed().shifted(r.e1() + r.e2());
        Rat scale = 1;
        if (r.e1()) scale = -scale;
        if (r.e2()) scale = -scale / q;
        m = m.scaled(HPS(scale));
        int depth = std::max(0, -m.lo());
        auto series = denominator_series(r.e1(), r.e2(), Rat(1, q), depth);
        return -constant_coefficient(m, series);
    }
    }
    fail(errc::invalid_argument, "unknown residue point");
}

ResidueReport residue_report(const TorusRational& r)
{
    ResidueReport rep;
    rep.at[0] = residue_at(r, TorusPoint::zero);
    rep.at[1] = residue_at(r, TorusPoint::one);
    rep.at[2] = residue_at(r, TorusPoint::q_inv);
    rep.at[3] = residue_at(r, TorusPoint::infinity);
    rep.sum = rep.at[0] + rep.at[1] + rep.at[2] + rep.at[3];
    return rep;
}

PoissonCheck poisson_residue_check(const ZetaData& z, int d, int shift)
{
    // Apply res_0 + res_1 = (res_0 + res_1) o i* to z^shift f~. Pulling
    // z^shift through the involution leaves q^{-shift} z^{-shift}, so the
    // transformed side carries the measure factor q^{-shift} (the factor is
    // present in the extended-group form of the summation formula; dropping
    // it breaks exactness for every nonzero shift).
    PoissonCheck out;
    TorusRational f = standard_global(z, d);
    TorusRational fi = involution_pullback(f);
    const HPS scale{rat_pow(Int(z.q), -shift)};
    out.lhs_res0 = residue_at(f.shifted(shift), TorusPoint::zero);
    out.lhs_res1 = residue_at(f, TorusPoint::one);
    out.rhs_res0 = scale * residue_at(fi.shifted(-shift), TorusPoint::zero);
    out.rhs_res1 = scale * residue_at(fi, TorusPoint::one);
    out.ok = (out.lhs_res0 + out.lhs_res1) == (out.rhs_res0 + out.rhs_res1);
    return out;
}

} // namespace zetalab
