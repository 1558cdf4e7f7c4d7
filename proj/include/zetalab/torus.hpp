#pragma once

#include "zetalab/graded.hpp"

#include <array>
#include <vector>

namespace zetalab {

// Laurent polynomial in z with coefficients in Q(sqrt q); coefficient i of
// the backing vector is the z^{lo+i} coefficient. Trimmed at both ends.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(int n, const HPS& c);
    static LaurentPoly from_coeffs(int lo, std::vector<HPS> coeffs);

    bool is_zero() const { return c_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    HPS coeff(int n) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const HPS& c) const;
    LaurentPoly shifted(int k) const; // multiply by z^k

    HPS eval_at_one() const;
    HPS eval_at(const Rat& z0) const; // z0 != 0

    // z -> q^{-1} z^{-1}: coefficient c_n goes to c_n q^{-n} at degree -n
    LaurentPoly subst_q_inv(int64_t q) const;
    // z -> 1/w
    LaurentPoly reversed() const;

    // exact division by (1 - z) / (1 - c z); returns false if not divisible
    bool divide_one_minus_z(LaurentPoly& out) const;
    bool divide_one_minus_cz(const Rat& c, LaurentPoly& out) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        return a.lo_ == b.lo_ && a.c_ == b.c_;
    }

private:
    void trim();

    int lo_ = 0;
    std::vector<HPS> c_;
};

// Rational function num / ((1-z)^{e1} (1-qz)^{e2}) with e1, e2 in {0, 1} and
// Laurent num; canonical form has no cancellable pole factor. The only
// admitted singularities away from 0 and infinity are first-order poles at
// z = 1 and z = q^{-1}.
class TorusRational {
public:
    TorusRational() = default;
    TorusRational(LaurentPoly num, int e1, int e2, int64_t q);

    static TorusRational from_laurent(LaurentPoly num, int64_t q)
    {
        return TorusRational(std::move(num), 0, 0, q);
    }

    const LaurentPoly& num() const { return num_; }
    int e1() const { return e1_; }
    int e2() const { return e2_; }
    int64_t q() const { return q_; }
    bool is_zero() const { return num_.is_zero(); }

    TorusRational shifted(int k) const; // multiply by z^k
    TorusRational scaled(const HPS& c) const;
    friend TorusRational operator+(const TorusRational& a, const TorusRational& b);
    friend TorusRational operator-(const TorusRational& a, const TorusRational& b);

    friend bool operator==(const TorusRational& a, const TorusRational& b)
    {
        return a.e1_ == b.e1_ && a.e2_ == b.e2_ && a.num_ == b.num_;
    }
    friend bool operator!=(const TorusRational& a, const TorusRational& b) { return !(a == b); }

private:
    LaurentPoly num_;
    int e1_ = 0, e2_ = 0;
    int64_t q_ = 2;
};

// Mf(z) = sum f(n) z^n; bijective onto its image, inverse by canonical
// partial fractions.
TorusRational mellin(const GradedFunction& f);
GradedFunction inverse_mellin(const TorusRational& r);

// F_x(f)(z) = q_x^{-k/2} z^{-k} (1 - q_x^{-1} z^{-1}) (1-z)^{-1} f(q_x^{-1} z^{-1});
// conjugate of local_fourier under mellin. Input must have e2 = 0.
TorusRational torus_fourier_local(const TorusRational& r, int64_t q_x, int k_x);

// pullback along i(z) = q^{-1} z^{-1}; swaps the poles 1 <-> q^{-1} and 0 <-> infinity
TorusRational involution_pullback(const TorusRational& r);

// F_D(z) = z^d P(z) / ((1-z)(1-qz))
TorusRational standard_global(const ZetaData& z, int d);

enum class TorusPoint { zero, one, q_inv, infinity };

// residue of R dz/z at the four admissible points, exact in Q(sqrt q)
HPS residue_at(const TorusRational& r, TorusPoint pt);

struct ResidueReport {
    std::array<HPS, 4> at; // zero, one, q_inv, infinity
    HPS sum;
};

ResidueReport residue_report(const TorusRational& r);

struct PoissonCheck {
    HPS lhs_res0, lhs_res1; // res_0(z^shift f~ dz/z), res_1(f~ dz/z)
    HPS rhs_res0, rhs_res1; // same for z^{-shift} and i* f~
    bool ok = false;
};

PoissonCheck poisson_residue_check(const ZetaData& z, int d, int shift);

} // namespace zetalab
