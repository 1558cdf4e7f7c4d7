#pragma once

#include "zetalab/halfpower.hpp"
#include "zetalab/zeta.hpp"

#include <map>

namespace zetalab {

// D: finitely supported; D_plus: eventually constant; D_plus_plus: eventually
// a*q^n + b.
enum class GradedSpace { d, d_plus, d_plus_plus };

const char* graded_space_name(GradedSpace s);

// Function Z -> Q(sqrt q) with the tail shape of its space. Canonical form:
// explicit values only below tail_start, none equal to the tail continuation,
// and tail_start minimal. Immutable value type.
class GradedFunction {
public:
    GradedFunction() = default;

    static GradedFunction zero(GradedSpace space, int64_t q);
    // delta_{(m)}
    static GradedFunction delta(GradedSpace space, int64_t q, int m, const HPS& c = HPS(1));
    // delta_{(>= m)}, lives in D_plus (or above)
    static GradedFunction delta_geq(GradedSpace space, int64_t q, int m, const HPS& c = HPS(1));
    // explicit values below tail_start, then a*q^n + b from tail_start on
    static GradedFunction build(GradedSpace space, int64_t q, std::map<int, HPS> below,
                                int tail_start, HPS tail_a, HPS tail_b);

    GradedSpace space() const { return space_; }
    int64_t q() const { return q_; }
    const std::map<int, HPS>& explicit_values() const { return vals_; }
    int tail_start() const { return tail_start_; }
    const HPS& tail_a() const { return tail_a_; }
    const HPS& tail_b() const { return tail_b_; }

    HPS eval(int n) const;
    // smallest index with a nonzero value; 0 for the zero function
    int min_index() const;
    bool is_zero() const;

    GradedFunction& operator+=(const GradedFunction& other);
    friend GradedFunction operator+(GradedFunction x, const GradedFunction& y) { return x += y; }
    GradedFunction scaled(const HPS& c) const;
    GradedFunction as_space(GradedSpace target) const;

    // pointwise equality (space tags not compared)
    friend bool operator==(const GradedFunction& x, const GradedFunction& y);
    friend bool operator!=(const GradedFunction& x, const GradedFunction& y) { return !(x == y); }

private:
    void canonicalize();

    GradedSpace space_ = GradedSpace::d;
    int64_t q_ = 0;
    std::map<int, HPS> vals_;
    int tail_start_ = 0;
    HPS tail_a_, tail_b_;
};

// The tail functional delta_(0): the limit of f at +infinity. Defined on
// D_plus only.
HPS tail_functional(const GradedFunction& f);

// F(delta_{>=m}) = q_x^{-k_x/2 - m} delta_{>= -k_x - m}, extended by the
// telescoped basis decomposition c_m = f(m) - f(m-1). Involution for fixed k_x.
GradedFunction local_fourier(const GradedFunction& f, int64_t q_x, int k_x);

// (f*g)(n) = sum_m f(n-m) g(m), f finitely supported.
GradedFunction convolve(const GradedFunction& f, const GradedFunction& g);

// Fourier transform on D_plus_plus through the dual-torus involution
// z -> 1/(qz); on finite support it agrees with n -> q^n f(-n) pointwise.
GradedFunction graded_fourier_pp(const GradedFunction& f, int64_t q);

// n -> b_{n-d}, tail (h q^{1-g-d}/(q-1)) q^n - h/(q-1) from n = d+2g-1.
GradedFunction pushforward_standard(const ZetaData& z, int d);

} // namespace zetalab
