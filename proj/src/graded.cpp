#include "zetalab/graded.hpp"

#include "zetalab/torus.hpp"

namespace zetalab {

const char* graded_space_name(GradedSpace s)
{
    switch (s) {
    case GradedSpace::d:         return "D";
    case GradedSpace::d_plus:    return "D_plus";
    case GradedSpace::d_plus_plus: return "D_plus_plus";
    }
    return "?";
}

GradedFunction GradedFunction::zero(GradedSpace space, int64_t q)
{
    GradedFunction f;
    f.space_ = space;
    f.q_ = q;
    return f;
}

GradedFunction GradedFunction::delta(GradedSpace space, int64_t q, int m, const HPS& c)
{
    return build(space, q, {{m, c}}, m + 1, HPS(0), HPS(0));
}

GradedFunction GradedFunction::delta_geq(GradedSpace space, int64_t q, int m, const HPS& c)
{
    if (space == GradedSpace::d)
        fail(errc::space_mismatch, "delta_{>=m} has infinite support, not a D element");
    return build(space, q, {}, m, HPS(0), c);
}

GradedFunction GradedFunction::build(GradedSpace space, int64_t q, std::map<int, HPS> below,
                                     int tail_start, HPS tail_a, HPS tail_b)
{
    if (space != GradedSpace::d_plus_plus && !tail_a.is_zero())
        fail(errc::space_mismatch, "geometric tail needs D_plus_plus");
    if (space == GradedSpace::d && !tail_b.is_zero())
        fail(errc::space_mismatch, "constant tail needs D_plus");
    if (!tail_a.is_zero() && q < 2)
        fail(errc::invalid_argument, "geometric tail needs an ambient q >= 2");
    GradedFunction f;
    f.space_ = space;
    f.q_ = q;
    f.vals_ = std::move(below);
    f.tail_start_ = tail_start;
    f.tail_a_ = std::move(tail_a);
    f.tail_b_ = std::move(tail_b);
    f.canonicalize();
    return f;
}

void GradedFunction::canonicalize()
{
    for (auto it = vals_.begin(); it != vals_.end();) {
        if (it->first >= tail_start_ || it->second.is_zero())
            it = vals_.erase(it);
        else
            ++it;
    }
    if (tail_a_.is_zero() && tail_b_.is_zero()) {
        tail_start_ = vals_.empty() ? 0 : vals_.rbegin()->first + 1;
        return;
    }
    // pull the tail threshold down over matching explicit values; a nonzero
    // tail a q^n + b vanishes for at most one n, so this stops just below the
    // explicit support
    while (true) {
        int n = tail_start_ - 1;
        HPS here = HPS(0);
        auto it = vals_.find(n);
        if (it != vals_.end()) here = it->second;
        HPS tail_val = tail_a_.is_zero() ? tail_b_
                                         : tail_a_ * half_power(q_, 2L * n) + tail_b_;
        if (here != tail_val) break;
        if (it != vals_.end()) vals_.erase(it);
        tail_start_ = n;
    }
}

HPS GradedFunction::eval(int n) const
{
    if (n >= tail_start_) {
        if (tail_a_.is_zero()) return tail_b_;
        return tail_a_ * half_power(q_, 2L * n) + tail_b_;
    }
    auto it = vals_.find(n);
    return it == vals_.end() ? HPS(0) : it->second;
}

int GradedFunction::min_index() const
{
    if (!vals_.empty()) return vals_.begin()->first;
    return tail_start_;
}

bool GradedFunction::is_zero() const
{
    return vals_.empty() && tail_a_.is_zero() && tail_b_.is_zero();
}

GradedFunction& GradedFunction::operator+=(const GradedFunction& other)
{
    if (q_ == 0) q_ = other.q_;
    else if (other.q_ != 0 && other.q_ != q_)
        fail(errc::space_mismatch, "adding functions over different q");
    GradedSpace space = std::max(space_, other.space_);
    int ts = std::max(tail_start_, other.tail_start_);
    std::map<int, HPS> vals;
    int lo = std::min(min_index(), other.min_index());
    for (int n = lo; n < ts; ++n) {
        HPS v = eval(n) + other.eval(n);
        if (!v.is_zero()) vals[n] = v;
    }
    *this = build(space, q_, std::move(vals), ts, tail_a_ + other.tail_a_, tail_b_ + other.tail_b_);
    return *this;
}

GradedFunction GradedFunction::scaled(const HPS& c) const
{
    if (c.is_zero()) return zero(space_, q_);
    std::map<int, HPS> vals;
    for (const auto& [n, v] : vals_) vals[n] = v * c;
    return build(space_, q_, std::move(vals), tail_start_, tail_a_ * c, tail_b_ * c);
}

GradedFunction GradedFunction::as_space(GradedSpace target) const
{
    if (target < space_) {
        if (!tail_a_.is_zero() || (target == GradedSpace::d && !tail_b_.is_zero()))
            fail(errc::space_mismatch, "tail does not fit the requested space");
    }
    GradedFunction f = *this;
    f.space_ = target;
    return f;
}

bool operator==(const GradedFunction& x, const GradedFunction& y)
{
    if (!x.tail_a_.is_zero() || !y.tail_a_.is_zero())
        if (x.q_ != y.q_) return false;
    return x.vals_ == y.vals_ && x.tail_start_ == y.tail_start_ && x.tail_a_ == y.tail_a_ &&
           x.tail_b_ == y.tail_b_;
}

HPS tail_functional(const GradedFunction& f)
{
    if (f.space() != GradedSpace::d_plus)
        fail(errc::space_mismatch, "tail functional is defined on D_plus only");
    return f.tail_b();
}

GradedFunction local_fourier(const GradedFunction& f, int64_t q_x, int k_x)
{
    if (f.space() != GradedSpace::d_plus)
        fail(errc::space_mismatch, "local Fourier transform acts on D_plus");
    if (f.q() != 0 && f.q() != q_x)
        fail(errc::space_mismatch, "function coefficients live over a different q");

    // f = sum_m c_m delta_{>=m}, c_m = f(m) - f(m-1), supported in
    // [min_index, tail_start]; each basis vector maps by the local rule.
    GradedFunction out = GradedFunction::zero(GradedSpace::d_plus, q_x);
    const int lo = f.min_index();
    for (int m = lo; m <= f.tail_start(); ++m) {
        HPS c = f.eval(m) - f.eval(m - 1);
        if (c.is_zero()) continue;
        out += GradedFunction::delta_geq(GradedSpace::d_plus, q_x, -k_x - m,
                                         c * half_power(q_x, -k_x - 2L * m));
    }
    return out;
}

GradedFunction convolve(const GradedFunction& f, const GradedFunction& g)
{
    if (f.space() != GradedSpace::d)
        fail(errc::space_mismatch, "convolution needs a finitely supported left factor");
    if (g.space() == GradedSpace::d_plus_plus)
        fail(errc::space_mismatch, "convolution with D_plus_plus is not defined here");
    int64_t q = f.q() != 0 ? f.q() : g.q();
    if (f.q() != 0 && g.q() != 0 && f.q() != g.q())
        fail(errc::space_mismatch, "convolving functions over different q");

    HPS total(0); // sum of f
    for (const auto& [n, v] : f.explicit_values()) total += v;

    int ts = g.tail_start() + (f.explicit_values().empty() ? 0 : f.explicit_values().rbegin()->first);
    int lo = g.min_index() + (f.explicit_values().empty() ? 0 : f.explicit_values().begin()->first);
    std::map<int, HPS> vals;
    for (int n = lo; n < ts; ++n) {
        HPS acc(0);
        for (const auto& [k, v] : f.explicit_values()) acc += v * g.eval(n - k);
        if (!acc.is_zero()) vals[n] = acc;
    }
    return GradedFunction::build(g.space(), q, std::move(vals), ts, HPS(0), total * g.tail_b());
}

GradedFunction graded_fourier_pp(const GradedFunction& f, int64_t q)
{
    if (f.q() != 0 && f.q() != q)
        fail(errc::space_mismatch, "function lives over a different q");
    GradedFunction g = f;
    if (g.space() != GradedSpace::d_plus_plus) g = g.as_space(GradedSpace::d_plus_plus);
    if (g.q() == 0) g = GradedFunction::build(GradedSpace::d_plus_plus, q, g.explicit_values(),
                                              g.tail_start(), g.tail_a(), g.tail_b());
    return inverse_mellin(involution_pullback(mellin(g)));
}

GradedFunction pushforward_standard(const ZetaData& z, int d)
{
    const int ts = d + std::max(2 * z.g - 1, 0);
    auto b = series_coefficients(z, std::max(2 * z.g - 2, 0));
    std::map<int, HPS> vals;
    for (int n = d; n < ts; ++n) vals[n] = HPS(Rat(b[static_cast<size_t>(n - d)]));
    Rat vol(z.class_number(), z.q - 1);
    HPS tail_a(vol * rat_pow(Int(z.q), 1 - z.g - d));
    HPS tail_b(-vol);
    return GradedFunction::build(GradedSpace::d_plus_plus, z.q, std::move(vals), ts, tail_a, tail_b);
}

} // namespace zetalab
