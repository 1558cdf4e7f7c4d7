#pragma once

#include "zetalab/field.hpp"
#include "zetalab/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace zetalab {

enum class CurveKind { elliptic, hyperelliptic, plane, p1 };

const char* curve_kind_name(CurveKind k);

struct PlaneMonomial {
    int ex = 0, ey = 0, ez = 0;
    int64_t coeff = 0;
};

// Declared curve over F_q. Elliptic and hyperelliptic models are
// y^2 + h(x) y = f(x) with ascending coefficient lists reduced mod p;
// plane models are homogeneous polynomials in (x, y, z). The model "p1"
// is the built-in reference line with N_m = q^m + 1 and g = 0.
struct CurveModel {
    std::string name;
    std::shared_ptr<const FieldSpec> base;
    CurveKind kind = CurveKind::p1;
    std::vector<int64_t> f, h;
    std::vector<PlaneMonomial> poly;
    int plane_degree = 0;
    int genus = 0;

    int64_t q() const { return base->q(); }
    // Canonical description of the defining data (name excluded); the count
    // cache file is named by a stable hash of this string.
    std::string canonical_key() const;
    std::string cache_id() const;
};

// Parses the [curve] key-value document described in the README.
CurveModel parse_curve(const std::string& text);

CurveModel make_p1(int64_t p, int k, const std::string& name = "p1");
CurveModel make_elliptic(int64_t p, int k, std::vector<int64_t> f, std::vector<int64_t> h,
                         const std::string& name = "elliptic");
CurveModel make_hyperelliptic(int64_t p, int k, std::vector<int64_t> f, std::vector<int64_t> h,
                              const std::string& name = "hyperelliptic");
CurveModel make_plane(int64_t p, int k, std::vector<PlaneMonomial> poly,
                      const std::string& name = "plane");

// #C(F_{q^m}), projective points, by exhaustive enumeration.
Int count_points(const CurveModel& curve, int m);

struct PointCountTable {
    std::string curve_id;
    std::vector<Int> counts; // counts[m-1] = N_m, m = 1..M
    std::vector<Int> a;      // a[l] closed points of degree l, a[0] = 0
    std::vector<Int> b;      // b[n] effective divisors of degree n, n = 0..M

    int max_degree() const { return static_cast<int>(counts.size()); }
    Int n(int m) const { return counts.at(static_cast<size_t>(m - 1)); }
};

// Moebius inversion l*a_l = sum_{d|l} mu(l/d) N_d, then the Euler product
// prod_l (1 - t^l)^{-a_l} truncated at t^M. Throws InconsistentCounts if any
// a_l comes out negative or non-integral.
PointCountTable closed_point_spectrum(const std::vector<Int>& counts);

std::vector<int> mobius_table(int n);

// Line-oriented count cache, one "<m>\t<N_m>" record per line.
std::map<int, Int> load_count_cache(const std::string& path);
void save_count_cache(const std::string& path, const std::map<int, Int>& entries);

// Cache-aware counting; cache_dir empty disables caching. Returns N_1..N_M.
std::vector<Int> counts_up_to(const CurveModel& curve, int max_degree,
                              const std::string& cache_dir = "");

} // namespace zetalab
