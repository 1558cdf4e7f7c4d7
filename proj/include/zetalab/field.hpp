#pragma once

#include "zetalab/errors.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace zetalab {

// Element of F_{p^k}, as coefficients of 1, x, ..., x^{k-1} mod the field's
// modulus. Always length k, entries in [0, p).
using FieldCoeffs = std::vector<int64_t>;

// Cardinality cap for every constructed field.
inline constexpr int64_t kFieldCardinalityCap = int64_t(1) << 20;

// F_{p^k} with a fixed monic irreducible modulus of degree k (ascending
// coefficients, size k+1). For k = 1 the modulus is the sentinel x.
// Immutable after construction; all member functions are const.
class FieldSpec {
public:
    // Modulus is the lexicographically smallest monic irreducible of degree k,
    // comparing coefficient lists from the constant term up. Deterministic.
    static FieldSpec build(int64_t p, int k);

    int64_t p() const { return p_; }
    int k() const { return k_; }
    int64_t q() const { return q_; }
    const std::vector<int64_t>& modulus() const { return modulus_; }

    FieldCoeffs zero() const { return FieldCoeffs(static_cast<size_t>(k_), 0); }
    FieldCoeffs one() const;
    // n mod p, embedded through the prime subfield.
    FieldCoeffs from_int(int64_t n) const;
    // x mod modulus (the generator used for embeddings); equals 1 when k = 1.
    FieldCoeffs gen() const;

    bool is_zero(const FieldCoeffs& a) const;

    FieldCoeffs add(const FieldCoeffs& a, const FieldCoeffs& b) const;
    FieldCoeffs sub(const FieldCoeffs& a, const FieldCoeffs& b) const;
    FieldCoeffs neg(const FieldCoeffs& a) const;
    FieldCoeffs mul(const FieldCoeffs& a, const FieldCoeffs& b) const;
    FieldCoeffs inv(const FieldCoeffs& a) const;
    FieldCoeffs pow(const FieldCoeffs& a, uint64_t e) const;

    // Counting order: index n has digits of n in base p as coefficients,
    // least significant digit = constant term. index_of is its inverse.
    FieldCoeffs element(int64_t index) const;
    int64_t index_of(const FieldCoeffs& a) const;

    // Horner evaluation of a polynomial with coefficients in this field.
    FieldCoeffs eval_poly(const std::vector<FieldCoeffs>& poly, const FieldCoeffs& x) const;

    bool same_spec(const FieldSpec& other) const
    {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

private:
    FieldSpec(int64_t p, int k, std::vector<int64_t> modulus);

    void check_element(const FieldCoeffs& a) const;

    int64_t p_;
    int k_;
    int64_t q_;
    std::vector<int64_t> modulus_;
};

// Field homomorphism small -> big, determined by where the generator goes.
struct Embedding {
    const FieldSpec* small = nullptr;
    const FieldSpec* big = nullptr;
    FieldCoeffs gen_image; // element of big, a root of small.modulus

    FieldCoeffs map(const FieldCoeffs& a) const;
};

struct EnumerationResult {
    std::vector<FieldCoeffs> elements; // all q elements of big, counting order
    Embedding embedding;
};

// Requires big.p == small.p and small.k | big.k. The generator of small is
// sent to the first root of small.modulus in enumeration order.
EnumerationResult enumerate_and_embed(const FieldSpec& small, const FieldSpec& big);

// Polynomial utilities over F_p (dense ascending coefficients, no leading zeros).
namespace poly_fp {
std::vector<int64_t> trim(std::vector<int64_t> a);
std::vector<int64_t> mul(const std::vector<int64_t>& a, const std::vector<int64_t>& b, int64_t p);
std::vector<int64_t> mod(std::vector<int64_t> a, const std::vector<int64_t>& m, int64_t p);
std::vector<int64_t> gcd(std::vector<int64_t> a, std::vector<int64_t> b, int64_t p);
std::vector<int64_t> derivative(const std::vector<int64_t>& a, int64_t p);
bool is_irreducible(const std::vector<int64_t>& m, int64_t p);
} // namespace poly_fp

bool is_prime(int64_t n);

} // namespace zetalab
