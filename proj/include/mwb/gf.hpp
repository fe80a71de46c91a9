#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mwb {

// Element of GF(p^k), stored as an integer code in [0, q).  The base-p
// digits of the code are the coefficients of the residue polynomial,
// little-endian (digit i = coefficient of x^i).
using FieldElement = int;

// Exact arithmetic in GF(p^k) for small prime powers (q <= 32 by default).
//
// The modulus is the canonical minimum: among monic irreducible degree-k
// polynomials over GF(p), the one with the smallest value of sum c_i * p^i.
// This makes representations reproducible across runs and implementations.
// Construction precomputes full operation tables; instances are immutable
// and safe to share between threads.
class FieldSpec {
public:
    static constexpr int kDefaultMaxOrder = 32;

    // Throws std::invalid_argument for non-prime p, k < 1, or p^k > max_order.
    static FieldSpec make(int p, int k, int max_order = kDefaultMaxOrder);

    // Convenience: factor q as p^k.  Throws when q is not a prime power.
    static FieldSpec of_order(int q, int max_order = kDefaultMaxOrder);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    // Length k+1, little-endian, monic.  For k == 1 this is x (i.e. {0,1});
    // prime fields never consult it.
    const std::vector<int>& modulus() const { return poly_; }

    bool valid(FieldElement a) const { return a >= 0 && a < q_; }

    FieldElement add(FieldElement a, FieldElement b) const { return add_[idx(a, b)]; }
    FieldElement sub(FieldElement a, FieldElement b) const { return sub_[idx(a, b)]; }
    FieldElement mul(FieldElement a, FieldElement b) const { return mul_[idx(a, b)]; }
    FieldElement neg(FieldElement a) const { return sub_[idx(0, a)]; }

    // Throws std::domain_error on inv(0).
    FieldElement inv(FieldElement a) const;

    // a^e with e >= 0 (0^0 = 1).
    FieldElement pow(FieldElement a, long long e) const;

    FieldElement one() const { return 1; }

    bool operator==(const FieldSpec& o) const {
        return p_ == o.p_ && k_ == o.k_ && poly_ == o.poly_;
    }

    // Base-p digit decode/encode between codes and coefficient vectors.
    std::vector<int> decode(FieldElement a) const;
    FieldElement encode(const std::vector<int>& coeffs) const;

    std::string str() const;

private:
    FieldSpec() = default;
    void build_tables();
    int idx(FieldElement a, FieldElement b) const { return a * q_ + b; }

    int p_ = 0, k_ = 0, q_ = 0;
    std::vector<int> poly_;
    std::vector<FieldElement> add_, sub_, mul_, inv_;
};

bool is_prime(int n);

// Exhaustive trial-division irreducibility test for monic polynomials over
// GF(p), little-endian coefficients.  Used by FieldSpec::make and exposed
// for tests.
bool poly_irreducible(const std::vector<int>& poly, int p);

}  // namespace mwb
