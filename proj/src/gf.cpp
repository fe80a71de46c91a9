#include "mwb/gf.hpp"

#include <stdexcept>

namespace mwb {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Little-endian polynomial helpers over GF(p), coefficients in [0, p).

void trim(std::vector<int>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::vector<int> poly_mul(const std::vector<int>& f, const std::vector<int>& g, int p) {
    if (f.empty() || g.empty()) return {};
    std::vector<int> h(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            h[i + j] = (h[i + j] + f[i] * g[j]) % p;
    trim(h);
    return h;
}

// f mod g, g monic.
std::vector<int> poly_mod(std::vector<int> f, const std::vector<int>& g, int p) {
    trim(f);
    int dg = static_cast<int>(g.size()) - 1;
    while (static_cast<int>(f.size()) - 1 >= dg && !f.empty()) {
        int df = static_cast<int>(f.size()) - 1;
        int c = f.back();
        for (int i = 0; i <= dg; ++i) {
            int& t = f[df - dg + i];
            t = ((t - c * g[i]) % p + p) % p;
        }
        trim(f);
    }
    return f;
}

}  // namespace

bool poly_irreducible(const std::vector<int>& poly, int p) {
    std::vector<int> f = poly;
    trim(f);
    int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    if (f.back() != 1) return false;  // monic only
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long c = 0; c < count; ++c) {
            std::vector<int> g(d + 1, 0);
            long long t = c;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

FieldSpec FieldSpec::make(int p, int k, int max_order) {
    if (!is_prime(p)) throw std::invalid_argument("FieldSpec: p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw std::invalid_argument("FieldSpec: k must be >= 1");
    long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > max_order)
            throw std::invalid_argument("FieldSpec: order p^k exceeds the configured limit " +
                                        std::to_string(max_order));
    }

    FieldSpec fs;
    fs.p_ = p;
    fs.k_ = k;
    fs.q_ = static_cast<int>(q);

    // Smallest sum c_i p^i over monic irreducibles of degree k.  Iterating
    // the lower coefficients as a base-p counter visits candidates in
    // exactly that order.
    for (long long c = 0; c < q; ++c) {
        std::vector<int> cand(k + 1, 0);
        long long t = c;
        for (int i = 0; i < k; ++i) {
            cand[i] = static_cast<int>(t % p);
            t /= p;
        }
        cand[k] = 1;
        if (poly_irreducible(cand, p)) {
            fs.poly_ = cand;
            break;
        }
    }
    fs.build_tables();
    return fs;
}

FieldSpec FieldSpec::of_order(int q, int max_order) {
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        long long v = p;
        int k = 1;
        while (v < q) {
            v *= p;
            ++k;
        }
        if (v == q) return make(p, k, max_order);
    }
    throw std::invalid_argument("FieldSpec: " + std::to_string(q) + " is not a prime power");
}

std::vector<int> FieldSpec::decode(FieldElement a) const {
    std::vector<int> c(k_, 0);
    for (int i = 0; i < k_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

FieldElement FieldSpec::encode(const std::vector<int>& coeffs) const {
    FieldElement a = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) a = a * p_ + (coeffs[i] % p_ + p_) % p_;
    return a;
}

void FieldSpec::build_tables() {
    add_.assign(q_ * q_, 0);
    sub_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    for (int a = 0; a < q_; ++a) {
        auto ca = decode(a);
        for (int b = 0; b < q_; ++b) {
            auto cb = decode(b);
            std::vector<int> s(k_), d(k_);
            for (int i = 0; i < k_; ++i) {
                s[i] = (ca[i] + cb[i]) % p_;
                d[i] = ((ca[i] - cb[i]) % p_ + p_) % p_;
            }
            add_[idx(a, b)] = encode(s);
            sub_[idx(a, b)] = encode(d);
            auto prod = poly_mod(poly_mul(ca, cb, p_), poly_, p_);
            prod.resize(k_, 0);
            mul_[idx(a, b)] = encode(prod);
        }
    }
    inv_.assign(q_, 0);
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[idx(a, b)] == 1) {
                inv_[a] = b;
                break;
            }
}

FieldElement FieldSpec::inv(FieldElement a) const {
    if (a == 0) throw std::domain_error("FieldSpec: inverse of zero");
    return inv_[a];
}

FieldElement FieldSpec::pow(FieldElement a, long long e) const {
    FieldElement r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::string FieldSpec::str() const {
    return "GF(" + std::to_string(q_) + ")";
}

}  // namespace mwb
