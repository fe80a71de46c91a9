#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mwb {

// Set of ground-set indices, stored as a dynamic bitset.  Iteration is
// always in ascending index order; every enumeration in the library
// inherits this order so that returned witnesses are canonical.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<int> xs) {
        for (int x : xs) add(x);
    }

    static IndexSet of(const std::vector<int>& xs) {
        IndexSet s;
        for (int x : xs) s.add(x);
        return s;
    }

    // {0, 1, ..., n-1}
    static IndexSet range(int n) {
        IndexSet s;
        for (int i = 0; i < n; ++i) s.add(i);
        return s;
    }

    void add(int i) {
        ensure(i);
        w_[i >> 6] |= (uint64_t{1} << (i & 63));
    }

    void remove(int i) {
        if (i >= 0 && (i >> 6) < static_cast<int>(w_.size())) {
            w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
            normalize();
        }
    }

    bool contains(int i) const {
        if (i < 0 || (i >> 6) >= static_cast<int>(w_.size())) return false;
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    int size() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const { return w_.empty(); }

    void clear() { w_.clear(); }

    int min() const {  // -1 when empty
        for (size_t b = 0; b < w_.size(); ++b)
            if (w_[b]) return static_cast<int>(b * 64 + __builtin_ctzll(w_[b]));
        return -1;
    }

    int max() const {  // -1 when empty
        for (size_t b = w_.size(); b-- > 0;)
            if (w_[b]) return static_cast<int>(b * 64 + 63 - __builtin_clzll(w_[b]));
        return -1;
    }

    IndexSet& operator|=(const IndexSet& o) {
        if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
        for (size_t i = 0; i < o.w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    IndexSet& operator&=(const IndexSet& o) {
        if (w_.size() > o.w_.size()) w_.resize(o.w_.size());
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        normalize();
        return *this;
    }
    IndexSet& operator-=(const IndexSet& o) {
        size_t n = w_.size() < o.w_.size() ? w_.size() : o.w_.size();
        for (size_t i = 0; i < n; ++i) w_[i] &= ~o.w_[i];
        normalize();
        return *this;
    }

    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

    bool intersects(const IndexSet& o) const {
        size_t n = w_.size() < o.w_.size() ? w_.size() : o.w_.size();
        for (size_t i = 0; i < n; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool subset_of(const IndexSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t ow = i < o.w_.size() ? o.w_[i] : 0;
            if (w_[i] & ~ow) return false;
        }
        return true;
    }

    bool operator==(const IndexSet& o) const { return w_ == o.w_; }
    bool operator!=(const IndexSet& o) const { return w_ != o.w_; }

    template <class F>
    void for_each(F f) const {
        for (size_t b = 0; b < w_.size(); ++b) {
            uint64_t w = w_[b];
            while (w) {
                f(static_cast<int>(b * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> elements() const {
        std::vector<int> v;
        v.reserve(size());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    // Lexicographic order of the ascending element sequences; this is the
    // canonical order used for witnesses and flat enumeration.
    static bool lex_less(const IndexSet& a, const IndexSet& b) {
        auto va = a.elements(), vb = b.elements();
        return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
    }

    struct LexLess {
        bool operator()(const IndexSet& a, const IndexSet& b) const { return lex_less(a, b); }
    };

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int i) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        });
        return s + "}";
    }

private:
    void ensure(int i) {
        size_t need = static_cast<size_t>(i >> 6) + 1;
        if (w_.size() < need) w_.resize(need, 0);
    }
    void normalize() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }

    std::vector<uint64_t> w_;
};

}  // namespace mwb
