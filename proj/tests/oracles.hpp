#pragma once

// Independent test oracles.  Everything here recomputes results from first
// principles (exhaustive scans, naive arithmetic) without touching the
// library's elimination, search, or table machinery, so library results can
// be checked against a genuinely separate path.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mwb/gf.hpp"
#include "mwb/index_set.hpp"
#include "mwb/matroid.hpp"

namespace oracle {

// Naive little-endian polynomial product over GF(p).
inline std::vector<int> poly_mul(const std::vector<int>& f, const std::vector<int>& g, int p) {
    if (f.empty() || g.empty()) return {};
    std::vector<int> h(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p;
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

// Reducibility by exhaustively multiplying out candidate monic factor pairs.
inline bool poly_irreducible(std::vector<int> f, int p) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1 || f.back() != 1) return false;
    if (deg == 1) return true;
    auto monics = [&](int d) {
        std::vector<std::vector<int>> out;
        long long total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (long long c = 0; c < total; ++c) {
            std::vector<int> g(d + 1, 0);
            long long t = c;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(t % p);
                t /= p;
            }
            g[d] = 1;
            out.push_back(std::move(g));
        }
        return out;
    };
    for (int d1 = 1; d1 <= deg / 2; ++d1)
        for (const auto& a : monics(d1))
            for (const auto& b : monics(deg - d1))
                if (poly_mul(a, b, p) == f) return false;
    return true;
}

// Independence of field-coordinate columns by scanning every nonzero
// coefficient vector, with naive per-call polynomial arithmetic through the
// FieldSpec tables only for scalar ops (tables are themselves tested against
// poly_mul above).
inline bool columns_independent(const mwb::FieldSpec& fs,
                                const std::vector<std::vector<mwb::FieldElement>>& cols) {
    int s = static_cast<int>(cols.size());
    if (s == 0) return true;
    long long total = 1;
    for (int i = 0; i < s; ++i) {
        total *= fs.q();
        if (total > 4000000) throw std::runtime_error("oracle: too many coefficient vectors");
    }
    int rows = static_cast<int>(cols[0].size());
    for (long long code = 1; code < total; ++code) {
        long long t = code;
        std::vector<int> coef(s);
        for (int i = 0; i < s; ++i) {
            coef[i] = static_cast<int>(t % fs.q());
            t /= fs.q();
        }
        bool zero = true;
        for (int r = 0; r < rows && zero; ++r) {
            int acc = 0;
            for (int i = 0; i < s; ++i) acc = fs.add(acc, fs.mul(coef[i], cols[i][r]));
            if (acc != 0) zero = false;
        }
        if (zero) return false;
    }
    return true;
}

// Brute-force rank: size of the largest independent subset.
inline int rank_of_columns(const mwb::FieldSpec& fs,
                           const std::vector<std::vector<mwb::FieldElement>>& cols) {
    int n = static_cast<int>(cols.size());
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::vector<mwb::FieldElement>> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(cols[i]);
        if (static_cast<int>(sub.size()) <= best) continue;
        if (columns_independent(fs, sub)) best = static_cast<int>(sub.size());
    }
    return best;
}

inline int brute_rank(const mwb::Matroid& lin, const mwb::IndexSet& X) {
    auto lv = lin.linear_view();
    std::vector<std::vector<mwb::FieldElement>> sub;
    X.for_each([&](int i) { sub.push_back((*lv->cols)[i]); });
    return rank_of_columns(*lv->fs, sub);
}

// All restriction witnesses by scanning every injection target -> host;
// returns the lexicographically least sorted image, or nullopt.
inline std::optional<std::vector<int>> brute_least_restriction_image(const mwb::Matroid& host,
                                                                     const mwb::Matroid& target) {
    int t = target.size(), n = host.size();
    std::vector<int> map(t, -1);
    std::vector<char> used(n, 0);
    std::optional<std::vector<int>> best;

    std::function<void(int)> rec = [&](int pos) {
        if (pos == t) {
            for (uint32_t mask = 0; mask < (1u << t); ++mask) {
                mwb::IndexSet sub, img;
                for (int i = 0; i < t; ++i)
                    if (mask & (1u << i)) {
                        sub.add(i);
                        img.add(map[i]);
                    }
                if (target.rank(sub) != host.rank(img)) return;
            }
            std::vector<int> image = map;
            std::sort(image.begin(), image.end());
            if (!best || std::lexicographical_compare(image.begin(), image.end(), best->begin(),
                                                      best->end()))
                best = image;
            return;
        }
        for (int h = 0; h < n; ++h) {
            if (used[h]) continue;
            used[h] = 1;
            map[pos] = h;
            rec(pos + 1);
            used[h] = 0;
            map[pos] = -1;
        }
    };
    rec(0);
    return best;
}

// Parallel-class count from pairwise rank queries only.
inline int brute_epsilon(const mwb::Matroid& M) {
    int n = M.size();
    std::vector<int> cls(n, -1);
    int next = 0;
    for (int e = 0; e < n; ++e) {
        if (M.rank(mwb::IndexSet{e}) == 0) continue;
        bool placed = false;
        for (int f = 0; f < e && !placed; ++f) {
            if (cls[f] < 0) continue;
            if (M.rank(mwb::IndexSet{e, f}) == 1) {
                cls[e] = cls[f];
                placed = true;
            }
        }
        if (!placed) cls[e] = next++;
    }
    return next;
}

}  // namespace oracle
