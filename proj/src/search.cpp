#include "mwb/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "mwb/geometry.hpp"

namespace mwb {

namespace {

std::atomic<uint64_t> g_nodes{0};

struct BudgetHit {};

// Backtracking placement of a simple target into a host.
//
// Rank agreement on all subsets of size <= r(T)+1 is equivalent to full
// rank-table agreement (independence determines rank, and no image set can
// contain an independent set larger than r(T) once agreement holds at size
// r(T)+1), so leaf verification stops at that size.
class RestrictionSearcher {
public:
    RestrictionSearcher(const Matroid& host, const Matroid& target, const SearchOptions& opts)
        : host_(host), target_(target), opts_(opts) {
        t_ = target.size();
        n_ = host.size();
        if (t_ > 20) throw std::invalid_argument("find_restriction: target too large (> 20 elements)");
        rt_ = target.full_rank();
        host_loop_.assign(n_, 0);
        for (int h = 0; h < n_; ++h) host_loop_[h] = host.rank(IndexSet{h}) == 0;
        pair_rank_.assign(static_cast<size_t>(n_) * n_, -1);

        // Static extension order: descending number of collinear triples
        // through the element; collinearity carries most of the pruning
        // signal in geometric targets.
        std::vector<int> degree(t_, 0);
        for (int a = 0; a < t_; ++a)
            for (int b = a + 1; b < t_; ++b)
                for (int c = b + 1; c < t_; ++c)
                    if (trank((1u << a) | (1u << b) | (1u << c)) == 2) {
                        ++degree[a];
                        ++degree[b];
                        ++degree[c];
                    }
        ord_.resize(t_);
        for (int i = 0; i < t_; ++i) ord_[i] = i;
        std::stable_sort(ord_.begin(), ord_.end(),
                         [&](int a, int b) { return degree[a] > degree[b]; });
    }

    RestrictionResult run() {
        RestrictionResult res{Outcome::None, std::nullopt, 0};
        try {
            if (!opts_.canonical_least) {
                if (search_with_fixed({})) res = {Outcome::Found, witness_, 0};
            } else {
                // Greedy lex-minimal sorted image: fix its elements one at a
                // time, each time asking whether some witness agrees with the
                // prefix and continues strictly above it.
                std::vector<int> fixed;
                bool dead = false;
                for (int j = 0; j < t_ && !dead; ++j) {
                    int lo = fixed.empty() ? -1 : fixed.back();
                    bool extended = false;
                    for (int h = lo + 1; h < n_; ++h) {
                        fixed.push_back(h);
                        if (search_with_fixed(fixed)) {
                            extended = true;
                            break;
                        }
                        fixed.pop_back();
                    }
                    if (!extended) dead = true;
                }
                if (!dead) res = {Outcome::Found, witness_, 0};
            }
        } catch (const BudgetHit&) {
            res = {Outcome::Inconclusive, std::nullopt, 0};
        }
        res.nodes = nodes_;
        g_nodes.fetch_add(nodes_, std::memory_order_relaxed);
        return res;
    }

private:
    int trank(uint32_t mask) {
        auto it = trank_memo_.find(mask);
        if (it != trank_memo_.end()) return it->second;
        IndexSet s;
        for (int i = 0; i < t_; ++i)
            if (mask & (1u << i)) s.add(i);
        int r = target_.rank(s);
        trank_memo_.emplace(mask, r);
        return r;
    }

    int hrank_pair(int a, int b) {
        auto& slot = pair_rank_[static_cast<size_t>(a) * n_ + b];
        if (slot < 0) {
            slot = static_cast<int8_t>(host_.rank(IndexSet{a, b}));
            pair_rank_[static_cast<size_t>(b) * n_ + a] = slot;
        }
        return slot;
    }

    // Search for a witness whose sorted image starts exactly with `fixed`
    // (image agrees with fixed on [0, max(fixed)]) and uses only elements
    // above max(fixed) otherwise.  Empty `fixed` places no constraint.
    bool search_with_fixed(const std::vector<int>& fixed) {
        fixed_ = &fixed;
        lo_ = fixed.empty() ? -1 : fixed.back();
        assignment_.assign(t_, -1);
        used_.assign(n_, 0);
        fixed_used_ = 0;
        return dfs(0);
    }

    bool dfs(int pos) {
        if (pos == t_) return verify_leaf();
        int tau = ord_[pos];

        // Unused fixed hosts must still fit into the remaining positions.
        int remaining = t_ - pos;
        int fixed_left = static_cast<int>(fixed_->size()) - fixed_used_;
        if (fixed_left > remaining) return false;

        auto try_host = [&](int h) -> bool {
            ++nodes_;
            if (opts_.node_budget && nodes_ > opts_.node_budget) throw BudgetHit{};
            if (used_[h] || host_loop_[h]) return false;
            for (int sigma = 0; sigma < t_; ++sigma) {
                if (assignment_[sigma] < 0 || sigma == tau) continue;
                if (hrank_pair(h, assignment_[sigma]) != 2) return false;  // target is simple
            }
            if (opts_.prune_depth >= 3) {
                for (int s1 = 0; s1 < t_; ++s1) {
                    if (assignment_[s1] < 0 || s1 == tau) continue;
                    for (int s2 = s1 + 1; s2 < t_; ++s2) {
                        if (assignment_[s2] < 0 || s2 == tau) continue;
                        int tr = trank((1u << tau) | (1u << s1) | (1u << s2));
                        int hr = host_.rank(IndexSet{h, assignment_[s1], assignment_[s2]});
                        if (tr != hr) return false;
                    }
                }
            }
            assignment_[tau] = h;
            used_[h] = 1;
            bool was_fixed = std::binary_search(fixed_->begin(), fixed_->end(), h);
            if (was_fixed) ++fixed_used_;
            if (dfs(pos + 1)) return true;
            assignment_[tau] = -1;
            used_[h] = 0;
            if (was_fixed) --fixed_used_;
            return false;
        };

        for (int h : *fixed_)
            if (try_host(h)) return true;
        for (int h = lo_ + 1; h < n_; ++h)
            if (try_host(h)) return true;
        return false;
    }

    bool verify_leaf() {
        // All fixed hosts consumed?
        if (fixed_used_ != static_cast<int>(fixed_->size())) return false;
        for (uint32_t mask = 0; mask < (1u << t_); ++mask) {
            if (__builtin_popcount(mask) > rt_ + 1) continue;
            IndexSet img;
            for (int i = 0; i < t_; ++i)
                if (mask & (1u << i)) img.add(assignment_[i]);
            if (trank(mask) != host_.rank(img)) return false;
        }
        witness_ = RestrictionWitness{assignment_};
        return true;
    }

    const Matroid& host_;
    const Matroid& target_;
    SearchOptions opts_;
    int t_, n_, rt_;
    std::vector<int> ord_;
    std::vector<char> host_loop_;
    std::vector<int8_t> pair_rank_;
    std::unordered_map<uint32_t, int> trank_memo_;

    const std::vector<int>* fixed_ = nullptr;
    int lo_ = -1;
    std::vector<int> assignment_;
    std::vector<char> used_;
    int fixed_used_ = 0;
    uint64_t nodes_ = 0;
    std::optional<RestrictionWitness> witness_;
};

void require_searchable(const Matroid& host, const Matroid& target) {
    if (!is_simple(target)) throw std::invalid_argument("find_restriction: target must be simple");
    if (target.size() > host.size())
        throw std::invalid_argument("find_restriction: target larger than host");
    if (target.full_rank() > host.full_rank())
        throw std::invalid_argument("find_restriction: target rank exceeds host rank");
}

}  // namespace

uint64_t search_node_count() { return g_nodes.load(std::memory_order_relaxed); }
void reset_search_node_count() { g_nodes.store(0, std::memory_order_relaxed); }

RestrictionResult find_restriction(const Matroid& host, const Matroid& target,
                                   const SearchOptions& opts) {
    require_searchable(host, target);
    RestrictionSearcher s(host, target, opts);
    auto res = s.run();
    if (res.outcome == Outcome::Found && !verify_restriction(host, target, *res.witness))
        throw std::logic_error("find_restriction: internal error, witness failed re-verification");
    return res;
}

bool verify_restriction(const Matroid& host, const Matroid& target, const RestrictionWitness& w) {
    int t = target.size();
    if (static_cast<int>(w.map.size()) != t) return false;
    std::vector<char> seen(host.size(), 0);
    for (int h : w.map) {
        if (h < 0 || h >= host.size() || seen[h]) return false;
        seen[h] = 1;
    }
    if (t > 20) return false;
    int rt = target.full_rank();
    bool full_table = t <= 16;
    for (uint32_t mask = 0; mask < (1u << t); ++mask) {
        if (!full_table && __builtin_popcount(mask) > rt + 1) continue;
        IndexSet sub, img;
        for (int i = 0; i < t; ++i)
            if (mask & (1u << i)) {
                sub.add(i);
                img.add(w.map[i]);
            }
        if (target.rank(sub) != host.rank(img)) return false;
    }
    return true;
}

bool verify_pg_restriction(const Matroid& host, int m, int q, const RestrictionWitness& w) {
    auto target = pg(m, q);
    int t = target->size();
    if (static_cast<int>(w.map.size()) != t) return false;

    std::vector<char> seen(host.size(), 0);
    for (int h : w.map) {
        if (h < 0 || h >= host.size() || seen[h]) return false;
        seen[h] = 1;
    }
    IndexSet image;
    for (int h : w.map) image.add(h);
    if (host.rank(image) != m) return false;  // spanning

    for (int a = 0; a < t; ++a)
        if (host.rank(IndexSet{w.map[a]}) != 1) return false;
    for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b)
            if (host.rank(IndexSet{w.map[a], w.map[b]}) != 2) return false;

    // One rank query per target line; pairs inside an already-checked line
    // are skipped so the closure work is once per line.
    std::vector<std::vector<char>> done(t, std::vector<char>(t, 0));
    for (int a = 0; a < t; ++a) {
        for (int b = a + 1; b < t; ++b) {
            if (done[a][b]) continue;
            IndexSet line = target->closure(IndexSet{a, b});
            IndexSet img;
            auto pts = line.elements();
            for (int p : pts) img.add(w.map[p]);
            for (size_t i = 0; i < pts.size(); ++i)
                for (size_t j = i + 1; j < pts.size(); ++j) done[pts[i]][pts[j]] = 1;
            if (host.rank(img) != 2) return false;
        }
    }
    return true;
}

MinorResult has_u2_minor(const Matroid& M, int m, const SearchOptions& opts) {
    if (m < 3) throw std::invalid_argument("has_u2_minor: m must be >= 3");
    int r = M.full_rank();
    uint64_t nodes = 0;
    auto budget_check = [&]() {
        if (opts.node_budget && nodes > opts.node_budget) throw BudgetHit{};
    };

    auto self = std::shared_ptr<const Matroid>(&M, [](const Matroid*) {});
    try {
        for (int k = 0; k <= r - 2; ++k) {
            for (const auto& C : flats_of_rank(M, k)) {
                ++nodes;
                budget_check();
                auto view = minor(self, C, IndexSet{});
                if (view->full_rank() < 2) continue;
                auto sim = simplify(*view);
                for (const auto& L : flats_of_rank(*view, 2)) {
                    ++nodes;
                    budget_check();
                    // Distinct parallel classes meeting the flat.
                    std::vector<int> reps;
                    std::vector<char> seen(sim.classes.size(), 0);
                    L.for_each([&](int e) {
                        int c = sim.class_of[e];
                        if (c >= 0 && !seen[c]) {
                            seen[c] = 1;
                            reps.push_back(sim.classes[c].min());
                        }
                    });
                    if (static_cast<int>(reps.size()) < m) continue;
                    std::sort(reps.begin(), reps.end());
                    reps.resize(m);
                    auto mv = std::dynamic_pointer_cast<const MinorView>(view);
                    MinorWitness w;
                    w.contract = C;
                    for (int v : reps) w.inner.map.push_back(mv->to_base(v));
                    g_nodes.fetch_add(nodes, std::memory_order_relaxed);
                    auto target = uniform_matroid(2, m);
                    if (!verify_minor_witness(M, *target, w))
                        throw std::logic_error("has_u2_minor: witness failed re-verification");
                    return {Outcome::Found, std::move(w), nodes};
                }
            }
        }
    } catch (const BudgetHit&) {
        g_nodes.fetch_add(nodes, std::memory_order_relaxed);
        return {Outcome::Inconclusive, std::nullopt, nodes};
    }
    g_nodes.fetch_add(nodes, std::memory_order_relaxed);
    return {Outcome::None, std::nullopt, nodes};
}

bool verify_minor_witness(const Matroid& M, const Matroid& target, const MinorWitness& w) {
    if (w.contract.intersects(w.del)) return false;
    if (w.contract.max() >= M.size() || w.del.max() >= M.size()) return false;
    auto self = std::shared_ptr<const Matroid>(&M, [](const Matroid*) {});
    auto view = std::dynamic_pointer_cast<const MinorView>(minor(self, w.contract, w.del));
    RestrictionWitness inner;
    for (int h : w.inner.map) {
        if (h < 0 || h >= M.size()) return false;
        int v = view->from_base(h);
        if (v < 0) return false;
        inner.map.push_back(v);
    }
    return verify_restriction(*view, target, inner);
}

RepresentabilityResult is_representable(const Matroid& M, int q, int t,
                                        const RepresentabilityLimits& limits) {
    int r = M.full_rank();
    if (r > t) throw std::invalid_argument("is_representable: rank exceeds the layer cap t");
    if (t > limits.max_rank)
        return {RepresentabilityResult::Refused, {}, "rank cap t exceeds desk-scale limit"};

    auto sim = simplify(M);
    int points = static_cast<int>(sim.classes.size());
    if (points > limits.max_points)
        return {RepresentabilityResult::Refused, {}, "too many points for the desk-scale embedding search"};
    if (r == 0) return {RepresentabilityResult::Representable, {}, ""};

    auto host = pg(r, q);  // throws for unsupported q
    if (points > host->size()) return {RepresentabilityResult::NotRepresentable, {}, ""};

    auto self = std::shared_ptr<const Matroid>(&M, [](const Matroid*) {});
    auto si_view = restriction(self, IndexSet::of(sim.representatives));

    SearchOptions opts;
    opts.canonical_least = false;  // existence only; exhaustive when absent
    auto res = find_restriction(*host, *si_view, opts);
    if (res.outcome == Outcome::Found) {
        RepresentabilityResult out{RepresentabilityResult::Representable, {}, ""};
        for (int i = 0; i < static_cast<int>(res.witness->map.size()); ++i)
            out.embedding.emplace_back(sim.representatives[i], res.witness->map[i]);
        return out;
    }
    return {RepresentabilityResult::NotRepresentable, {}, ""};
}

MinorResult find_pg_minor(const Matroid& M, int m, int q, const SearchOptions& opts) {
    if (m < 1) throw std::invalid_argument("find_pg_minor: m must be >= 1");
    auto target = pg(m, q);
    int r = M.full_rank();
    uint64_t nodes = 0;
    auto self = std::shared_ptr<const Matroid>(&M, [](const Matroid*) {});

    std::optional<MinorWitness> found;
    try {
        // Independent contraction sets, by size then lexicographic order.
        for (int csize = 0; csize <= r - m && !found; ++csize) {
            std::vector<int> cur;
            auto rec = [&](auto&& rec, int start) -> bool {
                if (static_cast<int>(cur.size()) == csize) {
                    ++nodes;
                    if (opts.node_budget && nodes > opts.node_budget) throw BudgetHit{};
                    auto view = minor(self, IndexSet::of(cur), IndexSet{});
                    if (view->full_rank() < m || view->size() < target->size()) return false;
                    SearchOptions inner = opts;
                    if (inner.node_budget) {
                        inner.node_budget = inner.node_budget > nodes ? inner.node_budget - nodes : 1;
                    }
                    auto res = find_restriction(*view, *target, inner);
                    nodes += res.nodes;
                    if (res.outcome == Outcome::Inconclusive) throw BudgetHit{};
                    if (res.outcome == Outcome::Found) {
                        auto mv = std::dynamic_pointer_cast<const MinorView>(view);
                        MinorWitness w;
                        w.contract = IndexSet::of(cur);
                        for (int v : res.witness->map) w.inner.map.push_back(mv->to_base(v));
                        found = std::move(w);
                        return true;
                    }
                    return false;
                }
                for (int e = start; e < M.size(); ++e) {
                    cur.push_back(e);
                    if (M.rank(IndexSet::of(cur)) == static_cast<int>(cur.size())) {
                        if (rec(rec, e + 1)) return true;
                    }
                    cur.pop_back();
                }
                return false;
            };
            rec(rec, 0);
        }
    } catch (const BudgetHit&) {
        g_nodes.fetch_add(nodes, std::memory_order_relaxed);
        return {Outcome::Inconclusive, std::nullopt, nodes};
    }
    g_nodes.fetch_add(nodes, std::memory_order_relaxed);
    if (found) {
        if (!verify_minor_witness(M, *target, *found))
            throw std::logic_error("find_pg_minor: witness failed re-verification");
        return {Outcome::Found, std::move(found), nodes};
    }
    return {Outcome::None, std::nullopt, nodes};
}

}  // namespace mwb
