#include "mwb/matroid.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace mwb {

namespace {
std::atomic<uint64_t> g_rank_queries{0};
void count_query() { g_rank_queries.fetch_add(1, std::memory_order_relaxed); }
}  // namespace

uint64_t rank_query_count() { return g_rank_queries.load(std::memory_order_relaxed); }
void reset_rank_query_count() { g_rank_queries.store(0, std::memory_order_relaxed); }

void Matroid::check_subset(const IndexSet& X) const {
    if (X.max() >= size()) throw std::out_of_range("matroid: index out of range");
}

IndexSet Matroid::closure(const IndexSet& X) const {
    check_subset(X);
    int r0 = rank(X);
    IndexSet cl = X;
    for (int e = 0; e < size(); ++e) {
        if (X.contains(e)) continue;
        IndexSet Y = X;
        Y.add(e);
        if (rank(Y) == r0) cl.add(e);
    }
    return cl;
}

int Matroid::full_rank() const {
    int c = full_rank_cache_.load(std::memory_order_relaxed);
    if (c >= 0) return c;
    int r = rank(ground());
    full_rank_cache_.store(r, std::memory_order_relaxed);
    return r;
}

// ---------------------------------------------------------------------------
// Elim

std::vector<FieldElement> Elim::reduce(std::vector<FieldElement> v) const {
    for (size_t i = 0; i < basis_.size(); ++i) {
        FieldElement c = v[pivot_[i]];
        if (c == 0) continue;
        const auto& b = basis_[i];
        for (int r = 0; r < rows_; ++r)
            if (b[r] != 0) v[r] = fs_->sub(v[r], fs_->mul(c, b[r]));
    }
    return v;
}

bool Elim::add(std::vector<FieldElement> v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (int r = 0; r < rows_; ++r)
        if (v[r] != 0) {
            piv = r;
            break;
        }
    if (piv < 0) return false;
    FieldElement inv = fs_->inv(v[piv]);
    for (int r = 0; r < rows_; ++r) v[r] = fs_->mul(v[r], inv);
    basis_.push_back(std::move(v));
    pivot_.push_back(piv);
    return true;
}

// ---------------------------------------------------------------------------
// LinearMatroid

LinearMatroid::LinearMatroid(FieldSpec fs, int rows, std::vector<std::vector<FieldElement>> cols)
    : fs_(std::move(fs)), rows_(rows), cols_(std::move(cols)) {
    if (rows_ < 0) throw std::invalid_argument("LinearMatroid: negative row count");
    for (const auto& c : cols_) {
        if (static_cast<int>(c.size()) != rows_)
            throw std::invalid_argument("LinearMatroid: column length != rows");
        for (FieldElement x : c)
            if (!fs_.valid(x)) throw std::invalid_argument("LinearMatroid: invalid field element code");
    }
}

int LinearMatroid::rank(const IndexSet& X) const {
    count_query();
    check_subset(X);
    Elim e(fs_, rows_);
    X.for_each([&](int i) { e.add(cols_[i]); });
    return e.rank();
}

IndexSet LinearMatroid::closure(const IndexSet& X) const {
    check_subset(X);
    Elim e(fs_, rows_);
    X.for_each([&](int i) { e.add(cols_[i]); });
    IndexSet cl = X;
    for (int i = 0; i < size(); ++i) {
        if (X.contains(i)) continue;
        auto res = e.reduce(cols_[i]);
        if (std::all_of(res.begin(), res.end(), [](FieldElement x) { return x == 0; })) cl.add(i);
    }
    return cl;
}

// ---------------------------------------------------------------------------
// BasesMatroid

BasesMatroid::BasesMatroid(int n, std::vector<IndexSet> bases, int exchange_check_limit)
    : n_(n), bases_(std::move(bases)) {
    if (n_ < 0) throw std::invalid_argument("BasesMatroid: negative ground size");
    if (bases_.empty()) throw std::invalid_argument("BasesMatroid: empty bases list");
    rank_ = bases_[0].size();
    std::set<IndexSet, IndexSet::LexLess> seen;
    for (const auto& b : bases_) {
        if (b.size() != rank_) throw std::invalid_argument("BasesMatroid: bases of unequal size");
        if (b.max() >= n_) throw std::invalid_argument("BasesMatroid: basis index out of range");
        seen.insert(b);
    }

    auto is_basis = [&](const IndexSet& s) { return seen.count(s) > 0; };
    auto check_pair = [&](const IndexSet& b1, const IndexSet& b2) {
        bool ok = true;
        b1.for_each([&](int x) {
            if (!ok || b2.contains(x)) return;
            bool found = false;
            b2.for_each([&](int y) {
                if (found || b1.contains(y)) return;
                IndexSet cand = b1;
                cand.remove(x);
                cand.add(y);
                if (is_basis(cand)) found = true;
            });
            if (!found) ok = false;
        });
        return ok;
    };

    fully_validated_ = n_ <= exchange_check_limit;
    if (fully_validated_) {
        for (size_t i = 0; i < bases_.size(); ++i)
            for (size_t j = 0; j < bases_.size(); ++j)
                if (i != j && !check_pair(bases_[i], bases_[j]))
                    throw std::invalid_argument("BasesMatroid: exchange axiom fails");
    } else {
        std::mt19937_64 rng(1);
        for (int s = 0; s < 2000; ++s) {
            size_t i = rng() % bases_.size(), j = rng() % bases_.size();
            if (i != j && !check_pair(bases_[i], bases_[j]))
                throw std::invalid_argument("BasesMatroid: exchange axiom fails (sampled)");
        }
    }
}

int BasesMatroid::rank(const IndexSet& X) const {
    count_query();
    check_subset(X);
    int best = 0;
    for (const auto& b : bases_) best = std::max(best, (X & b).size());
    return best;
}

MatroidPtr uniform_matroid(int r, int n) {
    if (r < 0 || n < 0 || r > n) throw std::invalid_argument("uniform_matroid: need 0 <= r <= n");
    std::vector<IndexSet> bases;
    std::vector<int> comb(r);
    for (int i = 0; i < r; ++i) comb[i] = i;
    while (true) {
        bases.push_back(IndexSet::of(comb));
        if (bases.size() > 200000) throw std::invalid_argument("uniform_matroid: too many bases");
        int i = r - 1;
        while (i >= 0 && comb[i] == n - r + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
    }
    // Exchange holds by construction; skip the quadratic re-check.
    return std::make_shared<BasesMatroid>(n, std::move(bases), 0);
}

// ---------------------------------------------------------------------------
// MinorView

std::shared_ptr<const MinorView> MinorView::make(MatroidPtr base, const IndexSet& contract,
                                                 const IndexSet& del) {
    if (!base) throw std::invalid_argument("MinorView: null base");
    if (contract.intersects(del)) throw std::invalid_argument("minor: contract and delete overlap");
    if (contract.max() >= base->size() || del.max() >= base->size())
        throw std::out_of_range("minor: index out of range");

    IndexSet c = contract, d = del;
    if (auto mv = std::dynamic_pointer_cast<const MinorView>(base)) {
        c = mv->to_base(contract) | mv->contracted();
        d = mv->to_base(del) | mv->deleted();
        base = mv->base();
    }

    auto v = std::shared_ptr<MinorView>(new MinorView());
    v->base_ = base;
    v->contract_ = c;
    v->delete_ = d;
    IndexSet gone = c | d;
    v->inv_.assign(base->size(), -1);
    for (int i = 0; i < base->size(); ++i) {
        if (gone.contains(i)) continue;
        v->inv_[i] = static_cast<int>(v->elems_.size());
        v->elems_.push_back(i);
    }
    v->contract_rank_ = base->rank(c);

    if (auto lin = std::dynamic_pointer_cast<const LinearMatroid>(base)) {
        v->fast_ = true;
        v->lin_ = lin.get();
        Elim e(lin->field(), lin->rows());
        c.for_each([&](int i) { e.add(lin->column(i)); });
        v->fast_cols_.reserve(v->elems_.size());
        for (int b : v->elems_) v->fast_cols_.push_back(e.reduce(lin->column(b)));
    }
    return v;
}

IndexSet MinorView::to_base(const IndexSet& X) const {
    IndexSet out;
    X.for_each([&](int i) { out.add(elems_[i]); });
    return out;
}

IndexSet MinorView::from_base(const IndexSet& X) const {
    IndexSet out;
    X.for_each([&](int b) {
        if (inv_[b] >= 0) out.add(inv_[b]);
    });
    return out;
}

int MinorView::rank(const IndexSet& X) const {
    count_query();
    check_subset(X);
    if (fast_) {
        Elim e(lin_->field(), lin_->rows());
        X.for_each([&](int i) { e.add(fast_cols_[i]); });
        return e.rank();
    }
    return base_->rank(to_base(X) | contract_) - contract_rank_;
}

std::optional<LinearView> MinorView::linear_view() const {
    if (!fast_) return std::nullopt;
    return LinearView{&lin_->field(), lin_->rows(), &fast_cols_};
}

// ---------------------------------------------------------------------------
// DirectSum

DirectSum::DirectSum(MatroidPtr a, MatroidPtr b) : a_(std::move(a)), b_(std::move(b)) {
    if (!a_ || !b_) throw std::invalid_argument("DirectSum: null part");
    na_ = a_->size();
    nb_ = b_->size();
}

int DirectSum::rank(const IndexSet& X) const {
    count_query();
    check_subset(X);
    IndexSet xa, xb;
    X.for_each([&](int i) {
        if (i < na_)
            xa.add(i);
        else
            xb.add(i - na_);
    });
    return a_->rank(xa) + b_->rank(xb);
}

MatroidPtr direct_sum(MatroidPtr a, MatroidPtr b) {
    return std::make_shared<DirectSum>(std::move(a), std::move(b));
}

MatroidPtr minor(MatroidPtr M, const IndexSet& contract, const IndexSet& del) {
    return MinorView::make(std::move(M), contract, del);
}

MatroidPtr restriction(MatroidPtr M, const IndexSet& keep) {
    IndexSet del = M->ground() - keep;
    return MinorView::make(std::move(M), IndexSet{}, del);
}

// ---------------------------------------------------------------------------
// Derived operations

SimplifyResult simplify(const Matroid& M) {
    SimplifyResult out;
    int n = M.size();
    out.class_of.assign(n, -1);

    if (auto lv = M.linear_view()) {
        // Group columns by their normalized form (first nonzero scaled to 1).
        std::map<std::vector<FieldElement>, int> by_form;
        for (int i = 0; i < n; ++i) {
            std::vector<FieldElement> col = (*lv->cols)[i];
            int lead = -1;
            for (int r = 0; r < lv->rows; ++r)
                if (col[r] != 0) {
                    lead = r;
                    break;
                }
            if (lead < 0) {
                out.loops.add(i);
                continue;
            }
            FieldElement inv = lv->fs->inv(col[lead]);
            for (auto& x : col) x = lv->fs->mul(x, inv);
            auto [it, fresh] = by_form.try_emplace(std::move(col), static_cast<int>(out.classes.size()));
            if (fresh) out.classes.emplace_back();
            out.classes[it->second].add(i);
            out.class_of[i] = it->second;
        }
    } else {
        for (int e = 0; e < n; ++e) {
            if (M.rank(IndexSet{e}) == 0) {
                out.loops.add(e);
                continue;
            }
            bool placed = false;
            for (size_t c = 0; c < out.classes.size() && !placed; ++c) {
                int rep = out.classes[c].min();
                if (M.rank(IndexSet{rep, e}) == 1) {
                    out.classes[c].add(e);
                    out.class_of[e] = static_cast<int>(c);
                    placed = true;
                }
            }
            if (!placed) {
                out.class_of[e] = static_cast<int>(out.classes.size());
                out.classes.push_back(IndexSet{e});
            }
        }
    }

    // Order classes by least element; remap class_of accordingly.
    std::vector<int> order(out.classes.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return out.classes[a].min() < out.classes[b].min(); });
    std::vector<IndexSet> sorted;
    std::vector<int> newpos(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        sorted.push_back(out.classes[order[i]]);
        newpos[order[i]] = static_cast<int>(i);
    }
    out.classes = std::move(sorted);
    for (auto& c : out.class_of)
        if (c >= 0) c = newpos[c];
    for (const auto& cls : out.classes) out.representatives.push_back(cls.min());
    return out;
}

int epsilon(const Matroid& M) { return static_cast<int>(simplify(M).classes.size()); }

bool is_simple(const Matroid& M) {
    auto s = simplify(M);
    if (!s.loops.empty()) return false;
    for (const auto& c : s.classes)
        if (c.size() != 1) return false;
    return true;
}

int local_connectivity(const Matroid& M, const IndexSet& F, const IndexSet& X) {
    return M.rank(F) + M.rank(X) - M.rank(F | X);
}

std::vector<IndexSet> flats_of_rank(const Matroid& M, int k) {
    if (k < 0 || k > M.full_rank()) throw std::invalid_argument("flats_of_rank: k out of range");
    return flats_of_rank_containing(M, k, M.closure(IndexSet{}));
}

std::vector<IndexSet> flats_of_rank_containing(const Matroid& M, int k, const IndexSet& F0) {
    int r0 = M.rank(F0);
    if (M.closure(F0) != F0) throw std::invalid_argument("flats_of_rank_containing: F0 is not a flat");
    if (k < r0 || k > M.full_rank()) return {};
    std::set<IndexSet, IndexSet::LexLess> level{F0};
    for (int r = r0; r < k; ++r) {
        std::set<IndexSet, IndexSet::LexLess> next;
        for (const auto& f : level) {
            for (int e = 0; e < M.size(); ++e) {
                if (f.contains(e)) continue;
                IndexSet g = f;
                g.add(e);
                next.insert(M.closure(g));
            }
        }
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

bool rank_tables_equal(const Matroid& A, const Matroid& B) {
    if (A.size() != B.size()) return false;
    int n = A.size();
    if (n > 20) throw std::invalid_argument("rank_tables_equal: ground set too large");
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
        IndexSet X;
        for (int i = 0; i < n; ++i)
            if (mask & (uint32_t{1} << i)) X.add(i);
        if (A.rank(X) != B.rank(X)) return false;
    }
    return true;
}

}  // namespace mwb
