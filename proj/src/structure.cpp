#include "mwb/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "mwb/geometry.hpp"

namespace mwb {

namespace {

MatroidPtr borrow(const Matroid& M) {
    return std::shared_ptr<const Matroid>(&M, [](const Matroid*) {});
}

// Non-representability test for view|F, refusing never at the caller's
// chosen limits.  Returns -1 refused, 0 representable, 1 non-representable.
int layer_nonrep(const MatroidPtr& view, const IndexSet& F, int q, int t,
                 const RepresentabilityLimits& limits) {
    auto sub = restriction(view, F);
    int r = sub->full_rank();
    if (r > t) return 0;  // rank-capped candidates only
    auto res = is_representable(*sub, q, r, limits);
    if (res.kind == RepresentabilityResult::Refused) return -1;
    return res.kind == RepresentabilityResult::NotRepresentable ? 1 : 0;
}

}  // namespace

StackVerdict verify_stack(const Matroid& M, const StackCertificate& cert,
                          const RepresentabilityLimits& limits) {
    StackVerdict v;
    IndexSet seen;
    for (const auto& f : cert.layers) {
        if (f.max() >= M.size()) throw std::out_of_range("verify_stack: layer index out of range");
        if (f.intersects(seen)) {
            v.failure = "layers-not-disjoint";
            return v;
        }
        seen |= f;
    }

    // Spanning condition under the recorded convention: the layer union is
    // the ground set of S = M|union, so it spans S by construction.  The
    // verdict carries the convention string instead of a vacuous check.
    IndexSet u = cert.union_of_layers();
    auto self = borrow(M);
    auto S = restriction(self, u);

    IndexSet contracted;
    for (int i = 0; i < cert.height(); ++i) {
        auto layer_view = minor(self, contracted, M.ground() - u);
        auto mv = std::dynamic_pointer_cast<const MinorView>(layer_view);
        IndexSet F_local = mv->from_base(cert.layers[i]);
        auto Ni = restriction(layer_view, F_local);
        int lr = Ni->full_rank();
        if (lr > cert.t) {
            v.failure = "layer-rank-exceeds-t";
            v.failing_layer = i + 1;
            return v;
        }
        auto rep = is_representable(*Ni, cert.q, lr, limits);
        if (rep.kind == RepresentabilityResult::Refused) {
            v.inconclusive = true;
            v.failure = "layer-representability-inconclusive: " + rep.reason;
            v.failing_layer = i + 1;
            return v;
        }
        if (rep.kind == RepresentabilityResult::Representable) {
            v.failure = "layer-representable";
            v.failing_layer = i + 1;
            return v;
        }
        contracted |= cert.layers[i];
    }

    if (S->full_rank() > cert.height() * cert.t) {
        v.failure = "rank-exceeds-ht";
        return v;
    }
    v.valid = true;
    return v;
}

StackCertificate build_stack_greedy(const Matroid& M, int q, int t, const StackBuildOptions& opts) {
    StackCertificate cert;
    cert.q = q;
    cert.t = t;
    auto self = borrow(M);
    IndexSet contracted;

    while (true) {
        auto view = minor(self, contracted, IndexSet{});
        auto sim = simplify(*view);
        const auto& reps = sim.representatives;
        int nreps = static_cast<int>(reps.size());

        // Canonical (rank, size, lex) order, evaluated sizes-ascending with
        // rank pruning; a rank-2 best cannot be beaten by a larger subset.
        struct Cand {
            int rank;
            int size;
            IndexSet set;
        };
        std::optional<Cand> best;
        bool refused = false;
        int scan_cap = std::min(opts.max_layer_size, nreps);

        auto consider = [&](const IndexSet& F, int r) {
            int s = F.size();
            if (best) {
                if (std::tuple(best->rank, best->size) < std::tuple(r, s)) return;
                if (std::tuple(best->rank, best->size) == std::tuple(r, s) &&
                    !IndexSet::lex_less(F, best->set))
                    return;
            }
            int nr = layer_nonrep(view, F, q, t, opts.rep_limits);
            if (nr < 0) {
                refused = true;
                return;
            }
            if (nr == 1) best = Cand{r, s, F};
        };

        for (int s = 1; s <= scan_cap; ++s) {
            auto rec = [&](auto&& rec, int start, IndexSet& F) -> void {
                int have = F.size();
                if (have == s) {
                    int r = view->rank(F);
                    if (r >= 2 && r <= t) consider(F, r);
                    return;
                }
                for (int i = start; i < nreps; ++i) {
                    F.add(reps[i]);
                    if (view->rank(F) <= t) rec(rec, i + 1, F);
                    F.remove(reps[i]);
                }
            };
            IndexSet F;
            rec(rec, 0, F);
            if (best && best->rank == 2) break;
        }
        // For t = 2 a scan through size q+2 is conclusive: a rank-2
        // restriction is non-representable over GF(q) exactly when q+2
        // distinct collinear classes appear, so some (q+2)-subset of
        // representatives already witnesses it.
        bool conclusive = nreps <= scan_cap || (t == 2 && scan_cap >= q + 2);
        if (!best && !conclusive) cert.incomplete_scan = true;
        if (refused) cert.incomplete_scan = true;
        if (!best) break;

        auto mv = std::dynamic_pointer_cast<const MinorView>(view);
        IndexSet layer_base = mv->to_base(best->set);
        cert.layers.push_back(layer_base);
        contracted |= layer_base;
    }
    return cert;
}

StackSearchResult find_stack_exhaustive(const Matroid& M, int q, int h, int t,
                                        const StackBuildOptions& opts) {
    StackSearchResult out;
    auto self = borrow(M);
    std::vector<IndexSet> layers;  // in M coordinates

    auto rec = [&](auto&& rec, const IndexSet& contracted, int remaining) -> bool {
        if (remaining == 0) {
            out.found = true;
            out.layers = layers;
            return true;
        }
        auto view = minor(self, contracted, IndexSet{});
        if (view->full_rank() < 2 * remaining) return false;  // each layer needs rank >= 2
        int cap = std::min(t, view->full_rank() - 2 * (remaining - 1));
        auto sim = simplify(*view);
        const auto& reps = sim.representatives;
        auto mv = std::dynamic_pointer_cast<const MinorView>(view);

        auto grow = [&](auto&& grow, int start, IndexSet& F) -> bool {
            if (!F.empty() && view->rank(F) >= 2) {
                ++out.nodes;
                int nr = layer_nonrep(view, F, q, cap, opts.rep_limits);
                if (nr < 0) out.inconclusive = true;
                if (nr == 1) {
                    IndexSet base_layer = mv->to_base(F);
                    layers.push_back(base_layer);
                    if (rec(rec, contracted | base_layer, remaining - 1)) return true;
                    layers.pop_back();
                }
            }
            for (int i = start; i < static_cast<int>(reps.size()); ++i) {
                F.add(reps[i]);
                if (view->rank(F) <= cap) {
                    if (grow(grow, i + 1, F)) return true;
                }
                F.remove(reps[i]);
            }
            return false;
        };
        IndexSet F;
        return grow(grow, 0, F);
    };

    rec(rec, IndexSet{}, h);
    return out;
}

FlatSearchResult stack_flat_search(const Matroid& M, const RestrictionWitness& R,
                                   const StackCertificate& cert, int h) {
    if (h < 0) throw std::invalid_argument("stack_flat_search: h must be >= 0");
    long long needed = static_cast<long long>(h + 1) * h / 2;
    if (cert.height() < needed)
        throw std::invalid_argument("stack_flat_search: certificate has fewer than C(h+1,2) layers");

    if (!verify_pg_restriction(M, M.full_rank(), cert.q, R))
        throw std::invalid_argument(
            "stack_flat_search: R is not a spanning projective geometry restriction");
    IndexSet ER;
    for (int e : R.map) ER.add(e);

    auto self = borrow(M);

    // flat_for(j) works inside the union of the first C(j+1,2) layers.
    auto flat_for = [&](auto&& flat_for, int j) -> IndexSet {
        if (j == 0) return M.closure(IndexSet{});
        IndexSet H = flat_for(flat_for, j - 1);
        IndexSet S_set;
        for (int i = 0; i < j * (j + 1) / 2; ++i) S_set |= cert.layers[i];

        IndexSet candidates = S_set - ER - H;
        IndexSet clH = M.closure(H);
        std::optional<IndexSet> found;
        candidates.for_each([&](int e) {
            if (found || clH.contains(e)) return;
            IndexSet He = H;
            He.add(e);
            IndexSet F = M.closure(He);
            if (F.intersects(ER)) return;  // e parallel into R over H
            if (M.rank(F) != j) return;
            found = F;
        });
        if (!found)
            throw std::runtime_error(
                "stack_flat_search: no extension element off the geometry at level " +
                std::to_string(j) + "; the stack is inconsistent with the spanning restriction");
        return *found;
    };

    FlatSearchResult out;
    out.flat = flat_for(flat_for, h);
    if (M.closure(out.flat) != out.flat || M.rank(out.flat) != h || out.flat.intersects(ER))
        throw std::runtime_error("stack_flat_search: constructed set failed flat verification");
    out.inside_stack = out.flat.subset_of(cert.union_of_layers());
    return out;
}

RoundnessWitness is_weakly_round(const Matroid& M) {
    RoundnessWitness w;
    int r = M.full_rank();
    if (r < 2) return w;
    IndexSet ground = M.ground();
    for (const auto& B : flats_of_rank(M, r - 2)) {
        IndexSet A = ground - B;
        if (M.rank(A) <= r - 1) {
            w.weakly_round = false;
            w.A = A;
            w.B = B;
            return w;
        }
    }
    return w;
}

Rat DensityThreshold::value(int r) const {
    long long pw = 1;
    for (int i = 0; i < r; ++i) {
        pw *= q;
        if (pw > (1LL << 50)) throw std::overflow_error("DensityThreshold: overflow");
    }
    return beta * Rat(pw);
}

WeaklyRoundRestriction weakly_round_restriction(MatroidPtr M, const DensityThreshold& g, int d) {
    if (g.value(d) < Rat(1))
        throw std::invalid_argument("weakly_round_restriction: g(d) >= 1 is required");
    if (!g.exceeded_by(epsilon(*M), M->full_rank()))
        throw std::invalid_argument("weakly_round_restriction: density precondition eps(M) > g(r(M)) fails");

    WeaklyRoundRestriction out;
    std::vector<int> orig(M->size());
    for (int i = 0; i < M->size(); ++i) orig[i] = i;
    MatroidPtr cur = std::move(M);

    while (true) {
        auto w = is_weakly_round(*cur);
        if (w.weakly_round) {
            out.outcome = WeaklyRoundRestriction::Ok;
            break;
        }
        // A before B when both qualify.
        IndexSet pick;
        if (g.exceeded_by(epsilon(*restriction(cur, w.A)), cur->rank(w.A)))
            pick = w.A;
        else if (g.exceeded_by(epsilon(*restriction(cur, w.B)), cur->rank(w.B)))
            pick = w.B;
        else
            throw std::logic_error("weakly_round_restriction: neither side kept the density");

        std::vector<int> next_orig;
        pick.for_each([&](int i) { next_orig.push_back(orig[i]); });
        orig = std::move(next_orig);
        cur = restriction(cur, pick);
        ++out.steps;

        if (cur->full_rank() < d) {
            out.outcome = WeaklyRoundRestriction::Floor;
            break;
        }
    }
    out.matroid = cur;
    out.ground = IndexSet::of(orig);
    return out;
}

MajorityFlatResult majority_flat(const Matroid& M, const IndexSet& F0, int t) {
    if (M.closure(F0) != F0) throw std::invalid_argument("majority_flat: F0 is not a flat");
    int r0 = M.rank(F0);
    if (!(r0 < t && t <= M.full_rank()))
        throw std::invalid_argument("majority_flat: need r(F0) < t <= r(M)");

    auto flats = flats_of_rank_containing(M, t, F0);
    MajorityFlatResult out;
    out.family_size = static_cast<long long>(flats.size());
    bool have = false;
    for (const auto& F : flats) {  // lex order; strict improvement keeps the least on ties
        int gain = (F - F0).size();
        if (!have || gain > out.gained) {
            out.flat = F;
            out.gained = gain;
            have = true;
        }
    }
    long long outside = M.size() - F0.size();
    out.inequality_holds = static_cast<long long>(out.gained) * out.family_size >= outside;

    out.identity_applicable = (t == r0 + 1);
    if (out.identity_applicable) {
        auto view = minor(borrow(M), F0, IndexSet{});
        out.identity_holds = out.family_size == epsilon(*view);
    }
    return out;
}

DensePointResult dense_point_above(const Matroid& M, const IndexSet& X, const IndexSet& C) {
    auto view = minor(borrow(M), X, IndexSet{});
    auto mv = std::dynamic_pointer_cast<const MinorView>(view);
    IndexSet Cv = mv->from_base(C - X);
    IndexSet spanned = view->closure(Cv);

    auto sim = simplify(*view);
    DensePointResult out;
    for (size_t c = 0; c < sim.classes.size(); ++c) {
        int rep = sim.classes[c].min();
        if (spanned.contains(rep)) continue;
        int sz = sim.classes[c].size();
        if (!out.found || sz > out.size) {  // classes ordered by least rep: first max wins ties
            out.found = true;
            out.size = sz;
            out.point = mv->to_base(sim.classes[c]);
        }
    }
    return out;
}

}  // namespace mwb
