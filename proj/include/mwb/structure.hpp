#pragma once

#include <string>
#include <vector>

#include "mwb/bounds.hpp"
#include "mwb/matroid.hpp"
#include "mwb/search.hpp"

namespace mwb {

// Certificate that M has a (q,h,t)-stack restriction: ordered pairwise
// disjoint layers F_1..F_h, each of rank <= t and not GF(q)-representable
// after contracting the earlier layers, jointly spanning the stack.
struct StackCertificate {
    int q = 0;
    int t = 0;
    std::vector<IndexSet> layers;
    bool incomplete_scan = false;  // greedy builder hit a scan cap

    int height() const { return static_cast<int>(layers.size()); }
    IndexSet union_of_layers() const {
        IndexSet u;
        for (const auto& f : layers) u |= f;
        return u;
    }
};

// The stack definition leaves the carrier of its spanning condition
// ambiguous; this library reads it as the stack's own ground set, which is
// consistent with the rank-at-most-ht consequence.  Verifier reports name
// the convention rather than assuming it silently.
inline constexpr const char* kStackSpanningConvention =
    "layer union spans the stack restriction S = M|(F_1 u ... u F_h)";

struct StackVerdict {
    bool valid = false;
    bool inconclusive = false;
    std::string failure;     // first failing condition; empty when valid
    int failing_layer = -1;  // 1-based when a per-layer condition failed
    std::string convention = kStackSpanningConvention;
};

StackVerdict verify_stack(const Matroid& M, const StackCertificate& cert,
                          const RepresentabilityLimits& limits = {});

struct StackBuildOptions {
    int max_layer_size = 8;
    RepresentabilityLimits rep_limits{};
};

// Greedy construction, a lower bound for the exhaustive maximum height:
// candidate layers are scanned in canonical order (rank, then size, then
// lexicographic) among subsets of parallel-class representatives of the
// current contraction, and the first minimal non-GF(q)-representable one of
// rank <= t becomes the next layer.
StackCertificate build_stack_greedy(const Matroid& M, int q, int t,
                                    const StackBuildOptions& opts = {});

struct StackSearchResult {
    bool found = false;
    bool inconclusive = false;
    std::vector<IndexSet> layers;
    uint64_t nodes = 0;
};

// Exhaustive existence search for a (q,h,t)-stack restriction, used by the
// desk-scale no-stack properties.  Two sound reductions shrink the candidate
// space without losing completeness: a layer may be assumed simple inside
// its contraction (loops and parallel copies change neither the layer's
// representability nor the matroids later layers see), and every valid
// layer has rank >= 2 in its contraction (rank <= 1 matroids are
// representable over every field).
StackSearchResult find_stack_exhaustive(const Matroid& M, int q, int h, int t,
                                        const StackBuildOptions& opts = {});

struct FlatSearchResult {
    IndexSet flat;
    bool inside_stack = true;  // flat lies inside the layer union
};

// Recursive flat construction: given a spanning pg(r(M), q) restriction
// witness R and a stack certificate with at least C(h+1,2) layers, produce a
// rank-h flat of M disjoint from the image of R.  The rank-(h-1) flat comes
// from the first C(h,2) layers; it is then extended by an element of the
// stack not parallel into R.  Throws std::runtime_error when no extension
// element exists (malformed input at desk scale).
FlatSearchResult stack_flat_search(const Matroid& M, const RestrictionWitness& R,
                                   const StackCertificate& cert, int h);

struct RoundnessWitness {
    bool weakly_round = true;
    IndexSet A, B;  // when not weakly round: A|B = E, r(A) <= r-1, r(B) <= r-2
};

// Decision procedure: M fails weak roundness iff some rank-(r-2) flat B has
// a non-spanning complement; B is scanned in canonical flat order.
RoundnessWitness is_weakly_round(const Matroid& M);

// g(r) = beta * q^r; for q >= 2 the doubling property g(r) >= 2 g(r-1) is
// automatic.
struct DensityThreshold {
    Rat beta;
    int q = 2;

    Rat value(int r) const;
    bool exceeded_by(int eps, int r) const { return Rat(eps) > value(r); }
};

struct WeaklyRoundRestriction {
    enum Outcome { Ok, Floor } outcome = Ok;
    IndexSet ground;     // elements of the original matroid
    MatroidPtr matroid;  // the restriction itself
    int steps = 0;
};

// Constructive recursion towards a dense weakly round restriction: while the
// current restriction is not weakly round, descend into whichever side of
// the canonical witness keeps eps > g(rank), preferring A.  At least one
// side qualifies because eps(M) <= eps(M|A) + eps(M|B) and g doubles.
// Pre: eps(M) > g(r(M)) and g(d) >= 1; reaching rank < d reports Floor.
WeaklyRoundRestriction weakly_round_restriction(MatroidPtr M, const DensityThreshold& g, int d);

struct MajorityFlatResult {
    IndexSet flat;
    long long family_size = 0;        // number of rank-t flats containing F0
    int gained = 0;                   // |F - F0|
    bool inequality_holds = false;    // gained * family_size >= |E| - |F0|
    bool identity_applicable = false; // t == r(F0) + 1
    bool identity_holds = false;      // family_size == eps(M/F0)
};

// Majority argument: among the rank-t flats containing the flat F0, return
// the one gaining the most new elements (canonical least on ties); the
// average bound |F - F0| >= (|E| - |F0|) / |family| is re-verified exactly.
MajorityFlatResult majority_flat(const Matroid& M, const IndexSet& F0, int t);

struct DensePointResult {
    bool found = false;
    IndexSet point;  // a parallel class of M/X, in M's indices
    int size = 0;
};

// Largest parallel class of M/X whose elements are not spanned by C there
// (canonical least on ties).
DensePointResult dense_point_above(const Matroid& M, const IndexSet& X, const IndexSet& C);

}  // namespace mwb
