#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwb/matroid.hpp"

namespace mwb {

// Tri-state search outcome.  None means an exhaustive search ruled the
// object out; Inconclusive is only possible when a node budget was set and
// was hit before exhaustion.  Silent false negatives are forbidden.
enum class Outcome { Found, None, Inconclusive };

// Injective, rank-preserving placement of a target matroid inside a host:
// target element i maps to host element map[i], and every target subset has
// the same rank as its image.
struct RestrictionWitness {
    std::vector<int> map;

    std::vector<int> sorted_image() const {
        auto v = map;
        std::sort(v.begin(), v.end());
        return v;
    }
};

// Witness for a minor: contract C and delete D in the host, then place the
// target by the inner restriction witness (image in host indices).
struct MinorWitness {
    IndexSet contract;
    IndexSet del;
    RestrictionWitness inner;
};

struct SearchOptions {
    uint64_t node_budget = 0;     // 0 = unlimited
    int prune_depth = 3;          // rank-check newly-closed subsets up to this size
    bool canonical_least = true;  // refine to the lex-least sorted image
};

struct RestrictionResult {
    Outcome outcome;
    std::optional<RestrictionWitness> witness;
    uint64_t nodes = 0;
};

struct MinorResult {
    Outcome outcome;
    std::optional<MinorWitness> witness;
    uint64_t nodes = 0;
};

// Search for the target as a restriction of the host.  The target must be
// simple; with canonical_least the returned witness has the
// lexicographically least sorted image among all witnesses.  Witnesses are
// verified before being returned.
RestrictionResult find_restriction(const Matroid& host, const Matroid& target,
                                   const SearchOptions& opts = {});

bool verify_restriction(const Matroid& host, const Matroid& target, const RestrictionWitness& w);

// Sound verifier specialized to full projective geometry targets pg(m, q),
// cheap enough for hosts with hundreds of points.  For a full geometry,
// rank agreement on singletons, pairs and target lines plus a spanning image
// forces full rank-table agreement: closures transport along lines, so any
// deficient independent image would pull the whole spanning image below
// rank m.
bool verify_pg_restriction(const Matroid& host, int m, int q, const RestrictionWitness& w);

// U_{2,m}-minor test: contractions by flats C with r(C) <= r(M)-2 in
// canonical order, then rank-2 flats of M/C carrying >= m points.
MinorResult has_u2_minor(const Matroid& M, int m, const SearchOptions& opts = {});

bool verify_minor_witness(const Matroid& M, const Matroid& target, const MinorWitness& w);

struct RepresentabilityLimits {
    int max_points = 12;  // |si(M)|
    int max_rank = 4;
};

struct RepresentabilityResult {
    enum Kind { Representable, NotRepresentable, Refused } kind;
    // Point embedding of si(M) into pg(r(M), q): (class representative, pg column).
    std::vector<std::pair<int, int>> embedding;
    std::string reason;  // set when refused
    bool yes() const { return kind == Representable; }
};

// Exhaustive GF(q)-representability decision by backtracking embedding of
// si(M) into pg(r(M), q).  Instances over the desk-scale limits are refused
// explicitly rather than guessed at.  Pre: r(M) <= t.
RepresentabilityResult is_representable(const Matroid& M, int q, int t,
                                        const RepresentabilityLimits& limits = {});

// Budgeted search for a pg(m, q)-minor: contraction sets in canonical order,
// restriction search in each contraction.
MinorResult find_pg_minor(const Matroid& M, int m, int q, const SearchOptions& opts = {});

// Deterministic work counter (backtracking nodes since the last reset).
uint64_t search_node_count();
void reset_search_node_count();

}  // namespace mwb
