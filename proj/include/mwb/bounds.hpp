#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "mwb/matroid.hpp"
#include "mwb/search.hpp"

namespace mwb {

// All bound arithmetic is exact; the inequalities being checked are exact
// and floating point would manufacture false verdicts.
using Rat = boost::rational<long long>;

// (ell^r - 1) / (ell - 1); throws on overflow or ell < 2.
long long kung_bound_value(int ell, int r);

struct BoundVerdict {
    std::string name;
    std::string relation;  // "lhs <= rhs" or "lhs >= rhs"
    Rat lhs, rhs;
    bool holds;
};

struct DensityReport {
    int epsilon = 0;
    int rank = 0;
    int ell = 0;
    long long kung_bound = 0;
    std::optional<int> ratio_q;  // base for the density ratio, when given
    std::optional<Rat> ratio;    // epsilon / q^rank
    std::vector<BoundVerdict> verdicts;
    // Set when membership verification was requested: true means the
    // U_{2,ell+2}-minor search came back empty, i.e. M is in U(ell).
    std::optional<bool> membership_verified;

    bool all_hold() const {
        for (const auto& v : verdicts)
            if (!v.holds) return false;
        return true;
    }
};

// Kung's bound check: epsilon(M) <= (ell^r - 1)/(ell - 1), plus the cruder
// estimate epsilon(M) <= (ell+1)^{r-1} as a secondary verdict (both reported
// unconditionally).  A violation on a verified U(ell) member signals a
// library bug, not a property of the input.
DensityReport kung_check(const Matroid& M, int ell, std::optional<int> ratio_q = std::nullopt,
                         bool verify_membership = false);

struct KungrelReport {
    int eps_m = 0;
    int eps_contract = 0;
    int contract_rank = 0;
    Rat lhs, rhs;  // eps(M/C) >= (ell+1)^{-r(C)} * eps(M)
    bool holds = false;
    long long flat_count = 0;  // rank-(r(C)+1) flats of M containing C
    bool identity_holds = false;  // flat_count == eps_contract
};

// Contraction density check plus the counting identity from its proof.
KungrelReport kungrel_check(const Matroid& M, const IndexSet& C, int ell);

// (q^{r_after+k} - 1)/(q - 1) - q (q^{2k} - 1)/(q^2 - 1), exact.
Rat projection_bound(int q, int r_after, int k);

struct ProjectionCheck {
    bool hypothesis_ok = false;
    std::string hypothesis_error;  // "R-not-spanning" | "not-a-flat" | "not-disjoint"
    int k = 0;
    int r_after = 0;
    int eps_after = 0;
    Rat bound;
    bool holds = false;
};

// Instance verifier for the projection density bound: R must verify as a
// spanning pg(r(M), q) restriction of M and F as a flat disjoint from its
// image; then check epsilon(M/F) against projection_bound.
ProjectionCheck verify_projection_instance(const Matroid& M, const RestrictionWitness& R,
                                           const IndexSet& F, int q);

}  // namespace mwb
