#include "mwb/bounds.hpp"

#include <stdexcept>

#include "mwb/geometry.hpp"

namespace mwb {

namespace {
long long checked_pow(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        r *= base;
        if (r > (1LL << 50)) throw std::overflow_error("bound arithmetic overflow");
    }
    return r;
}
}  // namespace

long long kung_bound_value(int ell, int r) {
    if (ell < 2) throw std::invalid_argument("kung_bound_value: ell must be >= 2");
    if (r < 0) throw std::invalid_argument("kung_bound_value: negative rank");
    return (checked_pow(ell, r) - 1) / (ell - 1);
}

DensityReport kung_check(const Matroid& M, int ell, std::optional<int> ratio_q,
                         bool verify_membership) {
    DensityReport rep;
    rep.epsilon = epsilon(M);
    rep.rank = M.full_rank();
    rep.ell = ell;
    rep.kung_bound = kung_bound_value(ell, rep.rank);

    if (verify_membership) {
        auto res = has_u2_minor(M, ell + 2);
        rep.membership_verified = (res.outcome == Outcome::None);
    }

    rep.verdicts.push_back({"kung", "lhs <= rhs", Rat(rep.epsilon), Rat(rep.kung_bound),
                            rep.epsilon <= rep.kung_bound});

    // Cruder estimate (ell+1)^{r-1}; for r = 0 it is the rational 1/(ell+1).
    Rat crude = rep.rank >= 1 ? Rat(checked_pow(ell + 1, rep.rank - 1)) : Rat(1, ell + 1);
    rep.verdicts.push_back({"crude", "lhs <= rhs", Rat(rep.epsilon), crude, Rat(rep.epsilon) <= crude});

    if (ratio_q) {
        rep.ratio_q = ratio_q;
        rep.ratio = Rat(rep.epsilon, checked_pow(*ratio_q, rep.rank));
    }
    return rep;
}

KungrelReport kungrel_check(const Matroid& M, const IndexSet& C, int ell) {
    if (ell < 2) throw std::invalid_argument("kungrel_check: ell must be >= 2");
    KungrelReport rep;
    rep.eps_m = epsilon(M);
    rep.contract_rank = M.rank(C);

    auto self = std::shared_ptr<const Matroid>(&M, [](const Matroid*) {});
    auto view = minor(self, C, IndexSet{});
    rep.eps_contract = epsilon(*view);

    rep.lhs = Rat(rep.eps_contract);
    rep.rhs = Rat(rep.eps_m, checked_pow(ell + 1, rep.contract_rank));
    rep.holds = rep.lhs >= rep.rhs;

    auto flats = flats_of_rank_containing(M, rep.contract_rank + 1, M.closure(C));
    rep.flat_count = static_cast<long long>(flats.size());
    rep.identity_holds = rep.flat_count == rep.eps_contract;
    return rep;
}

Rat projection_bound(int q, int r_after, int k) {
    if (q < 2 || r_after < 0 || k < 0) throw std::invalid_argument("projection_bound: bad arguments");
    Rat main(checked_pow(q, r_after + k) - 1, q - 1);
    Rat corr = Rat(q) * Rat(checked_pow(q, 2 * k) - 1, static_cast<long long>(q) * q - 1);
    return main - corr;
}

ProjectionCheck verify_projection_instance(const Matroid& M, const RestrictionWitness& R,
                                           const IndexSet& F, int q) {
    ProjectionCheck out;
    int r = M.full_rank();
    if (!verify_pg_restriction(M, r, q, R)) {
        out.hypothesis_error = "R-not-spanning";
        return out;
    }
    if (M.closure(F) != F) {
        out.hypothesis_error = "not-a-flat";
        return out;
    }
    IndexSet image;
    for (int h : R.map) image.add(h);
    if (F.intersects(image)) {
        out.hypothesis_error = "not-disjoint";
        return out;
    }
    out.hypothesis_ok = true;

    out.k = M.rank(F);
    auto self = std::shared_ptr<const Matroid>(&M, [](const Matroid*) {});
    auto view = minor(self, F, IndexSet{});
    out.r_after = view->full_rank();
    out.eps_after = epsilon(*view);
    out.bound = projection_bound(q, out.r_after, out.k);
    out.holds = Rat(out.eps_after) >= out.bound;
    return out;
}

}  // namespace mwb
