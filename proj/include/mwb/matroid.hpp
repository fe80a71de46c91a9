#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mwb/gf.hpp"
#include "mwb/index_set.hpp"

namespace mwb {

class Matroid;
using MatroidPtr = std::shared_ptr<const Matroid>;

// Borrowed view of a coordinate representation: one column per element.
struct LinearView {
    const FieldSpec* fs;
    int rows;
    const std::vector<std::vector<FieldElement>>* cols;
};

// A matroid on ground set {0, ..., size()-1} given by an exact rank
// function.  Instances are immutable after construction; rank queries are
// pure and safe to issue concurrently.
class Matroid {
public:
    virtual ~Matroid() = default;

    virtual int size() const = 0;

    // Exact rank of X; indices out of [0, size()) throw std::out_of_range.
    virtual int rank(const IndexSet& X) const = 0;

    // cl(X) = {e : r(X + e) = r(X)}.  Overridden where a faster path exists.
    virtual IndexSet closure(const IndexSet& X) const;

    // Coordinate columns when this matroid carries them (linear matroids and
    // their minors); nullopt otherwise.
    virtual std::optional<LinearView> linear_view() const { return std::nullopt; }

    int full_rank() const;
    IndexSet ground() const { return IndexSet::range(size()); }

protected:
    void check_subset(const IndexSet& X) const;

private:
    mutable std::atomic<int> full_rank_cache_{-1};
};

// Incremental Gaussian elimination over a FieldSpec.  Basis columns are kept
// pivot-normalized so reductions are single passes.
class Elim {
public:
    Elim(const FieldSpec& fs, int rows) : fs_(&fs), rows_(rows) {}

    // Residual of v after reduction against the current basis.
    std::vector<FieldElement> reduce(std::vector<FieldElement> v) const;

    // Reduce and, if the residual is nonzero, absorb it.  Returns whether the
    // rank grew.
    bool add(std::vector<FieldElement> v);

    int rank() const { return static_cast<int>(pivot_.size()); }

private:
    const FieldSpec* fs_;
    int rows_;
    std::vector<std::vector<FieldElement>> basis_;
    std::vector<int> pivot_;
};

class LinearMatroid final : public Matroid {
public:
    LinearMatroid(FieldSpec fs, int rows, std::vector<std::vector<FieldElement>> cols);

    int size() const override { return static_cast<int>(cols_.size()); }
    int rank(const IndexSet& X) const override;
    IndexSet closure(const IndexSet& X) const override;
    std::optional<LinearView> linear_view() const override {
        return LinearView{&fs_, rows_, &cols_};
    }

    const FieldSpec& field() const { return fs_; }
    int rows() const { return rows_; }
    const std::vector<FieldElement>& column(int i) const { return cols_[i]; }

private:
    FieldSpec fs_;
    int rows_;
    std::vector<std::vector<FieldElement>> cols_;
};

// Matroid given by its list of bases.  Construction checks that all bases
// have the same size and that the exchange axiom holds: exhaustively for
// ground sets up to exchange_check_limit elements, on sampled pairs beyond
// that (exchange_fully_validated() reports which regime applied).
class BasesMatroid final : public Matroid {
public:
    explicit BasesMatroid(int n, std::vector<IndexSet> bases, int exchange_check_limit = 12);

    int size() const override { return n_; }
    int rank(const IndexSet& X) const override;

    int basis_size() const { return rank_; }
    const std::vector<IndexSet>& bases() const { return bases_; }
    bool exchange_fully_validated() const { return fully_validated_; }

private:
    int n_;
    int rank_;
    std::vector<IndexSet> bases_;
    bool fully_validated_;
};

// U_{r,n}: every r-subset is a basis.
MatroidPtr uniform_matroid(int r, int n);

// Minor M/C\D presented on a compact ground set.  rank_view(X) =
// r(X + C) - r(C); contraction of a dependent C is permitted.  Views of
// views flatten, so base() is never itself a MinorView.
class MinorView final : public Matroid {
public:
    static std::shared_ptr<const MinorView> make(MatroidPtr base, const IndexSet& contract,
                                                 const IndexSet& del);

    int size() const override { return static_cast<int>(elems_.size()); }
    int rank(const IndexSet& X) const override;
    std::optional<LinearView> linear_view() const override;

    MatroidPtr base() const { return base_; }
    const IndexSet& contracted() const { return contract_; }
    const IndexSet& deleted() const { return delete_; }

    int to_base(int i) const { return elems_[i]; }
    int from_base(int b) const { return inv_[b]; }
    IndexSet to_base(const IndexSet& X) const;
    IndexSet from_base(const IndexSet& X) const;

private:
    MinorView() = default;

    MatroidPtr base_;
    IndexSet contract_, delete_;
    std::vector<int> elems_;  // view index -> base index, ascending
    std::vector<int> inv_;    // base index -> view index or -1
    int contract_rank_ = 0;

    // When the base is linear the view stores columns reduced against the
    // contracted set; rank queries then eliminate only the queried columns.
    bool fast_ = false;
    const LinearMatroid* lin_ = nullptr;
    std::vector<std::vector<FieldElement>> fast_cols_;
};

class DirectSum final : public Matroid {
public:
    DirectSum(MatroidPtr a, MatroidPtr b);

    int size() const override { return na_ + nb_; }
    int rank(const IndexSet& X) const override;

    MatroidPtr left() const { return a_; }
    MatroidPtr right() const { return b_; }
    int left_size() const { return na_; }

private:
    MatroidPtr a_, b_;
    int na_, nb_;
};

MatroidPtr direct_sum(MatroidPtr a, MatroidPtr b);

// M/contract\del; throws on overlapping sets or out-of-range indices.
MatroidPtr minor(MatroidPtr M, const IndexSet& contract, const IndexSet& del);

// M restricted to keep.
MatroidPtr restriction(MatroidPtr M, const IndexSet& keep);

struct SimplifyResult {
    IndexSet loops;
    std::vector<IndexSet> classes;     // parallel classes, ordered by least element
    std::vector<int> class_of;         // element -> class index; -1 for loops
    std::vector<int> representatives;  // least index per class
};

SimplifyResult simplify(const Matroid& M);

// epsilon(M) = |si(M)| = number of parallel classes.
int epsilon(const Matroid& M);

bool is_simple(const Matroid& M);

// r(F) + r(X) - r(F + X), always >= 0 by submodularity.
int local_connectivity(const Matroid& M, const IndexSet& F, const IndexSet& X);

// All rank-k flats, in lexicographic order of their sorted index lists.
std::vector<IndexSet> flats_of_rank(const Matroid& M, int k);

// Rank-k flats containing the flat F0 (F0 itself when k == r(F0)).
std::vector<IndexSet> flats_of_rank_containing(const Matroid& M, int k, const IndexSet& F0);

// Identity-map rank-table comparison; both sizes must match and be <= 20.
bool rank_tables_equal(const Matroid& A, const Matroid& B);

// Deterministic work counter (rank queries issued since the last reset).
uint64_t rank_query_count();
void reset_rank_query_count();

}  // namespace mwb
