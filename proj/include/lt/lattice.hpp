#pragma once

// Subgroups of Z^n in row Hermite normal form: canonical triangular bases,
// membership by back-substitution, and coset enumeration when the index is
// finite. Everything is exact over long integers; the lattices that appear
// here are desk-scale (n <= 4, small entries).

#include <cstddef>
#include <vector>

namespace lt {

using IntVec = std::vector<long>;

class IntLattice {
 public:
    // Subgroup of Z^n generated by the given vectors (each of length n).
    IntLattice(size_t n, const std::vector<IntVec>& generators);

    size_t ambient() const { return n_; }
    size_t rank() const { return rows_.size(); }
    bool full_rank() const { return rows_.size() == n_; }

    // Canonical triangular basis; rows_[k] has its pivot in column pivots_[k].
    const std::vector<IntVec>& hnf() const { return rows_; }

    // [Z^n : lattice], defined only at full rank.
    long index() const;

    bool contains(const IntVec& v) const;

    // Canonical coset representative: pivot coordinates reduced into
    // [0, pivot).
    IntVec reduce(IntVec v) const;

    // All coset representatives, lexicographic; requires full rank.
    std::vector<IntVec> coset_reps() const;

    bool operator==(const IntLattice& o) const {
        return n_ == o.n_ && rows_ == o.rows_;
    }

 private:
    size_t n_;
    std::vector<IntVec> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace lt
