#include "lt/lattice.hpp"

#include <cstdlib>
#include <stdexcept>

namespace lt {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

void axpy(IntVec& dst, long c, const IntVec& src) {
    for (size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
}

}  // namespace

IntLattice::IntLattice(size_t n, const std::vector<IntVec>& generators) : n_(n) {
    std::vector<IntVec> w;
    for (const IntVec& g : generators) {
        if (g.size() != n_) throw std::invalid_argument("generator length mismatch");
        w.push_back(g);
    }
    size_t r = 0;
    for (size_t col = 0; col < n_ && r < w.size(); ++col) {
        // Euclid within the column until a single nonzero entry remains
        for (;;) {
            size_t best = w.size();
            for (size_t i = r; i < w.size(); ++i)
                if (w[i][col] != 0 &&
                    (best == w.size() || std::abs(w[i][col]) < std::abs(w[best][col])))
                    best = i;
            if (best == w.size()) break;
            std::swap(w[r], w[best]);
            bool clear = true;
            for (size_t i = r + 1; i < w.size(); ++i)
                if (w[i][col] != 0) {
                    axpy(w[i], -(w[i][col] / w[r][col]), w[r]);
                    if (w[i][col] != 0) clear = false;
                }
            if (clear) break;
        }
        if (w[r][col] == 0) continue;
        if (w[r][col] < 0)
            for (long& x : w[r]) x = -x;
        for (size_t i = 0; i < r; ++i) axpy(w[i], -floor_div(w[i][col], w[r][col]), w[r]);
        pivots_.push_back(col);
        ++r;
    }
    rows_.assign(w.begin(), w.begin() + r);
}

long IntLattice::index() const {
    if (!full_rank()) throw std::logic_error("index is infinite below full rank");
    long d = 1;
    for (size_t k = 0; k < rows_.size(); ++k) d *= rows_[k][pivots_[k]];
    return d;
}

bool IntLattice::contains(const IntVec& v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
    IntVec w = v;
    for (size_t k = 0; k < rows_.size(); ++k) {
        long p = rows_[k][pivots_[k]];
        if (w[pivots_[k]] % p != 0) return false;
        axpy(w, -(w[pivots_[k]] / p), rows_[k]);
    }
    for (long x : w)
        if (x != 0) return false;
    return true;
}

IntVec IntLattice::reduce(IntVec v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
    for (size_t k = 0; k < rows_.size(); ++k)
        axpy(v, -floor_div(v[pivots_[k]], rows_[k][pivots_[k]]), rows_[k]);
    return v;
}

std::vector<IntVec> IntLattice::coset_reps() const {
    if (!full_rank()) throw std::logic_error("coset enumeration needs full rank");
    std::vector<IntVec> reps;
    IntVec v(n_, 0);
    for (;;) {
        reps.push_back(v);
        size_t ax = n_;
        bool done = true;
        while (ax-- > 0) {
            if (v[ax] + 1 < rows_[ax][pivots_[ax]]) {
                ++v[ax];
                for (size_t j = ax + 1; j < n_; ++j) v[j] = 0;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return reps;
}

}  // namespace lt
