#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "lt/rational.hpp"

namespace lt {

using IntVec = std::vector<long>;

// Cartan matrix with rows indexed by coroots: a[i][j] = <alpha_j, alpha_i^vee>.
struct CartanMatrix {
    char type = 0;
    int rank = 0;
    std::vector<std::vector<long>> a;
};

// Standard Cartan matrix for a simple series. Valid ranks: A >= 1, B and C >= 2,
// D >= 3, E in {6,7,8}, F = 4, G = 2. Throws std::invalid_argument otherwise.
// Conventions: in B the last node is short, in C the last node is long, in G the
// first node is long. E series uses the numbering with node 2 attached to node 4.
CartanMatrix cartan_matrix(char type, int rank);

// Finite root system of a connected Cartan matrix.
//
// Roots are integer coordinate vectors in the simple-root basis. Weights are
// integer vectors in fundamental-weight coordinates (m_i = <mu, alpha_i^vee>).
// The invariant form is normalized so long roots have squared length 2; the
// symmetrizer d_i = (alpha_i, alpha_i)/2 is rational with max entry 1.
class RootSystem {
public:
    explicit RootSystem(std::vector<std::vector<long>> cartan);

    int rank() const { return static_cast<int>(a_.size()); }
    const std::vector<std::vector<long>>& cartan() const { return a_; }
    const std::vector<Rat>& symmetrizer() const { return d_; }

    // Positive roots sorted by (height, lex); index order is stable.
    const std::vector<IntVec>& positive_roots() const { return pos_; }
    const IntVec& highest_root() const { return theta_; }
    long height(const IntVec& root) const;
    bool is_positive_root(const IntVec& c) const;
    bool is_root(const IntVec& c) const;
    size_t root_index(const IntVec& c) const;  // positive roots only; throws if absent

    // Largest k >= 0 with beta - k*alpha a root; beta and alpha roots, beta != +-alpha.
    long string_down(const IntVec& beta, const IntVec& alpha) const;

    // <beta, alpha_i^vee> for beta in root coordinates.
    long pair_with_coroot(const IntVec& root_coords, int i) const;

    // Coordinate changes and the invariant form.
    IntVec root_to_weight(const IntVec& root_coords) const;  // m = A c
    std::vector<Rat> weight_to_root_coords(const IntVec& m) const;
    Rat ip_roots(const IntVec& c1, const IntVec& c2) const;
    Rat ip_weight_root(const IntVec& m, const IntVec& root_coords) const;
    Rat ip_weights(const IntVec& m1, const IntVec& m2) const;
    Rat root_length_sq(const IntVec& c) const { return ip_roots(c, c); }
    bool is_long_root(const IntVec& c) const;

    // Weyl group acting in fundamental-weight coordinates.
    IntVec reflect_weight(const IntVec& m, int i) const;
    IntVec antidominant(const IntVec& m) const;
    std::set<IntVec> weyl_orbit(const IntVec& m) const;
    bool is_dominant(const IntVec& m) const;

    // Dominant mu with lambda - mu a nonnegative integer sum of simple roots,
    // together with the descent coordinates k (lambda - mu = sum k_i alpha_i).
    std::vector<std::pair<IntVec, IntVec>> dominant_weights_below(const IntVec& lambda) const;
    // Minimal elements of that set under mu <= nu iff nu - mu in Q+.
    std::vector<IntVec> minimal_dominant_weights(const IntVec& lambda) const;

    // dim V(lambda) for dominant integral lambda, by the Weyl product formula.
    Rat weyl_dim(const IntVec& lambda) const;
    // Weight multiplicities of V(lambda) by the Freudenthal recursion,
    // keyed by fundamental-weight coordinates; only nonzero entries appear.
    std::map<IntVec, Rat> weight_multiplicities(const IntVec& lambda) const;

    // Match an arbitrary Cartan matrix against the standard tables. On success
    // returns the standard matrix and a permutation p with
    // given[i][j] == standard.a[p[i]][p[j]]. B is preferred over C at rank 2.
    static std::optional<std::pair<CartanMatrix, std::vector<int>>> identify(
        const std::vector<std::vector<long>>& a);

private:
    std::vector<std::vector<long>> a_;
    std::vector<Rat> d_;
    std::vector<std::vector<Rat>> ainv_;
    std::vector<IntVec> pos_;
    std::map<IntVec, size_t> index_;
    IntVec theta_;

    void validate_and_symmetrize();
    void generate_roots();
};

}  // namespace lt
