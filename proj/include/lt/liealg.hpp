#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lt/hwmodule.hpp"
#include "lt/linalg.hpp"
#include "lt/parallel.hpp"
#include "lt/rootsys.hpp"

namespace lt {

using SparseVec = std::vector<std::pair<size_t, Cyc>>;

// Simple Lie algebra in a Chevalley basis.
//
// Basis order: e_beta for the positive roots in root-system order, then
// f_beta in the same order, then h_1..h_l. Elements are dense coefficient
// vectors (Vec) over that basis.
//
// Construction realizes the Serre generators as exact matrices on the
// smallest fundamental highest-weight module and defines the remaining root
// vectors by the extraspecial-pair recursion e_gamma = [e_alpha, e_beta]/(p+1),
// f_gamma = -[f_alpha, f_beta]/(p+1). This fixes all signs canonically:
// extraspecial structure constants are +(p+1). All structure constants are
// integers with |N| = p+1 on root pairs (verified in tests).
//
// The invariant form is normalized so long roots have (theta|theta) = 2:
// (e_beta|f_beta) = 2/(beta,beta), (h_i|h_j) = a_ij / d_j, all other basis
// pairs orthogonal.
class SimpleLieAlgebra {
public:
    explicit SimpleLieAlgebra(const CartanMatrix& cm);

    char type() const { return type_; }
    int rank() const { return rs_.rank(); }
    const RootSystem& roots() const { return rs_; }
    size_t dim() const { return dim_; }
    size_t n_pos() const { return npos_; }

    size_t e_index(size_t root_idx) const { return root_idx; }
    size_t f_index(size_t root_idx) const { return npos_ + root_idx; }
    size_t h_index(size_t i) const { return 2 * npos_ + i; }
    // ('e', root index), ('f', root index) or ('h', node index)
    std::pair<char, size_t> label_info(size_t basis_idx) const;
    std::string basis_label(size_t basis_idx) const;
    // root attached to a basis vector in root coordinates; zero vector for h.
    IntVec basis_root(size_t basis_idx) const;

    Vec basis_vector(size_t idx) const;
    const SparseVec& bracket_basis(size_t x, size_t y) const { return table_[x][y]; }
    Vec bracket(const Vec& x, const Vec& y) const;
    Mat ad(const Vec& x) const;

    const Mat& form_matrix() const { return form_; }
    Cyc form(const Vec& x, const Vec& y) const;

    // Integer coordinates of the coroot gamma-vee in the h basis.
    IntVec coroot_coords(const IntVec& root) const;

    // e_gamma = [e_alpha, e_beta]/scale for non-simple gamma (scale = p+1);
    // simple roots have scale 0 and alpha = node index.
    struct Tree {
        size_t alpha = 0;
        size_t beta = 0;
        long scale = 0;
    };
    const std::vector<Tree>& trees() const { return trees_; }

private:
    char type_;
    RootSystem rs_;
    size_t npos_, dim_;
    std::vector<std::vector<SparseVec>> table_;
    Mat form_;
    std::vector<Tree> trees_;
};

SimpleLieAlgebra build_simple_lie_algebra(char type, int rank);

// Automorphism induced by a Dynkin-diagram symmetry: e_i -> e_{perm[i]},
// f_i -> f_{perm[i]}, h_i -> h_{perm[i]}, extended along the expression trees.
// Throws std::invalid_argument unless perm preserves the Cartan matrix.
Mat diagram_automorphism(const SimpleLieAlgebra& g, const std::vector<int>& perm);

// First basis pair with sigma[x,y] != [sigma x, sigma y], or nullopt.
std::optional<std::pair<size_t, size_t>> automorphism_violation(const SimpleLieAlgebra& g,
                                                                const Mat& sigma,
                                                                Exec exec = Exec::Serial);

// First basis triple violating the Jacobi identity, or nullopt.
std::optional<std::array<size_t, 3>> jacobi_violation(const SimpleLieAlgebra& g,
                                                      Exec exec = Exec::Serial);

// First basis pair violating antisymmetry, or nullopt.
std::optional<std::pair<size_t, size_t>> antisymmetry_violation(const SimpleLieAlgebra& g,
                                                                Exec exec = Exec::Serial);

// First basis triple with ([x,y]|z) != (x|[y,z]), or nullopt.
std::optional<std::array<size_t, 3>> form_associativity_violation(const SimpleLieAlgebra& g,
                                                                  Exec exec = Exec::Serial);

// Action matrices for every algebra basis element on a highest-weight module
// built from the same root system, extended along the expression trees.
std::vector<Mat> basis_action_matrices(const SimpleLieAlgebra& g, const GeneratorRep& rep);

}  // namespace lt
