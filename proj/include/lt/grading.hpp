#pragma once

// Gradings of a Lie algebra by a tuple of commuting finite-order automorphisms,
// and the structural gate used before building twisted loop algebras:
//   (1) the fixed subalgebra is simple,
//   (2) every nonzero graded piece is a trivial module plus either zero or a
//       module whose nonzero weights all lie in the extended root set,
//   (3) the automorphisms generate a group of order = product of the orders.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lt/liealg.hpp"

namespace lt {

// Structure-constant table detached from any particular construction, so the
// checkers below also run on synthetic inputs (direct sums, mutated tables).
struct BracketTable {
    size_t dim = 0;
    std::vector<std::vector<SparseVec>> t;
    // Basis indices spanning a toral ("h") block, used as the first guess when
    // a Cartan subalgebra of the fixed part is needed.
    std::vector<size_t> cartan_hint;

    Vec bracket(const Vec& x, const Vec& y) const;
    static BracketTable from(const SimpleLieAlgebra& g);
    // Block direct sum; brackets across the two summands vanish.
    static BracketTable direct_sum(const BracketTable& a, const BracketTable& b);
};

// Commuting finite-order automorphisms with their multiplicative orders.
struct AutomorphismTuple {
    std::vector<Mat> sigma;
    std::vector<long> orders;

    size_t size() const { return sigma.size(); }
    long order_product() const;
};

// Validates the automorphism law on all basis pairs, finite order (computed,
// not supplied), and pairwise commutation. Throws std::invalid_argument.
AutomorphismTuple make_automorphism_tuple(const BracketTable& g, const std::vector<Mat>& sigmas);
AutomorphismTuple make_automorphism_tuple(const SimpleLieAlgebra& g,
                                          const std::vector<Mat>& sigmas);

// g = (+)_k g_k over classes k in Z_m1 x ... x Z_mn, where
// g_k = {x : sigma_i x = xi_i^{k_i} x} for primitive m_i-th roots xi_i.
// Pieces are listed in mixed-radix order of the class tuple.
struct GradedDecomposition {
    std::vector<long> orders;
    std::vector<IntVec> classes;
    std::vector<std::vector<Vec>> piece_basis;

    // Cartan subalgebra of the fixed part: the joint-fixed vectors supported
    // on the hinted toral block when those are self-centralizing, otherwise
    // the centralizer of a regular element found by a deterministic search.
    // Empty when neither route applies; weight maps are then empty too.
    std::vector<Vec> h0;
    // Per piece: integer weight tuple (values on h0) -> basis of that weight
    // space. The union of the weight bases equals piece_basis.
    std::vector<std::map<IntVec, std::vector<Vec>>> piece_weights;

    size_t class_index(const IntVec& k) const;  // indices reduced mod orders
    IntVec class_sum(const IntVec& a, const IntVec& b) const;
};

GradedDecomposition eigenspace_grading(const SimpleLieAlgebra& g, const AutomorphismTuple& s);
GradedDecomposition eigenspace_grading(const BracketTable& g, const AutomorphismTuple& s);

// Weight material of one finite-dimensional module: weight -> multiplicity.
using WeightMultiset = std::map<IntVec, size_t>;

struct ConditionMReport {
    bool ok = false;
    std::string detail;
};

// True iff the module is irreducible, has dimension > 1, and every nonzero
// weight lies in delta_en.
ConditionMReport check_condition_m(const WeightMultiset& weights, bool irreducible,
                                   const std::set<IntVec>& delta_en);

// Exact simplicity test for a subalgebra given by a basis inside a bracket
// table: non-abelian, Killing form non-degenerate, no basis vector generates a
// proper ideal, and the centroid is one-dimensional. The first two failures
// and a found proper ideal certify non-simplicity; centroid dimension one
// certifies simplicity.
struct SimplicityReport {
    bool simple = false;
    bool certified = false;  // false only for the indeterminate corner
    std::string detail;
};
SimplicityReport simplicity_verdict(const BracketTable& g, const std::vector<Vec>& basis);

// Root data of the fixed subalgebra, expressed in weight tuples on h0.
struct FixedPointRootData {
    std::vector<Vec> h0;             // Cartan subalgebra of the fixed part
    std::set<IntVec> roots;          // nonzero weights of the fixed part
    std::vector<IntVec> simple;      // chosen simple roots (lex-positive order)
    CartanMatrix type;               // identified abstract type
    std::vector<Vec> raising;        // basis of the positive root spaces
    std::set<IntVec> delta_en;       // extended roots: doubles added for type B
                                     // and in rank one
};

struct LieTorusReport {
    bool ok = false;
    int failed_axiom = 0;  // 0 none, else 1, 2 or 3
    std::string detail;

    GradedDecomposition grading;
    std::optional<FixedPointRootData> fixed;  // present when axiom 1 passed

    // Consistency facts computed alongside the verdict:
    // all nonzero weights across the pieces match an admissible extended-root
    // prediction, and nonzero-weight spaces are at most one-dimensional.
    bool weights_match_prediction = false;
    bool weight_spaces_thin = false;
};

LieTorusReport check_lie_torus(const SimpleLieAlgebra& g, const AutomorphismTuple& s);
LieTorusReport check_lie_torus(const BracketTable& g, const AutomorphismTuple& s);

}  // namespace lt
