#pragma once

// Evaluation modules over the twisted multiloop algebra: tensor products
//
//   V(lambda_1, b_1) (x) ... (x) V(lambda_k, b_k)
//
// of finite-dimensional irreducible highest-weight modules of the base
// algebra, each evaluated at a point b_i with nonzero coordinates. A loop
// element x t^r acts by
//
//   (x t^r) . (v_1 (x) ... (x) v_k) = sum_i b_i^r  v_1 (x) .. x v_i .. (x) v_k
//
// with b_i^r = prod_j b_ij^{r_j}. Degree information enters only through
// these scalars, so the module is finite-dimensional; the support condition
// x in g_rbar is enforced on every action request.

#include "lt/torus.hpp"

namespace lt {

struct EvalFactor {
    IntVec lambda;                   // dominant integral highest weight
    GeneratorRep rep;
    std::vector<Mat> action;         // one matrix per base-algebra basis element
    std::vector<Cyc> point;          // evaluation point, one nonzero entry per variable
    std::vector<Cyc> twisted_point;  // coordinatewise m_j-th powers
};

struct EvalModule {
    const MultiloopTorus* lt = nullptr;
    std::vector<EvalFactor> factors;
    size_t dim = 0;

    // Pairwise distinct twisted points: the separation predicate that drives
    // irreducibility of the tensor product.
    bool separated = false;

    size_t factor_count() const { return factors.size(); }
    // Mixed-radix rank of one basis index per factor, first factor most
    // significant.
    size_t tensor_rank(const std::vector<size_t>& idx) const;
    std::vector<size_t> tensor_unrank(size_t v) const;
    // The tensor product of the factor highest-weight vectors sits at rank 0.
    size_t highest_vector() const { return 0; }
};

// Builds the factors. Lengths of lambdas and points must agree and be
// positive; every point coordinate must be nonzero. Throws
// std::invalid_argument on malformed input.
EvalModule build_eval_module(const MultiloopTorus& lt, const std::vector<IntVec>& lambdas,
                             const std::vector<std::vector<Cyc>>& points);

// prod_j b[j]^{r_j}
Cyc point_power(const std::vector<Cyc>& b, const IntVec& r);

// Action matrix of x t^r on the tensor basis. x must lie in the graded piece
// of r; violations throw std::invalid_argument.
Mat eval_action(const EvalModule& m, const Vec& x, const IntVec& r);

// Values of the basis weights on the fixed Cartan basis, one row per tensor
// basis vector. The fixed Cartan acts diagonally, so these are exact.
std::vector<Vec> finite_weights(const EvalModule& m);

struct IntegrabilityReport {
    bool integrable = false;       // every real root vector acts nilpotently
    size_t max_power = 0;          // largest nilpotence exponent witnessed
    bool diagonal_cartan = false;  // fixed Cartan acts diagonally on the basis
    bool weyl_symmetric = false;   // weight multiset invariant under the
                                   // reflections of the fixed-part roots
    bool integral_pairings = false;  // all weight/coroot pairings are integers
    std::string detail;
};

// Nilpotence of every real root vector (checked at two degrees per vector),
// diagonality of the fixed Cartan, Weyl symmetry of the weight multiset and
// integrality of the coroot pairings.
IntegrabilityReport check_integrable(const EvalModule& m);

enum class Verdict { Pass, Fail, Inconclusive };

// True when, per degree class, the span of the evaluation coefficient
// vectors (b_1^r, ..., b_k^r) over |r_j| <= radius is invariant under the
// lattice shifts r -> r + m_j e_j. Beyond such a radius every action matrix
// of a deeper degree is a linear combination of the sampled ones.
bool generator_spans_closed(const EvalModule& m, long radius);

struct IrreducibilityReport {
    Verdict verdict = Verdict::Inconclusive;
    long radius = 0;          // generator degree radius actually used
    size_t algebra_dim = 0;   // dimension of the generated matrix algebra
    bool generators_complete = false;  // coefficient spans closed under the
                                       // lattice shifts, so the sampled
                                       // generators span all of them
    bool matches_separation = false;   // verdict agrees with the separation
                                       // predicate
    std::string detail;
};

// Exact irreducibility test. Generators are all x t^r with |r_j| <= radius;
// the radius escalates (doubling, capped by max_radius) until the span of
// the evaluation coefficient vectors is invariant under the lattice shifts,
// at which point the sampled generators span the full action algebra.
// Verdicts: the generated matrix algebra has dimension dim^2 (irreducible),
// some basis vector generates a proper invariant subspace (reducible), or
// neither certificate appears (inconclusive).
IrreducibilityReport check_irreducible(const EvalModule& m, long max_radius = 16);

}  // namespace lt
