#pragma once

// Twisted multiloop algebra of a simple Lie algebra, with its universal
// central extension and degree derivations.
//
// Given commuting finite-order automorphisms sigma_1..sigma_n of g with
// orders m_1..m_n, elements live in
//
//   L  =  (+)_{k in Z^n} g_kbar x t^k   (+)   Z   (+)   (+)_i C d_i
//
// where g_kbar is the joint eigenspace for the class of k mod (m_1..m_n),
// Z is spanned by the symbols t^r K_i over degrees r in
// Gamma = m_1 Z x ... x m_n Z modulo the relations sum_i r_i t^r K_i = 0,
// and d_1..d_n are the degree derivations. The bracket is
//
//   [x t^k, y t^l] = [x,y] t^{k+l} + (x|y) sum_i k_i t^{k+l} K_i
//   [d_i, x t^k]   = k_i x t^k        [d_i, t^r K_j] = r_i t^r K_j
//   [Z, loop] = [Z, Z] = [d_i, d_j] = 0
//
// with (.|.) the invariant form of g normalized so long roots have square
// length 2. The cocycle term only appears when (x|y) != 0, which forces
// k + l into Gamma, so the central part always stays inside Z.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lt/grading.hpp"

namespace lt {

// Central part of an element: degree -> coefficients of K_1..K_n. Kept in
// normal form: for each nonzero degree r the coefficient of K_{i(r)} is
// zero, where i(r) is the smallest index with r[i(r)] != 0 (one coordinate
// eliminated through the defining relation). Degree-0 rows, the K_i
// themselves, are never reduced. Zero rows are dropped.
struct CentralPart {
    std::map<IntVec, std::vector<Cyc>> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const CentralPart& o) const { return terms == o.terms; }
};

// Element in canonical form: at most one loop term per degree, zero terms
// dropped, central part in normal form, derivation coefficients either
// empty (zero) or one per variable.
struct TorusElement {
    std::map<IntVec, Vec> loop;
    CentralPart central;
    std::vector<Cyc> der;
};

TorusElement operator+(const TorusElement& a, const TorusElement& b);
TorusElement operator-(const TorusElement& a, const TorusElement& b);
TorusElement operator*(const Cyc& s, const TorusElement& a);
bool operator==(const TorusElement& a, const TorusElement& b);
bool element_is_zero(const TorusElement& a);

struct MultiloopTorus {
    // Computes the eigenspace grading and the form data of the fixed-part
    // Cartan subalgebra. Throws std::invalid_argument when the grading
    // produces no Cartan subalgebra of the fixed part or the invariant form
    // degenerates on it.
    MultiloopTorus(const SimpleLieAlgebra& algebra, const AutomorphismTuple& s);

    const SimpleLieAlgebra* g;
    GradedDecomposition grading;
    size_t nvars;
    std::vector<long> orders;

    std::vector<Subspace> piece_span;  // per class, for support tests
    Subspace h0span;
    Mat h0_cols;      // fixed Cartan basis as columns, for coordinate solves
    Mat h0_gram;      // invariant form on the fixed Cartan basis
    Mat h0_gram_inv;

    bool in_gamma(const IntVec& r) const;
    bool in_piece(const Vec& x, const IntVec& k) const;
    IntVec zero_degree() const { return IntVec(nvars, 0); }
};

// Element constructors. All validate degree lengths; loop_element checks
// the support condition x in g_kbar and central_element checks r in Gamma.
// Violations throw std::invalid_argument.
TorusElement loop_element(const MultiloopTorus& lt, const Vec& x, const IntVec& k);
TorusElement central_element(const MultiloopTorus& lt, const IntVec& r, size_t i);
TorusElement derivation_element(const MultiloopTorus& lt, size_t i);

// Reduces raw (degree, index, coefficient) triples to normal form.
// Degrees outside Gamma are rejected.
CentralPart zm_normal_form(const MultiloopTorus& lt,
                           const std::vector<std::tuple<IntVec, size_t, Cyc>>& raw);

// Full bracket on the extended algebra. Both inputs are validated against
// the support and Gamma constraints first; violations throw.
TorusElement bracket(const MultiloopTorus& lt, const TorusElement& a, const TorusElement& b);

// Throws std::invalid_argument describing the first constraint violation.
void validate_element(const MultiloopTorus& lt, const TorusElement& a);

// Root alpha + delta_k of the extended algebra: alpha is the tuple of values
// on the fixed Cartan basis (all zero for null roots), k the loop degree.
struct TorusRoot {
    IntVec alpha;
    IntVec deg;

    bool real() const;
};

// One root space inside a degree window: the vectors x with [h, x] =
// alpha(h) x in the piece of degree k, plus the central and derivation
// lines that sit at null roots.
struct TorusRootSpace {
    TorusRoot root;
    std::vector<Vec> loop_basis;
    size_t central_dim = 0;
    size_t derivation_dim = 0;

    size_t dim() const { return loop_basis.size() + central_dim + derivation_dim; }
};

// All root spaces with degree in the box (per-axis closed intervals), in
// lexicographic degree order, weights ascending within a degree. Re-checks
// the eigenvector property of every basis vector and that real root spaces
// of a verified Lie torus are at most one-dimensional.
std::vector<TorusRootSpace> root_spaces(const MultiloopTorus& lt,
                                        const std::vector<std::pair<long, long>>& box);

// Coroot of a real root gamma = alpha + delta_k:
//   gamma-vee = alpha-vee + (2/(alpha|alpha)) sum_i k_i K_i
// returned as an element (degree-0 loop part alpha-vee in the fixed Cartan,
// plain K_i central part). Null roots are rejected.
TorusElement coroot(const MultiloopTorus& lt, const TorusRoot& gamma);

// Weight of the extended Cartan h_0 (+) sum C K_i (+) sum C d_i, stored by
// its values on the fixed Cartan basis, on K_1..K_n and on d_1..d_n.
struct TorusWeight {
    std::vector<Cyc> finite;
    std::vector<Cyc> level;
    std::vector<Cyc> dval;
};

bool operator==(const TorusWeight& a, const TorusWeight& b);

// The root alpha + delta_k as a weight: finite part alpha, levels zero,
// d-values k.
TorusWeight root_weight(const MultiloopTorus& lt, const TorusRoot& gamma);

// Evaluates a weight on an element of the extended Cartan. The element must
// have its loop part at degree 0 inside the fixed Cartan span and central
// part at degree 0 only; anything else throws std::invalid_argument.
Cyc weight_eval(const MultiloopTorus& lt, const TorusWeight& w, const TorusElement& h);

// Reflection in a real root: lambda - lambda(gamma-vee) gamma. Involutive,
// preserves the level values.
TorusWeight weyl_reflect(const MultiloopTorus& lt, const TorusRoot& gamma,
                         const TorusWeight& lambda);

// Level-zero translation in loop direction j by a finite root alpha (values
// on the fixed Cartan basis): mu - mu(alpha-vee) delta_j. Requires
// mu(K_j) = 0; the finite part is untouched, only the d_j-value shifts.
TorusWeight weyl_translate(const MultiloopTorus& lt, size_t j, const IntVec& alpha,
                           const TorusWeight& mu);

// Pairing mu(alpha-vee) of a finite weight with the coroot of a finite root,
// both given by their values on the fixed Cartan basis.
Cyc coroot_pairing(const MultiloopTorus& lt, const std::vector<Cyc>& mu, const IntVec& alpha);

// Degree relabeling k -> B k for B in GL(n, Z): loop terms move to degree
// B k, the central symbols transform by t^r K_j -> sum_i B[i][j] t^{Br} K_i
// (then renormalized), and the derivations by the inverse transpose, which
// together preserve the bracket. Construction rejects |det B| != 1 and
// verifies the bracket identity T[a,b] = [Ta,Tb] on sampled pairs.
struct CoordinateChange {
    std::vector<std::vector<long>> fwd;
    std::vector<std::vector<long>> inv;
};

CoordinateChange change_of_coordinates(const MultiloopTorus& lt,
                                       const std::vector<std::vector<long>>& b);

TorusElement apply_coordinates(const CoordinateChange& cc, const TorusElement& a);

}  // namespace lt
