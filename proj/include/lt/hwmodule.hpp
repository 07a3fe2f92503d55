#pragma once

#include <map>

#include "lt/linalg.hpp"
#include "lt/rootsys.hpp"

namespace lt {

// Exact action of the Serre generators e_i, f_i, h_i on the irreducible
// highest-weight module V(lambda), built from the Cartan matrix alone:
// the depth-truncated Verma span is quotiented by the radical of the
// contravariant form, one weight space at a time (Gram-matrix rank).
//
// Basis vectors are grouped by descent coordinates k (weight = lambda - sum
// k_i alpha_i) and ordered by (height, lex) of k. All matrix entries are
// rational. Basis vector 0 is the highest-weight vector.
struct GeneratorRep {
    IntVec lambda;
    size_t dim = 0;
    std::vector<IntVec> weights;                          // omega coordinates per basis vector
    std::map<IntVec, std::vector<size_t>> weight_spaces;  // descent k -> basis indices
    std::vector<Mat> e, f, h;                             // one matrix per simple root
};

// Throws std::invalid_argument unless lambda is dominant integral.
GeneratorRep build_generator_rep(const RootSystem& rs, const IntVec& lambda);

}  // namespace lt
