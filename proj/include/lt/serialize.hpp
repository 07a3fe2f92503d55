#pragma once

// JSON emission and ingestion for every artifact the command line writes.
// All documents use insertion-ordered objects and canonical scalar forms, so
// emitting the same value twice produces byte-identical text.

#include <json.hpp>

#include "lt/loopmod.hpp"

namespace lt {

using Json = nlohmann::ordered_json;

// {"N": conductor, "coeffs": [["num","den"], ...]} with phi(N) entries and
// decimal string numerators/denominators.
Json cyc_to_json(const Cyc& c);
// Strict inverse of cyc_to_json. Throws std::invalid_argument on shape or
// value errors; the conductor is preserved, not reduced.
Cyc cyc_from_json(const Json& j);
// Forgiving scalar reader for configuration files: a JSON integer, a decimal
// string "a" or "a/b", or the strict object form.
Cyc scalar_from_json(const Json& j);

Json vec_to_json(const Vec& v);

// {"type","rank","dim","structure":[[i,j,[[k,coeff]...]]...],"form":[[...]]}
// listing only basis pairs with a nonzero bracket.
Json algebra_to_json(const SimpleLieAlgebra& g);

// Grading summary of a constructed torus: variables, twist orders (the
// diagonal of the degree lattice), classes and piece dimensions.
Json torus_to_json(const MultiloopTorus& lt);

// {"loop":[{"deg":[...],"vec":[...]}...],
//  "central":[{"deg":[...],"i":n,"c":...}...], "der":[...]}
// with the central part in normal form and zero terms dropped.
Json torus_element_to_json(const TorusElement& a);
// Validates degree lengths and support against the torus.
TorusElement torus_element_from_json(const MultiloopTorus& lt, const Json& j);

// Weight table, basis labels (descent coordinates) and sparse generator
// action matrices of one highest-weight module.
Json generator_rep_to_json(const GeneratorRep& rep);
// Plain-text weight grid: one line per weight with its multiplicity.
std::string weight_table_text(const GeneratorRep& rep);

// {"lattice":{"hnf":[[...]],"index":...},"components":[{"rep":[...],
//  "dims":{"deg":dim,...}}...],"grade_shift_pairs":[...],"verdicts":{...}}
Json component_report_to_json(const ComponentReport& rep);
std::string component_report_text(const ComponentReport& rep);

// Full pipeline output: one entry per stage plus the decomposition report.
Json classification_to_json(const ClassificationReport& rep);
std::string classification_text(const ClassificationReport& rep);

}  // namespace lt
