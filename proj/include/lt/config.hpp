#pragma once

// Run configuration: a single JSON document describing the algebra, the
// twist, the module data and the window. No environment variables; configs
// are meant to be committed next to the results they produce.

#include <stdexcept>

#include "lt/serialize.hpp"

namespace lt {

// Validation failure with the offending field spelled out in the message.
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& field, const std::string& why)
        : std::invalid_argument(field + ": " + why) {}
};

struct SigmaSpec {
    bool diagram = false;       // false: identity
    std::vector<int> perm;      // node permutation when diagram
};

struct RunConfig {
    char cartan_type = 'A';
    int rank = 1;
    size_t n = 1;                    // loop variables
    std::vector<SigmaSpec> sigma;    // one per variable
    std::vector<long> m;             // declared twist orders; cross-checked
    bool has_m = false;

    std::vector<IntVec> lambdas;
    std::vector<std::vector<Cyc>> points;
    std::vector<Cyc> alpha;                  // defaults to zeros
    std::vector<std::pair<long, long>> box;  // defaults to [-4,4]^n
    std::vector<std::string> checks;         // empty means all
    std::string out_dir;

    bool has_module() const { return !lambdas.empty(); }
};

// Names accepted in "checks" and their stage coverage in the pipeline.
const std::vector<std::string>& known_checks();

// Parses and validates the document. Throws ConfigError naming the field.
RunConfig parse_run_config(const Json& doc);

// Realizes the automorphism matrices over the constructed algebra. Throws
// ConfigError when a permutation is not a diagram symmetry.
std::vector<Mat> config_sigmas(const RunConfig& cfg, const SimpleLieAlgebra& g);

// Cross-checks declared twist orders against the computed ones.
void check_declared_orders(const RunConfig& cfg, const AutomorphismTuple& tuple);

// Assembles the pipeline input; the algebra must outlive the result.
PipelineInput config_pipeline_input(const RunConfig& cfg, const SimpleLieAlgebra& g);

}  // namespace lt
