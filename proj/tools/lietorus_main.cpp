// Command line front end: builds graded Lie tori from a JSON run
// configuration, checks the torus axioms, runs the loop module
// decomposition pipeline, and hosts the built-in selftest matrix.
//
// Exit codes: 0 pass, 1 usage or configuration error, 2 a verification
// verdict failed, 3 the window was too small to certify a verdict.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "lt/config.hpp"
#include "lt/selftest.hpp"
#include "lt/serialize.hpp"

namespace fs = std::filesystem;
using namespace lt;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    std::string format = "text";
    std::string box_spec;
    long escalate = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_box) {
    cmd->add_option("--config", opts.config_path, "run configuration (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", opts.out_dir, "output directory (overrides the config)");
    cmd->add_option("--format", opts.format, "stdout format")
        ->check(CLI::IsMember({"json", "text"}));
    if (with_box) {
        cmd->add_option("--box", opts.box_spec, "window override, lo:hi per variable");
        cmd->add_option("--escalate", opts.escalate, "generator radius cap")
            ->check(CLI::PositiveNumber);
    }
}

RunConfig load_config(const CommonOpts& opts) {
    std::ifstream in(opts.config_path);
    Json doc = Json::parse(in);
    RunConfig cfg = parse_run_config(doc);
    if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
    if (cfg.out_dir.empty()) cfg.out_dir = ".";
    if (!opts.box_spec.empty()) {
        std::vector<std::pair<long, long>> box;
        std::stringstream ss(opts.box_spec);
        std::string part;
        while (std::getline(ss, part, ',')) {
            size_t colon = part.find(':');
            if (colon == std::string::npos)
                throw ConfigError("--box", "expected lo:hi intervals separated by commas");
            try {
                long lo = std::stol(part.substr(0, colon));
                long hi = std::stol(part.substr(colon + 1));
                if (lo > hi) throw ConfigError("--box", "empty interval " + part);
                box.emplace_back(lo, hi);
            } catch (const std::invalid_argument&) {
                throw ConfigError("--box", "malformed interval " + part);
            }
        }
        if (box.size() != cfg.n)
            throw ConfigError("--box", "expected one interval per loop variable");
        cfg.box = box;
    }
    return cfg;
}

// Write-then-rename so readers never observe a half-written file.
void atomic_write(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, path);
}

void emit(const fs::path& path, const Json& doc) { atomic_write(path, doc.dump(2) + "\n"); }

int cmd_build(const CommonOpts& opts) {
    RunConfig cfg = load_config(opts);
    SimpleLieAlgebra g = build_simple_lie_algebra(cfg.cartan_type, cfg.rank);
    AutomorphismTuple tuple = make_automorphism_tuple(g, config_sigmas(cfg, g));
    check_declared_orders(cfg, tuple);
    MultiloopTorus lt(g, tuple);

    fs::path dir(cfg.out_dir);
    std::vector<std::string> written;
    emit(dir / "algebra.json", algebra_to_json(g));
    written.push_back((dir / "algebra.json").string());
    emit(dir / "torus.json", torus_to_json(lt));
    written.push_back((dir / "torus.json").string());

    if (cfg.has_module()) {
        EvalModule mod = build_eval_module(lt, cfg.lambdas, cfg.points);
        Json factors = Json::array();
        std::string grids;
        for (const EvalFactor& f : mod.factors) {
            factors.push_back(generator_rep_to_json(f.rep));
            grids += weight_table_text(f.rep) + "\n";
        }
        Json mj;
        mj["dim"] = mod.dim;
        mj["separated"] = mod.separated;
        mj["factors"] = factors;
        emit(dir / "module.json", mj);
        written.push_back((dir / "module.json").string());
        atomic_write(dir / "module.txt", grids);
        written.push_back((dir / "module.txt").string());
    }

    if (opts.format == "json") {
        Json out;
        out["written"] = written;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const std::string& w : written) std::cout << "wrote " << w << "\n";
    }
    return 0;
}

int cmd_check_torus(const CommonOpts& opts) {
    RunConfig cfg = load_config(opts);
    SimpleLieAlgebra g = build_simple_lie_algebra(cfg.cartan_type, cfg.rank);
    AutomorphismTuple tuple = make_automorphism_tuple(g, config_sigmas(cfg, g));
    check_declared_orders(cfg, tuple);
    LieTorusReport rep = check_lie_torus(g, tuple);

    Json j;
    j["ok"] = rep.ok;
    j["failed_axiom"] = rep.failed_axiom;
    j["detail"] = rep.detail;
    Json dims = Json::array();
    for (const auto& basis : rep.grading.piece_basis) dims.push_back(basis.size());
    j["piece_dims"] = dims;
    Json orders = Json::array();
    for (long o : rep.grading.orders) orders.push_back(o);
    j["orders"] = orders;

    emit(fs::path(cfg.out_dir) / "torus-check.json", j);

    if (opts.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else if (rep.ok) {
        std::cout << "lie torus axioms: pass\n";
    } else {
        std::cout << "lie torus axioms: FAIL (axiom " << rep.failed_axiom << ": " << rep.detail
                  << ")\n";
    }
    return rep.ok ? 0 : 2;
}

int cmd_decompose(const CommonOpts& opts) {
    RunConfig cfg = load_config(opts);
    if (!cfg.has_module())
        throw ConfigError("lambda", "decompose needs module data (lambda and b)");
    SimpleLieAlgebra g = build_simple_lie_algebra(cfg.cartan_type, cfg.rank);
    PipelineInput in = config_pipeline_input(cfg, g);
    if (opts.escalate > 0) in.options.max_gen_radius = opts.escalate;

    ClassificationReport rep = verify_classification_instance(in);

    fs::path dir(cfg.out_dir);
    emit(dir / "decomposition.json", classification_to_json(rep));
    atomic_write(dir / "decomposition.txt", classification_text(rep));

    if (opts.format == "json")
        std::cout << classification_to_json(rep).dump(2) << "\n";
    else
        std::cout << classification_text(rep);

    if (rep.all_pass) return 0;
    // distinguish a window too small to decide from a definite failure
    const ComponentReport& d = rep.decomposition;
    if (d.interior_irreducible == Verdict::Fail) return 2;
    if (d.interior.empty() || d.interior_irreducible == Verdict::Inconclusive ||
        !d.lattice.certified)
        return 3;
    return 2;
}

int cmd_selftest(const std::vector<std::string>& instances, bool inject_fault) {
    SelftestOptions opt;
    opt.only = instances;
    opt.inject_fault = inject_fault;
    SelftestResult r = run_selftest(opt);
    std::cout << r.report;
    return r.all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded Lie torus construction and loop module verification"};
    app.require_subcommand(1);

    CommonOpts build_opts;
    CLI::App* build = app.add_subcommand("build", "construct the algebra, torus and module files");
    add_common(build, build_opts, false);

    CommonOpts check_opts;
    CLI::App* check = app.add_subcommand("check-torus", "verify the Lie torus axioms");
    add_common(check, check_opts, false);

    CommonOpts dec_opts;
    CLI::App* dec = app.add_subcommand("decompose", "run the loop module decomposition pipeline");
    add_common(dec, dec_opts, true);

    std::vector<std::string> st_instances;
    bool st_fault = false;
    CLI::App* st = app.add_subcommand("selftest", "run the built-in verification matrix");
    st->add_option("--instance", st_instances, "restrict to named instances");
    st->add_flag("--inject-fault", st_fault, "corrupt a structure constant and expect detection");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(build_opts);
        if (check->parsed()) return cmd_check_torus(check_opts);
        if (dec->parsed()) return cmd_decompose(dec_opts);
        return cmd_selftest(st_instances, st_fault);
    } catch (const Json::parse_error& e) {
        std::cerr << "error: invalid JSON: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
