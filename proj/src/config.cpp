#include "lt/config.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lt {

namespace {

long get_long(const Json& j, const std::string& field) {
    if (!j.is_number_integer()) throw ConfigError(field, "expected an integer");
    return j.get<long>();
}

std::string index_field(const std::string& base, size_t i) {
    return base + "[" + std::to_string(i) + "]";
}

}  // namespace

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {"torus",   "irreducible", "integrable",
                                                   "decompose", "central",   "weights"};
    return names;
}

RunConfig parse_run_config(const Json& doc) {
    if (!doc.is_object()) throw ConfigError("config", "expected a JSON object");
    RunConfig cfg;

    if (!doc.contains("cartan_type")) throw ConfigError("cartan_type", "missing");
    {
        const Json& t = doc["cartan_type"];
        if (!t.is_string() || t.get<std::string>().size() != 1)
            throw ConfigError("cartan_type", "expected a one-letter string");
        cfg.cartan_type = t.get<std::string>()[0];
        if (cfg.cartan_type < 'A' || cfg.cartan_type > 'G')
            throw ConfigError("cartan_type", "expected a letter A through G");
    }

    if (!doc.contains("rank")) throw ConfigError("rank", "missing");
    cfg.rank = static_cast<int>(get_long(doc["rank"], "rank"));
    if (cfg.rank < 1 || cfg.rank > 8) throw ConfigError("rank", "expected a rank between 1 and 8");

    if (!doc.contains("n")) throw ConfigError("n", "missing");
    long n = get_long(doc["n"], "n");
    if (n < 1 || n > 4) throw ConfigError("n", "expected between 1 and 4 loop variables");
    cfg.n = static_cast<size_t>(n);

    if (!doc.contains("sigma")) throw ConfigError("sigma", "missing");
    {
        const Json& sj = doc["sigma"];
        if (!sj.is_array() || sj.size() != cfg.n)
            throw ConfigError("sigma", "expected one entry per loop variable");
        for (size_t i = 0; i < sj.size(); ++i) {
            const std::string field = index_field("sigma", i);
            const Json& e = sj[i];
            if (!e.is_object() || !e.contains("kind"))
                throw ConfigError(field, "expected {\"kind\": ...}");
            std::string kind = e["kind"].is_string() ? e["kind"].get<std::string>() : "";
            SigmaSpec spec;
            if (kind == "identity") {
                spec.diagram = false;
            } else if (kind == "diagram") {
                spec.diagram = true;
                if (!e.contains("perm") || !e["perm"].is_array() ||
                    e["perm"].size() != static_cast<size_t>(cfg.rank))
                    throw ConfigError(field + ".perm", "expected one node index per rank");
                std::set<long> seen;
                for (const Json& p : e["perm"]) {
                    long v = get_long(p, field + ".perm");
                    if (v < 0 || v >= cfg.rank || !seen.insert(v).second)
                        throw ConfigError(field + ".perm",
                                          "expected a permutation of 0.." +
                                              std::to_string(cfg.rank - 1));
                    spec.perm.push_back(static_cast<int>(v));
                }
            } else {
                throw ConfigError(field + ".kind", "expected \"identity\" or \"diagram\"");
            }
            cfg.sigma.push_back(std::move(spec));
        }
    }

    if (doc.contains("m")) {
        const Json& mj = doc["m"];
        if (!mj.is_array() || mj.size() != cfg.n)
            throw ConfigError("m", "expected one order per loop variable");
        for (size_t i = 0; i < mj.size(); ++i) {
            long v = get_long(mj[i], index_field("m", i));
            if (v < 1) throw ConfigError(index_field("m", i), "orders are positive");
            cfg.m.push_back(v);
        }
        cfg.has_m = true;
    }

    if (doc.contains("lambda")) {
        const Json& lj = doc["lambda"];
        if (!lj.is_array()) throw ConfigError("lambda", "expected a list of weight vectors");
        for (size_t i = 0; i < lj.size(); ++i) {
            const std::string field = index_field("lambda", i);
            const Json& w = lj[i];
            if (!w.is_array() || w.size() != static_cast<size_t>(cfg.rank))
                throw ConfigError(field, "expected one coordinate per rank");
            IntVec lam;
            for (const Json& c : w) {
                long v = get_long(c, field);
                if (v < 0) throw ConfigError(field, "dominant weights have nonnegative coordinates");
                lam.push_back(v);
            }
            cfg.lambdas.push_back(std::move(lam));
        }
    }

    if (doc.contains("b") != doc.contains("lambda"))
        throw ConfigError("b", "lambda and b must be given together");
    if (doc.contains("b")) {
        const Json& bj = doc["b"];
        if (!bj.is_array() || bj.size() != cfg.lambdas.size())
            throw ConfigError("b", "expected one point per highest weight");
        for (size_t i = 0; i < bj.size(); ++i) {
            const std::string field = index_field("b", i);
            const Json& p = bj[i];
            if (!p.is_array() || p.size() != cfg.n)
                throw ConfigError(field, "expected one coordinate per loop variable");
            std::vector<Cyc> point;
            for (size_t k = 0; k < p.size(); ++k) {
                Cyc c;
                try {
                    c = scalar_from_json(p[k]);
                } catch (const std::invalid_argument& e) {
                    throw ConfigError(field + "[" + std::to_string(k) + "]", e.what());
                }
                if (c.is_zero())
                    throw ConfigError(field + "[" + std::to_string(k) + "]",
                                      "evaluation points are nonzero");
                point.push_back(std::move(c));
            }
            cfg.points.push_back(std::move(point));
        }
    }

    if (doc.contains("alpha")) {
        const Json& aj = doc["alpha"];
        if (!aj.is_array() || aj.size() != cfg.n)
            throw ConfigError("alpha", "expected one scalar per loop variable");
        for (size_t i = 0; i < aj.size(); ++i) {
            try {
                cfg.alpha.push_back(scalar_from_json(aj[i]));
            } catch (const std::invalid_argument& e) {
                throw ConfigError(index_field("alpha", i), e.what());
            }
        }
    } else {
        cfg.alpha.assign(cfg.n, Cyc(0));
    }

    if (doc.contains("box")) {
        const Json& bj = doc["box"];
        if (!bj.is_array() || bj.size() != cfg.n)
            throw ConfigError("box", "expected one interval per loop variable");
        for (size_t i = 0; i < bj.size(); ++i) {
            const std::string field = index_field("box", i);
            const Json& iv = bj[i];
            if (!iv.is_array() || iv.size() != 2) throw ConfigError(field, "expected [lo, hi]");
            long lo = get_long(iv[0], field), hi = get_long(iv[1], field);
            if (lo > hi) throw ConfigError(field, "empty interval");
            cfg.box.emplace_back(lo, hi);
        }
    } else {
        cfg.box.assign(cfg.n, {-4, 4});
    }

    if (doc.contains("checks")) {
        const Json& cj = doc["checks"];
        if (!cj.is_array()) throw ConfigError("checks", "expected a list of check names");
        for (size_t i = 0; i < cj.size(); ++i) {
            if (!cj[i].is_string())
                throw ConfigError(index_field("checks", i), "expected a string");
            std::string name = cj[i].get<std::string>();
            const auto& known = known_checks();
            if (std::find(known.begin(), known.end(), name) == known.end()) {
                std::ostringstream os;
                os << "unknown check; expected one of";
                for (const std::string& k : known) os << " " << k;
                throw ConfigError(index_field("checks", i), os.str());
            }
            cfg.checks.push_back(std::move(name));
        }
    }

    if (doc.contains("out")) {
        if (!doc["out"].is_string()) throw ConfigError("out", "expected a directory path");
        cfg.out_dir = doc["out"].get<std::string>();
    }

    return cfg;
}

std::vector<Mat> config_sigmas(const RunConfig& cfg, const SimpleLieAlgebra& g) {
    std::vector<Mat> out;
    for (size_t i = 0; i < cfg.sigma.size(); ++i) {
        if (!cfg.sigma[i].diagram) {
            out.push_back(Mat::identity(g.dim()));
            continue;
        }
        try {
            out.push_back(diagram_automorphism(g, cfg.sigma[i].perm));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(index_field("sigma", i) + ".perm", e.what());
        }
    }
    return out;
}

void check_declared_orders(const RunConfig& cfg, const AutomorphismTuple& tuple) {
    if (!cfg.has_m) return;
    if (cfg.m != tuple.orders) {
        std::ostringstream os;
        os << "declared orders (";
        for (size_t i = 0; i < cfg.m.size(); ++i) os << (i ? "," : "") << cfg.m[i];
        os << ") but the automorphisms have orders (";
        for (size_t i = 0; i < tuple.orders.size(); ++i) os << (i ? "," : "") << tuple.orders[i];
        os << ")";
        throw ConfigError("m", os.str());
    }
}

PipelineInput config_pipeline_input(const RunConfig& cfg, const SimpleLieAlgebra& g) {
    PipelineInput in;
    in.g = &g;
    in.sigma = config_sigmas(cfg, g);
    in.lambdas = cfg.lambdas;
    in.points = cfg.points;
    in.alpha = cfg.alpha;
    in.box = cfg.box;
    return in;
}

}  // namespace lt
