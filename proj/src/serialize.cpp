#include "lt/serialize.hpp"

#include <sstream>

namespace lt {

namespace {

std::string deg_key(const IntVec& k) {
    std::string s;
    for (size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k[i]);
    }
    return s;
}

Json intvec_to_json(const IntVec& v) {
    Json a = Json::array();
    for (long x : v) a.push_back(x);
    return a;
}

IntVec intvec_from_json(const Json& j, const char* field) {
    if (!j.is_array()) throw std::invalid_argument(std::string(field) + ": expected an array");
    IntVec v;
    for (const Json& x : j) {
        if (!x.is_number_integer())
            throw std::invalid_argument(std::string(field) + ": expected integers");
        v.push_back(x.get<long>());
    }
    return v;
}

Json sparse_matrix_json(const Mat& m) {
    Json a = Json::array();
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) a.push_back(Json::array({i, j, cyc_to_json(m.at(i, j))}));
    return a;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass:
            return "pass";
        case Verdict::Fail:
            return "fail";
        default:
            return "inconclusive";
    }
}

}  // namespace

Json cyc_to_json(const Cyc& c) {
    Json j;
    j["N"] = c.conductor();
    Json coeffs = Json::array();
    for (const Rat& r : c.coeffs())
        coeffs.push_back(Json::array({r.get_num().get_str(), r.get_den().get_str()}));
    j["coeffs"] = coeffs;
    return j;
}

Cyc cyc_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("N") || !j.contains("coeffs"))
        throw std::invalid_argument("scalar: expected {\"N\", \"coeffs\"}");
    if (!j["N"].is_number_integer() || j["N"].get<long>() <= 0)
        throw std::invalid_argument("scalar: N must be a positive integer");
    unsigned n = j["N"].get<unsigned>();
    const Json& cs = j["coeffs"];
    if (!cs.is_array() || cs.size() != euler_phi(n))
        throw std::invalid_argument("scalar: expected phi(N) coefficient pairs");
    std::vector<Rat> coeffs;
    for (const Json& e : cs) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw std::invalid_argument("scalar: coefficients are [\"num\",\"den\"] string pairs");
        mpz_class num, den;
        try {
            num = mpz_class(e[0].get<std::string>());
            den = mpz_class(e[1].get<std::string>());
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("scalar: malformed decimal string");
        }
        if (den == 0) throw std::invalid_argument("scalar: zero denominator");
        Rat r(num, den);
        r.canonicalize();
        coeffs.push_back(r);
    }
    return Cyc(CycField::get(n), std::move(coeffs));
}

Cyc scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Cyc(j.get<long>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        size_t slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                Rat r{mpz_class(s)};
                return Cyc(r);
            }
            mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator");
            Rat r(num, den);
            r.canonicalize();
            return Cyc(r);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("scalar: malformed rational string \"" + s + "\"");
        }
    }
    return cyc_from_json(j);
}

Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (const Cyc& c : v) a.push_back(cyc_to_json(c));
    return a;
}

Json algebra_to_json(const SimpleLieAlgebra& g) {
    Json j;
    j["type"] = std::string(1, g.type());
    j["rank"] = g.rank();
    j["dim"] = g.dim();
    Json structure = Json::array();
    for (size_t x = 0; x < g.dim(); ++x)
        for (size_t y = 0; y < g.dim(); ++y) {
            const SparseVec& b = g.bracket_basis(x, y);
            if (b.empty()) continue;
            Json terms = Json::array();
            for (const auto& [k, c] : b) terms.push_back(Json::array({k, cyc_to_json(c)}));
            structure.push_back(Json::array({x, y, terms}));
        }
    j["structure"] = structure;
    Json form = Json::array();
    for (size_t i = 0; i < g.dim(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < g.dim(); ++k) row.push_back(cyc_to_json(g.form_matrix().at(i, k)));
        form.push_back(row);
    }
    j["form"] = form;
    return j;
}

Json torus_to_json(const MultiloopTorus& lt) {
    Json j;
    j["n"] = lt.nvars;
    j["orders"] = intvec_to_json(IntVec(lt.orders.begin(), lt.orders.end()));
    j["gamma"] = Json{{"diagonal", intvec_to_json(IntVec(lt.orders.begin(), lt.orders.end()))}};
    Json classes = Json::array();
    Json dims = Json::array();
    for (size_t c = 0; c < lt.grading.classes.size(); ++c) {
        classes.push_back(intvec_to_json(lt.grading.classes[c]));
        dims.push_back(lt.grading.piece_basis[c].size());
    }
    j["classes"] = classes;
    j["piece_dims"] = dims;
    j["fixed_cartan_dim"] = lt.grading.h0.size();
    return j;
}

Json torus_element_to_json(const TorusElement& a) {
    Json j;
    Json loop = Json::array();
    for (const auto& [deg, vec] : a.loop) {
        Json term;
        term["deg"] = intvec_to_json(deg);
        term["vec"] = vec_to_json(vec);
        loop.push_back(term);
    }
    j["loop"] = loop;
    Json central = Json::array();
    for (const auto& [deg, cs] : a.central.terms)
        for (size_t i = 0; i < cs.size(); ++i) {
            if (cs[i].is_zero()) continue;
            Json term;
            term["deg"] = intvec_to_json(deg);
            term["i"] = i;
            term["c"] = cyc_to_json(cs[i]);
            central.push_back(term);
        }
    j["central"] = central;
    Json der = Json::array();
    for (const Cyc& c : a.der) der.push_back(cyc_to_json(c));
    j["der"] = der;
    return j;
}

TorusElement torus_element_from_json(const MultiloopTorus& lt, const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("element: expected an object");
    TorusElement a;
    if (j.contains("loop")) {
        for (const Json& term : j["loop"]) {
            IntVec deg = intvec_from_json(term.at("deg"), "element.loop.deg");
            const Json& vj = term.at("vec");
            if (!vj.is_array()) throw std::invalid_argument("element.loop.vec: expected an array");
            Vec v;
            for (const Json& c : vj) v.push_back(cyc_from_json(c));
            a = a + loop_element(lt, v, deg);
        }
    }
    if (j.contains("central")) {
        for (const Json& term : j["central"]) {
            IntVec deg = intvec_from_json(term.at("deg"), "element.central.deg");
            size_t i = term.at("i").get<size_t>();
            Cyc c = cyc_from_json(term.at("c"));
            a = a + c * central_element(lt, deg, i);
        }
    }
    if (j.contains("der")) {
        const Json& dj = j["der"];
        if (!dj.is_array()) throw std::invalid_argument("element.der: expected an array");
        size_t i = 0;
        for (const Json& c : dj) {
            if (i >= lt.nvars) throw std::invalid_argument("element.der: too many entries");
            a = a + cyc_from_json(c) * derivation_element(lt, i);
            ++i;
        }
    }
    return a;
}

Json generator_rep_to_json(const GeneratorRep& rep) {
    Json j;
    j["lambda"] = intvec_to_json(rep.lambda);
    j["dim"] = rep.dim;
    Json labels = Json::array();
    for (size_t v = 0; v < rep.dim; ++v) labels.push_back("");
    for (const auto& [descent, idxs] : rep.weight_spaces)
        for (size_t v : idxs) labels[v] = "k=(" + deg_key(descent) + ")";
    j["basis_labels"] = labels;
    Json weights = Json::array();
    for (const IntVec& w : rep.weights) weights.push_back(intvec_to_json(w));
    j["weights"] = weights;
    Json actions = Json::object();
    for (auto [name, mats] : {std::pair<const char*, const std::vector<Mat>*>{"e", &rep.e},
                              {"f", &rep.f},
                              {"h", &rep.h}}) {
        Json list = Json::array();
        for (const Mat& m : *mats) list.push_back(sparse_matrix_json(m));
        actions[name] = list;
    }
    j["actions"] = actions;
    return j;
}

std::string weight_table_text(const GeneratorRep& rep) {
    std::map<IntVec, size_t> counts;
    for (const IntVec& w : rep.weights) ++counts[w];
    std::ostringstream os;
    os << "weight (omega coordinates) | multiplicity\n";
    for (const auto& [w, c] : counts) os << "(" << deg_key(w) << ") | " << c << "\n";
    return os.str();
}

Json component_report_to_json(const ComponentReport& rep) {
    Json j;
    Json lattice;
    Json hnf = Json::array();
    for (const IntVec& row : rep.lattice.s.hnf()) hnf.push_back(intvec_to_json(row));
    lattice["hnf"] = hnf;
    if (rep.lattice.s.full_rank())
        lattice["index"] = rep.lattice.s.index();
    else
        lattice["index"] = nullptr;
    lattice["certified"] = rep.lattice.certified;
    lattice["trivial"] = rep.lattice.trivial;
    lattice["detail"] = rep.lattice.detail;
    j["lattice"] = lattice;

    Json comps = Json::array();
    for (const Component& c : rep.components) {
        Json cj;
        cj["rep"] = intvec_to_json(c.rep);
        Json dims = Json::object();
        for (const auto& [deg, sl] : c.slices) dims[deg_key(deg)] = sl.dim();
        cj["dims"] = dims;
        comps.push_back(cj);
    }
    j["components"] = comps;

    Json pairs = Json::array();
    for (const auto& [a, b, shift, ok] : rep.shift_matches) {
        Json pj;
        pj["a"] = a;
        pj["b"] = b;
        pj["shift"] = intvec_to_json(shift);
        pj["match"] = ok;
        pairs.push_back(pj);
    }
    j["grade_shift_pairs"] = pairs;

    Json v;
    v["gen_radius"] = rep.gen_radius;
    v["generators_complete"] = rep.generators_complete;
    v["count_matches_index"] = rep.count_matches_index;
    v["partitioned"] = rep.partitioned;
    v["profiles_translate"] = rep.profiles_translate;
    v["slices_stable"] = rep.slices_stable;
    v["components_integrable"] = rep.components_integrable;
    v["interior_irreducible"] = verdict_name(rep.interior_irreducible);
    v["detail"] = rep.detail;
    j["verdicts"] = v;
    return j;
}

std::string component_report_text(const ComponentReport& rep) {
    std::ostringstream os;
    os << "component lattice: ";
    if (rep.lattice.trivial)
        os << "trivial highest weight";
    else if (rep.lattice.s.full_rank())
        os << "index " << rep.lattice.s.index();
    else
        os << "rank " << rep.lattice.s.rank() << " (deficient)";
    os << (rep.lattice.certified ? ", certified" : ", uncertified") << "\n";
    os << "components: " << rep.components.size() << " (generator radius " << rep.gen_radius
       << ")\n";
    for (size_t i = 0; i < rep.components.size(); ++i) {
        const Component& c = rep.components[i];
        os << "  [" << i << "] seed degree (" << deg_key(c.rep) << "), slice dims:";
        for (const auto& [deg, sl] : c.slices) os << " (" << deg_key(deg) << ")->" << sl.dim();
        os << "\n";
    }
    for (const auto& [a, b, shift, ok] : rep.shift_matches)
        os << "  grade shift [" << a << "] -> [" << b << "] by (" << deg_key(shift) << "): "
           << (ok ? "isomorphic" : "mismatch") << "\n";
    os << "count matches lattice index: " << (rep.count_matches_index ? "yes" : "no") << "\n";
    os << "interior partition: " << (rep.partitioned ? "yes" : "no") << "\n";
    os << "slices stable: " << (rep.slices_stable ? "yes" : "no") << "\n";
    os << "profiles translate: " << (rep.profiles_translate ? "yes" : "no") << "\n";
    os << "components integrable: " << (rep.components_integrable ? "yes" : "no") << "\n";
    os << "interior irreducibility: " << verdict_name(rep.interior_irreducible) << "\n";
    if (!rep.detail.empty()) os << "detail: " << rep.detail << "\n";
    return os.str();
}

Json classification_to_json(const ClassificationReport& rep) {
    Json j;
    Json stages = Json::array();
    for (const StageResult& s : rep.stages) {
        Json sj;
        sj["stage"] = s.stage;
        sj["ok"] = s.ok;
        sj["detail"] = s.detail;
        stages.push_back(sj);
    }
    j["stages"] = stages;
    j["decomposition"] = component_report_to_json(rep.decomposition);
    j["all_pass"] = rep.all_pass;
    return j;
}

std::string classification_text(const ClassificationReport& rep) {
    std::ostringstream os;
    for (const StageResult& s : rep.stages)
        os << (s.ok ? "pass" : "FAIL") << "  " << s.stage << ": " << s.detail << "\n";
    os << "\n" << component_report_text(rep.decomposition);
    os << "\noverall: " << (rep.all_pass ? "pass" : "FAIL") << "\n";
    return os.str();
}

}  // namespace lt
