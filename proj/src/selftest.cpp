#include "lt/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "lt/loopmod.hpp"

namespace lt {

namespace {

// One row of the verification matrix with its frozen oracle values.
struct Instance {
    const char* name;
    const char* summary;
    char type;
    int rank;
    size_t nvars;
    std::vector<std::vector<int>> perms;    // one per variable; empty = identity
    std::vector<IntVec> lambdas;
    std::vector<std::vector<long>> points;  // integer coordinates
    std::vector<std::pair<long, long>> alpha;
    std::vector<std::pair<long, long>> box;

    std::vector<size_t> piece_dims;
    size_t module_dim;
    long lattice_index;
    size_t component_count;
};

const std::vector<Instance>& instance_table() {
    static const std::vector<Instance> table = {
        {"a1-untwisted",
         "A1 untwisted, one variable, two opposite points",
         'A', 1, 1,
         {{}},
         {{1}, {1}},
         {{1}, {-1}},
         {{1, 2}},
         {{-4, 4}},
         {3}, 4, 2, 2},
        {"a2-untwisted",
         "A2 untwisted, two variables, one point",
         'A', 2, 2,
         {{}, {}},
         {{1, 0}},
         {{1, 1}},
         {{0, 1}, {0, 1}},
         {{-1, 1}, {-1, 1}},
         {8}, 3, 1, 1},
        {"a2-twisted",
         "A2 with the order-2 diagram swap",
         'A', 2, 1,
         {{1, 0}},
         {{1, 0}},
         {{1}},
         {{0, 1}},
         {{-4, 4}},
         {3, 5}, 3, 2, 1},
        {"d4-twisted",
         "D4 with the order-3 triality",
         'D', 4, 1,
         {{2, 1, 3, 0}},
         {{1, 0, 0, 0}},
         {{1}},
         {{0, 1}},
         {{-3, 3}},
         {14, 7, 7}, 8, 3, 1},
        {"a3-twisted",
         "A3 with the order-2 diagram flip",
         'A', 3, 1,
         {{2, 1, 0}},
         {{1, 0, 0}},
         {{1}},
         {{0, 1}},
         {{-3, 3}},
         {10, 5}, 4, 2, 1},
    };
    return table;
}

IntVec vadd(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec vneg(const IntVec& a) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

std::string join_longs(const std::vector<long>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

std::string join_sizes(const std::vector<size_t>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

struct Log {
    std::ostringstream os;
    size_t passed = 0;
    size_t failed = 0;

    void record(const char* name, bool ok, const std::string& detail = "") {
        os << (ok ? "  pass  " : "  FAIL  ") << name;
        if (!detail.empty()) os << " (" << detail << ")";
        os << "\n";
        ++(ok ? passed : failed);
    }
};

// Strided deterministic sample of a graded piece basis: at most three
// vectors once the piece outgrows desk size, so the triple loops below stay
// proportionate while still touching every piece.
std::vector<size_t> piece_sample(const std::vector<Vec>& basis) {
    size_t step = basis.size() <= 5 ? 1 : (basis.size() + 2) / 3;
    std::vector<size_t> idx;
    for (size_t i = 0; i < basis.size(); i += step) idx.push_back(i);
    return idx;
}

// Jacobi identity over the extended loop algebra on graded triples. Loop
// coefficients do not depend on the representative degree, so class triples
// with (a) the class representatives, (b) representatives shifted by the
// twist orders, and (c) a third degree forced to -(r+s) cover the plain and
// the cocycle-bearing cases; derivation triples pin the degree bookkeeping.
void jacobi_property(const MultiloopTorus& lt, Log& log) {
    const auto& classes = lt.grading.classes;
    IntVec m(lt.orders.begin(), lt.orders.end());
    size_t triples = 0;
    std::string witness;

    auto check = [&](const TorusElement& a, const TorusElement& b, const TorusElement& c,
                     const char* where) {
        TorusElement j = bracket(lt, bracket(lt, a, b), c) +
                         bracket(lt, bracket(lt, b, c), a) +
                         bracket(lt, bracket(lt, c, a), b);
        ++triples;
        if (!element_is_zero(j) && witness.empty()) witness = where;
    };

    std::vector<std::vector<size_t>> samples;
    for (const auto& basis : lt.grading.piece_basis) samples.push_back(piece_sample(basis));

    for (size_t ca = 0; ca < classes.size(); ++ca)
        for (size_t cb = 0; cb < classes.size(); ++cb) {
            IntVec r = vadd(classes[ca], m);
            IntVec s = classes[cb];
            for (size_t cc = 0; cc < classes.size(); ++cc) {
                IntVec u = classes[cc];
                IntVec sm = vadd(s, vneg(m));
                for (size_t x : samples[ca])
                    for (size_t y : samples[cb])
                        for (size_t z : samples[cc]) {
                            TorusElement ax =
                                loop_element(lt, lt.grading.piece_basis[ca][x], classes[ca]);
                            TorusElement by =
                                loop_element(lt, lt.grading.piece_basis[cb][y], s);
                            TorusElement cz =
                                loop_element(lt, lt.grading.piece_basis[cc][z], u);
                            check(ax, by, cz, "representative degrees");
                            TorusElement ax2 =
                                loop_element(lt, lt.grading.piece_basis[ca][x], r);
                            TorusElement by2 =
                                loop_element(lt, lt.grading.piece_basis[cb][y], sm);
                            check(ax2, by2, cz, "shifted degrees");
                        }
            }
            // third degree forced to close the triple: every cyclic bracket
            // lands at degree zero and the central terms must cancel
            IntVec s2 = vadd(classes[cb], m);
            IntVec u = vneg(vadd(r, s2));
            size_t cu = lt.grading.class_index(u);
            for (size_t x : samples[ca])
                for (size_t y : samples[cb])
                    for (size_t z : samples[cu])
                        check(loop_element(lt, lt.grading.piece_basis[ca][x], r),
                              loop_element(lt, lt.grading.piece_basis[cb][y], s2),
                              loop_element(lt, lt.grading.piece_basis[cu][z], u),
                              "closing degrees");
        }

    for (size_t ca = 0; ca < classes.size(); ++ca) {
        IntVec r = vadd(classes[ca], m);
        size_t copp = lt.grading.class_index(vneg(r));
        for (size_t x : samples[ca])
            for (size_t y : samples[copp])
                for (size_t i = 0; i < lt.nvars; ++i)
                    check(derivation_element(lt, i),
                          loop_element(lt, lt.grading.piece_basis[ca][x], r),
                          loop_element(lt, lt.grading.piece_basis[copp][y], vneg(r)),
                          "derivation against an opposite pair");
    }

    log.record("jacobi identity on graded triples", witness.empty(),
               witness.empty() ? std::to_string(triples) + " triples"
                               : "violated at " + witness);
}

// Opposite-degree brackets against the invariant form: the central part of
// [x t^r, y t^-r] must be (x|y) sum_i r_i K_i, and the pair must be
// antisymmetric including that central part.
void cocycle_property(const MultiloopTorus& lt, const SimpleLieAlgebra& g, Log& log) {
    const auto& classes = lt.grading.classes;
    IntVec m(lt.orders.begin(), lt.orders.end());
    IntVec zero(lt.nvars, 0);
    size_t pairs = 0;
    std::string why;

    for (size_t ci = 0; ci < classes.size() && why.empty(); ++ci) {
        IntVec r = vadd(classes[ci], m);
        IntVec nr = vneg(r);
        size_t cj = lt.grading.class_index(nr);
        const auto& ba = lt.grading.piece_basis[ci];
        const auto& bb = lt.grading.piece_basis[cj];

        const Vec* x = nullptr;
        const Vec* y = nullptr;
        for (const Vec& u : ba) {
            for (const Vec& v : bb)
                if (!g.form(u, v).is_zero()) {
                    x = &u;
                    y = &v;
                    break;
                }
            if (x) break;
        }
        if (!x) {
            why = "no form pairing between opposite pieces of class " +
                  join_longs(classes[ci]);
            break;
        }

        TorusElement got = bracket(lt, loop_element(lt, *x, r), loop_element(lt, *y, nr));
        TorusElement expect;
        Vec xy = g.bracket(*x, *y);
        if (!vec_is_zero(xy)) expect = expect + loop_element(lt, xy, zero);
        Cyc f = g.form(*x, *y);
        for (size_t i = 0; i < lt.nvars; ++i)
            expect = expect + (f * Cyc(r[i])) * central_element(lt, zero, i);
        if (!(got == expect)) {
            why = "central part off at degree " + join_longs(r);
            break;
        }
        TorusElement back = bracket(lt, loop_element(lt, *y, nr), loop_element(lt, *x, r));
        if (!element_is_zero(got + back)) {
            why = "antisymmetry fails at degree " + join_longs(r);
            break;
        }
        ++pairs;
    }

    log.record("cocycle pairing and antisymmetry", why.empty(),
               why.empty() ? std::to_string(pairs) + " opposite pairs" : why);
}

void run_instance(const Instance& inst, Log& log) {
    log.os << "instance " << inst.name << ": " << inst.summary << "\n";

    SimpleLieAlgebra g = build_simple_lie_algebra(inst.type, inst.rank);
    std::vector<Mat> sigmas;
    for (const auto& perm : inst.perms)
        sigmas.push_back(perm.empty() ? Mat::identity(g.dim()) : diagram_automorphism(g, perm));
    AutomorphismTuple tuple = make_automorphism_tuple(g, sigmas);

    LieTorusReport gate = check_lie_torus(g, tuple);
    log.record("lie torus axioms", gate.ok, gate.ok ? "" : gate.detail);

    MultiloopTorus lt(g, tuple);
    std::vector<size_t> dims;
    for (const auto& basis : lt.grading.piece_basis) dims.push_back(basis.size());
    log.record("graded piece dimensions", dims == inst.piece_dims, join_sizes(dims));

    jacobi_property(lt, log);
    cocycle_property(lt, g, log);

    std::vector<std::vector<Cyc>> points;
    for (const auto& p : inst.points) {
        std::vector<Cyc> b;
        for (long c : p) b.push_back(Cyc(c));
        points.push_back(std::move(b));
    }
    EvalModule mod = build_eval_module(lt, inst.lambdas, points);
    log.record("module dimension", mod.dim == inst.module_dim, std::to_string(mod.dim));

    IrreducibilityReport irr = check_irreducible(mod);
    log.record("module irreducibility matches point separation", irr.matches_separation,
               irr.matches_separation ? "" : irr.detail);

    IntegrabilityReport intg = check_integrable(mod);
    log.record("module integrability", intg.integrable, intg.integrable ? "" : intg.detail);

    std::vector<Cyc> alpha;
    for (const auto& [num, den] : inst.alpha) alpha.push_back(Cyc(rat(num, den)));
    std::vector<std::pair<long, long>> box(inst.box.begin(), inst.box.end());
    LoopModuleWindow w = build_loop_window(mod, alpha, box);

    ComponentReport rep = decompose(w);
    bool lattice_ok = rep.lattice.certified && rep.lattice.s.full_rank() &&
                      rep.lattice.s.index() == inst.lattice_index;
    log.record("component lattice index", lattice_ok,
               rep.lattice.s.full_rank()
                   ? "index " + std::to_string(rep.lattice.s.index()) +
                         (rep.lattice.certified ? ", certified" : ", uncertified")
                   : "rank deficient");

    std::string bad;
    auto need = [&](bool ok, const char* what) {
        if (!ok) bad += std::string(bad.empty() ? "" : ", ") + what;
    };
    need(rep.components.size() == inst.component_count, "component count");
    need(rep.components.size() <= static_cast<size_t>(inst.lattice_index),
         "count above lattice index");
    need(rep.generators_complete, "generator spans not closed");
    need(rep.partitioned, "interior not partitioned");
    need(rep.slices_stable, "slices leak");
    need(rep.profiles_translate, "dimension profiles");
    need(rep.components_integrable, "component integrability");
    for (const auto& [a, b, shift, ok] : rep.shift_matches) need(ok, "grade shift pair");
    need(rep.interior_irreducible == Verdict::Pass, "interior irreducibility");
    log.record("decomposition certificates", bad.empty(),
               bad.empty() ? std::to_string(rep.components.size()) + " components, radius " +
                                 std::to_string(rep.gen_radius)
                           : bad);

    CentralReport central = check_central_trivial(w);
    log.record("central action triviality", central.central_zero && central.homomorphism_ok,
               central.detail.empty() ? std::to_string(central.pairs_checked) + " bracket pairs"
                                      : central.detail);

    WindowWeightReport ww = check_window_weights(w);
    bool wok = ww.weyl_symmetric && ww.integral_pairings && ww.weights_checked > 0;
    log.record("window weights Weyl-invariant", wok,
               wok ? std::to_string(ww.weights_checked) + " weights" : ww.detail);
}

// Corrupts one structure constant of a copied bracket table and scans basis
// triples for the resulting Jacobi violation.
void run_fault_injection(Log& log) {
    SimpleLieAlgebra g = build_simple_lie_algebra('A', 2);
    BracketTable tbl = BracketTable::from(g);

    size_t ci = 0, cj = 0;
    bool found = false;
    for (size_t i = 0; i < tbl.dim && !found; ++i)
        for (size_t j = 0; j < tbl.dim && !found; ++j)
            if (i != j && !tbl.t[i][j].empty()) {
                ci = i;
                cj = j;
                found = true;
            }
    tbl.t[ci][cj][0].second = tbl.t[ci][cj][0].second + Cyc(1);
    log.os << "fault injection: corrupted [" << g.basis_label(ci) << ", " << g.basis_label(cj)
           << "] in the A2 table\n";

    auto unit = [&](size_t i) {
        Vec v(tbl.dim, Cyc(0));
        v[i] = Cyc(1);
        return v;
    };
    auto vsum3 = [&](const Vec& a, const Vec& b, const Vec& c) {
        Vec r(a.size());
        for (size_t q = 0; q < a.size(); ++q) r[q] = a[q] + b[q] + c[q];
        return r;
    };

    std::string witness;
    for (size_t i = 0; i < tbl.dim && witness.empty(); ++i)
        for (size_t j = 0; j < tbl.dim && witness.empty(); ++j)
            for (size_t k = 0; k < tbl.dim && witness.empty(); ++k) {
                Vec jac = vsum3(tbl.bracket(tbl.bracket(unit(i), unit(j)), unit(k)),
                                tbl.bracket(tbl.bracket(unit(j), unit(k)), unit(i)),
                                tbl.bracket(tbl.bracket(unit(k), unit(i)), unit(j)));
                if (!vec_is_zero(jac))
                    witness = "(" + g.basis_label(i) + ", " + g.basis_label(j) + ", " +
                              g.basis_label(k) + ")";
            }

    log.record("jacobi identity on the corrupted table", false,
               witness.empty() ? "corruption escaped the basis triple scan"
                               : "violated at basis triple " + witness);
}

}  // namespace

const std::vector<std::string>& selftest_instances() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const Instance& inst : instance_table()) out.push_back(inst.name);
        return out;
    }();
    return names;
}

SelftestResult run_selftest(const SelftestOptions& opt) {
    Log log;
    SelftestResult result;

    if (opt.inject_fault) {
        run_fault_injection(log);
    } else {
        bool any = false;
        for (const Instance& inst : instance_table()) {
            if (!opt.only.empty() &&
                std::find(opt.only.begin(), opt.only.end(), inst.name) == opt.only.end())
                continue;
            any = true;
            run_instance(inst, log);
        }
        if (!any) {
            log.os << "warning: no instances selected\n";
            result.vacuous = true;
        }
    }

    size_t total = log.passed + log.failed;
    if (result.vacuous)
        log.os << "selftest: vacuous pass (0 properties)\n";
    else if (log.failed == 0)
        log.os << "selftest: all " << total << " properties pass\n";
    else
        log.os << "selftest: " << log.failed << " of " << total << " properties FAIL\n";

    result.report = log.os.str();
    result.all_pass = log.failed == 0;
    return result;
}

}  // namespace lt
