#include "lt/loopmod.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace lt {

namespace {

IntVec add_deg(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec sub_deg(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

std::string deg_str(const IntVec& k) {
    std::string s = "(";
    for (size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k[i]);
    }
    return s + ")";
}

// All integer vectors of the box, last axis fastest.
std::vector<IntVec> box_degrees(const std::vector<std::pair<long, long>>& box) {
    std::vector<IntVec> out;
    IntVec v(box.size());
    for (size_t i = 0; i < box.size(); ++i) v[i] = box[i].first;
    for (;;) {
        out.push_back(v);
        size_t ax = box.size();
        bool done = true;
        while (ax-- > 0) {
            if (v[ax] < box[ax].second) {
                ++v[ax];
                for (size_t j = ax + 1; j < box.size(); ++j) v[j] = box[j].first;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return out;
}

std::string weight_key(const Vec& w) {
    std::string key;
    for (const Cyc& c : w) {
        key += c.str();
        key += '|';
    }
    return key;
}

}  // namespace

bool LoopModuleWindow::contains_degree(const IntVec& s) const {
    if (s.size() != box.size()) throw std::invalid_argument("degree length mismatch");
    for (size_t i = 0; i < box.size(); ++i)
        if (s[i] < box[i].first || s[i] > box[i].second) return false;
    return true;
}

size_t LoopModuleWindow::degree_index(const IntVec& s) const {
    if (!contains_degree(s)) throw std::invalid_argument("degree outside the window");
    size_t idx = 0;
    for (size_t i = 0; i < box.size(); ++i)
        idx = idx * static_cast<size_t>(box[i].second - box[i].first + 1) +
              static_cast<size_t>(s[i] - box[i].first);
    return idx;
}

Cyc LoopModuleWindow::d_eigenvalue(size_t i, const IntVec& s) const {
    return alpha.at(i) + Cyc(s.at(i));
}

LoopModuleWindow build_loop_window(const EvalModule& base, std::vector<Cyc> alpha,
                                   std::vector<std::pair<long, long>> box) {
    const size_t n = base.lt->nvars;
    if (alpha.size() != n) throw std::invalid_argument("shift vector length mismatch");
    if (box.size() != n) throw std::invalid_argument("box dimension mismatch");
    for (const auto& [lo, hi] : box)
        if (lo > hi) throw std::invalid_argument("empty window box");
    LoopModuleWindow w;
    w.base = &base;
    w.alpha = std::move(alpha);
    w.box = std::move(box);
    w.degrees = box_degrees(w.box);
    return w;
}

Mat window_operator(const LoopModuleWindow& w, const TorusElement& a) {
    const EvalModule& m = *w.base;
    const size_t d = m.dim;
    Mat out(w.dim(), w.dim());
    for (const auto& [k, x] : a.loop) {
        Mat act = eval_action(m, x, k);
        for (size_t si = 0; si < w.degrees.size(); ++si) {
            IntVec t = add_deg(w.degrees[si], k);
            if (!w.contains_degree(t)) continue;
            size_t ti = w.degree_index(t);
            for (size_t p = 0; p < d; ++p)
                for (size_t q = 0; q < d; ++q)
                    if (!act.at(p, q).is_zero()) out.at(w.rank(ti, p), w.rank(si, q)) += act.at(p, q);
        }
    }
    for (size_t i = 0; i < a.der.size(); ++i) {
        if (a.der[i].is_zero()) continue;
        for (size_t si = 0; si < w.degrees.size(); ++si) {
            Cyc ev = a.der[i] * w.d_eigenvalue(i, w.degrees[si]);
            for (size_t v = 0; v < d; ++v) out.at(w.rank(si, v), w.rank(si, v)) += ev;
        }
    }
    return out;
}

ComponentLattice component_lattice(const EvalModule& base) {
    const MultiloopTorus& lt = *base.lt;
    const size_t n = lt.nvars;
    const size_t k = base.factor_count();
    ComponentLattice out;

    bool all_zero = true;
    for (const EvalFactor& f : base.factors)
        for (long c : f.lambda) all_zero = all_zero && c == 0;
    if (all_zero) {
        out.s = IntLattice(n, {});
        out.trivial = true;
        out.certified = true;
        out.detail = "every factor has zero highest weight; the module is a trivial line per degree";
        return out;
    }

    // lam[i][j] = value of factor i's highest weight on the fixed Cartan
    // basis vector h0_j, read off the (0,0) entry of the slot matrix
    const size_t h0n = lt.grading.h0.size();
    std::vector<std::vector<Cyc>> lam(k, std::vector<Cyc>(h0n));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < h0n; ++j) {
            const Vec& h = lt.grading.h0[j];
            Cyc v(0);
            for (size_t c = 0; c < h.size(); ++c)
                if (!h[c].is_zero()) v += h[c] * base.factors[i].action[c].at(0, 0);
            lam[i][j] = v;
        }

    // (h t^r) v+ = sum_i lambda_i(h) tw_i^a v+ at r_j = m_j a_j
    auto phi_nonzero = [&](const IntVec& a) {
        for (size_t j = 0; j < h0n; ++j) {
            Cyc v(0);
            for (size_t i = 0; i < k; ++i)
                v += lam[i][j] * point_power(base.factors[i].twisted_point, a);
            if (!v.is_zero()) return true;
        }
        return false;
    };
    auto scale_to_gamma = [&](const IntVec& a) {
        IntVec r(n);
        for (size_t j = 0; j < n; ++j) r[j] = lt.orders[j] * a[j];
        return r;
    };

    // the nonzero pattern of a is periodic when all twisted-point ratios are
    // roots of unity
    bool periodic = true;
    std::vector<long> period(n, 1);
    for (size_t i = 1; i < k && periodic; ++i)
        for (size_t j = 0; j < n; ++j) {
            Cyc u = base.factors[i].twisted_point[j] * base.factors[0].twisted_point[j].pow(-1);
            if (!u.is_root_of_unity()) {
                periodic = false;
                break;
            }
            period[j] = std::lcm(period[j], u.order());
        }

    if (periodic) {
        std::vector<std::pair<long, long>> pbox(n);
        for (size_t j = 0; j < n; ++j) pbox[j] = {0, period[j] - 1};
        std::vector<IntVec> gens;
        for (const IntVec& a : box_degrees(pbox))
            if (phi_nonzero(a)) gens.push_back(scale_to_gamma(a));
        for (size_t j = 0; j < n; ++j) {
            IntVec e(n, 0);
            e[j] = lt.orders[j] * period[j];
            gens.push_back(e);
        }
        out.s = IntLattice(n, gens);
        out.certified = true;
        std::ostringstream os;
        os << "periodic nonzero pattern; per-axis periods";
        for (long p : period) os << " " << p;
        out.detail = os.str();
        return out;
    }

    // some ratio has infinite order: stabilize the generated lattice over
    // growing boxes; the result is not certified
    IntLattice prev(n, {});
    for (long t = 1; t <= 64; t *= 2) {
        std::vector<std::pair<long, long>> tbox(n, {-t, t});
        std::vector<IntVec> gens;
        for (const IntVec& a : box_degrees(tbox))
            if (phi_nonzero(a)) gens.push_back(scale_to_gamma(a));
        IntLattice cur(n, gens);
        if (t > 1 && cur == prev) {
            out.s = cur;
            out.certified = false;
            out.detail = "aperiodic twisted-point ratios; lattice stabilized at box radius " +
                         std::to_string(t / 2);
            return out;
        }
        prev = cur;
    }
    out.s = prev;
    out.certified = false;
    out.detail = "aperiodic twisted-point ratios; lattice did not stabilize within radius 64";
    return out;
}

size_t Component::slice_dim(const IntVec& s) const {
    auto it = slices.find(s);
    return it == slices.end() ? 0 : it->second.dim();
}

namespace {

using WindowGens = std::vector<std::pair<IntVec, Mat>>;

WindowGens window_generators(const EvalModule& base, long radius) {
    const MultiloopTorus& lt = *base.lt;
    WindowGens gens;
    std::vector<std::pair<long, long>> rbox(lt.nvars, {-radius, radius});
    for (const IntVec& r : box_degrees(rbox))
        for (const Vec& x : lt.grading.piece_basis[lt.grading.class_index(r)])
            gens.emplace_back(r, eval_action(base, x, r));
    return gens;
}

Component closure_from(const LoopModuleWindow& w, const WindowGens& gens, const IntVec& rep,
                       const Vec& seed) {
    const size_t d = w.base->dim;
    Component c;
    c.rep = rep;
    std::deque<std::pair<IntVec, Vec>> work;
    auto insert = [&](const IntVec& s, Vec v) {
        auto it = c.slices.find(s);
        if (it == c.slices.end()) it = c.slices.emplace(s, Subspace(d)).first;
        if (it->second.insert(v)) work.emplace_back(s, std::move(v));
    };
    insert(rep, seed);
    while (!work.empty()) {
        auto [s, v] = std::move(work.front());
        work.pop_front();
        for (const auto& [r, a] : gens) {
            IntVec t = add_deg(s, r);
            if (!w.contains_degree(t)) continue;
            Vec u = a.apply(v);
            if (!vec_is_zero(u)) insert(t, std::move(u));
        }
    }
    return c;
}

bool slices_overlap(const Component& a, const Component& b) {
    for (const auto& [s, sa] : a.slices) {
        auto it = b.slices.find(s);
        if (it == b.slices.end()) continue;
        Subspace joint = sa;
        size_t grew = 0;
        for (const Vec& v : it->second.echelon_basis())
            if (joint.insert(v)) ++grew;
        if (grew < it->second.dim()) return true;
    }
    return false;
}

// Certificate that every nonzero vector of an interior slice regenerates the
// whole component inside the window: the algebra of degree-returning words at
// a base degree is the full endomorphism algebra, words out of the base
// degree span every interior slice, and words into the base degree have
// jointly trivial kernel on every interior slice.
Verdict component_irreducible(const LoopModuleWindow& w, const WindowGens& gens,
                              const Component& c, const std::vector<IntVec>& interior,
                              size_t budget, std::string& detail) {
    std::vector<IntVec> idegs;
    for (const IntVec& s : interior)
        if (c.slice_dim(s) > 0) idegs.push_back(s);
    if (idegs.empty()) {
        detail = "no interior slices";
        return Verdict::Inconclusive;
    }
    // central-most nonzero interior slice as base degree
    IntVec d0 = idegs[0];
    long best = -1;
    for (const IntVec& s : idegs) {
        long norm = 0;
        for (long x : s) norm += std::abs(x);
        if (best < 0 || norm < best) {
            best = norm;
            d0 = s;
        }
    }
    const size_t c0 = c.slice_dim(d0);

    // transition matrix of generator g between slice bases, from -> from+r;
    // cached because both passes revisit the same pairs many times
    std::map<std::pair<size_t, IntVec>, std::optional<Mat>> tcache;
    auto transition = [&](size_t gi, const IntVec& from) -> const std::optional<Mat>& {
        auto key = std::make_pair(gi, from);
        auto it = tcache.find(key);
        if (it != tcache.end()) return it->second;
        const Subspace& src = c.slices.at(from);
        const Subspace& dst = c.slices.at(add_deg(from, gens[gi].first));
        Mat t(dst.dim(), src.dim());
        bool ok = true;
        for (size_t j = 0; j < src.dim() && ok; ++j) {
            Vec img = gens[gi].second.apply(src.echelon_basis()[j]);
            std::optional<Vec> coords = dst.coordinates(img);
            if (!coords)
                ok = false;
            else
                for (size_t i = 0; i < dst.dim(); ++i) t.at(i, j) = (*coords)[i];
        }
        std::optional<Mat> entry;
        if (ok) entry = std::move(t);
        return tcache.emplace(std::move(key), std::move(entry)).first->second;
    };

    auto flatten = [](const Mat& m) {
        Vec v(m.rows() * m.cols());
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
        return v;
    };

    size_t used = 0;
    // one pass per direction: forward reach Hom(C_d0 -> C_t), backward reach
    // Hom(C_s -> C_d0)
    std::map<IntVec, Subspace> fwd, bwd;
    for (int dir = 0; dir < 2; ++dir) {
        std::map<IntVec, Subspace>& reach = dir == 0 ? fwd : bwd;
        std::deque<std::pair<IntVec, Mat>> work;
        Mat id = Mat::identity(c0);
        reach.emplace(d0, Subspace(c0 * c0)).first->second.insert(flatten(id));
        work.emplace_back(d0, id);
        while (!work.empty()) {
            auto [s, m] = std::move(work.front());
            work.pop_front();
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                const IntVec& r = gens[gi].first;
                IntVec t = dir == 0 ? add_deg(s, r) : sub_deg(s, r);
                if (!w.contains_degree(t) || c.slice_dim(t) == 0) continue;
                if (++used > budget) {
                    detail = "certificate budget exceeded at degree " + deg_str(t);
                    return Verdict::Inconclusive;
                }
                const std::optional<Mat>& tr = dir == 0 ? transition(gi, s) : transition(gi, t);
                if (!tr) {
                    detail = "slice escaped its component at degree " + deg_str(t);
                    return Verdict::Inconclusive;
                }
                Mat next = dir == 0 ? *tr * m : m * *tr;
                auto it = reach.find(t);
                if (it == reach.end()) {
                    size_t amb = dir == 0 ? c.slice_dim(t) * c0 : c0 * c.slice_dim(t);
                    it = reach.emplace(t, Subspace(amb)).first;
                }
                if (it->second.insert(flatten(next))) work.emplace_back(t, std::move(next));
            }
        }
    }

    if (fwd.at(d0).dim() != c0 * c0) {
        detail = "returning words span a proper algebra at degree " + deg_str(d0);
        return Verdict::Inconclusive;
    }
    for (const IntVec& e : idegs) {
        const size_t ce = c.slice_dim(e);
        auto fit = fwd.find(e);
        Subspace colspan(ce);
        if (fit != fwd.end())
            for (const Vec& flat : fit->second.echelon_basis())
                for (size_t j = 0; j < c0; ++j) {
                    Vec col(ce);
                    for (size_t i = 0; i < ce; ++i) col[i] = flat[i * c0 + j];
                    colspan.insert(col);
                }
        if (colspan.dim() != ce) {
            detail = "base-degree words do not span the slice at " + deg_str(e);
            return Verdict::Inconclusive;
        }
        auto bit = bwd.find(e);
        std::vector<Vec> rows;
        if (bit != bwd.end())
            for (const Vec& flat : bit->second.echelon_basis())
                for (size_t i = 0; i < c0; ++i) {
                    Vec row(ce);
                    for (size_t j = 0; j < ce; ++j) row[j] = flat[i * ce + j];
                    rows.push_back(row);
                }
        Mat stacked = Mat::from_rows(rows, ce);
        if (!kernel(stacked).empty()) {
            detail = "a vector at " + deg_str(e) + " is killed by every word into the base degree";
            return Verdict::Inconclusive;
        }
    }
    return Verdict::Pass;
}

}  // namespace

ComponentReport decompose(const LoopModuleWindow& w, const DecomposeOptions& opt) {
    const EvalModule& base = *w.base;
    const MultiloopTorus& lt = *base.lt;
    const size_t d = base.dim;
    ComponentReport rep;
    rep.lattice = component_lattice(base);

    if (rep.lattice.trivial) {
        rep.detail = "trivial highest weight: each degree carries its own invariant line";
        return rep;
    }
    if (!rep.lattice.s.full_rank()) {
        rep.detail = "component lattice is rank deficient; coset enumeration impossible";
        return rep;
    }

    // generator radius: large enough to step across every degree class, grown
    // until the sampled coefficient spans are shift-closed, capped so the
    // interior margin keeps some window degrees
    long maxm = 1;
    for (long o : lt.orders) maxm = std::max(maxm, o);
    long half = w.box[0].second - w.box[0].first;
    for (const auto& [lo, hi] : w.box) half = std::min(half, (hi - lo) / 2);
    long cap = std::min(opt.max_gen_radius, std::max(half, maxm));
    long radius = maxm;
    while (radius < cap && !generator_spans_closed(base, radius)) radius *= 2;
    radius = std::min(radius, cap);
    rep.gen_radius = radius;
    rep.generators_complete = generator_spans_closed(base, radius);

    for (const IntVec& s : w.degrees) {
        bool inner = true;
        for (size_t i = 0; i < s.size(); ++i)
            inner = inner && s[i] - radius >= w.box[i].first && s[i] + radius <= w.box[i].second;
        if (inner) rep.interior.push_back(s);
    }

    WindowGens gens = window_generators(base, radius);

    // closures of the highest vector over every coset representative
    std::vector<IntVec> reps = rep.lattice.s.coset_reps();
    Vec seed(d);
    seed[base.highest_vector()] = Cyc(1);
    for (const IntVec& r : reps) {
        if (!w.contains_degree(r)) {
            rep.detail = "window does not contain the coset representative " + deg_str(r);
            return rep;
        }
        rep.components.push_back(closure_from(w, gens, r, seed));
    }

    // merge overlapping closures; overlap means one true component
    for (bool merged = true; merged;) {
        merged = false;
        for (size_t i = 0; i < rep.components.size() && !merged; ++i)
            for (size_t j = i + 1; j < rep.components.size() && !merged; ++j)
                if (slices_overlap(rep.components[i], rep.components[j])) {
                    for (const auto& [s, sb] : rep.components[j].slices) {
                        auto it = rep.components[i].slices.find(s);
                        if (it == rep.components[i].slices.end())
                            it = rep.components[i].slices.emplace(s, Subspace(d)).first;
                        for (const Vec& v : sb.echelon_basis()) it->second.insert(v);
                    }
                    rep.components.erase(rep.components.begin() + j);
                    merged = true;
                }
    }

    rep.count_matches_index =
        rep.components.size() == static_cast<size_t>(rep.lattice.s.index());

    // interior slices must direct-sum to the base module
    rep.partitioned = !rep.interior.empty();
    for (const IntVec& s : rep.interior) {
        size_t total = 0;
        Subspace joint(d);
        for (const Component& c : rep.components) {
            auto it = c.slices.find(s);
            if (it == c.slices.end()) continue;
            total += it->second.dim();
            for (const Vec& v : it->second.echelon_basis()) joint.insert(v);
        }
        if (total != d || joint.dim() != d) {
            rep.partitioned = false;
            rep.detail += "partition fails at degree " + deg_str(s) + "; ";
            break;
        }
    }

    // stability of every slice under every generator
    rep.slices_stable = [&] {
        for (const Component& c : rep.components)
            for (const auto& [s, sl] : c.slices)
                for (const auto& [r, a] : gens) {
                    IntVec t = add_deg(s, r);
                    if (!w.contains_degree(t)) continue;
                    for (const Vec& v : sl.echelon_basis()) {
                        Vec u = a.apply(v);
                        if (vec_is_zero(u)) continue;
                        auto it = c.slices.find(t);
                        if (it == c.slices.end() || !it->second.contains(u)) {
                            rep.detail += "slice at " + deg_str(s) +
                                          " leaks under a generator of degree " + deg_str(r) + "; ";
                            return false;
                        }
                    }
                }
        return true;
    }();

    // dimension profiles of distinct components are translates
    rep.profiles_translate = true;
    for (size_t i = 0; i < rep.components.size(); ++i)
        for (size_t j = i + 1; j < rep.components.size(); ++j) {
            IntVec shift = sub_deg(rep.components[j].rep, rep.components[i].rep);
            for (const IntVec& s : rep.interior) {
                IntVec t = add_deg(s, shift);
                if (!w.contains_degree(t)) continue;
                bool tin = std::find(rep.interior.begin(), rep.interior.end(), t) != rep.interior.end();
                if (!tin) continue;
                if (rep.components[i].slice_dim(s) != rep.components[j].slice_dim(t)) {
                    rep.profiles_translate = false;
                    rep.detail += "profiles differ at " + deg_str(s) + " vs " + deg_str(t) + "; ";
                }
            }
        }

    // grade-shift matches for the representative differences
    for (size_t i = 0; i < rep.components.size(); ++i)
        for (size_t j = i + 1; j < rep.components.size(); ++j) {
            IntVec shift = sub_deg(rep.components[j].rep, rep.components[i].rep);
            bool ok = grade_shift_isomorphic(w, rep.components[i], rep.components[j], shift, radius);
            rep.shift_matches.emplace_back(i, j, shift, ok);
        }

    // interior irreducibility certificate per component
    rep.interior_irreducible = Verdict::Pass;
    for (const Component& c : rep.components) {
        std::string why;
        Verdict v = component_irreducible(w, gens, c, rep.interior, opt.certificate_budget, why);
        if (v != Verdict::Pass) {
            rep.interior_irreducible = v;
            rep.detail += "component at " + deg_str(c.rep) + ": " + why + "; ";
        }
    }

    rep.components_integrable = rep.slices_stable && check_integrable(base).integrable;
    return rep;
}

bool grade_shift_isomorphic(const LoopModuleWindow& w, const Component& c1, const Component& c2,
                            const IntVec& shift, long margin) {
    std::vector<IntVec> inner;
    for (const IntVec& s : w.degrees) {
        bool in = true;
        for (size_t i = 0; i < s.size(); ++i)
            in = in && s[i] - margin >= w.box[i].first && s[i] + margin <= w.box[i].second;
        if (in) inner.push_back(s);
    }
    size_t compared = 0, nonzero = 0;
    for (const IntVec& s : inner) {
        IntVec t = add_deg(s, shift);
        if (std::find(inner.begin(), inner.end(), t) == inner.end()) continue;
        ++compared;
        auto i1 = c1.slices.find(s);
        auto i2 = c2.slices.find(t);
        size_t d1 = i1 == c1.slices.end() ? 0 : i1->second.dim();
        size_t d2 = i2 == c2.slices.end() ? 0 : i2->second.dim();
        if (d1 != d2) return false;
        if (d1 == 0) continue;
        ++nonzero;
        if (!i1->second.same_space(i2->second)) return false;
        // the d_i eigenvalues differ by exactly shift_i
        for (size_t i = 0; i < shift.size(); ++i)
            if (!(w.d_eigenvalue(i, t) - w.d_eigenvalue(i, s) == Cyc(shift[i]))) return false;
    }
    return compared > 0 && nonzero > 0;
}

CentralReport check_central_trivial(const LoopModuleWindow& w) {
    const EvalModule& base = *w.base;
    const MultiloopTorus& lt = *base.lt;
    CentralReport rep;
    std::ostringstream detail;

    // the central symbols themselves act as zero
    rep.central_zero = true;
    IntVec zero(lt.nvars, 0);
    IntVec gamma(lt.orders.begin(), lt.orders.end());
    for (size_t i = 0; i < lt.nvars; ++i) {
        for (const IntVec& r : {zero, gamma, sub_deg(zero, gamma)}) {
            TorusElement c = central_element(lt, r, i);
            if (!window_operator(w, c).is_zero()) {
                rep.central_zero = false;
                detail << "central symbol at " << deg_str(r) << " acts nonzero; ";
            }
        }
    }

    // sampled bracket relations, with central outputs mapped to zero: on every
    // source degree whose full bracket diagram stays inside the box, the
    // commutator of the window operators equals the window operator of the
    // bracket
    std::vector<std::pair<TorusElement, IntVec>> samples;
    for (size_t c = 0; c < lt.grading.classes.size(); ++c) {
        // the class representative and one lattice shift of it, so pairs of
        // opposite degrees hit the cocycle term with a nonzero coefficient
        for (const IntVec& d : {lt.grading.classes[c], add_deg(lt.grading.classes[c], gamma)}) {
            samples.emplace_back(loop_element(lt, lt.grading.piece_basis[c].front(), d), d);
            IntVec neg = sub_deg(zero, d);
            const auto& nbasis = lt.grading.piece_basis[lt.grading.class_index(neg)];
            samples.emplace_back(loop_element(lt, nbasis.back(), neg), neg);
        }
    }
    for (size_t i = 0; i < lt.nvars; ++i) samples.emplace_back(derivation_element(lt, i), zero);
    for (size_t i = 0; i < lt.nvars; ++i) samples.emplace_back(central_element(lt, zero, i), zero);

    rep.homomorphism_ok = true;
    const size_t d = base.dim;
    for (size_t a = 0; a < samples.size(); ++a)
        for (size_t b = a; b < samples.size(); ++b) {
            const auto& [ea, ka] = samples[a];
            const auto& [eb, kb] = samples[b];
            TorusElement z = bracket(lt, ea, eb);
            Mat wa = window_operator(w, ea);
            Mat wb = window_operator(w, eb);
            Mat wz = window_operator(w, z);
            Mat comm = wa * wb - wb * wa;
            bool any = false;
            for (size_t si = 0; si < w.degrees.size(); ++si) {
                const IntVec& s = w.degrees[si];
                if (!w.contains_degree(add_deg(s, ka)) || !w.contains_degree(add_deg(s, kb)) ||
                    !w.contains_degree(add_deg(s, add_deg(ka, kb))))
                    continue;
                any = true;
                for (size_t v = 0; v < d; ++v) {
                    size_t col = w.rank(si, v);
                    for (size_t row = 0; row < w.dim(); ++row)
                        if (!(comm.at(row, col) == wz.at(row, col))) {
                            rep.homomorphism_ok = false;
                            detail << "bracket relation fails on a column at " << deg_str(s)
                                   << "; ";
                            break;
                        }
                    if (!rep.homomorphism_ok) break;
                }
            }
            if (any) ++rep.pairs_checked;
            if (!rep.homomorphism_ok) break;
        }

    rep.detail = detail.str();
    return rep;
}

WindowWeightReport check_window_weights(const LoopModuleWindow& w) {
    const EvalModule& base = *w.base;
    const MultiloopTorus& lt = *base.lt;
    WindowWeightReport rep;
    rep.weyl_symmetric = true;
    rep.integral_pairings = true;
    std::ostringstream detail;

    std::vector<Vec> weights = finite_weights(base);
    std::map<std::string, size_t> counts;
    for (const Vec& mu : weights) ++counts[weight_key(mu)];

    long maxm = 1;
    for (long o : lt.orders) maxm = std::max(maxm, o);
    std::vector<std::pair<long, long>> rbox(lt.nvars, {-maxm, maxm});
    for (const IntVec& k : box_degrees(rbox)) {
        for (const auto& entry : lt.grading.piece_weights[lt.grading.class_index(k)]) {
            const IntVec& tag = entry.first;
            bool zero = true;
            for (long t : tag) zero = zero && t == 0;
            if (zero) continue;
            for (const Vec& mu : weights) {
                Cyc p = coroot_pairing(lt, mu, tag);
                if (!p.is_rational() || p.as_rational().get_den() != 1) {
                    rep.integral_pairings = false;
                    detail << "non-integral pairing against the root at " << deg_str(k) << "; ";
                    continue;
                }
                long pl = static_cast<long>(p.as_rational().get_num().get_si());
                Vec refl(mu.size());
                for (size_t j = 0; j < mu.size(); ++j) refl[j] = mu[j] - p * Cyc(tag[j]);
                // reflected finite multiplicity (degree-independent)
                auto it = counts.find(weight_key(refl));
                size_t rc = it == counts.end() ? 0 : it->second;
                bool applied = false;
                for (const IntVec& s : w.degrees) {
                    IntVec sr(s.size());
                    for (size_t j = 0; j < s.size(); ++j) sr[j] = s[j] - pl * k[j];
                    if (!w.contains_degree(sr)) continue;
                    applied = true;
                    break;
                }
                if (applied) {
                    ++rep.weights_checked;
                    if (rc != counts.at(weight_key(mu))) {
                        rep.weyl_symmetric = false;
                        detail << "multiplicity breaks under the reflection at " << deg_str(k)
                               << "; ";
                    }
                }
            }
        }
    }
    rep.detail = detail.str();
    return rep;
}

ClassificationReport verify_classification_instance(const PipelineInput& in) {
    ClassificationReport rep;
    auto record = [&rep](const std::string& stage, bool ok, const std::string& detail) {
        rep.stages.push_back({stage, ok, detail});
        return ok;
    };
    if (!in.g) throw std::invalid_argument("missing base algebra");

    std::optional<AutomorphismTuple> tuple;
    try {
        tuple = make_automorphism_tuple(*in.g, in.sigma);
        record("automorphisms", true, "orders verified");
    } catch (const std::exception& e) {
        record("automorphisms", false, e.what());
        return rep;
    }

    rep.torus = check_lie_torus(*in.g, *tuple);
    record("lie torus axioms", rep.torus.ok,
           rep.torus.ok ? "all three axioms hold" : rep.torus.detail);

    std::optional<MultiloopTorus> lt;
    try {
        lt.emplace(*in.g, *tuple);
        record("graded torus", true, "cocycle and derivations attached");
    } catch (const std::exception& e) {
        record("graded torus", false, e.what());
        return rep;
    }

    std::optional<EvalModule> base;
    try {
        base = build_eval_module(*lt, in.lambdas, in.points);
        record("evaluation module", true,
               "dimension " + std::to_string(base->dim) +
                   (base->separated ? ", separated points" : ", repeated points"));
    } catch (const std::exception& e) {
        record("evaluation module", false, e.what());
        return rep;
    }

    rep.irreducibility = check_irreducible(*base);
    record("irreducibility vs separation", rep.irreducibility.matches_separation,
           rep.irreducibility.detail);

    rep.integrability = check_integrable(*base);
    record("integrability",
           rep.integrability.integrable && rep.integrability.diagonal_cartan &&
               rep.integrability.weyl_symmetric && rep.integrability.integral_pairings,
           rep.integrability.detail.empty() ? "nilpotence, symmetry and pairings verified"
                                            : rep.integrability.detail);

    std::optional<LoopModuleWindow> window;
    try {
        window = build_loop_window(*base, in.alpha, in.box);
        record("loop window", true, std::to_string(window->dim()) + " basis vectors");
    } catch (const std::exception& e) {
        record("loop window", false, e.what());
        return rep;
    }

    rep.decomposition = decompose(*window, in.options);
    {
        bool shifts_ok = true;
        for (const auto& [i, j, s, ok] : rep.decomposition.shift_matches) shifts_ok = shifts_ok && ok;
        std::ostringstream os;
        os << rep.decomposition.components.size() << " components, lattice index "
           << (rep.decomposition.lattice.s.full_rank() ? rep.decomposition.lattice.s.index() : -1);
        if (!rep.decomposition.detail.empty()) os << "; " << rep.decomposition.detail;
        bool ok = rep.decomposition.partitioned && rep.decomposition.count_matches_index &&
                  rep.decomposition.slices_stable && rep.decomposition.components_integrable &&
                  rep.decomposition.interior_irreducible == Verdict::Pass && shifts_ok;
        record("decomposition", ok, os.str());
    }

    rep.central = check_central_trivial(*window);
    record("central triviality", rep.central.central_zero && rep.central.homomorphism_ok,
           rep.central.detail.empty()
               ? std::to_string(rep.central.pairs_checked) + " bracket pairs verified"
               : rep.central.detail);

    rep.weights = check_window_weights(*window);
    record("window weights", rep.weights.weyl_symmetric && rep.weights.integral_pairings,
           rep.weights.detail.empty()
               ? std::to_string(rep.weights.weights_checked) + " reflections verified"
               : rep.weights.detail);

    rep.all_pass = true;
    for (const StageResult& s : rep.stages) rep.all_pass = rep.all_pass && s.ok;
    return rep;
}

}  // namespace lt
