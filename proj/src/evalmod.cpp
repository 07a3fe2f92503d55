#include "lt/evalmod.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lt {

namespace {

std::string weight_key(const Vec& w) {
    std::string key;
    for (const Cyc& c : w) {
        key += c.str();
        key += '|';
    }
    return key;
}

Vec flatten(const Mat& m) {
    Vec v(m.rows() * m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
    return v;
}

}  // namespace

size_t EvalModule::tensor_rank(const std::vector<size_t>& idx) const {
    if (idx.size() != factors.size()) throw std::invalid_argument("tensor index length mismatch");
    size_t r = 0;
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= factors[i].rep.dim) throw std::invalid_argument("tensor index out of range");
        r = r * factors[i].rep.dim + idx[i];
    }
    return r;
}

std::vector<size_t> EvalModule::tensor_unrank(size_t v) const {
    std::vector<size_t> idx(factors.size());
    for (size_t i = factors.size(); i-- > 0;) {
        idx[i] = v % factors[i].rep.dim;
        v /= factors[i].rep.dim;
    }
    return idx;
}

EvalModule build_eval_module(const MultiloopTorus& lt, const std::vector<IntVec>& lambdas,
                             const std::vector<std::vector<Cyc>>& points) {
    if (lambdas.empty() || lambdas.size() != points.size())
        throw std::invalid_argument("need matching nonempty weight and point lists");
    EvalModule m;
    m.lt = &lt;
    m.dim = 1;
    for (size_t i = 0; i < lambdas.size(); ++i) {
        if (points[i].size() != lt.nvars)
            throw std::invalid_argument("evaluation point length mismatch");
        EvalFactor f;
        f.lambda = lambdas[i];
        f.rep = build_generator_rep(lt.g->roots(), lambdas[i]);
        f.action = basis_action_matrices(*lt.g, f.rep);
        f.point = points[i];
        f.twisted_point.resize(lt.nvars);
        for (size_t j = 0; j < lt.nvars; ++j) {
            if (points[i][j].is_zero())
                throw std::invalid_argument("evaluation points must have nonzero coordinates");
            f.twisted_point[j] = points[i][j].pow(lt.orders[j]);
        }
        m.dim *= f.rep.dim;
        m.factors.push_back(std::move(f));
    }
    m.separated = true;
    for (size_t i = 0; i < m.factors.size() && m.separated; ++i)
        for (size_t j = i + 1; j < m.factors.size() && m.separated; ++j)
            if (m.factors[i].twisted_point == m.factors[j].twisted_point) m.separated = false;
    return m;
}

Cyc point_power(const std::vector<Cyc>& b, const IntVec& r) {
    if (b.size() != r.size()) throw std::invalid_argument("point/degree length mismatch");
    Cyc p(1);
    for (size_t j = 0; j < b.size(); ++j) p *= b[j].pow(r[j]);
    return p;
}

Mat eval_action(const EvalModule& m, const Vec& x, const IntVec& r) {
    const MultiloopTorus& lt = *m.lt;
    if (!lt.in_piece(x, r))
        throw std::invalid_argument("action vector lies outside the graded piece of its degree");
    Mat a(m.dim, m.dim);
    for (size_t i = 0; i < m.factors.size(); ++i) {
        const EvalFactor& f = m.factors[i];
        Cyc scale = point_power(f.point, r);
        if (scale.is_zero()) continue;
        Mat slot(f.rep.dim, f.rep.dim);
        for (size_t c = 0; c < x.size(); ++c)
            if (!x[c].is_zero()) slot = slot + f.action[c].scaled(x[c]);
        for (size_t q = 0; q < m.dim; ++q) {
            std::vector<size_t> idx = m.tensor_unrank(q);
            size_t vi = idx[i];
            for (size_t p = 0; p < f.rep.dim; ++p) {
                if (slot.at(p, vi).is_zero()) continue;
                idx[i] = p;
                a.at(m.tensor_rank(idx), q) += scale * slot.at(p, vi);
            }
            idx[i] = vi;
        }
    }
    return a;
}

std::vector<Vec> finite_weights(const EvalModule& m) {
    const MultiloopTorus& lt = *m.lt;
    const size_t rk = lt.grading.h0.size();
    std::vector<Vec> rows(m.dim, Vec(rk));
    for (size_t j = 0; j < rk; ++j) {
        Mat h = eval_action(m, lt.grading.h0[j], lt.zero_degree());
        for (size_t p = 0; p < m.dim; ++p)
            for (size_t q = 0; q < m.dim; ++q)
                if (p != q && !h.at(p, q).is_zero())
                    throw std::logic_error("fixed Cartan does not act diagonally");
        for (size_t v = 0; v < m.dim; ++v) rows[v][j] = h.at(v, v);
    }
    return rows;
}

IntegrabilityReport check_integrable(const EvalModule& m) {
    const MultiloopTorus& lt = *m.lt;
    IntegrabilityReport rep;
    rep.integrable = true;
    rep.diagonal_cartan = true;
    rep.weyl_symmetric = true;
    rep.integral_pairings = true;
    std::ostringstream detail;

    // fixed Cartan diagonality and the basis weights
    std::vector<Vec> weights;
    try {
        weights = finite_weights(m);
    } catch (const std::logic_error&) {
        rep.diagonal_cartan = false;
        rep.integrable = false;
        rep.detail = "fixed Cartan fails to act diagonally";
        return rep;
    }

    // nilpotence of every real root vector, probed at two degrees per class
    IntVec mvec(lt.orders.begin(), lt.orders.end());
    for (size_t c = 0; c < lt.grading.classes.size(); ++c) {
        for (const auto& [tag, basis] : lt.grading.piece_weights[c]) {
            bool zero = true;
            for (long t : tag) zero = zero && t == 0;
            if (zero) continue;
            for (const Vec& x : basis)
                for (int shift = 0; shift < 2; ++shift) {
                    IntVec k = lt.grading.classes[c];
                    if (shift)
                        for (size_t j = 0; j < k.size(); ++j) k[j] += mvec[j];
                    Mat a = eval_action(m, x, k);
                    Mat p = a;
                    size_t n = 1;
                    while (!p.is_zero() && n <= m.dim + 1) {
                        p = p * a;
                        ++n;
                    }
                    if (!p.is_zero()) {
                        rep.integrable = false;
                        detail << "root vector fails nilpotence within " << m.dim + 1
                               << " steps; ";
                    } else if (n > rep.max_power) {
                        rep.max_power = n;
                    }
                }
        }
    }

    // Weyl symmetry of the weight multiset and integrality of the pairings
    std::map<std::string, long> multiset;
    for (const Vec& w : weights) ++multiset[weight_key(w)];
    const auto& fixed = lt.grading.piece_weights[lt.grading.class_index(lt.zero_degree())];
    for (const auto& [tag, basis] : fixed) {
        bool zero = true;
        for (long t : tag) zero = zero && t == 0;
        if (zero) continue;
        for (const Vec& w : weights) {
            Cyc p = coroot_pairing(lt, w, tag);
            if (!p.is_rational() || p.as_rational().get_den() != 1) {
                rep.integral_pairings = false;
                detail << "non-integral coroot pairing; ";
            }
            Vec refl(w.size());
            for (size_t j = 0; j < w.size(); ++j) refl[j] = w[j] - p * Cyc(tag[j]);
            if (multiset.find(weight_key(refl)) == multiset.end()) {
                rep.weyl_symmetric = false;
                detail << "reflected weight missing from the multiset; ";
            }
        }
        // multiplicities: reflection is an involution on the index set, so
        // matching both directions forces equal multiplicities
        std::map<std::string, long> reflected;
        for (const Vec& w : weights) {
            Cyc p = coroot_pairing(lt, w, tag);
            Vec refl(w.size());
            for (size_t j = 0; j < w.size(); ++j) refl[j] = w[j] - p * Cyc(tag[j]);
            ++reflected[weight_key(refl)];
        }
        if (reflected != multiset) {
            rep.weyl_symmetric = false;
            detail << "weight multiset not reflection-invariant; ";
        }
    }

    rep.detail = detail.str();
    return rep;
}

bool generator_spans_closed(const EvalModule& m, long radius) {
    const MultiloopTorus& lt = *m.lt;
    const size_t k = m.factors.size();
    std::vector<Subspace> coeff_span(lt.grading.classes.size(), Subspace(k));
    IntVec r(lt.nvars, -radius);
    for (;;) {
        Vec cv(k);
        for (size_t i = 0; i < k; ++i) cv[i] = point_power(m.factors[i].point, r);
        coeff_span[lt.grading.class_index(r)].insert(cv);
        size_t ax = lt.nvars;
        bool done = true;
        while (ax-- > 0) {
            if (r[ax] < radius) {
                ++r[ax];
                for (size_t j = ax + 1; j < lt.nvars; ++j) r[j] = -radius;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    for (size_t c = 0; c < coeff_span.size(); ++c)
        for (size_t j = 0; j < lt.nvars; ++j)
            for (const Vec& u : coeff_span[c].echelon_basis()) {
                Vec shifted(k);
                for (size_t i = 0; i < k; ++i) shifted[i] = u[i] * m.factors[i].twisted_point[j];
                if (!coeff_span[c].contains(shifted)) return false;
            }
    return true;
}

IrreducibilityReport check_irreducible(const EvalModule& m, long max_radius) {
    const MultiloopTorus& lt = *m.lt;
    const size_t d = m.dim;
    IrreducibilityReport rep;

    long maxm = 1;
    for (long o : lt.orders) maxm = std::max(maxm, o);
    long radius = 2 * maxm;

    for (;;) {
        rep.radius = radius;
        rep.generators_complete = generator_spans_closed(m, radius);

        std::vector<IntVec> degrees;
        IntVec r(lt.nvars, -radius);
        for (;;) {
            degrees.push_back(r);
            size_t ax = lt.nvars;
            bool done = true;
            while (ax-- > 0) {
                if (r[ax] < radius) {
                    ++r[ax];
                    for (size_t j = ax + 1; j < lt.nvars; ++j) r[j] = -radius;
                    done = false;
                    break;
                }
            }
            if (done) break;
        }

        std::vector<Mat> gens;
        for (const IntVec& deg : degrees)
            for (const Vec& x : lt.grading.piece_basis[lt.grading.class_index(deg)])
                gens.push_back(eval_action(m, x, deg));

        // span of all words in the generators
        Subspace alg(d * d);
        std::deque<Mat> work;
        Mat id = Mat::identity(d);
        alg.insert(flatten(id));
        work.push_back(id);
        while (!work.empty()) {
            Mat w = std::move(work.front());
            work.pop_front();
            for (const Mat& g : gens) {
                Mat p = w * g;
                if (alg.insert(flatten(p))) work.push_back(std::move(p));
            }
        }
        rep.algebra_dim = alg.dim();

        if (rep.algebra_dim == d * d) {
            rep.verdict = Verdict::Pass;
            rep.detail = "generated matrix algebra is the full endomorphism algebra";
        } else {
            rep.verdict = Verdict::Inconclusive;
            for (size_t v = 0; v < d && rep.verdict != Verdict::Fail; ++v) {
                Subspace orbit(d);
                std::deque<Vec> vwork;
                Vec ev(d);
                ev[v] = Cyc(1);
                orbit.insert(ev);
                vwork.push_back(std::move(ev));
                while (!vwork.empty()) {
                    Vec u = std::move(vwork.front());
                    vwork.pop_front();
                    for (const Mat& g : gens) {
                        Vec w = g.apply(u);
                        if (orbit.insert(w)) vwork.push_back(std::move(w));
                    }
                }
                if (orbit.dim() < d) {
                    rep.verdict = Verdict::Fail;
                    std::ostringstream os;
                    os << "basis vector " << v << " generates an invariant subspace of dimension "
                       << orbit.dim();
                    rep.detail = os.str();
                }
            }
            if (rep.verdict == Verdict::Inconclusive)
                rep.detail = rep.generators_complete
                                 ? "proper action algebra but no basis-aligned invariant subspace"
                                 : "generator sample not yet complete";
        }

        if (rep.generators_complete || radius >= max_radius) break;
        radius = std::min(2 * radius, max_radius);
    }

    bool expect_irreducible = m.separated;
    rep.matches_separation = (rep.verdict == Verdict::Pass && expect_irreducible) ||
                             (rep.verdict == Verdict::Fail && !expect_irreducible);
    return rep;
}

}  // namespace lt
