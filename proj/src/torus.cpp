#include "lt/torus.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace lt {

namespace {

IntVec add_deg(const IntVec& a, const IntVec& b) {
    IntVec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

bool deg_is_zero(const IntVec& a) {
    for (long v : a)
        if (v != 0) return false;
    return true;
}

std::string deg_str(const IntVec& a) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ')';
    return os.str();
}

std::vector<Cyc>& central_row(CentralPart& cp, const IntVec& deg, size_t n) {
    auto it = cp.terms.find(deg);
    if (it == cp.terms.end()) it = cp.terms.emplace(deg, std::vector<Cyc>(n)).first;
    return it->second;
}

// Applies the relation sum_i r_i t^r K_i = 0 at every nonzero degree:
// eliminates the coefficient with the smallest index i such that r[i] != 0,
// then drops zero rows. Linear and idempotent.
void reduce_central(CentralPart& cp) {
    for (auto it = cp.terms.begin(); it != cp.terms.end();) {
        const IntVec& r = it->first;
        std::vector<Cyc>& c = it->second;
        if (!deg_is_zero(r)) {
            size_t i0 = 0;
            while (r[i0] == 0) ++i0;
            if (!c[i0].is_zero()) {
                Cyc ratio = c[i0] / Cyc(r[i0]);
                for (size_t j = 0; j < c.size(); ++j) c[j] -= ratio * Cyc(r[j]);
            }
        }
        bool zero = true;
        for (const Cyc& v : c) zero = zero && v.is_zero();
        it = zero ? cp.terms.erase(it) : std::next(it);
    }
}

void acc_loop(std::map<IntVec, Vec>& m, const IntVec& k, const Vec& v) {
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, v);
        return;
    }
    for (size_t i = 0; i < v.size(); ++i) it->second[i] += v[i];
}

void tidy(TorusElement& a) {
    for (auto it = a.loop.begin(); it != a.loop.end();)
        it = vec_is_zero(it->second) ? a.loop.erase(it) : std::next(it);
    for (auto it = a.central.terms.begin(); it != a.central.terms.end();) {
        bool zero = true;
        for (const Cyc& v : it->second) zero = zero && v.is_zero();
        it = zero ? a.central.terms.erase(it) : std::next(it);
    }
    bool dz = true;
    for (const Cyc& v : a.der) dz = dz && v.is_zero();
    if (dz) a.der.clear();
}

}  // namespace

TorusElement operator+(const TorusElement& a, const TorusElement& b) {
    TorusElement r = a;
    for (const auto& [k, v] : b.loop) acc_loop(r.loop, k, v);
    for (const auto& [k, row] : b.central.terms) {
        std::vector<Cyc>& dst = central_row(r.central, k, row.size());
        for (size_t i = 0; i < row.size(); ++i) dst[i] += row[i];
    }
    if (r.der.size() < b.der.size()) r.der.resize(b.der.size());
    for (size_t i = 0; i < b.der.size(); ++i) r.der[i] += b.der[i];
    tidy(r);
    return r;
}

TorusElement operator*(const Cyc& s, const TorusElement& a) {
    TorusElement r;
    for (const auto& [k, v] : a.loop) r.loop.emplace(k, s * v);
    for (const auto& [k, row] : a.central.terms) {
        std::vector<Cyc> nr(row.size());
        for (size_t i = 0; i < row.size(); ++i) nr[i] = s * row[i];
        r.central.terms.emplace(k, std::move(nr));
    }
    r.der.resize(a.der.size());
    for (size_t i = 0; i < a.der.size(); ++i) r.der[i] = s * a.der[i];
    tidy(r);
    return r;
}

TorusElement operator-(const TorusElement& a, const TorusElement& b) { return a + Cyc(-1) * b; }

bool element_is_zero(const TorusElement& a) {
    TorusElement c = a;
    tidy(c);
    return c.loop.empty() && c.central.terms.empty() && c.der.empty();
}

bool operator==(const TorusElement& a, const TorusElement& b) { return element_is_zero(a - b); }

MultiloopTorus::MultiloopTorus(const SimpleLieAlgebra& algebra, const AutomorphismTuple& s)
    : g(&algebra),
      grading(eigenspace_grading(algebra, s)),
      nvars(s.size()),
      orders(s.orders),
      h0span(algebra.dim()) {
    if (nvars == 0) throw std::invalid_argument("at least one loop variable required");
    for (const auto& piece : grading.piece_basis) {
        Subspace sp(algebra.dim());
        for (const auto& v : piece) sp.insert(v);
        piece_span.push_back(std::move(sp));
    }
    if (grading.h0.empty())
        throw std::invalid_argument("no Cartan subalgebra of the fixed part found");
    for (const auto& h : grading.h0) h0span.insert(h);

    const size_t r = grading.h0.size();
    h0_cols = Mat::from_cols(grading.h0, algebra.dim());
    h0_gram = Mat(r, r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) h0_gram.at(i, j) = algebra.form(grading.h0[i], grading.h0[j]);
    h0_gram_inv = Mat(r, r);
    for (size_t j = 0; j < r; ++j) {
        Vec e(r);
        e[j] = Cyc(1);
        auto col = solve(h0_gram, e);
        if (!col) throw std::invalid_argument("invariant form degenerates on the fixed Cartan");
        for (size_t i = 0; i < r; ++i) h0_gram_inv.at(i, j) = (*col)[i];
    }
}

bool MultiloopTorus::in_gamma(const IntVec& r) const {
    if (r.size() != nvars) throw std::invalid_argument("degree length mismatch");
    for (size_t i = 0; i < nvars; ++i)
        if (r[i] % orders[i] != 0) return false;
    return true;
}

bool MultiloopTorus::in_piece(const Vec& x, const IntVec& k) const {
    if (x.size() != g->dim()) throw std::invalid_argument("vector dimension mismatch");
    return piece_span[grading.class_index(k)].contains(x);
}

TorusElement loop_element(const MultiloopTorus& lt, const Vec& x, const IntVec& k) {
    if (k.size() != lt.nvars) throw std::invalid_argument("degree length mismatch");
    if (!lt.in_piece(x, k))
        throw std::invalid_argument("loop term at degree " + deg_str(k) +
                                    " lies outside its graded piece");
    TorusElement a;
    if (!vec_is_zero(x)) a.loop.emplace(k, x);
    return a;
}

TorusElement central_element(const MultiloopTorus& lt, const IntVec& r, size_t i) {
    if (i >= lt.nvars) throw std::invalid_argument("central index out of range");
    if (!lt.in_gamma(r))
        throw std::invalid_argument("central degree " + deg_str(r) +
                                    " outside the central lattice");
    TorusElement a;
    central_row(a.central, r, lt.nvars)[i] = Cyc(1);
    reduce_central(a.central);
    return a;
}

TorusElement derivation_element(const MultiloopTorus& lt, size_t i) {
    if (i >= lt.nvars) throw std::invalid_argument("derivation index out of range");
    TorusElement a;
    a.der.assign(lt.nvars, Cyc(0));
    a.der[i] = Cyc(1);
    return a;
}

CentralPart zm_normal_form(const MultiloopTorus& lt,
                           const std::vector<std::tuple<IntVec, size_t, Cyc>>& raw) {
    CentralPart cp;
    for (const auto& [deg, i, c] : raw) {
        if (i >= lt.nvars) throw std::invalid_argument("central index out of range");
        if (!lt.in_gamma(deg))
            throw std::invalid_argument("central degree " + deg_str(deg) +
                                        " outside the central lattice");
        central_row(cp, deg, lt.nvars)[i] += c;
    }
    reduce_central(cp);
    return cp;
}

void validate_element(const MultiloopTorus& lt, const TorusElement& a) {
    for (const auto& [k, x] : a.loop) {
        if (k.size() != lt.nvars) throw std::invalid_argument("degree length mismatch");
        if (!lt.in_piece(x, k))
            throw std::invalid_argument("loop term at degree " + deg_str(k) +
                                        " lies outside its graded piece");
    }
    for (const auto& [r, row] : a.central.terms) {
        if (row.size() != lt.nvars) throw std::invalid_argument("central row length mismatch");
        if (!lt.in_gamma(r))
            throw std::invalid_argument("central degree " + deg_str(r) +
                                        " outside the central lattice");
    }
    if (!a.der.empty() && a.der.size() != lt.nvars)
        throw std::invalid_argument("derivation coefficient length mismatch");
}

namespace {

// The bracket formula with no support validation; change-of-coordinate
// verification feeds it relabeled elements whose degrees describe the image
// torus rather than this one.
TorusElement bracket_core(const MultiloopTorus& lt, const TorusElement& a,
                          const TorusElement& b) {
    const SimpleLieAlgebra& g = *lt.g;
    const size_t n = lt.nvars;
    TorusElement r;
    for (const auto& [k, x] : a.loop)
        for (const auto& [l, y] : b.loop) {
            IntVec kl = add_deg(k, l);
            Vec z = g.bracket(x, y);
            if (!vec_is_zero(z)) acc_loop(r.loop, kl, z);
            Cyc c = g.form(x, y);
            if (!c.is_zero()) {
                std::vector<Cyc>& row = central_row(r.central, kl, n);
                for (size_t i = 0; i < n; ++i)
                    if (k[i] != 0) row[i] += c * Cyc(k[i]);
            }
        }
    if (!a.der.empty()) {
        for (const auto& [l, y] : b.loop) {
            Cyc s(0);
            for (size_t i = 0; i < n; ++i) s += a.der[i] * Cyc(l[i]);
            if (!s.is_zero()) acc_loop(r.loop, l, s * y);
        }
        for (const auto& [rd, row] : b.central.terms) {
            Cyc s(0);
            for (size_t i = 0; i < n; ++i) s += a.der[i] * Cyc(rd[i]);
            if (s.is_zero()) continue;
            std::vector<Cyc>& dst = central_row(r.central, rd, n);
            for (size_t i = 0; i < n; ++i) dst[i] += s * row[i];
        }
    }
    if (!b.der.empty()) {
        for (const auto& [k, x] : a.loop) {
            Cyc s(0);
            for (size_t i = 0; i < n; ++i) s += b.der[i] * Cyc(k[i]);
            if (!s.is_zero()) acc_loop(r.loop, k, (-s) * x);
        }
        for (const auto& [rd, row] : a.central.terms) {
            Cyc s(0);
            for (size_t i = 0; i < n; ++i) s += b.der[i] * Cyc(rd[i]);
            if (s.is_zero()) continue;
            std::vector<Cyc>& dst = central_row(r.central, rd, n);
            for (size_t i = 0; i < n; ++i) dst[i] -= s * row[i];
        }
    }
    reduce_central(r.central);
    tidy(r);
    return r;
}

}  // namespace

TorusElement bracket(const MultiloopTorus& lt, const TorusElement& a, const TorusElement& b) {
    validate_element(lt, a);
    validate_element(lt, b);
    TorusElement r = bracket_core(lt, a, b);
    // (x|y) != 0 pairs pieces of opposite class, so every cocycle degree
    // lands in the central lattice.
    for (const auto& [deg, row] : r.central.terms)
        if (!lt.in_gamma(deg)) throw std::logic_error("cocycle term escaped the central lattice");
    return r;
}

bool TorusRoot::real() const {
    for (long v : alpha)
        if (v != 0) return true;
    return false;
}

std::vector<TorusRootSpace> root_spaces(const MultiloopTorus& lt,
                                        const std::vector<std::pair<long, long>>& box) {
    if (box.size() != lt.nvars) throw std::invalid_argument("box rank mismatch");
    for (const auto& [lo, hi] : box)
        if (lo > hi) throw std::invalid_argument("empty box interval");
    const size_t n = lt.nvars;
    const size_t rk = lt.grading.h0.size();

    std::vector<TorusRootSpace> out;
    IntVec k(n);
    for (size_t i = 0; i < n; ++i) k[i] = box[i].first;
    for (;;) {
        size_t cls = lt.grading.class_index(k);
        for (const auto& [w, basis] : lt.grading.piece_weights[cls]) {
            TorusRootSpace sp;
            sp.root = TorusRoot{w, k};
            sp.loop_basis = basis;
            for (const Vec& v : basis)
                for (size_t j = 0; j < rk; ++j)
                    if (!vec_is_zero(lt.g->bracket(lt.grading.h0[j], v) - Cyc(w[j]) * v))
                        throw std::runtime_error("stored weight vector fails its eigen relation");
            if (sp.root.real()) {
                if (sp.loop_basis.size() > 1)
                    throw std::runtime_error("real root space of dimension > 1 at degree " +
                                             deg_str(k));
            } else {
                if (deg_is_zero(k)) {
                    sp.central_dim = n;
                    sp.derivation_dim = n;
                } else if (lt.in_gamma(k)) {
                    sp.central_dim = n - 1;
                }
            }
            out.push_back(std::move(sp));
        }
        size_t i = n;
        while (i > 0) {
            --i;
            if (k[i] < box[i].second) {
                ++k[i];
                for (size_t j = i + 1; j < n; ++j) k[j] = box[j].first;
                break;
            }
            if (i == 0) return out;
        }
    }
}

namespace {

// Coordinates of the functional alpha (values on the fixed Cartan basis)
// under the inverse of the restricted form: c with G c = alpha. Then
// (alpha|alpha) = alpha . c and alpha-vee = (2/(alpha|alpha)) sum c_j h_j.
struct FiniteCoroot {
    Vec h0_coords;  // of alpha-vee in the fixed Cartan basis
    Cyc length_sq;  // (alpha|alpha)
    Cyc factor;     // 2/(alpha|alpha)
};

FiniteCoroot finite_coroot(const MultiloopTorus& lt, const std::vector<Cyc>& alpha) {
    const size_t rk = lt.grading.h0.size();
    if (alpha.size() != rk) throw std::invalid_argument("finite weight length mismatch");
    Vec tags(alpha.begin(), alpha.end());
    Vec c = lt.h0_gram_inv.apply(tags);
    Cyc len(0);
    for (size_t j = 0; j < rk; ++j) len += tags[j] * c[j];
    if (len.is_zero()) throw std::invalid_argument("isotropic finite root has no coroot");
    FiniteCoroot fc;
    fc.length_sq = len;
    fc.factor = Cyc(2) / len;
    fc.h0_coords.resize(rk);
    for (size_t j = 0; j < rk; ++j) fc.h0_coords[j] = fc.factor * c[j];
    return fc;
}

std::vector<Cyc> to_cyc(const IntVec& v) {
    std::vector<Cyc> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Cyc(v[i]);
    return out;
}

}  // namespace

TorusElement coroot(const MultiloopTorus& lt, const TorusRoot& gamma) {
    if (!gamma.real()) throw std::invalid_argument("null roots have no coroot");
    if (gamma.deg.size() != lt.nvars) throw std::invalid_argument("degree length mismatch");
    FiniteCoroot fc = finite_coroot(lt, to_cyc(gamma.alpha));

    TorusElement r;
    Vec hv(lt.g->dim());
    for (size_t j = 0; j < fc.h0_coords.size(); ++j) {
        const Vec& hj = lt.grading.h0[j];
        for (size_t i = 0; i < hv.size(); ++i) hv[i] += fc.h0_coords[j] * hj[i];
    }
    if (!vec_is_zero(hv)) r.loop.emplace(lt.zero_degree(), std::move(hv));
    std::vector<Cyc> row(lt.nvars);
    bool any = false;
    for (size_t i = 0; i < lt.nvars; ++i) {
        row[i] = fc.factor * Cyc(gamma.deg[i]);
        any = any || !row[i].is_zero();
    }
    if (any) r.central.terms.emplace(lt.zero_degree(), std::move(row));
    return r;
}

bool operator==(const TorusWeight& a, const TorusWeight& b) {
    return a.finite == b.finite && a.level == b.level && a.dval == b.dval;
}

TorusWeight root_weight(const MultiloopTorus& lt, const TorusRoot& gamma) {
    if (gamma.alpha.size() != lt.grading.h0.size() || gamma.deg.size() != lt.nvars)
        throw std::invalid_argument("root length mismatch");
    TorusWeight w;
    w.finite = to_cyc(gamma.alpha);
    w.level.assign(lt.nvars, Cyc(0));
    w.dval = to_cyc(gamma.deg);
    return w;
}

namespace {

void check_weight_shape(const MultiloopTorus& lt, const TorusWeight& w) {
    if (w.finite.size() != lt.grading.h0.size() || w.level.size() != lt.nvars ||
        w.dval.size() != lt.nvars)
        throw std::invalid_argument("weight component length mismatch");
}

}  // namespace

Cyc weight_eval(const MultiloopTorus& lt, const TorusWeight& w, const TorusElement& h) {
    check_weight_shape(lt, w);
    Cyc val(0);
    for (const auto& [k, x] : h.loop) {
        if (!deg_is_zero(k))
            throw std::invalid_argument("weights only evaluate on the extended Cartan");
        auto c = solve(lt.h0_cols, x);
        if (!c) throw std::invalid_argument("loop part lies outside the fixed Cartan");
        for (size_t j = 0; j < w.finite.size(); ++j) val += w.finite[j] * (*c)[j];
    }
    for (const auto& [r, row] : h.central.terms) {
        if (!deg_is_zero(r))
            throw std::invalid_argument("weights only evaluate on the extended Cartan");
        for (size_t i = 0; i < lt.nvars && i < row.size(); ++i) val += w.level[i] * row[i];
    }
    for (size_t i = 0; i < h.der.size(); ++i) val += w.dval[i] * h.der[i];
    return val;
}

TorusWeight weyl_reflect(const MultiloopTorus& lt, const TorusRoot& gamma,
                         const TorusWeight& lambda) {
    check_weight_shape(lt, lambda);
    Cyc p = weight_eval(lt, lambda, coroot(lt, gamma));
    TorusWeight r = lambda;
    for (size_t j = 0; j < r.finite.size(); ++j) r.finite[j] -= p * Cyc(gamma.alpha[j]);
    for (size_t i = 0; i < r.dval.size(); ++i) r.dval[i] -= p * Cyc(gamma.deg[i]);
    return r;
}

TorusWeight weyl_translate(const MultiloopTorus& lt, size_t j, const IntVec& alpha,
                           const TorusWeight& mu) {
    check_weight_shape(lt, mu);
    if (j >= lt.nvars) throw std::invalid_argument("translation direction out of range");
    if (!mu.level[j].is_zero())
        throw std::invalid_argument("translation requires level zero in its direction");
    TorusWeight r = mu;
    r.dval[j] -= coroot_pairing(lt, mu.finite, alpha);
    return r;
}

Cyc coroot_pairing(const MultiloopTorus& lt, const std::vector<Cyc>& mu, const IntVec& alpha) {
    FiniteCoroot fc = finite_coroot(lt, to_cyc(alpha));
    if (mu.size() != fc.h0_coords.size())
        throw std::invalid_argument("finite weight length mismatch");
    Cyc p(0);
    for (size_t i = 0; i < mu.size(); ++i) p += mu[i] * fc.h0_coords[i];
    return p;
}

namespace {

IntVec imatvec(const std::vector<std::vector<long>>& m, const IntVec& v) {
    IntVec out(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

}  // namespace

TorusElement apply_coordinates(const CoordinateChange& cc, const TorusElement& a) {
    const size_t n = cc.fwd.size();
    TorusElement r;
    for (const auto& [k, x] : a.loop) acc_loop(r.loop, imatvec(cc.fwd, k), x);
    for (const auto& [rd, row] : a.central.terms) {
        std::vector<Cyc>& dst = central_row(r.central, imatvec(cc.fwd, rd), n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (cc.fwd[i][j] != 0) dst[i] += Cyc(cc.fwd[i][j]) * row[j];
    }
    if (!a.der.empty()) {
        r.der.assign(n, Cyc(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (cc.inv[j][i] != 0) r.der[i] += Cyc(cc.inv[j][i]) * a.der[j];
    }
    reduce_central(r.central);
    tidy(r);
    return r;
}

CoordinateChange change_of_coordinates(const MultiloopTorus& lt,
                                       const std::vector<std::vector<long>>& b) {
    const size_t n = lt.nvars;
    if (b.size() != n) throw std::invalid_argument("coordinate matrix rank mismatch");
    for (const auto& row : b)
        if (row.size() != n) throw std::invalid_argument("coordinate matrix not square");

    // B lies in GL(n, Z) exactly when it has an integer inverse.
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = Cyc(b[i][j]);
    std::vector<std::vector<long>> inv(n, std::vector<long>(n, 0));
    for (size_t j = 0; j < n; ++j) {
        Vec e(n);
        e[j] = Cyc(1);
        auto col = solve(m, e);
        if (!col) throw std::invalid_argument("coordinate matrix is singular");
        for (size_t i = 0; i < n; ++i) {
            Rat r = (*col)[i].as_rational();
            if (r.get_den() != 1)
                throw std::invalid_argument("coordinate matrix is not unimodular");
            inv[i][j] = r.get_num().get_si();
        }
    }
    CoordinateChange cc{b, inv};

    // Sampled bracket preservation: loop vectors from every graded piece at
    // two degrees each, central symbols at 0 and at the first lattice point,
    // and all derivations. The relabeled degrees describe the image torus,
    // so the unchecked bracket is used on the transformed side.
    std::vector<TorusElement> samples;
    IntVec mvec(lt.orders.begin(), lt.orders.end());
    for (size_t c = 0; c < lt.grading.classes.size(); ++c) {
        const auto& basis = lt.grading.piece_basis[c];
        if (basis.empty()) continue;
        samples.push_back(loop_element(lt, basis.front(), lt.grading.classes[c]));
        samples.push_back(loop_element(lt, basis.back(), add_deg(lt.grading.classes[c], mvec)));
    }
    for (size_t i = 0; i < n; ++i) {
        samples.push_back(central_element(lt, lt.zero_degree(), i));
        samples.push_back(central_element(lt, mvec, i));
        samples.push_back(derivation_element(lt, i));
    }
    for (const auto& x : samples)
        for (const auto& y : samples) {
            TorusElement lhs = apply_coordinates(cc, bracket_core(lt, x, y));
            TorusElement rhs = bracket_core(lt, apply_coordinates(cc, x), apply_coordinates(cc, y));
            if (!(lhs == rhs))
                throw std::logic_error("coordinate change failed to preserve the bracket");
        }
    return cc;
}

}  // namespace lt
