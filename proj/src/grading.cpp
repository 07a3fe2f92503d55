#include "lt/grading.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace lt {

namespace {

constexpr long kOrderCap = 360;   // automorphism order bound
constexpr long kClassCap = 4096;  // bound on the number of grading classes
constexpr long kWeightScan = 24;  // integer eigenvalue scan radius

std::string class_str(const IntVec& k) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < k.size(); ++i) {
        if (i) os << ',';
        os << k[i];
    }
    os << ')';
    return os.str();
}

Vec mat_column(const Mat& m, size_t j) {
    Vec v(m.rows());
    for (size_t r = 0; r < m.rows(); ++r) v[r] = m.at(r, j);
    return v;
}

// Matrix of ad(x) on a subspace, in coordinates of its echelon basis.
Mat restricted_ad(const BracketTable& g, const Vec& x, const Subspace& s) {
    const auto& basis = s.echelon_basis();
    Mat m(basis.size(), basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        auto coords = s.coordinates(g.bracket(x, basis[j]));
        if (!coords) throw std::logic_error("bracket leaves the subspace");
        for (size_t r = 0; r < basis.size(); ++r) m.at(r, j) = (*coords)[r];
    }
    return m;
}

bool all_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

// Splits a joint ad(h0)-stable span into integer weight spaces by scanning
// eigenvalues in [-kWeightScan, kWeightScan]; exactness is guaranteed by the
// completeness assertion at every level.
std::map<IntVec, std::vector<Vec>> weight_split(const BracketTable& g, const std::vector<Vec>& h0,
                                                const std::vector<Vec>& piece) {
    std::vector<std::pair<IntVec, std::vector<Vec>>> groups;
    groups.emplace_back(IntVec{}, piece);
    for (const Vec& t : h0) {
        std::vector<std::pair<IntVec, std::vector<Vec>>> next;
        for (auto& [tag, vecs] : groups) {
            if (vecs.empty()) continue;
            Subspace s(g.dim);
            for (const Vec& v : vecs) s.insert(v);
            Mat a = restricted_ad(g, t, s);
            size_t found = 0;
            for (long lam = -kWeightScan; lam <= kWeightScan; ++lam) {
                Mat shifted = a;
                for (size_t i = 0; i < a.rows(); ++i) shifted.at(i, i) -= Cyc(lam);
                auto ker = kernel(shifted);
                if (ker.empty()) continue;
                std::vector<Vec> lifted;
                lifted.reserve(ker.size());
                for (const Vec& kv : ker) {
                    Vec v(g.dim);
                    for (size_t r = 0; r < kv.size(); ++r)
                        if (!kv[r].is_zero()) v = v + kv[r] * s.echelon_basis()[r];
                    lifted.push_back(std::move(v));
                }
                found += ker.size();
                IntVec tg = tag;
                tg.push_back(lam);
                next.emplace_back(std::move(tg), std::move(lifted));
            }
            if (found != s.dim()) throw std::logic_error("integer eigenvalue scan incomplete");
        }
        groups = std::move(next);
    }
    std::map<IntVec, std::vector<Vec>> out;
    for (auto& [tag, vecs] : groups) {
        auto& slot = out[tag];
        for (Vec& v : vecs) slot.push_back(std::move(v));
    }
    return out;
}

// Joint-fixed vectors supported on the hinted toral block.
std::vector<Vec> fixed_cartan_candidate(const BracketTable& g, const AutomorphismTuple& s) {
    if (g.cartan_hint.empty()) return {};
    const size_t hn = g.cartan_hint.size();
    if (s.size() == 0) {
        std::vector<Vec> out;
        for (size_t c : g.cartan_hint) {
            Vec v(g.dim);
            v[c] = Cyc(1);
            out.push_back(std::move(v));
        }
        return out;
    }
    Mat m(s.size() * g.dim, hn);
    for (size_t c = 0; c < hn; ++c)
        for (size_t j = 0; j < s.size(); ++j)
            for (size_t r = 0; r < g.dim; ++r) {
                Cyc v = s.sigma[j].at(r, g.cartan_hint[c]);
                if (r == g.cartan_hint[c]) v -= Cyc(1);
                m.at(j * g.dim + r, c) = v;
            }
    std::vector<Vec> out;
    for (const Vec& coeff : kernel(m)) {
        Vec v(g.dim);
        for (size_t c = 0; c < hn; ++c)
            if (!coeff[c].is_zero()) v[g.cartan_hint[c]] = coeff[c];
        out.push_back(std::move(v));
    }
    return out;
}

bool is_self_centralizing(const BracketTable& g, const Subspace& s0, const std::vector<Vec>& h) {
    if (h.empty()) return s0.dim() == 0;
    for (size_t a = 0; a < h.size(); ++a) {
        if (!s0.contains(h[a])) return false;
        for (size_t b = a; b < h.size(); ++b)
            if (!vec_is_zero(g.bracket(h[a], h[b]))) return false;
    }
    const size_t d0 = s0.dim();
    Mat stacked(h.size() * d0, d0);
    for (size_t a = 0; a < h.size(); ++a) {
        Mat ad = restricted_ad(g, h[a], s0);
        for (size_t r = 0; r < d0; ++r)
            for (size_t c = 0; c < d0; ++c) stacked.at(a * d0 + r, c) = ad.at(r, c);
    }
    // The joint kernel always contains span(h); self-centralizing iff equal.
    return kernel(stacked).size() == h.size();
}

// A Cartan subalgebra of the fixed part: prefer the hinted fixed block, fall
// back to the centralizer of a regular element found by a seeded search.
std::vector<Vec> cartan_of_fixed(const BracketTable& g, const Subspace& s0,
                                 std::vector<Vec> candidate) {
    if (!candidate.empty() && is_self_centralizing(g, s0, candidate)) return candidate;
    std::mt19937_64 rng(0x5eed);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Vec x(g.dim);
        for (const Vec& b : s0.echelon_basis())
            x = x + Cyc(static_cast<long>(1 + rng() % 7)) * b;
        auto ker = kernel(restricted_ad(g, x, s0));
        std::vector<Vec> h;
        for (const Vec& kv : ker) {
            Vec v(g.dim);
            for (size_t r = 0; r < kv.size(); ++r)
                if (!kv[r].is_zero()) v = v + kv[r] * s0.echelon_basis()[r];
            h.push_back(std::move(v));
        }
        if (is_self_centralizing(g, s0, h)) return h;
    }
    return {};
}

}  // namespace

Vec BracketTable::bracket(const Vec& x, const Vec& y) const {
    Vec out(dim);
    for (size_t ix = 0; ix < dim; ++ix) {
        if (x[ix].is_zero()) continue;
        for (size_t iy = 0; iy < dim; ++iy) {
            if (y[iy].is_zero()) continue;
            for (const auto& [idx, c] : t[ix][iy]) out[idx] = out[idx] + x[ix] * y[iy] * c;
        }
    }
    return out;
}

BracketTable BracketTable::from(const SimpleLieAlgebra& g) {
    BracketTable b;
    b.dim = g.dim();
    b.t.assign(b.dim, std::vector<SparseVec>(b.dim));
    for (size_t i = 0; i < b.dim; ++i)
        for (size_t j = 0; j < b.dim; ++j) b.t[i][j] = g.bracket_basis(i, j);
    for (size_t i = 0; i < static_cast<size_t>(g.rank()); ++i)
        b.cartan_hint.push_back(g.h_index(i));
    return b;
}

BracketTable BracketTable::direct_sum(const BracketTable& a, const BracketTable& b) {
    BracketTable out;
    out.dim = a.dim + b.dim;
    out.t.assign(out.dim, std::vector<SparseVec>(out.dim));
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j) out.t[i][j] = a.t[i][j];
    for (size_t i = 0; i < b.dim; ++i)
        for (size_t j = 0; j < b.dim; ++j) {
            SparseVec sv = b.t[i][j];
            for (auto& [idx, c] : sv) idx += a.dim;
            out.t[a.dim + i][a.dim + j] = std::move(sv);
        }
    out.cartan_hint = a.cartan_hint;
    for (size_t c : b.cartan_hint) out.cartan_hint.push_back(c + a.dim);
    return out;
}

long AutomorphismTuple::order_product() const {
    long p = 1;
    for (long m : orders) p *= m;
    return p;
}

AutomorphismTuple make_automorphism_tuple(const BracketTable& g, const std::vector<Mat>& sigmas) {
    AutomorphismTuple out;
    const size_t d = g.dim;
    for (const Mat& sg : sigmas) {
        if (sg.rows() != d || sg.cols() != d)
            throw std::invalid_argument("automorphism matrix size mismatch");
        std::vector<Vec> cols(d);
        for (size_t j = 0; j < d; ++j) cols[j] = mat_column(sg, j);
        for (size_t x = 0; x < d; ++x)
            for (size_t y = x + 1; y < d; ++y) {
                Vec lhs(d);
                for (const auto& [idx, c] : g.t[x][y]) lhs = lhs + c * cols[idx];
                if (!vec_is_zero(lhs - g.bracket(cols[x], cols[y])))
                    throw std::invalid_argument("matrix does not preserve the bracket");
            }
        Mat id = Mat::identity(d);
        Mat pw = sg;
        long ord = 1;
        while (!(pw == id)) {
            pw = pw * sg;
            if (++ord > kOrderCap) throw std::invalid_argument("automorphism order too large");
        }
        out.sigma.push_back(sg);
        out.orders.push_back(ord);
    }
    for (size_t i = 0; i < out.sigma.size(); ++i)
        for (size_t j = i + 1; j < out.sigma.size(); ++j)
            if (!(out.sigma[i] * out.sigma[j] == out.sigma[j] * out.sigma[i]))
                throw std::invalid_argument("automorphisms do not commute");
    return out;
}

AutomorphismTuple make_automorphism_tuple(const SimpleLieAlgebra& g,
                                          const std::vector<Mat>& sigmas) {
    return make_automorphism_tuple(BracketTable::from(g), sigmas);
}

size_t GradedDecomposition::class_index(const IntVec& k) const {
    if (k.size() != orders.size()) throw std::invalid_argument("class rank mismatch");
    size_t idx = 0;
    for (size_t i = 0; i < orders.size(); ++i) {
        long r = ((k[i] % orders[i]) + orders[i]) % orders[i];
        idx = idx * static_cast<size_t>(orders[i]) + static_cast<size_t>(r);
    }
    return idx;
}

IntVec GradedDecomposition::class_sum(const IntVec& a, const IntVec& b) const {
    IntVec c(orders.size());
    for (size_t i = 0; i < orders.size(); ++i) c[i] = (a[i] + b[i]) % orders[i];
    return c;
}

GradedDecomposition eigenspace_grading(const BracketTable& g, const AutomorphismTuple& s) {
    GradedDecomposition gd;
    gd.orders = s.orders;
    const size_t n = s.size();
    long pcount = 1;
    long ncond = 1;
    for (long m : s.orders) {
        pcount *= m;
        ncond = std::lcm(ncond, m);
        if (pcount > kClassCap) throw std::invalid_argument("too many grading classes");
    }
    size_t total = 0;
    for (long idx = 0; idx < pcount; ++idx) {
        IntVec k(n);
        long rem = idx;
        for (size_t i = n; i-- > 0;) {
            k[i] = rem % s.orders[i];
            rem /= s.orders[i];
        }
        std::vector<Vec> basis;
        if (n == 0) {
            for (size_t j = 0; j < g.dim; ++j) {
                Vec v(g.dim);
                v[j] = Cyc(1);
                basis.push_back(std::move(v));
            }
        } else {
            std::vector<Cyc> evs;
            for (size_t i = 0; i < n; ++i)
                evs.push_back(Cyc::zeta(static_cast<unsigned>(ncond),
                                        (ncond / s.orders[i]) * k[i] % ncond));
            basis = simultaneous_eigenspace(s.sigma, evs);
        }
        total += basis.size();
        gd.classes.push_back(std::move(k));
        gd.piece_basis.push_back(std::move(basis));
    }
    if (total != g.dim) throw std::logic_error("grading dimensions do not sum to dim g");

    Subspace s0(g.dim);
    for (const Vec& v : gd.piece_basis[0]) s0.insert(v);
    gd.h0 = cartan_of_fixed(g, s0, fixed_cartan_candidate(g, s));
    gd.piece_weights.resize(gd.classes.size());
    if (!gd.h0.empty())
        for (size_t i = 0; i < gd.classes.size(); ++i)
            gd.piece_weights[i] = weight_split(g, gd.h0, gd.piece_basis[i]);
    return gd;
}

GradedDecomposition eigenspace_grading(const SimpleLieAlgebra& g, const AutomorphismTuple& s) {
    return eigenspace_grading(BracketTable::from(g), s);
}

ConditionMReport check_condition_m(const WeightMultiset& weights, bool irreducible,
                                   const std::set<IntVec>& delta_en) {
    size_t dim = 0;
    for (const auto& [w, m] : weights) dim += m;
    if (!irreducible) return {false, "module is not irreducible"};
    if (dim <= 1) return {false, "dimension is not greater than one"};
    for (const auto& [w, m] : weights) {
        if (all_zero(w)) continue;
        if (!delta_en.count(w))
            return {false, "weight " + class_str(w) + " lies outside the extended root set"};
    }
    std::ostringstream os;
    os << "irreducible of dimension " << dim << " with weights inside the extended root set";
    return {true, os.str()};
}

SimplicityReport simplicity_verdict(const BracketTable& g, const std::vector<Vec>& basis) {
    Subspace s0(g.dim);
    for (const Vec& v : basis) s0.insert(v);
    const size_t d = s0.dim();
    if (d == 0) return {false, true, "zero algebra"};

    std::vector<Mat> ad(d);
    for (size_t i = 0; i < d; ++i) ad[i] = restricted_ad(g, s0.echelon_basis()[i], s0);

    bool nonabelian = std::any_of(ad.begin(), ad.end(), [](const Mat& m) { return !m.is_zero(); });
    if (!nonabelian) return {false, true, "abelian"};

    Mat killing(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) {
            Cyc tr;
            for (size_t r = 0; r < d; ++r)
                for (size_t k = 0; k < d; ++k) {
                    const Cyc& a = ad[i].at(r, k);
                    if (!a.is_zero()) tr = tr + a * ad[j].at(k, r);
                }
            killing.at(i, j) = tr;
            killing.at(j, i) = tr;
        }
    if (rank(killing) < d) return {false, true, "Killing form is degenerate"};

    for (size_t i = 0; i < d; ++i) {
        Subspace ideal(d);
        Vec e(d);
        e[i] = Cyc(1);
        ideal.insert(e);
        for (size_t head = 0; head < ideal.spanning_set().size(); ++head) {
            Vec v = ideal.spanning_set()[head];
            for (size_t j = 0; j < d; ++j) ideal.insert(ad[j].apply(v));
        }
        if (ideal.dim() < d) {
            std::ostringstream os;
            os << "basis vector " << i << " generates a proper ideal of dimension "
               << ideal.dim();
            return {false, true, os.str()};
        }
    }

    // Centroid: matrices commuting with every ad. The identity always
    // qualifies, so reaching corank one early certifies a scalar centroid.
    Subspace rows(d * d);
    bool scalar_centroid = false;
    for (size_t i = 0; i < d && !scalar_centroid; ++i)
        for (size_t r = 0; r < d && !scalar_centroid; ++r)
            for (size_t c = 0; c < d && !scalar_centroid; ++c) {
                Vec row(d * d);
                bool any = false;
                for (size_t k = 0; k < d; ++k) {
                    const Cyc& a = ad[i].at(r, k);
                    if (!a.is_zero()) {
                        row[k * d + c] += a;
                        any = true;
                    }
                    const Cyc& b = ad[i].at(k, c);
                    if (!b.is_zero()) {
                        row[r * d + k] -= b;
                        any = true;
                    }
                }
                if (any && rows.insert(std::move(row)) && rows.dim() == d * d - 1)
                    scalar_centroid = true;
            }
    if (scalar_centroid || rows.dim() == d * d - 1)
        return {true, true, "simple: scalar centroid, nondegenerate Killing form"};
    std::ostringstream os;
    os << "centroid has dimension " << (d * d - rows.dim())
       << " > 1: several simple ideals or a nonsplit form";
    return {false, false, os.str()};
}

namespace {

FixedPointRootData derive_root_data(const GradedDecomposition& gd) {
    FixedPointRootData rd;
    rd.h0 = gd.h0;
    if (rd.h0.empty()) throw std::logic_error("no Cartan subalgebra found for the fixed part");
    const auto& w0 = gd.piece_weights[gd.class_index(IntVec(gd.orders.size(), 0))];
    for (const auto& [tag, vecs] : w0) {
        if (all_zero(tag)) continue;
        if (vecs.size() != 1)
            throw std::logic_error("root space of the fixed part is not one-dimensional");
        rd.roots.insert(tag);
    }
    auto lex_positive = [](const IntVec& v) {
        for (long x : v) {
            if (x > 0) return true;
            if (x < 0) return false;
        }
        return false;
    };
    std::vector<IntVec> positives;
    for (const IntVec& r : rd.roots)
        if (lex_positive(r)) positives.push_back(r);
    for (const IntVec& a : positives) {
        bool decomposable = false;
        for (const IntVec& b : positives) {
            IntVec c(a.size());
            for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
            if (c != b && !all_zero(c) && lex_positive(c) && rd.roots.count(c)) {
                decomposable = true;
                break;
            }
            if (c == b && rd.roots.count(c)) {  // a = 2b
                decomposable = true;
                break;
            }
        }
        if (!decomposable) rd.simple.push_back(a);
    }
    const size_t rank = rd.simple.size();
    if (rank != rd.h0.size())
        throw std::logic_error("rank of the fixed root system does not match its Cartan");

    std::vector<std::vector<long>> a(rank, std::vector<long>(rank, 2));
    for (size_t i = 0; i < rank; ++i)
        for (size_t j = 0; j < rank; ++j) {
            if (i == j) continue;
            long q = 0;
            IntVec probe = rd.simple[j];
            while (true) {
                for (size_t c = 0; c < probe.size(); ++c) probe[c] += rd.simple[i][c];
                if (!rd.roots.count(probe)) break;
                ++q;
            }
            a[i][j] = -q;
        }
    auto ident = RootSystem::identify(a);
    if (!ident) throw std::logic_error("fixed root system is not of finite type");
    rd.type = ident->first;
    const auto& perm = ident->second;

    rd.delta_en = rd.roots;
    if (rank == 1) {
        for (const IntVec& r : rd.roots) {
            IntVec dbl(r.size());
            for (size_t i = 0; i < r.size(); ++i) dbl[i] = 2 * r[i];
            rd.delta_en.insert(dbl);
        }
    } else if (rd.type.type == 'B') {
        RootSystem std_rs(rd.type.a);
        Mat simple_cols(rd.h0.size(), rank);
        for (size_t j = 0; j < rank; ++j)
            for (size_t r = 0; r < rd.h0.size(); ++r) simple_cols.at(r, j) = Cyc(rd.simple[j][r]);
        for (const IntVec& root : rd.roots) {
            Vec b(root.size());
            for (size_t i = 0; i < root.size(); ++i) b[i] = Cyc(root[i]);
            auto sol = solve(simple_cols, b);
            if (!sol) throw std::logic_error("root outside the simple-root lattice");
            IntVec coords(rank);
            for (size_t i = 0; i < rank; ++i) {
                const Cyc& c = (*sol)[i];
                if (!c.is_rational() || !rat_is_integer(c.as_rational()))
                    throw std::logic_error("non-integer root coordinates");
                coords[static_cast<size_t>(perm[i])] = rat_to_long(c.as_rational());
            }
            if (!std_rs.is_long_root(coords)) {
                IntVec dbl(root.size());
                for (size_t i = 0; i < root.size(); ++i) dbl[i] = 2 * root[i];
                rd.delta_en.insert(dbl);
            }
        }
    }
    for (const IntVec& r : rd.roots)
        if (lex_positive(r))
            for (const Vec& v : w0.at(r)) rd.raising.push_back(v);
    return rd;
}

}  // namespace

LieTorusReport check_lie_torus(const BracketTable& g, const AutomorphismTuple& s) {
    LieTorusReport rep;
    rep.grading = eigenspace_grading(g, s);
    const GradedDecomposition& gd = rep.grading;

    // Axiom 1: the fixed part is a simple Lie algebra.
    auto sv = simplicity_verdict(g, gd.piece_basis[0]);
    if (!sv.simple) {
        rep.failed_axiom = 1;
        rep.detail = "fixed part is not simple: " + sv.detail;
        return rep;
    }

    FixedPointRootData rd = derive_root_data(gd);

    // Axiom 2: each nonzero class splits as trivial + (zero or condition (M)).
    Subspace s0(g.dim);
    for (const Vec& v : gd.piece_basis[0]) s0.insert(v);
    for (size_t ci = 1; ci < gd.classes.size(); ++ci) {
        const auto& piece = gd.piece_basis[ci];
        if (piece.empty()) continue;
        Subspace sp(g.dim);
        for (const Vec& v : piece) sp.insert(v);
        const size_t dp = sp.dim();

        Mat stacked(s0.dim() * dp, dp);
        Subspace wsub(g.dim);
        for (size_t bi = 0; bi < s0.dim(); ++bi) {
            for (size_t j = 0; j < dp; ++j) {
                Vec w = g.bracket(s0.echelon_basis()[bi], sp.echelon_basis()[j]);
                auto coords = sp.coordinates(w);
                if (!coords) throw std::logic_error("grading bracket law violated");
                for (size_t r = 0; r < dp; ++r) stacked.at(bi * dp + r, j) = (*coords)[r];
                wsub.insert(std::move(w));
            }
        }
        const size_t trivial_dim = kernel(stacked).size();
        if (trivial_dim + wsub.dim() != dp) {
            rep.failed_axiom = 2;
            rep.detail = "class " + class_str(gd.classes[ci]) +
                         " does not split into a trivial and an effective part";
            return rep;
        }
        if (wsub.dim() == 0) continue;

        Mat sing(rd.raising.size() * g.dim, wsub.dim());
        for (size_t ri = 0; ri < rd.raising.size(); ++ri)
            for (size_t j = 0; j < wsub.dim(); ++j) {
                Vec w = g.bracket(rd.raising[ri], wsub.echelon_basis()[j]);
                for (size_t r = 0; r < g.dim; ++r) sing.at(ri * g.dim + r, j) = w[r];
            }
        const size_t components = kernel(sing).size();

        WeightMultiset wm;
        size_t counted = 0;
        for (const auto& [tag, vecs] : gd.piece_weights[ci]) {
            Subspace merged = wsub;
            size_t grown = 0;
            for (const Vec& v : vecs)
                if (merged.insert(v)) ++grown;
            size_t inter = vecs.size() - grown;
            if (inter) {
                wm[tag] = inter;
                counted += inter;
            }
        }
        if (counted != wsub.dim()) throw std::logic_error("effective part is not weight-stable");

        auto cm = check_condition_m(wm, components == 1, rd.delta_en);
        if (!cm.ok) {
            rep.failed_axiom = 2;
            rep.detail = "class " + class_str(gd.classes[ci]) + ": " + cm.detail;
            return rep;
        }
    }

    // Axiom 3: the generated group has order equal to the product of orders.
    const long expected = s.order_product();
    std::vector<Mat> elems;
    for (long idx = 0; idx < expected; ++idx) {
        IntVec k(s.size());
        long rem = idx;
        for (size_t i = s.size(); i-- > 0;) {
            k[i] = rem % s.orders[i];
            rem /= s.orders[i];
        }
        Mat m = Mat::identity(g.dim);
        for (size_t i = 0; i < s.size(); ++i)
            for (long p = 0; p < k[i]; ++p) m = m * s.sigma[i];
        if (std::none_of(elems.begin(), elems.end(), [&](const Mat& e) { return e == m; }))
            elems.push_back(std::move(m));
    }
    if (static_cast<long>(elems.size()) != expected) {
        rep.failed_axiom = 3;
        std::ostringstream os;
        os << "generated group has order " << elems.size() << ", expected " << expected;
        rep.detail = os.str();
        return rep;
    }

    rep.fixed = std::move(rd);
    rep.ok = true;
    rep.detail = "all axioms hold";

    std::set<IntVec> full_delta;
    rep.weight_spaces_thin = true;
    for (const auto& pw : gd.piece_weights)
        for (const auto& [tag, vecs] : pw) {
            if (all_zero(tag)) continue;
            full_delta.insert(tag);
            if (vecs.size() > 1) rep.weight_spaces_thin = false;
        }
    std::set<IntVec> en_nonzero;
    for (const IntVec& r : rep.fixed->delta_en)
        if (!all_zero(r)) en_nonzero.insert(r);
    rep.weights_match_prediction =
        full_delta == rep.fixed->roots || full_delta == en_nonzero;
    return rep;
}

LieTorusReport check_lie_torus(const SimpleLieAlgebra& g, const AutomorphismTuple& s) {
    return check_lie_torus(BracketTable::from(g), s);
}

}  // namespace lt
