#include "lt/liealg.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace lt {

namespace {

Mat commutator(const Mat& x, const Mat& y) { return x * y - y * x; }

void accumulate(Vec& out, const SparseVec& sv, const Cyc& scale) {
    for (const auto& [idx, c] : sv) out[idx] = out[idx] + scale * c;
}

}  // namespace

SimpleLieAlgebra::SimpleLieAlgebra(const CartanMatrix& cm) : type_(cm.type), rs_(cm.a) {
    const size_t l = static_cast<size_t>(rs_.rank());
    npos_ = rs_.positive_roots().size();
    dim_ = 2 * npos_ + l;
    const auto& pos = rs_.positive_roots();

    // Smallest fundamental module carries a faithful exact matrix model.
    IntVec best;
    Rat best_dim(0);
    for (size_t i = 0; i < l; ++i) {
        IntVec w(l, 0);
        w[i] = 1;
        Rat d = rs_.weyl_dim(w);
        if (best.empty() || d < best_dim) {
            best = w;
            best_dim = d;
        }
    }
    GeneratorRep rep = build_generator_rep(rs_, best);

    std::vector<Mat> ge(npos_), gf(npos_), gh(l);
    for (size_t i = 0; i < l; ++i) gh[i] = rep.h[i];
    trees_.assign(npos_, Tree{});
    for (size_t idx = 0; idx < npos_; ++idx) {
        const IntVec& gamma = pos[idx];
        if (rs_.height(gamma) == 1) {
            size_t node = 0;
            while (gamma[node] == 0) ++node;
            ge[idx] = rep.e[node];
            gf[idx] = rep.f[node];
            trees_[idx] = Tree{node, 0, 0};
        } else {
            size_t ai = npos_, bi = npos_;
            for (size_t cand = 0; cand < idx; ++cand) {
                IntVec beta(l);
                for (size_t i = 0; i < l; ++i) beta[i] = gamma[i] - pos[cand][i];
                if (rs_.is_positive_root(beta)) {
                    ai = cand;
                    bi = rs_.root_index(beta);
                    break;
                }
            }
            if (ai == npos_) throw std::logic_error("no extraspecial pair found");
            long p1 = rs_.string_down(pos[bi], pos[ai]) + 1;
            ge[idx] = commutator(ge[ai], ge[bi]).scaled(Cyc(rat(1, p1)));
            gf[idx] = commutator(gf[ai], gf[bi]).scaled(Cyc(rat(-1, p1)));
            if (ge[idx].is_zero() || gf[idx].is_zero())
                throw std::logic_error("root vector collapsed in the defining module");
            trees_[idx] = Tree{ai, bi, p1};
        }
    }

    auto mat_of = [&](size_t b) -> const Mat& {
        return b < npos_ ? ge[b] : b < 2 * npos_ ? gf[b - npos_] : gh[b - 2 * npos_];
    };
    std::vector<std::pair<size_t, size_t>> anchor(dim_);
    for (size_t b = 0; b < dim_; ++b) {
        const Mat& m = mat_of(b);
        bool found = false;
        for (size_t r = 0; r < m.rows() && !found; ++r)
            for (size_t c = 0; c < m.cols() && !found; ++c)
                if (!m.at(r, c).is_zero()) {
                    anchor[b] = {r, c};
                    found = true;
                }
        if (!found) throw std::logic_error("zero basis matrix in the defining module");
    }

    auto scalar_multiple = [&](const Mat& k, size_t target) {
        const Mat& m = mat_of(target);
        auto [r, c] = anchor[target];
        Cyc coef = k.at(r, c) * m.at(r, c).inverse();
        if (!(k == m.scaled(coef)))
            throw std::logic_error("bracket is not a multiple of the target root vector");
        if (!coef.is_rational() || !rat_is_integer(coef.as_rational()))
            throw std::logic_error("non-integer structure constant");
        return coef;
    };

    table_.assign(dim_, std::vector<SparseVec>(dim_));
    auto set_pair = [&](size_t x, size_t y, SparseVec v) {
        SparseVec neg;
        neg.reserve(v.size());
        for (const auto& [idx, c] : v) neg.emplace_back(idx, -c);
        table_[x][y] = std::move(v);
        table_[y][x] = std::move(neg);
    };

    for (size_t a = 0; a < npos_; ++a) {
        for (size_t b = a + 1; b < npos_; ++b) {
            IntVec sum(l);
            for (size_t i = 0; i < l; ++i) sum[i] = pos[a][i] + pos[b][i];
            Mat ke = commutator(ge[a], ge[b]);
            if (rs_.is_positive_root(sum)) {
                size_t t = rs_.root_index(sum);
                Cyc c = scalar_multiple(ke, e_index(t));
                set_pair(e_index(a), e_index(b), {{e_index(t), c}});
                Cyc cf = scalar_multiple(commutator(gf[a], gf[b]), f_index(t));
                set_pair(f_index(a), f_index(b), {{f_index(t), cf}});
            } else {
                if (!ke.is_zero() || !commutator(gf[a], gf[b]).is_zero())
                    throw std::logic_error("bracket outside the root lattice pattern");
            }
        }
    }
    for (size_t a = 0; a < npos_; ++a) {
        for (size_t b = 0; b < npos_; ++b) {
            Mat k = commutator(ge[a], gf[b]);
            if (a == b) {
                IntVec cv = coroot_coords(pos[a]);
                Mat expect(k.rows(), k.cols());
                for (size_t i = 0; i < l; ++i)
                    if (cv[i] != 0) expect = expect + gh[i].scaled(Cyc(cv[i]));
                if (!(k == expect)) throw std::logic_error("sl2 normalization failed");
                SparseVec v;
                for (size_t i = 0; i < l; ++i)
                    if (cv[i] != 0) v.emplace_back(h_index(i), Cyc(cv[i]));
                set_pair(e_index(a), f_index(a), std::move(v));
                continue;
            }
            IntVec delta(l);
            IntVec neg(l);
            for (size_t i = 0; i < l; ++i) {
                delta[i] = pos[a][i] - pos[b][i];
                neg[i] = -delta[i];
            }
            if (rs_.is_positive_root(delta)) {
                size_t t = rs_.root_index(delta);
                Cyc c = scalar_multiple(k, e_index(t));
                set_pair(e_index(a), f_index(b), {{e_index(t), c}});
            } else if (rs_.is_positive_root(neg)) {
                size_t t = rs_.root_index(neg);
                Cyc c = scalar_multiple(k, f_index(t));
                set_pair(e_index(a), f_index(b), {{f_index(t), c}});
            } else if (!k.is_zero()) {
                throw std::logic_error("bracket outside the root lattice pattern");
            }
        }
    }
    // h rows follow from the weight structure of the recursion.
    for (size_t i = 0; i < l; ++i) {
        for (size_t b = 0; b < npos_; ++b) {
            long pairing = rs_.pair_with_coroot(pos[b], static_cast<int>(i));
            if (pairing == 0) continue;
            set_pair(h_index(i), e_index(b), {{e_index(b), Cyc(pairing)}});
            set_pair(h_index(i), f_index(b), {{f_index(b), Cyc(-pairing)}});
        }
    }

    form_ = Mat(dim_, dim_);
    for (size_t idx = 0; idx < npos_; ++idx) {
        Cyc v(Rat(2) / rs_.root_length_sq(pos[idx]));
        form_.at(e_index(idx), f_index(idx)) = v;
        form_.at(f_index(idx), e_index(idx)) = v;
    }
    const auto& a = rs_.cartan();
    const auto& d = rs_.symmetrizer();
    for (size_t i = 0; i < l; ++i)
        for (size_t j = 0; j < l; ++j)
            if (a[i][j] != 0) form_.at(h_index(i), h_index(j)) = Cyc(Rat(a[i][j]) / d[j]);
}

std::pair<char, size_t> SimpleLieAlgebra::label_info(size_t basis_idx) const {
    if (basis_idx < npos_) return {'e', basis_idx};
    if (basis_idx < 2 * npos_) return {'f', basis_idx - npos_};
    return {'h', basis_idx - 2 * npos_};
}

std::string SimpleLieAlgebra::basis_label(size_t basis_idx) const {
    auto [kind, idx] = label_info(basis_idx);
    std::ostringstream os;
    os << kind;
    if (kind == 'h') {
        os << (idx + 1);
    } else {
        os << '[';
        const IntVec& root = rs_.positive_roots()[idx];
        for (size_t i = 0; i < root.size(); ++i) {
            if (i) os << ',';
            os << root[i];
        }
        os << ']';
    }
    return os.str();
}

IntVec SimpleLieAlgebra::basis_root(size_t basis_idx) const {
    auto [kind, idx] = label_info(basis_idx);
    IntVec zero(static_cast<size_t>(rs_.rank()), 0);
    if (kind == 'h') return zero;
    IntVec root = rs_.positive_roots()[idx];
    if (kind == 'f')
        for (long& v : root) v = -v;
    return root;
}

Vec SimpleLieAlgebra::basis_vector(size_t idx) const {
    Vec v(dim_);
    v[idx] = Cyc(1);
    return v;
}

Vec SimpleLieAlgebra::bracket(const Vec& x, const Vec& y) const {
    Vec out(dim_);
    for (size_t ix = 0; ix < dim_; ++ix) {
        if (x[ix].is_zero()) continue;
        for (size_t iy = 0; iy < dim_; ++iy) {
            if (y[iy].is_zero()) continue;
            const SparseVec& sv = table_[ix][iy];
            if (!sv.empty()) accumulate(out, sv, x[ix] * y[iy]);
        }
    }
    return out;
}

Mat SimpleLieAlgebra::ad(const Vec& x) const {
    Mat m(dim_, dim_);
    for (size_t ix = 0; ix < dim_; ++ix) {
        if (x[ix].is_zero()) continue;
        for (size_t j = 0; j < dim_; ++j)
            for (const auto& [t, c] : table_[ix][j]) m.at(t, j) = m.at(t, j) + x[ix] * c;
    }
    return m;
}

Cyc SimpleLieAlgebra::form(const Vec& x, const Vec& y) const {
    Cyc out;
    for (size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim_; ++j)
            if (!y[j].is_zero() && !form_.at(i, j).is_zero()) out = out + x[i] * form_.at(i, j) * y[j];
    }
    return out;
}

IntVec SimpleLieAlgebra::coroot_coords(const IntVec& root) const {
    const auto& d = rs_.symmetrizer();
    Rat dlen = rs_.root_length_sq(root) / 2;
    IntVec out(root.size());
    for (size_t i = 0; i < root.size(); ++i) {
        Rat v = Rat(root[i]) * d[i] / dlen;
        if (!rat_is_integer(v)) throw std::logic_error("coroot is not integral");
        out[i] = rat_to_long(v);
    }
    return out;
}

SimpleLieAlgebra build_simple_lie_algebra(char type, int rank) {
    return SimpleLieAlgebra(cartan_matrix(type, rank));
}

Mat diagram_automorphism(const SimpleLieAlgebra& g, const std::vector<int>& perm) {
    const RootSystem& rs = g.roots();
    const size_t l = static_cast<size_t>(rs.rank());
    if (perm.size() != l) throw std::invalid_argument("permutation rank mismatch");
    std::vector<char> hit(l, 0);
    for (int p : perm) {
        if (p < 0 || static_cast<size_t>(p) >= l || hit[static_cast<size_t>(p)])
            throw std::invalid_argument("not a permutation");
        hit[static_cast<size_t>(p)] = 1;
    }
    const auto& a = rs.cartan();
    for (size_t i = 0; i < l; ++i)
        for (size_t j = 0; j < l; ++j)
            if (a[static_cast<size_t>(perm[i])][static_cast<size_t>(perm[j])] != a[i][j])
                throw std::invalid_argument("permutation is not a diagram symmetry");

    const size_t npos = g.n_pos();
    std::vector<Vec> img_e(npos), img_f(npos);
    const auto& trees = g.trees();
    for (size_t idx = 0; idx < npos; ++idx) {
        if (trees[idx].scale == 0) {
            size_t node = trees[idx].alpha;
            IntVec target(l, 0);
            target[static_cast<size_t>(perm[node])] = 1;
            size_t t = rs.root_index(target);
            img_e[idx] = g.basis_vector(g.e_index(t));
            img_f[idx] = g.basis_vector(g.f_index(t));
        } else {
            Cyc s(rat(1, trees[idx].scale));
            img_e[idx] = s * g.bracket(img_e[trees[idx].alpha], img_e[trees[idx].beta]);
            img_f[idx] = (-s) * g.bracket(img_f[trees[idx].alpha], img_f[trees[idx].beta]);
        }
    }
    Mat sigma(g.dim(), g.dim());
    auto put_col = [&](size_t col, const Vec& v) {
        for (size_t r = 0; r < v.size(); ++r)
            if (!v[r].is_zero()) sigma.at(r, col) = v[r];
    };
    for (size_t idx = 0; idx < npos; ++idx) {
        put_col(g.e_index(idx), img_e[idx]);
        put_col(g.f_index(idx), img_f[idx]);
    }
    for (size_t i = 0; i < l; ++i)
        sigma.at(g.h_index(static_cast<size_t>(perm[i])), g.h_index(i)) = Cyc(1);
    return sigma;
}

namespace {

// Shared scan pattern: parallel over the first index, deterministic smallest
// violation wins.
template <typename Body>
std::optional<std::vector<size_t>> scan_violation(size_t n, Exec exec, const Body& body) {
    std::mutex mu;
    std::optional<std::vector<size_t>> worst;
    parallel_for(exec, n, [&](size_t x) {
        auto local = body(x);
        if (!local) return;
        std::lock_guard<std::mutex> lock(mu);
        if (!worst || *local < *worst) worst = local;
    });
    return worst;
}

}  // namespace

std::optional<std::pair<size_t, size_t>> automorphism_violation(const SimpleLieAlgebra& g,
                                                                const Mat& sigma, Exec exec) {
    const size_t n = g.dim();
    std::vector<Vec> cols(n);
    for (size_t j = 0; j < n; ++j) {
        Vec c(n);
        for (size_t r = 0; r < n; ++r) c[r] = sigma.at(r, j);
        cols[j] = std::move(c);
    }
    auto res = scan_violation(n, exec, [&](size_t x) -> std::optional<std::vector<size_t>> {
        for (size_t y = 0; y < n; ++y) {
            Vec lhs(n);
            for (const auto& [t, c] : g.bracket_basis(x, y)) {
                for (size_t r = 0; r < n; ++r)
                    if (!cols[t][r].is_zero()) lhs[r] = lhs[r] + c * cols[t][r];
            }
            Vec rhs = g.bracket(cols[x], cols[y]);
            if (!vec_is_zero(lhs - rhs)) return std::vector<size_t>{x, y};
        }
        return std::nullopt;
    });
    if (!res) return std::nullopt;
    return std::make_pair((*res)[0], (*res)[1]);
}

std::optional<std::array<size_t, 3>> jacobi_violation(const SimpleLieAlgebra& g, Exec exec) {
    const size_t n = g.dim();
    auto res = scan_violation(n, exec, [&](size_t x) -> std::optional<std::vector<size_t>> {
        Vec acc(n);
        for (size_t y = x + 1; y < n; ++y)
            for (size_t z = y + 1; z < n; ++z) {
                std::fill(acc.begin(), acc.end(), Cyc());
                for (const auto& [t, c] : g.bracket_basis(x, y)) accumulate(acc, g.bracket_basis(t, z), c);
                for (const auto& [t, c] : g.bracket_basis(y, z)) accumulate(acc, g.bracket_basis(t, x), c);
                for (const auto& [t, c] : g.bracket_basis(z, x)) accumulate(acc, g.bracket_basis(t, y), c);
                if (!vec_is_zero(acc)) return std::vector<size_t>{x, y, z};
            }
        return std::nullopt;
    });
    if (!res) return std::nullopt;
    return std::array<size_t, 3>{(*res)[0], (*res)[1], (*res)[2]};
}

std::optional<std::pair<size_t, size_t>> antisymmetry_violation(const SimpleLieAlgebra& g,
                                                                Exec exec) {
    const size_t n = g.dim();
    auto res = scan_violation(n, exec, [&](size_t x) -> std::optional<std::vector<size_t>> {
        Vec acc(n);
        for (size_t y = x; y < n; ++y) {
            std::fill(acc.begin(), acc.end(), Cyc());
            accumulate(acc, g.bracket_basis(x, y), Cyc(1));
            accumulate(acc, g.bracket_basis(y, x), Cyc(1));
            if (!vec_is_zero(acc)) return std::vector<size_t>{x, y};
        }
        return std::nullopt;
    });
    if (!res) return std::nullopt;
    return std::make_pair((*res)[0], (*res)[1]);
}

std::optional<std::array<size_t, 3>> form_associativity_violation(const SimpleLieAlgebra& g,
                                                                  Exec exec) {
    const size_t n = g.dim();
    const Mat& f = g.form_matrix();
    auto res = scan_violation(n, exec, [&](size_t x) -> std::optional<std::vector<size_t>> {
        for (size_t y = 0; y < n; ++y)
            for (size_t z = 0; z < n; ++z) {
                Cyc lhs, rhs;
                for (const auto& [t, c] : g.bracket_basis(x, y))
                    if (!f.at(t, z).is_zero()) lhs = lhs + c * f.at(t, z);
                for (const auto& [t, c] : g.bracket_basis(y, z))
                    if (!f.at(x, t).is_zero()) rhs = rhs + c * f.at(x, t);
                if (!(lhs == rhs)) return std::vector<size_t>{x, y, z};
            }
        return std::nullopt;
    });
    if (!res) return std::nullopt;
    return std::array<size_t, 3>{(*res)[0], (*res)[1], (*res)[2]};
}

std::vector<Mat> basis_action_matrices(const SimpleLieAlgebra& g, const GeneratorRep& rep) {
    if (rep.e.size() != static_cast<size_t>(g.rank()))
        throw std::invalid_argument("module rank does not match the algebra");
    const size_t npos = g.n_pos();
    std::vector<Mat> out(g.dim());
    const auto& trees = g.trees();
    for (size_t idx = 0; idx < npos; ++idx) {
        if (trees[idx].scale == 0) {
            out[g.e_index(idx)] = rep.e[trees[idx].alpha];
            out[g.f_index(idx)] = rep.f[trees[idx].alpha];
        } else {
            Cyc s(rat(1, trees[idx].scale));
            out[g.e_index(idx)] =
                commutator(out[g.e_index(trees[idx].alpha)], out[g.e_index(trees[idx].beta)])
                    .scaled(s);
            out[g.f_index(idx)] =
                commutator(out[g.f_index(trees[idx].alpha)], out[g.f_index(trees[idx].beta)])
                    .scaled(-s);
        }
    }
    for (size_t i = 0; i < static_cast<size_t>(g.rank()); ++i) out[g.h_index(i)] = rep.h[i];
    return out;
}

}  // namespace lt
