#include "lt/hwmodule.hpp"

#include <algorithm>
#include <stdexcept>

namespace lt {

namespace {

struct Block {
    size_t dim = 0;
    IntVec mu;                       // omega coordinates of this weight
    std::vector<std::pair<int, size_t>> tags;  // basis vector = f_j (parent p)
    Mat gram;                        // contravariant form on the chosen basis
    std::vector<Mat> e_to;           // per i: coords over block(k - e_i), dim(k-e_i) x dim
    std::vector<Mat> f_from;         // per j: dim x dim(k - e_j)
};

long vec_height(const IntVec& k) {
    long h = 0;
    for (long v : k) h += v;
    return h;
}

}  // namespace

GeneratorRep build_generator_rep(const RootSystem& rs, const IntVec& lambda) {
    const size_t l = static_cast<size_t>(rs.rank());
    if (lambda.size() != l) throw std::invalid_argument("weight rank mismatch");
    for (long v : lambda)
        if (v < 0) throw std::invalid_argument("highest weight must be dominant integral");

    // Descent box containing all weights of V(lambda).
    IntVec lowest = rs.antidominant(lambda);
    IntVec diff(l);
    for (size_t i = 0; i < l; ++i) diff[i] = lambda[i] - lowest[i];
    std::vector<Rat> kmax_rat = rs.weight_to_root_coords(diff);
    IntVec kmax(l);
    for (size_t i = 0; i < l; ++i) kmax[i] = rat_to_long(kmax_rat[i]);

    std::vector<IntVec> box;
    IntVec k(l, 0);
    for (;;) {
        box.push_back(k);
        size_t pos = 0;
        while (pos < l && k[pos] == kmax[pos]) k[pos++] = 0;
        if (pos == l) break;
        ++k[pos];
    }
    std::sort(box.begin(), box.end(), [](const IntVec& x, const IntVec& y) {
        long hx = vec_height(x), hy = vec_height(y);
        if (hx != hy) return hx < hy;
        return x < y;
    });

    const auto& a = rs.cartan();
    auto omega_of = [&](const IntVec& kk) {
        IntVec mu(l);
        for (size_t i = 0; i < l; ++i) {
            long v = lambda[i];
            for (size_t j = 0; j < l; ++j) v -= a[i][j] * kk[j];
            mu[i] = v;
        }
        return mu;
    };

    std::map<IntVec, Block> blocks;
    {
        Block top;
        top.dim = 1;
        top.mu = lambda;
        top.gram = Mat(1, 1);
        top.gram.at(0, 0) = Cyc(1);
        top.e_to.assign(l, Mat(0, 1));
        top.f_from.assign(l, Mat(1, 0));
        blocks[IntVec(l, 0)] = std::move(top);
    }

    auto block_dim = [&](const IntVec& kk) -> size_t {
        auto it = blocks.find(kk);
        return it == blocks.end() ? 0 : it->second.dim;
    };

    for (const IntVec& kk : box) {
        if (vec_height(kk) == 0) continue;
        // Candidate vectors f_j u_p over the already-built lower blocks.
        std::vector<std::pair<int, size_t>> cand;
        for (size_t j = 0; j < l; ++j) {
            if (kk[j] == 0) continue;
            IntVec down = kk;
            --down[j];
            for (size_t p = 0; p < block_dim(down); ++p)
                cand.emplace_back(static_cast<int>(j), p);
        }
        if (cand.empty()) continue;
        const size_t nc = cand.size();

        // e_i images of candidates: e_i f_j u = f_j e_i u + delta_ij (mu_parent)_i u.
        std::vector<Mat> ei_cand(l);
        for (size_t i = 0; i < l; ++i) {
            IntVec target = kk;
            --target[i];
            bool target_ok = target[i] >= 0;
            size_t tdim = target_ok ? block_dim(target) : 0;
            Mat m(tdim, nc);
            if (tdim != 0) {
                for (size_t t = 0; t < nc; ++t) {
                    auto [j, p] = cand[t];
                    IntVec down = kk;
                    --down[static_cast<size_t>(j)];
                    const Block& parent = blocks.at(down);
                    // f_j (e_i u_p): e_i u_p lives over down - e_i, then apply f_j.
                    IntVec down_i = down;
                    --down_i[i];
                    if (down_i[i] >= 0 && block_dim(down_i) > 0) {
                        const Mat& ei = parent.e_to[i];  // dim(down-e_i) x dim(down)
                        const Mat& fj = blocks.at(target).f_from[static_cast<size_t>(j)];
                        for (size_t r = 0; r < tdim; ++r) {
                            Cyc s;
                            for (size_t q = 0; q < ei.rows(); ++q)
                                if (!ei.at(q, p).is_zero() && !fj.at(r, q).is_zero())
                                    s = s + fj.at(r, q) * ei.at(q, p);
                            m.at(r, t) = s;
                        }
                    }
                    if (static_cast<size_t>(j) == i) {
                        long mui = parent.mu[i];
                        if (mui != 0) m.at(p, t) = m.at(p, t) + Cyc(mui);
                    }
                }
            }
            ei_cand[i] = std::move(m);
        }

        // Gram matrix of candidates: B(f_j u_p, c_s) = row p of gram(k-e_j) times e_j c_s.
        Mat g(nc, nc);
        for (size_t t = 0; t < nc; ++t) {
            auto [j, p] = cand[t];
            IntVec down = kk;
            --down[static_cast<size_t>(j)];
            const Block& parent = blocks.at(down);
            const Mat& ej = ei_cand[static_cast<size_t>(j)];  // dim(down) x nc
            for (size_t s = 0; s < nc; ++s) {
                Cyc sum;
                for (size_t q = 0; q < parent.dim; ++q)
                    if (!parent.gram.at(p, q).is_zero() && !ej.at(q, s).is_zero())
                        sum = sum + parent.gram.at(p, q) * ej.at(q, s);
                g.at(t, s) = sum;
            }
        }

        // Greedy principal-submatrix selection; the form is positive semidefinite
        // on the candidate span, so singleton extension reaches full rank.
        Mat gcopy = g;
        size_t r = rank(gcopy);
        if (r == 0) continue;
        std::vector<size_t> sel;
        for (size_t t = 0; t < nc && sel.size() < r; ++t) {
            std::vector<size_t> trial = sel;
            trial.push_back(t);
            Mat sub(trial.size(), trial.size());
            for (size_t x = 0; x < trial.size(); ++x)
                for (size_t y = 0; y < trial.size(); ++y) sub.at(x, y) = g.at(trial[x], trial[y]);
            if (rank(sub) == trial.size()) sel = std::move(trial);
        }
        if (sel.size() != r) throw std::logic_error("Gram selection failed to reach full rank");

        // Coordinates of every candidate in the selected basis: G[sel,sel] x = G[sel,t].
        Mat gsel(r, r);
        for (size_t x = 0; x < r; ++x)
            for (size_t y = 0; y < r; ++y) gsel.at(x, y) = g.at(sel[x], sel[y]);
        Mat coords(r, nc);
        for (size_t t = 0; t < nc; ++t) {
            Vec rhs(r);
            for (size_t x = 0; x < r; ++x) rhs[x] = g.at(sel[x], t);
            auto x = solve(gsel, rhs);
            if (!x) throw std::logic_error("contravariant form is degenerate on chosen basis");
            for (size_t q = 0; q < r; ++q) coords.at(q, t) = (*x)[q];
        }

        Block blk;
        blk.dim = r;
        blk.mu = omega_of(kk);
        blk.gram = std::move(gsel);
        for (size_t q = 0; q < r; ++q) blk.tags.push_back(cand[sel[q]]);
        blk.e_to.resize(l);
        for (size_t i = 0; i < l; ++i) {
            const Mat& ei = ei_cand[i];
            Mat m(ei.rows(), r);
            for (size_t q = 0; q < r; ++q)
                for (size_t row = 0; row < ei.rows(); ++row) m.at(row, q) = ei.at(row, sel[q]);
            blk.e_to[i] = std::move(m);
        }
        blk.f_from.resize(l);
        for (size_t j = 0; j < l; ++j) {
            IntVec down = kk;
            --down[j];
            size_t pdim = down[j] >= 0 ? block_dim(down) : 0;
            Mat m(r, pdim);
            for (size_t t = 0; t < nc; ++t) {
                if (cand[t].first != static_cast<int>(j)) continue;
                size_t p = cand[t].second;
                for (size_t q = 0; q < r; ++q) m.at(q, p) = coords.at(q, t);
            }
            blk.f_from[j] = std::move(m);
        }
        blocks[kk] = std::move(blk);
    }

    // Assemble the global representation.
    GeneratorRep rep;
    rep.lambda = lambda;
    std::map<IntVec, size_t> offset;
    for (const IntVec& kk : box) {
        auto it = blocks.find(kk);
        if (it == blocks.end() || it->second.dim == 0) continue;
        offset[kk] = rep.dim;
        std::vector<size_t> idx;
        for (size_t q = 0; q < it->second.dim; ++q) {
            idx.push_back(rep.dim + q);
            rep.weights.push_back(it->second.mu);
        }
        rep.weight_spaces[kk] = std::move(idx);
        rep.dim += it->second.dim;
    }
    rep.e.assign(l, Mat(rep.dim, rep.dim));
    rep.f.assign(l, Mat(rep.dim, rep.dim));
    rep.h.assign(l, Mat(rep.dim, rep.dim));
    for (const auto& [kk, blk] : blocks) {
        if (blk.dim == 0) continue;
        size_t off = offset.at(kk);
        for (size_t i = 0; i < l; ++i) {
            for (size_t q = 0; q < blk.dim; ++q)
                rep.h[i].at(off + q, off + q) = Cyc(blk.mu[i]);
            // e_i: block(k) -> block(k - e_i)
            IntVec up = kk;
            --up[i];
            if (up[i] >= 0 && offset.count(up)) {
                size_t toff = offset.at(up);
                const Mat& m = blk.e_to[i];
                for (size_t row = 0; row < m.rows(); ++row)
                    for (size_t col = 0; col < m.cols(); ++col)
                        if (!m.at(row, col).is_zero())
                            rep.e[i].at(toff + row, off + col) = m.at(row, col);
            }
            // f_i: block(k - e_i) -> block(k)
            if (up[i] >= 0 && offset.count(up)) {
                size_t poff = offset.at(up);
                const Mat& m = blk.f_from[i];
                for (size_t row = 0; row < m.rows(); ++row)
                    for (size_t col = 0; col < m.cols(); ++col)
                        if (!m.at(row, col).is_zero())
                            rep.f[i].at(off + row, poff + col) = m.at(row, col);
            }
        }
    }
    return rep;
}

}  // namespace lt
