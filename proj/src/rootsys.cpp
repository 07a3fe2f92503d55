#include "lt/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <string>

namespace lt {

namespace {

std::vector<std::vector<long>> empty_matrix(int rank) {
    std::vector<std::vector<long>> a(rank, std::vector<long>(rank, 0));
    for (int i = 0; i < rank; ++i) a[i][i] = 2;
    return a;
}

void set_edge(std::vector<std::vector<long>>& a, int i, int j, long aij = -1, long aji = -1) {
    a[i][j] = aij;
    a[j][i] = aji;
}

// Gauss-Jordan inverse of an integer matrix over the rationals.
std::vector<std::vector<Rat>> rat_inverse(const std::vector<std::vector<long>>& a) {
    const size_t n = a.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = Rat(a[i][j]);
        m[i][n + i] = Rat(1);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("Cartan matrix is singular");
        std::swap(m[piv], m[col]);
        Rat inv = 1 / m[col][col];
        for (size_t j = 0; j < 2 * n; ++j) m[col][j] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
    return out;
}

bool match_perm(const std::vector<std::vector<long>>& given,
                const std::vector<std::vector<long>>& std_a, std::vector<int>& perm,
                std::vector<char>& used, size_t depth) {
    const size_t l = given.size();
    if (depth == l) return true;
    for (size_t cand = 0; cand < l; ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (size_t prev = 0; ok && prev < depth; ++prev) {
            if (std_a[static_cast<size_t>(perm[prev])][cand] != given[prev][depth] ||
                std_a[cand][static_cast<size_t>(perm[prev])] != given[depth][prev])
                ok = false;
        }
        if (!ok) continue;
        perm[depth] = static_cast<int>(cand);
        used[cand] = 1;
        if (match_perm(given, std_a, perm, used, depth + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

}  // namespace

CartanMatrix cartan_matrix(char type, int rank) {
    auto fail = [&] {
        throw std::invalid_argument(std::string("no simple type ") + type + std::to_string(rank));
    };
    CartanMatrix cm;
    cm.type = type;
    cm.rank = rank;
    if (rank < 1) fail();
    auto a = empty_matrix(rank);
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) set_edge(a, i, i + 1);
    };
    switch (type) {
        case 'A':
            chain(rank);
            break;
        case 'B':  // last node short
            if (rank < 2) fail();
            chain(rank);
            set_edge(a, rank - 2, rank - 1, -1, -2);
            break;
        case 'C':  // last node long
            if (rank < 2) fail();
            chain(rank);
            set_edge(a, rank - 2, rank - 1, -2, -1);
            break;
        case 'D':  // fork at node rank-3
            if (rank < 3) fail();
            chain(rank - 1);
            set_edge(a, rank - 3, rank - 1);
            break;
        case 'E':
            if (rank < 6 || rank > 8) fail();
            // chain 0-2-3-4-5(-6)(-7) with node 1 attached to node 3
            set_edge(a, 0, 2);
            for (int i = 2; i + 1 < rank; ++i) set_edge(a, i, i + 1);
            set_edge(a, 1, 3);
            break;
        case 'F':  // nodes 0,1 long; 2,3 short
            if (rank != 4) fail();
            chain(4);
            set_edge(a, 1, 2, -1, -2);
            break;
        case 'G':  // node 0 long, node 1 short
            if (rank != 2) fail();
            set_edge(a, 0, 1, -1, -3);
            break;
        default:
            fail();
    }
    cm.a = std::move(a);
    return cm;
}

RootSystem::RootSystem(std::vector<std::vector<long>> cartan) : a_(std::move(cartan)) {
    validate_and_symmetrize();
    ainv_ = rat_inverse(a_);
    generate_roots();
}

void RootSystem::validate_and_symmetrize() {
    const size_t l = a_.size();
    if (l == 0) throw std::invalid_argument("empty Cartan matrix");
    for (size_t i = 0; i < l; ++i) {
        if (a_[i].size() != l) throw std::invalid_argument("Cartan matrix is not square");
        if (a_[i][i] != 2) throw std::invalid_argument("Cartan diagonal entry is not 2");
        for (size_t j = 0; j < l; ++j) {
            if (i == j) continue;
            if (a_[i][j] > 0) throw std::invalid_argument("positive off-diagonal Cartan entry");
            if ((a_[i][j] == 0) != (a_[j][i] == 0))
                throw std::invalid_argument("asymmetric zero pattern in Cartan matrix");
        }
    }
    // d_i a_ij = d_j a_ji propagated over the diagram; requires connectedness.
    d_.assign(l, Rat(0));
    d_[0] = 1;
    std::queue<size_t> work;
    work.push(0);
    size_t seen = 1;
    while (!work.empty()) {
        size_t i = work.front();
        work.pop();
        for (size_t j = 0; j < l; ++j) {
            if (j == i || a_[i][j] == 0) continue;
            Rat dj = d_[i] * rat(a_[i][j], a_[j][i]);
            if (d_[j] == 0) {
                d_[j] = dj;
                ++seen;
                work.push(j);
            } else if (d_[j] != dj) {
                throw std::invalid_argument("Cartan matrix is not symmetrizable");
            }
        }
    }
    if (seen != l) throw std::invalid_argument("Cartan matrix is not connected");
    Rat dmax = d_[0];
    for (const Rat& d : d_) dmax = std::max(dmax, d);
    for (Rat& d : d_) d /= dmax;
}

void RootSystem::generate_roots() {
    const size_t l = a_.size();
    std::set<IntVec> found;
    std::vector<IntVec> frontier;
    for (size_t i = 0; i < l; ++i) {
        IntVec e(l, 0);
        e[i] = 1;
        found.insert(e);
        frontier.push_back(e);
    }
    long h = 1;
    const long height_cap = 200;
    while (!frontier.empty()) {
        if (++h > height_cap)
            throw std::invalid_argument("root generation did not terminate; not a finite type");
        std::vector<IntVec> next;
        for (const IntVec& c : frontier) {
            for (size_t i = 0; i < l; ++i) {
                // beta + alpha_i is a root iff the alpha_i-string through beta
                // extends upward: p - <beta, alpha_i^vee> > 0.
                long p = 0;
                IntVec down = c;
                for (;;) {
                    down[i] -= 1;
                    if (!found.count(down)) break;
                    ++p;
                }
                long pairing = 0;
                for (size_t j = 0; j < l; ++j) pairing += a_[i][j] * c[j];
                if (p - pairing <= 0) continue;
                IntVec up = c;
                up[i] += 1;
                if (found.insert(up).second) next.push_back(up);
            }
        }
        frontier = std::move(next);
    }
    pos_.assign(found.begin(), found.end());
    std::sort(pos_.begin(), pos_.end(), [this](const IntVec& x, const IntVec& y) {
        long hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        return x < y;
    });
    for (size_t i = 0; i < pos_.size(); ++i) index_[pos_[i]] = i;
    theta_ = pos_.back();
    if (pos_.size() > 1 && height(pos_[pos_.size() - 2]) == height(theta_))
        throw std::invalid_argument("no unique highest root; Cartan matrix is not simple");
}

long RootSystem::height(const IntVec& root) const {
    long h = 0;
    for (long c : root) h += c;
    return h;
}

bool RootSystem::is_positive_root(const IntVec& c) const { return index_.count(c) != 0; }

bool RootSystem::is_root(const IntVec& c) const {
    if (index_.count(c)) return true;
    IntVec neg(c.size());
    for (size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
    return index_.count(neg) != 0;
}

size_t RootSystem::root_index(const IntVec& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw std::out_of_range("not a positive root");
    return it->second;
}

long RootSystem::string_down(const IntVec& beta, const IntVec& alpha) const {
    long k = 0;
    IntVec cur = beta;
    for (;;) {
        for (size_t i = 0; i < cur.size(); ++i) cur[i] -= alpha[i];
        bool zero = std::all_of(cur.begin(), cur.end(), [](long v) { return v == 0; });
        if (zero || !is_root(cur)) break;
        ++k;
    }
    return k;
}

long RootSystem::pair_with_coroot(const IntVec& root_coords, int i) const {
    long s = 0;
    for (size_t j = 0; j < a_.size(); ++j) s += a_[i][j] * root_coords[j];
    return s;
}

IntVec RootSystem::root_to_weight(const IntVec& root_coords) const {
    IntVec m(a_.size());
    for (size_t i = 0; i < a_.size(); ++i) m[i] = pair_with_coroot(root_coords, static_cast<int>(i));
    return m;
}

std::vector<Rat> RootSystem::weight_to_root_coords(const IntVec& m) const {
    const size_t l = a_.size();
    std::vector<Rat> c(l, Rat(0));
    for (size_t i = 0; i < l; ++i)
        for (size_t j = 0; j < l; ++j) c[i] += ainv_[i][j] * Rat(m[j]);
    return c;
}

Rat RootSystem::ip_roots(const IntVec& c1, const IntVec& c2) const {
    // (alpha_i, alpha_j) = d_i a_ij
    Rat s(0);
    for (size_t i = 0; i < a_.size(); ++i) {
        if (c1[i] == 0) continue;
        for (size_t j = 0; j < a_.size(); ++j)
            if (a_[i][j] != 0 && c2[j] != 0) s += Rat(c1[i]) * d_[i] * Rat(a_[i][j]) * Rat(c2[j]);
    }
    return s;
}

Rat RootSystem::ip_weight_root(const IntVec& m, const IntVec& root_coords) const {
    // (mu, alpha_j) = m_j d_j summed against the root coordinates
    Rat s(0);
    for (size_t j = 0; j < a_.size(); ++j)
        if (root_coords[j] != 0 && m[j] != 0) s += Rat(root_coords[j]) * Rat(m[j]) * d_[j];
    return s;
}

Rat RootSystem::ip_weights(const IntVec& m1, const IntVec& m2) const {
    std::vector<Rat> c2 = weight_to_root_coords(m2);
    Rat s(0);
    for (size_t j = 0; j < a_.size(); ++j)
        if (m1[j] != 0) s += c2[j] * Rat(m1[j]) * d_[j];
    return s;
}

bool RootSystem::is_long_root(const IntVec& c) const { return root_length_sq(c) == 2; }

IntVec RootSystem::reflect_weight(const IntVec& m, int i) const {
    // s_i(mu) = mu - m_i alpha_i; alpha_i has weight coordinates a[j][i]
    IntVec out = m;
    long mi = m[static_cast<size_t>(i)];
    if (mi == 0) return out;
    for (size_t j = 0; j < a_.size(); ++j) out[j] -= mi * a_[j][static_cast<size_t>(i)];
    return out;
}

IntVec RootSystem::antidominant(const IntVec& m) const {
    IntVec cur = m;
    for (long guard = 0; guard < 1000000; ++guard) {
        size_t i = 0;
        while (i < cur.size() && cur[i] <= 0) ++i;
        if (i == cur.size()) return cur;
        cur = reflect_weight(cur, static_cast<int>(i));
    }
    throw std::logic_error("antidominant descent did not terminate");
}

std::set<IntVec> RootSystem::weyl_orbit(const IntVec& m) const {
    std::set<IntVec> orbit{m};
    std::vector<IntVec> frontier{m};
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const IntVec& w : frontier)
            for (int i = 0; i < rank(); ++i) {
                IntVec r = reflect_weight(w, i);
                if (orbit.insert(r).second) next.push_back(r);
            }
        frontier = std::move(next);
    }
    return orbit;
}

bool RootSystem::is_dominant(const IntVec& m) const {
    return std::all_of(m.begin(), m.end(), [](long v) { return v >= 0; });
}

std::vector<std::pair<IntVec, IntVec>> RootSystem::dominant_weights_below(
    const IntVec& lambda) const {
    const size_t l = a_.size();
    IntVec lowest = antidominant(lambda);
    IntVec diff(l);
    for (size_t i = 0; i < l; ++i) diff[i] = lambda[i] - lowest[i];
    std::vector<Rat> kmax_rat = weight_to_root_coords(diff);
    IntVec kmax(l);
    for (size_t i = 0; i < l; ++i) {
        if (!rat_is_integer(kmax_rat[i]))
            throw std::invalid_argument("weight is not in the weight lattice");
        kmax[i] = rat_to_long(kmax_rat[i]);
    }
    std::vector<std::pair<IntVec, IntVec>> out;  // (mu, k)
    IntVec k(l, 0);
    for (;;) {
        IntVec mu(l);
        bool dom = true;
        for (size_t i = 0; i < l; ++i) {
            long v = lambda[i];
            for (size_t j = 0; j < l; ++j) v -= a_[i][j] * k[j];
            mu[i] = v;
            if (v < 0) dom = false;
        }
        if (dom) out.emplace_back(mu, k);
        size_t pos = 0;
        while (pos < l && k[pos] == kmax[pos]) k[pos++] = 0;
        if (pos == l) break;
        ++k[pos];
    }
    std::sort(out.begin(), out.end(), [this](const auto& x, const auto& y) {
        long hx = height(x.second), hy = height(y.second);
        if (hx != hy) return hx < hy;
        return x.second < y.second;
    });
    return out;
}

std::vector<IntVec> RootSystem::minimal_dominant_weights(const IntVec& lambda) const {
    auto below = dominant_weights_below(lambda);
    // nu <= mu iff k_nu - k_mu is componentwise nonnegative, so minimal weights
    // have componentwise-maximal descent coordinates.
    std::vector<IntVec> out;
    for (const auto& [mu, k] : below) {
        bool minimal = true;
        for (const auto& [nu, kn] : below) {
            if (kn == k) continue;
            bool dominates = true;
            for (size_t i = 0; i < k.size(); ++i)
                if (kn[i] < k[i]) {
                    dominates = false;
                    break;
                }
            if (dominates) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(mu);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rat RootSystem::weyl_dim(const IntVec& lambda) const {
    IntVec lam_rho(a_.size());
    IntVec rho(a_.size(), 1);
    for (size_t i = 0; i < a_.size(); ++i) lam_rho[i] = lambda[i] + 1;
    Rat dim(1);
    for (const IntVec& alpha : pos_) dim *= ip_weight_root(lam_rho, alpha) / ip_weight_root(rho, alpha);
    return dim;
}

std::map<IntVec, Rat> RootSystem::weight_multiplicities(const IntVec& lambda) const {
    const size_t l = a_.size();
    IntVec lowest = antidominant(lambda);
    IntVec diff(l);
    for (size_t i = 0; i < l; ++i) diff[i] = lambda[i] - lowest[i];
    std::vector<Rat> kmax_rat = weight_to_root_coords(diff);
    IntVec kmax(l);
    for (size_t i = 0; i < l; ++i) {
        if (!rat_is_integer(kmax_rat[i]))
            throw std::invalid_argument("weight is not in the weight lattice");
        kmax[i] = rat_to_long(kmax_rat[i]);
    }
    // All weights of V(lambda) have descent coordinates in the box [0, kmax].
    std::vector<IntVec> box;
    IntVec k(l, 0);
    for (;;) {
        box.push_back(k);
        size_t pos = 0;
        while (pos < l && k[pos] == kmax[pos]) k[pos++] = 0;
        if (pos == l) break;
        ++k[pos];
    }
    std::sort(box.begin(), box.end(), [this](const IntVec& x, const IntVec& y) {
        long hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        return x < y;
    });

    auto omega_of = [&](const IntVec& kk) {
        IntVec mu(l);
        for (size_t i = 0; i < l; ++i) {
            long v = lambda[i];
            for (size_t j = 0; j < l; ++j) v -= a_[i][j] * kk[j];
            mu[i] = v;
        }
        return mu;
    };

    std::map<IntVec, Rat> mult_by_k;
    mult_by_k[IntVec(l, 0)] = 1;
    for (const IntVec& kk : box) {
        if (height(kk) == 0) continue;
        IntVec mu = omega_of(kk);
        // Freudenthal: ((lam+rho,lam+rho)-(mu+rho,mu+rho)) m_mu
        //            = 2 sum_{alpha>0} sum_{j>=1} m_{mu+j alpha} (mu+j alpha, alpha)
        Rat num(0);
        for (const IntVec& alpha : pos_) {
            IntVec up = kk;
            IntVec mu_up = mu;
            IntVec alpha_w = root_to_weight(alpha);
            for (long j = 1;; ++j) {
                bool inside = true;
                for (size_t i = 0; i < l; ++i) {
                    up[i] -= alpha[i];
                    mu_up[i] += alpha_w[i];
                    if (up[i] < 0) inside = false;
                }
                if (!inside) break;
                auto it = mult_by_k.find(up);
                if (it == mult_by_k.end()) continue;
                num += it->second * ip_weight_root(mu_up, alpha);
                (void)j;
            }
        }
        num *= 2;
        // denominator = (lambda + mu + 2 rho, lambda - mu), with lambda - mu = sum k_i alpha_i
        Rat den(0);
        for (size_t j = 0; j < l; ++j)
            if (kk[j] != 0) den += Rat(kk[j]) * Rat(lambda[j] + mu[j] + 2) * d_[j];
        if (den == 0) continue;  // not a weight of V(lambda)
        Rat m = num / den;
        if (m != 0) mult_by_k[kk] = m;
    }

    std::map<IntVec, Rat> out;
    for (const auto& [kk, m] : mult_by_k)
        if (m != 0) out[omega_of(kk)] = m;
    return out;
}

std::optional<std::pair<CartanMatrix, std::vector<int>>> RootSystem::identify(
    const std::vector<std::vector<long>>& a) {
    const int l = static_cast<int>(a.size());
    std::vector<CartanMatrix> candidates;
    auto add = [&](char t) {
        try {
            candidates.push_back(cartan_matrix(t, l));
        } catch (const std::invalid_argument&) {
        }
    };
    for (char t : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) add(t);
    for (const CartanMatrix& cm : candidates) {
        std::vector<int> perm(a.size(), -1);
        std::vector<char> used(a.size(), 0);
        if (match_perm(a, cm.a, perm, used, 0)) return std::make_pair(cm, perm);
    }
    return std::nullopt;
}

}  // namespace lt
