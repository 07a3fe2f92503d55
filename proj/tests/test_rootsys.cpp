#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "lt/rootsys.hpp"

using namespace lt;

namespace {

size_t positive_root_count(char type, int rank) {
    RootSystem rs(cartan_matrix(type, rank).a);
    return rs.positive_roots().size();
}

Rat mult_total(const RootSystem& rs, const IntVec& lambda) {
    Rat total(0);
    for (const auto& [mu, m] : rs.weight_multiplicities(lambda)) total += m;
    return total;
}

}  // namespace

TEST_CASE("positive root counts match the classical formulas") {
    CHECK(positive_root_count('A', 1) == 1);
    CHECK(positive_root_count('A', 2) == 3);
    CHECK(positive_root_count('A', 3) == 6);
    CHECK(positive_root_count('A', 4) == 10);
    CHECK(positive_root_count('B', 2) == 4);
    CHECK(positive_root_count('B', 3) == 9);
    CHECK(positive_root_count('B', 4) == 16);
    CHECK(positive_root_count('C', 3) == 9);
    CHECK(positive_root_count('C', 4) == 16);
    CHECK(positive_root_count('D', 3) == 6);
    CHECK(positive_root_count('D', 4) == 12);
    CHECK(positive_root_count('D', 5) == 20);
    CHECK(positive_root_count('E', 6) == 36);
    CHECK(positive_root_count('E', 7) == 63);
    CHECK(positive_root_count('E', 8) == 120);
    CHECK(positive_root_count('F', 4) == 24);
    CHECK(positive_root_count('G', 2) == 6);
}

TEST_CASE("invalid Cartan data is rejected") {
    CHECK_THROWS_AS(cartan_matrix('B', 1), std::invalid_argument);
    CHECK_THROWS_AS(cartan_matrix('E', 9), std::invalid_argument);
    CHECK_THROWS_AS(cartan_matrix('H', 3), std::invalid_argument);
    // disconnected
    CHECK_THROWS_AS(RootSystem({{2, 0}, {0, 2}}), std::invalid_argument);
    // affine matrix generates infinitely many roots
    CHECK_THROWS_AS(RootSystem({{2, -2}, {-2, 2}}), std::invalid_argument);
}

TEST_CASE("highest roots and symmetrizers") {
    RootSystem a2(cartan_matrix('A', 2).a);
    CHECK(a2.highest_root() == IntVec{1, 1});
    CHECK(a2.symmetrizer() == std::vector<Rat>{Rat(1), Rat(1)});

    RootSystem b2(cartan_matrix('B', 2).a);
    CHECK(b2.highest_root() == IntVec{1, 2});
    CHECK(b2.symmetrizer() == std::vector<Rat>{Rat(1), rat(1, 2)});
    CHECK(b2.is_long_root({1, 0}));
    CHECK_FALSE(b2.is_long_root({0, 1}));
    CHECK(b2.root_length_sq({0, 1}) == 1);
    CHECK(b2.root_length_sq({1, 1}) == 1);
    CHECK(b2.root_length_sq({1, 2}) == 2);

    RootSystem c3(cartan_matrix('C', 3).a);
    CHECK(c3.highest_root() == IntVec{2, 2, 1});
    CHECK(c3.symmetrizer() == std::vector<Rat>{rat(1, 2), rat(1, 2), Rat(1)});

    RootSystem g2(cartan_matrix('G', 2).a);
    CHECK(g2.highest_root() == IntVec{2, 3});
    CHECK(g2.symmetrizer() == std::vector<Rat>{Rat(1), rat(1, 3)});
    CHECK(g2.root_length_sq(g2.highest_root()) == 2);

    RootSystem f4(cartan_matrix('F', 4).a);
    CHECK(f4.highest_root() == IntVec{2, 3, 4, 2});
    CHECK(f4.symmetrizer() == std::vector<Rat>{Rat(1), Rat(1), rat(1, 2), rat(1, 2)});
}

TEST_CASE("root strings and pairings") {
    RootSystem a2(cartan_matrix('A', 2).a);
    CHECK(a2.string_down({1, 1}, {1, 0}) == 1);
    CHECK(a2.string_down({1, 0}, {0, 1}) == 0);
    CHECK(a2.pair_with_coroot({1, 1}, 0) == 1);

    RootSystem b2(cartan_matrix('B', 2).a);
    CHECK(b2.string_down({1, 2}, {0, 1}) == 2);
    // crossing zero is not allowed: the string stops at the root itself
    CHECK(b2.string_down({0, 1}, {0, 1}) == 0);
    // string descending through negative roots: alpha_1 - (alpha_1+alpha_2) = -alpha_2,
    // alpha_1 - 2(alpha_1+alpha_2) = -theta
    CHECK(b2.string_down({1, 0}, {1, 1}) == 2);

    RootSystem g2(cartan_matrix('G', 2).a);
    CHECK(g2.string_down({1, 3}, {0, 1}) == 3);
    CHECK(g2.is_root({-1, -2}));
    CHECK_FALSE(g2.is_root({1, -1}));
    CHECK_FALSE(g2.is_positive_root({-1, 0}));
}

TEST_CASE("roots are sorted by height and indexed stably") {
    RootSystem b2(cartan_matrix('B', 2).a);
    const auto& pos = b2.positive_roots();
    REQUIRE(pos.size() == 4);
    CHECK(pos[0] == IntVec{0, 1});
    CHECK(pos[1] == IntVec{1, 0});
    CHECK(pos[2] == IntVec{1, 1});
    CHECK(pos[3] == IntVec{1, 2});
    CHECK(b2.root_index({1, 1}) == 2);
    CHECK_THROWS_AS(b2.root_index({2, 1}), std::out_of_range);
}

TEST_CASE("weight arithmetic and reflections") {
    RootSystem a2(cartan_matrix('A', 2).a);
    CHECK(a2.root_to_weight({1, 1}) == IntVec{1, 1});
    CHECK(a2.reflect_weight({1, 0}, 0) == IntVec{-1, 1});
    CHECK(a2.antidominant({1, 0}) == IntVec{0, -1});
    CHECK(a2.antidominant({1, 1}) == IntVec{-1, -1});
    CHECK(a2.weyl_orbit({1, 0}).size() == 3);
    CHECK(a2.weyl_orbit({1, 1}).size() == 6);
    CHECK(a2.weyl_orbit({0, 0}).size() == 1);

    RootSystem b2(cartan_matrix('B', 2).a);
    CHECK(b2.weyl_orbit({1, 0}).size() == 4);
    CHECK(b2.weyl_orbit({0, 1}).size() == 4);
    CHECK(b2.root_to_weight(b2.highest_root()) == IntVec{0, 2});

    RootSystem g2(cartan_matrix('G', 2).a);
    CHECK(g2.root_to_weight(g2.highest_root()) == IntVec{1, 0});
    CHECK(g2.weyl_orbit({0, 1}).size() == 6);

    // ip_weights agrees with ip_roots through the coordinate change
    RootSystem c3(cartan_matrix('C', 3).a);
    for (const auto& x : c3.positive_roots())
        for (const auto& y : c3.positive_roots())
            CHECK(c3.ip_weights(c3.root_to_weight(x), c3.root_to_weight(y)) == c3.ip_roots(x, y));
}

TEST_CASE("Weyl dimension formula on known representations") {
    RootSystem a1(cartan_matrix('A', 1).a);
    for (long n = 0; n <= 6; ++n) CHECK(a1.weyl_dim({n}) == n + 1);

    RootSystem a2(cartan_matrix('A', 2).a);
    CHECK(a2.weyl_dim({0, 0}) == 1);
    CHECK(a2.weyl_dim({1, 0}) == 3);
    CHECK(a2.weyl_dim({0, 1}) == 3);
    CHECK(a2.weyl_dim({1, 1}) == 8);
    CHECK(a2.weyl_dim({2, 0}) == 6);
    CHECK(a2.weyl_dim({2, 2}) == 27);

    RootSystem b2(cartan_matrix('B', 2).a);
    CHECK(b2.weyl_dim({1, 0}) == 5);
    CHECK(b2.weyl_dim({0, 1}) == 4);
    CHECK(b2.weyl_dim({0, 2}) == 10);  // adjoint

    RootSystem g2(cartan_matrix('G', 2).a);
    CHECK(g2.weyl_dim({1, 0}) == 14);  // adjoint
    CHECK(g2.weyl_dim({0, 1}) == 7);

    RootSystem d4(cartan_matrix('D', 4).a);
    CHECK(d4.weyl_dim({1, 0, 0, 0}) == 8);
    CHECK(d4.weyl_dim({0, 1, 0, 0}) == 28);  // adjoint at the fork node

    RootSystem e6(cartan_matrix('E', 6).a);
    CHECK(e6.weyl_dim({1, 0, 0, 0, 0, 0}) == 27);
}

TEST_CASE("Freudenthal multiplicities agree with dimensions") {
    RootSystem a2(cartan_matrix('A', 2).a);
    auto adj = a2.weight_multiplicities({1, 1});
    CHECK(adj.at(IntVec{0, 0}) == 2);
    CHECK(adj.at(IntVec{1, 1}) == 1);
    CHECK(adj.size() == 7);  // 6 roots + zero
    CHECK(mult_total(a2, {1, 1}) == a2.weyl_dim({1, 1}));
    CHECK(mult_total(a2, {2, 2}) == 27);
    CHECK(a2.weight_multiplicities({2, 2}).at(IntVec{0, 0}) == 3);

    RootSystem b2(cartan_matrix('B', 2).a);
    auto adj_b2 = b2.weight_multiplicities({0, 2});
    CHECK(adj_b2.at(IntVec{0, 0}) == 2);
    CHECK(mult_total(b2, {0, 2}) == 10);
    CHECK(mult_total(b2, {0, 1}) == 4);

    RootSystem g2(cartan_matrix('G', 2).a);
    CHECK(g2.weight_multiplicities({1, 0}).at(IntVec{0, 0}) == 2);
    CHECK(mult_total(g2, {1, 0}) == 14);
    CHECK(mult_total(g2, {0, 1}) == 7);
    CHECK(g2.weight_multiplicities({0, 1}).at(IntVec{0, 0}) == 1);

    // multiplicities are Weyl invariant: each weight matches its dominant representative
    RootSystem c3(cartan_matrix('C', 3).a);
    auto wm = c3.weight_multiplicities({2, 0, 0});
    CHECK(mult_total(c3, {2, 0, 0}) == c3.weyl_dim({2, 0, 0}));
    auto dominant_rep = [&](IntVec cur) {
        for (;;) {
            size_t i = 0;
            while (i < cur.size() && cur[i] >= 0) ++i;
            if (i == cur.size()) return cur;
            cur = c3.reflect_weight(cur, static_cast<int>(i));
        }
    };
    for (const auto& [mu, m] : wm) CHECK(wm.at(dominant_rep(mu)) == m);
}

TEST_CASE("dominant weights below and minimal dominant weights") {
    RootSystem a1(cartan_matrix('A', 1).a);
    CHECK(a1.minimal_dominant_weights({2}) == std::vector<IntVec>{{0}});
    CHECK(a1.minimal_dominant_weights({3}) == std::vector<IntVec>{{1}});
    CHECK(a1.minimal_dominant_weights({1}) == std::vector<IntVec>{{1}});
    CHECK(a1.minimal_dominant_weights({0}) == std::vector<IntVec>{{0}});

    RootSystem a2(cartan_matrix('A', 2).a);
    CHECK(a2.minimal_dominant_weights({1, 0}) == std::vector<IntVec>{{1, 0}});
    CHECK(a2.minimal_dominant_weights({1, 1}) == std::vector<IntVec>{{0, 0}});
    auto below = a2.dominant_weights_below({1, 1});
    REQUIRE(below.size() == 2);
    CHECK(below[0].first == IntVec{1, 1});
    CHECK(below[1].first == IntVec{0, 0});
    CHECK(below[1].second == IntVec{1, 1});

    // B2: the vector representation contains the zero weight
    RootSystem b2(cartan_matrix('B', 2).a);
    CHECK(b2.minimal_dominant_weights({1, 0}) == std::vector<IntVec>{{0, 0}});
    CHECK(b2.minimal_dominant_weights({0, 1}) == std::vector<IntVec>{{0, 1}});
}

TEST_CASE("identify recovers type and labeling from shuffled Cartan matrices") {
    // B3 with nodes listed in a scrambled order
    auto b3 = cartan_matrix('B', 3).a;
    std::vector<int> sigma = {2, 0, 1};  // scrambled[i][j] = b3[sigma[i]][sigma[j]]
    std::vector<std::vector<long>> scrambled(3, std::vector<long>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            scrambled[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                b3[static_cast<size_t>(sigma[static_cast<size_t>(i)])]
                  [static_cast<size_t>(sigma[static_cast<size_t>(j)])];
    auto id = RootSystem::identify(scrambled);
    REQUIRE(id.has_value());
    CHECK(id->first.type == 'B');
    CHECK(id->first.rank == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(scrambled[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                  id->first.a[static_cast<size_t>(id->second[static_cast<size_t>(i)])]
                             [static_cast<size_t>(id->second[static_cast<size_t>(j)])]);

    // transposed G2 is G2 with the two nodes swapped
    auto g2t = RootSystem::identify({{2, -3}, {-1, 2}});
    REQUIRE(g2t.has_value());
    CHECK(g2t->first.type == 'G');
    CHECK(g2t->second == std::vector<int>{1, 0});

    // rank-2 B/C ambiguity resolves to B
    auto b2 = RootSystem::identify({{2, -2}, {-1, 2}});
    REQUIRE(b2.has_value());
    CHECK(b2->first.type == 'B');

    // A3 listed as a star around its middle node
    auto a3 = RootSystem::identify({{2, -1, -1}, {-1, 2, 0}, {-1, 0, 2}});
    REQUIRE(a3.has_value());
    CHECK(a3->first.type == 'A');

    CHECK_FALSE(RootSystem::identify({{2, -2}, {-2, 2}}).has_value());
    CHECK_FALSE(RootSystem::identify({{2, -1, 0}, {-1, 2, -2}, {0, -2, 2}}).has_value());
}
