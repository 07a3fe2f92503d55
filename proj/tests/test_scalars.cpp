#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lt/cyclotomic.hpp"
#include "lt/linalg.hpp"

using namespace lt;

namespace {

// Independent oracle: fraction-free Gaussian elimination (Bareiss-style pivoting
// without the final normalization). Returns the rank.
size_t bareiss_rank(Mat m) {
  size_t row = 0;
  Cyc prev(1);
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(sel, j));
    for (size_t i = row + 1; i < m.rows(); ++i) {
      for (size_t j = col + 1; j < m.cols(); ++j)
        m.at(i, j) = (m.at(row, col) * m.at(i, j) - m.at(i, col) * m.at(row, j)) / prev;
      m.at(i, col) = Cyc(0);
    }
    prev = m.at(row, col);
    ++row;
  }
  return row;
}

std::mt19937_64 rng(0xBEEF);

Cyc random_scalar(unsigned conductor) {
  // Small random element with mixed rational and zeta parts.
  long num = static_cast<long>(rng() % 7) - 3;
  long den = 1 + static_cast<long>(rng() % 3);
  Cyc r(rat(num, den));
  if (conductor > 2 && rng() % 2 == 0) {
    long p = static_cast<long>(rng() % conductor);
    long c = static_cast<long>(rng() % 5) - 2;
    r += Cyc(Rat(c)) * Cyc::zeta(conductor, p);
  }
  return r;
}

Mat random_matrix(size_t r, size_t c, unsigned conductor) {
  Mat m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m.at(i, j) = random_scalar(conductor);
  return m;
}

}  // namespace

TEST_CASE("cyclotomic polynomial values") {
  // Phi_1 = x-1, Phi_4 = x^2+1, Phi_6 = x^2-x+1, Phi_12 = x^4-x^2+1
  CHECK(cyclotomic_polynomial(1) == std::vector<Rat>{Rat(-1), Rat(1)});
  CHECK(cyclotomic_polynomial(4) == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
  CHECK(cyclotomic_polynomial(6) == std::vector<Rat>{Rat(1), Rat(-1), Rat(1)});
  CHECK(cyclotomic_polynomial(12) == std::vector<Rat>{Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)});
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(1) == 1);
}

TEST_CASE("zeta identities") {
  Cyc z3 = Cyc::zeta(3);
  // 1 + z + z^2 = 0 in Q(zeta_3)
  CHECK((Cyc(1) + z3 + z3 * z3).is_zero());
  CHECK(z3.pow(3) == Cyc(1));
  CHECK(Cyc::zeta(2) == Cyc(-1));
  CHECK(Cyc::zeta(4).pow(2) == Cyc(-1));
  // zeta_6 = -zeta_3^2 under the canonical embeddings
  CHECK(Cyc::zeta(6) == -Cyc::zeta(3).pow(2));
  CHECK(Cyc::zeta(6).pow(3) == Cyc(-1));
}

TEST_CASE("field arithmetic and inverse") {
  Cyc z = Cyc::zeta(12);
  Cyc a = Cyc(rat(3, 4)) + Cyc(2) * z - z.pow(3);
  Cyc b = Cyc(rat(-1, 5)) + z.pow(2);
  CHECK((a * b) / b == a);
  CHECK((a / b) * b == a);
  CHECK(a * a.inverse() == Cyc(1));
  CHECK_THROWS_AS(Cyc(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(a / Cyc(0), std::domain_error);
  // (1+z4)(1-z4) = 2
  Cyc z4 = Cyc::zeta(4);
  CHECK((Cyc(1) + z4) * (Cyc(1) - z4) == Cyc(2));
}

TEST_CASE("cross-conductor promotion") {
  Cyc z3 = Cyc::zeta(3);
  Cyc z4 = Cyc::zeta(4);
  Cyc s = z3 + z4;                       // lands in Q(zeta_12)
  CHECK(s.conductor() == 12);
  CHECK(s - z4 == z3.promoted(12));
  CHECK(Cyc(rat(1, 2)) * Cyc(2) == Cyc(1));
  // zeta_3 viewed in Q(zeta_6) equals zeta_6^2
  CHECK(z3.promoted(6) == Cyc::zeta(6).pow(2));
}

TEST_CASE("root of unity detection") {
  CHECK(Cyc::zeta(12, 5).is_root_of_unity());
  CHECK(Cyc::zeta(12, 5).order() == 12);
  CHECK(Cyc(-1).is_root_of_unity());
  CHECK(Cyc(-1).order() == 2);
  CHECK(!Cyc(2).is_root_of_unity());
  CHECK(!(Cyc(1) + Cyc::zeta(4)).is_root_of_unity());
  CHECK((-Cyc::zeta(3)).order() == 6);
}

TEST_CASE("rank/kernel/solve agree with fraction-free oracle") {
  for (int trial = 0; trial < 40; ++trial) {
    unsigned conductor = (trial % 2 == 0) ? 1 : 12;
    size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
    Mat m = random_matrix(r, c, conductor);
    size_t rk = rank(m);
    CHECK(rk == bareiss_rank(m));
    auto null_basis = kernel(m);
    CHECK(null_basis.size() == c - rk);
    for (const auto& v : null_basis) CHECK(vec_is_zero(m.apply(v)));

    // Consistent system: b = m * x0 must be solvable and reproduce b.
    Vec x0(c);
    for (auto& x : x0) x = random_scalar(conductor);
    Vec b = m.apply(x0);
    auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == b);
  }
}

TEST_CASE("inconsistent solve reports nullopt") {
  Mat m(2, 1);
  m.at(0, 0) = Cyc(1);
  m.at(1, 0) = Cyc(1);
  Vec b = {Cyc(1), Cyc(2)};
  CHECK(!solve(m, b).has_value());
}

TEST_CASE("simultaneous eigenspace") {
  // Two commuting diagonalizable operators on Q(zeta_4)^3.
  Cyc i = Cyc::zeta(4);
  Mat a(3, 3), b(3, 3);
  a.at(0, 0) = Cyc(1); a.at(1, 1) = Cyc(1); a.at(2, 2) = i;
  b.at(0, 0) = Cyc(1); b.at(1, 1) = Cyc(-1); b.at(2, 2) = i;
  auto e1 = simultaneous_eigenspace({a, b}, {Cyc(1), Cyc(1)});
  CHECK(e1.size() == 1);
  auto e2 = simultaneous_eigenspace({a, b}, {Cyc(1), Cyc(-1)});
  CHECK(e2.size() == 1);
  auto e3 = simultaneous_eigenspace({a, b}, {i, i});
  CHECK(e3.size() == 1);
  auto e4 = simultaneous_eigenspace({a, b}, {i, Cyc(1)});
  CHECK(e4.empty());

  Mat nc(2, 2);
  nc.at(0, 1) = Cyc(1);
  Mat nc2 = nc.transposed();
  CHECK_THROWS_AS(simultaneous_eigenspace({nc, nc2}, {Cyc(0), Cyc(0)}), std::invalid_argument);
}

TEST_CASE("eigenspace grid is exhaustive for commuting finite-order operators") {
  // Diagonal-in-disguise pair with orders 2 and 3; dims over the full grid sum to ambient.
  Cyc w = Cyc::zeta(3);
  Mat p(4, 4), q(4, 4);
  // p swaps coordinates 0,1 and fixes 2,3; q is diagonal (1,1,w,w^2).
  p.at(0, 1) = Cyc(1); p.at(1, 0) = Cyc(1); p.at(2, 2) = Cyc(1); p.at(3, 3) = Cyc(1);
  q.at(0, 0) = Cyc(1); q.at(1, 1) = Cyc(1); q.at(2, 2) = w; q.at(3, 3) = w * w;
  size_t total = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b)
      total += simultaneous_eigenspace({p, q}, {Cyc(-1).pow(a), w.pow(b)}).size();
  CHECK(total == 4);
}

TEST_CASE("subspace bookkeeping") {
  Subspace s(3);
  CHECK(s.insert({Cyc(1), Cyc(2), Cyc(0)}));
  CHECK(s.insert({Cyc(0), Cyc(1), Cyc(1)}));
  CHECK(!s.insert({Cyc(1), Cyc(3), Cyc(1)}));  // dependent
  CHECK(s.dim() == 2);
  CHECK(s.contains({Cyc(2), Cyc(5), Cyc(1)}));
  CHECK(!s.contains({Cyc(0), Cyc(0), Cyc(1)}));
  auto coords = s.coordinates({Cyc(2), Cyc(5), Cyc(1)});
  REQUIRE(coords.has_value());
  CHECK(coords->size() == 2);
}

TEST_CASE("serial and parallel elimination agree") {
  for (int trial = 0; trial < 10; ++trial) {
    Mat m = random_matrix(6, 7, 4);
    Mat a = m, b = m;
    auto pa = rref(a, Exec::Serial);
    auto pb = rref(b, Exec::Parallel);
    CHECK(pa == pb);
    CHECK(a == b);
  }
}
