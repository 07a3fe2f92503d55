#include "lt/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace lt {
namespace {

using Poly = std::vector<Rat>;  // low degree first, no trailing zeros guaranteed by trim

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division; remainder is returned so callers can assert exactness.
std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
  trim(num);
  Poly q;
  if (degree(num) >= degree(den)) q.assign(num.size() - den.size() + 1, Rat(0));
  while (degree(num) >= degree(den) && !num.empty()) {
    int shift = degree(num) - degree(den);
    Rat f = num.back() / den.back();
    q[shift] = f;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    trim(num);
  }
  return {q, num};
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n, m = n;
  for (unsigned p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<Rat> cyclotomic_polynomial(unsigned n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  std::map<unsigned, Poly> memo;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Poly p(d + 1, Rat(0));
    p[0] = -1;
    p[d] = 1;
    for (auto& [e, q] : memo) {
      if (d % e != 0) continue;
      auto [quot, rem] = divmod(p, q);
      if (!rem.empty()) throw std::logic_error("cyclotomic division not exact");
      p = quot;
    }
    memo[d] = p;
  }
  return memo[n];
}

CycField::CycField(unsigned n) : n_(n), phi_(euler_phi(n)), phi_poly_(cyclotomic_polynomial(n)) {}

const CycField* CycField::get(unsigned n) {
  if (n == 0) throw std::invalid_argument("conductor must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<CycField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(n);
  if (it == registry.end())
    it = registry.emplace(n, std::unique_ptr<CycField>(new CycField(n))).first;
  return it->second.get();
}

namespace {

// Reduce an arbitrary-degree polynomial in zeta to the power basis.
std::vector<Rat> reduce_mod_field(const CycField* f, Poly p) {
  auto [q, r] = divmod(std::move(p), f->minimal_polynomial());
  (void)q;
  r.resize(f->degree(), Rat(0));
  return r;
}

}  // namespace

Cyc::Cyc(const CycField* f, std::vector<Rat> coeffs) : f_(f), c_(std::move(coeffs)) {
  if (c_.size() != f_->degree()) throw std::invalid_argument("coefficient count != field degree");
  for (auto& x : c_) x.canonicalize();
}

Cyc Cyc::zeta(unsigned n, long power) {
  const CycField* f = CycField::get(n);
  long p = ((power % static_cast<long>(n)) + n) % n;
  Poly mono(p + 1, Rat(0));
  mono[p] = 1;
  return Cyc(f, reduce_mod_field(f, std::move(mono)));
}

bool Cyc::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyc::as_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
  return c_[0];
}

Cyc Cyc::promoted(unsigned n) const {
  unsigned old = conductor();
  if (old == n) return *this;
  if (n % old != 0) throw std::invalid_argument("promotion target is not a multiple conductor");
  const CycField* f = CycField::get(n);
  unsigned step = n / old;
  Poly p(static_cast<size_t>(step) * (c_.size() - 1) + 1, Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) p[k * step] = c_[k];
  return Cyc(f, reduce_mod_field(f, std::move(p)));
}

namespace {
unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }
}  // namespace

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc Cyc::operator+(const Cyc& o) const {
  if (f_ != o.f_) {
    unsigned n = lcm_u(conductor(), o.conductor());
    return promoted(n) + o.promoted(n);
  }
  Cyc r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator*(const Cyc& o) const {
  if (f_ != o.f_) {
    unsigned n = lcm_u(conductor(), o.conductor());
    return promoted(n) * o.promoted(n);
  }
  return Cyc(f_, reduce_mod_field(f_, mul(c_, o.c_)));
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  // Extended Euclid in Q[x]: u*a + v*Phi = gcd = const, so a^{-1} = u/gcd.
  Poly r0 = f_->minimal_polynomial(), r1 = c_;
  trim(r1);
  Poly s0 = {}, s1 = {Rat(1)};  // coefficients of the input along the remainder sequence
  while (!r1.empty() && degree(r1) > 0) {
    auto [q, r2] = divmod(r0, r1);
    Poly qs = mul(q, s1);
    Poly s2 = s0;
    s2.resize(std::max(s2.size(), qs.size()), Rat(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw std::logic_error("element shares a factor with the minimal polynomial");
  Rat g = r1[0];
  for (auto& x : s1) x /= g;
  return Cyc(f_, reduce_mod_field(f_, std::move(s1)));
}

Cyc Cyc::operator/(const Cyc& o) const { return *this * o.inverse(); }

bool Cyc::operator==(const Cyc& o) const {
  if (f_ != o.f_) {
    unsigned n = lcm_u(conductor(), o.conductor());
    return promoted(n) == o.promoted(n);
  }
  return c_ == o.c_;
}

Cyc Cyc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyc base = *this, acc = Cyc(Rat(1));
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

bool Cyc::is_root_of_unity() const {
  if (is_zero()) return false;
  unsigned n2 = lcm_u(2, conductor());
  return pow(n2) == Cyc(Rat(1));
}

unsigned Cyc::order() const {
  if (!is_root_of_unity()) throw std::domain_error("not a root of unity");
  unsigned n2 = lcm_u(2, conductor());
  for (unsigned d = 1; d <= n2; ++d)
    if (n2 % d == 0 && pow(d) == Cyc(Rat(1))) return d;
  throw std::logic_error("unreachable");
}

std::string Cyc::str() const {
  std::ostringstream os;
  os << conductor() << ':';
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].get_str();
  }
  return os.str();
}

}  // namespace lt
