#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lt/rational.hpp"

namespace lt {

// Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1} modulo the N-th
// cyclotomic polynomial. Fields are interned: one immutable object per
// conductor, safe to share across threads.
class CycField {
 public:
  static const CycField* get(unsigned n);

  unsigned conductor() const { return n_; }
  unsigned degree() const { return phi_; }
  // Monic integer coefficients of Phi_N, low degree first, size phi+1.
  const std::vector<Rat>& minimal_polynomial() const { return phi_poly_; }

 private:
  explicit CycField(unsigned n);
  unsigned n_;
  unsigned phi_;
  std::vector<Rat> phi_poly_;
};

unsigned euler_phi(unsigned n);
// Coefficients of Phi_N, low degree first.
std::vector<Rat> cyclotomic_polynomial(unsigned n);

// Element of Q(zeta_N). Binary operations between different conductors
// promote both operands into Q(zeta_lcm) first, so mixed use is exact.
class Cyc {
 public:
  Cyc() : f_(CycField::get(1)), c_(1) {}
  Cyc(const Rat& r) : f_(CycField::get(1)), c_{r} { c_[0].canonicalize(); }
  Cyc(long v) : Cyc(Rat(v)) {}
  Cyc(int v) : Cyc(Rat(v)) {}
  Cyc(const CycField* f, std::vector<Rat> coeffs);

  // Primitive N-th root of unity.
  static Cyc zeta(unsigned n, long power = 1);

  const CycField* field() const { return f_; }
  unsigned conductor() const { return f_->conductor(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat as_rational() const;  // throws if not rational

  Cyc promoted(unsigned n) const;  // embed into Q(zeta_n); n must be a multiple

  Cyc operator-() const;
  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator/(const Cyc& o) const;  // throws std::domain_error on zero divisor
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
  Cyc& operator/=(const Cyc& o) { return *this = *this / o; }
  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  Cyc inverse() const;
  Cyc pow(long e) const;

  // True iff this is a root of unity in Q(zeta_N); order() then gives the
  // exact multiplicative order.
  bool is_root_of_unity() const;
  unsigned order() const;

  // Canonical text form, also used as hash key: "N:c0,c1,...".
  std::string str() const;

 private:
  const CycField* f_;
  std::vector<Rat> c_;
};

inline Cyc operator*(const Rat& r, const Cyc& x) { return Cyc(r) * x; }

}  // namespace lt
