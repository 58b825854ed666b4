#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "symlen/ratfunc.hpp"

namespace symlen {

/// The two concrete backends: F_q (a C_1 field) and F_q(t) (a C_2 field).
/// Elements of both are carried as RatFunc; over F_q they are constants.
class Backend {
 public:
  Backend(const FiniteField& f, bool rational) : f_(&f), rational_(rational) {}

  const FiniteField& fq() const { return *f_; }
  bool rational() const { return rational_; }
  std::uint32_t q() const { return f_->q(); }
  /// C_m index: 1 for F_q, 2 for F_q(t).
  int cm_index() const { return rational_ ? 2 : 1; }

  RatFunc zero() const { return RatFunc(*f_); }
  RatFunc one() const { return RatFunc::from_int(*f_, 1); }
  RatFunc from_int(long long c) const { return RatFunc::from_int(*f_, c); }
  RatFunc constant(FqElem c) const { return RatFunc::constant(*f_, c); }
  bool contains(const RatFunc& x) const { return &x.field() == f_ && (rational_ || x.is_constant()); }

  bool hosts_degree(std::uint32_t n) const { return n >= 1 && (f_->q() - 1) % n == 0; }
  std::string name() const { return rational_ ? f_->name() + "(t)" : f_->name(); }

  friend bool operator==(const Backend& a, const Backend& b) {
    return a.f_ == b.f_ && a.rational_ == b.rational_;
  }

 private:
  const FiniteField* f_;
  bool rational_;
};

/// A place of F_q(t): a monic irreducible polynomial, or infinity (uniformizer 1/t).
struct Place {
  std::optional<Poly> pi;  // empty = infinity

  static Place infinity() { return Place{}; }
  static Place finite(Poly p);
  bool is_infinite() const { return !pi.has_value(); }
  int degree() const { return pi ? pi->degree() : 1; }
  std::string to_string() const { return pi ? pi->to_string() : "inf"; }

  friend bool operator==(const Place& a, const Place& b) = default;
  /// finite places by degree then coefficients, infinity last
  friend std::strong_ordering operator<=>(const Place& a, const Place& b) {
    if (a.is_infinite() || b.is_infinite()) return b.is_infinite() <=> a.is_infinite();
    return *a.pi <=> *b.pi;
  }
};

/// rho_n = g^((q-1)/n) for the fixed generator g.
FqElem nth_root_of_unity(const FiniteField& f, std::uint32_t n);

/// Some y with y^n = x in the backend, or nullopt.
std::optional<RatFunc> nth_power_test(const Backend& b, const RatFunc& x, std::uint32_t n);

int valuation(const RatFunc& x, const Place& place);

/// Finite places dividing numerator or denominator, sorted canonically.
std::vector<Place> support(const RatFunc& x);

/// Decompose x = c * prod pi^e (finite places only).
struct Factorization {
  FqElem unit;
  std::vector<std::pair<Poly, int>> factors;
};
Factorization factor(const RatFunc& x);

}  // namespace symlen
