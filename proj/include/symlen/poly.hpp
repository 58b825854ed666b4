#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "symlen/finite_field.hpp"

namespace symlen {

/// Univariate polynomial in t over F_q. Coefficients low-to-high, no trailing
/// zeros; the zero polynomial has an empty coefficient list.
class Poly {
 public:
  explicit Poly(const FiniteField& f) : f_(&f) {}
  Poly(const FiniteField& f, std::vector<FqElem> coeffs);

  static Poly constant(const FiniteField& f, FqElem c);
  static Poly monomial(const FiniteField& f, FqElem c, int degree);
  static Poly t(const FiniteField& f) { return monomial(f, f.one(), 1); }

  const FiniteField& field() const { return *f_; }
  const std::vector<FqElem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].v == 1; }
  FqElem coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : FqElem{}; }
  FqElem lc() const { return c_.empty() ? FqElem{} : c_.back(); }

  Poly monic() const;
  Poly scaled(FqElem s) const;
  Poly shifted(int k) const;  // multiply by t^k, k >= 0
  Poly derivative() const;
  FqElem eval(FqElem x) const;
  Poly pow(unsigned e) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
  /// Canonical order: by degree, then coefficients from the leading term down.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  const FiniteField* f_;
  std::vector<FqElem> c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Exact quotient; throws if the division leaves a remainder.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
/// s*a + t*b = g with g = monic gcd.
void xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& a, unsigned long long e, const Poly& m);
/// Inverse of a modulo m; a must be a unit mod m.
Poly invmod(const Poly& a, const Poly& m);

/// Res(f, g) for monic f equals prod_{f(r)=0} g(r): the norm of g mod f.
FqElem resultant_monic(const Poly& f, const Poly& g);

bool is_irreducible(const Poly& f);

/// Monic irreducible factors with multiplicities, sorted canonically.
/// The leading coefficient is not included.
std::vector<std::pair<Poly, int>> factor(const Poly& f);

}  // namespace symlen
