#pragma once

#include <compare>
#include <string>

#include "symlen/poly.hpp"

namespace symlen {

/// Element of F_q(t) in canonical form: denominator monic, gcd(num, den) = 1.
/// Structural equality is field equality. Constants represent F_q itself.
class RatFunc {
 public:
  explicit RatFunc(const FiniteField& f) : num_(f), den_(Poly::constant(f, f.one())) {}
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);
  static RatFunc constant(const FiniteField& f, FqElem c) { return RatFunc(Poly::constant(f, c)); }
  static RatFunc from_int(const FiniteField& f, long long c) { return constant(f, f.from_int(c)); }
  static RatFunc t(const FiniteField& f) { return RatFunc(Poly::t(f)); }

  const FiniteField& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Value of a constant; only meaningful when is_constant().
  FqElem constant_value() const { return num_.coeff(0); }
  /// max(deg num, deg den)
  int height() const { return std::max(num_.degree(), den_.degree()); }

  RatFunc inverse() const;
  RatFunc pow(long long e) const;
  RatFunc operator-() const { return RatFunc(-num_, den_); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;
  friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) {
    if (auto c = a.num_ <=> b.num_; c != 0) return c;
    return a.den_ <=> b.den_;
  }

  /// Canonical text: "num" or "(num)/(den)"; constants print as field elements.
  std::string to_string() const;

 private:
  RatFunc(Poly num, Poly den, bool /*already canonical*/) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace symlen
