#include "symlen/ratfunc.hpp"

#include "symlen/errors.hpp"

namespace symlen {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), num_.field().one())) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFunc::normalize() {
  if (den_.is_zero()) throw Error(ErrorCode::ZeroInput, "rational function with zero denominator");
  const FiniteField& f = num_.field();
  if (num_.is_zero()) {
    den_ = Poly::constant(f, f.one());
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  const FqElem inv = f.inv(den_.lc());
  if (inv.v != 1) {
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroInput, "inverse of zero rational function");
  const FiniteField& f = field();
  const FqElem inv = f.inv(num_.lc());
  return RatFunc(den_.scaled(inv), num_.scaled(inv), true);
}

RatFunc RatFunc::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), true);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(a.field());
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_, a.den_, true);
  // cross-cancel before multiplying
  Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  Poly n1 = g1.degree() > 0 ? exact_div(a.num_, g1) : a.num_;
  Poly d2 = g1.degree() > 0 ? exact_div(b.den_, g1) : b.den_;
  Poly n2 = g2.degree() > 0 ? exact_div(b.num_, g2) : b.num_;
  Poly d1 = g2.degree() > 0 ? exact_div(a.den_, g2) : a.den_;
  return RatFunc(n1 * n2, d1 * d2);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const Poly& p) {
    std::string s = p.to_string();
    return p.coeffs().size() > 1 && s.find(' ') != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace symlen
