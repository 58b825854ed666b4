#pragma once

#include <random>

#include "doctest.h"

#include "symlen/backend.hpp"
#include "symlen/symbols.hpp"
#include "symlen/text.hpp"

namespace testutil {

using namespace symlen;

inline Backend rat(std::uint32_t q) { return Backend(FiniteField::get_order(q), true); }
inline Backend fin(std::uint32_t q) { return Backend(FiniteField::get_order(q), false); }

inline RatFunc el(const Backend& b, const char* s) { return parse_element(b, s); }

inline FqElem rand_fq(const FiniteField& f, std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<std::uint32_t> d(nonzero ? 1 : 0, f.q() - 1);
  return FqElem{d(rng)};
}

inline Poly rand_poly(const FiniteField& f, std::mt19937_64& rng, int max_deg, bool nonzero = true) {
  for (;;) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    const int d = dd(rng);
    std::vector<FqElem> c;
    for (int i = 0; i <= d; ++i) c.push_back(rand_fq(f, rng));
    Poly p(f, c);
    if (!nonzero || !p.is_zero()) return p;
  }
}

inline RatFunc rand_rat(const Backend& b, std::mt19937_64& rng, int max_deg) {
  const FiniteField& f = b.fq();
  if (!b.rational()) return b.constant(rand_fq(f, rng, true));
  return RatFunc(rand_poly(f, rng, max_deg), rand_poly(f, rng, max_deg));
}

inline Symbol rand_symbol(const Backend& b, std::mt19937_64& rng, std::uint32_t n, int max_deg) {
  return Symbol(rand_rat(b, rng, max_deg), rand_rat(b, rng, max_deg), n);
}

// Brute force: is x an n-th power in F_q?
inline bool brute_is_power(const FiniteField& f, FqElem x, std::uint32_t n) {
  for (std::uint32_t y = 1; y < f.q(); ++y) {
    FqElem acc = f.one();
    for (std::uint32_t i = 0; i < n; ++i) acc = f.mul(acc, FqElem{y});
    if (acc == x) return true;
  }
  return false;
}

}  // namespace testutil

namespace testutil {

// Residue class computed directly in F_q[t]/pi: the tame unit is reduced mod pi
// and raised to (|k(P)|-1)/n by square-and-multiply, then matched against rho_n^i.
inline std::uint32_t brute_residue(const Backend& b, const Symbol& s, const Place& place) {
  const FiniteField& f = b.fq();
  const int va = valuation(s.a, place), vb = valuation(s.b, place);
  const FqElem rho = f.root_of_unity(s.n);
  auto match = [&](FqElem w) {
    FqElem acc = f.one();
    for (std::uint32_t i = 0; i < s.n; ++i) {
      if (acc == w) return i;
      acc = f.mul(acc, rho);
    }
    return 999u;
  };
  if (place.is_infinite()) {
    auto lead = [&](const RatFunc& x) { return f.div(x.num().lc(), x.den().lc()); };
    FqElem u = f.one();
    if ((va * vb) % 2) u = f.neg(u);
    u = f.mul(u, f.pow(lead(s.a), vb));
    u = f.mul(u, f.pow(lead(s.b), -va));
    return match(f.pow(u, (f.q() - 1) / s.n));
  }
  const Poly& pi = *place.pi;
  auto unit = [&](const RatFunc& x, int v) {
    Poly num = x.num(), den = x.den();
    for (int i = 0; i < v; ++i) num = exact_div(num, pi);
    for (int i = 0; i < -v; ++i) den = exact_div(den, pi);
    return mulmod(num % pi, invmod(den % pi, pi), pi);
  };
  auto pw = [&](const Poly& x, long long e) {
    Poly base = e < 0 ? invmod(x, pi) : x;
    return powmod(base, static_cast<unsigned long long>(e < 0 ? -e : e), pi);
  };
  Poly u = Poly::constant(f, (va * vb) % 2 ? f.neg(f.one()) : f.one());
  u = mulmod(u, pw(unit(s.a, va), vb), pi);
  u = mulmod(u, pw(unit(s.b, vb), -va), pi);
  unsigned long long Q = 1;
  for (int i = 0; i < pi.degree(); ++i) Q *= f.q();
  const Poly w = powmod(u, (Q - 1) / s.n, pi);
  REQUIRE(w.is_constant());
  return match(w.coeff(0));
}

}  // namespace testutil
