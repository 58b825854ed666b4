#include "symlen/brauer_oracle.hpp"

#include <numeric>
#include <set>

#include "symlen/errors.hpp"

namespace symlen {

namespace {

// Norm from k(P) to F_q of the unit part x / pi^v(x), reduced mod pi.
FqElem unit_norm(const RatFunc& x, const Place& place, int v) {
  const FiniteField& f = x.field();
  if (place.is_infinite()) return f.div(x.num().lc(), x.den().lc());
  const Poly& pi = *place.pi;
  Poly num = x.num(), den = x.den();
  for (int i = 0; i < v; ++i) num = exact_div(num, pi);
  for (int i = 0; i < -v; ++i) den = exact_div(den, pi);
  return f.div(resultant_monic(pi, num), resultant_monic(pi, den));
}

std::uint32_t mod_n(long long x, std::uint32_t n) {
  const long long r = x % static_cast<long long>(n);
  return static_cast<std::uint32_t>(r < 0 ? r + n : r);
}

}  // namespace

ResidueClass residue_at(const Backend& b, const Symbol& s, const Place& place) {
  ResidueClass out{place, 0, s.n};
  if (!b.rational()) return out;
  const FiniteField& f = b.fq();
  const int va = valuation(s.a, place);
  const int vb = valuation(s.b, place);
  if (va == 0 && vb == 0) return out;
  const long long q1 = f.q() - 1;
  // log_g of N(u) for u = (-1)^(va vb) a'^vb b'^(-va)
  long long l = 0;
  if ((va * vb) % 2 != 0) l += static_cast<long long>(place.degree()) * f.log(f.neg(f.one()));
  if (vb != 0) l += static_cast<long long>(vb) * f.log(unit_norm(s.a, place, va));
  if (va != 0) l -= static_cast<long long>(va) * f.log(unit_norm(s.b, place, vb));
  l %= q1;
  // rho_n^value = g^(l (q-1)/n)
  out.value = mod_n(l, s.n);
  return out;
}

std::vector<Place> candidate_places(const SymbolProduct& p) {
  std::set<Place> places;
  if (!p.backend.rational()) return {};
  for (const auto& s : p.factors) {
    for (const auto* x : {&s.a, &s.b}) {
      for (auto& pl : support(*x)) places.insert(pl);
    }
  }
  places.insert(Place::infinity());
  return {places.begin(), places.end()};
}

ResidueVector residue_vector(const SymbolProduct& p, std::uint32_t n) {
  ResidueVector out;
  out.n = n;
  if (!p.backend.rational()) return out;
  for (const auto& s : p.factors) {
    if (n % s.n != 0) throw Error(ErrorCode::NDoesNotDivide, "factor degree does not divide the comparison degree");
  }
  for (const auto& place : candidate_places(p)) {
    long long acc = 0;
    for (const auto& s : p.factors) {
      acc += static_cast<long long>(residue_at(p.backend, s, place).value) * (n / s.n);
    }
    const std::uint32_t v = mod_n(acc, n);
    if (v != 0) out.classes.emplace(place, v);
  }
  return out;
}

ResidueVector residue_vector(const SymbolProduct& p) {
  validate(p);
  return residue_vector(p, p.common_degree());
}

bool equiv(const SymbolProduct& p1, const SymbolProduct& p2) {
  const std::uint32_t n = std::lcm(p1.common_degree(), p2.common_degree());
  return residue_vector(p1, n) == residue_vector(p2, n);
}

bool reciprocity_holds(const ResidueVector& v) {
  long long sum = 0;
  for (const auto& [place, c] : v.classes) sum += c;
  return sum % v.n == 0;
}

std::uint64_t exponent(const ResidueVector& v) {
  std::uint64_t e = 1;
  for (const auto& [place, c] : v.classes) e = std::lcm(e, static_cast<std::uint64_t>(v.n / std::gcd(v.n, c)));
  return e;
}

std::uint64_t exponent(const SymbolProduct& p) { return exponent(residue_vector(p)); }

std::uint64_t index(const SymbolProduct& p) { return exponent(residue_vector(p)); }

}  // namespace symlen
