#include "symlen/backend.hpp"

#include <algorithm>
#include <map>

#include "symlen/errors.hpp"

namespace symlen {

Place Place::finite(Poly p) {
  if (p.lc().v != 1 || !is_irreducible(p)) {
    throw Error(ErrorCode::NotIrreducible, "place must be monic irreducible: " + p.to_string());
  }
  return Place{std::move(p)};
}

FqElem nth_root_of_unity(const FiniteField& f, std::uint32_t n) { return f.root_of_unity(n); }

Factorization factor(const RatFunc& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "factor of zero");
  Factorization out{x.num().lc(), {}};
  std::map<Poly, int> acc;
  if (x.num().degree() > 0) {
    for (auto& [p, e] : factor(x.num())) acc[p] += e;
  }
  if (x.den().degree() > 0) {
    for (auto& [p, e] : factor(x.den())) acc[p] -= e;
  }
  for (auto& [p, e] : acc) {
    if (e != 0) out.factors.emplace_back(p, e);
  }
  return out;
}

std::vector<Place> support(const RatFunc& x) {
  std::vector<Place> out;
  for (auto& [p, e] : factor(x).factors) out.push_back(Place{p});
  return out;
}

int valuation(const RatFunc& x, const Place& place) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "valuation of zero");
  if (place.is_infinite()) return x.den().degree() - x.num().degree();
  auto count = [&](Poly f) {
    int v = 0;
    while (f.degree() >= place.pi->degree()) {
      auto [q, r] = divmod(f, *place.pi);
      if (!r.is_zero()) break;
      f = std::move(q);
      ++v;
    }
    return v;
  };
  return count(x.num()) - count(x.den());
}

std::optional<RatFunc> nth_power_test(const Backend& b, const RatFunc& x, std::uint32_t n) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "n-th power test of zero");
  const FiniteField& f = b.fq();
  if (x.is_constant()) {
    FqElem r;
    if (!f.nth_root(x.constant_value(), n, r)) return std::nullopt;
    return RatFunc::constant(f, r);
  }
  if (!b.rational()) throw Error(ErrorCode::BadBackend, "non-constant element over " + b.name());
  // Degree of the divisor at infinity follows from the finite ones.
  Factorization fac = factor(x);
  FqElem unit_root;
  if (!f.nth_root(fac.unit, n, unit_root)) return std::nullopt;
  Poly num = Poly::constant(f, unit_root), den = Poly::constant(f, f.one());
  for (auto& [p, e] : fac.factors) {
    if (e % static_cast<int>(n) != 0) return std::nullopt;
    const int k = e / static_cast<int>(n);
    if (k > 0) num = num * p.pow(static_cast<unsigned>(k));
    else den = den * p.pow(static_cast<unsigned>(-k));
  }
  return RatFunc(num, den);
}

}  // namespace symlen
