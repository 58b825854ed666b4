#include "symlen/symbols.hpp"

#include <numeric>

#include "symlen/errors.hpp"

namespace symlen {

std::uint32_t SymbolProduct::common_degree() const {
  std::uint32_t n = 1;
  for (const auto& s : factors) n = std::lcm(n, s.n);
  return n;
}

void validate(const Backend& b, const Symbol& s) {
  if (!b.hosts_degree(s.n)) {
    throw Error(ErrorCode::NDoesNotDivide,
                std::to_string(s.n) + " does not divide q-1 = " + std::to_string(b.q() - 1));
  }
  if (s.a.is_zero() || s.b.is_zero()) throw Error(ErrorCode::ZeroInput, "symbol slots must be nonzero");
  if (!b.contains(s.a) || !b.contains(s.b)) throw Error(ErrorCode::BadBackend, "slot outside " + b.name());
}

void validate(const SymbolProduct& p) {
  for (const auto& s : p.factors) validate(p.backend, s);
  if (!p.backend.hosts_degree(p.common_degree())) {
    throw Error(ErrorCode::NDoesNotDivide, "mixed degrees need a common degree dividing q-1");
  }
}

KummerAlgebra first_slot_algebra(const Backend& b, const Symbol& s) { return KummerAlgebra(b, s.n, s.a); }

Symbol slot_normalize(const Backend& b, const Symbol& s) {
  validate(b, s);
  if (nth_power_test(b, s.a, s.n)) throw Error(ErrorCode::AlreadySplit, "first slot is an n-th power");
  Symbol cur = s;
  for (int iter = 0; iter < 64; ++iter) {
    if (KummerAlgebra(b, cur.n, cur.a).is_field()) return cur;
    bool moved = false;
    for (auto d : prime_factors(cur.n)) {
      if (auto root = nth_power_test(b, cur.a, static_cast<std::uint32_t>(d))) {
        cur = Symbol(*root, cur.b.pow(static_cast<long long>(d)), cur.n);
        moved = true;
        break;
      }
    }
    if (!moved) break;
    if (nth_power_test(b, cur.a, cur.n)) throw Error(ErrorCode::AlreadySplit, "first slot became an n-th power");
  }
  throw Error(ErrorCode::NonFieldSlot, "could not normalize first slot to a field generator");
}

Symbol norm_twist(const Backend& b, const Symbol& s, const KummerElem& k) {
  if (k.n() != s.n) throw Error(ErrorCode::MixedAlgebras, "twist element has wrong length");
  if (k.is_zero()) throw Error(ErrorCode::ZeroTwist, "twist by zero");
  const RatFunc nk = algebra_norm(first_slot_algebra(b, s), k);
  if (nk.is_zero()) throw Error(ErrorCode::ZeroTwist, "twist element is a zero divisor");
  return Symbol(s.a, nk * s.b, s.n);
}

Symbol power_twist(const Backend&, const Symbol& s, const RatFunc& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroScalar, "power twist by zero");
  return Symbol(f.pow(s.n) * s.a, s.b, s.n);
}

Symbol chain(const Backend&, const Symbol& s) {
  RatFunc sum = s.a + s.b;
  if (sum.is_zero()) throw Error(ErrorCode::SumIsZero, "a + b = 0");
  return Symbol(sum, -(s.a.inverse() * s.b), s.n);
}

Symbol swap_slots(const Backend&, const Symbol& s) { return Symbol(s.b, s.a.inverse(), s.n); }

Symbol inverse(const Symbol& s) { return Symbol(s.a, s.b.inverse(), s.n); }

std::pair<Symbol, Symbol> pair_merge(const Backend&, const Symbol& s1, const Symbol& s2) {
  if (s1.n != s2.n) throw Error(ErrorCode::DegreeMismatch, "pair_merge needs equal degrees");
  return {Symbol(s1.a, s1.b / s2.b, s1.n), Symbol(s1.a * s2.a, s2.b, s1.n)};
}

std::pair<Symbol, Symbol> pair_merge_with_norm(const Backend& b, const Symbol& s1, const Symbol& s2,
                                               const KummerElem& k2) {
  if (s1.n != s2.n) throw Error(ErrorCode::DegreeMismatch, "pair_merge_with_norm needs equal degrees");
  if (k2.is_zero()) throw Error(ErrorCode::ZeroTwist, "twist by zero");
  const RatFunc nb = algebra_norm(first_slot_algebra(b, s2), k2) * s2.b;
  if (nb.is_zero()) throw Error(ErrorCode::ZeroTwist, "twist element is a zero divisor");
  const RatFunc a12 = s1.a * s2.a;
  const RatFunc t = a12 + nb;
  if (t.is_zero()) throw Error(ErrorCode::TIsZero, "a1 a2 + N(k2) b2 = 0");
  return {Symbol(s1.a, s1.b / nb, s1.n), Symbol(t, -(a12.inverse() * nb), s1.n)};
}

Symbol combine_common_slot(const Backend&, const Symbol& s1, const Symbol& s2) {
  if (s1.n != s2.n) throw Error(ErrorCode::DegreeMismatch, "combine needs equal degrees");
  if (!(s1.a == s2.a)) throw Error(ErrorCode::MixedAlgebras, "combine needs a common first slot");
  return Symbol(s1.a, s1.b * s2.b, s1.n);
}

std::pair<std::uint32_t, std::uint32_t> coprime_exponents(std::uint32_t n1, std::uint32_t n2) {
  if (std::gcd(n1, n2) != 1) throw Error(ErrorCode::NotCoprime, "degrees are not coprime");
  const std::uint64_t N = static_cast<std::uint64_t>(n1) * n2;
  for (std::uint64_t s = 0; s < N; ++s) {
    for (std::uint64_t k = 0; k < N; ++k) {
      if ((s * n1 + k * n2) % N == 1 % N) return {static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(k)};
    }
  }
  throw Error(ErrorCode::NotCoprime, "no Bezout pair");
}

Symbol coprime_combine(const Backend& b, const Symbol& s1, const Symbol& s2) {
  const auto [s, k] = coprime_exponents(s1.n, s2.n);
  const std::uint32_t N = s1.n * s2.n;
  if (!b.hosts_degree(N)) throw Error(ErrorCode::NDoesNotDivide, "n1 n2 does not divide q-1");
  const RatFunc a = s1.a.pow(s2.n) * s2.a.pow(s1.n);
  const RatFunc bb = s1.b.pow(static_cast<long long>(s2.n) * k % N) * s2.b.pow(static_cast<long long>(s1.n) * s % N);
  return Symbol(a, bb, N);
}

std::vector<Symbol> inflate(const Backend& b, const Symbol& s, std::uint32_t k) {
  if (k == 0) throw Error(ErrorCode::NDoesNotDivide, "inflation factor must be positive");
  const std::uint32_t N = s.n * k;
  if (!b.hosts_degree(N)) throw Error(ErrorCode::NDoesNotDivide, "dk does not divide q-1");
  return std::vector<Symbol>(k, Symbol(s.a, s.b, N));
}

Symbol deflate_power(const Backend& b, const Symbol& s, std::uint32_t e) {
  if (e == 0 || s.n % e != 0) throw Error(ErrorCode::DegreeMismatch, "target degree must divide n");
  if (!b.hosts_degree(e)) throw Error(ErrorCode::NDoesNotDivide, "e does not divide q-1");
  return Symbol(s.a, s.b, e);
}

bool is_obviously_split(const Backend& b, const Symbol& s) {
  if (s.a.is_one() || s.b.is_one()) return true;
  if ((s.a + s.b).is_zero()) return true;
  return nth_power_test(b, s.a, s.n).has_value() || nth_power_test(b, s.b, s.n).has_value();
}

std::map<std::uint32_t, SymbolProduct> primary_decompose(const SymbolProduct& p) {
  validate(p);
  const std::uint32_t N = p.common_degree();
  std::map<std::uint32_t, SymbolProduct> out;
  for (auto prime64 : prime_factors(N)) {
    const auto prime = static_cast<std::uint32_t>(prime64);
    std::uint32_t pe = 1;
    while (N % (pe * prime) == 0) pe *= prime;
    const std::uint32_t M = N / pe;
    // m = 1 mod p^e, 0 mod M
    std::uint32_t m = 0;
    for (std::uint32_t c = 0; c < N; ++c) {
      if (c % pe == 1 % pe && c % M == 0) {
        m = c;
        break;
      }
    }
    SymbolProduct comp{p.backend, p.kind, {}};
    for (const auto& s : p.factors) {
      std::uint32_t pv = 1;
      while (s.n % (pv * prime) == 0) pv *= prime;
      if (pv == 1) continue;
      const std::uint32_t cofactor = s.n / pv;
      // (a, b^m)_d = (a, (b^(m/d'))^(d'))_d ~ (a, b^(m/d'))_{p^v}
      const long long ex = static_cast<long long>(m / cofactor) % pv;
      if (ex == 0) continue;
      comp.factors.emplace_back(s.a, s.b.pow(ex), pv);
    }
    if (!comp.factors.empty()) out.emplace(prime, std::move(comp));
  }
  return out;
}

}  // namespace symlen
