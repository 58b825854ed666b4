#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "symlen/backend.hpp"
#include "symlen/kummer_ext.hpp"

namespace symlen {

/// The symbol algebra (a,b)_n = F<x,y | x^n = a, y^n = b, yx = rho_n xy>, or the
/// Milnor symbol {a,b} mod n. rho_n is always g^((q-1)/n).
struct Symbol {
  RatFunc a;
  RatFunc b;
  std::uint32_t n;

  Symbol(RatFunc a_, RatFunc b_, std::uint32_t n_) : a(std::move(a_)), b(std::move(b_)), n(n_) {}
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

enum class Interpretation { Brauer, Milnor };

struct SymbolProduct {
  Backend backend;
  Interpretation kind = Interpretation::Brauer;
  std::vector<Symbol> factors;

  std::size_t size() const { return factors.size(); }
  bool empty() const { return factors.empty(); }
  /// lcm of factor degrees (1 when empty)
  std::uint32_t common_degree() const;
  friend bool operator==(const SymbolProduct& l, const SymbolProduct& r) {
    return l.backend == r.backend && l.kind == r.kind && l.factors == r.factors;
  }
};

/// Throws unless a, b are nonzero elements of the backend and n | q-1.
void validate(const Backend& b, const Symbol& s);
void validate(const SymbolProduct& p);

KummerAlgebra first_slot_algebra(const Backend& b, const Symbol& s);

/// Rewrite (c^(p^s), b) as (c, b^(p^s)) until the first slot generates a field.
Symbol slot_normalize(const Backend& b, const Symbol& s);
/// (a, N(k) b)
Symbol norm_twist(const Backend& b, const Symbol& s, const KummerElem& k);
/// (f^n a, b)
Symbol power_twist(const Backend& b, const Symbol& s, const RatFunc& f);
/// (a+b, -a^{-1} b)
Symbol chain(const Backend& b, const Symbol& s);
/// (b, a^{-1})
Symbol swap_slots(const Backend& b, const Symbol& s);
/// (a, b^{-1}): the inverse class
Symbol inverse(const Symbol& s);
/// (a1, b1 b2^{-1}) (x) (a1 a2, b2)
std::pair<Symbol, Symbol> pair_merge(const Backend& b, const Symbol& s1, const Symbol& s2);
/// ((a1, b1 (N(k2) b2)^{-1}), (a1 a2 + N(k2) b2, -(a1 a2)^{-1} N(k2) b2))
std::pair<Symbol, Symbol> pair_merge_with_norm(const Backend& b, const Symbol& s1, const Symbol& s2,
                                               const KummerElem& k2);
/// (a, b) (x) (a, c) -> (a, bc)
Symbol combine_common_slot(const Backend& b, const Symbol& s1, const Symbol& s2);

/// Least nonnegative (s, k) with s n1 + k n2 = 1 mod n1 n2, lexicographic.
std::pair<std::uint32_t, std::uint32_t> coprime_exponents(std::uint32_t n1, std::uint32_t n2);
/// (a1^n2 a2^n1, b1^(n2 k) b2^(n1 s))_{n1 n2}
Symbol coprime_combine(const Backend& b, const Symbol& s1, const Symbol& s2);
/// k copies of (a, b)_{dk}
std::vector<Symbol> inflate(const Backend& b, const Symbol& s, std::uint32_t k);
/// (a,b)_d^(d/e) ~ (a,b)_e for e | d; returns (a,b)_e.
Symbol deflate_power(const Backend& b, const Symbol& s, std::uint32_t e);

/// b = 1, a = 1, a + b = 0, a in F^n, or b in F^n. False is inconclusive.
bool is_obviously_split(const Backend& b, const Symbol& s);

/// Prime-power components A_p = A^{m_p} with m_p = 1 mod p^e, 0 mod N/p^e.
std::map<std::uint32_t, SymbolProduct> primary_decompose(const SymbolProduct& p);

}  // namespace symlen
