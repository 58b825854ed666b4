#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace symlen {

/// Element of F_q stored by index: coefficients c_0..c_{k-1} of the residue
/// mod the field modulus, packed as sum c_i p^i. Index order is the canonical
/// element order (lexicographic with the leading coefficient most significant).
struct FqElem {
  std::uint32_t v = 0;
  friend constexpr auto operator<=>(FqElem, FqElem) = default;
};

/// F_q with q = p^k <= 2^16, backed by log/antilog tables.
///
/// Instances are interned: `get` returns a reference that lives for the whole
/// program, so polynomials may hold plain pointers to their coefficient field.
class FiniteField {
 public:
  static const FiniteField& get(std::uint32_t p, unsigned k = 1);
  /// Uses the given monic modulus (coefficients c_0..c_k over F_p).
  static const FiniteField& get_with_modulus(std::uint32_t p, const std::vector<std::uint32_t>& modulus);
  /// Accepts q = p^k and picks the least irreducible modulus.
  static const FiniteField& get_order(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FqElem generator() const { return FqElem{exp_[1]}; }

  FqElem zero() const { return {0}; }
  FqElem one() const { return {1}; }
  FqElem from_int(long long x) const;
  FqElem from_coeffs(const std::vector<std::uint32_t>& c) const;
  std::vector<std::uint32_t> coeffs(FqElem a) const;

  FqElem add(FqElem a, FqElem b) const {
    if (k_ == 1) {
      std::uint32_t s = a.v + b.v;
      return {s >= p_ ? s - p_ : s};
    }
    if (!add_table_.empty()) return {add_table_[a.v * q_ + b.v]};
    return add_slow(a, b);
  }
  FqElem neg(FqElem a) const {
    if (k_ == 1) return {a.v == 0 ? 0 : p_ - a.v};
    return {neg_[a.v]};
  }
  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
  FqElem mul(FqElem a, FqElem b) const {
    if (a.v == 0 || b.v == 0) return {0};
    std::uint32_t s = log_[a.v] + log_[b.v];
    if (s >= q_ - 1) s -= q_ - 1;
    return {exp_[s]};
  }
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  FqElem pow(FqElem a, long long e) const;

  /// Discrete log base the fixed generator; a must be nonzero.
  std::uint32_t log(FqElem a) const;
  FqElem exp(std::uint64_t e) const { return {exp_[e % (q_ - 1)]}; }
  std::uint64_t order(FqElem a) const;

  /// rho_n = g^((q-1)/n); throws NDoesNotDivide unless n | q-1.
  FqElem root_of_unity(std::uint32_t n) const;
  /// Some y with y^n = x, if one exists. x must be nonzero.
  bool nth_root(FqElem x, std::uint32_t n, FqElem& root) const;

  std::string to_string(FqElem a) const;
  std::string name() const;

 private:
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);
  FqElem add_slow(FqElem a, FqElem b) const;
  FqElem mul_slow(FqElem a, FqElem b) const;

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> log_, exp_, neg_;
  std::vector<std::uint16_t> add_table_;
};

std::vector<std::uint32_t> least_irreducible_modulus(std::uint32_t p, unsigned k);
bool is_irreducible_over_prime_field(std::uint32_t p, const std::vector<std::uint32_t>& f);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace symlen
