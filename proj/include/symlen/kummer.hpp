#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "symlen/symbols.hpp"

namespace symlen {

/// V_0 = F, V_j = V_{j-1} x_j + F[x_j] y_j inside a product of t symbols of degree n.
struct KummerSpaceChain {
  Backend backend;
  std::uint32_t n = 1;
  std::vector<Symbol> factors;
  std::vector<KummerAlgebra> levels;  // F[x_j]/(x_j^n - a_j)

  std::size_t t() const { return factors.size(); }
  /// dim V_j = j n + 1 for j = 0..t
  std::vector<std::size_t> dims() const;
  std::size_t dim() const { return t() * n + 1; }
};

/// Throws DegreeMismatch on mixed degrees and, when require_field is set,
/// NonFieldSlot if some a_j does not generate a field.
KummerSpaceChain build_chain(const SymbolProduct& p, bool require_field = true);

/// v_0 = f, v_j = v_{j-1} x_j + k_j y_j.
struct KummerVector {
  RatFunc f;
  std::vector<KummerElem> k;

  std::size_t level() const { return k.size(); }
  bool is_zero() const;
  friend bool operator==(const KummerVector&, const KummerVector&) = default;
};

/// (N_1, ..., N_t); N_0 = f^n is implicit.
struct PartialNormVector {
  std::vector<RatFunc> N;
  friend bool operator==(const PartialNormVector&, const PartialNormVector&) = default;
};

/// N_t(v) and all partials. LevelMismatch unless v has the chain's level and n.
std::pair<RatFunc, PartialNormVector> eval_norm(const KummerSpaceChain& chain, const KummerVector& v);

/// Flattening order: f, then k_1 coefficients by increasing power of x_1, then k_2, ...
std::vector<RatFunc> flatten(const KummerVector& v);
KummerVector unflatten(const KummerSpaceChain& chain, const std::vector<RatFunc>& coords);
/// First t' levels of v.
KummerVector truncate(const KummerVector& v, std::size_t level);

/// Structure constants of a tensor product of symbol algebras on the monomial
/// basis prod_i x_i^e_i y_i^f_i. Factor degrees may differ; each uses
/// rho_{n_i} from the fixed generator. Dimension is capped at 4096.
class AlgebraRep {
 public:
  using Elem = std::map<std::uint32_t, RatFunc>;  // basis index -> coefficient

  AlgebraRep(const Backend& b, const std::vector<Symbol>& factors);

  const Backend& backend() const { return backend_; }
  std::uint32_t dim() const { return dim_; }
  std::size_t factor_count() const { return ns_.size(); }

  Elem one() const { return scalar(backend_.one()); }
  Elem scalar(const RatFunc& c) const;
  Elem x(std::size_t i) const;
  Elem y(std::size_t i) const;
  Elem basis(std::uint32_t idx) const;

  Elem mul(const Elem& u, const Elem& v) const;
  Elem add(const Elem& u, const Elem& v) const;
  Elem scale(const Elem& u, const RatFunc& c) const;
  Elem power(const Elem& u, std::uint32_t m) const;

  /// Identity coefficient: the trace form divided by the dimension.
  RatFunc trace(const Elem& u) const;
  bool is_scalar(const Elem& u, RatFunc& value) const;

  /// v_t expanded in the basis (requires equal degrees across factors).
  Elem embed(const KummerVector& v) const;

 private:
  // product of two basis monomials: coefficient times basis index
  std::pair<RatFunc, std::uint32_t> mul_basis(std::uint32_t i, std::uint32_t j) const;

  Backend backend_;
  std::vector<std::uint32_t> ns_;
  std::vector<RatFunc> as_, bs_;
  std::vector<FqElem> rhos_;
  std::uint32_t dim_ = 1;
};

/// v^n computed in the algebra; NotScalar if the result is not in F.
RatFunc oracle_power(const AlgebraRep& rep, const KummerVector& v);

}  // namespace symlen
