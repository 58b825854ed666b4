#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symlen/backend.hpp"

namespace symlen {

/// F[x]/(x^n - a) over a backend field.
class KummerAlgebra {
 public:
  KummerAlgebra(Backend backend, std::uint32_t n, RatFunc a);

  const Backend& backend() const { return backend_; }
  std::uint32_t n() const { return n_; }
  const RatFunc& a() const { return a_; }
  /// x^n - a irreducible: a is not a d-th power for any prime d | n, and
  /// a is not in -4 F^4 when 4 | n.
  bool is_field() const { return is_field_; }

  friend bool operator==(const KummerAlgebra& l, const KummerAlgebra& r) {
    return l.backend_ == r.backend_ && l.n_ == r.n_ && l.a_ == r.a_;
  }

 private:
  Backend backend_;
  std::uint32_t n_;
  RatFunc a_;
  bool is_field_;
};

/// Element c_0 + c_1 x + ... + c_{n-1} x^{n-1}.
struct KummerElem {
  std::vector<RatFunc> c;

  static KummerElem scalar(const Backend& b, std::uint32_t n, const RatFunc& s);
  static KummerElem zero(const Backend& b, std::uint32_t n);
  static KummerElem x(const Backend& b, std::uint32_t n);
  bool is_zero() const;
  std::uint32_t n() const { return static_cast<std::uint32_t>(c.size()); }
  friend bool operator==(const KummerElem&, const KummerElem&) = default;
};

KummerElem kummer_mul(const KummerAlgebra& alg, const KummerElem& u, const KummerElem& v);

/// Determinant of multiplication-by-k on the basis 1, x, ..., x^{n-1}.
RatFunc algebra_norm(const KummerAlgebra& alg, const KummerElem& k);

/// Homogeneous degree-n norm polynomial of a generic element, as
/// sum coef * a^a_power * prod c_{idx[i]}. Leibniz expansion of the
/// multiplication-matrix determinant; cached per n.
struct NormTerm {
  long long coef;
  int a_power;
  std::vector<int> idx;  // sorted, size n
};
const std::vector<NormTerm>& norm_template(std::uint32_t n);

/// Evaluate the norm via the template; agrees with algebra_norm.
RatFunc norm_by_template(const RatFunc& a, const KummerElem& k);

/// k(x/s): maps F[x]/(x^n - a) to F[x']/(x'^n - s^n a) preserving norms.
KummerElem rescale(const KummerElem& k, const RatFunc& s);

std::string to_string(const KummerElem& k, const std::string& var = "x");

}  // namespace symlen
