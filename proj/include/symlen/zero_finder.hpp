#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symlen/kummer.hpp"
#include "symlen/search_kernel.hpp"

namespace symlen {

enum class Strategy { Exhaustive, SeededRandom };

/// How a chain over F_q(t) is searched. Auto picks the conic descent for
/// n = 2 and polynomial substitution otherwise.
enum class Method { Auto, Tsen, Descent };

struct SearchBudget {
  std::uint64_t max_candidates = 10'000'000;
  int max_degree = 6;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::SeededRandom;
  Method method = Method::Auto;
  bool parallel = true;
};

struct ZeroCertificate {
  KummerVector v;
  RatFunc norm;               // recomputed N_t(v), always 0
  std::size_t witness = 0;    // first nonzero flattened coordinate
  PartialNormVector partial;
  int degree = 0;             // substitution degree that produced it
  std::uint64_t candidates = 0;
  std::string method;
};

/// Recompute and check a certificate; throws InvalidCertificate.
void verify(const KummerSpaceChain& chain, const ZeroCertificate& cert);
/// Build a checked certificate from a vector (InvalidCertificate if N_t(v) != 0 or v = 0).
ZeroCertificate certify(const KummerSpaceChain& chain, const KummerVector& v, const std::string& method);

/// Degree bound per flattened coordinate (-1 pins it to 0); the coefficient
/// of t^e in coordinate i is variable offset[i] + e.
struct SubstitutionShape {
  std::vector<int> degree;
  std::vector<std::uint32_t> offset;
  std::uint32_t nvars = 0;
  int max_degree() const;
};

SubstitutionShape uniform_shape(const KummerSpaceChain& chain, int d);
/// Coordinate i gets degree floor((level - w_i) / n), w_i the degree at
/// infinity of the coefficient of its pure n-th power in N_t, so every
/// term of N_t reaches about t^level.
SubstitutionShape balanced_shape(const KummerSpaceChain& chain, int level);
/// Range of levels at which balanced_shape has some coordinate in [0, max_degree].
std::pair<int, int> balanced_levels(const KummerSpaceChain& chain, int max_degree);

/// N_t with coordinates substituted by polynomials of the given shape,
/// denominators cleared, one equation per power of t.
CompiledSystem compile_norm_system(const KummerSpaceChain& chain, const SubstitutionShape& shape);
/// Uniform shape: variable (i, e) has index i (d+1) + e.
CompiledSystem compile_norm_system(const KummerSpaceChain& chain, int d);
KummerVector vector_from_point(const KummerSpaceChain& chain, const SubstitutionShape& shape,
                               const std::vector<FqElem>& z);

/// Chevalley-Warning search over F_q (constant slots). Exhaustive mode walks
/// points in lexicographic order of the reversed coordinates, f fastest.
/// NotFound on budget exhaustion.
ZeroCertificate cw_search(const KummerSpaceChain& chain, const SearchBudget& budget);

/// Substitution search over F_q(t) through balanced levels, every coordinate
/// of degree <= max_degree. NotFound on exhaustion.
ZeroCertificate tsen_search(const KummerSpaceChain& chain, const SearchBudget& budget);

/// Dispatch on backend, degree and budget.method.
ZeroCertificate find_zero(const KummerSpaceChain& chain, const SearchBudget& budget);

}  // namespace symlen
