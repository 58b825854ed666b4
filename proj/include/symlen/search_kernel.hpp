#pragma once

#include <cstdint>
#include <vector>

#include "symlen/finite_field.hpp"

namespace symlen {

/// A system of homogeneous polynomial equations over F_q, each a sparse sum of
/// coef * z_{v_1} ... z_{v_deg}. Points are indexed either lexicographically
/// (first variable most significant) or by a counter-based hash of (seed, i).
class CompiledSystem {
 public:
  CompiledSystem(const FiniteField& f, std::uint32_t nvars, std::uint32_t degree);

  const FiniteField& field() const { return *f_; }
  std::uint32_t nvars() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  std::size_t equations() const { return eq_begin_.size() - 1; }
  std::size_t terms() const { return coef_.size(); }

  /// Append a term to the equation currently being built. vars.size() == degree.
  void add_term(FqElem coef, const std::vector<std::uint32_t>& vars);
  /// Close the current equation (merging duplicate monomials, dropping zeros).
  void end_equation();
  /// Drop equations with no terms.
  void prune();

  bool is_zero_at(const FqElem* z) const;
  FqElem eval(std::size_t eq, const FqElem* z) const;
  /// Every equation at z, into out[0 .. equations()).
  void eval_all(const FqElem* z, FqElem* out) const;
  /// Terms on variables [lo, hi), renumbered from 0. Every equation is kept so
  /// indices line up; DegreeMismatch if a term straddles the range.
  CompiledSystem restrict(std::uint32_t lo, std::uint32_t hi) const;

 private:
  const FiniteField* f_;
  std::uint32_t nvars_, degree_;
  std::vector<std::size_t> eq_begin_{0};
  std::vector<FqElem> coef_;
  std::vector<std::uint32_t> vars_;
  std::vector<std::pair<std::vector<std::uint32_t>, FqElem>> pending_;
};

enum class Enumeration { Lexicographic, Hashed };

struct KernelResult {
  bool found = false;
  std::uint64_t index = 0;   // position in the enumeration of the reported zero
  std::uint64_t examined = 0;
  std::vector<FqElem> point;
};

/// Point number i of the enumeration (Lexicographic: base-q digits of i).
void point_at(const CompiledSystem& sys, Enumeration mode, std::uint64_t seed, std::uint64_t i, FqElem* out);

/// Least index in [begin, end) whose point is a nonzero zero of the system.
KernelResult search_serial(const CompiledSystem& sys, Enumeration mode, std::uint64_t seed, std::uint64_t begin,
                           std::uint64_t end);
/// Same contract; OpenMP over blocks, the least hit in the first block with
/// any hit wins, so the result equals search_serial.
KernelResult search_parallel(const CompiledSystem& sys, Enumeration mode, std::uint64_t seed, std::uint64_t begin,
                             std::uint64_t end);

/// Meet in the middle for systems whose terms each live on one side of
/// `boundary`: the right-hand values of `table` points (all of them, or the
/// first `table` hashed ones) are tabulated, then left points i in [begin, end)
/// are looked up. Reports the least left index with a hit; examined counts
/// left evaluations plus the table.
KernelResult search_split(const CompiledSystem& sys, std::uint32_t boundary, std::uint64_t table, Enumeration mode,
                          std::uint64_t seed, std::uint64_t begin, std::uint64_t end, bool parallel);

}  // namespace symlen
