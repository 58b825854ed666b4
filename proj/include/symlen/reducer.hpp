#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "symlen/brauer_oracle.hpp"
#include "symlen/proof.hpp"
#include "symlen/zero_finder.hpp"

namespace symlen {

struct ReductionReport {
  explicit ReductionReport(RewriteProof p) : proof(std::move(p)) {}

  RewriteProof proof;
  std::size_t initial_count = 0;
  std::size_t final_count = 0;
  std::size_t target = 0;
  std::vector<ZeroCertificate> certificates;
  bool oracle_checked = false;  // always true over F_q(t)
  bool oracle_equal = false;
  bool budget_exhausted = false;
  std::string message;
  // layered runs: the output grouped by degree, and the reduction of A^p
  std::vector<SymbolProduct> layers;
  std::vector<ReductionReport> sub_reports;
};

/// Factors [offset, offset + t) of pb.current() are rewritten so that factor
/// offset + t - 1 has first slot N_t(v). ZeroNorm if N_t(v) = 0.
void rewrite_with_slot(ProofBuilder& pb, std::size_t offset, std::size_t t, const KummerVector& v);
SymbolProduct rewrite_with_slot(const SymbolProduct& p, const KummerVector& v);

/// Factor i gets first slot N_{i+1}(v). ZeroPartial if some partial vanishes.
void rewrite_all_slots(ProofBuilder& pb, std::size_t offset, std::size_t t, const KummerVector& v);
SymbolProduct rewrite_all_slots(const SymbolProduct& p, const KummerVector& v);

/// Drops one factor of the window [offset, offset + t) using a zero of its norm form.
void shorten(ProofBuilder& pb, std::size_t offset, std::size_t t, const ZeroCertificate& cert);
SymbolProduct shorten(const SymbolProduct& p, const ZeroCertificate& cert);

/// Delete split factors, clear denominators, strip n-th powers, normalize first slots.
void cleanup(ProofBuilder& pb, bool use_oracle);

/// Shorten until at most max(n^(m-1) - 1, 0) factors remain (m = C_m index).
ReductionReport reduce_to_bound(const SymbolProduct& p, const SearchBudget& budget);

/// Degree p^T input: reduce A^p recursively, lift it to B', present
/// C_1 = A (x) B'^-1 by degree-p symbols and reduce it.
/// Throws UnreachableLayer when C_1 has no structural presentation and
/// residue presentation is disabled.
ReductionReport layered_reduce(const SymbolProduct& p, const SearchBudget& budget,
                               bool allow_residue_presentation = true);

/// Degree-p symbols with the given residue vector (values in Z/p), one per
/// place processed, built as (pi, u)_p with deg u < deg pi.
SymbolProduct present_by_residues(const Backend& b, const ResidueVector& target, std::uint32_t p);

}  // namespace symlen
