#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "symlen/symbols.hpp"

namespace symlen {

/// Tame-symbol class at a place, in Z/n. The value is log_g of the norm of the
/// tame-symbol unit down to F_q, mod n (so rho_n^value = u^((|k(P)|-1)/n)).
struct ResidueClass {
  Place place;
  std::uint32_t value = 0;
  std::uint32_t n = 1;
};

/// Nonzero residue classes, all in Z/n for the product's common degree.
struct ResidueVector {
  std::uint32_t n = 1;
  std::map<Place, std::uint32_t> classes;

  bool trivial() const { return classes.empty(); }
  friend bool operator==(const ResidueVector&, const ResidueVector&) = default;
};

ResidueClass residue_at(const Backend& b, const Symbol& s, const Place& place);

/// Empty over the F_q backend (Br(F_q) = 0).
ResidueVector residue_vector(const SymbolProduct& p);
/// Vector in Z/n for an explicit n (a multiple of the common degree).
ResidueVector residue_vector(const SymbolProduct& p, std::uint32_t n);

/// Residue vectors compared over the lcm of both common degrees.
bool equiv(const SymbolProduct& p1, const SymbolProduct& p2);

/// Classes sum to 0 mod n (norms already carry the corestriction).
bool reciprocity_holds(const ResidueVector& v);

/// lcm of residue orders
std::uint64_t exponent(const SymbolProduct& p);
std::uint64_t index(const SymbolProduct& p);
std::uint64_t exponent(const ResidueVector& v);

/// Places where some slot has nonzero valuation, plus infinity.
std::vector<Place> candidate_places(const SymbolProduct& p);

}  // namespace symlen
