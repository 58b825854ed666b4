#pragma once

#include <array>
#include <optional>

#include "symlen/zero_finder.hpp"

namespace symlen {

/// Some r with r^2 = b mod a for squarefree a (odd q), or nullopt.
std::optional<Poly> sqrt_mod(const Poly& b, const Poly& a);

/// Nontrivial (X, Y, Z) with a X^2 + b Y^2 = Z^2 over F_q[t], by Lagrange descent
/// on the degree of the larger coefficient. nullopt if the conic has no point.
std::optional<std::array<Poly, 3>> solve_conic(const Poly& a, const Poly& b);

/// k = x + y sqrt(a) with x^2 - a y^2 = c, or nullopt.
std::optional<KummerElem> solve_norm2(const Backend& b, const RatFunc& a, const RatFunc& c);

/// Zero of N_t for n = 2: enumerate v_{t-1}, keep those with -N_{t-1} a_t / b_t
/// a norm from F(sqrt a_t) (residue test), then solve for k_t.
ZeroCertificate descent_search(const KummerSpaceChain& chain, const SearchBudget& budget);

}  // namespace symlen
