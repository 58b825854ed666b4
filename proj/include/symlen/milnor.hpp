#pragma once

#include <cstddef>
#include <cstdint>

#include "symlen/reducer.hpp"

namespace symlen {

// The seven relations of K_2(F)/n, numbered as follows:
//   (1) {a, 1-a} = 0         (2) {f, 1} = 0          (3) {a,b} = {f^n a, b}
//   (4) {a,b} = {a, N(k) b}  (5) {f, -f} = 0         (6) {a,b} = {a+b, -a^-1 b}
//   (7) {a,b} + {c,d} = {a, b d^-1} + {a c, d}

/// (1). NotSteinberg unless b = 1 - a.
SymbolProduct steinberg_delete(const SymbolProduct& p, std::size_t i);
/// (2). NotUnit unless a = 1 or b = 1.
SymbolProduct unit_delete(const SymbolProduct& p, std::size_t i);
/// (3). ZeroScalar if f = 0.
SymbolProduct power_twist(const SymbolProduct& p, std::size_t i, const RatFunc& f);
/// (4), K = F[a^(1/n)]. ZeroTwist if N(k) = 0.
SymbolProduct milnor_norm_twist(const SymbolProduct& p, std::size_t i, const KummerElem& k);
/// (5). NotMinusPair unless b = -a.
SymbolProduct minus_delete(const SymbolProduct& p, std::size_t i);
/// (6). SumIsZero if a + b = 0.
SymbolProduct milnor_chain(const SymbolProduct& p, std::size_t i);
/// (7), the result replaces factors i and j in place.
SymbolProduct milnor_merge(const SymbolProduct& p, std::size_t i, std::size_t j);

/// {t, c1} + {t+1, c2} with c1 < c2 the two least nonsquares of F_q.
SymbolProduct demo_input(std::uint32_t q);

/// Rewrites a sum of two Milnor symbols mod 2 over F_q(t) as one symbol
/// through a zero of the norm form N_2, using relations (1)-(7) only.
/// Step labels carry the relation numbers. NotFound when the budget runs out.
ReductionReport demo_section8(const SymbolProduct& alpha, const SearchBudget& budget = {});
ReductionReport demo_section8(std::uint32_t q, const SearchBudget& budget = {});

}  // namespace symlen
