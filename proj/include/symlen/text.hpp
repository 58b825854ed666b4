#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "symlen/symbols.hpp"

namespace symlen {

/// Parse an element: integers, [c0,c1,...] tuples, t, + - * / ^ and parentheses.
/// Errors carry "line L, column C".
RatFunc parse_element(const Backend& b, std::string_view text);

/// `(a,b)_n * (c,d)_n * ...` (Brauer) or `{a,b}_n + ...` (Milnor).
/// "1" and "0" are the empty products. `_n` may be omitted when default_n is given.
SymbolProduct parse_product(const Backend& b, std::string_view text,
                            std::optional<std::uint32_t> default_n = std::nullopt);

std::string to_string(const Symbol& s, Interpretation kind = Interpretation::Brauer);
std::string to_string(const SymbolProduct& p);

}  // namespace symlen
