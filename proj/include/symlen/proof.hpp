#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "symlen/symbols.hpp"

namespace symlen {

/// One logged rule application. `params` holds elements in the text grammar.
struct RewriteStep {
  std::string rule;
  nlohmann::json params = nlohmann::json::object();
  std::vector<std::size_t> index;
  std::vector<Symbol> before;
  std::vector<Symbol> after;
  std::string label;  // free-form annotation, e.g. a relation number
};

struct RewriteProof {
  SymbolProduct initial;
  std::vector<RewriteStep> steps;
  SymbolProduct final;
};

/// Rules understood by apply_rule:
///   slot_normalize [i]; norm_twist [i] {k}; power_twist [i] {f}; chain [i];
///   swap [i]; reorder [i,j] (exchange two factors); inverse [i]; pair_merge [i,j]; pair_merge_with_norm [i,j] {k};
///   combine_common_slot [i,j]; coprime_combine [i,j]; inflate [i] {k};
///   deflate_power [i] {e}; delete_split [i] {reason}
/// delete_split reasons: unit, minus, power, steinberg, oracle.
SymbolProduct apply_rule(const SymbolProduct& p, const std::string& rule, const nlohmann::json& params,
                         const std::vector<std::size_t>& index);

nlohmann::json encode(const RatFunc& x);
nlohmann::json encode(const KummerElem& k);
RatFunc decode_element(const Backend& b, const nlohmann::json& j);
KummerElem decode_kummer(const Backend& b, const nlohmann::json& j);

/// Appends verified steps to a proof; the current product is always proof.final.
class ProofBuilder {
 public:
  explicit ProofBuilder(SymbolProduct initial);

  const SymbolProduct& current() const { return proof_.final; }
  const RewriteProof& proof() const { return proof_; }
  RewriteProof take() { return std::move(proof_); }

  void apply(const std::string& rule, const std::vector<std::size_t>& index,
             nlohmann::json params = nlohmann::json::object(), std::string label = {});
  /// Appends another proof's steps (its initial must equal current()).
  void append(const RewriteProof& other);

 private:
  RewriteProof proof_;
};

/// Re-applies every step; throws ReplayMismatch on any divergence.
void replay(const RewriteProof& proof);

nlohmann::json to_json(const Symbol& s);
nlohmann::json to_json(const SymbolProduct& p);
nlohmann::json to_json(const RewriteProof& proof);
RewriteProof proof_from_json(const Backend& b, const nlohmann::json& j);

}  // namespace symlen
