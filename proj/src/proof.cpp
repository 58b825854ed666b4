#include "symlen/proof.hpp"

#include <utility>

#include "symlen/brauer_oracle.hpp"
#include "symlen/errors.hpp"
#include "symlen/text.hpp"

namespace symlen {

using nlohmann::json;

json encode(const RatFunc& x) { return x.to_string(); }

json encode(const KummerElem& k) {
  json arr = json::array();
  for (const auto& c : k.c) arr.push_back(c.to_string());
  return arr;
}

RatFunc decode_element(const Backend& b, const json& j) {
  if (!j.is_string()) throw Error(ErrorCode::Parse, "element must be a string");
  return parse_element(b, j.get<std::string>());
}

KummerElem decode_kummer(const Backend& b, const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "Kummer element must be an array");
  KummerElem k;
  for (const auto& c : j) k.c.push_back(decode_element(b, c));
  return k;
}

namespace {

void need(const std::vector<std::size_t>& index, std::size_t count, const SymbolProduct& p, const std::string& rule) {
  if (index.size() != count) throw Error(ErrorCode::ReplayMismatch, rule + ": wrong number of indices");
  for (std::size_t i : index) {
    if (i >= p.factors.size()) throw Error(ErrorCode::ReplayMismatch, rule + ": index out of range");
  }
  if (count == 2 && index[0] == index[1]) throw Error(ErrorCode::ReplayMismatch, rule + ": indices must differ");
}

bool delete_justified(const SymbolProduct& p, const Symbol& s, const std::string& reason) {
  const Backend& b = p.backend;
  if (reason == "unit") return s.a.is_one() || s.b.is_one();
  if (reason == "minus") return (s.a + s.b).is_zero();
  if (reason == "steinberg") return (s.a + s.b).is_one() && !s.a.is_one();
  if (reason == "power") return nth_power_test(b, s.a, s.n).has_value() || nth_power_test(b, s.b, s.n).has_value();
  if (reason == "oracle") return residue_vector(SymbolProduct{b, p.kind, {s}}).trivial();
  throw Error(ErrorCode::ReplayMismatch, "unknown delete reason " + reason);
}

void erase_at(std::vector<Symbol>& v, std::size_t i) { v.erase(v.begin() + static_cast<std::ptrdiff_t>(i)); }

}  // namespace

SymbolProduct apply_rule(const SymbolProduct& p, const std::string& rule, const json& params,
                         const std::vector<std::size_t>& index) {
  const Backend& b = p.backend;
  SymbolProduct out = p;
  auto& fs = out.factors;
  if (rule == "slot_normalize") {
    need(index, 1, p, rule);
    fs[index[0]] = slot_normalize(b, fs[index[0]]);
  } else if (rule == "norm_twist") {
    need(index, 1, p, rule);
    fs[index[0]] = norm_twist(b, fs[index[0]], decode_kummer(b, params.at("k")));
  } else if (rule == "power_twist") {
    need(index, 1, p, rule);
    fs[index[0]] = power_twist(b, fs[index[0]], decode_element(b, params.at("f")));
  } else if (rule == "chain") {
    need(index, 1, p, rule);
    fs[index[0]] = chain(b, fs[index[0]]);
  } else if (rule == "reorder") {
    need(index, 2, p, rule);
    std::swap(fs[index[0]], fs[index[1]]);
  } else if (rule == "swap") {
    need(index, 1, p, rule);
    fs[index[0]] = swap_slots(b, fs[index[0]]);
  } else if (rule == "inverse") {
    need(index, 1, p, rule);
    fs[index[0]] = inverse(fs[index[0]]);
  } else if (rule == "pair_merge") {
    need(index, 2, p, rule);
    auto [s1, s2] = pair_merge(b, fs[index[0]], fs[index[1]]);
    fs[index[0]] = s1;
    fs[index[1]] = s2;
  } else if (rule == "pair_merge_with_norm") {
    need(index, 2, p, rule);
    auto [s1, s2] = pair_merge_with_norm(b, fs[index[0]], fs[index[1]], decode_kummer(b, params.at("k")));
    fs[index[0]] = s1;
    fs[index[1]] = s2;
  } else if (rule == "combine_common_slot") {
    need(index, 2, p, rule);
    fs[index[0]] = combine_common_slot(b, fs[index[0]], fs[index[1]]);
    erase_at(fs, index[1]);
  } else if (rule == "coprime_combine") {
    need(index, 2, p, rule);
    fs[index[0]] = coprime_combine(b, fs[index[0]], fs[index[1]]);
    erase_at(fs, index[1]);
  } else if (rule == "inflate") {
    need(index, 1, p, rule);
    const auto copies = inflate(b, fs[index[0]], params.at("k").get<std::uint32_t>());
    erase_at(fs, index[0]);
    fs.insert(fs.begin() + static_cast<std::ptrdiff_t>(index[0]), copies.begin(), copies.end());
  } else if (rule == "deflate_power") {
    need(index, 1, p, rule);
    fs[index[0]] = deflate_power(b, fs[index[0]], params.at("e").get<std::uint32_t>());
  } else if (rule == "delete_split") {
    need(index, 1, p, rule);
    const std::string reason = params.at("reason").get<std::string>();
    if (!delete_justified(p, fs[index[0]], reason)) {
      throw Error(ErrorCode::ReplayMismatch, "delete_split(" + reason + ") not justified for " + to_string(fs[index[0]]));
    }
    erase_at(fs, index[0]);
  } else {
    throw Error(ErrorCode::ReplayMismatch, "unknown rule " + rule);
  }
  return out;
}

ProofBuilder::ProofBuilder(SymbolProduct initial) : proof_{initial, {}, initial} {}

void ProofBuilder::apply(const std::string& rule, const std::vector<std::size_t>& index, json params,
                         std::string label) {
  SymbolProduct next = apply_rule(proof_.final, rule, params, index);
  RewriteStep step{rule, std::move(params), index, proof_.final.factors, next.factors, std::move(label)};
  proof_.steps.push_back(std::move(step));
  proof_.final = std::move(next);
}

void ProofBuilder::append(const RewriteProof& other) {
  if (!(other.initial == proof_.final)) throw Error(ErrorCode::ReplayMismatch, "appended proof does not chain");
  for (const auto& s : other.steps) proof_.steps.push_back(s);
  proof_.final = other.final;
}

void replay(const RewriteProof& proof) {
  SymbolProduct cur = proof.initial;
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const auto& s = proof.steps[i];
    if (!(s.before == cur.factors)) throw Error(ErrorCode::ReplayMismatch, "step " + std::to_string(i) + " does not chain");
    cur = apply_rule(cur, s.rule, s.params, s.index);
    if (!(cur.factors == s.after)) throw Error(ErrorCode::ReplayMismatch, "step " + std::to_string(i) + " diverges");
  }
  if (!(cur == proof.final)) throw Error(ErrorCode::ReplayMismatch, "final product differs");
}

json to_json(const Symbol& s) { return json{{"a", s.a.to_string()}, {"b", s.b.to_string()}, {"n", s.n}}; }

json to_json(const SymbolProduct& p) {
  json fs = json::array();
  for (const auto& s : p.factors) fs.push_back(to_json(s));
  return json{{"backend", p.backend.name()},
              {"interpretation", p.kind == Interpretation::Milnor ? "milnor" : "brauer"},
              {"text", to_string(p)},
              {"factors", fs}};
}

json to_json(const RewriteProof& proof) {
  json steps = json::array();
  for (const auto& s : proof.steps) {
    json after = json::array();
    for (const auto& f : s.after) after.push_back(to_json(f));
    json j{{"rule", s.rule}, {"params", s.params}, {"index", s.index}, {"after", after}};
    if (!s.label.empty()) j["label"] = s.label;
    steps.push_back(std::move(j));
  }
  return json{{"initial", to_json(proof.initial)}, {"steps", steps}, {"final", to_json(proof.final)}};
}

namespace {

SymbolProduct product_from_json(const Backend& b, const json& j) {
  SymbolProduct p{b, j.at("interpretation") == "milnor" ? Interpretation::Milnor : Interpretation::Brauer, {}};
  for (const auto& f : j.at("factors")) {
    p.factors.emplace_back(decode_element(b, f.at("a")), decode_element(b, f.at("b")), f.at("n").get<std::uint32_t>());
  }
  return p;
}

}  // namespace

RewriteProof proof_from_json(const Backend& b, const json& j) {
  RewriteProof proof{product_from_json(b, j.at("initial")), {}, product_from_json(b, j.at("final"))};
  std::vector<Symbol> prev = proof.initial.factors;
  for (const auto& s : j.at("steps")) {
    RewriteStep step;
    step.rule = s.at("rule").get<std::string>();
    step.params = s.at("params");
    step.index = s.at("index").get<std::vector<std::size_t>>();
    step.before = prev;
    for (const auto& f : s.at("after")) {
      step.after.emplace_back(decode_element(b, f.at("a")), decode_element(b, f.at("b")), f.at("n").get<std::uint32_t>());
    }
    if (s.contains("label")) step.label = s.at("label").get<std::string>();
    prev = step.after;
    proof.steps.push_back(std::move(step));
  }
  return proof;
}

}  // namespace symlen
