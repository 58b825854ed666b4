#include "cli.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symlen/errors.hpp"
#include "symlen/milnor.hpp"
#include "symlen/report.hpp"
#include "symlen/text.hpp"

namespace symlen::cli {

using nlohmann::json;

namespace {

struct Config {
  std::uint32_t q = 5;
  std::vector<std::uint32_t> ext_modulus;
  bool rational = false;
  std::optional<std::uint32_t> n;
  std::uint64_t seed = 0;
  std::uint64_t max_candidates = 10'000'000;
  int max_degree = 6;
  std::string strategy = "random";
  std::string method = "auto";
  std::string format = "json";
};

// exit codes
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kBudget = 2;

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--q", c.q, "field order q = p^k")->capture_default_str();
  sub->add_option("--ext-modulus", c.ext_modulus, "monic modulus c0 c1 ... ck over F_p for k > 1")->delimiter(',');
  sub->add_flag("--rational", c.rational, "work over F_q(t) instead of F_q");
  sub->add_option("--n", c.n, "symbol degree used when a symbol omits _n");
  sub->add_option("--seed", c.seed, "seed for every random choice")->capture_default_str();
  sub->add_option("--max-candidates", c.max_candidates, "search budget")->capture_default_str();
  sub->add_option("--max-degree", c.max_degree, "substitution degree bound over F_q(t)")->capture_default_str();
  sub->add_option("--strategy", c.strategy, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}))
      ->capture_default_str();
  sub->add_option("--method", c.method, "auto, tsen or descent")
      ->check(CLI::IsMember({"auto", "tsen", "descent"}))
      ->capture_default_str();
  sub->add_option("--format", c.format, "json or plain")->check(CLI::IsMember({"json", "plain"}))->capture_default_str();
}

const FiniteField& field_of(const Config& c) {
  if (c.ext_modulus.empty()) return FiniteField::get_order(c.q);
  std::uint32_t p = 2;
  while (c.q % p) ++p;
  const FiniteField& f = FiniteField::get_with_modulus(p, c.ext_modulus);
  if (f.q() != c.q) throw Error(ErrorCode::BadBackend, "modulus defines a field of order " + std::to_string(f.q()));
  return f;
}

Backend backend_of(const Config& c, bool force_rational = false) {
  Backend b(field_of(c), c.rational || force_rational);
  if (c.n && !b.hosts_degree(*c.n)) {
    throw Error(ErrorCode::NDoesNotDivide, std::to_string(*c.n) + " does not divide q - 1 = " + std::to_string(c.q - 1));
  }
  return b;
}

SearchBudget budget_of(const Config& c) {
  SearchBudget b;
  b.seed = c.seed;
  b.max_candidates = c.max_candidates;
  b.max_degree = c.max_degree;
  b.strategy = c.strategy == "exhaustive" ? Strategy::Exhaustive : Strategy::SeededRandom;
  b.method = c.method == "tsen" ? Method::Tsen : c.method == "descent" ? Method::Descent : Method::Auto;
  return b;
}

SymbolProduct parse(const Backend& b, const Config& c, const std::string& text) {
  SymbolProduct p = parse_product(b, text, c.n);
  validate(p);
  return p;
}

void emit(std::ostream& out, const Config& c, const json& j, const std::string& plain) {
  if (c.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << plain;
  }
}

int cmd_reduce(const Config& c, const std::string& text, bool layered, std::ostream& out) {
  const Backend b = backend_of(c);
  const SymbolProduct p = parse(b, c, text);
  const ReductionReport rep = layered ? layered_reduce(p, budget_of(c)) : reduce_to_bound(p, budget_of(c));
  emit(out, c, to_json(rep), render_plain(rep));
  if (rep.oracle_checked && !rep.oracle_equal) throw Error(ErrorCode::ReplayMismatch, "oracle verdict negative");
  if (rep.budget_exhausted || rep.final_count > rep.target) return kBudget;
  return kOk;
}

int cmd_equiv(const Config& c, const std::string& t1, const std::string& t2, std::ostream& out) {
  const Backend b = backend_of(c);
  const SymbolProduct p1 = parse(b, c, t1), p2 = parse(b, c, t2);
  const bool eq = equiv(p1, p2);
  json j{{"equivalent", eq}, {"left", invariants_json(p1)}, {"right", invariants_json(p2)}};
  emit(out, c, j, std::string(eq ? "equivalent" : "not equivalent") + "\n");
  return kOk;
}

int cmd_invariants(const Config& c, const std::string& text, std::ostream& out) {
  const Backend b = backend_of(c);
  const SymbolProduct p = parse(b, c, text);
  const json j = invariants_json(p);
  std::string plain = "product: " + to_string(p) + "\n";
  plain += "exponent: " + std::to_string(j["exponent"].get<std::uint64_t>()) + "\n";
  plain += "index: " + std::to_string(j["index"].get<std::uint64_t>()) + "\n";
  plain += "residues:";
  for (const auto& r : j["residues"]["classes"]) {
    plain += " " + r["place"].get<std::string>() + ":" + std::to_string(r["value"].get<std::uint32_t>());
  }
  plain += j["residues"]["classes"].empty() ? " none\n" : "\n";
  emit(out, c, j, plain);
  return kOk;
}

int cmd_zero_find(const Config& c, const std::string& text, std::ostream& out) {
  const Backend b = backend_of(c);
  const SymbolProduct p = parse(b, c, text);
  const KummerSpaceChain chain = build_chain(p);
  const ZeroCertificate cert = find_zero(chain, budget_of(c));
  emit(out, c, json{{"product", to_json(p)}, {"certificate", to_json(cert)}}, render_plain(cert));
  return kOk;
}

int cmd_demo(const Config& c, const std::vector<std::string>& slots, std::ostream& out) {
  const Backend b = backend_of(c, true);
  ReductionReport rep = [&] {
    if (slots.empty()) {
      SymbolProduct d = demo_input(c.q);
      if (!(d.backend == b)) {
        // same field under a user-chosen modulus: rebuild the default through text
        d = parse_product(b, "{t, " + d.factors[0].b.to_string() + "}_2 + {t + 1, " + d.factors[1].b.to_string() + "}_2");
      }
      return demo_section8(d, budget_of(c));
    }
    SymbolProduct alpha{b, Interpretation::Milnor, {}};
    alpha.factors.emplace_back(parse_element(b, slots[0]), parse_element(b, slots[1]), 2);
    alpha.factors.emplace_back(parse_element(b, slots[2]), parse_element(b, slots[3]), 2);
    return demo_section8(alpha, budget_of(c));
  }();
  emit(out, c, to_json(rep), render_plain(rep));
  return rep.final_count == 1 && rep.oracle_equal ? kOk : kBudget;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExhausted:
    case ErrorCode::NotFound:
    case ErrorCode::TooLarge:
      return kBudget;
    default:
      return kUsage;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"symlen: shorten sums of symbols over F_q and F_q(t)"};
  app.require_subcommand(1);
  Config c;
  std::string text, text2;
  bool layered = false;
  std::string a1, b1, a2, b2;

  auto* reduce = app.add_subcommand("reduce", "shorten a product of symbols and verify it against the residue oracle");
  add_common(reduce, c);
  reduce->add_flag("--layered", layered, "degree p^T inputs: reduce layer by layer");
  reduce->add_option("product", text, "e.g. \"(t,2)_2*(t+1,3)_2\"")->required();

  auto* eq = app.add_subcommand("equiv", "compare two products by residue vectors");
  add_common(eq, c);
  eq->add_option("left", text)->required();
  eq->add_option("right", text2)->required();

  auto* inv = app.add_subcommand("invariants", "residue vector, exponent and index");
  add_common(inv, c);
  inv->add_option("product", text)->required();

  auto* zf = app.add_subcommand("zero-find", "find a nonzero zero of the norm form of a product");
  add_common(zf, c);
  zf->add_option("product", text)->required();

  auto* demo = app.add_subcommand("demo-section8", "rewrite {a1,b1} + {a2,b2} mod 2 over F_q(t) as one symbol");
  add_common(demo, c);
  demo->add_option("--a1", a1);
  demo->add_option("--b1", b1);
  demo->add_option("--a2", a2);
  demo->add_option("--b2", b2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e, out, err);
    return r == 0 ? kOk : kUsage;
  }

  try {
    if (*reduce) return cmd_reduce(c, text, layered, out);
    if (*eq) return cmd_equiv(c, text, text2, out);
    if (*inv) return cmd_invariants(c, text, out);
    if (*zf) return cmd_zero_find(c, text, out);
    std::vector<std::string> slots{a1, b1, a2, b2};
    const int given = static_cast<int>(!a1.empty()) + !b1.empty() + !a2.empty() + !b2.empty();
    if (given != 0 && given != 4) {
      err << "error: give all of --a1 --b1 --a2 --b2 or none\n";
      return kUsage;
    }
    if (given == 0) slots.clear();
    return cmd_demo(c, slots, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace symlen::cli
