// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "symlen/errors.hpp"
#include "symlen/milnor.hpp"
#include "symlen/report.hpp"
#include "symlen/text.hpp"

using namespace symlen;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> reports;  // JSON dumps, for the determinism rerun
};

// every residue vector computed by the suite goes through here
std::uint64_t g_vectors = 0;
std::uint64_t g_violations = 0;

ResidueVector rv(const SymbolProduct& p) {
  ResidueVector v = residue_vector(p);
  ++g_vectors;
  if (!reciprocity_holds(v)) ++g_violations;
  return v;
}

ResidueVector rv(const SymbolProduct& p, std::uint32_t n) {
  ResidueVector v = residue_vector(p, n);
  ++g_vectors;
  if (!reciprocity_holds(v)) ++g_violations;
  return v;
}

// residue vectors compared in Z/L, L the lcm of both degrees
bool same_class(const SymbolProduct& x, const SymbolProduct& y) {
  const std::uint32_t L = std::lcm(x.common_degree(), y.common_degree());
  return rv(x, L) == rv(y, L);
}

Backend rat(std::uint32_t q) { return Backend(FiniteField::get_order(q), true); }
Backend fin(std::uint32_t q) { return Backend(FiniteField::get_order(q), false); }

FqElem rand_fq(const FiniteField& f, std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<std::uint32_t> d(nonzero ? 1 : 0, f.q() - 1);
  return FqElem{d(rng)};
}

Poly rand_poly(const FiniteField& f, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  for (;;) {
    const int d = dd(rng);
    std::vector<FqElem> c;
    for (int i = 0; i <= d; ++i) c.push_back(rand_fq(f, rng, false));
    Poly p(f, c);
    if (!p.is_zero()) return p;
  }
}

RatFunc rand_rat(const Backend& b, std::mt19937_64& rng, int max_deg) {
  return RatFunc(rand_poly(b.fq(), rng, max_deg), rand_poly(b.fq(), rng, max_deg));
}

Symbol rand_symbol(const Backend& b, std::mt19937_64& rng, std::uint32_t n, int max_deg) {
  return Symbol(rand_rat(b, rng, max_deg), rand_rat(b, rng, max_deg), n);
}

KummerElem rand_kummer(const Backend& b, std::mt19937_64& rng, std::uint32_t n, int max_deg) {
  KummerElem k;
  for (std::uint32_t i = 0; i < n; ++i) k.c.push_back(RatFunc(rand_poly(b.fq(), rng, max_deg)));
  return k;
}

std::string dump(const ReductionReport& rep) { return to_json(rep).dump(); }

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome out;
  const Backend r = rat(5);
  std::mt19937_64 rng(1001);
  const auto t0 = Clock::now();
  int reduced = 0, exhausted = 0;
  std::size_t worst = 0;
  for (int i = 0; i < 100; ++i) {
    SymbolProduct p{r, Interpretation::Brauer, {}};
    while (p.size() < 2) {
      Symbol s = rand_symbol(r, rng, 2, 3);
      if (!rv(SymbolProduct{r, Interpretation::Brauer, {s}}).trivial()) p.factors.push_back(s);
    }
    SearchBudget b;
    b.seed = static_cast<std::uint64_t>(i);
    const ReductionReport rep = reduce_to_bound(p, b);
    out.reports.push_back(dump(rep));
    const bool equal = same_class(p, rep.proof.final);
    worst = std::max(worst, rep.final_count);
    if (rep.budget_exhausted) ++exhausted;
    if (!rep.budget_exhausted && rep.final_count <= 1 && rep.oracle_equal && equal) ++reduced;
  }
  const double sec = seconds_since(t0);
  out.pass = reduced == 100 && sec <= 600;
  out.detail = std::to_string(reduced) + "/100 pairs reduced to <= 1 symbol, oracle-equal; max final " +
               std::to_string(worst) + ", exhausted " + std::to_string(exhausted) + ", " + std::to_string(sec) +
               " s (limit 600)";
  return out;
}

Outcome criterion2() {
  Outcome out;
  const Backend r = rat(7);
  std::mt19937_64 rng(2002);
  const auto t0 = Clock::now();
  int ok = 0, exhausted = 0, wrong = 0;
  for (int i = 0; i < 25; ++i) {
    const bool triple = i % 2 == 0;
    const int deg = triple ? 2 : 1;
    SymbolProduct p{r, Interpretation::Brauer, {}};
    while (p.size() < (triple ? 3u : 4u)) {
      Symbol s(RatFunc(rand_poly(r.fq(), rng, deg)), RatFunc(rand_poly(r.fq(), rng, deg)), 3);
      if (!s.a.is_constant() || !s.b.is_constant()) p.factors.push_back(s);
    }
    SearchBudget b;
    b.seed = static_cast<std::uint64_t>(i);
    const ReductionReport rep = reduce_to_bound(p, b);
    out.reports.push_back(dump(rep));
    const bool equal = same_class(p, rep.proof.final);
    if (rep.budget_exhausted) {
      ++exhausted;
    } else if (rep.final_count <= 2 && rep.oracle_equal && equal) {
      ++ok;
    } else {
      ++wrong;
    }
  }
  const double sec = seconds_since(t0);
  out.pass = wrong == 0 && exhausted * 10 <= 25 && ok + exhausted == 25 && sec <= 1800;
  out.detail = std::to_string(ok) + "/25 reduced to <= 2 symbols, oracle-equal; exhausted " + std::to_string(exhausted) +
               " (limit 2), wrong " + std::to_string(wrong) + ", " + std::to_string(sec) + " s (limit 1800)";
  return out;
}

Outcome criterion3() {
  Outcome out;
  const std::vector<std::string> chain{"(4)", "(3)", "(6)", "(4)", "(7)", "(5)"};
  std::vector<std::string> problems;
  SearchBudget b;
  b.seed = 7;
  const ReductionReport rep = demo_section8(5, b);
  out.reports.push_back(dump(rep));
  std::vector<std::string> labels;
  for (const auto& s : rep.proof.steps) labels.push_back(s.label);
  if (labels != chain) problems.push_back("relation chain differs");
  if (rep.certificates.size() != 1 || !rep.certificates[0].norm.is_zero()) problems.push_back("no norm zero");
  else verify(build_chain(rep.proof.initial), rep.certificates[0]);
  if (rep.final_count != 1) problems.push_back("final count " + std::to_string(rep.final_count));
  if (!rep.oracle_equal || !same_class(rep.proof.initial, rep.proof.final)) problems.push_back("oracle differs");
  try {
    replay(rep.proof);
  } catch (const Error& e) {
    problems.push_back(e.what());
  }
  const ReductionReport again = demo_section8(5, b);
  if (dump(again) != dump(rep)) problems.push_back("rerun differs");

  // the N1(v1) = 0 branch
  const Backend r = rat(5);
  const ReductionReport side = demo_section8(parse_product(r, "{t, -t}_2 + {t+1, 2}_2"), b);
  out.reports.push_back(dump(side));
  std::vector<std::string> side_labels;
  for (const auto& s : side.proof.steps) side_labels.push_back(s.label);
  if (side.final_count != 1 || !side.oracle_equal || side_labels != std::vector<std::string>{"(4)", "(3)", "(5)"}) {
    problems.push_back("N1 = 0 branch");
  }

  out.pass = problems.empty();
  out.detail = "chain";
  for (const auto& l : labels) out.detail += " " + l;
  out.detail += ", final " + to_string(rep.proof.final);
  for (const auto& p : problems) out.detail += "; " + p;
  return out;
}

Outcome criterion4() {
  Outcome out;
  const auto t0 = Clock::now();
  int symbols = 0, failures = 0;
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    const Backend f = fin(q);
    for (std::uint32_t n = 2; n <= q - 1; ++n) {
      if ((q - 1) % n) continue;
      for (std::uint32_t a = 1; a < q; ++a) {
        for (std::uint32_t c = 1; c < q; ++c) {
          ++symbols;
          SymbolProduct p{f, Interpretation::Brauer, {Symbol(f.constant(FqElem{a}), f.constant(FqElem{c}), n)}};
          SearchBudget b;
          b.strategy = Strategy::Exhaustive;
          try {
            const KummerSpaceChain chain = build_chain(p, false);
            const ZeroCertificate cert = cw_search(chain, b);
            verify(chain, cert);
            const ReductionReport rep = reduce_to_bound(p, b);
            if (!rep.proof.final.empty() || rep.budget_exhausted) ++failures;
          } catch (const Error&) {
            ++failures;
          }
        }
      }
    }
  }
  const double sec = seconds_since(t0);
  out.pass = failures == 0 && sec <= 300;
  out.detail = std::to_string(symbols) + " constant symbols over F_3, F_5, F_7, F_9: " + std::to_string(failures) +
               " without a zero or not emptied, " + std::to_string(sec) + " s (limit 300)";
  return out;
}

struct Config5 {
  std::uint32_t q, n;
};

Outcome criterion5() {
  Outcome out;
  const std::vector<Config5> configs{{5, 2}, {5, 4}, {7, 2}, {7, 3}, {7, 6}};
  std::mt19937_64 rng(5005);
  using Rule = std::function<std::optional<std::pair<SymbolProduct, SymbolProduct>>(const Backend&, std::uint32_t)>;
  // each rule returns (reference, rewritten) with equal classes expected
  auto pair_of = [&](const Backend& r, std::uint32_t n, Interpretation kind) {
    return SymbolProduct{r, kind, {rand_symbol(r, rng, n, 2), rand_symbol(r, rng, n, 2)}};
  };
  auto via = [](const SymbolProduct& p, const std::string& rule, const nlohmann::json& params,
                std::vector<std::size_t> idx) { return std::make_pair(p, apply_rule(p, rule, params, idx)); };
  const auto B = Interpretation::Brauer, M = Interpretation::Milnor;
  std::vector<std::pair<std::string, Rule>> rules{
      {"norm_twist", [&](const Backend& r, std::uint32_t n) {
         auto p = pair_of(r, n, B);
         return std::optional(via(p, "norm_twist", {{"k", encode(rand_kummer(r, rng, n, 1))}}, {1}));
       }},
      {"power_twist", [&](const Backend& r, std::uint32_t n) {
         auto p = pair_of(r, n, B);
         return std::optional(via(p, "power_twist", {{"f", encode(rand_rat(r, rng, 2))}}, {0}));
       }},
      {"chain", [&](const Backend& r, std::uint32_t n) { return std::optional(via(pair_of(r, n, B), "chain", {}, {0})); }},
      {"pair_merge", [&](const Backend& r, std::uint32_t n) {
         return std::optional(via(pair_of(r, n, B), "pair_merge", {}, {0, 1}));
       }},
      {"pair_merge_with_norm", [&](const Backend& r, std::uint32_t n) {
         auto p = pair_of(r, n, B);
         return std::optional(via(p, "pair_merge_with_norm", {{"k", encode(rand_kummer(r, rng, n, 1))}}, {0, 1}));
       }},
      {"swap", [&](const Backend& r, std::uint32_t n) { return std::optional(via(pair_of(r, n, B), "swap", {}, {1})); }},
      {"combine_common_slot", [&](const Backend& r, std::uint32_t n) {
         auto p = pair_of(r, n, B);
         p.factors[1].a = p.factors[0].a;
         return std::optional(via(p, "combine_common_slot", {}, {0, 1}));
       }},
      {"coprime_combine", [&](const Backend& r, std::uint32_t n) -> std::optional<std::pair<SymbolProduct, SymbolProduct>> {
         if (r.q() != 7 || n == 6) return std::nullopt;
         SymbolProduct p{r, B, {rand_symbol(r, rng, 2, 2), rand_symbol(r, rng, 3, 2)}};
         return via(p, "coprime_combine", {}, {0, 1});
       }},
      {"inflate", [&](const Backend& r, std::uint32_t n) -> std::optional<std::pair<SymbolProduct, SymbolProduct>> {
         for (std::uint32_t k = 2; n * k < r.q(); ++k) {
           if ((r.q() - 1) % (n * k) == 0) return via(pair_of(r, n, B), "inflate", {{"k", k}}, {0});
         }
         return std::nullopt;
       }},
      {"deflate_power", [&](const Backend& r, std::uint32_t n) -> std::optional<std::pair<SymbolProduct, SymbolProduct>> {
         std::uint32_t e = 0;
         for (std::uint32_t d = 2; d < n; ++d) {
           if (n % d == 0) e = d;
         }
         if (e == 0) return std::nullopt;
         auto p = pair_of(r, n, B);
         SymbolProduct ref = p;
         for (std::uint32_t c = 1; c < n / e; ++c) ref.factors.push_back(p.factors[0]);
         return std::make_pair(ref, apply_rule(p, "deflate_power", {{"e", e}}, {0}));
       }},
      {"slot_normalize", [&](const Backend& r, std::uint32_t n) -> std::optional<std::pair<SymbolProduct, SymbolProduct>> {
         if (n % 2) return std::nullopt;
         auto p = pair_of(r, n, B);
         p.factors[0].a = p.factors[0].a * p.factors[0].a;  // (c^2, b) is never a field slot
         return via(p, "slot_normalize", {}, {0});
       }},
      {"steinberg (1)", [&](const Backend& r, std::uint32_t n) {
         auto p = pair_of(r, n, M);
         RatFunc a = rand_rat(r, rng, 2);
         if (a.is_one()) a = a + a;
         SymbolProduct ext = p;
         ext.factors.insert(ext.factors.begin(), Symbol(a, r.one() - a, n));
         return std::optional(std::make_pair(p, steinberg_delete(ext, 0)));
       }},
      {"unit (2)", [&](const Backend& r, std::uint32_t n) {
         auto p = pair_of(r, n, M);
         SymbolProduct ext = p;
         ext.factors.push_back(Symbol(rand_rat(r, rng, 2), r.one(), n));
         return std::optional(std::make_pair(p, unit_delete(ext, 2)));
       }},
      {"power_twist (3)", [&](const Backend& r, std::uint32_t n) {
         auto p = pair_of(r, n, M);
         return std::optional(std::make_pair(p, power_twist(p, 1, rand_rat(r, rng, 2))));
       }},
      {"norm_twist (4)", [&](const Backend& r, std::uint32_t n) {
         auto p = pair_of(r, n, M);
         return std::optional(std::make_pair(p, milnor_norm_twist(p, 0, rand_kummer(r, rng, n, 1))));
       }},
      {"minus (5)", [&](const Backend& r, std::uint32_t n) {
         auto p = pair_of(r, n, M);
         RatFunc f = rand_rat(r, rng, 2);
         SymbolProduct ext = p;
         ext.factors.insert(ext.factors.begin() + 1, Symbol(f, -f, n));
         return std::optional(std::make_pair(p, minus_delete(ext, 1)));
       }},
      {"chain (6)", [&](const Backend& r, std::uint32_t n) {
         auto p = pair_of(r, n, M);
         return std::optional(std::make_pair(p, milnor_chain(p, 1)));
       }},
      {"merge (7)", [&](const Backend& r, std::uint32_t n) {
         auto p = pair_of(r, n, M);
         return std::optional(std::make_pair(p, milnor_merge(p, 1, 0)));
       }},
  };

  const auto t0 = Clock::now();
  std::uint64_t total = 0, failures = 0;
  std::string worst;
  for (const auto& [name, rule] : rules) {
    int done = 0, attempts = 0, k = 0;
    while (done < 1000 && attempts < 20000) {
      ++attempts;
      const Config5 c = configs[static_cast<std::size_t>(k++) % configs.size()];
      const Backend r = rat(c.q);
      std::optional<std::pair<SymbolProduct, SymbolProduct>> res;
      try {
        res = rule(r, c.n);
      } catch (const Error&) {
        continue;  // precondition not met (zero twist, a + b = 0, ...)
      }
      if (!res) continue;
      const std::uint32_t L = std::lcm(res->first.common_degree(), res->second.common_degree());
      ++done;
      if (!(rv(res->first, L) == rv(res->second, L))) ++failures;
    }
    total += static_cast<std::uint64_t>(done);
    if (done < 1000) {
      failures += 1;
      worst += " " + name + " only " + std::to_string(done);
    }
  }
  out.pass = failures == 0;
  out.detail = std::to_string(total) + " applications of " + std::to_string(rules.size()) + " rules, " +
               std::to_string(failures) + " failures, " + std::to_string(seconds_since(t0)) + " s" + worst;
  return out;
}

Outcome criterion6() {
  Outcome out;
  const Backend r = rat(13);
  std::mt19937_64 rng(6006);
  const auto t0 = Clock::now();
  std::uint64_t checked = 0, failures = 0, traces = 0;
  for (std::uint32_t n : {2u, 3u, 4u}) {
    for (std::size_t t = 1; t <= 2; ++t) {
      SymbolProduct p{r, Interpretation::Brauer, {}};
      for (std::size_t j = 0; j < t; ++j) p.factors.push_back(rand_symbol(r, rng, n, 1));
      const KummerSpaceChain chain = build_chain(p, false);
      const AlgebraRep rep(r, p.factors);
      for (int i = 0; i < 500; ++i) {
        KummerVector v{RatFunc(rand_poly(r.fq(), rng, 1)), {}};
        for (std::size_t j = 0; j < t; ++j) v.k.push_back(rand_kummer(r, rng, n, 1));
        ++checked;
        const AlgebraRep::Elem e = rep.embed(v);
        RatFunc scalar = r.zero();
        if (!rep.is_scalar(rep.power(e, n), scalar) || !(scalar == eval_norm(chain, v).first)) ++failures;
        if (n <= 3) {
          for (std::uint32_t m = 1; m < n; ++m) {
            ++traces;
            if (!rep.trace(rep.power(e, m)).is_zero()) ++failures;
          }
        }
      }
    }
  }
  out.pass = failures == 0;
  out.detail = std::to_string(checked) + " vectors (v^n scalar = N_t(v)), " + std::to_string(traces) +
               " trace checks, " + std::to_string(failures) + " failures, " + std::to_string(seconds_since(t0)) + " s";
  return out;
}

Outcome criterion7() {
  Outcome out;
  const Backend r = rat(5);
  std::mt19937_64 rng(7007);
  int failures = 0;
  std::map<std::uint64_t, int> seen;
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t n = i % 2 ? 2 : 4;
    SymbolProduct p{r, Interpretation::Brauer, {}};
    const int count = 1 + i % 3;
    for (int j = 0; j < count; ++j) p.factors.push_back(rand_symbol(r, rng, n, 2));
    const ResidueVector v = rv(p);
    // least k with k v = 0, from the classes
    std::uint64_t k = 1;
    for (;; ++k) {
      bool zero = true;
      for (const auto& [place, value] : v.classes) zero = zero && (k * value) % v.n == 0;
      if (zero) break;
    }
    // and from residue vectors of powers of the product
    std::uint64_t kp = 0;
    SymbolProduct power{r, Interpretation::Brauer, {}};
    for (std::uint64_t m = 1; m <= n; ++m) {
      power.factors.insert(power.factors.end(), p.factors.begin(), p.factors.end());
      if (rv(power).trivial()) {
        kp = m;
        break;
      }
    }
    const std::uint64_t e = exponent(p), ind = index(p);
    ++seen[e];
    if (e != k || kp != k || ind != e || ind % e != 0) ++failures;
  }
  out.pass = failures == 0;
  out.detail = "200 products, " + std::to_string(failures) + " mismatches; exponents seen:";
  for (const auto& [e, c] : seen) out.detail += " " + std::to_string(e) + "x" + std::to_string(c);
  return out;
}

Outcome criterion9() {
  Outcome out;
  const Backend r = rat(7);
  std::mt19937_64 rng(9009);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    const Symbol s2 = rand_symbol(r, rng, 2, 2), s3 = rand_symbol(r, rng, 3, 2);
    const Symbol c = coprime_combine(r, s2, s3);
    if (c.n != 6 || !(rv(SymbolProduct{r, Interpretation::Brauer, {s2, s3}}, 6) ==
                      rv(SymbolProduct{r, Interpretation::Brauer, {c}}, 6))) {
      ++failures;
    }
  }
  out.pass = failures == 0;
  out.detail = "100 (degree-2, degree-3) pairs, " + std::to_string(failures) + " residue mismatches in Z/6";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));
  auto want = [&](int c) { return wanted.empty() || wanted.count(c) > 0; };
  // criterion 8 audits the vectors of 1-7, criterion 10 reruns 1-3
  auto run = [&](int c) { return want(c) || want(8) || (c <= 3 && want(10)); };

  bool all = true;
  auto print = [&](int c, const Outcome& o) {
    std::printf("criterion %d: %s  %s\n", c, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  };
  auto guarded = [](const std::function<Outcome()>& f) {
    try {
      return f();
    } catch (const std::exception& e) {
      Outcome o;
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
      return o;
    }
  };

  const std::vector<std::function<Outcome()>> first{criterion1, criterion2, criterion3};
  std::map<int, Outcome> results;
  for (int c = 1; c <= 3; ++c) {
    if (run(c)) results[c] = guarded(first[static_cast<std::size_t>(c - 1)]);
    if (want(c)) print(c, results[c]);
  }
  if (run(4)) {
    const Outcome o = guarded(criterion4);
    if (want(4)) print(4, o);
  }
  if (run(5)) {
    const Outcome o = guarded(criterion5);
    if (want(5)) print(5, o);
  }
  if (run(6)) {
    const Outcome o = guarded(criterion6);
    if (want(6)) print(6, o);
  }
  if (run(7)) {
    const Outcome o = guarded(criterion7);
    if (want(7)) print(7, o);
  }
  if (want(8)) {
    Outcome o;
    o.pass = g_violations == 0 && g_vectors > 0;
    o.detail = std::to_string(g_vectors) + " residue vectors from the criteria run, " + std::to_string(g_violations) +
               " reciprocity violations";
    print(8, o);
  }
  if (want(9)) print(9, guarded(criterion9));
  if (want(10)) {
    Outcome o;
    int differing = 0;
    std::size_t compared = 0;
    for (int c = 1; c <= 3; ++c) {
      const Outcome again = guarded(first[static_cast<std::size_t>(c - 1)]);
      compared += again.reports.size();
      if (again.reports != results[c].reports) ++differing;
    }
    o.pass = differing == 0 && compared > 0;
    o.detail = std::to_string(compared) + " JSON reports from criteria 1-3 regenerated, " + std::to_string(differing) +
               " criteria with byte differences";
    print(10, o);
  }
  return all ? 0 : 1;
}
