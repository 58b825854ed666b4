#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "symlen/errors.hpp"
#include "symlen/reducer.hpp"

using namespace symlen;
using namespace testutil;

namespace {

SymbolProduct P(const Backend& b, const char* text) { return parse_product(b, text); }

Symbol field_symbol(const Backend& b, std::mt19937_64& rng, std::uint32_t n, int deg) {
  for (;;) {
    Symbol s(RatFunc(rand_poly(b.fq(), rng, deg)), RatFunc(rand_poly(b.fq(), rng, deg)), n);
    if (KummerAlgebra(b, n, s.a).is_field()) return s;
  }
}

SymbolProduct field_product(const Backend& b, std::mt19937_64& rng, std::size_t t, std::uint32_t n, int deg) {
  SymbolProduct p{b, Interpretation::Brauer, {}};
  while (p.size() < t) p.factors.push_back(field_symbol(b, rng, n, deg));
  return p;
}

KummerVector rand_vec(const Backend& b, std::mt19937_64& rng, std::size_t t, std::uint32_t n) {
  KummerVector v{rng() % 3 ? rand_rat(b, rng, 1) : b.zero(), {}};
  for (std::size_t j = 0; j < t; ++j) {
    KummerElem k;
    for (std::uint32_t i = 0; i < n; ++i) k.c.push_back(rng() % 3 ? rand_rat(b, rng, 1) : b.zero());
    v.k.push_back(k);
  }
  return v;
}

SearchBudget small_budget(std::uint64_t seed = 0) {
  SearchBudget s;
  s.max_candidates = 200000;
  s.max_degree = 4;
  s.seed = seed;
  return s;
}

}  // namespace

TEST_CASE("rewrite_with_slot places N_t(v) and preserves the class") {
  std::mt19937_64 rng(101);
  const Backend r = rat(7);
  for (std::uint32_t n : {2u, 3u}) {
    for (std::size_t t = 1; t <= 3; ++t) {
      for (int trial = 0; trial < 8; ++trial) {
        const auto p = field_product(r, rng, t, n, 2);
        const auto v = rand_vec(r, rng, t, n);
        const auto N = eval_norm(build_chain(p), v).first;
        if (N.is_zero()) {
          CHECK_THROWS_AS(rewrite_with_slot(p, v), Error);
          continue;
        }
        ProofBuilder pb(p);
        rewrite_with_slot(pb, 0, t, v);
        CHECK(pb.current().size() == t);
        CHECK(pb.current().factors[t - 1].a == N);
        CHECK(equiv(p, pb.current()));
        CHECK_NOTHROW(replay(pb.proof()));
      }
    }
  }
}

TEST_CASE("rewrite_all_slots") {
  std::mt19937_64 rng(7);
  const Backend r = rat(5);
  int zero_partial = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = field_product(r, rng, 3, 2, 2);
    const auto v = rand_vec(r, rng, 3, 2);
    const auto pn = eval_norm(build_chain(p), v).second;
    bool any_zero = false;
    for (const auto& x : pn.N) any_zero |= x.is_zero();
    if (any_zero) {
      ++zero_partial;
      try {
        rewrite_all_slots(p, v);
        FAIL("expected ZeroPartial");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroPartial);
      }
      continue;
    }
    const auto out = rewrite_all_slots(p, v);
    for (std::size_t j = 0; j < 3; ++j) CHECK(out.factors[j].a == pn.N[j]);
    CHECK(equiv(p, out));
  }
  // v = (0; 0, x; ...) has N_1 = 0
  const auto p = P(r, "(t,2)_2*(t+1,3)_2");
  KummerVector v{r.zero(), {KummerElem::zero(r, 2), KummerElem::x(r, 2)}};
  CHECK_THROWS_AS(rewrite_all_slots(p, v), Error);
}

TEST_CASE("shorten over F_q removes one factor per certificate") {
  std::mt19937_64 rng(3);
  for (std::uint32_t q : {5u, 7u, 13u}) {
    const Backend f = fin(q);
    for (std::uint32_t n : {2u, 3u, 4u}) {
      if ((q - 1) % n) continue;
      for (std::size_t t = 1; t <= 2; ++t) {
        for (int trial = 0; trial < 5; ++trial) {
          SymbolProduct p{f, Interpretation::Brauer, {}};
          while (p.size() < t) {
            Symbol s(f.constant(rand_fq(f.fq(), rng, true)), f.constant(rand_fq(f.fq(), rng, true)), n);
            if (first_slot_algebra(f, s).is_field()) p.factors.push_back(s);
          }
          const auto ch = build_chain(p);
          const auto cert = find_zero(ch, SearchBudget{});
          ProofBuilder pb(p);
          shorten(pb, 0, t, cert);
          CHECK(pb.current().size() == t - 1);
          CHECK_NOTHROW(replay(pb.proof()));
        }
      }
    }
  }
}

TEST_CASE("shorten over F_q(t) keeps the residue vector") {
  std::mt19937_64 rng(19);
  const Backend r = rat(5);
  for (int trial = 0; trial < 12; ++trial) {
    const auto p = field_product(r, rng, 2, 2, 3);
    const auto cert = find_zero(build_chain(p), small_budget(trial));
    const auto out = shorten(p, cert);
    CHECK(out.size() == 1);
    CHECK(equiv(p, out));
  }
}

TEST_CASE("shorten rejects a bad certificate") {
  const Backend f = fin(5);
  const auto p = P(f, "(2,3)_2");
  const auto ch = build_chain(p);
  auto cert = find_zero(ch, SearchBudget{});
  cert.v.f = f.from_int(3);
  try {
    shorten(p, cert);
    FAIL("expected InvalidCertificate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCertificate);
  }
}

TEST_CASE("reduce_to_bound over F_q empties the product") {
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {5u, 7u, 9u}) {
    const Backend f = fin(q);
    SymbolProduct p{f, Interpretation::Brauer, {}};
    for (int i = 0; i < 4; ++i) p.factors.push_back(rand_symbol(f, rng, 2, 0));
    const auto rep = reduce_to_bound(p, SearchBudget{});
    CHECK(rep.target == 0);
    CHECK(rep.proof.final.empty());
    CHECK_FALSE(rep.budget_exhausted);
    CHECK_NOTHROW(replay(rep.proof));
  }
}

TEST_CASE("reduce_to_bound for quaternions over F_q(t)") {
  std::mt19937_64 rng(29);
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const Backend r = rat(q);
    for (int trial = 0; trial < 3; ++trial) {
      SymbolProduct p{r, Interpretation::Brauer, {}};
      for (int i = 0; i < 4; ++i) p.factors.push_back(rand_symbol(r, rng, 2, 2));
      const auto rep = reduce_to_bound(p, small_budget(trial));
      INFO(q, " ", rep.message, " ", to_string(rep.proof.final));
      CHECK_FALSE(rep.budget_exhausted);
      CHECK(rep.proof.final.size() <= 1);
      CHECK(rep.oracle_checked);
      CHECK(rep.oracle_equal);
      CHECK_NOTHROW(replay(rep.proof));
    }
  }
}

TEST_CASE("reduce_to_bound example: two quaternions over F_5(t)") {
  const Backend r = rat(5);
  const auto p = P(r, "(t,2)_2*(t+1,3)_2");
  const auto rep = reduce_to_bound(p, small_budget());
  CHECK(rep.proof.final.size() == 1);
  CHECK(rep.oracle_equal);
  CHECK(rep.certificates.size() == 1);
}

TEST_CASE("present_by_residues reproduces residue vectors") {
  std::mt19937_64 rng(41);
  for (std::uint32_t q : {5u, 7u}) {
    const Backend r = rat(q);
    for (std::uint32_t p : {2u, 3u}) {
      if ((q - 1) % p) continue;
      for (int trial = 0; trial < 6; ++trial) {
        SymbolProduct s{r, Interpretation::Brauer, {}};
        for (int i = 0; i < 3; ++i) s.factors.push_back(rand_symbol(r, rng, p, 2));
        const auto rv = residue_vector(s, p);
        const auto out = present_by_residues(r, rv, p);
        CHECK(equiv(s, out));
      }
    }
  }
}

TEST_CASE("layered reduction of a degree-4 product over F_5(t)") {
  const Backend r = rat(5);
  const auto p = P(r, "(t,2)_4*(t+1,3)_4");
  const auto rep = layered_reduce(p, small_budget());
  CHECK_FALSE(rep.budget_exhausted);
  REQUIRE(rep.layers.size() == 2);
  CHECK(rep.layers[0].size() <= 1);
  CHECK(rep.layers[1].size() <= 1);
  for (const auto& s : rep.layers[0].factors) CHECK(s.n == 2);
  for (const auto& s : rep.layers[1].factors) CHECK(s.n == 4);
  CHECK(rep.oracle_equal);
  CHECK_NOTHROW(replay(rep.proof));
  CHECK(equiv(rep.proof.initial, p));
}

TEST_CASE("layered reduction without residue presentation") {
  const Backend r = rat(5);
  // A^2 already split: C_1 = A, which bilinear expansion presents directly
  const auto easy = P(r, "(t,4)_4");
  const auto rep = layered_reduce(easy, small_budget(), false);
  CHECK(rep.oracle_equal);
  const auto hard = P(r, "(t,2)_4*(t+1,3)_4");
  try {
    const auto rh = layered_reduce(hard, small_budget(), false);
    CHECK(rh.oracle_equal);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnreachableLayer);
  }
}
