#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "symlen/errors.hpp"
#include "symlen/proof.hpp"

using namespace symlen;
using namespace testutil;

TEST_CASE("element grammar") {
  const Backend r = rat(5);
  CHECK(el(r, "t^2 + 1") == RatFunc(Poly(r.fq(), {FqElem{1}, FqElem{0}, FqElem{1}})));
  CHECK(el(r, "(t+1)/(t+1)").is_one());
  CHECK(el(r, " 7 ") == r.from_int(2));
  CHECK(el(r, "-1") == r.from_int(4));
  CHECK(el(r, "t^-1") == el(r, "1/t"));
  CHECK(el(r, "2*t/t^2") == el(r, "2/t"));
  CHECK(el(r, "(2*t+1)/(3*t)").to_string() == "(4*t + 2)/t");
  const Backend r9 = rat(9);
  CHECK(el(r9, "[0,1]*[0,1]") == el(r9, "[2,0]"));
  CHECK_THROWS_AS(el(fin(5), "t"), Error);
  CHECK_THROWS_AS(el(r, "1/0"), Error);
  try {
    el(r, "t +\n  * 3");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("line 2, column 3") != std::string::npos);
  }
}

TEST_CASE("product grammar round trip") {
  std::mt19937_64 rng(41);
  for (std::uint32_t q : {5u, 7u, 9u, 25u}) {
    const Backend b = rat(q);
    for (int i = 0; i < 50; ++i) {
      SymbolProduct p{b, i % 2 ? Interpretation::Milnor : Interpretation::Brauer, {}};
      const int count = static_cast<int>(rng() % 4);
      for (int j = 0; j < count; ++j) p.factors.push_back(rand_symbol(b, rng, 2, 3));
      const std::string text = to_string(p);
      CHECK(parse_product(b, text) == p);
    }
  }
  const Backend r = rat(5);
  CHECK(parse_product(r, "(t,2)*(t+1,3)", 2).factors.size() == 2);
  CHECK_THROWS_AS(parse_product(r, "(t,2)"), Error);
  CHECK(to_string(parse_product(r, "{t, 1-t}_2 + {t,2}_2")) == "{t, 4*t + 1}_2 + {t, 2}_2");
}

TEST_CASE("proof log replay and JSON round trip") {
  const Backend r = rat(5);
  SymbolProduct p = parse_product(r, "(t,2)_2 * (t+1,3)_2");
  ProofBuilder pb(p);
  pb.apply("chain", {0});
  pb.apply("pair_merge", {0, 1});
  pb.apply("norm_twist", {1}, {{"k", nlohmann::json::array({"1", "1"})}});
  pb.apply("power_twist", {0}, {{"f", "t+2"}});
  RewriteProof proof = pb.take();
  CHECK_NOTHROW(replay(proof));
  const auto j = to_json(proof);
  RewriteProof back = proof_from_json(r, nlohmann::json::parse(j.dump()));
  CHECK_NOTHROW(replay(back));
  CHECK(back.final == proof.final);
  CHECK(to_json(back).dump() == j.dump());

  back.steps[1].after[0].b = r.from_int(1);
  CHECK_THROWS_AS(replay(back), Error);

  ProofBuilder bad(parse_product(r, "(t,2)_2"));
  CHECK_THROWS_AS(bad.apply("delete_split", {0}, {{"reason", "oracle"}}), Error);
}
