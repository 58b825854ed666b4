#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "symlen/errors.hpp"
#include "symlen/kummer_ext.hpp"

using namespace symlen;
using namespace testutil;

namespace {

KummerElem ke(const Backend& b, std::initializer_list<const char*> cs) {
  KummerElem k;
  for (auto c : cs) k.c.push_back(el(b, c));
  return k;
}

KummerElem rand_ke(const Backend& b, std::mt19937_64& rng, std::uint32_t n, int deg) {
  KummerElem k;
  for (std::uint32_t i = 0; i < n; ++i) k.c.push_back(rng() % 3 ? rand_rat(b, rng, deg) : b.zero());
  return k;
}

}  // namespace

TEST_CASE("kummer_mul examples") {
  const Backend b = fin(5);
  KummerAlgebra a2(b, 2, b.from_int(2)), a3(b, 3, b.from_int(2));
  CHECK(kummer_mul(a2, ke(b, {"0", "1"}), ke(b, {"0", "1"})) == ke(b, {"2", "0"}));
  CHECK(kummer_mul(a2, ke(b, {"1", "1"}), ke(b, {"1", "-1"})) == ke(b, {"4", "0"}));
  CHECK(kummer_mul(a3, ke(b, {"0", "1", "0"}), ke(b, {"0", "1", "0"})) == ke(b, {"0", "0", "1"}));
  CHECK_THROWS_AS(kummer_mul(a3, ke(b, {"0", "1"}), ke(b, {"0", "1", "0"})), Error);
}

TEST_CASE("algebra_norm examples") {
  const Backend b = fin(5);
  KummerAlgebra a2(b, 2, b.from_int(2));
  CHECK(algebra_norm(a2, KummerElem::x(b, 2)) == b.from_int(3));
  const Backend r = rat(5);
  KummerAlgebra at(r, 2, el(r, "t"));
  CHECK(algebra_norm(at, ke(r, {"1", "1"})) == el(r, "1 - t"));
  CHECK(algebra_norm(at, ke(r, {"t+1", "2"})) == el(r, "(t+1)^2 - 4*t"));
  CHECK(algebra_norm(at, KummerElem::zero(r, 2)).is_zero());
}

TEST_CASE("is_field") {
  const Backend r = rat(5);
  CHECK(KummerAlgebra(r, 2, el(r, "t")).is_field());
  CHECK_FALSE(KummerAlgebra(r, 2, el(r, "4")).is_field());
  CHECK_FALSE(KummerAlgebra(r, 4, el(r, "t^2")).is_field());
  CHECK(KummerAlgebra(r, 4, el(r, "t")).is_field());
  // -4 c^4: x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
  CHECK_FALSE(KummerAlgebra(r, 4, el(r, "-4*t^4")).is_field());
}

TEST_CASE("norm properties") {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {5u, 7u, 13u}) {
    const Backend b = rat(q);
    for (std::uint32_t n = 1; n <= 6; ++n) {
      if ((q - 1) % n) continue;
      for (int i = 0; i < 15; ++i) {
        KummerAlgebra alg(b, n, rand_rat(b, rng, 2));
        KummerElem u = rand_ke(b, rng, n, 2), v = rand_ke(b, rng, n, 2);
        CHECK(algebra_norm(alg, kummer_mul(alg, u, v)) == algebra_norm(alg, u) * algebra_norm(alg, v));
        CHECK(norm_by_template(alg.a(), u) == algebra_norm(alg, u));
        RatFunc c = rand_rat(b, rng, 2);
        CHECK(algebra_norm(alg, KummerElem::scalar(b, n, c)) == c.pow(n));
        if (n > 1) {
          CHECK(algebra_norm(alg, KummerElem::x(b, n)) == (n % 2 ? alg.a() : -alg.a()));
        }
        // rescale: N_{s^n a}(k(x/s)) = N_a(k)
        RatFunc s = rand_rat(b, rng, 1);
        KummerAlgebra scaled(b, n, s.pow(n) * alg.a());
        CHECK(algebra_norm(scaled, rescale(u, s)) == algebra_norm(alg, u));
      }
    }
  }
}

TEST_CASE("norm equals resultant of x^n - a and k(x)") {
  // Independent oracle: Sylvester determinant over F_q for constant a.
  std::mt19937_64 rng(12);
  const Backend b = fin(13);
  const auto& f = b.fq();
  for (std::uint32_t n : {2u, 3u, 4u}) {
    for (int it = 0; it < 40; ++it) {
      FqElem a = rand_fq(f, rng, true);
      std::vector<FqElem> k(n);
      for (auto& c : k) c = rand_fq(f, rng);
      std::vector<FqElem> mc(n + 1, f.zero());
      mc[0] = f.neg(a);
      mc[n] = f.one();
      Poly m(f, mc), kp(f, k);
      KummerElem ke;
      for (auto c : k) ke.c.push_back(b.constant(c));
      CHECK(algebra_norm(KummerAlgebra(b, n, b.constant(a)), ke) == b.constant(resultant_monic(m, kp)));
    }
  }
}

TEST_CASE("norm as product over conjugates when a splits") {
  // a = r^n: x^n - a has roots rho^i r in F_q; the determinant is prod k(rho^i r).
  std::mt19937_64 rng(13);
  const Backend b = fin(13);
  const auto& f = b.fq();
  for (std::uint32_t n : {2u, 3u, 4u, 6u}) {
    const FqElem rho = f.root_of_unity(n);
    for (int it = 0; it < 30; ++it) {
      FqElem r = rand_fq(f, rng, true);
      std::vector<FqElem> k(n);
      for (auto& c : k) c = rand_fq(f, rng);
      Poly kp(f, k);
      FqElem prod = f.one(), root = r;
      for (std::uint32_t i = 0; i < n; ++i) {
        prod = f.mul(prod, kp.eval(root));
        root = f.mul(root, rho);
      }
      KummerElem ke;
      for (auto c : k) ke.c.push_back(b.constant(c));
      CHECK(algebra_norm(KummerAlgebra(b, n, b.constant(f.pow(r, n))), ke) == b.constant(prod));
    }
  }
}
