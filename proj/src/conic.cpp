#include "symlen/conic.hpp"

#include <random>

#include "symlen/brauer_oracle.hpp"
#include "symlen/errors.hpp"

namespace symlen {

namespace {

std::uint64_t field_size(std::uint32_t q, int d) {
  std::uint64_t s = 1;
  for (int i = 0; i < d; ++i) s *= q;
  return s;
}

// Poly with coefficient index i written in base q.
Poly poly_from_index(const FiniteField& f, std::uint64_t i) {
  std::vector<FqElem> c;
  while (i) {
    c.push_back(FqElem{static_cast<std::uint32_t>(i % f.q())});
    i /= f.q();
  }
  return Poly(f, c);
}

// Tonelli-Shanks in F_q[t]/pi.
std::optional<Poly> sqrt_mod_prime(const Poly& b, const Poly& pi) {
  const FiniteField& f = pi.field();
  const Poly x = b % pi;
  if (x.is_zero()) return x;
  const std::uint64_t Q = field_size(f.q(), pi.degree());
  const Poly one = Poly::constant(f, f.one());
  if (!(powmod(x, (Q - 1) / 2, pi) == one)) return std::nullopt;
  std::uint64_t odd = Q - 1;
  int s = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++s;
  }
  Poly z(f);
  for (std::uint64_t i = 2;; ++i) {
    z = poly_from_index(f, i);
    if (powmod(z, (Q - 1) / 2, pi) == -one) break;
  }
  Poly c = powmod(z, odd, pi);
  Poly r = powmod(x, (odd + 1) / 2, pi);
  Poly tt = powmod(x, odd, pi);
  int m = s;
  while (!(tt == one)) {
    int i = 0;
    Poly u = tt;
    while (!(u == one)) {
      u = mulmod(u, u, pi);
      ++i;
    }
    Poly w = c;
    for (int j = 0; j < m - i - 1; ++j) w = mulmod(w, w, pi);
    r = mulmod(r, w, pi);
    c = mulmod(w, w, pi);
    tt = mulmod(tt, c, pi);
    m = i;
  }
  return r;
}

struct SquareSplit {
  Poly square_root;  // s with p = s^2 * core
  Poly core;         // squarefree, carries the leading coefficient
};

SquareSplit split_squares(const Poly& p) {
  const FiniteField& f = p.field();
  SquareSplit out{Poly::constant(f, f.one()), Poly::constant(f, p.lc())};
  if (p.degree() <= 0) return out;
  for (auto& [pi, e] : factor(p)) {
    out.square_root *= pi.pow(static_cast<unsigned>(e / 2));
    if (e % 2) out.core *= pi;
  }
  return out;
}

std::optional<std::array<Poly, 3>> solve_squarefree(const Poly& a, const Poly& b, int depth);

std::optional<std::array<Poly, 3>> solve_any(const Poly& a, const Poly& b, int depth) {
  const SquareSplit sa = split_squares(a), sb = split_squares(b);
  auto r = solve_squarefree(sa.core, sb.core, depth);
  if (!r) return r;
  // a X^2 + b Y^2 = (sa sb Z')^2 with X = sb X', Y = sa Y'
  return std::array<Poly, 3>{(*r)[0] * sb.square_root, (*r)[1] * sa.square_root,
                             (*r)[2] * sa.square_root * sb.square_root};
}

std::optional<std::array<Poly, 3>> solve_squarefree(const Poly& a, const Poly& b, int depth) {
  const FiniteField& f = a.field();
  if (depth > 400) throw Error(ErrorCode::NotFound, "conic descent did not terminate");
  if (a.degree() < b.degree()) {
    auto r = solve_squarefree(b, a, depth + 1);
    if (!r) return r;
    return std::array<Poly, 3>{(*r)[1], (*r)[0], (*r)[2]};
  }
  if (a.degree() == 0) {
    const FqElem ca = a.lc(), cb = b.lc();
    for (std::uint32_t x = 0; x < f.q(); ++x) {
      for (std::uint32_t y = 0; y < f.q(); ++y) {
        if (x == 0 && y == 0) continue;
        const FqElem v =
            f.add(f.mul(ca, f.mul(FqElem{x}, FqElem{x})), f.mul(cb, f.mul(FqElem{y}, FqElem{y})));
        FqElem z;
        if (v.v == 0 || f.nth_root(v, 2, z)) {
          if (v.v == 0) z = f.zero();
          return std::array<Poly, 3>{Poly::constant(f, FqElem{x}), Poly::constant(f, FqElem{y}), Poly::constant(f, z)};
        }
      }
    }
    return std::nullopt;
  }
  const auto r = sqrt_mod(b, a);
  if (!r) return std::nullopt;
  const Poly a2 = exact_div(*r * *r - b, a);
  if (a2.is_zero()) {
    return std::array<Poly, 3>{Poly(f), Poly::constant(f, f.one()), *r};
  }
  auto sub = solve_any(a2, b, depth + 1);
  if (!sub) return sub;
  const auto& [X, Y, Z] = *sub;
  // a (a2 X)^2 = N(r + sqrt b) N(Z + Y sqrt b)
  return std::array<Poly, 3>{a2 * X, *r * Y + Z, *r * Z + b * Y};
}

}  // namespace

std::optional<Poly> sqrt_mod(const Poly& b, const Poly& a) {
  const FiniteField& f = a.field();
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "modulus is zero");
  if (a.degree() == 0) return Poly(f);
  Poly acc(f);
  for (auto& [pi, e] : factor(a)) {
    if (e != 1) throw Error(ErrorCode::NotIrreducible, "sqrt_mod needs a squarefree modulus");
    auto r = sqrt_mod_prime(b, pi);
    if (!r) return std::nullopt;
    const Poly m = exact_div(a.monic(), pi);
    acc += mulmod(mulmod(*r, invmod(m % pi, pi), pi), m, a);
  }
  return acc % a;
}

std::optional<std::array<Poly, 3>> solve_conic(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroInput, "conic coefficients must be nonzero");
  if (a.field().p() == 2) throw Error(ErrorCode::BadBackend, "conic descent needs odd characteristic");
  auto r = solve_any(a, b, 0);
  if (r) {
    const auto& [X, Y, Z] = *r;
    if (!(a * X * X + b * Y * Y == Z * Z) || (X.is_zero() && Y.is_zero() && Z.is_zero())) {
      throw Error(ErrorCode::InvalidCertificate, "conic descent produced a bad point");
    }
  }
  return r;
}

std::optional<KummerElem> solve_norm2(const Backend& b, const RatFunc& a, const RatFunc& c) {
  // a = A / ad^2, c = C / cd^2; (x cd)^2 - A (y cd / ad)^2 = C
  const Poly A = a.num() * a.den(), C = c.num() * c.den();
  auto r = solve_conic(C, A);
  if (!r) return std::nullopt;
  const auto& [Z0, Y, X] = *r;
  if (Z0.is_zero()) return std::nullopt;
  const RatFunc x = RatFunc(X, Z0 * c.den());
  const RatFunc y = RatFunc(Y * a.den(), Z0 * c.den());
  KummerElem k{{x, y}};
  if (!(x * x - a * y * y == c)) throw Error(ErrorCode::InvalidCertificate, "norm equation check failed");
  (void)b;
  return k;
}

ZeroCertificate descent_search(const KummerSpaceChain& chain, const SearchBudget& budget) {
  if (chain.n != 2) throw Error(ErrorCode::DegreeMismatch, "descent search needs n = 2");
  if (!chain.backend.rational()) throw Error(ErrorCode::BadBackend, "descent search needs F_q(t)");
  const Backend& B = chain.backend;
  const FiniteField& f = B.fq();
  const std::size_t t = chain.t();
  const Symbol& last = chain.factors[t - 1];
  KummerSpaceChain prev{B, 2, {}, {}};
  prev.factors.assign(chain.factors.begin(), chain.factors.end() - 1);
  prev.levels.assign(chain.levels.begin(), chain.levels.end() - 1);
  const std::size_t dim = prev.dim();

  std::uint64_t tries = 0;
  const std::uint64_t limit = std::min<std::uint64_t>(budget.max_candidates, 200000);
  auto attempt = [&](const std::vector<RatFunc>& coords) -> std::optional<ZeroCertificate> {
    ++tries;
    const KummerVector vp = unflatten(prev, coords);
    if (vp.is_zero()) return std::nullopt;
    const RatFunc Np = t == 1 ? vp.f.pow(2) : eval_norm(prev, vp).first;
    KummerVector v = vp;
    if (Np.is_zero()) {
      v.k.push_back(KummerElem::zero(B, 2));
    } else {
      const RatFunc c = -(Np * last.a / last.b);
      const SymbolProduct test{B, Interpretation::Brauer, {Symbol(last.a, c, 2)}};
      if (!residue_vector(test).trivial()) return std::nullopt;
      auto k = solve_norm2(B, last.a, c);
      if (!k) return std::nullopt;
      v.k.push_back(*k);
    }
    ZeroCertificate cert = certify(chain, v, "descent");
    cert.candidates = tries;
    return cert;
  };

  // constant coordinates, lexicographic
  const std::uint64_t space = field_size(f.q(), static_cast<int>(dim));
  std::vector<RatFunc> coords(dim, B.zero());
  for (std::uint64_t i = 1; i < space && tries < limit; ++i) {
    std::uint64_t x = i;
    for (std::size_t k = dim; k-- > 0;) {
      coords[k] = B.constant(FqElem{static_cast<std::uint32_t>(x % f.q())});
      x /= f.q();
    }
    if (auto c = attempt(coords)) return *c;
  }
  // polynomial coordinates of growing degree, hashed order
  std::uint64_t counter = 0;
  for (int d = 1; d <= budget.max_degree && tries < limit; ++d) {
    const std::uint64_t share = (limit - tries) / static_cast<std::uint64_t>(budget.max_degree - d + 1);
    const CompiledSystem shape(f, static_cast<std::uint32_t>(dim) * static_cast<std::uint32_t>(d + 1), 1);
    std::vector<FqElem> z(shape.nvars());
    for (std::uint64_t j = 0; j < share && tries < limit; ++j) {
      point_at(shape, Enumeration::Hashed, budget.seed, counter, z.data());
      // each coordinate gets its own degree in 0..d
      std::mt19937_64 degs(budget.seed * 0x9e3779b97f4a7c15ULL + counter++);
      for (std::size_t k = 0; k < dim; ++k) {
        const auto first = z.begin() + static_cast<std::ptrdiff_t>(k * (d + 1));
        const auto len = static_cast<std::ptrdiff_t>(degs() % static_cast<std::uint64_t>(d + 1)) + 1;
        coords[k] = RatFunc(Poly(f, std::vector<FqElem>(first, first + len)));
      }
      if (auto c = attempt(coords)) return *c;
    }
  }
  throw Error(ErrorCode::NotFound, "descent search exhausted after " + std::to_string(tries) + " tries");
}

}  // namespace symlen
