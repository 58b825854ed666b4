#include "symlen/poly.hpp"

#include <algorithm>
#include <random>

#include "symlen/errors.hpp"

namespace symlen {

Poly::Poly(const FiniteField& f, std::vector<FqElem> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const FiniteField& f, FqElem c) { return Poly(f, {c}); }

Poly Poly::monomial(const FiniteField& f, FqElem c, int degree) {
  std::vector<FqElem> v(static_cast<std::size_t>(degree) + 1);
  v[degree] = c;
  return Poly(f, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_->inv(lc()));
}

Poly Poly::scaled(FqElem s) const {
  Poly r(*f_);
  if (s.v == 0) return r;
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_->mul(c_[i], s);
  return r;
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return *this;
  Poly r(*f_);
  r.c_.assign(static_cast<std::size_t>(k), FqElem{});
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::derivative() const {
  Poly r(*f_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = f_->mul(c_[i], f_->from_int(static_cast<long long>(i)));
  r.trim();
  return r;
}

FqElem Poly::eval(FqElem x) const {
  FqElem acc{};
  for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(*f_, f_->one());
  Poly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly operator+(const Poly& a, const Poly& b) {
  const FiniteField& f = *a.f_;
  Poly r(f);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    r.c_[i] = f.add(i < a.c_.size() ? a.c_[i] : FqElem{}, i < b.c_.size() ? b.c_[i] : FqElem{});
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r(*f_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_->neg(c_[i]);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  const FiniteField& f = *a.f_;
  Poly r(f);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, FqElem{});
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].v == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      r.c_[i + j] = f.add(r.c_[i + j], f.mul(a.c_[i], b.c_[j]));
    }
  }
  r.trim();
  return r;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].v == 0) continue;
    if (!s.empty()) s += " + ";
    const std::string cs = f_->to_string(c_[i]);
    if (i == 0) {
      s += cs;
    } else {
      if (c_[i].v != 1) s += cs + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroInput, "polynomial division by zero");
  const FiniteField& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<FqElem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<FqElem> q(static_cast<std::size_t>(a.degree() - db) + 1);
  const FqElem inv_lc = f.inv(b.lc());
  for (int i = a.degree(); i >= db; --i) {
    const FqElem c = f.mul(r[i], inv_lc);
    q[i - db] = c;
    if (c.v == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, bc[j]));
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::ZeroInput, "inexact polynomial division");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

void xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t) {
  const FiniteField& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, f.one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    g = r0;
    s = Poly(f);
    t = Poly(f);
    return;
  }
  const FqElem inv = f.inv(r0.lc());
  g = r0.scaled(inv);
  s = s0.scaled(inv);
  t = t0.scaled(inv);
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& a, unsigned long long e, const Poly& m) {
  const FiniteField& f = a.field();
  Poly result = Poly::constant(f, f.one()) % m;
  Poly base = a % m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    e >>= 1;
    if (e) base = mulmod(base, base, m);
  }
  return result;
}

Poly invmod(const Poly& a, const Poly& m) {
  Poly g(a.field()), s(a.field()), t(a.field());
  xgcd(a % m, m, g, s, t);
  if (!g.is_one()) throw Error(ErrorCode::ZeroInput, "not invertible modulo the given polynomial");
  return s % m;
}

FqElem resultant_monic(const Poly& f_in, const Poly& g_in) {
  const FiniteField& F = f_in.field();
  // Res(A,B) = lc(A)^deg B * prod_{A(r)=0} B(r)
  Poly A = f_in, B = g_in % f_in;
  FqElem acc = F.one();
  if (A.degree() <= 0) return F.one();
  if (B.is_zero()) return F.zero();
  // Res(A, g) = Res(A, B) up to lc(A)^(deg g - deg B) = 1 since A monic.
  while (true) {
    const int a = A.degree(), b = B.degree();
    if (b == 0) {
      acc = F.mul(acc, F.pow(B.lc(), a));
      return acc;
    }
    // Res(A,B) = (-1)^(ab) Res(B,A); Res(B,A) = lc(B)^(a - deg R) Res(B,R), R = A mod B
    Poly R = A % B;
    if ((a * b) % 2 == 1) acc = F.neg(acc);
    if (R.is_zero()) return F.zero();
    acc = F.mul(acc, F.pow(B.lc(), a - R.degree()));
    A = std::move(B);
    B = std::move(R);
  }
}

namespace {

Poly pth_root(const Poly& f) {
  const FiniteField& F = f.field();
  const std::uint32_t p = F.p();
  // a -> a^(q/p) inverts the Frobenius on F_q.
  const long long e = F.q() / p;
  std::vector<FqElem> c(static_cast<std::size_t>(f.degree() / static_cast<int>(p)) + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.pow(f.coeff(static_cast<int>(i * p)), e);
  return Poly(F, std::move(c));
}

void squarefree_parts(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
  if (f.degree() <= 0) return;
  const Poly d = f.derivative();
  if (d.is_zero()) {
    squarefree_parts(pth_root(f), mult * static_cast<int>(f.field().p()), out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = exact_div(f, c);
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = exact_div(w, y);
    if (z.degree() > 0) out.emplace_back(z, i * mult);
    ++i;
    w = y;
    c = exact_div(c, y);
  }
  if (c.degree() > 0) squarefree_parts(pth_root(c), mult * static_cast<int>(f.field().p()), out);
}

void equal_degree_split(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const FiniteField& F = f.field();
  const Poly tpoly = Poly::t(F);
  while (true) {
    std::vector<FqElem> rc(static_cast<std::size_t>(f.degree()));
    for (auto& x : rc) x = FqElem{static_cast<std::uint32_t>(rng() % F.q())};
    Poly a(F, std::move(rc));
    if (a.degree() <= 0) continue;
    Poly b(F);
    if (F.p() == 2) {
      // trace map a + a^2 + ... + a^(2^(kd-1))
      Poly cur = a % f;
      b = cur;
      for (unsigned i = 1; i < F.k() * static_cast<unsigned>(d); ++i) {
        cur = mulmod(cur, cur, f);
        b = b + cur;
      }
    } else {
      // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
      Poly cur = a % f;
      Poly s = cur;
      for (int i = 1; i < d; ++i) {
        cur = powmod(cur, F.q(), f);
        s = mulmod(s, cur, f);
      }
      b = powmod(s, (F.q() - 1) / 2, f) - Poly::constant(F, F.one());
    }
    Poly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  auto fs = factor(f);
  return fs.size() == 1 && fs[0].second == 1;
}

std::vector<std::pair<Poly, int>> factor(const Poly& f_in) {
  if (f_in.is_zero()) throw Error(ErrorCode::ZeroInput, "factor of zero polynomial");
  const FiniteField& F = f_in.field();
  std::vector<std::pair<Poly, int>> sqf;
  squarefree_parts(f_in.monic(), 1, sqf);
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<std::pair<Poly, int>> result;
  const Poly tpoly = Poly::t(F);
  for (auto& [part, mult] : sqf) {
    Poly z = part;
    Poly h = tpoly;
    for (int d = 1; z.degree() > 0; ++d) {
      if (z.degree() < 2 * d) {
        result.emplace_back(z.monic(), mult);
        break;
      }
      h = powmod(h, F.q(), z);
      Poly g = gcd(h - tpoly, z);
      if (g.degree() > 0) {
        std::vector<Poly> pieces;
        equal_degree_split(g, d, rng, pieces);
        for (auto& pc : pieces) result.emplace_back(pc.monic(), mult);
        z = exact_div(z, g);
        h = h % z;
      }
    }
  }
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return result;
}

}  // namespace symlen
