#include "symlen/kummer.hpp"

#include "symlen/errors.hpp"

namespace symlen {

std::vector<std::size_t> KummerSpaceChain::dims() const {
  std::vector<std::size_t> d;
  for (std::size_t j = 0; j <= t(); ++j) d.push_back(j * n + 1);
  return d;
}

KummerSpaceChain build_chain(const SymbolProduct& p, bool require_field) {
  KummerSpaceChain c{p.backend, p.factors.empty() ? 1u : p.factors.front().n, {}, {}};
  for (std::size_t j = 0; j < p.factors.size(); ++j) {
    const Symbol& s = p.factors[j];
    if (s.n != c.n) throw Error(ErrorCode::DegreeMismatch, "chain factors must share one degree");
    validate(p.backend, s);
    KummerAlgebra alg(p.backend, s.n, s.a);
    if (require_field && !alg.is_field()) {
      throw Error(ErrorCode::NonFieldSlot, "slot a_" + std::to_string(j + 1) + " does not generate a field");
    }
    c.factors.push_back(s);
    c.levels.push_back(std::move(alg));
  }
  return c;
}

bool KummerVector::is_zero() const {
  if (!f.is_zero()) return false;
  for (const auto& kj : k) {
    if (!kj.is_zero()) return false;
  }
  return true;
}

std::pair<RatFunc, PartialNormVector> eval_norm(const KummerSpaceChain& chain, const KummerVector& v) {
  if (v.level() != chain.t()) throw Error(ErrorCode::LevelMismatch, "vector level differs from chain length");
  RatFunc acc = v.f.pow(chain.n);
  PartialNormVector partial;
  for (std::size_t j = 0; j < chain.t(); ++j) {
    if (v.k[j].n() != chain.n) throw Error(ErrorCode::LevelMismatch, "component has wrong length");
    acc = acc * chain.factors[j].a + algebra_norm(chain.levels[j], v.k[j]) * chain.factors[j].b;
    partial.N.push_back(acc);
  }
  return {acc, partial};
}

std::vector<RatFunc> flatten(const KummerVector& v) {
  std::vector<RatFunc> out{v.f};
  for (const auto& kj : v.k) out.insert(out.end(), kj.c.begin(), kj.c.end());
  return out;
}

KummerVector unflatten(const KummerSpaceChain& chain, const std::vector<RatFunc>& coords) {
  if (coords.size() != chain.dim()) throw Error(ErrorCode::LevelMismatch, "coordinate count differs from dim V_t");
  KummerVector v{coords[0], {}};
  std::size_t pos = 1;
  for (std::size_t j = 0; j < chain.t(); ++j) {
    KummerElem kj;
    kj.c.assign(coords.begin() + static_cast<std::ptrdiff_t>(pos),
                coords.begin() + static_cast<std::ptrdiff_t>(pos + chain.n));
    pos += chain.n;
    v.k.push_back(std::move(kj));
  }
  return v;
}

KummerVector truncate(const KummerVector& v, std::size_t level) {
  if (level > v.level()) throw Error(ErrorCode::LevelMismatch, "cannot truncate above the vector level");
  return KummerVector{v.f, std::vector<KummerElem>(v.k.begin(), v.k.begin() + static_cast<std::ptrdiff_t>(level))};
}

AlgebraRep::AlgebraRep(const Backend& b, const std::vector<Symbol>& factors) : backend_(b) {
  std::uint64_t d = 1;
  for (const auto& s : factors) {
    validate(b, s);
    d *= static_cast<std::uint64_t>(s.n) * s.n;
    if (d > 4096) throw Error(ErrorCode::TooLarge, "algebra dimension exceeds 4096");
    ns_.push_back(s.n);
    as_.push_back(s.a);
    bs_.push_back(s.b);
    rhos_.push_back(b.fq().root_of_unity(s.n));
  }
  dim_ = static_cast<std::uint32_t>(d);
}

AlgebraRep::Elem AlgebraRep::scalar(const RatFunc& c) const {
  Elem e;
  if (!c.is_zero()) e.emplace(0, c);
  return e;
}

AlgebraRep::Elem AlgebraRep::basis(std::uint32_t idx) const { return Elem{{idx, backend_.one()}}; }

AlgebraRep::Elem AlgebraRep::x(std::size_t i) const {
  std::uint32_t stride = 1;
  for (std::size_t j = 0; j < i; ++j) stride *= ns_[j] * ns_[j];
  return ns_[i] == 1 ? scalar(as_[i]) : basis(stride);
}

AlgebraRep::Elem AlgebraRep::y(std::size_t i) const {
  std::uint32_t stride = 1;
  for (std::size_t j = 0; j < i; ++j) stride *= ns_[j] * ns_[j];
  return ns_[i] == 1 ? scalar(bs_[i]) : basis(stride * ns_[i]);
}

std::pair<RatFunc, std::uint32_t> AlgebraRep::mul_basis(std::uint32_t i, std::uint32_t j) const {
  const FiniteField& f = backend_.fq();
  FqElem unit = f.one();
  RatFunc coef = backend_.one();
  std::uint32_t out = 0, stride = 1;
  for (std::size_t k = 0; k < ns_.size(); ++k) {
    const std::uint32_t n = ns_[k], r = n * n;
    const std::uint32_t di = i % r, dj = j % r;
    i /= r;
    j /= r;
    const std::uint32_t e1 = di % n, f1 = di / n, e2 = dj % n, f2 = dj / n;
    // (x^e1 y^f1)(x^e2 y^f2) = rho^(f1 e2) x^(e1+e2) y^(f1+f2)
    unit = f.mul(unit, f.pow(rhos_[k], static_cast<long long>(f1) * e2));
    std::uint32_t e = e1 + e2, g = f1 + f2;
    if (e >= n) {
      e -= n;
      coef *= as_[k];
    }
    if (g >= n) {
      g -= n;
      coef *= bs_[k];
    }
    out += stride * (e + n * g);
    stride *= r;
  }
  return {coef * backend_.constant(unit), out};
}

AlgebraRep::Elem AlgebraRep::mul(const Elem& u, const Elem& v) const {
  Elem out;
  for (const auto& [i, cu] : u) {
    for (const auto& [j, cv] : v) {
      auto [c, k] = mul_basis(i, j);
      RatFunc term = cu * cv * c;
      auto it = out.find(k);
      if (it == out.end()) {
        out.emplace(k, std::move(term));
      } else {
        it->second += term;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

AlgebraRep::Elem AlgebraRep::add(const Elem& u, const Elem& v) const {
  Elem out = u;
  for (const auto& [k, c] : v) {
    auto it = out.find(k);
    if (it == out.end()) {
      out.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

AlgebraRep::Elem AlgebraRep::scale(const Elem& u, const RatFunc& c) const {
  Elem out;
  if (c.is_zero()) return out;
  for (const auto& [k, x] : u) out.emplace(k, x * c);
  return out;
}

AlgebraRep::Elem AlgebraRep::power(const Elem& u, std::uint32_t m) const {
  Elem acc = one();
  for (std::uint32_t i = 0; i < m; ++i) acc = mul(acc, u);
  return acc;
}

RatFunc AlgebraRep::trace(const Elem& u) const {
  auto it = u.find(0);
  return it == u.end() ? backend_.zero() : it->second;
}

bool AlgebraRep::is_scalar(const Elem& u, RatFunc& value) const {
  if (u.empty()) {
    value = backend_.zero();
    return true;
  }
  if (u.size() == 1 && u.begin()->first == 0) {
    value = u.begin()->second;
    return true;
  }
  return false;
}

AlgebraRep::Elem AlgebraRep::embed(const KummerVector& v) const {
  if (v.level() != ns_.size()) throw Error(ErrorCode::LevelMismatch, "vector level differs from factor count");
  Elem acc = scalar(v.f);
  for (std::size_t j = 0; j < v.level(); ++j) {
    if (v.k[j].n() != ns_[j]) throw Error(ErrorCode::LevelMismatch, "component has wrong length");
    Elem kx;
    Elem xp = one();
    const Elem xj = x(j);
    for (std::uint32_t i = 0; i < ns_[j]; ++i) {
      kx = add(kx, scale(xp, v.k[j].c[i]));
      xp = mul(xp, xj);
    }
    acc = add(mul(acc, xj), mul(kx, y(j)));
  }
  return acc;
}

RatFunc oracle_power(const AlgebraRep& rep, const KummerVector& v) {
  if (v.level() == 0) throw Error(ErrorCode::LevelMismatch, "level-0 vector has no degree");
  const auto e = rep.embed(v);
  // all factors share n when v is a chain vector
  const std::uint32_t n = v.k.front().n();
  RatFunc value = rep.backend().zero();
  if (!rep.is_scalar(rep.power(e, n), value)) throw Error(ErrorCode::NotScalar, "v^n is not central");
  return value;
}

}  // namespace symlen
