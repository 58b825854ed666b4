#include "symlen/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "symlen/errors.hpp"

namespace symlen {

namespace {

using PolyP = std::vector<std::uint32_t>;  // low-to-high over F_p

void trim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP mod_p(const PolyP& a, const PolyP& m, std::uint32_t p) {
  PolyP r = a;
  trim(r);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv_lc = [&] {
    std::uint64_t x = 1, b = m.back(), e = p - 2;
    while (e) {
      if (e & 1) x = x * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return x;
  }();
  while (r.size() > dm) {
    const std::size_t shift = r.size() - 1 - dm;
    const std::uint64_t c = r.back() * inv_lc % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      r[i + shift] = static_cast<std::uint32_t>((r[i + shift] + (p - c) * m[i]) % p);
    }
    trim(r);
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible_over_prime_field(std::uint32_t p, const PolyP& f_in) {
  PolyP f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      PolyP g(d + 1);
      std::uint64_t x = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      g[d] = 1;
      if (mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> least_irreducible_modulus(std::uint32_t p, unsigned k) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    PolyP f(k + 1);
    std::uint64_t x = idx;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    f[k] = 1;
    if (is_irreducible_over_prime_field(p, f)) return f;
  }
  throw Error(ErrorCode::NotIrreducible, "no irreducible modulus found");
}

const FiniteField& FiniteField::get(std::uint32_t p, unsigned k) {
  if (!is_prime(p)) throw Error(ErrorCode::BadBackend, "characteristic must be prime");
  if (k == 0) throw Error(ErrorCode::BadBackend, "extension degree must be >= 1");
  return get_with_modulus(p, least_irreducible_modulus(p, k));
}

const FiniteField& FiniteField::get_order(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime(p)) break;
    unsigned k = 0;
    std::uint32_t x = q;
    while (x % p == 0) {
      x /= p;
      ++k;
    }
    if (x != 1) break;
    return get(p, k);
  }
  throw Error(ErrorCode::BadBackend, "q must be a prime power");
}

const FiniteField& FiniteField::get_with_modulus(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<FiniteField>> registry;
  if (!is_prime(p)) throw Error(ErrorCode::BadBackend, "characteristic must be prime");
  PolyP m = modulus;
  for (auto& c : m) c %= p;
  trim(m);
  if (m.size() < 2 || m.back() != 1) throw Error(ErrorCode::NotIrreducible, "modulus must be monic of degree >= 1");
  if (!is_irreducible_over_prime_field(p, m)) throw Error(ErrorCode::NotIrreducible, "modulus is reducible");
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = registry.find(key);
  if (it == registry.end()) {
    it = registry.emplace(key, std::unique_ptr<FiniteField>(new FiniteField(p, m))).first;
  }
  return *it->second;
}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k_; ++i) q *= p_;
  if (q > 65536) throw Error(ErrorCode::TooLarge, "field order above 2^16 is not supported");
  q_ = static_cast<std::uint32_t>(q);

  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    auto c = coeffs(FqElem{a});
    for (auto& x : c) x = (p_ - x) % p_;
    neg_[a] = from_coeffs(c).v;
  }

  // Least element of order q-1 under the canonical order.
  const auto factors = prime_factors(q_ - 1);
  auto pow_slow = [&](FqElem a, std::uint64_t e) {
    FqElem r{1};
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  FqElem g{1};
  for (std::uint32_t a = 1; a < q_; ++a) {
    bool primitive = true;
    for (auto r : factors) {
      if (pow_slow(FqElem{a}, (q_ - 1) / r).v == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = FqElem{a};
      break;
    }
  }
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  FqElem cur{1};
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = cur.v;
    log_[cur.v] = i;
    cur = mul_slow(cur, g);
  }
  if (k_ > 1 && q_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_slow({a}, {b}).v);
      }
    }
  }
}

FqElem FiniteField::from_int(long long x) const {
  long long r = x % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FqElem FiniteField::from_coeffs(const std::vector<std::uint32_t>& c) const {
  std::uint32_t v = 0, base = 1;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint32_t ci = i < c.size() ? c[i] % p_ : 0;
    v += ci * base;
    base *= p_;
  }
  return {v};
}

std::vector<std::uint32_t> FiniteField::coeffs(FqElem a) const {
  std::vector<std::uint32_t> c(k_);
  std::uint32_t x = a.v;
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

FqElem FiniteField::add_slow(FqElem a, FqElem b) const {
  std::uint32_t v = 0, base = 1, x = a.v, y = b.v;
  for (unsigned i = 0; i < k_; ++i) {
    v += ((x % p_ + y % p_) % p_) * base;
    x /= p_;
    y /= p_;
    base *= p_;
  }
  return {v};
}

FqElem FiniteField::mul_slow(FqElem a, FqElem b) const {
  const auto ca = coeffs(a), cb = coeffs(b);
  PolyP prod(2 * k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
    }
  }
  return from_coeffs(mod_p(prod, modulus_, p_));
}

FqElem FiniteField::inv(FqElem a) const {
  if (a.v == 0) throw Error(ErrorCode::ZeroInput, "inverse of zero in " + name());
  std::uint32_t l = log_[a.v];
  return {exp_[l == 0 ? 0 : q_ - 1 - l]};
}

FqElem FiniteField::pow(FqElem a, long long e) const {
  if (a.v == 0) {
    if (e == 0) return one();
    if (e < 0) throw Error(ErrorCode::ZeroInput, "negative power of zero");
    return zero();
  }
  const long long m = q_ - 1;
  long long r = (static_cast<long long>(log_[a.v]) * (e % m)) % m;
  if (r < 0) r += m;
  return {exp_[static_cast<std::size_t>(r)]};
}

std::uint32_t FiniteField::log(FqElem a) const {
  if (a.v == 0) throw Error(ErrorCode::ZeroInput, "log of zero");
  return log_[a.v];
}

std::uint64_t FiniteField::order(FqElem a) const {
  const std::uint64_t m = q_ - 1;
  return m / std::gcd<std::uint64_t>(m, log(a));
}

FqElem FiniteField::root_of_unity(std::uint32_t n) const {
  if (n == 0 || (q_ - 1) % n != 0) {
    throw Error(ErrorCode::NDoesNotDivide, std::to_string(n) + " does not divide q-1 = " + std::to_string(q_ - 1));
  }
  return {exp_[(q_ - 1) / n % (q_ - 1)]};
}

bool FiniteField::nth_root(FqElem x, std::uint32_t n, FqElem& root) const {
  if (x.v == 0) throw Error(ErrorCode::ZeroInput, "n-th root test of zero");
  const std::uint64_t m = q_ - 1;
  const std::uint64_t l = log_[x.v];
  const std::uint64_t d = std::gcd<std::uint64_t>(n, m);
  if (l % d != 0) return false;
  const std::uint64_t mm = m / d;
  std::uint64_t j = 0;
  if (mm > 1) {
    // inverse of n/d modulo mm by brute force; mm < 2^16
    const std::uint64_t nd = (n / d) % mm;
    std::uint64_t inv = 0;
    for (std::uint64_t c = 1; c < mm; ++c) {
      if (nd * c % mm == 1) {
        inv = c;
        break;
      }
    }
    j = (l / d) % mm * inv % mm;
  }
  root = {exp_[j]};
  return true;
}

std::string FiniteField::to_string(FqElem a) const {
  if (k_ == 1) return std::to_string(a.v);
  std::string s = "[";
  auto c = coeffs(a);
  for (unsigned i = 0; i < k_; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

std::string FiniteField::name() const {
  return "F_" + std::to_string(q_);
}

}  // namespace symlen
