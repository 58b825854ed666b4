#include "symlen/kummer_ext.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "symlen/errors.hpp"

namespace symlen {

KummerAlgebra::KummerAlgebra(Backend backend, std::uint32_t n, RatFunc a)
    : backend_(backend), n_(n), a_(std::move(a)), is_field_(true) {
  if (n_ == 0) throw Error(ErrorCode::DegreeMismatch, "Kummer degree must be >= 1");
  if (a_.is_zero()) throw Error(ErrorCode::ZeroInput, "Kummer slot must be nonzero");
  for (auto d : prime_factors(n_)) {
    if (nth_power_test(backend_, a_, static_cast<std::uint32_t>(d))) {
      is_field_ = false;
      return;
    }
  }
  if (n_ % 4 == 0) {
    const RatFunc m = -(a_ / backend_.from_int(4));
    if (backend_.fq().p() != 2 && nth_power_test(backend_, m, 4)) is_field_ = false;
  }
}

KummerElem KummerElem::scalar(const Backend& b, std::uint32_t n, const RatFunc& s) {
  KummerElem k = zero(b, n);
  k.c[0] = s;
  return k;
}

KummerElem KummerElem::zero(const Backend& b, std::uint32_t n) {
  return KummerElem{std::vector<RatFunc>(n, b.zero())};
}

KummerElem KummerElem::x(const Backend& b, std::uint32_t n) {
  if (n == 1) throw Error(ErrorCode::DegreeMismatch, "x is a scalar when n = 1");
  KummerElem k = zero(b, n);
  k.c[1] = b.one();
  return k;
}

bool KummerElem::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const RatFunc& r) { return r.is_zero(); });
}

KummerElem kummer_mul(const KummerAlgebra& alg, const KummerElem& u, const KummerElem& v) {
  const std::uint32_t n = alg.n();
  if (u.n() != n || v.n() != n) throw Error(ErrorCode::MixedAlgebras, "operands belong to different Kummer algebras");
  KummerElem out = KummerElem::zero(alg.backend(), n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (u.c[i].is_zero()) continue;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (v.c[j].is_zero()) continue;
      RatFunc term = u.c[i] * v.c[j];
      if (i + j >= n) {
        out.c[i + j - n] += term * alg.a();
      } else {
        out.c[i + j] += term;
      }
    }
  }
  return out;
}

RatFunc algebra_norm(const KummerAlgebra& alg, const KummerElem& k) {
  const std::uint32_t n = alg.n();
  if (k.n() != n) throw Error(ErrorCode::MixedAlgebras, "element length differs from algebra degree");
  const Backend& b = alg.backend();
  // column j = k * x^j
  std::vector<std::vector<RatFunc>> m(n, std::vector<RatFunc>(n, b.zero()));
  for (std::uint32_t j = 0; j < n; ++j) {
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t r = i + j;
      if (r >= n) m[r - n][j] = k.c[i] * alg.a();
      else m[r][j] = k.c[i];
    }
  }
  RatFunc det = b.one();
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return b.zero();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const RatFunc inv = m[col][col].inverse();
    for (std::uint32_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const RatFunc f = m[r][col] * inv;
      for (std::uint32_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

const std::vector<NormTerm>& norm_template(std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<NormTerm>> cache;
  if (n == 0 || n > 8) throw Error(ErrorCode::TooLarge, "norm template supports 1 <= n <= 8");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::map<std::pair<int, std::vector<int>>, long long> acc;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    int a_power = 0;
    std::vector<int> idx(n);
    for (std::uint32_t j = 0; j < n; ++j) {
      const int r = perm[j];
      idx[j] = (r - static_cast<int>(j) + static_cast<int>(n)) % static_cast<int>(n);
      if (r < static_cast<int>(j)) ++a_power;
    }
    std::sort(idx.begin(), idx.end());
    acc[{a_power, idx}] += (inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<NormTerm> terms;
  for (auto& [key, coef] : acc) {
    if (coef != 0) terms.push_back(NormTerm{coef, key.first, key.second});
  }
  return cache.emplace(n, std::move(terms)).first->second;
}

RatFunc norm_by_template(const RatFunc& a, const KummerElem& k) {
  const FiniteField& f = a.field();
  RatFunc sum(f);
  for (const auto& term : norm_template(k.n())) {
    RatFunc prod = RatFunc::from_int(f, term.coef) * a.pow(term.a_power);
    for (int i : term.idx) {
      prod *= k.c[i];
      if (prod.is_zero()) break;
    }
    sum += prod;
  }
  return sum;
}

KummerElem rescale(const KummerElem& k, const RatFunc& s) {
  KummerElem out = k;
  const RatFunc inv = s.inverse();
  RatFunc scale = RatFunc::from_int(s.field(), 1);
  for (auto& c : out.c) {
    c *= scale;
    scale *= inv;
  }
  return out;
}

std::string to_string(const KummerElem& k, const std::string& var) {
  std::string s;
  for (std::size_t i = k.c.size(); i-- > 0;) {
    if (k.c[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string coef = k.c[i].to_string();
    if (coef.find_first_of(" /") != std::string::npos) coef = "(" + coef + ")";
    if (i == 0) {
      s += coef;
    } else {
      if (!k.c[i].is_one()) s += coef + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace symlen
