#include "symlen/zero_finder.hpp"

#include <algorithm>

#include "symlen/conic.hpp"
#include "symlen/errors.hpp"

namespace symlen {

namespace {

constexpr std::uint64_t kExhaustiveCap = 100'000'000;

bool constant_chain(const KummerSpaceChain& chain) {
  for (const auto& s : chain.factors) {
    if (!s.a.is_constant() || !s.b.is_constant()) return false;
  }
  return true;
}

// q^e, saturating at cap + 1
std::uint64_t space_size(std::uint32_t q, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t s = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    s *= q;
    if (s > cap) return cap + 1;
  }
  return s;
}

KernelResult run_kernel(const CompiledSystem& sys, Enumeration mode, const SearchBudget& budget, std::uint64_t begin,
                        std::uint64_t end) {
  return budget.parallel ? search_parallel(sys, mode, budget.seed, begin, end)
                         : search_serial(sys, mode, budget.seed, begin, end);
}

// Meet in the middle: the largest suffix of coordinate blocks whose points fit
// a table of half the share goes right; left points use the rest.
KernelResult split_kernel(const KummerSpaceChain& chain, const CompiledSystem& sys, const SubstitutionShape& shape,
                          const SearchBudget& budget, std::uint64_t share) {
  const std::uint32_t q = chain.backend.fq().q();
  const std::uint64_t cap = std::min<std::uint64_t>(share / 2, std::uint64_t{1} << 21);
  auto right_vars = [&](std::size_t c) { return shape.nvars - shape.offset[c]; };
  std::size_t c0 = 1 + (chain.t() - 1) * chain.n;
  for (std::size_t j = chain.t() - 1; j-- > 0;) {
    const std::size_t c = 1 + j * chain.n;
    if (space_size(q, right_vars(c), cap) > cap) break;
    c0 = c;
  }
  const std::uint64_t table = std::min(space_size(q, right_vars(c0), cap), cap);
  const std::uint64_t left_budget = share > table ? share - table : 1;
  const std::uint64_t lspace = space_size(q, shape.offset[c0], kExhaustiveCap);
  if (lspace <= left_budget) {
    return search_split(sys, shape.offset[c0], table, Enumeration::Lexicographic, budget.seed, 0, lspace,
                        budget.parallel);
  }
  return search_split(sys, shape.offset[c0], table, Enumeration::Hashed, budget.seed, 0, left_budget,
                      budget.parallel);
}

}  // namespace

void verify(const KummerSpaceChain& chain, const ZeroCertificate& cert) {
  if (cert.v.is_zero()) throw Error(ErrorCode::InvalidCertificate, "zero vector");
  auto [N, partial] = eval_norm(chain, cert.v);
  if (!N.is_zero()) throw Error(ErrorCode::InvalidCertificate, "N_t(v) = " + N.to_string() + " is not zero");
  if (!(partial == cert.partial)) throw Error(ErrorCode::InvalidCertificate, "stored partial norms differ");
  const auto flat = flatten(cert.v);
  if (cert.witness >= flat.size() || flat[cert.witness].is_zero()) {
    throw Error(ErrorCode::InvalidCertificate, "witness coordinate is zero");
  }
}

ZeroCertificate certify(const KummerSpaceChain& chain, const KummerVector& v, const std::string& method) {
  auto [N, partial] = eval_norm(chain, v);
  ZeroCertificate c{v, N, 0, partial, 0, 0, method};
  const auto flat = flatten(v);
  while (c.witness < flat.size() && flat[c.witness].is_zero()) ++c.witness;
  verify(chain, c);
  return c;
}

namespace {

long long deg_inf(const RatFunc& x) { return static_cast<long long>(x.num().degree()) - x.den().degree(); }

// coefficient of the pure n-th power of each coordinate in N_t
std::vector<RatFunc> pure_coefficients(const KummerSpaceChain& chain) {
  const std::size_t t = chain.t();
  std::vector<RatFunc> tail(t + 1, chain.backend.one());
  for (std::size_t j = t; j-- > 0;) tail[j] = tail[j + 1] * chain.factors[j].a;
  std::vector<RatFunc> out{tail[0]};
  for (std::size_t j = 0; j < t; ++j) {
    const RatFunc cj = chain.factors[j].b * tail[j + 1];
    for (std::uint32_t i = 0; i < chain.n; ++i) out.push_back(cj * chain.factors[j].a.pow(i));
  }
  return out;
}

SubstitutionShape make_shape(std::vector<int> degree) {
  SubstitutionShape s;
  s.degree = std::move(degree);
  for (int d : s.degree) {
    s.offset.push_back(s.nvars);
    s.nvars += static_cast<std::uint32_t>(std::max(d, -1) + 1);
  }
  return s;
}

long long floor_div(long long a, long long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

int SubstitutionShape::max_degree() const {
  int m = -1;
  for (int d : degree) m = std::max(m, d);
  return m;
}

SubstitutionShape uniform_shape(const KummerSpaceChain& chain, int d) {
  return make_shape(std::vector<int>(chain.dim(), d));
}

SubstitutionShape balanced_shape(const KummerSpaceChain& chain, int level) {
  std::vector<int> deg;
  for (const auto& c : pure_coefficients(chain)) {
    deg.push_back(static_cast<int>(std::max<long long>(floor_div(level - deg_inf(c), chain.n), -1)));
  }
  return make_shape(std::move(deg));
}

std::pair<int, int> balanced_levels(const KummerSpaceChain& chain, int max_degree) {
  long long lo = 0, hi = 0;
  bool first = true;
  for (const auto& c : pure_coefficients(chain)) {
    const long long w = deg_inf(c);
    lo = first ? w : std::min(lo, w);
    hi = first ? w : std::max(hi, w);
    first = false;
  }
  // lowest level where some coordinate exists; highest where none exceeds max_degree
  return {static_cast<int>(lo), static_cast<int>(lo + static_cast<long long>(chain.n) * (max_degree + 1) - 1)};
}

KummerVector vector_from_point(const KummerSpaceChain& chain, const SubstitutionShape& shape,
                               const std::vector<FqElem>& z) {
  const FiniteField& f = chain.backend.fq();
  std::vector<RatFunc> coords;
  for (std::size_t i = 0; i < chain.dim(); ++i) {
    const auto first = z.begin() + static_cast<std::ptrdiff_t>(shape.offset[i]);
    coords.emplace_back(Poly(f, std::vector<FqElem>(first, first + shape.degree[i] + 1)));
  }
  return unflatten(chain, coords);
}

CompiledSystem compile_norm_system(const KummerSpaceChain& chain, int d) {
  return compile_norm_system(chain, uniform_shape(chain, d));
}

CompiledSystem compile_norm_system(const KummerSpaceChain& chain, const SubstitutionShape& shape) {
  const Backend& b = chain.backend;
  const FiniteField& f = b.fq();
  const std::uint32_t n = chain.n;
  const std::size_t t = chain.t();
  if (shape.degree.size() != chain.dim()) throw Error(ErrorCode::LevelMismatch, "shape does not fit the chain");
  struct Term {
    RatFunc coef;
    std::vector<std::uint32_t> coords;
  };
  std::vector<Term> terms;
  // N_t = c_0 f^n + sum_j c_j N(k_j), c_0 = prod a_i, c_j = b_j prod_{i>j} a_i
  std::vector<RatFunc> tail(t + 1, b.one());
  for (std::size_t j = t; j-- > 0;) tail[j] = tail[j + 1] * chain.factors[j].a;
  terms.push_back(Term{tail[0], std::vector<std::uint32_t>(n, 0)});
  for (std::size_t j = 0; j < t; ++j) {
    const RatFunc cj = chain.factors[j].b * tail[j + 1];
    for (const auto& nt : norm_template(n)) {
      Term term{RatFunc::from_int(f, nt.coef) * cj * chain.factors[j].a.pow(nt.a_power), {}};
      if (term.coef.is_zero()) continue;
      for (int idx : nt.idx) term.coords.push_back(static_cast<std::uint32_t>(1 + j * n + idx));
      terms.push_back(std::move(term));
    }
  }
  // coordinates pinned to zero kill their terms
  std::erase_if(terms, [&](const Term& term) {
    return std::any_of(term.coords.begin(), term.coords.end(), [&](std::uint32_t c) { return shape.degree[c] < 0; });
  });
  Poly den = Poly::constant(f, f.one());
  for (const auto& term : terms) den = exact_div(den * term.coef.den(), gcd(den, term.coef.den()));
  std::vector<Poly> polys;
  int maxdeg = 0;
  for (const auto& term : terms) {
    polys.push_back(exact_div(term.coef.num() * den, term.coef.den()));
    int top = polys.back().degree();
    for (auto c : term.coords) top += shape.degree[c];
    maxdeg = std::max(maxdeg, top);
  }
  std::vector<std::vector<std::pair<FqElem, std::vector<std::uint32_t>>>> buckets(static_cast<std::size_t>(maxdeg + 1));
  std::vector<std::uint32_t> e(n, 0), vars(n);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const Poly& P = polys[k];
    const auto& coords = terms[k].coords;
    std::fill(e.begin(), e.end(), 0);
    for (;;) {
      int shift = 0;
      for (std::uint32_t s = 0; s < n; ++s) {
        vars[s] = shape.offset[coords[s]] + e[s];
        shift += static_cast<int>(e[s]);
      }
      for (int c = 0; c <= P.degree(); ++c) {
        if (P.coeff(c).v) buckets[static_cast<std::size_t>(c + shift)].emplace_back(P.coeff(c), vars);
      }
      std::uint32_t s = 0;
      while (s < n && ++e[s] > static_cast<std::uint32_t>(shape.degree[coords[s]])) e[s++] = 0;
      if (s == n) break;
    }
  }
  CompiledSystem sys(f, shape.nvars, n);
  for (auto& bucket : buckets) {
    for (auto& [c, v] : bucket) sys.add_term(c, v);
    sys.end_equation();
  }
  sys.prune();
  return sys;
}

ZeroCertificate cw_search(const KummerSpaceChain& chain, const SearchBudget& budget) {
  if (!constant_chain(chain)) throw Error(ErrorCode::BadBackend, "cw_search needs constant slots");
  // f least significant: the f = 0 block holds no zero of a single symbol
  SubstitutionShape shape = uniform_shape(chain, 0);
  for (auto& o : shape.offset) o = shape.nvars - 1 - o;
  const CompiledSystem sys = compile_norm_system(chain, shape);
  const FiniteField& f = chain.backend.fq();
  KernelResult r;
  if (budget.strategy == Strategy::Exhaustive) {
    const std::uint64_t space = space_size(f.q(), sys.nvars(), budget.max_candidates + 1);
    r = run_kernel(sys, Enumeration::Lexicographic, budget, 1, std::min(space, budget.max_candidates + 1));
  } else {
    r = run_kernel(sys, Enumeration::Hashed, budget, 0, budget.max_candidates);
  }
  if (!r.found) throw Error(ErrorCode::NotFound, "no zero within " + std::to_string(r.examined) + " candidates");
  ZeroCertificate c = certify(chain, vector_from_point(chain, shape, r.point), "cw");
  c.candidates = r.examined;
  return c;
}

ZeroCertificate tsen_search(const KummerSpaceChain& chain, const SearchBudget& budget) {
  if (!chain.backend.rational()) throw Error(ErrorCode::BadBackend, "tsen_search needs F_q(t)");
  const FiniteField& f = chain.backend.fq();
  const auto [lo, hi] = balanced_levels(chain, budget.max_degree);
  std::uint64_t used = 0;
  std::vector<int> last;
  for (int level = lo; level <= hi; ++level) {
    const std::uint64_t left = budget.max_candidates - used;
    if (left == 0) break;
    const SubstitutionShape shape = balanced_shape(chain, level);
    if (shape.degree == last || shape.nvars == 0) continue;
    last = shape.degree;
    const std::uint64_t share = left / static_cast<std::uint64_t>(hi - level + 1);
    const CompiledSystem sys = compile_norm_system(chain, shape);
    const std::uint64_t space = space_size(f.q(), sys.nvars(), kExhaustiveCap);
    KernelResult r;
    if (space <= share || (budget.strategy == Strategy::Exhaustive && space <= kExhaustiveCap)) {
      r = run_kernel(sys, Enumeration::Lexicographic, budget, 1, std::min(space, left + 1));
    } else {
      r = split_kernel(chain, sys, shape, budget, std::max<std::uint64_t>(share, 2));
    }
    used += r.examined;
    if (r.found) {
      ZeroCertificate c = certify(chain, vector_from_point(chain, shape, r.point), "tsen");
      c.degree = shape.max_degree();
      c.candidates = used;
      return c;
    }
  }
  throw Error(ErrorCode::NotFound, "no zero up to degree " + std::to_string(budget.max_degree) + " within " +
                                       std::to_string(used) + " candidates");
}

ZeroCertificate find_zero(const KummerSpaceChain& chain, const SearchBudget& budget) {
  if (!chain.backend.rational() || constant_chain(chain)) {
    SearchBudget b = budget;
    const CompiledSystem sys = compile_norm_system(chain, 0);
    if (space_size(chain.backend.fq().q(), sys.nvars(), kExhaustiveCap) <= kExhaustiveCap) {
      b.strategy = Strategy::Exhaustive;
    }
    return cw_search(chain, b);
  }
  const bool descent = budget.method == Method::Descent || (budget.method == Method::Auto && chain.n == 2);
  if (descent) {
    try {
      return descent_search(chain, budget);
    } catch (const Error& e) {
      if (budget.method == Method::Descent || e.code() != ErrorCode::NotFound) throw;
    }
  }
  return tsen_search(chain, budget);
}

}  // namespace symlen
