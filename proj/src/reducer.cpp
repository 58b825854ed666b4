#include "symlen/reducer.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "symlen/errors.hpp"

namespace symlen {

using nlohmann::json;

namespace {

// Factor o+t-1 of the window gets first slot N_t(v); factors below it are
// rewritten recursively. Norms refer to the window before any rewriting.
void lift(ProofBuilder& pb, std::size_t o, std::size_t t, const KummerSpaceChain& ch, const KummerVector& v,
          const PartialNormVector& pn) {
  const std::size_t i = o + t - 1;
  const KummerElem& k = v.k[t - 1];
  const RatFunc prev = t == 1 ? v.f.pow(ch.n) : pn.N[t - 2];
  if (prev.is_zero()) {
    pb.apply("norm_twist", {i}, json{{"k", encode(k)}});
    pb.apply("swap", {i});
    return;
  }
  if (t == 1) {
    pb.apply("power_twist", {i}, json{{"f", encode(v.f)}});
    if (!k.is_zero()) {
      pb.apply("norm_twist", {i}, json{{"k", encode(rescale(k, v.f))}});
      pb.apply("chain", {i});
    }
    return;
  }
  lift(pb, o, t - 1, ch, v, pn);
  if (k.is_zero()) {
    pb.apply("pair_merge", {i - 1, i});
  } else {
    pb.apply("pair_merge_with_norm", {i - 1, i}, json{{"k", encode(k)}});
  }
}

SymbolProduct window(const SymbolProduct& p, std::size_t o, std::size_t t) {
  if (o + t > p.size()) throw Error(ErrorCode::LevelMismatch, "window exceeds the product");
  SymbolProduct w{p.backend, p.kind, {}};
  w.factors.assign(p.factors.begin() + static_cast<std::ptrdiff_t>(o),
                   p.factors.begin() + static_cast<std::ptrdiff_t>(o + t));
  return w;
}

// prod pi^(e div n) over the factorization of a nonzero polynomial
Poly nth_part(const Poly& x, std::uint32_t n) {
  Poly r = Poly::constant(x.field(), x.field().one());
  if (x.degree() <= 0) return r;
  for (auto& [pi, e] : factor(x)) r *= pi.pow(static_cast<unsigned>(e / static_cast<int>(n)));
  return r;
}

std::uint32_t single_degree(const SymbolProduct& p) {
  if (p.empty()) return 1;
  const std::uint32_t n = p.factors.front().n;
  for (const auto& s : p.factors) {
    if (s.n != n) throw Error(ErrorCode::DegreeMismatch, "factors must share one degree");
  }
  return n;
}

void check_slot(const ProofBuilder& pb, std::size_t i, const RatFunc& expect) {
  if (!(pb.current().factors[i].a == expect)) {
    throw Error(ErrorCode::InvalidCertificate, "rewrite did not produce the expected first slot");
  }
}

long long window_cost(const SymbolProduct& p, std::size_t o, std::size_t w) {
  long long cost = 0;
  for (std::size_t j = o; j < o + w; ++j) {
    const auto& s = p.factors[j];
    cost += s.a.num().degree() + s.a.den().degree() + s.b.num().degree() + s.b.den().degree();
  }
  return cost;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void finish(ReductionReport& r, const SymbolProduct& initial, ProofBuilder& pb) {
  r.proof = pb.take();
  r.final_count = r.proof.final.size();
  if (initial.backend.rational()) {
    r.oracle_checked = true;
    r.oracle_equal = equiv(initial, r.proof.final);
  }
}

}  // namespace

void rewrite_with_slot(ProofBuilder& pb, std::size_t offset, std::size_t t, const KummerVector& v) {
  const auto ch = build_chain(window(pb.current(), offset, t));
  auto [N, pn] = eval_norm(ch, v);
  if (N.is_zero()) throw Error(ErrorCode::ZeroNorm, "N_t(v) = 0");
  lift(pb, offset, t, ch, v, pn);
  check_slot(pb, offset + t - 1, N);
}

SymbolProduct rewrite_with_slot(const SymbolProduct& p, const KummerVector& v) {
  ProofBuilder pb(p);
  rewrite_with_slot(pb, 0, p.size(), v);
  return pb.current();
}

void rewrite_all_slots(ProofBuilder& pb, std::size_t offset, std::size_t t, const KummerVector& v) {
  const auto ch = build_chain(window(pb.current(), offset, t));
  auto [N, pn] = eval_norm(ch, v);
  for (std::size_t j = 0; j < pn.N.size(); ++j) {
    if (pn.N[j].is_zero()) throw Error(ErrorCode::ZeroPartial, "N_" + std::to_string(j + 1) + "(v) = 0");
  }
  lift(pb, offset, t, ch, v, pn);
  for (std::size_t j = 0; j < t; ++j) check_slot(pb, offset + j, pn.N[j]);
}

SymbolProduct rewrite_all_slots(const SymbolProduct& p, const KummerVector& v) {
  ProofBuilder pb(p);
  rewrite_all_slots(pb, 0, p.size(), v);
  return pb.current();
}

void shorten(ProofBuilder& pb, std::size_t offset, std::size_t t, const ZeroCertificate& cert) {
  const auto ch = build_chain(window(pb.current(), offset, t));
  verify(ch, cert);
  const KummerVector& v = cert.v;
  const auto pn = eval_norm(ch, v).second;
  std::size_t j0 = 0;
  if (v.f.is_zero()) {
    j0 = 1;
    while (v.k[j0 - 1].is_zero()) ++j0;
  }
  std::size_t tp = std::max<std::size_t>(j0, 1);
  while (!pn.N[tp - 1].is_zero()) ++tp;
  const KummerElem& k = v.k[tp - 1];
  const auto impossible = [] { return Error(ErrorCode::NonFieldSlot, "norm vanished on a nonzero element"); };
  if (tp == 1) {
    if (v.f.is_zero() || k.is_zero()) throw impossible();
    pb.apply("power_twist", {offset}, json{{"f", encode(v.f)}});
    pb.apply("norm_twist", {offset}, json{{"k", encode(rescale(k, v.f))}});
    pb.apply("delete_split", {offset}, json{{"reason", "minus"}});
    return;
  }
  if (k.is_zero() || pn.N[tp - 2].is_zero()) throw impossible();
  lift(pb, offset, tp - 1, ch, v, pn);
  const std::size_t i = offset + tp - 1;
  pb.apply("norm_twist", {i}, json{{"k", encode(k)}});
  pb.apply("pair_merge", {i - 1, i});
  pb.apply("delete_split", {i}, json{{"reason", "minus"}});
}

SymbolProduct shorten(const SymbolProduct& p, const ZeroCertificate& cert) {
  ProofBuilder pb(p);
  shorten(pb, 0, p.size(), cert);
  return pb.current();
}

void cleanup(ProofBuilder& pb, bool use_oracle) {
  const Backend B = pb.current().backend;
  std::size_t i = 0;
  auto del = [&](const char* reason) { pb.apply("delete_split", {i}, json{{"reason", reason}}); };
  while (i < pb.current().size()) {
    const Symbol s = pb.current().factors[i];
    if (s.a.is_one() || s.b.is_one()) {
      del("unit");
      continue;
    }
    if ((s.a + s.b).is_zero()) {
      del("minus");
      continue;
    }
    if ((s.a + s.b).is_one()) {
      del("steinberg");
      continue;
    }
    if (nth_power_test(B, s.a, s.n) || nth_power_test(B, s.b, s.n)) {
      del("power");
      continue;
    }
    if (B.rational()) {
      if (!s.a.is_polynomial()) {
        pb.apply("power_twist", {i}, json{{"f", encode(RatFunc(s.a.den()))}});
        continue;
      }
      if (!s.b.is_polynomial()) {
        pb.apply("norm_twist", {i}, json{{"k", encode(KummerElem::scalar(B, s.n, RatFunc(s.b.den())))}});
        continue;
      }
      const Poly ra = nth_part(s.a.num(), s.n);
      if (ra.degree() > 0) {
        pb.apply("power_twist", {i}, json{{"f", encode(RatFunc(ra).inverse())}});
        continue;
      }
      const Poly rb = nth_part(s.b.num(), s.n);
      if (rb.degree() > 0) {
        pb.apply("norm_twist", {i}, json{{"k", encode(KummerElem::scalar(B, s.n, RatFunc(rb).inverse()))}});
        continue;
      }
    }
    if (!first_slot_algebra(B, s).is_field()) {
      pb.apply("slot_normalize", {i});
      continue;
    }
    if (use_oracle && B.rational() && residue_vector(SymbolProduct{B, pb.current().kind, {s}}).trivial()) {
      del("oracle");
      continue;
    }
    ++i;
  }
}

ReductionReport reduce_to_bound(const SymbolProduct& p, const SearchBudget& budget) {
  validate(p);
  const std::uint32_t n = single_degree(p);
  const Backend& B = p.backend;
  ReductionReport r(RewriteProof{p, {}, p});
  r.initial_count = p.size();
  const std::uint64_t w = ipow(n, B.cm_index() - 1);
  r.target = static_cast<std::size_t>(w - 1);
  ProofBuilder pb(p);
  cleanup(pb, B.rational());
  while (pb.current().size() > r.target) {
    // for n >= 3 every pair window is tried first with a tenth of the budget,
    // then every full window; offsets in order of increasing slot degree
    struct Attempt {
      std::size_t offset, size;
      SearchBudget budget;
    };
    std::vector<Attempt> plan;
    const std::size_t size = pb.current().size();
    auto offsets = [&](std::size_t len) {
      std::vector<std::size_t> os(size - len + 1);
      for (std::size_t o = 0; o < os.size(); ++o) os[o] = o;
      std::stable_sort(os.begin(), os.end(), [&](std::size_t x, std::size_t y) {
        return window_cost(pb.current(), x, len) < window_cost(pb.current(), y, len);
      });
      return os;
    };
    if (w > 2) {
      const auto os = offsets(2);
      for (std::size_t o : os) {
        SearchBudget small = budget;
        small.max_candidates = std::max<std::uint64_t>(budget.max_candidates / (10 * os.size()), 1);
        small.max_degree = std::min(budget.max_degree, 1);
        plan.push_back({o, 2, small});
      }
    }
    const auto os = offsets(static_cast<std::size_t>(w));
    for (std::size_t o : os) {
      SearchBudget share = budget;
      share.max_candidates = std::max<std::uint64_t>(budget.max_candidates / os.size(), 1);
      plan.push_back({o, static_cast<std::size_t>(w), share});
    }
    bool done = false;
    for (const auto& at : plan) {
      // pairs are tried with the cheaper factor last, then reversed
      std::vector<bool> flips{false};
      SearchBudget bud = at.budget;
      if (at.size == 2) {
        const bool flip = window_cost(pb.current(), at.offset + 1, 1) > window_cost(pb.current(), at.offset, 1);
        flips = {flip, !flip};
        bud.max_candidates = std::max<std::uint64_t>(bud.max_candidates / 2, 1);
      }
      for (bool flip : flips) {
        SymbolProduct win = window(pb.current(), at.offset, at.size);
        if (flip) std::swap(win.factors[0], win.factors[1]);
        try {
          const auto cert = find_zero(build_chain(win), bud);
          if (flip) pb.apply("reorder", {at.offset, at.offset + 1});
          shorten(pb, at.offset, at.size, cert);
          r.certificates.push_back(cert);
          done = true;
          break;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotFound) throw;
          r.message = e.what();
        }
      }
      if (done) break;
    }
    if (!done) {
      r.budget_exhausted = true;
      break;
    }
    cleanup(pb, B.rational());
  }
  finish(r, p, pb);
  r.layers = {r.proof.final};
  return r;
}

namespace {

// Bilinear expansion of a product of symbols of degrees dividing N over the
// atoms {g} u {monic irreducibles}; nullopt unless every coefficient is
// divisible by N/p.
std::optional<SymbolProduct> structural_presentation(const SymbolProduct& c, std::uint32_t N, std::uint32_t p) {
  const Backend& B = c.backend;
  const FiniteField& F = B.fq();
  std::vector<Poly> atoms;  // index 0 is the generator g
  atoms.push_back(Poly::constant(F, F.generator()));
  auto atom = [&](const Poly& pi) {
    for (std::size_t i = 1; i < atoms.size(); ++i) {
      if (atoms[i] == pi) return i;
    }
    atoms.push_back(pi);
    return atoms.size() - 1;
  };
  auto expand = [&](const RatFunc& x) {
    std::vector<std::pair<std::size_t, long long>> out;
    const auto fx = factor(x);
    if (const long long l = F.log(fx.unit)) out.emplace_back(0, l);
    for (auto& [pi, e] : fx.factors) out.emplace_back(atom(pi), e);
    return out;
  };
  const long long NN = N;
  std::map<std::pair<std::size_t, std::size_t>, long long> coef;
  auto add = [&](std::size_t x, std::size_t y, long long c) {
    if (x == 0 && y == 0) return;  // constants pair trivially
    if (x > y) {
      std::swap(x, y);
      c = -c;
    }
    auto& slot = coef[{x, y}];
    slot = ((slot + c) % NN + NN) % NN;
  };
  const long long log_minus_one = F.log(F.neg(F.one()));
  for (const auto& s : c.factors) {
    const long long m = N / s.n;
    for (auto& [x, al] : expand(s.a)) {
      for (auto& [y, be] : expand(s.b)) {
        const long long v = (m * al % NN) * (be % NN) % NN;
        if (x == y) {
          add(x, 0, v * log_minus_one % NN);  // (x, x) = (x, -1)
        } else {
          add(x, y, v);
        }
      }
    }
  }
  SymbolProduct out{B, c.kind, {}};
  const long long step = N / p;
  for (auto& [xy, v] : coef) {
    if (v % step) return std::nullopt;
    const long long e = v / step;
    if (e == 0) continue;
    out.factors.emplace_back(RatFunc(atoms[xy.first]), RatFunc(atoms[xy.second]).pow(e), p);
  }
  return out;
}

Poly poly_from_index(const FiniteField& f, std::uint64_t i) {
  std::vector<FqElem> c;
  while (i) {
    c.push_back(FqElem{static_cast<std::uint32_t>(i % f.q())});
    i /= f.q();
  }
  return Poly(f, c);
}

}  // namespace

SymbolProduct present_by_residues(const Backend& b, const ResidueVector& target, std::uint32_t p) {
  if (!b.rational()) return SymbolProduct{b, Interpretation::Brauer, {}};
  if (target.n != p) throw Error(ErrorCode::DegreeMismatch, "target residues must live in Z/p");
  if (!reciprocity_holds(target)) throw Error(ErrorCode::UnreachableLayer, "target violates reciprocity");
  const FiniteField& F = b.fq();
  SymbolProduct out{b, Interpretation::Brauer, {}};
  for (;;) {
    const ResidueVector cur = residue_vector(out, p);
    std::optional<Place> worst;
    std::uint32_t delta = 0;
    auto mismatch = [&](const Place& pl) {
      const auto a = target.classes.find(pl), c = cur.classes.find(pl);
      const std::uint32_t ta = a == target.classes.end() ? 0 : a->second;
      const std::uint32_t tc = c == cur.classes.end() ? 0 : c->second;
      return (ta + p - tc) % p;
    };
    std::vector<Place> places;
    for (auto& [pl, v] : target.classes) places.push_back(pl);
    for (auto& [pl, v] : cur.classes) places.push_back(pl);
    for (const auto& pl : places) {
      if (pl.is_infinite()) continue;
      const std::uint32_t d = mismatch(pl);
      if (d == 0) continue;
      if (!worst || pl.degree() > worst->degree() || (pl.degree() == worst->degree() && *worst < pl)) {
        worst = pl;
        delta = d;
      }
    }
    if (!worst) break;
    const Poly& pi = *worst->pi;
    bool placed = false;
    for (std::uint64_t i = 1; !placed; ++i) {
      const Poly u = poly_from_index(F, i);
      if (u.degree() >= pi.degree()) throw Error(ErrorCode::UnreachableLayer, "no unit with the wanted residue");
      const Symbol s(RatFunc(pi), RatFunc(u), p);
      if (residue_at(b, s, *worst).value == delta) {
        out.factors.push_back(s);
        placed = true;
      }
    }
  }
  if (!(residue_vector(out, p) == target)) throw Error(ErrorCode::UnreachableLayer, "residue presentation failed");
  return out;
}

ReductionReport layered_reduce(const SymbolProduct& p, const SearchBudget& budget, bool allow_residue_presentation) {
  validate(p);
  const std::uint32_t N = single_degree(p);
  const Backend& B = p.backend;
  const auto primes = prime_factors(N);
  if (!B.rational() || N == 1 || (primes.size() == 1 && N == primes.front())) {
    return reduce_to_bound(p, budget);
  }
  if (primes.size() != 1) throw Error(ErrorCode::DegreeMismatch, "layered reduction needs a prime power degree");
  const auto prime = static_cast<std::uint32_t>(primes.front());

  SymbolProduct Bp{B, p.kind, {}};
  for (const auto& s : p.factors) Bp.factors.push_back(deflate_power(B, s, N / prime));
  ReductionReport rb = layered_reduce(Bp, budget, allow_residue_presentation);

  ReductionReport r(RewriteProof{p, {}, p});
  r.initial_count = p.size();
  if (rb.budget_exhausted) {
    r.budget_exhausted = true;
    r.message = rb.message;
    r.proof = RewriteProof{p, {}, p};
    r.final_count = p.size();
    r.sub_reports.push_back(std::move(rb));
    return r;
  }
  // B' with B'^p ~ reduced A^p: every layer moves up one degree
  SymbolProduct lifted{B, p.kind, {}};
  std::vector<SymbolProduct> upper;
  for (const auto& layer : rb.layers) {
    SymbolProduct l{B, p.kind, {}};
    for (const auto& s : layer.factors) l.factors.emplace_back(s.a, s.b, s.n * prime);
    lifted.factors.insert(lifted.factors.end(), l.factors.begin(), l.factors.end());
    upper.push_back(std::move(l));
  }
  // C_1 = A (x) B'^-1
  SymbolProduct c1{B, p.kind, p.factors};
  for (const auto& s : lifted.factors) c1.factors.push_back(inverse(s));
  auto c1p = structural_presentation(c1, N, prime);
  if (!c1p) {
    if (!allow_residue_presentation) {
      throw Error(ErrorCode::UnreachableLayer, "C_1 has no presentation by degree-" + std::to_string(prime) +
                                                   " symbols through bilinear expansion");
    }
    const ResidueVector rv = residue_vector(c1, N);
    ResidueVector t;
    t.n = prime;
    for (auto& [pl, v] : rv.classes) {
      if (v % (N / prime)) throw Error(ErrorCode::UnreachableLayer, "C_1 does not have exponent p");
      t.classes.emplace(pl, v / (N / prime));
    }
    c1p = present_by_residues(B, t, prime);
    c1p->kind = p.kind;
  }
  ReductionReport rc = reduce_to_bound(*c1p, budget);

  // proof over C_1 (x) B': the C_1 steps, indices unchanged
  SymbolProduct start{B, p.kind, c1p->factors};
  start.factors.insert(start.factors.end(), lifted.factors.begin(), lifted.factors.end());
  ProofBuilder pb(start);
  for (const auto& s : rc.proof.steps) pb.apply(s.rule, s.index, s.params, s.label);
  r.certificates = rc.certificates;
  r.target = rc.target * (upper.size() + 1);
  r.budget_exhausted = rc.budget_exhausted;
  r.message = rc.message;
  r.layers.push_back(rc.proof.final);
  for (auto& l : upper) r.layers.push_back(std::move(l));
  r.sub_reports.push_back(std::move(rb));
  r.sub_reports.push_back(std::move(rc));
  r.proof = pb.take();
  r.final_count = r.proof.final.size();
  r.oracle_checked = true;
  r.oracle_equal = equiv(p, r.proof.final);
  return r;
}

}  // namespace symlen
