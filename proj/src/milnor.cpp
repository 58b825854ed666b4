#include "symlen/milnor.hpp"

#include <stdexcept>

#include "symlen/errors.hpp"
#include "symlen/text.hpp"

namespace symlen {

using nlohmann::json;

namespace {

const Symbol& at(const SymbolProduct& p, std::size_t i) {
  if (i >= p.size()) throw std::out_of_range("factor index " + std::to_string(i));
  return p.factors[i];
}

SymbolProduct erase(const SymbolProduct& p, std::size_t i) {
  SymbolProduct out = p;
  out.factors.erase(out.factors.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

RatFunc quad(const KummerSpaceChain& chain, const std::vector<RatFunc>& z) {
  return eval_norm(chain, unflatten(chain, z)).first;
}

// z' = Q(w) z - B(z,w) w with w = e_0 + e_i is again isotropic and has z'_0 = -B(z,w).
ZeroCertificate move_off_f(const KummerSpaceChain& chain, const ZeroCertificate& cert) {
  std::vector<RatFunc> z = flatten(cert.v);
  const RatFunc zero = chain.backend.zero();
  for (std::size_t i = 1; i < z.size(); ++i) {
    std::vector<RatFunc> w(z.size(), zero);
    w[0] = chain.backend.one();
    w[i] = chain.backend.one();
    std::vector<RatFunc> sum = z;
    for (std::size_t j = 0; j < z.size(); ++j) sum[j] = z[j] + w[j];
    RatFunc qw = quad(chain, w);
    RatFunc bzw = quad(chain, sum) - qw;
    if (bzw.is_zero()) continue;
    std::vector<RatFunc> out(z.size(), zero);
    for (std::size_t j = 0; j < z.size(); ++j) out[j] = qw * z[j] - bzw * w[j];
    ZeroCertificate moved = certify(chain, unflatten(chain, out), cert.method + "+line");
    moved.degree = cert.degree;
    moved.candidates = cert.candidates;
    return moved;
  }
  throw Error(ErrorCode::InvalidCertificate, "zero is orthogonal to every direction");
}

}  // namespace

SymbolProduct steinberg_delete(const SymbolProduct& p, std::size_t i) {
  const Symbol& s = at(p, i);
  if (s.a.is_zero() || s.a.is_one() || !(s.a + s.b).is_one()) {
    throw Error(ErrorCode::NotSteinberg, to_string(s, p.kind));
  }
  return erase(p, i);
}

SymbolProduct unit_delete(const SymbolProduct& p, std::size_t i) {
  const Symbol& s = at(p, i);
  if (!s.a.is_one() && !s.b.is_one()) throw Error(ErrorCode::NotUnit, to_string(s, p.kind));
  return erase(p, i);
}

SymbolProduct power_twist(const SymbolProduct& p, std::size_t i, const RatFunc& f) {
  at(p, i);
  return apply_rule(p, "power_twist", json{{"f", encode(f)}}, {i});
}

SymbolProduct milnor_norm_twist(const SymbolProduct& p, std::size_t i, const KummerElem& k) {
  at(p, i);
  return apply_rule(p, "norm_twist", json{{"k", encode(k)}}, {i});
}

SymbolProduct minus_delete(const SymbolProduct& p, std::size_t i) {
  const Symbol& s = at(p, i);
  if (!(s.a + s.b).is_zero()) throw Error(ErrorCode::NotMinusPair, to_string(s, p.kind));
  return erase(p, i);
}

SymbolProduct milnor_chain(const SymbolProduct& p, std::size_t i) {
  at(p, i);
  return apply_rule(p, "chain", json::object(), {i});
}

SymbolProduct milnor_merge(const SymbolProduct& p, std::size_t i, std::size_t j) {
  at(p, i);
  at(p, j);
  if (i == j) throw std::invalid_argument("merge needs two distinct factors");
  return apply_rule(p, "pair_merge", json::object(), {i, j});
}

SymbolProduct demo_input(std::uint32_t q) {
  const FiniteField& f = FiniteField::get_order(q);
  Backend b(f, true);
  if (!b.hosts_degree(2)) throw Error(ErrorCode::NDoesNotDivide, "2 does not divide q - 1 = " + std::to_string(q - 1));
  std::vector<RatFunc> ns;
  for (std::uint32_t v = 1; v < q && ns.size() < 2; ++v) {
    RatFunc c = b.constant(FqElem{v});
    if (!nth_power_test(b, c, 2)) ns.push_back(c);
  }
  if (ns.size() == 1) ns.push_back(ns[0]);
  RatFunc t = RatFunc::t(f);
  return SymbolProduct{b, Interpretation::Milnor, {Symbol(t, ns[0], 2), Symbol(t + b.one(), ns[1], 2)}};
}

ReductionReport demo_section8(std::uint32_t q, const SearchBudget& budget) {
  return demo_section8(demo_input(q), budget);
}

ReductionReport demo_section8(const SymbolProduct& input, const SearchBudget& budget) {
  const Backend& b = input.backend;
  if (!b.rational()) throw Error(ErrorCode::BadBackend, "the demonstration runs over F_q(t)");
  if (b.q() % 2 == 0) throw Error(ErrorCode::NDoesNotDivide, "q must be odd");
  if (input.size() != 2) throw Error(ErrorCode::DegreeMismatch, "expected a sum of two symbols");
  for (const auto& s : input.factors) {
    if (s.n != 2) throw Error(ErrorCode::DegreeMismatch, "expected symbols mod 2");
  }
  validate(input);

  SymbolProduct alpha = input;
  alpha.kind = Interpretation::Milnor;
  ProofBuilder pb(alpha);
  std::vector<std::string> notes;

  // a_i a square: {r^2, b} = {1, b} = 0
  for (std::size_t i = 2; i-- > 0;) {
    if (auto r = nth_power_test(b, pb.current().factors[i].a, 2)) {
      pb.apply("power_twist", {i}, json{{"f", encode(b.one() / *r)}}, "(3)");
      pb.apply("delete_split", {i}, json{{"reason", "unit"}}, "(2)");
      notes.push_back("a" + std::to_string(i + 1) + " is a square");
    }
  }

  std::vector<ZeroCertificate> certs;
  if (pb.current().size() == 2) {
    KummerSpaceChain chain = build_chain(pb.current());
    SearchBudget sb = budget;
    sb.method = Method::Tsen;
    ZeroCertificate cert = [&] {
      try {
        return find_zero(chain, sb);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotFound) throw;
        throw Error(ErrorCode::BudgetExhausted, std::string("no zero of N_2: ") + e.what());
      }
    }();
    if (cert.v.f.is_zero()) {
      cert = move_off_f(chain, cert);
      notes.push_back("zero moved along a line to get f != 0");
    }
    certs.push_back(cert);

    const RatFunc& f = cert.v.f;
    const KummerElem& l1 = cert.v.k[0];
    const KummerElem& l2 = cert.v.k[1];
    const RatFunc& n1 = cert.partial.N[0];
    if (f.is_zero() && l1.is_zero()) throw Error(ErrorCode::InvalidCertificate, "v1 = 0 forces v2 = 0");

    if (n1.is_zero()) {
      // {a1,b1} = {f^2 a1, N(l1) b1} = {c, -c} = 0
      notes.push_back("N1(v1) = 0: the first symbol vanishes");
      pb.apply("norm_twist", {0}, json{{"k", encode(l1)}}, "(4)");
      pb.apply("power_twist", {0}, json{{"f", encode(f)}}, "(3)");
      pb.apply("delete_split", {0}, json{{"reason", "minus"}}, "(5)");
    } else {
      notes.push_back("N1(v1) != 0");
      if (!l1.is_zero()) pb.apply("norm_twist", {0}, json{{"k", encode(l1)}}, "(4)");
      pb.apply("power_twist", {0}, json{{"f", encode(f)}}, "(3)");
      if (!l1.is_zero()) pb.apply("chain", {0}, json::object(), "(6)");
      pb.apply("norm_twist", {1}, json{{"k", encode(l2)}}, "(4)");
      pb.apply("pair_merge", {0, 1}, json::object(), "(7)");
      pb.apply("delete_split", {1}, json{{"reason", "minus"}}, "(5)");
    }
  }

  ReductionReport rep(pb.take());
  rep.initial_count = input.size();
  rep.final_count = rep.proof.final.size();
  rep.target = 1;
  rep.certificates = std::move(certs);
  rep.oracle_checked = true;
  rep.oracle_equal = equiv(rep.proof.initial, rep.proof.final);
  for (std::size_t i = 0; i < notes.size(); ++i) rep.message += (i ? "; " : "") + notes[i];
  return rep;
}

}  // namespace symlen
