#include "symlen/search_kernel.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include <omp.h>

#include "symlen/errors.hpp"

namespace symlen {

CompiledSystem::CompiledSystem(const FiniteField& f, std::uint32_t nvars, std::uint32_t degree)
    : f_(&f), nvars_(nvars), degree_(degree) {}

void CompiledSystem::add_term(FqElem coef, const std::vector<std::uint32_t>& vars) {
  if (vars.size() != degree_) throw Error(ErrorCode::DegreeMismatch, "term degree differs from system degree");
  if (coef.v == 0) return;
  std::vector<std::uint32_t> v = vars;
  std::sort(v.begin(), v.end());
  pending_.emplace_back(std::move(v), coef);
}

void CompiledSystem::end_equation() {
  std::map<std::vector<std::uint32_t>, FqElem> merged;
  for (auto& [v, c] : pending_) {
    auto [it, fresh] = merged.emplace(v, c);
    if (!fresh) it->second = f_->add(it->second, c);
  }
  pending_.clear();
  for (auto& [v, c] : merged) {
    if (c.v == 0) continue;
    coef_.push_back(c);
    vars_.insert(vars_.end(), v.begin(), v.end());
  }
  eq_begin_.push_back(coef_.size());
}

void CompiledSystem::prune() {
  std::vector<std::size_t> begin{0};
  std::vector<FqElem> coef;
  std::vector<std::uint32_t> vars;
  for (std::size_t e = 0; e + 1 < eq_begin_.size(); ++e) {
    if (eq_begin_[e] == eq_begin_[e + 1]) continue;
    for (std::size_t k = eq_begin_[e]; k < eq_begin_[e + 1]; ++k) {
      coef.push_back(coef_[k]);
      vars.insert(vars.end(), vars_.begin() + static_cast<std::ptrdiff_t>(k * degree_),
                  vars_.begin() + static_cast<std::ptrdiff_t>((k + 1) * degree_));
    }
    begin.push_back(coef.size());
  }
  eq_begin_ = std::move(begin);
  coef_ = std::move(coef);
  vars_ = std::move(vars);
}

FqElem CompiledSystem::eval(std::size_t eq, const FqElem* z) const {
  FqElem acc = f_->zero();
  for (std::size_t k = eq_begin_[eq]; k < eq_begin_[eq + 1]; ++k) {
    FqElem term = coef_[k];
    const std::uint32_t* v = &vars_[k * degree_];
    for (std::uint32_t d = 0; d < degree_ && term.v; ++d) term = f_->mul(term, z[v[d]]);
    acc = f_->add(acc, term);
  }
  return acc;
}

bool CompiledSystem::is_zero_at(const FqElem* z) const {
  for (std::size_t e = 0; e + 1 < eq_begin_.size(); ++e) {
    if (eval(e, z).v != 0) return false;
  }
  return true;
}

void CompiledSystem::eval_all(const FqElem* z, FqElem* out) const {
  for (std::size_t e = 0; e + 1 < eq_begin_.size(); ++e) out[e] = eval(e, z);
}

CompiledSystem CompiledSystem::restrict(std::uint32_t lo, std::uint32_t hi) const {
  CompiledSystem out(*f_, hi - lo, degree_);
  std::vector<std::uint32_t> v(degree_);
  for (std::size_t e = 0; e + 1 < eq_begin_.size(); ++e) {
    for (std::size_t k = eq_begin_[e]; k < eq_begin_[e + 1]; ++k) {
      std::uint32_t inside = 0;
      for (std::uint32_t d = 0; d < degree_; ++d) {
        const std::uint32_t x = vars_[k * degree_ + d];
        if (x >= lo && x < hi) {
          ++inside;
          v[d] = x - lo;
        }
      }
      if (inside == degree_) out.add_term(coef_[k], v);
      else if (inside != 0) throw Error(ErrorCode::DegreeMismatch, "term straddles the split");
    }
    out.end_equation();
  }
  return out;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool all_zero(const FqElem* z, std::uint32_t n) {
  for (std::uint32_t i = 0; i < n; ++i) {
    if (z[i].v) return false;
  }
  return true;
}

// Lexicographic successor (last variable least significant).
void advance(std::uint32_t q, std::uint32_t n, FqElem* z) {
  for (std::uint32_t i = n; i-- > 0;) {
    if (++z[i].v < q) return;
    z[i].v = 0;
  }
}

bool hit(const CompiledSystem& sys, const FqElem* z) { return !all_zero(z, sys.nvars()) && sys.is_zero_at(z); }

}  // namespace

void point_at(const CompiledSystem& sys, Enumeration mode, std::uint64_t seed, std::uint64_t i, FqElem* out) {
  const std::uint32_t q = sys.field().q(), n = sys.nvars();
  if (mode == Enumeration::Lexicographic) {
    for (std::uint32_t k = n; k-- > 0;) {
      out[k].v = static_cast<std::uint32_t>(i % q);
      i /= q;
    }
    return;
  }
  const std::uint64_t base = splitmix(seed ^ splitmix(i));
  for (std::uint32_t k = 0; k < n; ++k) out[k].v = static_cast<std::uint32_t>(splitmix(base + k) % q);
}

KernelResult search_serial(const CompiledSystem& sys, Enumeration mode, std::uint64_t seed, std::uint64_t begin,
                           std::uint64_t end) {
  KernelResult r;
  std::vector<FqElem> z(sys.nvars());
  if (begin < end) point_at(sys, mode, seed, begin, z.data());
  for (std::uint64_t i = begin; i < end; ++i) {
    if (i != begin) {
      if (mode == Enumeration::Lexicographic) advance(sys.field().q(), sys.nvars(), z.data());
      else point_at(sys, mode, seed, i, z.data());
    }
    if (hit(sys, z.data())) {
      r.found = true;
      r.index = i;
      r.examined = i - begin + 1;
      r.point = z;
      return r;
    }
  }
  r.examined = end > begin ? end - begin : 0;
  return r;
}

KernelResult search_parallel(const CompiledSystem& sys, Enumeration mode, std::uint64_t seed, std::uint64_t begin,
                             std::uint64_t end) {
  const std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t chunk = 4096;
  const std::uint64_t block = chunk * static_cast<std::uint64_t>(std::max(1, omp_get_max_threads())) * 4;
  for (std::uint64_t lo = begin; lo < end; lo += block) {
    const std::uint64_t hi = std::min(end, lo + block);
    const std::int64_t nchunks = static_cast<std::int64_t>((hi - lo + chunk - 1) / chunk);
    std::uint64_t best = none;
#pragma omp parallel
    {
      std::vector<FqElem> z(sys.nvars());
#pragma omp for schedule(static) reduction(min : best)
      for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::uint64_t a = lo + static_cast<std::uint64_t>(c) * chunk;
        const std::uint64_t b = std::min(hi, a + chunk);
        point_at(sys, mode, seed, a, z.data());
        for (std::uint64_t i = a; i < b && i < best; ++i) {
          if (i != a) {
            if (mode == Enumeration::Lexicographic) advance(sys.field().q(), sys.nvars(), z.data());
            else point_at(sys, mode, seed, i, z.data());
          }
          if (hit(sys, z.data())) {
            best = std::min(best, i);
            break;
          }
        }
      }
    }
    if (best != none) {
      KernelResult r;
      r.found = true;
      r.index = best;
      r.examined = best - begin + 1;
      r.point.resize(sys.nvars());
      point_at(sys, mode, seed, best, r.point.data());
      return r;
    }
  }
  KernelResult r;
  r.examined = end > begin ? end - begin : 0;
  return r;
}

namespace {

std::uint64_t key_of(const FqElem* vals, std::size_t n) {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (std::size_t i = 0; i < n; ++i) h = splitmix(h ^ vals[i].v);
  return h;
}

}  // namespace

KernelResult search_split(const CompiledSystem& sys, std::uint32_t boundary, std::uint64_t table, Enumeration mode,
                          std::uint64_t seed, std::uint64_t begin, std::uint64_t end, bool parallel) {
  const FiniteField& f = sys.field();
  const CompiledSystem left = sys.restrict(0, boundary);
  const CompiledSystem right = sys.restrict(boundary, sys.nvars());
  const std::size_t neq = sys.equations();
  const std::uint64_t none = std::numeric_limits<std::uint64_t>::max();

  // right-hand table: all points when they fit, else a hashed sample
  std::uint64_t rspace = 1;
  for (std::uint32_t i = 0; i < right.nvars() && rspace <= table; ++i) rspace *= f.q();
  const bool full = rspace <= table;
  const std::uint64_t rcount = full ? rspace : table;
  const Enumeration rmode = full ? Enumeration::Lexicographic : Enumeration::Hashed;
  const std::uint64_t rseed = splitmix(seed ^ 0x5bd1e995ULL);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> keys(rcount);
  {
    std::vector<FqElem> z(right.nvars()), vals(neq);
    for (std::uint64_t i = 0; i < rcount; ++i) {
      point_at(right, rmode, rseed, i, z.data());
      right.eval_all(z.data(), vals.data());
      keys[i] = {key_of(vals.data(), neq), i};
    }
  }
  std::sort(keys.begin(), keys.end());

  // least right index completing left point i, or none
  auto probe = [&](std::uint64_t i, std::vector<FqElem>& zl, std::vector<FqElem>& vals,
                   std::vector<FqElem>& full_point) -> std::uint64_t {
    point_at(left, mode, seed, i, zl.data());
    left.eval_all(zl.data(), vals.data());
    for (auto& v : vals) v = f.neg(v);
    const std::uint64_t k = key_of(vals.data(), neq);
    auto it = std::lower_bound(keys.begin(), keys.end(), std::make_pair(k, std::uint64_t{0}));
    for (; it != keys.end() && it->first == k; ++it) {
      std::copy(zl.begin(), zl.end(), full_point.begin());
      point_at(right, rmode, rseed, it->second, full_point.data() + boundary);
      if (hit(sys, full_point.data())) return it->second;
    }
    return none;
  };

  const std::uint64_t chunk = 1024;
  const int threads = parallel ? std::max(1, omp_get_max_threads()) : 1;
  const std::uint64_t block = chunk * static_cast<std::uint64_t>(threads) * 4;
  for (std::uint64_t lo = begin; lo < end; lo += block) {
    const std::uint64_t hi = std::min(end, lo + block);
    const std::int64_t nchunks = static_cast<std::int64_t>((hi - lo + chunk - 1) / chunk);
    std::uint64_t best = none;
#pragma omp parallel num_threads(threads)
    {
      std::vector<FqElem> zl(left.nvars()), vals(neq), point(sys.nvars());
#pragma omp for schedule(static) reduction(min : best)
      for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::uint64_t a = lo + static_cast<std::uint64_t>(c) * chunk;
        const std::uint64_t b = std::min(hi, a + chunk);
        for (std::uint64_t i = a; i < b && i < best; ++i) {
          if (probe(i, zl, vals, point) != none) {
            best = std::min(best, i);
            break;
          }
        }
      }
    }
    if (best != none) {
      KernelResult r;
      std::vector<FqElem> zl(left.nvars()), vals(neq);
      r.point.resize(sys.nvars());
      probe(best, zl, vals, r.point);
      r.found = true;
      r.index = best;
      r.examined = best - begin + 1 + rcount;
      return r;
    }
  }
  KernelResult r;
  r.examined = (end > begin ? end - begin : 0) + rcount;
  return r;
}

}  // namespace symlen
