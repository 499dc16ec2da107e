#include "scrolls/points.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scrolls {

namespace {

// Generator set compiled to residue arithmetic: flat exponent rows and
// a power table indexed by value and exponent.
struct CompiledSystem {
  std::uint32_t q = 0;
  std::size_t nvars = 0;
  std::int32_t maxexp = 0;
  struct CTerm {
    std::uint64_t coeff;
    std::vector<std::int32_t> exps;
  };
  std::vector<std::vector<CTerm>> gens;
  std::vector<std::uint64_t> pow;  // pow[v * (maxexp+1) + e] = v^e mod q

  std::uint64_t power(std::uint32_t v, std::int32_t e) const {
    return pow[static_cast<std::size_t>(v) * static_cast<std::size_t>(maxexp + 1) +
               static_cast<std::size_t>(e)];
  }

  bool vanishes_at(const std::vector<std::uint32_t>& point) const {
    for (const auto& g : gens) {
      std::uint64_t acc = 0;
      for (const auto& t : g) {
        std::uint64_t w = t.coeff;
        for (std::size_t i = 0; i < nvars; ++i) {
          const std::int32_t e = t.exps[i];
          if (e > 0) w = w * power(point[i], e) % q;
        }
        acc = (acc + w) % q;
      }
      if (acc != 0) return false;
    }
    return true;
  }
};

CompiledSystem compile(const GeneratorSet& gens, std::uint32_t q) {
  if (!is_prime_u32(q)) throw InvalidSpec("point enumeration needs a prime q");
  const FieldSpec& rf = gens.ring->field();
  if (rf.is_prime_field() && rf.modulus() != q)
    throw InvalidSpec("generators over " + rf.str() + " cannot be enumerated over Fp:" +
                      std::to_string(q));
  const FieldSpec fq = FieldSpec::prime(q);
  CompiledSystem sys;
  sys.q = q;
  sys.nvars = gens.ring->nvars();
  for (const auto& p : gens.polys) {
    std::vector<CompiledSystem::CTerm> terms;
    for (const auto& t : p.terms()) {
      std::uint64_t c;
      if (rf.is_prime_field()) {
        c = t.coeff.residue();
      } else {
        c = fq.from_ratio(t.coeff.rat().get_num(), t.coeff.rat().get_den()).residue();
      }
      if (c == 0) continue;
      for (std::size_t i = 0; i < sys.nvars; ++i)
        sys.maxexp = std::max(sys.maxexp, t.mono.exp(i));
      terms.push_back({c, t.mono.exps()});
    }
    sys.gens.push_back(std::move(terms));
  }
  sys.pow.assign(static_cast<std::size_t>(q) * static_cast<std::size_t>(sys.maxexp + 1), 1);
  for (std::uint32_t v = 0; v < q; ++v) {
    std::uint64_t acc = 1;
    for (std::int32_t e = 0; e <= sys.maxexp; ++e) {
      sys.pow[static_cast<std::size_t>(v) * static_cast<std::size_t>(sys.maxexp + 1) +
              static_cast<std::size_t>(e)] = acc;
      acc = acc * v % q;
    }
  }
  return sys;
}

long long grid_size(std::uint32_t q, std::size_t nvars, long long cap) {
  long long total = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (total > cap / q)
      throw BudgetExceeded("q^N exceeds the point budget " + std::to_string(cap));
    total *= q;
  }
  return total;
}

std::vector<std::uint32_t> decode(long long idx, std::uint32_t q, std::size_t nvars) {
  std::vector<std::uint32_t> point(nvars, 0);
  for (std::size_t i = nvars; i-- > 0;) {
    point[i] = static_cast<std::uint32_t>(idx % q);
    idx /= q;
  }
  return point;
}

// Advance the odometer; last coordinate fastest, matching lex order.
void advance(std::vector<std::uint32_t>& point, std::uint32_t q) {
  for (std::size_t i = point.size(); i-- > 0;) {
    if (++point[i] < q) return;
    point[i] = 0;
  }
}

void scan_range(const CompiledSystem& sys, long long lo, long long hi,
                std::vector<std::vector<std::uint32_t>>& out) {
  std::vector<std::uint32_t> point = decode(lo, sys.q, sys.nvars);
  for (long long idx = lo; idx < hi; ++idx) {
    if (sys.vanishes_at(point)) out.push_back(point);
    advance(point, sys.q);
  }
}

}  // namespace

bool PointSet::contains(const std::vector<std::uint32_t>& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

PointSet points_vanishing_serial(const GeneratorSet& gens, std::uint32_t q,
                                 const Budget& budget) {
  const CompiledSystem sys = compile(gens, q);
  const long long total = grid_size(q, sys.nvars, budget.max_points);
  PointSet ps{q, sys.nvars, {}};
  scan_range(sys, 0, total, ps.points);
  return ps;
}

PointSet points_vanishing(const GeneratorSet& gens, std::uint32_t q, const Budget& budget) {
  const CompiledSystem sys = compile(gens, q);
  const long long total = grid_size(q, sys.nvars, budget.max_points);
  PointSet ps{q, sys.nvars, {}};
#ifdef _OPENMP
#pragma omp parallel
  {
    // Partition by the actual team size; under nested parallelism the
    // team may be smaller than omp_get_max_threads().
    const int nthreads = omp_get_num_threads();
    const int t = omp_get_thread_num();
    const long long chunk = (total + nthreads - 1) / nthreads;
    const long long lo = std::min<long long>(total, chunk * t);
    const long long hi = std::min<long long>(total, lo + chunk);
    std::vector<std::vector<std::uint32_t>> mine;
    scan_range(sys, lo, hi, mine);
#pragma omp critical
    for (auto& p : mine) ps.points.push_back(std::move(p));
  }
  // Distinct points, so the sort alone restores a deterministic order.
  std::sort(ps.points.begin(), ps.points.end());
#else
  scan_range(sys, 0, total, ps.points);
#endif
  return ps;
}

std::optional<std::vector<std::uint32_t>> first_difference(const PointSet& a,
                                                           const PointSet& b) {
  for (const auto& p : a.points)
    if (!b.contains(p)) return p;
  return std::nullopt;
}

std::uint32_t eval_mod_q(const Poly& f, const std::vector<std::uint32_t>& point,
                         std::uint32_t q) {
  const FieldSpec& rf = f.ring()->field();
  if (rf.is_prime_field() && rf.modulus() != q)
    throw InvalidSpec("coefficients live in " + rf.str());
  const FieldSpec fq = FieldSpec::prime(q);
  std::uint64_t acc = 0;
  for (const auto& t : f.terms()) {
    std::uint64_t w = rf.is_prime_field()
                          ? t.coeff.residue()
                          : fq.from_ratio(t.coeff.rat().get_num(), t.coeff.rat().get_den())
                                .residue();
    for (std::size_t i = 0; i < point.size(); ++i) {
      std::int32_t e = t.mono.exp(i);
      while (e-- > 0) w = w * point[i] % q;
    }
    acc = (acc + w) % q;
  }
  return static_cast<std::uint32_t>(acc);
}

}  // namespace scrolls
