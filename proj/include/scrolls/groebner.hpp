#pragma once

#include <chrono>
#include <optional>

#include "scrolls/generators.hpp"
#include "scrolls/polynomial.hpp"
#include "scrolls/report.hpp"

namespace scrolls {

/// Caps on the Buchberger loop and the point-enumeration oracle.
/// Exceeding a cap raises BudgetExceeded instead of returning a wrong
/// answer.
struct Budget {
  long max_pairs = 200'000;          // S-pairs popped from the queue
  int max_degree = 60;               // any intermediate polynomial degree
  long long max_points = 10'000'000; // q^N for exhaustive enumeration
  std::optional<std::chrono::milliseconds> wall;  // per run

  std::optional<std::chrono::steady_clock::time_point> deadline_from_now() const {
    if (!wall) return std::nullopt;
    return std::chrono::steady_clock::now() + *wall;
  }
};

struct GBStats {
  long pairs = 0;       // S-pairs popped (incl. criteria-skipped)
  long reductions = 0;  // single reduction steps across all divisions
  int maxdeg = 0;       // largest intermediate degree seen
};

/// Reduced Groebner basis: monic elements, no term of any element
/// divisible by another's leading monomial, sorted by ascending leading
/// monomial. Unique for a given ideal and order, so runs are reproducible.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Poly> elems, GBStats stats, std::size_t sources)
      : ring_(std::move(ring)), elems_(std::move(elems)), stats_(stats), sources_(sources) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& elements() const { return elems_; }
  const GBStats& stats() const { return stats_; }
  std::size_t source_count() const { return sources_; }
  bool is_unit_ideal() const { return elems_.size() == 1 && elems_[0].is_one(); }

 private:
  RingPtr ring_;
  std::vector<Poly> elems_;
  GBStats stats_;
  std::size_t sources_;
};

/// Buchberger with the normal selection strategy (minimal lcm degree,
/// sugar tie-break) and both classical pair criteria. Zero inputs are
/// dropped. Deterministic for fixed input and order.
GroebnerBasis buchberger(const std::vector<Poly>& gens, const Budget& budget = {});
GroebnerBasis buchberger(const GeneratorSet& gens, const Budget& budget = {});
/// Same, after moving the generators into a ring with the given order.
GroebnerBasis buchberger(const GeneratorSet& gens, const MonomialOrder& order,
                         const Budget& budget = {});

/// Remainder of f under full division by the basis; no term of the
/// result is divisible by any leading monomial of gb.
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

struct MembershipVerdict {
  bool member = false;
  /// For exact membership with certificate: cofactors h_k over the
  /// source generators with f = sum h_k g_k, already re-expanded and
  /// checked against f.
  std::optional<std::vector<Poly>> cofactors;
  std::string note;
};

MembershipVerdict ideal_member(const Poly& f, const GeneratorSet& gens,
                               const Budget& budget = {}, bool want_certificate = false);

/// f in Rad(gens) iff the ideal gens + (1 - t*f), in the ring extended
/// by a fresh variable t appended last under degrevlex, is the unit
/// ideal.
MembershipVerdict radical_member(const Poly& f, const GeneratorSet& gens,
                                 const Budget& budget = {});

/// One record per generator of sub, in order; independent runs may be
/// executed concurrently but the report order is fixed. Fail records
/// carry the offending generator and, when a small-coordinate separating
/// point exists, a point witness checkable by pure evaluation.
Report radical_contains(const GeneratorSet& sub, const GeneratorSet& sup,
                        const Budget& budget = {}, const std::string& check_prefix = "radical");

/// Krull dimension of R/I via maximal variable sets independent modulo
/// the leading-term ideal (exhaustive over subsets; needs nvars <= 16).
/// The zero ideal gives nvars, the unit ideal -1.
int ideal_dimension(const GeneratorSet& gens, const Budget& budget = {});

/// Deterministic search over {1,-1,0}^N (last coordinate fastest) for a
/// point where every element of `vanish` evaluates to zero but `nonzero`
/// does not. Skipped for rings with more than 10 variables.
std::optional<std::vector<long long>> find_separating_point(const std::vector<Poly>& vanish,
                                                            const Poly& nonzero);

}  // namespace scrolls
