#pragma once

#include <cstdint>

#include "scrolls/generators.hpp"
#include "scrolls/groebner.hpp"

namespace scrolls {

/// Exhaustive list of common zeros of a generator set in F_q^N,
/// deduplicated and sorted lexicographically.
struct PointSet {
  std::uint32_t q = 0;
  std::size_t nvars = 0;
  std::vector<std::vector<std::uint32_t>> points;

  bool operator==(const PointSet&) const = default;
  bool contains(const std::vector<std::uint32_t>& p) const;
};

/// OpenMP kernel: the q^N grid is split into contiguous chunks walked by
/// per-thread odometers. Output is identical to the serial reference.
/// Generators over Q are reduced mod q (every denominator must be
/// invertible); generators over F_p require q == p.
PointSet points_vanishing(const GeneratorSet& gens, std::uint32_t q,
                          const Budget& budget = {});

/// Serial reference kernel, kept for testing and benchmarking.
PointSet points_vanishing_serial(const GeneratorSet& gens, std::uint32_t q,
                                 const Budget& budget = {});

/// First point of `a` missing from `b`, if any (both over the same q).
std::optional<std::vector<std::uint32_t>> first_difference(const PointSet& a,
                                                           const PointSet& b);

/// Value of f at a residue point, with rational coefficients reduced
/// mod q first.
std::uint32_t eval_mod_q(const Poly& f, const std::vector<std::uint32_t>& point,
                         std::uint32_t q);

}  // namespace scrolls
