#pragma once

#include <string>
#include <vector>

#include "scrolls/polynomial.hpp"

namespace scrolls {

/// Column counts (c_1,...,c_r) of the catalecticant blocks; the ambient
/// ring has r + sum(c_i) variables.
struct BlockSpec {
  std::vector<int> cols;

  int r() const { return static_cast<int>(cols.size()); }
  int total_cols() const;
  int nvars() const { return r() + total_cols(); }
  void validate() const;
  bool two_block() const { return cols.size() == 2; }
  std::string str() const;  // "2,2"
  static BlockSpec parse(std::string_view text);
  bool operator==(const BlockSpec&) const = default;
};

/// The 2 x n matrix whose block i, column j holds x_{i,j} over x_{i,j+1}.
struct ScrollMatrix {
  RingPtr ring;
  BlockSpec spec;
  std::vector<int> top, bot;      // column -> variable index
  std::vector<int> block_start;   // block -> first column index

  int ncols() const { return static_cast<int>(top.size()); }
  /// Variable index of x_{block,j}, 0-based block, 0 <= j <= c_block.
  int var_index(int block, int j) const;
};

enum class SetName { FullMinors, ReducedTheorem1, CharP, Stci, Si, Tj, Jij, Jcd };

std::string set_name_str(SetName n);

/// A named, ordered list of generators with its construction parameters.
struct GeneratorSet {
  SetName name;
  std::vector<std::pair<std::string, int>> params;
  RingPtr ring;
  std::vector<Poly> polys;

  std::size_t size() const { return polys.size(); }
  std::vector<std::string> rendered() const;
};

/// Ring of the affine cone: block-major variables. Two-block rings (and
/// single blocks) use the x_j / y_j spellings unless canonical_names is
/// set; x{i}_{j} spellings are always accepted on input.
RingPtr make_scroll_ring(const BlockSpec& spec, const FieldSpec& field,
                         MonomialOrder order = {}, bool canonical_names = false);

ScrollMatrix build_matrix(const BlockSpec& spec, const FieldSpec& field,
                          MonomialOrder order = {}, bool canonical_names = false);

/// 2-minor of columns a < b: top[a]*bot[b] - top[b]*bot[a].
Poly minor(const ScrollMatrix& m, int col_a, int col_b);

/// All C(n,2) minors, ordered lexicographically by column pair.
GeneratorSet minors_full(const ScrollMatrix& m);

/// Within-block minors plus the two corner minors per block pair
/// (first-with-last and last-with-first columns), duplicates removed.
GeneratorSet minors_reduced(const ScrollMatrix& m);

enum class FamilyKind { S, T, Jij, Jcd };

/// The two-block prefix-minor families: S_i (first i columns of block 1),
/// T_j (first j columns of block 2), and J_{i,j} = S_i + T_j +
/// (x0*yj - x1*y{j-1}, x{i-1}*y1 - xi*y0).
GeneratorSet gens_family(FamilyKind kind, int c, int d, int i, int j,
                         const FieldSpec& field, MonomialOrder order = {});

/// S_d + T_d + (x0*yd - xd*y0) in the (d,d) two-block ring.
GeneratorSet gens_char_p(int d, const FieldSpec& field, MonomialOrder order = {});

/// F_1..F_{c-1}, F_c, G_1..G_{d-1}, x0*yd - x1*y{d-1} for c,d >= 2.
/// For d == 1 the cross polynomial drops out and F_c alone closes the
/// list (c generators in total).
GeneratorSet gens_stci(int c, int d, const FieldSpec& field, MonomialOrder order = {});

/// Handle on a two-block ring with index helpers for x_j and y_j.
struct TwoBlockRing {
  RingPtr ring;
  int c = 0, d = 0;

  std::size_t xi(int j) const { return static_cast<std::size_t>(j); }
  std::size_t yi(int j) const { return static_cast<std::size_t>(c + 1 + j); }
  Poly x(int j) const;
  Poly y(int j) const;
};

TwoBlockRing make_two_block_ring(int c, int d, const FieldSpec& field,
                                 MonomialOrder order = {});

/// F_i in x-variables: sum_{k=0..i} (-1)^k C(i,k) x_{i+1}^{i-k} x_k x_i^k.
Poly stci_fi(const RingPtr& ring, std::size_t x_offset, int i);
/// The crossing polynomial F_c: sum_{k=0..c} (-1)^k C(c,k) y1^{c-k} x_k y0^k.
Poly stci_fc(const TwoBlockRing& tb);

}  // namespace scrolls
