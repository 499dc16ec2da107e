#include "scrolls/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace scrolls {

int BlockSpec::total_cols() const {
  return std::accumulate(cols.begin(), cols.end(), 0);
}

void BlockSpec::validate() const {
  if (cols.empty()) throw InvalidSpec("at least one block is required");
  for (int c : cols)
    if (c < 1) throw InvalidSpec("every block needs at least one column");
}

std::string BlockSpec::str() const {
  std::string s;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cols[i]);
  }
  return s;
}

BlockSpec BlockSpec::parse(std::string_view text) {
  BlockSpec spec;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view part = text.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size())
      throw InvalidSpec("bad block list '" + std::string(text) + "'");
    spec.cols.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  spec.validate();
  return spec;
}

int ScrollMatrix::var_index(int block, int j) const {
  int offset = 0;
  for (int b = 0; b < block; ++b) offset += spec.cols[b] + 1;
  return offset + j;
}

std::string set_name_str(SetName n) {
  switch (n) {
    case SetName::FullMinors: return "full";
    case SetName::ReducedTheorem1: return "reduced";
    case SetName::CharP: return "charp";
    case SetName::Stci: return "stci";
    case SetName::Si: return "S";
    case SetName::Tj: return "T";
    case SetName::Jij: return "J";
    case SetName::Jcd: return "Jcd";
  }
  return "?";
}

std::vector<std::string> GeneratorSet::rendered() const {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.str());
  return out;
}

RingPtr make_scroll_ring(const BlockSpec& spec, const FieldSpec& field,
                         MonomialOrder order, bool canonical_names) {
  spec.validate();
  const int r = spec.r();
  const bool aliased = r <= 2 && !canonical_names;
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(spec.nvars()));
  for (int b = 0; b < r; ++b) {
    for (int j = 0; j <= spec.cols[b]; ++j) {
      if (aliased) {
        names.push_back((b == 0 ? "x" : "y") + std::to_string(j));
      } else {
        names.push_back("x" + std::to_string(b + 1) + "_" + std::to_string(j));
      }
    }
  }
  auto ring = std::make_shared<RingContext>(field, std::move(order), std::move(names));
  std::size_t idx = 0;
  for (int b = 0; b < r; ++b) {
    for (int j = 0; j <= spec.cols[b]; ++j, ++idx) {
      const std::string js = std::to_string(j);
      ring->add_alias("x" + std::to_string(b + 1) + "_" + js, idx);
      if (r <= 2) {
        const std::string letter = b == 0 ? "x" : "y";
        ring->add_alias(letter + js, idx);
        ring->add_alias(letter + "_" + js, idx);
      }
    }
  }
  return ring;
}

ScrollMatrix build_matrix(const BlockSpec& spec, const FieldSpec& field,
                          MonomialOrder order, bool canonical_names) {
  spec.validate();
  ScrollMatrix m;
  m.ring = make_scroll_ring(spec, field, std::move(order), canonical_names);
  m.spec = spec;
  int offset = 0;
  for (int b = 0; b < spec.r(); ++b) {
    m.block_start.push_back(static_cast<int>(m.top.size()));
    for (int j = 0; j < spec.cols[b]; ++j) {
      m.top.push_back(offset + j);
      m.bot.push_back(offset + j + 1);
    }
    offset += spec.cols[b] + 1;
  }
  return m;
}

Poly minor(const ScrollMatrix& m, int col_a, int col_b) {
  auto v = [&](int idx) { return Poly::variable(m.ring, static_cast<std::size_t>(idx)); };
  return v(m.top[col_a]) * v(m.bot[col_b]) - v(m.top[col_b]) * v(m.bot[col_a]);
}

GeneratorSet minors_full(const ScrollMatrix& m) {
  GeneratorSet gs{SetName::FullMinors, {}, m.ring, {}};
  const int n = m.ncols();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) gs.polys.push_back(minor(m, a, b));
  return gs;
}

namespace {

void push_unique(std::vector<Poly>& polys, Poly p) {
  for (const auto& q : polys)
    if (q == p) return;
  polys.push_back(std::move(p));
}

}  // namespace

GeneratorSet minors_reduced(const ScrollMatrix& m) {
  GeneratorSet gs{SetName::ReducedTheorem1, {}, m.ring, {}};
  const int r = m.spec.r();
  for (int b = 0; b < r; ++b) {
    const int start = m.block_start[b];
    const int cb = m.spec.cols[b];
    for (int a = 0; a < cb; ++a)
      for (int bb = a + 1; bb < cb; ++bb)
        gs.polys.push_back(minor(m, start + a, start + bb));
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      const int first_i = m.block_start[i];
      const int last_i = m.block_start[i] + m.spec.cols[i] - 1;
      const int first_j = m.block_start[j];
      const int last_j = m.block_start[j] + m.spec.cols[j] - 1;
      push_unique(gs.polys, minor(m, first_i, last_j));
      push_unique(gs.polys, minor(m, last_i, first_j));
    }
  }
  return gs;
}

namespace {

// 2-minors of the first `count` columns of the block starting at variable
// `offset`: x_a x_{b+1} - x_{a+1} x_b for 0 <= a < b <= count-1.
std::vector<Poly> prefix_minors(const RingPtr& ring, int offset, int count) {
  std::vector<Poly> out;
  auto v = [&](int j) { return Poly::variable(ring, static_cast<std::size_t>(offset + j)); };
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b)
      out.push_back(v(a) * v(b + 1) - v(a + 1) * v(b));
  return out;
}

}  // namespace

TwoBlockRing make_two_block_ring(int c, int d, const FieldSpec& field, MonomialOrder order) {
  if (c < 1 || d < 1) throw InvalidSpec("two-block ring needs c, d >= 1");
  TwoBlockRing tb;
  tb.ring = make_scroll_ring(BlockSpec{{c, d}}, field, std::move(order));
  tb.c = c;
  tb.d = d;
  return tb;
}

Poly TwoBlockRing::x(int j) const {
  if (j < 0 || j > c) throw IndexOutOfRange("x index out of range");
  return Poly::variable(ring, xi(j));
}

Poly TwoBlockRing::y(int j) const {
  if (j < 0 || j > d) throw IndexOutOfRange("y index out of range");
  return Poly::variable(ring, yi(j));
}

GeneratorSet gens_family(FamilyKind kind, int c, int d, int i, int j,
                         const FieldSpec& field, MonomialOrder order) {
  if (c < 1 || d < 1) throw InvalidSpec("families need c, d >= 1");
  TwoBlockRing tb = make_two_block_ring(c, d, field, std::move(order));
  auto si = [&](int n) { return prefix_minors(tb.ring, 0, n); };
  auto tj = [&](int n) { return prefix_minors(tb.ring, c + 1, n); };
  GeneratorSet gs{SetName::Jij, {}, tb.ring, {}};
  switch (kind) {
    case FamilyKind::S:
      if (i < 1 || i > c) throw IndexOutOfRange("S_i needs 1 <= i <= c");
      gs.name = SetName::Si;
      gs.params = {{"c", c}, {"d", d}, {"i", i}};
      gs.polys = si(i);
      return gs;
    case FamilyKind::T:
      if (j < 1 || j > d) throw IndexOutOfRange("T_j needs 1 <= j <= d");
      gs.name = SetName::Tj;
      gs.params = {{"c", c}, {"d", d}, {"j", j}};
      gs.polys = tj(j);
      return gs;
    case FamilyKind::Jcd:
      i = c;
      j = d;
      gs.name = SetName::Jcd;
      gs.params = {{"c", c}, {"d", d}};
      break;
    case FamilyKind::Jij:
      gs.name = SetName::Jij;
      gs.params = {{"c", c}, {"d", d}, {"i", i}, {"j", j}};
      break;
  }
  if (i < 1 || i > c || j < 1 || j > d)
    throw IndexOutOfRange("J_{i,j} needs 1 <= i <= c and 1 <= j <= d");
  gs.polys = si(i);
  for (auto& p : tj(j)) gs.polys.push_back(std::move(p));
  push_unique(gs.polys, tb.x(0) * tb.y(j) - tb.x(1) * tb.y(j - 1));
  push_unique(gs.polys, tb.x(i - 1) * tb.y(1) - tb.x(i) * tb.y(0));
  return gs;
}

GeneratorSet gens_char_p(int d, const FieldSpec& field, MonomialOrder order) {
  if (d < 1) throw InvalidSpec("charp set needs d >= 1");
  TwoBlockRing tb = make_two_block_ring(d, d, field, std::move(order));
  GeneratorSet gs{SetName::CharP, {{"d", d}}, tb.ring, {}};
  gs.polys = prefix_minors(tb.ring, 0, d);
  for (auto& p : prefix_minors(tb.ring, d + 1, d)) gs.polys.push_back(std::move(p));
  gs.polys.push_back(tb.x(0) * tb.y(d) - tb.x(d) * tb.y(0));
  return gs;
}

Poly stci_fi(const RingPtr& ring, std::size_t x_offset, int i) {
  const FieldSpec& field = ring->field();
  std::vector<Term> terms;
  for (int k = 0; k <= i; ++k) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i),
                 static_cast<unsigned long>(k));
    if (k % 2) binom = -binom;
    std::vector<std::int32_t> e(ring->nvars(), 0);
    e[x_offset + static_cast<std::size_t>(i + 1)] += i - k;
    e[x_offset + static_cast<std::size_t>(k)] += 1;
    e[x_offset + static_cast<std::size_t>(i)] += k;
    terms.push_back({field.from_ratio(binom, 1), Monomial::of(std::move(e))});
  }
  return Poly::from_terms(ring, std::move(terms));
}

Poly stci_fc(const TwoBlockRing& tb) {
  const FieldSpec& field = tb.ring->field();
  const int c = tb.c;
  std::vector<Term> terms;
  for (int k = 0; k <= c; ++k) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(c),
                 static_cast<unsigned long>(k));
    if (k % 2) binom = -binom;
    std::vector<std::int32_t> e(tb.ring->nvars(), 0);
    e[tb.yi(1)] += c - k;
    e[tb.xi(k)] += 1;
    e[tb.yi(0)] += k;
    terms.push_back({field.from_ratio(binom, 1), Monomial::of(std::move(e))});
  }
  return Poly::from_terms(tb.ring, std::move(terms));
}

GeneratorSet gens_stci(int c, int d, const FieldSpec& field, MonomialOrder order) {
  if (c < 2 || d < 1) throw InvalidSpec("stci set needs c >= 2 and d >= 1");
  TwoBlockRing tb = make_two_block_ring(c, d, field, std::move(order));
  GeneratorSet gs{SetName::Stci, {{"c", c}, {"d", d}}, tb.ring, {}};
  for (int i = 1; i < c; ++i) gs.polys.push_back(stci_fi(tb.ring, 0, i));
  gs.polys.push_back(stci_fc(tb));
  if (d >= 2) {
    for (int i = 1; i < d; ++i)
      gs.polys.push_back(stci_fi(tb.ring, static_cast<std::size_t>(c + 1), i));
    gs.polys.push_back(tb.x(0) * tb.y(d) - tb.x(1) * tb.y(d - 1));
  }
  return gs;
}

}  // namespace scrolls
