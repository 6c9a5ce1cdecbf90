#include "bolkit/gf2.hpp"

#include <bit>
#include <string>

namespace bolkit::gf2 {

namespace {

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim)
    throw Error(ErrorKind::BadParams, "dimension must be in 1.." + std::to_string(kMaxDim));
}

}  // namespace

CMap::CMap(std::size_t dim) : dim_(dim) {
  check_dim(dim);
  values_.assign((std::size_t{1} << dim) * dim, 0);
}

void CMap::set(Vec2 e, std::size_t i, int value) {
  if (e == 0 && value) throw Error(ErrorKind::BadParams, "c(0, e_i) must be 0");
  values_[e * dim_ + i] = static_cast<std::uint8_t>(value & 1);
}

Cocycle::Cocycle(std::size_t dim) : dim_(dim) {
  check_dim(dim);
  values_.assign(size() * size(), 0);
}

void Cocycle::set(Vec2 a, Vec2 b, int value) {
  if ((a == 0 || b == 0) && value)
    throw Error(ErrorKind::BadParams, "cocycle must vanish when either argument is 0");
  values_[a * size() + b] = static_cast<std::uint8_t>(value & 1);
}

Cocycle associated_cocycle(const CMap& c) {
  Cocycle f(c.dim());
  auto n = static_cast<Vec2>(f.size());
  for (Vec2 a = 1; a < n; ++a)
    for (Vec2 b = 1; b < n; ++b) {
      int s = 0;
      for (std::size_t i = 0; i < c.dim(); ++i)
        if (bit(b, i)) s ^= c(a, i);
      f.set(a, b, s);
    }
  return f;
}

bool is_right_additive(const Cocycle& f) {
  auto n = static_cast<Vec2>(f.size());
  for (Vec2 a = 0; a < n; ++a)
    for (Vec2 b = 0; b < n; ++b)
      for (Vec2 c = 0; c < n; ++c)
        if (f(a, b ^ c) != (f(a, b) ^ f(a, c))) return false;
  return true;
}

bool e2k2_bol_check(const Cocycle& f) {
  auto n = static_cast<Vec2>(f.size());
  for (Vec2 a = 0; a < n; ++a)
    for (Vec2 c = 0; c < n; ++c)
      if (f(a, a ^ c) != (f(a, a) ^ f(a, c))) return false;
  for (Vec2 a = 0; a < n; ++a)
    for (Vec2 b = 0; b < n; ++b)
      for (Vec2 c = 0; c < n; ++c)
        if ((f(a, b ^ c) ^ f(a, b) ^ f(a, c)) != (f(b, a ^ c) ^ f(b, a) ^ f(b, c))) return false;
  return true;
}

LoopTable build_trivial_action(const Cocycle& f) {
  std::size_t m = f.size(), n = 2 * m;
  std::vector<Element> cells(n * n);
  auto idx = [](Vec2 u, Vec2 a) { return static_cast<Element>(1 + u + 2 * a); };
  for (Vec2 a = 0; a < m; ++a)
    for (Vec2 u = 0; u < 2; ++u)
      for (Vec2 b = 0; b < m; ++b)
        for (Vec2 v = 0; v < 2; ++v)
          cells[(idx(u, a) - 1) * n + (idx(v, b) - 1)] =
              idx(u ^ v ^ static_cast<Vec2>(f(a, b)), a ^ b);
  return LoopTable(n, std::move(cells));
}

// ---------------------------------------------------------------------------
// The nine-parameter family

namespace {

constexpr Vec2 e1 = 1, e2 = 2, e3 = 4;

// Sum over the support of e of row r of c, i.e. f(r, e) for the associated f.
int row_form(const CMap& c, Vec2 r, Vec2 e) {
  int s = 0;
  for (std::size_t i = 0; i < c.dim(); ++i)
    if (bit(e, i)) s ^= c(r, i);
  return s;
}

}  // namespace

bool satisfies_q9_constraints(const CMap& c) {
  std::size_t n = c.dim();
  if (n < 3) return false;
  auto size = static_cast<Vec2>(1u << n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 ei = Vec2{1} << i;
    if (c(e1, i) != c(ei, 0)) return false;
    if (c(e2, i) != c(ei, 1)) return false;
  }
  if (c(e1 ^ e2, 2) == (c(e1, 2) ^ c(e2, 2))) return false;
  // f(e1,e) = f(e,e1) and f(e2,e) = f(e,e2), where f(e, e_j) = c(e, j)
  for (Vec2 e = 0; e < size; ++e) {
    if (row_form(c, e1, e) != c(e, 0)) return false;
    if (row_form(c, e2, e) != c(e, 1)) return false;
  }
  return true;
}

CMap q9_cmap(const Q9Params& p) {
  CMap c(3);
  // free slots
  c.set(e1, 0, p[0]);
  c.set(e1, 1, p[1]);
  c.set(e2, 1, p[2]);
  c.set(e1, 2, p[3]);
  c.set(e2, 2, p[4]);
  c.set(e3, 2, p[5]);
  c.set(e1 ^ e3, 2, p[6]);
  c.set(e2 ^ e3, 2, p[7]);
  c.set(e1 ^ e2 ^ e3, 2, p[8]);
  // column e1 from f(e,e1) = f(e1,e)
  for (Vec2 e = 1; e < 8; ++e) c.set(e, 0, row_form(c, e1, e));
  // column e2 from f(e,e2) = f(e2,e); c(e2,e1) is already c(e1,e2)
  for (Vec2 e = 1; e < 8; ++e) c.set(e, 1, row_form(c, e2, e));
  // forced inequality
  c.set(e1 ^ e2, 2, c(e1, 2) ^ c(e2, 2) ^ 1);
  return c;
}

LoopTable build_q9(const Q9Params& p) {
  return build_trivial_action(associated_cocycle(q9_cmap(p))).with_name("q9 " + to_string(p));
}

std::vector<Q9Member> enumerate_q9() {
  std::vector<Q9Member> out;
  out.reserve(512);
  for (unsigned t = 0; t < 512; ++t) {
    Q9Params p{};
    for (std::size_t j = 0; j < 9; ++j) p[j] = static_cast<int>((t >> (8 - j)) & 1u);
    out.push_back({p, build_q9(p)});
  }
  return out;
}

std::string to_string(const Q9Params& c) {
  std::string s;
  for (int x : c) s += static_cast<char>('0' + x);
  return s;
}

Q9Params parse_q9(std::string_view bits) {
  if (bits.size() != 9) throw Error(ErrorKind::BadSpec, "q9 needs exactly nine bits");
  Q9Params p{};
  for (std::size_t i = 0; i < 9; ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw Error(ErrorKind::BadSpec, "q9 bits must be 0 or 1");
    p[i] = bits[i] - '0';
  }
  return p;
}

const std::vector<Q9Params>& q9_representatives() {
  static const std::vector<Q9Params> reps = [] {
    std::vector<Q9Params> r;
    for (const char* s :
         {"000000000", "000000001", "000000011", "000000110", "000000111", "000001111",
          "001000000", "001000001", "001000011", "001000100", "001000101", "001000110",
          "001001100", "101000000", "101000001", "101000010", "101000011", "101000110",
          "101001001"})
      r.push_back(parse_q9(s));
    return r;
  }();
  return reps;
}

// ---------------------------------------------------------------------------
// GL(n,2) and cocycle equivalence

Vec2 LinearMap::operator()(Vec2 v) const noexcept {
  Vec2 out = 0;
  for (std::size_t j = 0; j < columns.size(); ++j)
    if (bit(v, j)) out ^= columns[j];
  return out;
}

namespace {

bool invertible(std::vector<Vec2> cols) {
  std::size_t n = cols.size();
  for (std::size_t bitpos = 0, rank = 0; bitpos < n; ++bitpos) {
    std::size_t pivot = rank;
    while (pivot < n && !bit(cols[pivot], bitpos)) ++pivot;
    if (pivot == n) return false;
    std::swap(cols[rank], cols[pivot]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != rank && bit(cols[r], bitpos)) cols[r] ^= cols[rank];
    ++rank;
  }
  return true;
}

}  // namespace

std::vector<LinearMap> general_linear_group(std::size_t n) {
  if (n == 0 || n > 4) throw Error(ErrorKind::BadParams, "GL(n,2) is materialized for n <= 4");
  std::vector<LinearMap> out;
  std::uint64_t total = std::uint64_t{1} << (n * n);
  Vec2 mask = (Vec2{1} << n) - 1;
  for (std::uint64_t m = 0; m < total; ++m) {
    std::vector<Vec2> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = static_cast<Vec2>(m >> (j * n)) & mask;
    if (invertible(cols)) out.push_back({std::move(cols)});
  }
  return out;
}

std::optional<LinearMap> find_cocycle_equivalence(const Cocycle& f, const Cocycle& g) {
  if (f.dim() != g.dim()) return std::nullopt;
  auto n = static_cast<Vec2>(f.size());
  for (const auto& phi : general_linear_group(f.dim())) {
    std::vector<Vec2> img(n);
    for (Vec2 a = 0; a < n; ++a) img[a] = phi(a);
    bool ok = true;
    for (Vec2 a = 0; a < n && ok; ++a)
      for (Vec2 b = 0; b < n && ok; ++b) ok = f(a, b) == g(img[a], img[b]);
    if (ok) return phi;
  }
  return std::nullopt;
}

bool cocycle_equivalent(const Cocycle& f, const Cocycle& g) {
  return find_cocycle_equivalence(f, g).has_value();
}

// ---------------------------------------------------------------------------
// The loop with trivial left nucleus

LoopTable build_exceptional() {
  // K and E elements as 2-bit vectors: bit 0 = k1 (e1), bit 1 = k2 (e2).
  const LinearMap ident{{1, 2}};
  const LinearMap fix_k1{{1, 3}};  // k1 -> k1, k2 -> k1k2
  const LinearMap fix_k2{{3, 2}};  // k1 -> k1k2, k2 -> k2
  auto psi = [&](Vec2 a, Vec2 b) -> const LinearMap& {
    if (a == 0 && (b == 2 || b == 3)) return fix_k1;
    if (a == 1 && (b == 2 || b == 3)) return fix_k2;
    return ident;
  };
  auto idx = [](Vec2 u, Vec2 a) { return static_cast<Element>(1 + u + 4 * a); };
  std::vector<Element> cells(256);
  for (Vec2 a = 0; a < 4; ++a)
    for (Vec2 u = 0; u < 4; ++u)
      for (Vec2 b = 0; b < 4; ++b)
        for (Vec2 v = 0; v < 4; ++v)
          cells[(idx(u, a) - 1) * 16 + (idx(v, b) - 1)] = idx(psi(a, b)(u) ^ v, a ^ b);
  return LoopTable(16, std::move(cells), "exceptional");
}

// ---------------------------------------------------------------------------
// Free-parameter count by linear algebra

std::size_t q9_free_parameter_formula(std::size_t n) {
  return ((std::size_t{1} << n) - 4) * (n - 2) + 3 * n - 4;
}

std::optional<std::size_t> q9_constraint_free_bits(std::size_t n) {
  if (n < 3 || n > kMaxDim) throw Error(ErrorKind::BadParams, "dimension must be in 3..6");
  std::size_t size = std::size_t{1} << n;
  // variable for c(e, e_{i+1}), e = 1..size-1
  std::size_t vars = (size - 1) * n;
  auto var = [n](std::size_t e, std::size_t i) { return (e - 1) * n + i; };
  std::size_t words = (vars + 1 + 63) / 64;  // last column holds the constant

  using Row = std::vector<std::uint64_t>;
  std::vector<Row> rows;
  auto add_row = [&](const std::vector<std::size_t>& terms, int constant) {
    Row r(words, 0);
    for (std::size_t v : terms) r[v / 64] ^= std::uint64_t{1} << (v % 64);
    if (constant) r[vars / 64] ^= std::uint64_t{1} << (vars % 64);
    rows.push_back(std::move(r));
  };
  // c(0, .) = 0 is built into the variable set.
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ei = std::size_t{1} << i;
    add_row({var(1, i), var(ei, 0)}, 0);
    add_row({var(2, i), var(ei, 1)}, 0);
  }
  add_row({var(3, 2), var(1, 2), var(2, 2)}, 1);
  for (std::size_t e = 1; e < size; ++e)
    for (std::size_t j = 0; j < 2; ++j) {
      // f(e_{j+1}, e) + f(e, e_{j+1}) = 0
      std::vector<std::size_t> terms{var(e, j)};
      for (std::size_t i = 0; i < n; ++i)
        if ((e >> i) & 1u) terms.push_back(var(std::size_t{1} << j, i));
      add_row(terms, 0);
    }

  auto get = [](const Row& r, std::size_t c) { return (r[c / 64] >> (c % 64)) & 1u; };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < vars && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && !get(rows[p], col)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && get(rows[r], col))
        for (std::size_t w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
    ++rank;
  }
  // a remaining row 0 = 1 means no solution
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (get(rows[r], vars)) return std::nullopt;
  return vars - rank;
}

}  // namespace bolkit::gf2
