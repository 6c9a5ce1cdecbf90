#include "bolkit/loop.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace bolkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::NotLatin: return "NotLatin";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NoTwoSidedInverse: return "NoTwoSidedInverse";
    case ErrorKind::NotPeriodicThroughIdentity: return "NotPeriodicThroughIdentity";
    case ErrorKind::NotSubloop: return "NotSubloop";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotPartition: return "NotPartition";
    case ErrorKind::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorKind::NotGroup: return "NotGroup";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (Element x : images_) {
    if (x < 1 || x > images_.size() || seen[x])
      throw Error(ErrorKind::Malformed, "permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Element> img(n);
  std::iota(img.begin(), img.end(), Element{1});
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i] - 1] = static_cast<Element>(i + 1);
  return r;
}

Permutation Permutation::pow(long long m) const {
  Permutation base = m < 0 ? inverse() : *this;
  unsigned long long e = m < 0 ? static_cast<unsigned long long>(-(m + 1)) + 1
                               : static_cast<unsigned long long>(m);
  Permutation acc = identity(degree());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Permutation operator*(const Permutation& first, const Permutation& then) {
  Permutation r;
  r.images_.resize(first.images_.size());
  for (std::size_t i = 0; i < first.images_.size(); ++i)
    r.images_[i] = then.images_[first.images_[i] - 1];
  return r;
}

std::string to_string(const Permutation& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.images()[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// LoopTable

namespace {

void check_shape(std::size_t n, const std::vector<Element>& cells) {
  if (n == 0) throw Error(ErrorKind::Malformed, "order must be positive");
  if (n > kMaxOrder)
    throw Error(ErrorKind::TooLarge, "order " + std::to_string(n) + " exceeds " +
                                         std::to_string(kMaxOrder));
  if (cells.size() != n * n)
    throw Error(ErrorKind::Malformed, "expected " + std::to_string(n * n) + " entries, got " +
                                          std::to_string(cells.size()));
  for (Element x : cells)
    if (x < 1 || x > n)
      throw Error(ErrorKind::Malformed, "entry " + std::to_string(x) + " out of range 1.." +
                                            std::to_string(n));
}

void check_latin(std::size_t n, const std::vector<Element>& cells) {
  std::vector<std::uint32_t> seen(n + 1, 0);
  std::uint32_t stamp = 0;
  for (std::size_t r = 0; r < n; ++r) {
    ++stamp;
    for (std::size_t c = 0; c < n; ++c) {
      Element v = cells[r * n + c];
      if (seen[v] == stamp)
        throw Error(ErrorKind::NotLatin, "row " + std::to_string(r + 1) + " repeats " +
                                             std::to_string(v));
      seen[v] = stamp;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    ++stamp;
    for (std::size_t r = 0; r < n; ++r) {
      Element v = cells[r * n + c];
      if (seen[v] == stamp)
        throw Error(ErrorKind::NotLatin, "column " + std::to_string(c + 1) + " repeats " +
                                             std::to_string(v));
      seen[v] = stamp;
    }
  }
}

std::size_t find_identity(std::size_t n, const std::vector<Element>& cells) {
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = cells[e * n + x] == x + 1 && cells[x * n + e] == x + 1;
    if (ok) return e + 1;
  }
  throw Error(ErrorKind::NoIdentity, "no two-sided identity element");
}

}  // namespace

LoopTable::LoopTable(std::size_t order, std::vector<Element> cells, std::string name)
    : n_(order), cells_(std::move(cells)), name_(std::move(name)) {
  check_shape(n_, cells_);
  check_latin(n_, cells_);
  if (find_identity(n_, cells_) != 1)
    throw Error(ErrorKind::NoIdentity, "identity is not element 1");
  ldiv_.resize(n_ * n_);
  rdiv_.resize(n_ * n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      Element ab = cells_[a * n_ + b];
      ldiv_[a * n_ + (ab - 1)] = static_cast<Element>(b + 1);
      rdiv_[b * n_ + (ab - 1)] = static_cast<Element>(a + 1);
    }
}

LoopTable LoopTable::normalized(std::size_t order, std::vector<Element> cells, std::string name) {
  check_shape(order, cells);
  check_latin(order, cells);
  std::size_t e = find_identity(order, cells);
  if (e == 1) return LoopTable(order, std::move(cells), std::move(name));

  // identity -> 1, 1..e-1 -> 2..e, the rest unchanged
  auto map = [e](std::size_t x) -> Element {
    if (x == e) return 1;
    if (x < e) return static_cast<Element>(x + 1);
    return static_cast<Element>(x);
  };
  std::vector<Element> out(order * order);
  for (std::size_t a = 1; a <= order; ++a)
    for (std::size_t b = 1; b <= order; ++b)
      out[(map(a) - 1) * order + (map(b) - 1)] = map(cells[(a - 1) * order + (b - 1)]);
  if (!name.empty()) name += ' ';
  name += "(relabeled: identity " + std::to_string(e) + "->1)";
  return LoopTable(order, std::move(out), std::move(name));
}

LoopTable LoopTable::with_name(std::string name) const {
  LoopTable r = *this;
  r.name_ = std::move(name);
  return r;
}

// ---------------------------------------------------------------------------
// Element operations

Permutation translation(const LoopTable& q, Element a, Side side) {
  std::vector<Element> img(q.order());
  for (std::size_t b = 1; b <= q.order(); ++b)
    img[b - 1] = side == Side::left ? q(a, static_cast<Element>(b)) : q(static_cast<Element>(b), a);
  return Permutation(std::move(img));
}

Element inverse(const LoopTable& q, Element a) {
  Element right = q.ldiv(a, 1);
  Element left = q.rdiv(a, 1);
  if (left != right)
    throw Error(ErrorKind::NoTwoSidedInverse,
                "element " + std::to_string(a) + " has left inverse " + std::to_string(left) +
                    " and right inverse " + std::to_string(right));
  return right;
}

Element power(const LoopTable& q, Element a, long long m) {
  if (m < 0) {
    if (q.ldiv(a, 1) != q.rdiv(a, 1))
      throw Error(ErrorKind::NoInverse, "negative power of an element without two-sided inverse");
    a = q.ldiv(a, 1);
    m = -m;
  }
  // The sequence a^m is eventually periodic; reduce m once a cycle is found.
  std::vector<long long> seen(q.order() + 1, -1);
  Element x = 1;
  for (long long i = 0; i < m; ++i) {
    if (seen[x] >= 0) {
      long long period = i - seen[x];
      long long left = (m - i) % period;
      for (long long j = 0; j < left; ++j) x = q(a, x);
      return x;
    }
    seen[x] = i;
    x = q(a, x);
  }
  return x;
}

std::size_t element_order(const LoopTable& q, Element a) {
  Element x = a;
  for (std::size_t m = 1; m <= q.order(); ++m) {
    if (x == 1) return m;
    x = q(a, x);
  }
  throw Error(ErrorKind::NotPeriodicThroughIdentity,
              "powers of " + std::to_string(a) + " never return to 1");
}

// ---------------------------------------------------------------------------
// I/O

LoopTable parse_table(std::istream& in, std::string name) {
  std::vector<long long> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw Error(ErrorKind::Malformed, "non-integer token '" + tok + "'");
      }
      if (used != tok.size()) throw Error(ErrorKind::Malformed, "non-integer token '" + tok + "'");
      tokens.push_back(v);
    }
  }
  if (tokens.empty()) throw Error(ErrorKind::Malformed, "empty table");
  if (tokens[0] <= 0) throw Error(ErrorKind::Malformed, "order must be positive");
  if (static_cast<std::size_t>(tokens[0]) > kMaxOrder)
    throw Error(ErrorKind::TooLarge, "order exceeds " + std::to_string(kMaxOrder));
  auto n = static_cast<std::size_t>(tokens[0]);
  if (tokens.size() != n * n + 1)
    throw Error(ErrorKind::Malformed, "expected " + std::to_string(n * n) + " entries, got " +
                                          std::to_string(tokens.size() - 1));
  std::vector<Element> cells(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    long long v = tokens[i + 1];
    if (v < 1 || v > static_cast<long long>(n))
      throw Error(ErrorKind::Malformed, "entry " + std::to_string(v) + " out of range");
    cells[i] = static_cast<Element>(v);
  }
  return LoopTable::normalized(n, std::move(cells), std::move(name));
}

LoopTable parse_table_string(const std::string& text, std::string name) {
  std::istringstream in(text);
  return parse_table(in, std::move(name));
}

LoopTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Malformed, "cannot open '" + path + "'");
  return parse_table(in, path);
}

std::string render(const LoopTable& q) {
  std::string out = std::to_string(q.order()) + "\n";
  for (std::size_t a = 1; a <= q.order(); ++a) {
    auto row = q.row(static_cast<Element>(a));
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (b) out += ' ';
      out += std::to_string(row[b]);
    }
    out += '\n';
  }
  return out;
}

void save_table(const LoopTable& q, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Malformed, "cannot write '" + path + "'");
  out << render(q);
}

// ---------------------------------------------------------------------------
// Constructions

LoopTable relabel(const LoopTable& q, const Permutation& phi) {
  std::size_t n = q.order();
  std::vector<Element> cells(n * n);
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= n; ++b) {
      auto x = static_cast<Element>(a), y = static_cast<Element>(b);
      cells[(phi(x) - 1) * n + (phi(y) - 1)] = phi(q(x, y));
    }
  return LoopTable(n, std::move(cells), q.name());
}

LoopTable direct_product(const LoopTable& a, const LoopTable& b) {
  std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> cells(n * n);
  auto idx = [na](std::size_t x, std::size_t y) { return x + na * (y - 1); };
  for (std::size_t x1 = 1; x1 <= na; ++x1)
    for (std::size_t y1 = 1; y1 <= nb; ++y1)
      for (std::size_t x2 = 1; x2 <= na; ++x2)
        for (std::size_t y2 = 1; y2 <= nb; ++y2)
          cells[(idx(x1, y1) - 1) * n + (idx(x2, y2) - 1)] = static_cast<Element>(
              idx(a(static_cast<Element>(x1), static_cast<Element>(x2)),
                  b(static_cast<Element>(y1), static_cast<Element>(y2))));
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + " x " + b.name();
  return LoopTable(n, std::move(cells), std::move(name));
}

LoopTable cyclic_group(std::size_t n) {
  std::vector<Element> cells(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) cells[a * n + b] = static_cast<Element>((a + b) % n + 1);
  return LoopTable(n, std::move(cells), "Z" + std::to_string(n));
}

LoopTable elementary_abelian_2group(std::size_t m) {
  if (m > 12) throw Error(ErrorKind::TooLarge, "(Z2)^m with m > 12");
  std::size_t n = std::size_t{1} << m;
  std::vector<Element> cells(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) cells[a * n + b] = static_cast<Element>((a ^ b) + 1);
  return LoopTable(n, std::move(cells), "Z2^" + std::to_string(m));
}

LoopTable dihedral_group(std::size_t k) {
  std::size_t n = 2 * k;
  std::vector<Element> cells(n * n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t i2 = 0; i2 < k; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2) {
          // r^i s^j * r^i2 s^j2 = r^(i + (-1)^j i2) s^(j+j2)
          std::size_t ri = j ? (i + k - i2) % k : (i + i2) % k;
          std::size_t sj = (j + j2) % 2;
          cells[(i + k * j) * n + (i2 + k * j2)] = static_cast<Element>(1 + ri + k * sj);
        }
  return LoopTable(n, std::move(cells), "D" + std::to_string(n));
}

}  // namespace bolkit
