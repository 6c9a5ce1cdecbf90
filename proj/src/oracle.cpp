#include "bolkit/oracle.hpp"

#include <bit>

#include "bolkit/iso.hpp"
#include "bolkit/structure.hpp"

namespace bolkit {

namespace {

// Search state over 0-based elements with identity 0; -1 marks an open cell.
class BolSearch {
 public:
  BolSearch(std::size_t n, std::uint64_t budget) : n_(static_cast<int>(n)), budget_(budget) {
    cells_.assign(n * n, -1);
    row_used_.assign(n, 0);
    col_used_.assign(n, 0);
    full_ = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    for (int x = 0; x < n_; ++x) {
      set(0, x, x);
      if (x) set(x, 0, x);
    }
  }

  BolSearchStats run(const std::function<void(const LoopTable&)>& visit) {
    visit_ = &visit;
    if (propagate()) descend(0);
    return stats_;
  }

 private:
  int at(int r, int c) const { return cells_[r * n_ + c]; }

  void set(int r, int c, int v) {
    cells_[r * n_ + c] = static_cast<std::int8_t>(v);
    row_used_[r] |= 1u << v;
    col_used_[c] |= 1u << v;
    trail_.push_back(r * n_ + c);
  }

  // False when v clashes with the cell or its row/column.
  bool assign(int r, int c, int v) {
    int cur = at(r, c);
    if (cur >= 0) return cur == v;
    if ((row_used_[r] | col_used_[c]) >> v & 1u) return false;
    set(r, c, v);
    changed_ = true;
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      int idx = trail_.back();
      trail_.pop_back();
      int r = idx / n_, c = idx % n_, v = cells_[idx];
      row_used_[r] &= ~(1u << v);
      col_used_[c] &= ~(1u << v);
      cells_[idx] = -1;
    }
  }

  // Runs Bol-triple and Latin-single propagation to a fixpoint.
  bool propagate() {
    do {
      changed_ = false;
      for (int x = 1; x < n_; ++x)
        for (int y = 1; y < n_; ++y) {
          int yx = at(y, x);
          int xyx = yx >= 0 ? at(x, yx) : -1;
          for (int z = 1; z < n_; ++z) {
            // x(y(xz)) = (x(yx))z
            int xz = at(x, z);
            int yxz = xz >= 0 ? at(y, xz) : -1;
            int lhs = yxz >= 0 ? at(x, yxz) : -1;
            int rhs = xyx >= 0 ? at(xyx, z) : -1;
            if (lhs >= 0) {
              if (rhs >= 0) {
                if (lhs != rhs) return false;
              } else if (xyx >= 0) {
                if (!assign(xyx, z, lhs)) return false;
              }
            } else if (rhs >= 0 && yxz >= 0) {
              if (!assign(x, yxz, rhs)) return false;
            }
          }
        }
      for (int r = 1; r < n_; ++r)
        for (int c = 1; c < n_; ++c) {
          if (at(r, c) >= 0) continue;
          std::uint32_t cand = full_ & ~(row_used_[r] | col_used_[c]);
          if (!cand) return false;
          if (std::has_single_bit(cand)) assign(r, c, std::countr_zero(cand));
        }
    } while (changed_);
    return true;
  }

  void descend(int from) {
    int cell = from;
    while (cell < n_ * n_ && cells_[cell] >= 0) ++cell;
    if (cell == n_ * n_) {
      emit();
      return;
    }
    int r = cell / n_, c = cell % n_;
    std::uint32_t cand = full_ & ~(row_used_[r] | col_used_[c]);
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      if (++stats_.nodes > budget_)
        throw Error(ErrorKind::SearchBudgetExceeded,
                    "left Bol search exceeded " + std::to_string(budget_) + " nodes");
      std::size_t mark = trail_.size();
      if (assign(r, c, v) && propagate()) descend(cell + 1);
      undo_to(mark);
    }
  }

  void emit() {
    std::vector<Element> out(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) out[i] = static_cast<Element>(cells_[i] + 1);
    ++stats_.solutions;
    (*visit_)(LoopTable(static_cast<std::size_t>(n_), std::move(out)));
  }

  int n_;
  std::uint64_t budget_;
  std::uint32_t full_ = 0;
  std::vector<std::int8_t> cells_;
  std::vector<std::uint32_t> row_used_;
  std::vector<std::uint32_t> col_used_;
  std::vector<int> trail_;
  bool changed_ = false;
  BolSearchStats stats_;
  const std::function<void(const LoopTable&)>* visit_ = nullptr;
};

}  // namespace

BolSearchStats enumerate_left_bol(std::size_t n,
                                  const std::function<void(const LoopTable&)>& visit,
                                  std::uint64_t budget) {
  if (n == 0 || n > 16) throw Error(ErrorKind::BadParams, "search order must be in 1..16");
  BolSearch search(n, budget);
  return search.run(visit);
}

Order8OracleResult run_bol_oracle(std::size_t n, std::uint64_t budget) {
  Order8OracleResult result;
  result.order = n;
  std::vector<IsoProfile> rep_profiles;
  auto stats = enumerate_left_bol(
      n,
      [&](const LoopTable& q) {
        if (!is_subloop(q, commutant(q))) result.all_commutants_subloops = false;
        auto profile = invariant_profile(q);
        for (std::size_t i = 0; i < result.representatives.size(); ++i)
          if (rep_profiles[i] == profile && find_isomorphism(result.representatives[i], q))
            return;
        rep_profiles.push_back(profile);
        result.representatives.push_back(q.with_name("bol" + std::to_string(n) + "-" +
                                                     std::to_string(result.representatives.size() + 1)));
      },
      budget);
  result.tables = stats.solutions;
  result.nodes = stats.nodes;
  result.classes = result.representatives.size();
  for (std::size_t i = 0; i < result.classes; ++i) {
    if (rep_profiles[i].flags & kAssociative) ++result.associative_classes;
    else ++result.nonassociative_classes;
  }
  return result;
}

}  // namespace bolkit
