#pragma once

// Backtracking enumeration of simplicial maps. A map is determined by
// images of the nondegenerate elements (levelwise, ascending); candidates
// are pruned by face compatibility, forced assignments and caller filters.
// Enumeration order is deterministic, so every consumer is reproducible.

#include <functional>

#include "smap.hpp"

namespace ssx {

enum class SearchStatus { Exhausted, Stopped, Budget };

struct Budget {
  long long remaining = -1;  // negative: unlimited
  bool tick() {
    if (remaining < 0) return true;
    if (remaining == 0) return false;
    --remaining;
    return true;
  }
  bool exhausted() const { return remaining == 0; }
};

class MapSearch {
 public:
  MapSearch(SSetPtr dom, SSetPtr cod)
      : dom_(std::move(dom)), cod_(std::move(cod)) {
    search_dim_ = dom_->complete() ? std::max(dom_->dim(), 0) : dom_->cap();
    if (dom_->complete() && dom_->dim() < 0) search_dim_ = -1;  // empty
    if (search_dim_ > dom_->cap())
      throw error("MapSearch: domain not tabulated through its dimension");
    cod_ = SSet::tabulated(cod_, dom_->cap());
  }

  // require f(x) = y for x at level n (x may be degenerate)
  void force(int n, int x, int y) {
    const NF& s = dom_->nf(n, x);
    if (s.eta.is_identity()) {
      auto it = forced_.find({n, x});
      if (it != forced_.end() && it->second != y)
        contradiction_ = true;
      else
        forced_[{n, x}] = y;
    } else {
      cell_constraints_.push_back(CellConstraint{s.cell, s.eta, y});
    }
  }

  // force the whole map g on a subobject: f(i(x)) = g(x) for all x
  void force_along(const SMap& i, const SMap& g) {
    int upto = std::min(i.dom()->cap(),
                        i.dom()->complete() ? std::max(i.dom()->dim(), 0)
                                            : i.dom()->cap());
    for (int n = 0; n <= upto; ++n)
      for (int x = 0; x < i.dom()->level_size(n); ++x)
        if (i.dom()->nondegenerate(n, x)) force(n, i(n, x), g(n, x));
  }

  void add_filter(std::function<bool(int, int, int)> f) {
    filters_.push_back(std::move(f));
  }

  // visit returns false to stop the whole search
  SearchStatus run(const std::function<bool(const std::vector<std::vector<int>>&)>& visit,
                   Budget& budget) const {
    if (contradiction_) return SearchStatus::Exhausted;
    std::vector<std::vector<int>> img(dom_->cap() + 1);
    for (int n = 0; n <= dom_->cap(); ++n)
      img[n].assign(dom_->level_size(n), -1);
    std::vector<std::pair<int, int>> free_elems;
    for (int n = 0; n <= search_dim_; ++n)
      for (int x = 0; x < dom_->level_size(n); ++x)
        if (dom_->nondegenerate(n, x)) free_elems.push_back({n, x});
    bool stopped = false;
    bool budget_hit = false;
    dfs(0, free_elems, img, visit, budget, stopped, budget_hit);
    if (budget_hit) return SearchStatus::Budget;
    return stopped ? SearchStatus::Stopped : SearchStatus::Exhausted;
  }

  // convenience: enumerate complete maps as SMaps
  std::vector<SMap> all(Budget& budget, SearchStatus* status = nullptr) const {
    std::vector<SMap> out;
    auto st = run(
        [&](const std::vector<std::vector<int>>& img) {
          out.push_back(SMap::from_levels(dom_, cod_, img));
          return true;
        },
        budget);
    if (status) *status = st;
    return out;
  }

  std::optional<SMap> first(Budget& budget, SearchStatus* status = nullptr) const {
    std::optional<SMap> out;
    auto st = run(
        [&](const std::vector<std::vector<int>>& img) {
          out = SMap::from_levels(dom_, cod_, img);
          return false;
        },
        budget);
    if (status) *status = st;
    return out;
  }

  const SSetPtr& dom() const { return dom_; }
  const SSetPtr& cod() const { return cod_; }

 private:
  struct CellConstraint {
    int cell;
    Operator eta;
    int value;
  };

  // fill the derived (degenerate) images at level n; false on conflict with
  // forced values
  bool complete_level(int n, std::vector<std::vector<int>>& img) const {
    for (int x = 0; x < dom_->level_size(n); ++x) {
      const NF& s = dom_->nf(n, x);
      if (s.eta.is_identity() && n <= search_dim_) continue;
      int k = dom_->cell(s.cell).dim;
      int ci = dom_->cell_index(s.cell);
      int y = cod_->act(k, img[k][ci], s.eta);
      img[n][x] = y;
      auto it = forced_.find({n, x});
      if (it != forced_.end() && it->second != y) return false;
    }
    return true;
  }

  bool candidate_ok(int n, int x, int y) const {
    for (const auto& cc : cell_constraints_) {
      if (dom_->cell_index(cc.cell) != x || dom_->cell(cc.cell).dim != n)
        continue;
      if (cod_->act(n, y, cc.eta) != cc.value) return false;
    }
    for (const auto& f : filters_)
      if (!f(n, x, y)) return false;
    return true;
  }

  void dfs(size_t pos, const std::vector<std::pair<int, int>>& free_elems,
           std::vector<std::vector<int>>& img,
           const std::function<bool(const std::vector<std::vector<int>>&)>& visit,
           Budget& budget, bool& stopped, bool& budget_hit) const {
    if (stopped || budget_hit) return;
    if (pos == free_elems.size()) {
      // derive all remaining degenerate entries
      for (int n = 0; n <= dom_->cap(); ++n)
        if (!complete_level(n, img)) return;
      if (!visit(img)) stopped = true;
      return;
    }
    auto [n, x] = free_elems[pos];
    // entering a new level: all lower levels are fully assigned; fill
    // degenerate entries of level n-1 .. (they are needed as face targets)
    if (pos == 0 || free_elems[pos - 1].first < n) {
      for (int m = (pos == 0 ? 0 : free_elems[pos - 1].first); m < n; ++m)
        if (!complete_level(m, img)) return;
    }
    auto it = forced_.find({n, x});
    for (int y = 0; y < cod_->level_size(n); ++y) {
      if (it != forced_.end() && it->second != y) continue;
      if (!budget.tick()) {
        budget_hit = true;
        return;
      }
      bool ok = true;
      for (int i = 0; ok && n >= 1 && i <= n; ++i) {
        int fx = dom_->face(n, i, x);
        int fy = img[n - 1][fx];
        if (fy < 0 || cod_->face(n, i, y) != fy) ok = false;
      }
      if (!ok) continue;
      if (!candidate_ok(n, x, y)) continue;
      img[n][x] = y;
      dfs(pos + 1, free_elems, img, visit, budget, stopped, budget_hit);
      img[n][x] = -1;
      if (stopped || budget_hit) return;
    }
  }

  SSetPtr dom_, cod_;
  int search_dim_ = 0;
  std::map<std::pair<int, int>, int> forced_;
  std::vector<CellConstraint> cell_constraints_;
  std::vector<std::function<bool(int, int, int)>> filters_;
  bool contradiction_ = false;
};

// all simplicial maps X -> Y in deterministic order
inline std::vector<SMap> hom_set(const SSetPtr& X, const SSetPtr& Y,
                                 long long budget_nodes = -1) {
  MapSearch s(X, Y);
  Budget b{budget_nodes};
  SearchStatus st;
  auto out = s.all(b, &st);
  if (st == SearchStatus::Budget) throw error("hom_set: budget exceeded");
  return out;
}

inline long long hom_count(const SSetPtr& X, const SSetPtr& Y) {
  MapSearch s(X, Y);
  Budget b;
  long long n = 0;
  s.run([&](const auto&) { ++n; return true; }, b);
  return n;
}

}  // namespace ssx
