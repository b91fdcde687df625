#pragma once

// Finitely generated and truncated simplicial sets over one tabulated
// representation. A set is stored as its cells (nondegenerate generators
// with face tables) plus explicit levels 0..cap, where a level-n element is
// the Eilenberg-Zilber normal form (eta, cell): a degeneracy operator
// [n] ->> [k] applied to a k-cell. `complete` means the cells generate the
// whole object (no nondegenerate simplices above any cap), so the
// tabulation can be extended on demand; otherwise the object is an honest
// truncation and levels above cap are unavailable.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "operators.hpp"

namespace ssx {

struct NF {
  Operator eta;  // degeneracy [n] ->> [k]
  int cell = -1;
  auto operator<=>(const NF&) const = default;
};

struct CellFace {
  Operator op;  // degeneracy part of the face expression
  int cell = -1;
  auto operator<=>(const CellFace&) const = default;
};

struct Cell {
  int dim = 0;
  std::string name;
  std::vector<CellFace> faces;  // d_0 .. d_dim (empty for dim 0)
};

class SSet;
using SSetPtr = std::shared_ptr<const SSet>;

class SSet {
 public:
  // Build from cells; tabulates levels 0..cap and validates the simplicial
  // identities d_i d_j = d_{j-1} d_i on every cell. complete by definition.
  static SSetPtr from_cells(std::string name, std::vector<Cell> cells,
                            int cap);

  // Build from explicit level tables (faces[n][i][x] at levels 1..cap,
  // degens[n][i][x] at levels 0..cap-1). Validates all simplicial
  // identities. complete_dim >= 0 claims no nondegenerate element lives
  // above that dimension (verified); complete_dim = -1 means truncated.
  static SSetPtr from_tables(std::string name, std::vector<int> level_sizes,
                             std::vector<std::vector<std::vector<int>>> faces,
                             std::vector<std::vector<std::vector<int>>> degens,
                             int complete_dim,
                             std::vector<std::string> cell_names = {});

  const std::string& name() const { return name_; }
  bool complete() const { return complete_; }
  int cap() const { return cap_; }
  // top cell dimension (complete objects only)
  int dim() const {
    if (!complete_) throw error(name_ + ": dim() on truncated set");
    return dim_;
  }
  int level_size(int n) const {
    check_level(n);
    return static_cast<int>(levels_[n].size());
  }
  const std::vector<NF>& level(int n) const {
    check_level(n);
    return levels_[n];
  }
  const NF& nf(int n, int x) const { return level(n).at(x); }
  int index_of(int n, const NF& s) const;
  bool nondegenerate(int n, int x) const {
    return nf(n, x).eta.is_identity();
  }

  const std::vector<Cell>& cells() const { return cells_; }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  const Cell& cell(int c) const { return cells_.at(c); }
  // level index of cell c at its own dimension
  int cell_index(int c) const {
    return index_of(cells_[c].dim, NF{Operator::identity(cells_[c].dim), c});
  }
  std::optional<int> cell_by_name(const std::string& nm) const {
    auto it = cell_by_name_.find(nm);
    if (it == cell_by_name_.end()) return std::nullopt;
    return it->second;
  }

  // right action: element x of level n under phi: [m] -> [n]
  int act(int n, int x, const Operator& phi) const;
  NF act_nf(const NF& s, const Operator& phi) const;
  int face(int n, int i, int x) const { return faces_.at(n).at(i).at(x); }
  int degen(int n, int i, int x) const { return degens_.at(n).at(i).at(x); }

  std::string label(int n, int x) const;

  // same underlying object (pointer or structural agreement up to min cap)
  static bool same(const SSetPtr& a, const SSetPtr& b);

  // retabulate a complete set to at least `cap` (returns input when enough)
  static SSetPtr tabulated(const SSetPtr& s, int cap);

  // truncate: forget completeness above new_cap
  static SSetPtr truncate(const SSetPtr& s, int new_cap);

 private:
  SSet() = default;
  void tabulate_from_cells(int cap);
  void derive_nf_and_cells();
  void validate_cell_identities() const;
  void validate_tables() const;
  void check_level(int n) const {
    if (n < 0) throw error(name_ + ": negative level");
    if (n > cap_)
      throw error(name_ + ": cap exceeded (level " + std::to_string(n) +
                  " > cap " + std::to_string(cap_) + ")");
  }

  std::string name_;
  bool complete_ = false;
  int dim_ = -1;
  int cap_ = -1;
  std::vector<Cell> cells_;
  std::map<std::string, int> cell_by_name_;
  std::vector<std::vector<NF>> levels_;
  std::vector<std::map<NF, int>> level_index_;
  std::vector<std::vector<std::vector<int>>> faces_;   // [n][i][x], n>=1
  std::vector<std::vector<std::vector<int>>> degens_;  // [n][i][x], n<cap
  std::vector<std::string> pending_cell_names_;
  std::vector<std::vector<int>> perms_scratch_;
  mutable std::map<std::pair<int, Operator>, NF> act_cell_memo_;

  std::string cell_names_lookup(int n, int x) {
    size_t next = cells_.size();
    if (next < pending_cell_names_.size()) return pending_cell_names_[next];
    return "c" + std::to_string(n) + "_" + std::to_string(x);
  }

  NF act_cell(int c, const Operator& phi) const;
};

inline int SSet::index_of(int n, const NF& s) const {
  check_level(n);
  auto it = level_index_[n].find(s);
  if (it == level_index_[n].end())
    throw error(name_ + ": normal form not found at level " +
                std::to_string(n));
  return it->second;
}

inline NF SSet::act_cell(int c, const Operator& phi) const {
  if (phi.cod != cells_[c].dim)
    throw error(name_ + ": act_cell arity mismatch");
  auto key = std::make_pair(c, phi);
  auto it = act_cell_memo_.find(key);
  if (it != act_cell_memo_.end()) return it->second;
  auto [alpha, beta] = epi_mono_factorize(phi);
  NF result;
  if (beta.is_identity()) {
    result = NF{alpha, c};
  } else {
    // peel the largest omitted index: beta = delta_o . beta'
    int o = face_generator_word(beta).front();
    const CellFace& f = cells_[c].faces.at(o);
    std::vector<int> shifted(beta.values);
    for (int& v : shifted)
      if (v > o) --v;
    Operator beta_rest(beta.dom, beta.cod - 1, std::move(shifted));
    NF r = act_cell(f.cell, compose(f.op, beta_rest));
    result = NF{compose(r.eta, alpha), r.cell};
  }
  act_cell_memo_.emplace(key, result);
  return result;
}

inline NF SSet::act_nf(const NF& s, const Operator& phi) const {
  if (phi.cod != s.eta.dom) throw error(name_ + ": act_nf arity mismatch");
  return act_cell(s.cell, compose(s.eta, phi));
}

inline int SSet::act(int n, int x, const Operator& phi) const {
  if (phi.cod != n) throw error(name_ + ": act level mismatch");
  return index_of(phi.dom, act_nf(nf(n, x), phi));
}

inline std::string SSet::label(int n, int x) const {
  const NF& s = nf(n, x);
  std::string l = cells_[s.cell].name;
  if (!s.eta.is_identity()) {
    l += "*[";
    for (size_t i = 0; i < s.eta.values.size(); ++i) {
      if (i) l += ",";
      l += std::to_string(s.eta.values[i]);
    }
    l += "]";
  }
  return l;
}

inline void SSet::tabulate_from_cells(int cap) {
  cap_ = cap;
  levels_.assign(cap + 1, {});
  level_index_.assign(cap + 1, {});
  for (int n = 0; n <= cap; ++n) {
    for (int c = 0; c < cell_count(); ++c) {
      int k = cells_[c].dim;
      if (k > n) continue;
      for (const auto& eta : enumerate_degeneracies(n, k)) {
        NF s{eta, c};
        level_index_[n][s] = static_cast<int>(levels_[n].size());
        levels_[n].push_back(s);
      }
    }
  }
  faces_.assign(cap + 1, {});
  degens_.assign(cap + 1, {});
  for (int n = 1; n <= cap; ++n) {
    faces_[n].assign(n + 1, std::vector<int>(levels_[n].size()));
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < static_cast<int>(levels_[n].size()); ++x)
        faces_[n][i][x] = index_of(n - 1, act_nf(levels_[n][x], Operator::face(i, n)));
  }
  for (int n = 0; n < cap; ++n) {
    degens_[n].assign(n + 1, std::vector<int>(levels_[n].size()));
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < static_cast<int>(levels_[n].size()); ++x)
        degens_[n][i][x] =
            index_of(n + 1, act_nf(levels_[n][x], Operator::degeneracy(i, n)));
  }
}

inline void SSet::validate_cell_identities() const {
  for (int c = 0; c < cell_count(); ++c) {
    int k = cells_[c].dim;
    if (static_cast<int>(cells_[c].faces.size()) != (k == 0 ? 0 : k + 1))
      throw error(name_ + ": cell " + cells_[c].name + " has wrong face count");
    for (const auto& f : cells_[c].faces) {
      if (f.cell < 0 || f.cell >= cell_count())
        throw error(name_ + ": dangling generator reference in " +
                    cells_[c].name);
      if (!f.op.is_degeneracy())
        throw error(name_ + ": face expression operator of " + cells_[c].name +
                    " is not a degeneracy");
      if (f.op.dom != k - 1 || f.op.cod != cells_[f.cell].dim)
        throw error(name_ + ": face expression arity mismatch in " +
                    cells_[c].name);
    }
    if (k < 2) continue;
    for (int j = 1; j <= k; ++j)
      for (int i = 0; i < j; ++i) {
        const CellFace& fj = cells_[c].faces[j];
        const CellFace& fi = cells_[c].faces[i];
        NF lhs = act_cell(fj.cell, compose(fj.op, Operator::face(i, k - 1)));
        NF rhs = act_cell(fi.cell, compose(fi.op, Operator::face(j - 1, k - 1)));
        if (lhs != rhs)
          throw error(name_ + ": simplicial identity d_" + std::to_string(i) +
                      " d_" + std::to_string(j) + " fails on generator " +
                      cells_[c].name);
      }
  }
}

inline SSetPtr SSet::from_cells(std::string name, std::vector<Cell> cells,
                                int cap) {
  auto s = std::shared_ptr<SSet>(new SSet());
  s->name_ = std::move(name);
  s->complete_ = true;
  s->cells_ = std::move(cells);
  s->dim_ = 0;
  for (int c = 0; c < s->cell_count(); ++c) {
    const auto& cl = s->cells_[c];
    if (cl.name.empty()) throw error(s->name_ + ": unnamed generator");
    if (!s->cell_by_name_.emplace(cl.name, c).second)
      throw error(s->name_ + ": duplicate generator name " + cl.name);
    s->dim_ = std::max(s->dim_, cl.dim);
  }
  if (s->cell_count() == 0) s->dim_ = -1;  // empty simplicial set
  s->validate_cell_identities();
  s->tabulate_from_cells(std::max(cap, 0));
  return s;
}

inline void SSet::derive_nf_and_cells() {
  // compute EZ normal forms from the tables, synthesizing cells
  std::vector<std::vector<NF>> nf(cap_ + 1);
  for (int n = 0; n <= cap_; ++n) {
    int sz = static_cast<int>(levels_[n].size());
    nf[n].assign(sz, NF{});
    // mark degenerate elements with their (smallest i) preimage
    std::vector<std::pair<int, int>> from(sz, {-1, -1});  // (i, y)
    if (n >= 1) {
      for (int i = n - 1; i >= 0; --i)
        for (int y = 0; y < static_cast<int>(levels_[n - 1].size()); ++y)
          from[degens_[n - 1][i][y]] = {i, y};
    }
    for (int x = 0; x < sz; ++x) {
      if (from[x].first < 0) {
        int c = cell_count();
        Cell cl;
        cl.dim = n;
        cl.name = cell_names_lookup(n, x);
        cells_.push_back(std::move(cl));
        nf[n][x] = NF{Operator::identity(n), c};
      } else {
        auto [i, y] = from[x];
        const NF& p = nf[n - 1][y];
        nf[n][x] = NF{compose(p.eta, Operator::degeneracy(i, n - 1)), p.cell};
      }
    }
  }
  // reorder every level into the canonical (cell, eta) order used by
  // tabulate_from_cells, so retabulating to a higher cap is index-stable
  for (int n = 0; n <= cap_; ++n) {
    int sz = static_cast<int>(nf[n].size());
    std::vector<int> order(sz);
    for (int x = 0; x < sz; ++x) order[x] = x;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (nf[n][a].cell != nf[n][b].cell) return nf[n][a].cell < nf[n][b].cell;
      return nf[n][a].eta.values < nf[n][b].eta.values;
    });
    std::vector<int> perm(sz);  // old index -> new index
    for (int nw = 0; nw < sz; ++nw) perm[order[nw]] = nw;
    std::vector<NF> sorted(sz);
    for (int x = 0; x < sz; ++x) sorted[perm[x]] = nf[n][x];
    nf[n] = std::move(sorted);
    perms_scratch_.push_back(std::move(perm));
  }
  auto remap = [&](int n, int x) { return perms_scratch_[n][x]; };
  auto old_faces = faces_;
  auto old_degens = degens_;
  for (int n = 1; n <= cap_; ++n)
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < static_cast<int>(levels_[n].size()); ++x)
        faces_[n][i][remap(n, x)] = remap(n - 1, old_faces[n][i][x]);
  for (int n = 0; n < cap_; ++n)
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < static_cast<int>(levels_[n].size()); ++x)
        degens_[n][i][remap(n, x)] = remap(n + 1, old_degens[n][i][x]);
  perms_scratch_.clear();
  for (int n = 0; n <= cap_; ++n) {
    levels_[n] = nf[n];
    level_index_[n].clear();
    for (int x = 0; x < static_cast<int>(levels_[n].size()); ++x)
      level_index_[n][levels_[n][x]] = x;
  }
  // faces of synthesized cells
  for (int c = 0; c < cell_count(); ++c) {
    int k = cells_[c].dim;
    if (k == 0) continue;
    int x = level_index_[k].at(NF{Operator::identity(k), c});
    for (int i = 0; i <= k; ++i) {
      const NF& f = levels_[k - 1][faces_[k][i][x]];
      cells_[c].faces.push_back(CellFace{f.eta, f.cell});
    }
  }
  for (int c = 0; c < cell_count(); ++c)
    if (!cell_by_name_.emplace(cells_[c].name, c).second)
      throw error(name_ + ": duplicate cell name " + cells_[c].name);
}

inline void SSet::validate_tables() const {
  auto sz = [&](int n) { return static_cast<int>(levels_[n].size()); };
  for (int n = 1; n <= cap_; ++n) {
    if (static_cast<int>(faces_[n].size()) != n + 1)
      throw error(name_ + ": face table arity at level " + std::to_string(n));
    for (int i = 0; i <= n; ++i)
      if (static_cast<int>(faces_[n][i].size()) != sz(n))
        throw error(name_ + ": face table size at level " + std::to_string(n));
  }
  for (int n = 0; n < cap_; ++n) {
    if (static_cast<int>(degens_[n].size()) != n + 1)
      throw error(name_ + ": degeneracy table arity at level " +
                  std::to_string(n));
    for (int i = 0; i <= n; ++i)
      if (static_cast<int>(degens_[n][i].size()) != sz(n))
        throw error(name_ + ": degeneracy table size at level " +
                    std::to_string(n));
  }
  // d_i d_j = d_{j-1} d_i for i < j
  for (int n = 2; n <= cap_; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int x = 0; x < sz(n); ++x)
          if (faces_[n - 1][i][faces_[n][j][x]] !=
              faces_[n - 1][j - 1][faces_[n][i][x]])
            throw error(name_ + ": identity d_" + std::to_string(i) + " d_" +
                        std::to_string(j) + " fails at level " +
                        std::to_string(n) + " element " + std::to_string(x));
  // s_j s_i = s_i s_{j+1} wherever defined (x at level n, i <= j <= n)
  for (int n = 0; n + 2 <= cap_; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (int x = 0; x < sz(n); ++x)
          if (degens_[n + 1][i][degens_[n][j][x]] !=
              degens_[n + 1][j + 1][degens_[n][i][x]])
            throw error(name_ + ": identity s_i s_j fails at level " +
                        std::to_string(n));
  // mixed identities: d_i s_j
  for (int n = 0; n + 1 <= cap_; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (int x = 0; x < sz(n); ++x) {
          int lhs = faces_[n + 1][i][degens_[n][j][x]];
          int rhs;
          if (i == j || i == j + 1)
            rhs = x;
          else if (i < j) {
            if (n == 0) continue;
            rhs = degens_[n - 1][j - 1][faces_[n][i][x]];
          } else {
            if (n == 0) continue;
            rhs = degens_[n - 1][j][faces_[n][i - 1][x]];
          }
          if (lhs != rhs)
            throw error(name_ + ": identity d_" + std::to_string(i) + " s_" +
                        std::to_string(j) + " fails at level " +
                        std::to_string(n));
        }
}

inline SSetPtr SSet::from_tables(
    std::string name, std::vector<int> level_sizes,
    std::vector<std::vector<std::vector<int>>> faces,
    std::vector<std::vector<std::vector<int>>> degens, int complete_dim,
    std::vector<std::string> cell_names) {
  auto s = std::shared_ptr<SSet>(new SSet());
  s->name_ = std::move(name);
  s->cap_ = static_cast<int>(level_sizes.size()) - 1;
  if (s->cap_ < 0) throw error("from_tables: no levels");
  s->levels_.assign(s->cap_ + 1, {});
  s->level_index_.assign(s->cap_ + 1, {});
  for (int n = 0; n <= s->cap_; ++n)
    s->levels_[n].assign(level_sizes[n], NF{});
  s->faces_ = std::move(faces);
  s->degens_ = std::move(degens);
  s->faces_.resize(s->cap_ + 1);
  s->degens_.resize(s->cap_ + 1);
  s->validate_tables();
  s->pending_cell_names_ = std::move(cell_names);
  s->derive_nf_and_cells();
  s->pending_cell_names_.clear();
  if (complete_dim >= 0) {
    if (complete_dim > s->cap_)
      throw error(s->name_ + ": claimed dim exceeds tabulated cap");
    for (const auto& c : s->cells_)
      if (c.dim > complete_dim)
        throw error(s->name_ + ": nondegenerate element above claimed dim " +
                    std::to_string(complete_dim));
    s->complete_ = true;
    s->dim_ = -1;
    for (const auto& c : s->cells_) s->dim_ = std::max(s->dim_, c.dim);
  } else {
    s->complete_ = false;
    s->dim_ = -1;
  }
  return s;
}

inline SSetPtr SSet::tabulated(const SSetPtr& s, int cap) {
  if (s->cap_ >= cap) return s;
  if (!s->complete_)
    throw error(s->name_ + ": cap exceeded (truncated at " +
                std::to_string(s->cap_) + ", need " + std::to_string(cap) +
                ")");
  return from_cells(s->name_, s->cells_, cap);
}

inline SSetPtr SSet::truncate(const SSetPtr& s, int new_cap) {
  if (new_cap > s->cap_) return tabulated(s, new_cap);
  auto t = std::shared_ptr<SSet>(new SSet(*s));
  t->complete_ = false;
  t->dim_ = -1;
  t->cap_ = new_cap;
  t->levels_.resize(new_cap + 1);
  t->level_index_.resize(new_cap + 1);
  t->faces_.resize(new_cap + 1);
  t->degens_.resize(new_cap);
  t->degens_.resize(new_cap + 1);
  t->act_cell_memo_.clear();
  // keep only cells in range; their indices must stay stable for NF refs
  return t;
}

inline bool SSet::same(const SSetPtr& a, const SSetPtr& b) {
  if (a.get() == b.get()) return true;
  int cap = std::min(a->cap_, b->cap_);
  if (a->complete_ != b->complete_) return false;
  if (a->complete_ && a->dim_ != b->dim_) return false;
  for (int n = 0; n <= cap; ++n)
    if (a->levels_[n].size() != b->levels_[n].size()) return false;
  for (int n = 1; n <= cap; ++n)
    if (a->faces_[n] != b->faces_[n]) return false;
  for (int n = 0; n < cap; ++n)
    if (a->degens_[n] != b->degens_[n]) return false;
  return true;
}

}  // namespace ssx
