#pragma once

// Simplicial maps. A map from a complete (finitely generated) domain is
// determined by images of its cells; a map from a truncated domain is a
// levelwise table. Both are validated against the operator actions at
// construction.

#include "sset.hpp"

namespace ssx {

class SMap {
 public:
  SMap() = default;

  // dom complete; cell_images[c] = index in cod level at dim(cell c)
  static SMap from_cells(SSetPtr dom, SSetPtr cod,
                         std::vector<int> cell_images) {
    SMap f;
    f.dom_ = std::move(dom);
    f.cod_ = SSet::tabulated(std::move(cod), f.dom_->cap());
    if (!f.dom_->complete())
      throw error("SMap: cell images require a complete domain");
    if (static_cast<int>(cell_images.size()) != f.dom_->cell_count())
      throw error("SMap: wrong number of cell images");
    f.cell_images_ = std::move(cell_images);
    f.validate_cells();
    f.fill_tables_from_cells();
    return f;
  }

  static SMap from_levels(SSetPtr dom, SSetPtr cod,
                          std::vector<std::vector<int>> img) {
    SMap f;
    f.dom_ = std::move(dom);
    f.cod_ = SSet::tabulated(std::move(cod), f.dom_->cap());
    f.img_ = std::move(img);
    if (static_cast<int>(f.img_.size()) != f.dom_->cap() + 1)
      throw error("SMap: level table count mismatch");
    for (int n = 0; n <= f.dom_->cap(); ++n) {
      if (static_cast<int>(f.img_[n].size()) != f.dom_->level_size(n))
        throw error("SMap: level table size mismatch at " + std::to_string(n));
      for (int y : f.img_[n])
        if (y < 0 || y >= f.cod_->level_size(n))
          throw error("SMap: image index out of range");
    }
    f.validate_levels();
    if (f.dom_->complete()) {
      f.cell_images_.resize(f.dom_->cell_count());
      for (int c = 0; c < f.dom_->cell_count(); ++c)
        f.cell_images_[c] = f.img_[f.dom_->cell(c).dim][f.dom_->cell_index(c)];
    }
    return f;
  }

  static SMap identity(const SSetPtr& X) {
    std::vector<std::vector<int>> img(X->cap() + 1);
    for (int n = 0; n <= X->cap(); ++n) {
      img[n].resize(X->level_size(n));
      for (int x = 0; x < X->level_size(n); ++x) img[n][x] = x;
    }
    return from_levels(X, X, std::move(img));
  }

  const SSetPtr& dom() const { return dom_; }
  const SSetPtr& cod() const { return cod_; }
  int operator()(int n, int x) const { return img_.at(n).at(x); }
  NF image_nf(int n, int x) const { return cod_->nf(n, img_.at(n).at(x)); }
  int cell_image(int c) const { return cell_images_.at(c); }
  bool has_cell_images() const { return dom_->complete(); }

  bool levelwise_injective(int upto) const {
    for (int n = 0; n <= std::min(upto, dom_->cap()); ++n) {
      std::vector<int> seen(cod_->level_size(n), 0);
      for (int y : img_[n]) {
        if (seen[y]) return false;
        seen[y] = 1;
      }
    }
    return true;
  }

  std::vector<int> complement(int n) const {
    std::vector<int> in(cod_->level_size(n), 0);
    for (int y : img_.at(n)) in[y] = 1;
    std::vector<int> out;
    for (int y = 0; y < cod_->level_size(n); ++y)
      if (!in[y]) out.push_back(y);
    return out;
  }

  bool operator==(const SMap& o) const {
    if (!SSet::same(dom_, o.dom_) || !SSet::same(cod_, o.cod_)) return false;
    int cap = std::min(dom_->cap(), o.dom_->cap());
    for (int n = 0; n <= cap; ++n)
      if (img_[n] != o.img_[n]) return false;
    return true;
  }
  bool operator!=(const SMap& o) const { return !(*this == o); }
  // level tables agree (objects compared structurally elsewhere)
  bool same_tables(const SMap& o, int upto) const {
    for (int n = 0; n <= upto; ++n)
      if (img_.at(n) != o.img_.at(n)) return false;
    return true;
  }

  friend SMap compose(const SMap& g, const SMap& f) {
    if (!SSet::same(f.cod_, g.dom_))
      throw error("compose(SMap): middle objects differ");
    if (g.dom_->cap() < f.dom_->cap()) return compose(extend(g, f.dom_->cap()), f);
    std::vector<std::vector<int>> img(f.dom_->cap() + 1);
    for (int n = 0; n <= f.dom_->cap(); ++n) {
      img[n].resize(f.dom_->level_size(n));
      for (int x = 0; x < f.dom_->level_size(n); ++x)
        img[n][x] = g.img_[n][f.img_[n][x]];
    }
    return from_levels(f.dom_, g.cod_, std::move(img));
  }

  static SMap extend(const SMap& f, int cap) {
    if (cap <= f.dom_->cap()) return f;
    if (!f.dom_->complete())
      throw error("SMap::extend: truncated domain");
    return from_cells(SSet::tabulated(f.dom_, cap),
                      SSet::tabulated(f.cod_, cap), f.cell_images_);
  }

 private:
  void validate_cells() const {
    for (int c = 0; c < dom_->cell_count(); ++c) {
      const Cell& cl = dom_->cell(c);
      if (cl.dim == 0) continue;
      for (int i = 0; i <= cl.dim; ++i) {
        const CellFace& fc = cl.faces[i];
        int fk = dom_->cell(fc.cell).dim;
        NF lhs = cod_->act_nf(cod_->nf(cl.dim, cell_images_[c]),
                              Operator::face(i, cl.dim));
        NF rhs = cod_->act_nf(cod_->nf(fk, cell_images_[fc.cell]), fc.op);
        if (lhs != rhs)
          throw error("SMap: generator images do not commute with d_" +
                      std::to_string(i) + " at " + cl.name);
      }
    }
  }

  void fill_tables_from_cells() {
    img_.assign(dom_->cap() + 1, {});
    for (int n = 0; n <= dom_->cap(); ++n) {
      img_[n].resize(dom_->level_size(n));
      for (int x = 0; x < dom_->level_size(n); ++x) {
        const NF& s = dom_->nf(n, x);
        int k = dom_->cell(s.cell).dim;
        NF t = cod_->act_nf(cod_->nf(k, cell_images_[s.cell]), s.eta);
        img_[n][x] = cod_->index_of(n, t);
      }
    }
  }

  void validate_levels() const {
    for (int n = 1; n <= dom_->cap(); ++n)
      for (int i = 0; i <= n; ++i)
        for (int x = 0; x < dom_->level_size(n); ++x)
          if (img_[n - 1][dom_->face(n, i, x)] !=
              cod_->face(n, i, img_[n][x]))
            throw error("SMap: level table does not commute with d_" +
                        std::to_string(i) + " at level " + std::to_string(n));
    for (int n = 0; n < dom_->cap(); ++n)
      for (int i = 0; i <= n; ++i)
        for (int x = 0; x < dom_->level_size(n); ++x)
          if (img_[n + 1][dom_->degen(n, i, x)] !=
              cod_->degen(n, i, img_[n][x]))
            throw error("SMap: level table does not commute with s_" +
                        std::to_string(i) + " at level " + std::to_string(n));
  }

  SSetPtr dom_, cod_;
  std::vector<int> cell_images_;
  std::vector<std::vector<int>> img_;
};

}  // namespace ssx
