#pragma once

// Standard simplices, boundaries and horns with their canonical inclusions.
// Cells are the injective monotone maps [k] -> [m], named by their value
// strings ("02" is the edge from vertex 0 to vertex 2).

#include "smap.hpp"

namespace ssx {

enum class StandardKind { simplex, boundary, horn };

namespace detail {
inline std::string face_name(const Operator& phi) {
  std::string s;
  for (int v : phi.values) s += std::to_string(v);
  return s;
}
}  // namespace detail

inline SSetPtr build_standard(StandardKind kind, int m, int i = -1,
                              int cap = -1) {
  if (m < 0) throw error("build_standard: negative dimension");
  if (kind == StandardKind::horn && (m < 1 || i < 0 || i > m))
    throw error("build_standard: horn parameters out of range");
  if (cap < 0) cap = m;
  std::vector<Operator> keep;
  for (int k = 0; k <= m; ++k)
    for (auto& phi : enumerate_faces(k, m)) {
      if (kind != StandardKind::simplex && k == m) continue;  // drop top
      if (kind == StandardKind::horn && k == m - 1) {
        bool is_opposite = true;  // the face missing vertex i
        for (int v : phi.values)
          if (v == i) is_opposite = false;
        if (is_opposite) continue;
      }
      keep.push_back(phi);
    }
  std::map<std::vector<int>, int> idx;
  for (int c = 0; c < static_cast<int>(keep.size()); ++c)
    idx[keep[c].values] = c;
  std::vector<Cell> cells;
  for (const auto& phi : keep) {
    Cell cl;
    cl.dim = phi.dom;
    cl.name = detail::face_name(phi);
    if (phi.dom > 0) {
      for (int j = 0; j <= phi.dom; ++j) {
        Operator f = compose(phi, Operator::face(j, phi.dom));
        auto it = idx.find(f.values);
        if (it == idx.end())
          throw error("build_standard: face escaped the subcomplex");
        cl.faces.push_back(
            CellFace{Operator::identity(phi.dom - 1), it->second});
      }
    }
    cells.push_back(std::move(cl));
  }
  std::string nm;
  switch (kind) {
    case StandardKind::simplex: nm = "D" + std::to_string(m); break;
    case StandardKind::boundary: nm = "bD" + std::to_string(m); break;
    case StandardKind::horn:
      nm = "L" + std::to_string(m) + "_" + std::to_string(i);
      break;
  }
  return SSet::from_cells(nm, std::move(cells), cap);
}

inline SSetPtr simplex(int m, int cap = -1) {
  return build_standard(StandardKind::simplex, m, -1, cap);
}
inline SSetPtr boundary(int m, int cap = -1) {
  return build_standard(StandardKind::boundary, m, -1, cap);
}
inline SSetPtr horn(int m, int i, int cap = -1) {
  return build_standard(StandardKind::horn, m, i, cap);
}
inline SSetPtr empty_sset(int cap = 0) {
  return SSet::from_cells("empty", {}, cap);
}

// inclusion of a standard subcomplex (boundary/horn, or any A whose cell
// names are value strings of faces of D^m) into a larger one
inline SMap standard_inclusion(const SSetPtr& sub, const SSetPtr& whole) {
  std::vector<int> imgs(sub->cell_count());
  for (int c = 0; c < sub->cell_count(); ++c) {
    auto w = whole->cell_by_name(sub->cell(c).name);
    if (!w) throw error("standard_inclusion: cell " + sub->cell(c).name +
                        " missing in " + whole->name());
    imgs[c] = whole->cell_index(*w);
  }
  return SMap::from_cells(sub, whole, std::move(imgs));
}

// the faces of D^m in the order build_standard creates its cells
inline std::vector<Operator> simplex_cell_operators(int m) {
  std::vector<Operator> keep;
  for (int k = 0; k <= m; ++k)
    for (auto& phi : enumerate_faces(k, m)) keep.push_back(phi);
  return keep;
}

// the map D^n -> X classifying element x of X_n
inline SMap classifying_map(const SSetPtr& X, int n, int x, int cap = -1) {
  auto D = simplex(n, cap < 0 ? std::max(n, X->cap()) : cap);
  auto Xt = SSet::tabulated(X, D->cap());
  auto ops = simplex_cell_operators(n);
  std::vector<int> imgs(D->cell_count());
  for (int c = 0; c < D->cell_count(); ++c)
    imgs[c] = Xt->act(n, x, ops[c]);
  return SMap::from_cells(D, Xt, std::move(imgs));
}

}  // namespace ssx
