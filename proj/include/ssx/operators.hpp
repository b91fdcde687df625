#pragma once

// Arrows of the simplex category: monotone maps [m] -> [n] stored as value
// lists. Composition is array indexing; every operator factors uniquely as a
// degeneracy (surjection) followed by a face (injection).

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssx {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Operator {
  int dom = 0;  // m, the ordinal [m]
  int cod = 0;  // n
  std::vector<int> values;  // size m+1, nondecreasing, entries in 0..n

  Operator() : values{0} {}
  Operator(int dom_, int cod_, std::vector<int> values_)
      : dom(dom_), cod(cod_), values(std::move(values_)) {
    if (dom < 0 || cod < 0 || values.size() != static_cast<size_t>(dom) + 1)
      throw error("operator: bad arity");
    int prev = 0;
    for (size_t i = 0; i < values.size(); ++i) {
      if (values[i] < 0 || values[i] > cod)
        throw error("operator: value out of range");
      if (i > 0 && values[i] < prev) throw error("operator: not monotone");
      prev = values[i];
    }
  }

  static Operator identity(int n) {
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i;
    return Operator(n, n, std::move(v));
  }

  // delta_i : [n-1] -> [n], omitting i (0 <= i <= n, n >= 1)
  static Operator face(int i, int n) {
    if (n < 1 || i < 0 || i > n) throw error("face: bad index");
    std::vector<int> v;
    v.reserve(n);
    for (int j = 0; j <= n; ++j)
      if (j != i) v.push_back(j);
    return Operator(n - 1, n, std::move(v));
  }

  // sigma_i : [n+1] -> [n], identifying i and i+1 (0 <= i <= n)
  static Operator degeneracy(int i, int n) {
    if (n < 0 || i < 0 || i > n) throw error("degeneracy: bad index");
    std::vector<int> v;
    v.reserve(n + 2);
    for (int j = 0; j <= n + 1; ++j) v.push_back(j <= i ? j : j - 1);
    return Operator(n + 1, n, std::move(v));
  }

  // the vertex [0] -> [n] at k
  static Operator vertex(int k, int n) { return Operator(0, n, {k}); }

  bool is_face() const {  // strictly increasing
    for (size_t i = 1; i < values.size(); ++i)
      if (values[i] <= values[i - 1]) return false;
    return true;
  }

  bool is_degeneracy() const {  // surjective
    if (values.front() != 0 || values.back() != cod) return false;
    for (size_t i = 1; i < values.size(); ++i)
      if (values[i] - values[i - 1] > 1) return false;
    return true;
  }

  bool is_identity() const {
    if (dom != cod) return false;
    for (int i = 0; i <= dom; ++i)
      if (values[i] != i) return false;
    return true;
  }

  int operator()(int i) const { return values.at(i); }

  auto operator<=>(const Operator&) const = default;

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < values.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(values[i]);
    }
    s += "]:" + std::to_string(dom) + "->" + std::to_string(cod);
    return s;
  }
};

// g after f; pre: cod(f) = dom(g)
inline Operator compose(const Operator& g, const Operator& f) {
  if (f.cod != g.dom) throw error("compose: dimension mismatch");
  std::vector<int> v(f.dom + 1);
  for (int i = 0; i <= f.dom; ++i) v[i] = g.values[f.values[i]];
  return Operator(f.dom, g.cod, std::move(v));
}

// phi = sharp . flat with flat a degeneracy and sharp a face; the pair is
// the unique such factorisation.
inline std::pair<Operator, Operator> epi_mono_factorize(const Operator& phi) {
  std::vector<int> image;  // distinct values, increasing
  for (int v : phi.values)
    if (image.empty() || image.back() != v) image.push_back(v);
  int k = static_cast<int>(image.size()) - 1;
  std::vector<int> flat(phi.dom + 1);
  for (int i = 0; i <= phi.dom; ++i) {
    flat[i] = static_cast<int>(
        std::lower_bound(image.begin(), image.end(), phi.values[i]) -
        image.begin());
  }
  return {Operator(phi.dom, k, std::move(flat)),
          Operator(k, phi.cod, std::move(image))};
}

namespace detail {
inline void enumerate_monotone(int len, int lo, int hi, bool strict,
                               std::vector<int>& cur,
                               std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  int start = cur.empty() ? lo : (strict ? cur.back() + 1 : cur.back());
  for (int v = start; v <= hi; ++v) {
    cur.push_back(v);
    enumerate_monotone(len, lo, hi, strict, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

// all monotone maps [m] -> [n], lexicographic on value lists
inline std::vector<Operator> enumerate_operators(int m, int n) {
  if (m < 0 || n < 0) throw error("enumerate_operators: negative ordinal");
  std::vector<std::vector<int>> lists;
  std::vector<int> cur;
  detail::enumerate_monotone(m + 1, 0, n, false, cur, lists);
  std::vector<Operator> out;
  out.reserve(lists.size());
  for (auto& l : lists) out.emplace_back(m, n, std::move(l));
  return out;
}

// injective monotone maps [m] -> [n]
inline std::vector<Operator> enumerate_faces(int m, int n) {
  std::vector<std::vector<int>> lists;
  std::vector<int> cur;
  detail::enumerate_monotone(m + 1, 0, n, true, cur, lists);
  std::vector<Operator> out;
  out.reserve(lists.size());
  for (auto& l : lists) out.emplace_back(m, n, std::move(l));
  return out;
}

// surjective monotone maps [m] ->> [n]
inline std::vector<Operator> enumerate_degeneracies(int m, int n) {
  std::vector<Operator> out;
  for (auto& op : enumerate_operators(m, n))
    if (op.is_degeneracy()) out.push_back(op);
  return out;
}

// Peel a face operator into generator faces: phi = delta_{i1} . delta_{i2}
// ... applied innermost-last; returns the indices so that composing
// face(i, n) for successive i rebuilds phi.
inline std::vector<int> face_generator_word(const Operator& phi) {
  if (!phi.is_face()) throw error("face_generator_word: not a face operator");
  // omitted values of [cod], in decreasing order: phi = d_{j_1} ... d_{j_r}
  // with j_1 > j_2 > ... when applied outermost-first.
  std::vector<int> omitted;
  int idx = 0;
  for (int v = 0; v <= phi.cod; ++v) {
    if (idx <= phi.dom && phi.values[idx] == v)
      ++idx;
    else
      omitted.push_back(v);
  }
  std::sort(omitted.rbegin(), omitted.rend());
  return omitted;
}

}  // namespace ssx
