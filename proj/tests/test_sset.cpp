#include <catch2/catch_amalgamated.hpp>

#include "ssx/standard.hpp"

using namespace ssx;

namespace {
// brute-force count of monotone maps [n] -> [m] lying in a standard object
int count_level(StandardKind kind, int m, int i, int n) {
  int total = 0;
  for (const auto& phi : enumerate_operators(n, m)) {
    auto [flat, sharp] = epi_mono_factorize(phi);
    bool top = sharp.is_identity() && m == sharp.cod && sharp.dom == m;
    top = (sharp.dom == m);  // factors through the top simplex only
    if (kind == StandardKind::simplex) {
      ++total;
      continue;
    }
    if (top) continue;  // boundary and horn omit the top
    if (kind == StandardKind::horn && sharp.dom == m - 1) {
      bool opposite = true;
      for (int v : sharp.values)
        if (v == i) opposite = false;
      if (opposite) continue;
    }
    ++total;
  }
  return total;
}

SSetPtr circle() {
  // one vertex, one nondegenerate edge with both faces the vertex
  std::vector<Cell> cells(2);
  cells[0].dim = 0;
  cells[0].name = "v";
  cells[1].dim = 1;
  cells[1].name = "e";
  cells[1].faces = {CellFace{Operator::identity(0), 0},
                    CellFace{Operator::identity(0), 0}};
  return SSet::from_cells("circle", cells, 3);
}
}  // namespace

TEST_CASE("standard objects: generator counts") {
  auto d2 = simplex(2);
  CHECK(d2->cell_count() == 7);  // 3 vertices, 3 edges, 1 triangle
  auto b2 = boundary(2);
  CHECK(b2->cell_count() == 6);
  auto h21 = horn(2, 1);
  CHECK(h21->cell_count() == 5);  // 3 vertices, 2 edges
  int edges = 0;
  for (const auto& c : h21->cells())
    if (c.dim == 1) ++edges;
  CHECK(edges == 2);
  CHECK_THROWS_AS(horn(2, 3), error);
  CHECK_THROWS_AS(horn(0, 0), error);
}

TEST_CASE("level sets match brute-force enumeration") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 4; ++n) {
      auto D = simplex(m, 4);
      CHECK(D->level_size(n) == count_level(StandardKind::simplex, m, -1, n));
      if (m >= 1) {
        auto B = boundary(m, 4);
        CHECK(B->level_size(n) ==
              count_level(StandardKind::boundary, m, -1, n));
        for (int i = 0; i <= m; ++i) {
          auto H = horn(m, i, 4);
          CHECK(H->level_size(n) == count_level(StandardKind::horn, m, i, n));
        }
      }
    }
  // the spec's documented spot values, rederived above:
  CHECK(simplex(1, 2)->level_size(2) == 4);
  CHECK(simplex(0, 3)->level_size(3) == 1);
  CHECK(boundary(2, 2)->level_size(2) == 9);  // all degenerate
  for (int x = 0; x < 9; ++x)
    CHECK_FALSE(boundary(2, 2)->nondegenerate(2, x));
}

TEST_CASE("act: identity, faces of the top simplex, functoriality") {
  auto d2 = simplex(2, 3);
  int top = d2->cell_index(*d2->cell_by_name("012"));
  SECTION("x . id = x") {
    for (int n = 0; n <= 3; ++n)
      for (int x = 0; x < d2->level_size(n); ++x)
        CHECK(d2->act(n, x, Operator::identity(n)) == x);
  }
  SECTION("face of the identity simplex is the operator itself") {
    int e = d2->act(2, top, Operator::face(1, 2));
    CHECK(d2->label(1, e) == "02");
  }
  SECTION("functoriality on all composable pairs") {
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m)
        for (int p = 0; p <= 3; ++p)
          for (const auto& phi : enumerate_operators(m, n))
            for (const auto& psi : enumerate_operators(p, m))
              for (int x = 0; x < d2->level_size(n); ++x)
                CHECK(d2->act(n, x, compose(phi, psi)) ==
                      d2->act(m, d2->act(n, x, phi), psi));
  }
}

TEST_CASE("normal forms: idempotent and bijective bookkeeping") {
  auto c = circle();
  for (int n = 0; n <= 3; ++n) {
    int pairs = 0;
    for (int k = 0; k <= n; ++k) {
      int gens_k = 0;
      for (const auto& cl : c->cells())
        if (cl.dim == k) ++gens_k;
      pairs += gens_k * static_cast<int>(enumerate_degeneracies(n, k).size());
    }
    CHECK(c->level_size(n) == pairs);
    for (int x = 0; x < c->level_size(n); ++x) {
      const NF& s = c->nf(n, x);
      // the normal form denotes its element: acting by eta on the cell
      int k = c->cell(s.cell).dim;
      CHECK(c->act(k, c->cell_index(s.cell), s.eta) == x);
    }
  }
  // edge 00 of D^1 normalizes to (sigma_0, vertex 0)
  auto d1 = simplex(1, 2);
  int v0 = d1->cell_index(*d1->cell_by_name("0"));
  int x = d1->degen(0, 0, v0);
  CHECK(d1->nf(1, x).eta == Operator::degeneracy(0, 0));
  CHECK(d1->nf(1, x).cell == *d1->cell_by_name("0"));
}

TEST_CASE("loader rejects simplicial identity violations") {
  // a 2-cell whose faces violate d_0 d_1 = d_0 d_0
  std::vector<Cell> cells(4);
  cells[0] = {0, "a", {}};
  cells[1] = {0, "b", {}};
  cells[2] = {1,
              "e",
              {CellFace{Operator::identity(0), 0},
               CellFace{Operator::identity(0), 1}}};
  cells[3] = {2,
              "t",
              {CellFace{Operator::identity(1), 2},
               CellFace{Operator::identity(1), 2},
               CellFace{compose(Operator::degeneracy(0, 0),
                                Operator::identity(1)),
                        0}}};
  CHECK_THROWS_AS(SSet::from_cells("bad", cells, 2), error);
}

TEST_CASE("truncation and retabulation") {
  auto d2 = simplex(2, 2);
  auto t = SSet::truncate(d2, 1);
  CHECK_FALSE(t->complete());
  CHECK(t->cap() == 1);
  CHECK(t->level_size(1) == d2->level_size(1));
  CHECK_THROWS_AS(t->level_size(2), error);
  CHECK_THROWS_AS(SSet::tabulated(t, 3), error);
  auto d2big = SSet::tabulated(d2, 4);
  CHECK(d2big->level_size(2) == d2->level_size(2));
  // prefix stability of level enumeration under retabulation
  for (int n = 0; n <= 2; ++n)
    for (int x = 0; x < d2->level_size(n); ++x)
      CHECK(d2big->nf(n, x) == d2->nf(n, x));
}

TEST_CASE("from_tables roundtrip on the circle") {
  auto c = circle();
  std::vector<int> sizes;
  std::vector<std::vector<std::vector<int>>> faces(4), degens(4);
  for (int n = 0; n <= 3; ++n) sizes.push_back(c->level_size(n));
  for (int n = 1; n <= 3; ++n) {
    faces[n].assign(n + 1, {});
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < c->level_size(n); ++x)
        faces[n][i].push_back(c->face(n, i, x));
  }
  for (int n = 0; n < 3; ++n) {
    degens[n].assign(n + 1, {});
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < c->level_size(n); ++x)
        degens[n][i].push_back(c->degen(n, i, x));
  }
  auto r = SSet::from_tables("circle2", sizes, faces, degens, 1);
  CHECK(r->complete());
  CHECK(r->dim() == 1);
  CHECK(r->cell_count() == 2);
  CHECK(SSet::same(r, c));
  // claiming completeness at dim 0 must fail (the edge is nondegenerate)
  CHECK_THROWS_AS(SSet::from_tables("bad", sizes, faces, degens, 0), error);
}

TEST_CASE("simplicial maps validate against actions") {
  auto d1 = simplex(1, 2);
  auto d0 = simplex(0, 2);
  // collapse D^1 -> D^0
  std::vector<int> imgs(d1->cell_count());
  for (int c = 0; c < d1->cell_count(); ++c)
    imgs[c] = d1->cell(c).dim == 0 ? 0 : d0->level_size(1) - 1;
  CHECK_NOTHROW(SMap::from_cells(d1, d0, imgs));
  // a non-simplicial assignment: edge of D^1 to a degenerate edge with
  // mismatched endpoints in D^1 itself
  auto d1b = simplex(1, 2);
  std::vector<int> bad(d1->cell_count());
  bad[*d1->cell_by_name("0")] = d1b->cell_index(*d1b->cell_by_name("0"));
  bad[*d1->cell_by_name("1")] = d1b->cell_index(*d1b->cell_by_name("1"));
  bad[*d1->cell_by_name("01")] =
      d1b->degen(0, 0, d1b->cell_index(*d1b->cell_by_name("0")));
  CHECK_THROWS_AS(SMap::from_cells(d1, d1b, bad), error);
}

TEST_CASE("standard inclusions and classifying maps") {
  auto b2 = boundary(2, 2);
  auto d2 = simplex(2, 2);
  auto inc = standard_inclusion(b2, d2);
  CHECK(inc.levelwise_injective(2));
  CHECK(inc.complement(2).size() == 1);  // only the top cell is missed
  auto c = circle();
  int e = c->cell_index(1);
  auto cl = classifying_map(c, 1, e);
  CHECK(cl(1, cl.dom()->cell_index(*cl.dom()->cell_by_name("01"))) == e);
}
