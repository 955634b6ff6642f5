#include <doctest.h>

#include <set>

#include "coloop/errors.hpp"
#include "coloop/polytope/freehedron.hpp"
#include "coloop/polytope/goodwillie.hpp"
#include "hull_oracle.hpp"

using namespace coloop;
using namespace coloop::testing;

namespace {

std::vector<Point> coords(const std::vector<GoodwillieVertex>& vs) {
  std::vector<Point> out;
  for (const auto& v : vs) out.push_back(v.coordinates);
  return out;
}

NString S(const std::string& text) { return parse_nstring(text); }

}  // namespace

TEST_SUITE("polytope") {
  TEST_CASE("n-string text round trip and validity") {
    for (const char* t : {"{}0,1,2{}", "{0,1|1,3}3{3,4}", "{}0{0,1|1,2}", "{0,2}2{}"}) CHECK(to_string(S(t)) == t);
    CHECK(S("{ }0,1,2{ }") == top_string(2));
    CHECK_THROWS_AS(S("{}0,1{2}"), ValidationError);
    CHECK_THROWS_AS(S("{}1,2{}"), ValidationError);
    CHECK_THROWS_AS(S("0,1,2"), ValidationError);
    CHECK(S("{0,1|1,3}3{3,4}").dimension() == 0);
    CHECK(top_string(3).dimension() == 3);
  }

  TEST_CASE("face transformations") {
    auto top = top_string(2);
    CHECK(to_string(apply_transformation(top, {FaceKind::drop, 0, 1})) == "{}0,2{}");
    CHECK(to_string(apply_transformation(top, {FaceKind::right_outer_break, 0, 1})) == "{}0,1{1,2}");
    CHECK(to_string(apply_transformation(top, {FaceKind::left_outer_break, 0, 1})) == "{0,1}1,2{}");
    CHECK(to_string(apply_transformation(top, {FaceKind::left_outer_break, 0, 2})) == "{0,1,2}2{}");
    CHECK(to_string(apply_transformation(top, {FaceKind::right_outer_break, 0, 0})) == "{}0{0,1,2}");
    CHECK_THROWS_AS(apply_transformation(top, {FaceKind::drop, 0, 0}), ValidationError);
    CHECK_THROWS_AS(apply_transformation(top, {FaceKind::left_outer_break, 0, 0}), ValidationError);
    CHECK_THROWS_AS(apply_transformation(top, {FaceKind::right_outer_break, 0, 2}), ValidationError);
    for (int n = 1; n <= 4; ++n)
      for (const auto& s : enumerate_faces(n).faces)
        for (const auto& t : applicable_transformations(s)) {
          auto f = apply_transformation(s, t);
          CHECK(f.valid());
          CHECK(f.dimension() == s.dimension() - 1);
        }
  }

  TEST_CASE("the 2-dimensional freehedron") {
    auto P = enumerate_faces(2);
    CHECK(P.f_vector() == std::vector<std::size_t>{5, 5, 1});
    std::vector<std::string> facets;
    for (const auto& f : facet_labels(2)) facets.push_back(f.name(2) + " " + to_string(facet_string(2, f)));
    CHECK(facets == std::vector<std::string>{"C'_{0,2,2} {0,1}1,2{}", "C''_{0,2,2} {}0,1{1,2}",
                                             "C_{0,1,2} {}0{0,1,2}", "C_{1,1,2} {0,1,2}2{}", "C_{1,2,2} {}0,2{}"});
    std::set<std::string> vertices;
    for (auto v : P.of_dimension(0)) vertices.insert(to_string(P.faces[v]));
    CHECK(vertices ==
          std::set<std::string>{"{}0{0,1|1,2}", "{0,1}1{1,2}", "{0,1|1,2}2{}", "{}0{0,2}", "{0,2}2{}"});

    FreehedronCalculus F(2);
    CHECK(to_string(F.boundary(top_string(2))) ==
          "-{}0{0,1,2} + {}0,1{1,2} + {0,1}1,2{} + {0,1,2}2{} - {}0,2{}");

    auto labels = facet_labels(2);
    const auto& cp = labels[0];
    const auto& cpp = labels[1];
    const auto& c01 = labels[2];
    const auto& c11 = labels[3];
    const auto& c12 = labels[4];
    auto meet = [&](const FacetLabel& a, const FacetLabel& b) {
      auto r = intersect_with_facet(P, facet_string(2, a), b);
      return r ? to_string(*r) : std::string("none");
    };
    CHECK(meet(cp, cpp) == "{0,1}1{1,2}");
    CHECK(meet(cpp, c01) == "{}0{0,1|1,2}");
    CHECK(meet(cp, c11) == "{0,1|1,2}2{}");
    CHECK(meet(c01, c12) == "{}0{0,2}");
    CHECK(meet(c11, c12) == "{0,2}2{}");
    CHECK(meet(cp, c01) == "none");
    CHECK(meet(cpp, c11) == "none");

    auto xy = vertex_coordinates(P);
    CHECK(coordinates_string(xy.at(S("{0,1}1{1,2}"))) == "(1/2, 0)");
    CHECK(coordinates_string(xy.at(S("{}0{0,1|1,2}"))) == "(0, 0)");
    CHECK(coordinates_string(xy.at(S("{0,1|1,2}2{}"))) == "(1, 0)");
    CHECK(coordinates_string(xy.at(S("{}0{0,2}"))) == "(0, 1)");
    CHECK(coordinates_string(xy.at(S("{0,2}2{}"))) == "(1, 1)");
  }

  TEST_CASE("freehedron face counts") {
    std::vector<std::vector<std::size_t>> known{{5, 5, 1}, {12, 18, 8, 1}, {28, 56, 39, 11, 1}};
    for (int n = 2; n <= 6; ++n) {
      CAPTURE(n);
      auto P = enumerate_faces(n);
      auto f = P.f_vector();
      CHECK(f[n] == 1);
      CHECK(f[n - 1] == static_cast<std::size_t>(3 * n - 1));
      CHECK(facet_labels(n).size() == static_cast<std::size_t>(3 * n - 1));
      long euler = 0;
      for (int d = 0; d <= n; ++d) euler += (d % 2 == 0 ? 1 : -1) * static_cast<long>(f[d]);
      CHECK(euler == 1);
      if (n - 2 < static_cast<int>(known.size())) CHECK(f == known[n - 2]);
      std::set<NString> facets;
      for (const auto& l : facet_labels(n)) facets.insert(facet_string(n, l));
      std::set<NString> codim1;
      for (auto i : P.of_dimension(n - 1)) codim1.insert(P.faces[i]);
      CHECK(facets == codim1);
    }
  }

  TEST_CASE("every vertex has cube coordinates on the right facets") {
    for (int n = 2; n <= 4; ++n) {
      auto P = enumerate_faces(n);
      auto xy = vertex_coordinates(P);
      CHECK(xy.size() == P.f_vector()[0]);
      std::set<Point> distinct;
      for (const auto& [s, a] : xy) {
        distinct.insert(a);
        for (const auto& v : a) CHECK((v >= 0 && v <= 1));
      }
      CHECK(distinct.size() == xy.size());
    }
  }

  TEST_CASE("boundary squares to zero") {
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(n);
      FreehedronCalculus F(n);
      auto P = enumerate_faces(n);
      for (const auto& s : P.faces) {
        auto d = F.boundary(s);
        for (const auto& [v, t] : d) {
          CHECK(P.index.count(t) == 1);
          CHECK(t.dimension() == s.dimension() - 1);
        }
        CHECK(F.boundary(d).empty());
      }
    }
  }

  TEST_CASE("n-strings are the Q basis from 0 to n") {
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(n);
      FreehedronCalculus F(n);
      const auto& A = F.algebra();
      const auto& C = A.coalgebra();
      int first = C.index_of("0"), last = C.index_of(std::to_string(n));
      QComplex Q(A);
      std::set<NString> from_basis;
      for (int d = 0; d <= Q.basis().top(); ++d)
        for (const auto& g : Q.basis().at(d)) {
          if (g.left.source != first || g.right.target != last) continue;
          auto s = F.from_q(g);
          CHECK(s.dimension() == d);
          CHECK(F.to_q(s) == g);
          from_basis.insert(s);
        }
      auto P = enumerate_faces(n);
      CHECK(from_basis == std::set<NString>(P.faces.begin(), P.faces.end()));
      for (const auto& s : P.faces) {
        Chain<QGenerator> via_strings;
        for (const auto& [v, t] : F.boundary(s)) add_term(via_strings, F.to_q(t), v);
        CHECK(via_strings == Q.differential(F.to_q(s)));
      }
    }
  }

  TEST_CASE("codegeneracies") {
    auto a = codegeneracy(S("{}0{0,1|1,2}"), 1);
    CHECK(to_string(a.image) == "{}0{0,1}");
    CHECK(a.collapsed);
    auto b = codegeneracy(S("{}0,1{}"), 0);
    CHECK(to_string(b.image) == "{}0{}");
    CHECK_THROWS_AS(codegeneracy(top_string(2), 0), ValidationError);
    for (int n = 2; n <= 4; ++n) {
      auto P = enumerate_faces(n);
      auto Q = enumerate_faces(n - 1);
      for (auto v : P.of_dimension(0))
        for (int i = 0; i < n; ++i) {
          auto img = codegeneracy(P.faces[v], i).image;
          CHECK(img.valid());
          CHECK(img.is_vertex());
          CHECK(Q.index.count(img) == 1);
        }
      // endpoints of an edge map to equal or adjacent vertices
      for (auto e : P.of_dimension(1)) {
        const auto& ends = P.covers[e];
        REQUIRE(ends.size() == 2);
        for (int i = 0; i < n; ++i) {
          auto x = codegeneracy(P.faces[ends[0]], i).image;
          auto y = codegeneracy(P.faces[ends[1]], i).image;
          if (x == y) continue;
          bool adjacent = false;
          for (auto f : Q.of_dimension(1)) {
            std::set<std::size_t> c(Q.covers[f].begin(), Q.covers[f].end());
            if (c == std::set<std::size_t>{Q.index.at(x), Q.index.at(y)}) adjacent = true;
          }
          CHECK(adjacent);
        }
      }
    }
  }

  TEST_CASE("goodwillie counts") {
    for (int n = 2; n <= 6; ++n) {
      CAPTURE(n);
      std::size_t expected = static_cast<std::size_t>(n + 3) << (n - 2);
      CHECK(vertex_count(n) == expected);
      CHECK(facet_count(n) == expected);
      auto cells = prism_decomposition(n);
      CHECK(cells.size() == (std::size_t{1} << (n - 1)));
      for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& c = cells[i];
        CHECK(c.simplex_dim + c.cube_dim == n);
        CHECK(c.neighbours.size() == static_cast<std::size_t>(n - 1));
        for (auto j : c.neighbours) {
          const auto& nb = cells[j].neighbours;
          CHECK(std::find(nb.begin(), nb.end(), i) != nb.end());
        }
        for (auto r : {GoodwillieRegime::eps0, GoodwillieRegime::eps_quarter})
          CHECK(prism_vertices(n, c, r).size() == static_cast<std::size_t>(c.simplex_dim + 1) << c.cube_dim);
      }
    }
  }

  TEST_CASE("exact hull of the goodwillie polytope") {
    for (int n = 2; n <= 4; ++n) {
      CAPTURE(n);
      auto pts = coords(goodwillie_vertices(n, GoodwillieRegime::eps_quarter));
      auto hull = exact_hull(pts);
      std::size_t expected = static_cast<std::size_t>(n + 3) << (n - 2);
      CHECK(hull.facets.size() == expected);
      CHECK(hull.vertices.size() == pts.size());
      CHECK(pts.size() == expected);
    }
  }

  TEST_CASE("neighbouring prisms meet in a common facet") {
    auto on_facet = [](const Hull& h, const std::vector<Point>& pts) {
      for (const auto& f : h.facets) {
        bool all = true;
        for (const auto& p : pts) {
          Rational s = -f.back();
          for (std::size_t j = 0; j < p.size(); ++j) s += f[j] * p[j];
          all = all && s == 0;
        }
        if (all) return true;
      }
      return false;
    };
    for (int n = 2; n <= 4; ++n) {
      auto cells = prism_decomposition(n);
      std::vector<std::vector<Point>> verts;
      std::vector<Hull> hulls;
      for (const auto& c : cells) {
        verts.push_back(coords(prism_vertices(n, c, GoodwillieRegime::eps_quarter)));
        hulls.push_back(exact_hull(verts.back()));
        CHECK(affine_rank(verts.back()) == static_cast<std::size_t>(n));
        CHECK(hulls.back().vertices.size() == verts.back().size());
      }
      for (std::size_t i = 0; i < cells.size(); ++i) {
        std::set<Point> as(verts[i].begin(), verts[i].end());
        for (auto j : cells[i].neighbours) {
          std::vector<Point> shared;
          for (const auto& p : verts[j])
            if (as.count(p)) shared.push_back(p);
          CHECK(affine_rank(shared) == static_cast<std::size_t>(n - 1));
          CHECK(on_facet(hulls[i], shared));
          CHECK(on_facet(hulls[j], shared));
        }
      }
    }
  }

  TEST_CASE("rho maps onto the freehedron vertices") {
    for (int n = 2; n <= 5; ++n) {
      CAPTURE(n);
      auto pairs = rho_on_vertices(n);
      auto P = enumerate_faces(n);
      std::set<NString> hit;
      for (const auto& [v, s] : pairs) hit.insert(s);
      CHECK(hit.size() == P.f_vector()[0]);
      CHECK(pairs.size() == vertex_count(n));
    }
  }

  TEST_CASE("out of range dimensions") {
    CHECK_THROWS_AS(enumerate_faces(0), ValidationError);
    CHECK_THROWS_AS(enumerate_faces(max_freehedron_dimension + 1), ValidationError);
    CHECK_THROWS_AS(goodwillie_vertices(1, GoodwillieRegime::eps0), ValidationError);
  }
}
