#include <doctest.h>

#include "coloop/errors.hpp"
#include "coloop/simplicial/builtins.hpp"
#include "coloop/simplicial/chains.hpp"
#include "coloop/simplicial/coalgebra.hpp"

using namespace coloop;

namespace {

std::vector<std::size_t> bettis(const SimplicialSet& X, int hi) {
  auto h = homology_window(normalized_chains(X, 0, hi), RingSpec::integers());
  std::vector<std::size_t> out;
  for (int n = 0; n <= hi; ++n) out.push_back(h.at(n)->betti);
  return out;
}

const std::string data_dir = COLOOP_TEST_DATA;

}  // namespace

TEST_SUITE("simplicial") {
  TEST_CASE("builtin shapes") {
    CHECK(point_set().size() == 1);
    CHECK(sphere_set(3).size() == 2);
    CHECK(simplex_set(2).size() == 7);
    CHECK(simplex_set(3).size() == 15);
    CHECK(wedge_set({2, 3}).size() == 3);
    CHECK(sphere_set(2).one_reduced());
    CHECK_FALSE(simplex_set(2).one_reduced());
    CHECK_THROWS_AS(sphere_set(0), ValidationError);
    CHECK_THROWS_AS(load_simplicial_set("builtin:torus"), ValidationError);
    CHECK(load_simplicial_set("builtin:wedge/2,2").of_dimension(2).size() == 2);
  }

  TEST_CASE("normalized chains compute ordinary homology") {
    CHECK(bettis(point_set(), 3) == std::vector<std::size_t>{1, 0, 0, 0});
    CHECK(bettis(sphere_set(2), 3) == std::vector<std::size_t>{1, 0, 1, 0});
    CHECK(bettis(sphere_set(3), 4) == std::vector<std::size_t>{1, 0, 0, 1, 0});
    CHECK(bettis(simplex_set(3), 3) == std::vector<std::size_t>{1, 0, 0, 0});
    CHECK(bettis(wedge_set({2, 2, 3}), 3) == std::vector<std::size_t>{1, 0, 2, 1});
    auto rp2 = load_simplicial_set(data_dir + "/rp2.json");
    auto h = homology_window(normalized_chains(rp2, 0, 2), RingSpec::integers());
    CHECK(h.at(1)->betti == 0);
    CHECK(h.at(1)->torsion == std::vector<Integer>{2});
    CHECK(h.at(2)->betti == 0);
  }

  TEST_CASE("alexander-whitney terms with degenerate factors vanish") {
    auto S = sphere_set(2);
    CHECK(aw_coproduct(S, S.of_dimension(2).front()).size() == 2);
    auto D = simplex_set(2);
    CHECK(aw_coproduct(D, D.of_dimension(2).front()).size() == 3);
    auto D3 = simplex_set(3);
    CHECK(aw_coproduct(D3, D3.of_dimension(3).front()).size() == 4);
  }

  TEST_CASE("json round trip") {
    for (const auto& X : {point_set(), sphere_set(2), simplex_set(2), wedge_set({2, 3})}) {
      auto Y = parse_simplicial_set_json(simplicial_set_to_json(X));
      CHECK(Y.size() == X.size());
      CHECK(simplicial_set_to_json(Y) == simplicial_set_to_json(X));
    }
  }

  TEST_CASE("invalid input is rejected") {
    CHECK_THROWS_AS(load_simplicial_set(data_dir + "/bad_face.json"), ValidationError);
    CHECK_THROWS_AS(load_simplicial_set(data_dir + "/missing.json"), ValidationError);
    CHECK_THROWS_AS(parse_simplicial_set_json("{"), ValidationError);
    CHECK_THROWS_AS(parse_simplicial_set_json(R"({"simplices": [[{"id": "v"}], [{"id": "e", "faces": [{"target": "v"}]}]]})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_simplicial_set_json(R"({"simplices": [[{"id": "v"}], [{"id": "e", "faces": [{"target": "w"}, {"target": "v"}]}]]})"),
                    ValidationError);
  }

  TEST_CASE("coalgebra axioms hold on the builtins") {
    for (const auto& X : {point_set(), sphere_set(2), sphere_set(3), simplex_set(2), simplex_set(3), wedge_set({2, 3})}) {
      auto C = categorical_coalgebra(X);
      CHECK(C.axiom_failures().empty());
      CHECK_FALSE(C.curved());
    }
    for (int n = 1; n <= 4; ++n) CHECK(simplex_coalgebra(n).axiom_failures().empty());
  }

  TEST_CASE("a loop edge with a degenerate face produces curvature") {
    auto C = categorical_coalgebra(load_simplicial_set(data_dir + "/rp2.json"));
    CHECK(C.axiom_failures().empty());
    REQUIRE(C.curved());
    int t = C.index_of("t");
    CHECK(C.curvature(t) == 1);
  }

  TEST_CASE("from_data rejects a broken coproduct") {
    std::vector<CategoricalCoalgebra::Element> el{{"x", 0, 0, 0}, {"a", 1, 0, 0}};
    std::vector<std::vector<CoproductTerm>> good{{{1, 0, 0}}, {{1, 0, 1}, {1, 1, 0}}};
    std::vector<std::vector<CoproductTerm>> bad{{{1, 0, 0}}, {{1, 0, 1}}};
    std::vector<LinearImage> d{{}, {}};
    std::vector<Integer> h{0, 0};
    CHECK_NOTHROW(CategoricalCoalgebra::from_data("ok", el, good, d, h));
    CHECK_THROWS_AS(CategoricalCoalgebra::from_data("bad", el, bad, d, h), IdentityFailure);
  }
}
