// One PASS/FAIL line per acceptance criterion. All comparisons are exact
// (integer or rational equality); the only argument is the path of the CLI
// binary, used by the determinism criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "coloop/cyclic/equivariant.hpp"
#include "coloop/homalg/contraction.hpp"
#include "coloop/polytope/freehedron.hpp"
#include "coloop/polytope/goodwillie.hpp"
#include "coloop/simplicial/builtins.hpp"
#include "hull_oracle.hpp"

using namespace coloop;
using coloop::testing::Point;

namespace {

constexpr int window_hi = 6;

struct Outcome {
  bool passed = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) note = what;
    passed = passed && ok;
  }
  void require(const std::vector<IdentityCheck>& checks, const std::string& where) {
    for (const auto& c : checks) require(c.passed, where + ": " + c.name + " " + c.detail);
  }
};

struct Space {
  std::string uri;
  SimplicialSet X;
};

std::vector<Space> identity_spaces() {
  std::vector<Space> out;
  for (const char* uri : {"builtin:point", "builtin:simplex/2", "builtin:simplex/3", "builtin:sphere/2",
                          "builtin:sphere/3", "builtin:wedge/2,2", "builtin:wedge/2,3"})
    out.push_back({uri, load_simplicial_set(uri)});
  return out;
}

IdentityCheck square_check(const std::string& name, const ChainComplexWindow& w) {
  auto bad = w.first_square_failure();
  return {name, !bad, bad ? "degree " + std::to_string(*bad) : ""};
}

using Profile = std::vector<std::pair<std::size_t, std::vector<Integer>>>;

Profile profile(const HomologyResult& h, int lo, int hi) {
  Profile out;
  for (int n = lo; n <= hi; ++n) {
    const auto* d = h.at(n);
    if (!d) return {};
    out.emplace_back(d->betti, d->torsion);
  }
  return out;
}

std::string profile_string(const Profile& p) {
  std::string s;
  for (const auto& [b, t] : p) {
    if (!s.empty()) s += ",";
    s += std::to_string(b);
    for (const auto& v : t) s += "+Z/" + v.get_str();
  }
  return "(" + s + ")";
}

Outcome identity_suite() {
  Outcome o;
  for (const auto& [uri, X] : identity_spaces()) {
    auto C = categorical_coalgebra(X);
    CobarAlgebra A(C, window_hi + 1);
    o.require(!A.truncated(), uri + " truncated");
    for (int x : C.objects())
      for (int y : C.objects()) o.require({square_check("D^2 = 0", A.hom_complex(x, y))}, uri);
    o.require({square_check("bar d^2 = 0", BarComplex(A).complex())}, uri);
    o.require({square_check("d_Q^2 = 0", QComplex(A).complex())}, uri);
    HochschildComplex hoch(A);
    CoHochschildComplex cohoch(A);
    o.require({square_check("delta^2 = 0", hoch.complex())}, uri);
    o.require({square_check("d^2 = 0", cohoch.complex())}, uri);
    o.require(verify_mixed(as_mixed(hoch)), uri + " (Hoch, delta, B)");
    o.require(verify_mixed(as_mixed(cohoch)), uri + " (coHoch, d, P)");
  }
  return o;
}

Outcome contraction_suite() {
  Outcome o;
  for (const auto& [uri, X] : identity_spaces()) {
    auto C = categorical_coalgebra(X);
    CobarAlgebra A(C, window_hi + 1);
    o.require(contraction_checks(A), uri);
  }
  return o;
}

Outcome koszul_oracle() {
  Outcome o;
  for (const char* uri : {"builtin:sphere/2", "builtin:sphere/3", "builtin:wedge/2,2"}) {
    auto C = categorical_coalgebra(load_simplicial_set(uri));
    CobarAlgebra A(C, window_hi + 1);
    auto h = homology_window(HochschildComplex(A).complex(), RingSpec::integers());
    auto c = homology_window(CoHochschildComplex(A).complex(), RingSpec::integers());
    auto ph = profile(h, 0, window_hi), pc = profile(c, 0, window_hi);
    o.require(!ph.empty() && !pc.empty(), std::string(uri) + ": window not reliable");
    o.require(ph == pc, std::string(uri) + ": Hoch " + profile_string(ph) + " vs coHoch " + profile_string(pc));
    o.require(h.all_certified() && c.all_certified(), std::string(uri) + ": not certified");
  }
  return o;
}

Outcome loop_space_oracle() {
  Outcome o;
  auto C = categorical_coalgebra(sphere_set(3));
  CobarAlgebra A(C, window_hi + 1);
  auto p = profile(homology_window(CoHochschildComplex(A).complex(), RingSpec::integers()), 0, window_hi);
  Profile want;
  for (std::size_t b : {1, 0, 1, 1, 1, 1, 1}) want.emplace_back(b, std::vector<Integer>{});
  o.require(p == want, "got " + profile_string(p));
  return o;
}

Outcome equivariant_oracle() {
  Outcome o;
  auto point = equivariant_homology(categorical_coalgebra(point_set()), 8, RingSpec::integers());
  auto p = profile(point.homology, 0, 8);
  Profile want;
  for (int n = 0; n <= 8; ++n) want.emplace_back(n % 2 == 0 ? 1 : 0, std::vector<Integer>{});
  o.require(p == want && point.homology.all_certified(), "point: " + profile_string(p));

  auto S2 = categorical_coalgebra(sphere_set(2));
  CyclicVariantSpec positive;
  auto co = cyclic_homology(S2, positive, 0, 4, RingSpec::rationals(), {}, MixedSide::cohoch);
  auto ho = cyclic_homology(S2, positive, 0, 4, RingSpec::rationals(), {}, MixedSide::hoch);
  auto pc = profile(co.homology, 0, 4), ph = profile(ho.homology, 0, 4);
  o.require(!pc.empty() && pc == ph, "sphere/2: coHoch " + profile_string(pc) + " vs Hoch " + profile_string(ph));
  return o;
}

Outcome mixed_map_suite() {
  Outcome o;
  bool alpha_fails_somewhere = false;
  for (const auto& [uri, X] : identity_spaces()) {
    auto r = check_mixed_map_pi(categorical_coalgebra(X), window_hi + 1);
    o.require(r.checks, uri);
    if (!r.alpha_intertwines) alpha_fails_somewhere = true;
  }
  o.require(alpha_fails_somewhere, "alpha-bar intertwines B and P on every test coalgebra");
  return o;
}

Outcome polytope_suite() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    auto P = enumerate_faces(n);
    o.require(P.f_vector()[n - 1] == static_cast<std::size_t>(3 * n - 1), "F_" + std::to_string(n) + " facet count");
    std::size_t formula = static_cast<std::size_t>(n + 3) << (n - 2);
    o.require(vertex_count(n) == formula, "G_" + std::to_string(n) + " vertex count");
    o.require(facet_count(n) == formula, "G_" + std::to_string(n) + " facet count");
    auto cells = prism_decomposition(n);
    o.require(cells.size() == (std::size_t{1} << (n - 1)), "prism count");
    for (const auto& c : cells) o.require(c.neighbours.size() == static_cast<std::size_t>(n - 1), "prism adjacency");
  }
  for (int n = 2; n <= 4; ++n) {
    std::vector<Point> pts;
    for (const auto& v : goodwillie_vertices(n, GoodwillieRegime::eps_quarter)) pts.push_back(v.coordinates);
    auto hull = testing::exact_hull(pts);
    std::size_t formula = static_cast<std::size_t>(n + 3) << (n - 2);
    o.require(hull.facets.size() == formula && hull.vertices.size() == formula,
              "hull oracle G_" + std::to_string(n) + ": " + std::to_string(hull.vertices.size()) + " vertices, " +
                  std::to_string(hull.facets.size()) + " facets");
    auto cells = prism_decomposition(n);
    std::vector<std::vector<Point>> verts;
    std::vector<testing::Hull> hulls;
    for (const auto& c : cells) {
      std::vector<Point> vs;
      for (const auto& v : prism_vertices(n, c, GoodwillieRegime::eps_quarter)) vs.push_back(v.coordinates);
      hulls.push_back(testing::exact_hull(vs));
      verts.push_back(std::move(vs));
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (auto j : cells[i].neighbours) {
        std::set<Point> a(verts[i].begin(), verts[i].end());
        std::vector<Point> shared;
        for (const auto& p : verts[j])
          if (a.count(p)) shared.push_back(p);
        bool on_both = true;
        for (const auto* h : {&hulls[i], &hulls[j]}) {
          bool found = false;
          for (const auto& f : h->facets) {
            bool all = true;
            for (const auto& p : shared) {
              Rational s = -f.back();
              for (std::size_t k = 0; k < p.size(); ++k) s += f[k] * p[k];
              all = all && s == 0;
            }
            found = found || all;
          }
          on_both = on_both && found;
        }
        o.require(testing::affine_rank(shared) == static_cast<std::size_t>(n - 1) && on_both,
                  "prisms " + std::to_string(i) + ", " + std::to_string(j) + " do not share a facet");
      }
  }
  for (int n = 1; n <= 5; ++n) {
    FreehedronCalculus F(n);
    for (const auto& s : enumerate_faces(n).faces)
      o.require(F.boundary(F.boundary(s)).empty(), "d_F^2 != 0 on " + to_string(s));
  }
  for (int n = 1; n <= 4; ++n) {
    FreehedronCalculus F(n);
    const auto& C = F.algebra().coalgebra();
    int first = C.index_of("0"), last = C.index_of(std::to_string(n));
    QComplex Q(F.algebra());
    std::set<NString> strings;
    for (int d = 0; d <= Q.basis().top(); ++d)
      for (const auto& g : Q.basis().at(d))
        if (g.left.source == first && g.right.target == last) {
          auto s = F.from_q(g);
          o.require(F.to_q(s) == g && s.dimension() == d, "string/Q bijection at " + to_string(s));
          strings.insert(s);
        }
    auto P = enumerate_faces(n);
    o.require(strings == std::set<NString>(P.faces.begin(), P.faces.end()), "Q basis is not the face set");
    for (const auto& s : P.faces) {
      Chain<QGenerator> image;
      for (const auto& [v, t] : F.boundary(s)) add_term(image, F.to_q(t), v);
      o.require(image == Q.differential(F.to_q(s)), "d_F and d_Q differ on " + to_string(s));
    }
  }
  {
    auto P = enumerate_faces(2);
    std::vector<std::string> got;
    for (const auto& f : facet_labels(2)) got.push_back(f.name(2) + "=" + to_string(facet_string(2, f)));
    std::vector<std::string> want{"C'_{0,2,2}={0,1}1,2{}", "C''_{0,2,2}={}0,1{1,2}", "C_{0,1,2}={}0{0,1,2}",
                                  "C_{1,1,2}={0,1,2}2{}", "C_{1,2,2}={}0,2{}"};
    o.require(got == want, "facet labels of F_2");
    std::set<std::string> vertices;
    for (auto v : P.of_dimension(0)) vertices.insert(to_string(P.faces[v]));
    o.require(vertices == std::set<std::string>{"{}0{0,1|1,2}", "{0,1}1{1,2}", "{0,1|1,2}2{}", "{}0{0,2}",
                                                "{0,2}2{}"},
              "vertex labels of F_2");
    o.require(P.f_vector() == std::vector<std::size_t>{5, 5, 1}, "f-vector of F_2");
  }
  return o;
}

std::string capture(const std::string& command) {
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.require(false, "no CLI path given");
    return o;
  }
  for (const char* args : {"loops builtin:wedge/2,3 --format json", "cyclic builtin:sphere/2 --ring q --format json",
                           "verify builtin:sphere/2 --max-degree 5 --format json",
                           "polytope freehedron 3 --faces --poset --format json"}) {
    std::string cmd = "'" + cli + "' " + args + " 2>/dev/null";
    auto a = capture(cmd), b = capture(cmd);
    o.require(!a.empty() && a == b, std::string("output differs: ") + args);
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    const char* name;
    const char* tolerance;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"identity suite", "exact matrix equality", identity_suite},
      {"contraction suite", "exact matrix equality", contraction_suite},
      {"Hoch/coHoch agreement", "exact Betti and torsion", koszul_oracle},
      {"loop homology of S^3", "exact Betti and torsion", loop_space_oracle},
      {"equivariant homology", "exact Betti and torsion", equivariant_oracle},
      {"mixed-map suite", "exact matrix equality", mixed_map_suite},
      {"polytope suite", "exact integer and rational equality", polytope_suite},
      {"determinism", "byte-identical JSON", [&] { return determinism(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << "criterion " << i + 1 << " " << criteria[i].name << ": " << (o.passed ? "PASS" : "FAIL")
         << " [tolerance: " << criteria[i].tolerance << "] (" << secs << " s)";
    if (!o.passed) line << " -- " << o.note;
    std::cout << line.str() << std::endl;
    if (!o.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
