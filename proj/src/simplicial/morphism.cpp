#include "coloop/simplicial/morphism.hpp"

#include "coloop/errors.hpp"

namespace coloop {

namespace {

using Pair = std::pair<int, int>;

const LinearImage& image(const CoalgebraMorphism& f, int c) { return f.f0.at(c); }

}  // namespace

int CoalgebraMorphism::object_image(int x) const {
  const auto& img = f0.at(x);
  if (img.size() != 1 || img[0].second != 1 || target->degree(img[0].first) != 0)
    throw ValidationError("morphism: object '" + source->label(x) + "' is not sent to an object");
  return img[0].first;
}

std::vector<IdentityCheck> validate_morphism(const CoalgebraMorphism& f) {
  if (!f.source || !f.target) throw ValidationError("morphism: missing coalgebra");
  const auto& C = *f.source;
  const auto& D = *f.target;
  if (static_cast<int>(f.f0.size()) != C.size() || static_cast<int>(f.f1bar.size()) != C.size())
    throw ValidationError("morphism: f0/f1 do not match the source basis size");

  IdentityCheck shape{"f0 preserves degree and objects", true, ""};
  IdentityCheck coalg{"f0 is a coalgebra map", true, ""};
  IdentityCheck bicomod{"f1 is a bicomodule map", true, ""};
  IdentityCheck e1{"f0 d = d' f0 + (f1bar (x) f0)(Delta - Delta^op)", true, ""};
  IdentityCheck e2{"h' f0 = h - f1bar d - (f1bar (x) f1bar) Delta", true, ""};
  auto fail = [](IdentityCheck& chk, const std::string& where) {
    if (chk.passed) {
      chk.passed = false;
      chk.detail = "fails at " + where;
    }
  };

  for (int c = 0; c < C.size(); ++c) {
    const std::string& name = C.label(c);
    for (const auto& [t, v] : image(f, c))
      if (t < 0 || t >= D.size() || D.degree(t) != C.degree(c)) fail(shape, name);
    if (C.degree(c) == 0) {
      const auto& img = image(f, c);
      if (img.size() != 1 || img[0].second != 1) fail(shape, name);
    }
    if (f.f1bar[c] != 0 && C.degree(c) != 1) fail(bicomod, name);
    if (!shape.passed) continue;

    // Delta' f0 = (f0 (x) f0) Delta
    Chain<Pair> lhs, rhs;
    for (const auto& [t, v] : image(f, c))
      for (const auto& term : D.coproduct(t)) add_term(lhs, Pair{term.left, term.right}, v * term.coef);
    for (const auto& term : C.coproduct(c))
      for (const auto& [a, va] : image(f, term.left))
        for (const auto& [b, vb] : image(f, term.right)) add_term(rhs, Pair{a, b}, term.coef * va * vb);
    if (lhs != rhs) fail(coalg, name);

    if (f.f1bar[c] != 0 && f.object_image(C.source(c)) != f.object_image(C.target(c))) fail(bicomod, name);

    // E1
    Chain<int> left, right;
    for (const auto& [t, v] : C.boundary(c))
      for (const auto& [u, w] : image(f, t)) add_term(left, u, v * w);
    for (const auto& [t, v] : image(f, c))
      for (const auto& [u, w] : D.boundary(t)) add_term(right, u, v * w);
    for (const auto& term : C.coproduct(c)) {
      if (f.f1bar[term.left] != 0)
        for (const auto& [u, w] : image(f, term.right)) add_term(right, u, term.coef * f.f1bar[term.left] * w);
      if (f.f1bar[term.right] != 0)
        for (const auto& [u, w] : image(f, term.left))
          add_term(right, u,
                   Integer(-term.coef * f.f1bar[term.right] * w *
                           koszul(C.degree(term.left) * C.degree(term.right))));
    }
    if (left != right) fail(e1, name);

    // E2
    if (C.degree(c) == 2) {
      Integer lhs2 = 0;
      for (const auto& [t, v] : image(f, c)) lhs2 += v * D.curvature(t);
      Integer rhs2 = C.curvature(c);
      for (const auto& [t, v] : C.boundary(c)) rhs2 -= v * f.f1bar[t];
      for (const auto& term : C.coproduct(c))
        rhs2 -= term.coef * f.f1bar[term.left] * f.f1bar[term.right] * koszul(C.degree(term.left));
      if (lhs2 != rhs2) fail(e2, name);
    }
  }
  return {shape, coalg, bicomod, e1, e2};
}

CoalgebraMorphism identity_morphism(const CategoricalCoalgebra& C) {
  CoalgebraMorphism f{&C, &C, {}, std::vector<Integer>(C.size(), Integer(0))};
  for (int c = 0; c < C.size(); ++c) f.f0.push_back({{c, Integer(1)}});
  return f;
}

CoalgebraMorphism compose_morphisms(const CoalgebraMorphism& g, const CoalgebraMorphism& f) {
  if (f.target != g.source) throw ValidationError("compose_morphisms: target of f is not the source of g");
  const auto& C = *f.source;
  CoalgebraMorphism h{f.source, g.target, {}, {}};
  for (int c = 0; c < C.size(); ++c) {
    std::map<int, Integer> acc;
    Integer bar = f.f1bar[c];
    for (const auto& [t, v] : f.f0[c]) {
      for (const auto& [u, w] : g.f0.at(t)) {
        auto [it, fresh] = acc.emplace(u, v * w);
        if (!fresh) it->second += v * w;
      }
      bar += v * g.f1bar.at(t);
    }
    h.f0.push_back(normalize_image(std::move(acc)));
    h.f1bar.push_back(bar);
  }
  return h;
}

CoalgebraMorphism collapse_to_point(const CategoricalCoalgebra& C, const CategoricalCoalgebra& point) {
  if (point.objects().size() != 1 || point.size() != 1)
    throw ValidationError("collapse_to_point: target must be the point coalgebra");
  CoalgebraMorphism f{&C, &point, {}, std::vector<Integer>(C.size(), Integer(0))};
  for (int c = 0; c < C.size(); ++c)
    f.f0.push_back(C.degree(c) == 0 ? LinearImage{{0, Integer(1)}} : LinearImage{});
  return f;
}

bool operator==(const CoalgebraMorphism& a, const CoalgebraMorphism& b) {
  return a.source == b.source && a.target == b.target && a.f0 == b.f0 && a.f1bar == b.f1bar;
}

}  // namespace coloop
