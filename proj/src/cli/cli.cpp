#include "coloop/cli/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "coloop/cyclic/equivariant.hpp"
#include "coloop/errors.hpp"
#include "coloop/homalg/contraction.hpp"
#include "coloop/polytope/freehedron.hpp"
#include "coloop/polytope/goodwillie.hpp"
#include "coloop/simplicial/builtins.hpp"
#include "coloop/simplicial/coalgebra.hpp"

namespace coloop::cli {

using nlohmann::json;

void JobConfig::validate() const {
  if (lo < 0 || lo > hi) throw ValidationError("window must satisfy 0 <= lo <= hi");
  if (hi > 40) throw ValidationError("max degree above 40 is not supported");
  if (!word_cap.automatic && word_cap.value <= 0) throw ValidationError("word cap must be positive");
  if (u_truncation < 0 || u_truncation > 20) throw ValidationError("u truncation must lie in [0, 20]");
}

namespace {

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

struct Loaded {
  SimplicialSet X;
  CategoricalCoalgebra C;
};

Loaded load(const JobConfig& cfg) {
  SimplicialSet X = load_simplicial_set(cfg.input);
  CategoricalCoalgebra C = categorical_coalgebra(X);
  return {std::move(X), std::move(C)};
}

json header(const JobConfig& cfg) {
  json doc;
  doc["command"] = cfg.command;
  doc["input"] = cfg.input;
  doc["ring"] = cfg.ring.name();
  doc["window"] = {cfg.lo, cfg.hi};
  doc["warnings"] = json::array();
  return doc;
}

std::string header_line(const JobConfig& cfg) {
  return cfg.command + " " + cfg.input + "  ring " + cfg.ring.name() + "  window [" + std::to_string(cfg.lo) + ", " +
         std::to_string(cfg.hi) + "]\n";
}

CommandOutput homology_output(const JobConfig& cfg, const HomologyResult& H, const std::vector<std::string>& warnings,
                              const std::string& quantity) {
  CommandOutput out;
  out.doc = header(cfg);
  out.doc["quantity"] = quantity;
  for (const auto& w : warnings) out.doc["warnings"].push_back(w);
  out.doc["results"] = json::array();
  std::ostringstream table;
  table << header_line(cfg) << quantity << "\n";
  table << std::left << std::setw(8) << "degree" << std::setw(8) << "betti" << std::setw(24) << "torsion"
        << "certified\n";
  bool uncertified = false;
  for (const auto& d : H.degrees) {
    if (d.degree < cfg.lo || d.degree > cfg.hi) continue;
    json torsion = json::array();
    std::string tors;
    for (const auto& t : d.torsion) {
      torsion.push_back(integer_json(t));
      tors += (tors.empty() ? "Z/" : " + Z/") + t.get_str();
    }
    out.doc["results"].push_back({{"degree", d.degree}, {"betti", d.betti}, {"torsion", torsion},
                                  {"certified", d.certified}});
    table << std::setw(8) << d.degree << std::setw(8) << d.betti << std::setw(24) << (tors.empty() ? "-" : tors)
          << (d.certified ? "yes" : "no") << "\n";
    uncertified = uncertified || !d.certified;
  }
  for (const auto& w : warnings) table << "warning: " << w << "\n";
  out.table = table.str();
  if (uncertified && !cfg.allow_truncated) {
    out.exit_code = exit_uncertified;
    out.error = "result is not certified";
    for (const auto& w : warnings) out.error += "\n  " + w;
    out.error += "\nrerun with --allow-truncated to print uncertified degrees";
  }
  return out;
}

json check_json(const IdentityCheck& c) { return {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}}; }

IdentityCheck square_check(const std::string& name, const ChainComplexWindow& K) {
  auto bad = K.first_square_failure();
  if (!bad) return {name, true, ""};
  return {name, false, "d^2 != 0 leaving degree " + std::to_string(*bad)};
}

}  // namespace

CommandOutput cmd_loops(const JobConfig& cfg) {
  cfg.validate();
  Loaded in = load(cfg);
  CobarAlgebra A(in.C, cfg.hi + 1, cfg.word_cap);
  CoHochschildComplex K(A);
  return homology_output(cfg, homology_window(K.complex(), cfg.ring), A.warnings(), "H_*(coHoch)");
}

CommandOutput cmd_equivariant(const JobConfig& cfg) {
  cfg.validate();
  Loaded in = load(cfg);
  auto r = equivariant_homology(in.C, cfg.hi, cfg.ring, cfg.word_cap);
  return homology_output(cfg, r.homology, r.warnings, "H^S1_*(positive cyclic of coHoch)");
}

CommandOutput cmd_cyclic(const JobConfig& cfg) {
  cfg.validate();
  CyclicVariant v = parse_variant(cfg.variant);
  if (v != CyclicVariant::positive && v != CyclicVariant::negative && v != CyclicVariant::periodic)
    throw ValidationError("cyclic homology is reported for the positive, negative and periodic variants only");
  MixedSide side;
  if (cfg.side == "cohoch")
    side = MixedSide::cohoch;
  else if (cfg.side == "hoch")
    side = MixedSide::hoch;
  else
    throw ValidationError("side must be cohoch or hoch");
  Loaded in = load(cfg);
  auto r = cyclic_homology(in.C, {v, cfg.u_truncation}, cfg.lo, cfg.hi, cfg.ring, cfg.word_cap, side);
  CommandOutput out = homology_output(cfg, r.homology, r.warnings,
                                      variant_token(v) + " cyclic homology of " + cfg.side + " (" + variant_name(v) + ")");
  out.doc["variant"] = variant_token(v);
  out.doc["side"] = cfg.side;
  if (v != CyclicVariant::positive) out.doc["u_truncation"] = cfg.u_truncation;
  return out;
}

CommandOutput cmd_polytope(const JobConfig& cfg) {
  CommandOutput out;
  json& doc = out.doc;
  doc["command"] = "polytope";
  doc["family"] = cfg.family;
  doc["n"] = cfg.n;
  doc["warnings"] = json::array();
  std::ostringstream table;
  bool counts = cfg.counts || (!cfg.faces && !cfg.poset);
  if (cfg.family == "freehedron") {
    FacePoset P = enumerate_faces(cfg.n);
    auto f = P.f_vector();
    doc["f_vector"] = f;
    doc["facets"] = cfg.n >= 1 ? f[cfg.n - 1] : 0;
    doc["vertices"] = f[0];
    table << "freehedron F_" << cfg.n << "\n";
    if (counts || cfg.faces) {
      table << "cells by dimension:";
      for (int d = cfg.n; d >= 0; --d) table << " " << d << ":" << f[d];
      table << "\n";
    }
    if (cfg.faces) {
      json faces = json::array();
      for (int d = cfg.n; d >= 0; --d) {
        json level = json::array();
        table << "dimension " << d << ":";
        for (std::size_t i : P.of_dimension(d)) {
          level.push_back(to_string(P.faces[i]));
          table << " " << to_string(P.faces[i]);
        }
        table << "\n";
        faces.push_back({{"dimension", d}, {"strings", level}});
      }
      doc["faces"] = faces;
    }
    if (cfg.poset) {
      json edges = json::array();
      for (std::size_t i = 0; i < P.faces.size(); ++i)
        for (std::size_t j : P.covers[i]) {
          edges.push_back({to_string(P.faces[i]), to_string(P.faces[j])});
          table << to_string(P.faces[i]) << " > " << to_string(P.faces[j]) << "\n";
        }
      doc["poset"] = edges;
    }
  } else if (cfg.family == "goodwillie") {
    auto cells = prism_decomposition(cfg.n);
    doc["vertices"] = vertex_count(cfg.n);
    doc["facets"] = facet_count(cfg.n);
    doc["prisms"] = cells.size();
    table << "Goodwillie polytope G_" << cfg.n << "\n";
    if (counts)
      table << "vertices " << vertex_count(cfg.n) << "  facets " << facet_count(cfg.n) << "  prisms " << cells.size()
            << "\n";
    if (cfg.faces) {
      json vertices = json::array();
      for (const auto& v : goodwillie_vertices(cfg.n, GoodwillieRegime::eps_quarter)) {
        vertices.push_back(coordinates_string(v.coordinates));
        table << "vertex " << coordinates_string(v.coordinates) << "\n";
      }
      doc["vertex_list"] = vertices;
    }
    if (cfg.faces || cfg.poset) {
      json prisms = json::array();
      for (const auto& c : cells) {
        std::string type = "D" + std::to_string(c.simplex_dim) + "xI" + std::to_string(c.cube_dim);
        prisms.push_back({{"S", c.S}, {"type", type}, {"neighbours", c.neighbours}});
        table << "prism S={";
        for (std::size_t i = 0; i < c.S.size(); ++i) table << (i ? "," : "") << c.S[i];
        table << "} " << type << "\n";
      }
      doc["prism_cells"] = prisms;
    }
  } else {
    throw ValidationError("polytope family must be freehedron or goodwillie");
  }
  out.table = table.str();
  return out;
}

CommandOutput cmd_verify(const JobConfig& cfg) {
  cfg.validate();
  Loaded in = load(cfg);
  int top = std::max(cfg.hi, 1);
  CobarAlgebra A(in.C, top, cfg.word_cap);
  std::vector<IdentityCheck> checks;

  IdentityCheck cobar{"D^2 = 0 on every morphism complex", true, ""};
  for (int x : in.C.objects())
    for (int y : in.C.objects())
      if (cobar.passed) {
        auto c = square_check("", A.hom_complex(x, y));
        if (!c.passed) {
          cobar.passed = false;
          cobar.detail = in.C.label(x) + " -> " + in.C.label(y) + ": " + c.detail;
        }
      }
  checks.push_back(cobar);
  checks.push_back(square_check("d_B^2 = 0 on B(A,A,A)", BarComplex(A).complex()));
  checks.push_back(square_check("d_Q^2 = 0 on Q(A,C,A)", QComplex(A).complex()));
  HochschildComplex hoch(A);
  CoHochschildComplex cohoch(A);
  checks.push_back(square_check("delta^2 = 0 on Hoch", hoch.complex()));
  checks.push_back(square_check("d^2 = 0 on coHoch", cohoch.complex()));
  for (auto c : contraction_checks(A)) checks.push_back(c);
  for (auto c : verify_mixed(as_mixed(hoch))) {
    c.name = "Hoch: " + c.name;
    checks.push_back(c);
  }
  for (auto c : verify_mixed(as_mixed(cohoch))) {
    c.name = "coHoch: " + c.name;
    checks.push_back(c);
  }
  MixedMapReport mixed = check_mixed_map_pi(in.C, top, cfg.word_cap);
  for (const auto& c : mixed.checks) checks.push_back(c);

  CommandOutput out;
  out.doc = header(cfg);
  for (const auto& w : A.warnings()) out.doc["warnings"].push_back(w);
  out.doc["checks"] = json::array();
  std::ostringstream table;
  table << header_line(cfg);
  bool all = true;
  for (const auto& c : checks) {
    out.doc["checks"].push_back(check_json(c));
    table << (c.passed ? "pass  " : "FAIL  ") << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    all = all && c.passed;
  }
  out.doc["all_passed"] = all;
  out.doc["alpha_bar_intertwines"] = mixed.alpha_intertwines;
  out.doc["alpha_bar_witness"] = mixed.alpha_witness;
  out.doc["truncated"] = A.truncated();
  table << "alpha-bar intertwines B and P: " << (mixed.alpha_intertwines ? "yes" : "no");
  if (!mixed.alpha_witness.empty()) table << " (fails on " << mixed.alpha_witness << ")";
  table << "\n";
  for (const auto& w : A.warnings()) table << "warning: " << w << "\n";
  out.table = table.str();
  if (!all) {
    out.exit_code = exit_identity_failure;
    out.error = "identity failure";
  } else if (A.truncated() && !cfg.allow_truncated) {
    out.exit_code = exit_uncertified;
    out.error = "checks ran on word-length truncated complexes; rerun with --allow-truncated";
  }
  return out;
}

CommandOutput cmd_info(const JobConfig& cfg) {
  cfg.validate();
  Loaded in = load(cfg);
  CobarAlgebra A(in.C, cfg.hi, cfg.word_cap);
  CommandOutput out;
  out.doc = header(cfg);
  for (const auto& w : A.warnings()) out.doc["warnings"].push_back(w);
  std::ostringstream table;
  table << header_line(cfg);
  json census;
  auto row = [&](const std::string& name, auto&& size_at) {
    json sizes = json::array();
    table << std::left << std::setw(12) << name;
    for (int n = cfg.lo; n <= cfg.hi; ++n) {
      std::size_t s = size_at(n);
      sizes.push_back(s);
      table << " " << std::setw(6) << s;
    }
    table << "\n";
    census[name] = sizes;
  };
  table << std::left << std::setw(12) << "degree";
  for (int n = cfg.lo; n <= cfg.hi; ++n) table << " " << std::setw(6) << n;
  table << "\n";
  row("coalgebra", [&](int n) { return in.C.of_degree(n).size(); });
  row("cobar", [&](int n) {
    std::size_t s = 0;
    for (const auto& m : A.monomials()) s += A.degree(m) == n;
    return s;
  });
  BarComplex bar(A);
  QComplex q(A);
  HochschildComplex hoch(A);
  CoHochschildComplex cohoch(A);
  row("bar", [&](int n) { return bar.basis().at(n).size(); });
  row("q", [&](int n) { return q.basis().at(n).size(); });
  row("hoch", [&](int n) { return hoch.basis().at(n).size(); });
  row("cohoch", [&](int n) { return cohoch.basis().at(n).size(); });
  out.doc["census"] = census;
  out.doc["objects"] = in.C.objects().size();
  out.doc["truncated"] = A.truncated();
  out.doc["word_cap"] = A.word_cap();
  for (const auto& w : A.warnings()) table << "warning: " << w << "\n";
  out.table = table.str();
  return out;
}

namespace {

void add_common(CLI::App* sub, JobConfig& cfg, std::string& ring, std::string& cap, std::string& format) {
  sub->add_option("--ring", ring, "coefficients: z, q or zp:<p>");
  sub->add_option("--min-degree", cfg.lo, "lowest reported degree");
  sub->add_option("--max-degree", cfg.hi, "highest reported degree");
  sub->add_option("--word-cap", cap, "word-length cap: N or auto");
  sub->add_option("--u-trunc", cfg.u_truncation, "largest |i| kept for u^-i in negative and periodic chains");
  sub->add_option("--format", format, "table or json");
  sub->add_flag("--allow-truncated", cfg.allow_truncated, "print degrees that are not certified");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free loop space and cyclic homology of simplicial sets"};
  app.require_subcommand(1);
  JobConfig cfg;
  std::string ring = "z", cap = "auto", format = "table";

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {{"loops", "homology of the coHochschild complex (free loop space)"},
                        {"equivariant", "positive cyclic homology (S^1-equivariant homology of the free loop space)"},
                        {"cyclic", "positive, negative or periodic cyclic homology"},
                        {"verify", "run the identity suite"},
                        {"info", "basis sizes of every complex per degree"}};
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", cfg.input, "builtin:<name> or a simplicial-set JSON file")->required();
    add_common(sub, cfg, ring, cap, format);
    if (std::string(s.name) == "cyclic") {
      sub->add_option("--variant", cfg.variant, "positive, negative or periodic");
      sub->add_option("--side", cfg.side, "cohoch or hoch");
    }
  }
  CLI::App* poly = app.add_subcommand("polytope", "freehedron and Goodwillie polytope combinatorics");
  poly->add_option("family", cfg.family, "freehedron or goodwillie")->required();
  poly->add_option("n", cfg.n, "dimension")->required();
  poly->add_flag("--faces", cfg.faces, "list faces");
  poly->add_flag("--counts", cfg.counts, "print counts");
  poly->add_flag("--poset", cfg.poset, "list covering relations");
  poly->add_option("--format", format, "table or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_invalid;
  }

  CommandOutput result;
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.ring = RingSpec::parse(ring);
    cfg.word_cap = WordCap::parse(cap);
    if (format == "json")
      cfg.format = OutputFormat::json;
    else if (format != "table")
      throw ValidationError("format must be table or json");
    if (cfg.command == "loops")
      result = cmd_loops(cfg);
    else if (cfg.command == "equivariant")
      result = cmd_equivariant(cfg);
    else if (cfg.command == "cyclic")
      result = cmd_cyclic(cfg);
    else if (cfg.command == "polytope")
      result = cmd_polytope(cfg);
    else if (cfg.command == "verify")
      result = cmd_verify(cfg);
    else
      result = cmd_info(cfg);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const IdentityFailure& e) {
    err << "identity failure: " << e.what() << "\n";
    return exit_identity_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  }

  if (result.exit_code == exit_uncertified) {
    err << "error: " << result.error << "\n";
    return result.exit_code;
  }
  if (cfg.format == OutputFormat::json)
    out << result.doc.dump(2) << "\n";
  else
    out << result.table;
  if (!result.error.empty()) err << "error: " << result.error << "\n";
  return result.exit_code;
}

}  // namespace coloop::cli
