#include <doctest.h>

#include <sstream>

#include "coloop/cli/cli.hpp"

using namespace coloop;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "coloop");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::size_t> bettis(const nlohmann::json& doc) {
  std::vector<std::size_t> out;
  for (const auto& r : doc.at("results")) out.push_back(r.at("betti").get<std::size_t>());
  return out;
}

const std::string data_dir = COLOOP_TEST_DATA;

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("loops on the 3-sphere") {
    auto r = run({"loops", "builtin:sphere/3", "--format", "json"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("command") == "loops");
    CHECK(doc.at("input") == "builtin:sphere/3");
    CHECK(doc.at("ring") == "Z");
    CHECK(doc.at("warnings").empty());
    CHECK(bettis(doc) == std::vector<std::size_t>{1, 0, 1, 1, 1, 1, 1});
    for (const auto& res : doc.at("results")) {
      CHECK(res.at("certified") == true);
      CHECK(res.at("torsion").empty());
    }
  }

  TEST_CASE("equivariant homology of a point") {
    auto r = run({"equivariant", "builtin:point", "--max-degree", "8", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(bettis(nlohmann::json::parse(r.out)) == std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1, 0, 1});
  }

  TEST_CASE("a loop edge makes the output truncated") {
    auto r = run({"loops", data_dir + "/rp2.json", "--max-degree", "1", "--word-cap", "6", "--allow-truncated",
                  "--format", "json"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK_FALSE(doc.at("warnings").empty());
    CHECK(doc.at("results")[0].at("certified") == false);
  }

  TEST_CASE("uncertified output needs the flag") {
    auto r = run({"loops", "builtin:sphere/1", "--format", "json"});
    CHECK(r.code == cli::exit_uncertified);
    CHECK(r.out.empty());
    CHECK(r.err.find("not certified") != std::string::npos);
    auto ok = run({"loops", "builtin:sphere/1", "--format", "json", "--allow-truncated"});
    CHECK(ok.code == 0);
  }

  TEST_CASE("cyclic variants through the command line") {
    auto pos = run({"cyclic", "builtin:point", "--variant", "M[[u]]", "--format", "json"});
    REQUIRE(pos.code == 0);
    CHECK(bettis(nlohmann::json::parse(pos.out)) == std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1});
    auto neg = run({"cyclic", "builtin:point", "--variant", "negative", "--format", "json"});
    CHECK(neg.code == cli::exit_uncertified);
    auto hoch = run({"cyclic", "builtin:sphere/2", "--side", "hoch", "--ring", "q", "--max-degree", "4", "--format",
                     "json"});
    auto cohoch = run({"cyclic", "builtin:sphere/2", "--side", "cohoch", "--ring", "q", "--max-degree", "4",
                       "--format", "json"});
    REQUIRE(hoch.code == 0);
    REQUIRE(cohoch.code == 0);
    CHECK(bettis(nlohmann::json::parse(hoch.out)) == bettis(nlohmann::json::parse(cohoch.out)));
  }

  TEST_CASE("polytope commands") {
    auto f = run({"polytope", "freehedron", "2", "--faces", "--format", "json"});
    REQUIRE(f.code == 0);
    auto g = run({"polytope", "goodwillie", "3", "--counts", "--format", "json"});
    REQUIRE(g.code == 0);
    auto doc = nlohmann::json::parse(g.out);
    CHECK(doc.dump().find("12") != std::string::npos);
    auto table = run({"polytope", "freehedron", "2", "--faces"});
    CHECK(table.out.find("{}0,1,2{}") != std::string::npos);
    CHECK(run({"polytope", "freehedron", "40"}).code == cli::exit_invalid);
    CHECK(run({"polytope", "cube", "2"}).code == cli::exit_invalid);
  }

  TEST_CASE("verify passes on the 2-sphere") {
    auto r = run({"verify", "builtin:sphere/2", "--max-degree", "5", "--format", "json"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("all_passed") == true);
    CHECK(doc.at("alpha_bar_intertwines") == false);
  }

  TEST_CASE("validation errors") {
    CHECK(run({"loops", "builtin:nothing"}).code == cli::exit_invalid);
    CHECK(run({"loops", data_dir + "/bad_face.json"}).code == cli::exit_invalid);
    CHECK(run({"loops", "builtin:point", "--ring", "zp:4"}).code == cli::exit_invalid);
    CHECK(run({"loops", "builtin:point", "--max-degree", "-1"}).code == cli::exit_invalid);
    CHECK(run({"loops", "builtin:point", "--word-cap", "zero"}).code == cli::exit_invalid);
    CHECK(run({"frobnicate"}).code == cli::exit_invalid);
    CHECK(run({"loops", "builtin:point", "--help"}).code == 0);
  }

  TEST_CASE("json output is byte-stable") {
    std::vector<std::string> args{"verify", "builtin:wedge/2,3", "--max-degree", "4", "--format", "json"};
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::vector<std::string> info{"info", "builtin:sphere/2", "--format", "json"};
    CHECK(run(info).out == run(info).out);
  }
}
