#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coloop/errors.hpp"
#include "coloop/simplicial/builtins.hpp"

namespace coloop {

namespace {

using nlohmann::json;

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ValidationError("cannot parse " + what + " from '" + text + "'");
  return value;
}

SimplicialSet load_builtin(const std::string& spec) {
  if (spec == "point") return point_set();
  auto slash = spec.find('/');
  std::string kind = spec.substr(0, slash);
  std::string arg = slash == std::string::npos ? "" : spec.substr(slash + 1);
  if (kind == "sphere") return sphere_set(parse_int(arg, "sphere dimension"));
  if (kind == "simplex") return simplex_set(parse_int(arg, "simplex dimension"));
  if (kind == "wedge") {
    std::vector<int> dims;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) dims.push_back(parse_int(item, "wedge dimension"));
    return wedge_set(dims);
  }
  throw ValidationError("unknown builtin '" + spec + "'");
}

}  // namespace

SimplicialSet parse_simplicial_set_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("simplicial set JSON: ") + e.what());
  }
  try {
    std::string name = doc.value("name", std::string("unnamed"));
    const json& levels = doc.at("simplices");
    if (!levels.is_array()) throw ValidationError("simplicial set JSON: 'simplices' must be an array");
    if (doc.contains("dimensions") && doc.at("dimensions").get<int>() + 1 != static_cast<int>(levels.size()))
      throw ValidationError("simplicial set JSON: 'dimensions' disagrees with the simplices array");
    std::vector<std::vector<SimplexRecord>> cells;
    for (const auto& level : levels) {
      cells.emplace_back();
      for (const auto& s : level) {
        SimplexRecord rec;
        rec.id = s.at("id").get<std::string>();
        for (const auto& f : s.value("faces", json::array()))
          rec.faces.push_back({f.value("degeneracies", std::vector<int>{}), f.at("target").get<std::string>()});
        cells.back().push_back(std::move(rec));
      }
    }
    return SimplicialSet::build(name, std::move(cells));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("simplicial set JSON: ") + e.what());
  }
}

SimplicialSet load_simplicial_set(const std::string& source) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) return load_builtin(source.substr(prefix.size()));
  std::ifstream in(source);
  if (!in) throw ValidationError("cannot open input '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_simplicial_set_json(buf.str());
}

std::string simplicial_set_to_json(const SimplicialSet& X) {
  json levels = json::array();
  for (const auto& level : X.records_by_dimension()) {
    json arr = json::array();
    for (const auto& rec : level) {
      json faces = json::array();
      for (const auto& f : rec.faces) faces.push_back({{"degeneracies", f.degeneracies}, {"target", f.target}});
      arr.push_back({{"id", rec.id}, {"faces", faces}});
    }
    levels.push_back(arr);
  }
  json doc = {{"name", X.name()}, {"dimensions", X.max_dimension()}, {"simplices", levels}};
  return doc.dump(2);
}

}  // namespace coloop
