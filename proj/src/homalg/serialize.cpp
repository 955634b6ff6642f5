#include "coloop/homalg/serialize.hpp"

#include "coloop/errors.hpp"

namespace coloop {

nlohmann::json matrix_to_json(const SparseMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) entries.push_back({e.row, c, e.value.get_str()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

SparseMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    std::vector<SparseMatrix::Triplet> triplets;
    for (const auto& e : j.at("entries"))
      triplets.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
                            Integer(e.at(2).get<std::string>()));
    return SparseMatrix::from_triplets(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(), triplets);
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("matrix JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ValidationError(std::string("matrix JSON: bad integer: ") + ex.what());
  }
}

nlohmann::json complex_to_json(const ChainComplexWindow& w) {
  nlohmann::json degrees = nlohmann::json::array();
  for (int n = w.lo; n <= w.hi; ++n)
    degrees.push_back({{"degree", n}, {"basis", w.labels_at(n)}, {"boundary", matrix_to_json(w.boundary_at(n))}});
  nlohmann::json j{{"lo", w.lo},
                   {"hi", w.hi},
                   {"complete_below", w.complete_below},
                   {"complete_above", w.complete_above},
                   {"truncated", w.truncated},
                   {"degrees", degrees}};
  if (w.complete_above) j["boundary_above"] = matrix_to_json(w.boundary_above);
  return j;
}

ChainComplexWindow complex_from_json(const nlohmann::json& j) {
  try {
    ChainComplexWindow w;
    w.lo = j.at("lo").get<int>();
    w.hi = j.at("hi").get<int>();
    w.complete_below = j.value("complete_below", false);
    w.complete_above = j.value("complete_above", false);
    w.truncated = j.value("truncated", false);
    for (const auto& d : j.at("degrees")) {
      w.labels.push_back(d.at("basis").get<std::vector<std::string>>());
      w.boundary.push_back(matrix_from_json(d.at("boundary")));
    }
    if (w.complete_above) w.boundary_above = matrix_from_json(j.at("boundary_above"));
    w.validate();
    return w;
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("complex JSON: ") + ex.what());
  }
}

}  // namespace coloop
