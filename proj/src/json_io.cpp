#include "stratcx/json_io.hpp"

#include <fstream>

namespace stratcx::json_io {

namespace {

json matrix_to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw parse_error("matrix JSON: wrong row count");
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw parse_error("matrix JSON: wrong column count");
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = rational_from_string(row[k].get<std::string>());
  }
  return m;
}

} // namespace

json complex_to_json(const cxlin::ComplexInstance& c) {
  json out;
  out["dims"] = size_array(c.dims());
  json maps = json::array();
  for (std::size_t i = 1; i <= c.map_count(); ++i) maps.push_back(matrix_to_json(c.map(i)));
  out["maps"] = std::move(maps);
  return out;
}

cxlin::ComplexInstance complex_from_json(const json& j) {
  try {
    const json& jd = j.at("dims");
    std::vector<std::size_t> dims;
    for (const json& v : jd) dims.push_back(v.get<std::size_t>());
    const json& jm = j.at("maps");
    if (!jm.is_array() || jm.size() + 1 != dims.size())
      throw parse_error("complex JSON: map count must be one less than dims");
    std::vector<QMatrix> maps;
    for (std::size_t i = 0; i + 1 < dims.size(); ++i)
      maps.push_back(matrix_from_json(jm[i], dims[i + 1], dims[i]));
    return cxlin::ComplexInstance(std::move(dims), std::move(maps));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("complex JSON: ") + e.what());
  } catch (const math_error& e) {
    throw parse_error(std::string("complex JSON: ") + e.what());
  }
}

json form_to_json(const pforms::TwistedForm& f) {
  json out;
  out["r"] = f.ambient();
  out["k"] = f.degree();
  out["twist"] = f.twist();
  json terms = json::array();
  // the term map is already in canonical order
  for (const auto& [key, coeff] : f.poly().terms()) {
    json t;
    t["exp"] = key.exp;
    t["dx"] = key.dx;
    t["coeff"] = rational_to_string(coeff);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

pforms::TwistedForm form_from_json(const json& j) {
  try {
    const int r = j.at("r").get<int>();
    const int k = j.at("k").get<int>();
    const int e = j.at("twist").get<int>();
    pforms::PolyForm p(r, k);
    for (const json& t : j.at("terms")) {
      pforms::FormKey key;
      key.exp = t.at("exp").get<std::vector<int>>();
      key.dx = t.at("dx").get<std::vector<int>>();
      p.add_term(std::move(key), rational_from_string(t.at("coeff").get<std::string>()));
    }
    return pforms::TwistedForm::validated(r, k, e, std::move(p));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("form JSON: ") + e.what());
  } catch (const math_error& e) {
    // invariant violations in a file are an input problem, not a math one
    throw parse_error(std::string("form JSON: ") + e.what());
  }
}

json rank_profile_to_json(const folan::RankProfile& p) {
  json out;
  out["r"] = p.ambient;
  out["d"] = p.fol_degree;
  out["e"] = p.twist;
  out["variant"] = folan::to_string(p.variant);
  out["dims"] = size_array(p.dims);
  out["ranks"] = integer_array(p.ranks.entries());
  out["homology"] = integer_array(p.homology);
  out["admissible"] = p.admissible;
  json dom = json::array();
  for (const auto& m : p.dominating_maximal) dom.push_back(integer_array(m.entries()));
  out["dominating_maximal"] = std::move(dom);
  out["stratum_dim"] = to_int64(p.stratum_dim);
  out["tangent_dim"] = to_int64(p.tangent_dim);
  return out;
}

json integer_array(std::span<const Integer> xs) {
  json out = json::array();
  for (const Integer& x : xs) out.push_back(to_int64(x));
  return out;
}

std::vector<Integer> integer_array_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("expected a JSON integer array");
  std::vector<Integer> out;
  for (const json& v : j) {
    if (!v.is_number_integer()) throw parse_error("expected a JSON integer array");
    out.emplace_back(static_cast<long>(v.get<std::int64_t>()));
  }
  return out;
}

json size_array(const std::vector<std::size_t>& xs) {
  json out = json::array();
  for (std::size_t x : xs) out.push_back(x);
  return out;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("invalid JSON in " + path + ": " + e.what());
  }
}

void save_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

} // namespace stratcx::json_io
