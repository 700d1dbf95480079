#include "trilie/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace trilie {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
}

Vec value_from_json(const json& j, std::size_t dim, Field field) {
  Vec v(dim);
  if (!j.is_array()) throw ParseError("product value must be a list of [index, coefficient]");
  for (const json& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() ||
        !item[1].is_string())
      throw ParseError("product value entries must be [index, coefficient-string]");
    std::size_t idx = item[0].get<std::size_t>();
    if (idx >= dim) throw ParseError("coefficient index out of range");
    Scalar s = parse_scalar(item[1].get<std::string>());
    if (field == Field::rational && !s.is_real())
      throw ParseError("imaginary coefficient in a rational-field file");
    v[idx] += s;
  }
  return v;
}

json value_to_json(const Vec& v) {
  json out = json::array();
  for (std::size_t l = 0; l < v.size(); ++l)
    if (!v[l].is_zero()) out.push_back(json::array({l, to_string(v[l])}));
  return out;
}

json scalar_matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json_rows(const json& rows) {
  if (!rows.is_array() || rows.empty()) throw ParseError("matrix must be a non-empty list of rows");
  const std::size_t r = rows.size();
  if (!rows[0].is_array() || rows[0].empty()) throw ParseError("matrix rows must be lists");
  const std::size_t c = rows[0].size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) throw ParseError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (!rows[i][j].is_string()) throw ParseError("matrix entries must be coefficient strings");
      m.at(i, j) = parse_scalar(rows[i][j].get<std::string>());
    }
  }
  return m;
}

}  // namespace

ParsedAlgebra algebra_from_json(const std::string& text) {
  json j = parse_json(text);
  for (const char* key : {"scalar_field", "dimension", "basis", "kind", "products"})
    if (!j.contains(key)) throw ParseError(std::string("algebra file missing key '") + key + "'");
  Field field = parse_field(j["scalar_field"].get<std::string>());
  if (!j["dimension"].is_number_unsigned()) throw ParseError("dimension must be a non-negative integer");
  std::size_t dim = j["dimension"].get<std::size_t>();
  std::vector<std::string> basis;
  for (const json& name : j["basis"]) basis.push_back(name.get<std::string>());
  std::string kind = j["kind"].get<std::string>();
  if (kind != "threelie" && kind != "prelie")
    throw ParseError("kind must be 'threelie' or 'prelie'");

  std::vector<CanonicalEntry> entries;
  for (const json& rec : j["products"]) {
    if (!rec.contains("args") || !rec.contains("value"))
      throw ParseError("product record needs 'args' and 'value'");
    const json& args = rec["args"];
    if (!args.is_array() || args.size() != 3) throw ParseError("args must be three indices");
    CanonicalEntry e;
    e.i = args[0].get<std::size_t>();
    e.j = args[1].get<std::size_t>();
    e.k = args[2].get<std::size_t>();
    e.value = value_from_json(rec["value"], dim, field);
    entries.push_back(std::move(e));
  }
  try {
    if (kind == "threelie")
      return ThreeLieAlgebra::from_canonical(dim, field, entries, std::move(basis));
    return ThreePreLie::from_canonical(dim, field, entries, std::move(basis));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string algebra_to_json(const ThreeLieAlgebra& g) {
  json j;
  j["scalar_field"] = field_name(g.field());
  j["dimension"] = g.dim();
  j["basis"] = g.basis();
  j["kind"] = "threelie";
  json products = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t k = i + 1; k < g.dim(); ++k)
      for (std::size_t l = k + 1; l < g.dim(); ++l) {
        Vec v = g.bracket(i, k, l);
        if (is_zero(v)) continue;
        json rec;
        rec["args"] = json::array({i, k, l});
        rec["value"] = value_to_json(v);
        products.push_back(std::move(rec));
      }
  j["products"] = std::move(products);
  return j.dump(2) + "\n";
}

std::string algebra_to_json(const ThreePreLie& a) {
  json j;
  j["scalar_field"] = field_name(a.field());
  j["dimension"] = a.dim();
  j["basis"] = a.basis();
  j["kind"] = "prelie";
  json products = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = i + 1; k < a.dim(); ++k)
      for (std::size_t l = 0; l < a.dim(); ++l) {
        Vec v = a.product(i, k, l);
        if (is_zero(v)) continue;
        json rec;
        rec["args"] = json::array({i, k, l});
        rec["value"] = value_to_json(v);
        products.push_back(std::move(rec));
      }
  j["products"] = std::move(products);
  return j.dump(2) + "\n";
}

Matrix map_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.contains("matrix")) throw ParseError("map file missing key 'matrix'");
  Matrix m = matrix_from_json_rows(j["matrix"]);
  if (!m.is_square()) throw ParseError("map matrix must be square");
  return m;
}

std::string map_to_json(const Matrix& m) {
  json j;
  j["matrix"] = scalar_matrix_to_json(m);
  return j.dump(2) + "\n";
}

BilForm form_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.contains("matrix")) throw ParseError("form file missing key 'matrix'");
  if (!j.contains("declared_symmetry")) throw ParseError("form file missing key 'declared_symmetry'");
  std::string sym = j["declared_symmetry"].get<std::string>();
  FormKind kind;
  if (sym == "skew")
    kind = FormKind::skew;
  else if (sym == "symmetric")
    kind = FormKind::symmetric;
  else
    throw ParseError("declared_symmetry must be 'skew' or 'symmetric'");
  Matrix m = matrix_from_json_rows(j["matrix"]);
  try {
    return BilForm(std::move(m), kind);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string form_to_json(const BilForm& b) {
  json j;
  j["matrix"] = scalar_matrix_to_json(b.m);
  j["declared_symmetry"] = b.kind == FormKind::skew ? "skew" : "symmetric";
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << text;
}

ParsedAlgebra read_algebra_file(const std::string& path) {
  return algebra_from_json(read_text_file(path));
}

Matrix read_map_file(const std::string& path) { return map_from_json(read_text_file(path)); }

BilForm read_form_file(const std::string& path) { return form_from_json(read_text_file(path)); }

}  // namespace trilie
