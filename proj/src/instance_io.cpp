#include "adhm/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace adhm {

Json to_json(const GR& z) { return {{"re", rational_to_string(z.re())}, {"im", rational_to_string(z.im())}}; }

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Json header(std::string_view kind, std::size_t k, std::size_t r) {
  return {{"schema_version", kSchemaVersion}, {"kind", kind}, {"k", k}, {"r", r}};
}

const Json& member(const Json& j, std::string_view key) {
  if (!j.is_object()) throw ParseError("expected an object holding '" + std::string(key) + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing key '" + std::string(key) + "'");
  return *it;
}

std::size_t natural(const Json& j, std::string_view key) {
  const Json& v = member(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw ParseError("'" + std::string(key) + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string text(const Json& j, std::string_view key) {
  const Json& v = member(j, key);
  if (!v.is_string()) throw ParseError("'" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Json to_json(const P2Tuple& m) {
  Json doc = header("p2", m.k(), m.r());
  doc["matrices"] = {{"a1", to_json(m.a1())}, {"a2", to_json(m.a2())}, {"b", to_json(m.b())}, {"c", to_json(m.c())}};
  return doc;
}

Json to_json(const BlowupTuple& m) {
  Json doc = header("blowup", m.k(), m.r());
  doc["matrices"] = {{"a1", to_json(m.a1())}, {"a2", to_json(m.a2())}, {"d", to_json(m.d())},
                     {"b", to_json(m.b())},   {"c", to_json(m.c())}};
  return doc;
}

Json to_json(const GeneratedInstance& m) {
  return std::visit([](const auto& t) { return to_json(t); }, m);
}

GR gaussian_from_json(const Json& j) { return GR::parse(text(j, "re"), text(j, "im")); }

RationalMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, std::string_view name) {
  const std::string label(name);
  if (!j.is_array()) throw ParseError("matrix '" + label + "' must be an array of rows");
  if (j.size() != rows)
    throw DimensionMismatch("matrix '" + label + "' has " + std::to_string(j.size()) + " rows, expected " +
                            std::to_string(rows));
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array()) throw ParseError("row " + std::to_string(i) + " of '" + label + "' must be an array");
    if (row.size() != cols)
      throw DimensionMismatch("row " + std::to_string(i) + " of '" + label + "' has " + std::to_string(row.size()) +
                              " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = gaussian_from_json(row[c]);
  }
  return m;
}

GeneratedInstance instance_from_json(const Json& j) {
  if (const std::string version = text(j, "schema_version"); version != kSchemaVersion)
    throw ParseError("unsupported schema_version '" + version + "'");
  const std::string kind = text(j, "kind");
  const std::size_t k = natural(j, "k"), r = natural(j, "r");
  const Json& mats = member(j, "matrices");
  auto get = [&](std::string_view name, std::size_t rows, std::size_t cols) {
    return matrix_from_json(member(mats, name), rows, cols, name);
  };
  if (kind == "p2") return P2Tuple(k, r, get("a1", k, k), get("a2", k, k), get("b", k, r), get("c", r, k));
  if (kind == "blowup")
    return BlowupTuple(k, r, get("a1", k, k), get("a2", k, k), get("d", k, k), get("b", k, r), get("c", r, k));
  throw ParseError("unknown kind '" + kind + "'");
}

GeneratedInstance parse_instance(std::string_view text_in) {
  Json j;
  try {
    j = Json::parse(text_in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(j);
}

std::string serialize_instance(const GeneratedInstance& m) { return to_json(m).dump(2) + "\n"; }

GeneratedInstance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance_file(const std::filesystem::path& path, const GeneratedInstance& m) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_instance(m);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace adhm
