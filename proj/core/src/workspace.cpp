#include "trider/workspace.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace trider {

namespace {

using json = nlohmann::ordered_json;

std::string pointer(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string pointer(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where, "missing field '" + key + "'");
  return *it;
}

std::string read_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where, "expected a string");
  return j.get<std::string>();
}

std::size_t read_count(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() == 0) throw InputError(where, "expected a positive integer");
  return j.get<std::size_t>();
}

Scalar read_scalar(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.dump(), 10);
  if (j.is_number_float()) throw InputError(where, "floating point scalars are not allowed; use \"p/q\"");
  if (!j.is_string()) throw InputError(where, "expected a rational string \"p/q\"");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where, e.what());
  }
}

Vector read_vector(const json& j, std::size_t len, const std::string& where) {
  if (!j.is_array() || j.size() != len) {
    throw InputError(where, "expected an array of " + std::to_string(len) + " scalars");
  }
  Vector v;
  for (std::size_t i = 0; i < len; ++i) v.push_back(read_scalar(j[i], pointer(where, i)));
  return v;
}

// Reads t[i][j] = vector of length `len` for i < outer, j < inner.
std::vector<Scalar> read_tensor(const json& j, std::size_t outer, std::size_t inner, std::size_t len,
                                const std::string& where) {
  if (!j.is_array() || j.size() != outer) {
    throw InputError(where, "expected an array of length " + std::to_string(outer));
  }
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < outer; ++i) {
    const auto wi = pointer(where, i);
    if (!j[i].is_array() || j[i].size() != inner) {
      throw InputError(wi, "expected an array of length " + std::to_string(inner));
    }
    for (std::size_t k = 0; k < inner; ++k) {
      auto v = read_vector(j[i][k], len, pointer(wi, k));
      out.insert(out.end(), v.begin(), v.end());
    }
  }
  return out;
}

Matrix read_matrix(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != dim) {
    throw InputError(where, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
  }
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < dim; ++r) rows.push_back(read_vector(j[r], dim, pointer(where, r)));
  return Matrix::from_rows(rows);
}

json scalar_json(const Scalar& s) { return format_scalar(s); }

json vector_json(const Vector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(scalar_json(x));
  return arr;
}

json tensor_json(const std::vector<Scalar>& flat, std::size_t outer, std::size_t inner, std::size_t len) {
  json arr = json::array();
  for (std::size_t i = 0; i < outer; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < inner; ++k) {
      const auto begin = flat.begin() + static_cast<std::ptrdiff_t>((i * inner + k) * len);
      row.push_back(vector_json(Vector(begin, begin + static_cast<std::ptrdiff_t>(len))));
    }
    arr.push_back(std::move(row));
  }
  return arr;
}

json matrix_json(const Matrix& m) {
  json arr = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) arr.push_back(vector_json(m.row_vector(r)));
  return arr;
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& section(const json& doc, const char* key) {
  static const json empty = json::object();
  auto it = doc.find(key);
  if (it == doc.end()) return empty;
  if (!it->is_object()) throw InputError(std::string("/") + key, "expected an object of named entries");
  return *it;
}

}  // namespace

Workspace parse_workspace(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw InputError(line_column(json_text, e.byte), "JSON syntax error");
  }
  if (!doc.is_object()) throw InputError("", "document must be a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const auto& key = it.key();
    if (key != "algebras" && key != "bimodules" && key != "triangular" && key != "sequences") {
      throw InputError("/" + key, "unknown top-level section");
    }
  }

  Workspace ws;
  for (const auto& [name, body] : section(doc, "algebras").items()) {
    const auto where = pointer("/algebras", name);
    const auto dim = read_count(member(body, "dim", where), pointer(where, "dim"));
    auto unit = read_vector(member(body, "unit", where), dim, pointer(where, "unit"));
    auto constants = read_tensor(member(body, "structure_constants", where), dim, dim, dim,
                                 pointer(where, "structure_constants"));
    ws.algebras.emplace(name, Algebra(dim, std::move(constants), std::move(unit)));
  }

  auto find_algebra = [&](const std::string& ref, const std::string& where) -> const Algebra& {
    auto it = ws.algebras.find(ref);
    if (it == ws.algebras.end()) throw InputError(where, "unknown algebra '" + ref + "'");
    return it->second;
  };

  for (const auto& [name, body] : section(doc, "bimodules").items()) {
    const auto where = pointer("/bimodules", name);
    auto left = read_string(member(body, "left", where), pointer(where, "left"));
    auto right = read_string(member(body, "right", where), pointer(where, "right"));
    const auto& A = find_algebra(left, pointer(where, "left"));
    const auto& B = find_algebra(right, pointer(where, "right"));
    const auto dim = read_count(member(body, "dim", where), pointer(where, "dim"));
    auto l = read_tensor(member(body, "left_action", where), A.dim(), dim, dim, pointer(where, "left_action"));
    auto r = read_tensor(member(body, "right_action", where), dim, B.dim(), dim, pointer(where, "right_action"));
    ws.bimodules.emplace(name, BimoduleEntry{left, right, Bimodule(A, B, dim, std::move(l), std::move(r))});
  }

  for (const auto& [name, body] : section(doc, "triangular").items()) {
    const auto where = pointer("/triangular", name);
    TriangularEntry entry{read_string(member(body, "A", where), pointer(where, "A")),
                          read_string(member(body, "M", where), pointer(where, "M")),
                          read_string(member(body, "B", where), pointer(where, "B")),
                          ""};
    if (body.contains("description")) {
      entry.description = read_string(body["description"], pointer(where, "description"));
    }
    find_algebra(entry.a, pointer(where, "A"));
    find_algebra(entry.b, pointer(where, "B"));
    auto bm = ws.bimodules.find(entry.m);
    if (bm == ws.bimodules.end()) throw InputError(pointer(where, "M"), "unknown bimodule '" + entry.m + "'");
    if (bm->second.left != entry.a) {
      throw InputError(pointer(where, "A"), "bimodule '" + entry.m + "' is a left module over '" +
                                                bm->second.left + "', not '" + entry.a + "'");
    }
    if (bm->second.right != entry.b) {
      throw InputError(pointer(where, "B"), "bimodule '" + entry.m + "' is a right module over '" +
                                                bm->second.right + "', not '" + entry.b + "'");
    }
    ws.triangular.emplace(name, std::move(entry));
  }

  for (const auto& [name, body] : section(doc, "sequences").items()) {
    const auto where = pointer("/sequences", name);
    SequenceEntry entry;
    std::size_t dim = 0;
    if (body.is_object() && body.contains("triangular")) {
      entry.target = read_string(body["triangular"], pointer(where, "triangular"));
      auto it = ws.triangular.find(entry.target);
      if (it == ws.triangular.end()) {
        throw InputError(pointer(where, "triangular"), "unknown triangular algebra '" + entry.target + "'");
      }
      dim = ws.algebras.at(it->second.a).dim() + ws.bimodules.at(it->second.m).module.dim() +
            ws.algebras.at(it->second.b).dim();
    } else {
      entry.target = read_string(member(body, "algebra", where), pointer(where, "algebra"));
      entry.on_algebra = true;
      dim = find_algebra(entry.target, pointer(where, "algebra")).dim();
    }
    const auto kind_text = read_string(member(body, "kind", where), pointer(where, "kind"));
    const auto kind = parse_derivation_kind(kind_text);
    if (!kind) throw InputError(pointer(where, "kind"), "unknown sequence kind '" + kind_text + "'");
    entry.sequence.kind = *kind;
    const auto& levels = member(body, "levels", where);
    if (!levels.is_array() || levels.empty()) {
      throw InputError(pointer(where, "levels"), "expected a non-empty array of matrices");
    }
    for (std::size_t n = 0; n < levels.size(); ++n) {
      entry.sequence.levels.push_back(read_matrix(levels[n], dim, pointer(pointer(where, "levels"), n)));
    }
    ws.sequences.emplace(name, std::move(entry));
  }
  return ws;
}

Workspace load_workspace(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string(), "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_workspace(buffer.str());
}

std::string dump_workspace(const Workspace& ws) {
  json doc = json::object();
  json algebras = json::object();
  for (const auto& [name, alg] : ws.algebras) {
    json body = json::object();
    body["dim"] = alg.dim();
    body["unit"] = vector_json(alg.unit());
    body["structure_constants"] = tensor_json(alg.structure_constants(), alg.dim(), alg.dim(), alg.dim());
    algebras[name] = std::move(body);
  }
  doc["algebras"] = std::move(algebras);

  json bimodules = json::object();
  for (const auto& [name, entry] : ws.bimodules) {
    const auto& bm = entry.module;
    json body = json::object();
    body["left"] = entry.left;
    body["right"] = entry.right;
    body["dim"] = bm.dim();
    body["left_action"] = tensor_json(bm.left_action(), bm.left_algebra().dim(), bm.dim(), bm.dim());
    body["right_action"] = tensor_json(bm.right_action(), bm.dim(), bm.right_algebra().dim(), bm.dim());
    bimodules[name] = std::move(body);
  }
  doc["bimodules"] = std::move(bimodules);

  json triangular = json::object();
  for (const auto& [name, entry] : ws.triangular) {
    json body = json::object();
    body["A"] = entry.a;
    body["M"] = entry.m;
    body["B"] = entry.b;
    if (!entry.description.empty()) body["description"] = entry.description;
    triangular[name] = std::move(body);
  }
  doc["triangular"] = std::move(triangular);

  if (!ws.sequences.empty()) {
    json sequences = json::object();
    for (const auto& [name, entry] : ws.sequences) {
      json body = json::object();
      body[entry.on_algebra ? "algebra" : "triangular"] = entry.target;
      body["kind"] = to_string(entry.sequence.kind);
      json levels = json::array();
      for (const auto& m : entry.sequence.levels) levels.push_back(matrix_json(m));
      body["levels"] = std::move(levels);
      sequences[name] = std::move(body);
    }
    doc["sequences"] = std::move(sequences);
  }
  return doc.dump(2) + "\n";
}

Workspace corpus_workspace(const standard::CorpusEntry& entry) {
  Workspace ws;
  ws.algebras.emplace(entry.a_name, entry.module.left_algebra());
  ws.algebras.emplace(entry.b_name, entry.module.right_algebra());
  ws.bimodules.emplace(entry.m_name, BimoduleEntry{entry.a_name, entry.b_name, entry.module});
  ws.triangular.emplace(entry.name, TriangularEntry{entry.a_name, entry.m_name, entry.b_name, entry.description});
  return ws;
}

ValidationReport check_workspace(const Workspace& ws) {
  ValidationReport report;
  auto absorb = [&](const std::string& prefix, const ValidationReport& r) {
    for (const auto& v : r.violations) report.add(prefix + ": " + v.law, v.witness, v.detail);
  };
  for (const auto& [name, alg] : ws.algebras) absorb("algebra " + name, validate_algebra(alg));
  for (const auto& [name, entry] : ws.bimodules) {
    const auto r = validate_bimodule(entry.module);
    absorb("bimodule " + name, r);
  }
  for (const auto& [name, entry] : ws.triangular) {
    try {
      resolve_triangular(ws, name);
    } catch (const TriangularError& e) {
      report.add("triangular " + name + ": construction refused", {}, e.what());
    }
  }
  for (const auto& [name, entry] : ws.sequences) {
    try {
      const auto alg = sequence_algebra(ws, entry);
      const auto r = verify_sequence(alg, entry.sequence);
      if (!r.ok()) {
        const auto& v = *r.first_violation;
        auto witness = v.tuple;
        witness.insert(witness.begin(), v.level);
        report.add("sequence " + name + ": " + v.law, witness, "level " + std::to_string(v.level));
      }
    } catch (const TriangularError& e) {
      report.add("sequence " + name + ": target unusable", {}, e.what());
    }
  }
  return report;
}

TriangularAlgebra resolve_triangular(const Workspace& ws, const std::string& name) {
  auto it = ws.triangular.find(name);
  if (it == ws.triangular.end()) throw InputError("/triangular/" + name, "unknown triangular algebra");
  return TriangularAlgebra::build(ws.bimodules.at(it->second.m).module);
}

Algebra sequence_algebra(const Workspace& ws, const SequenceEntry& entry) {
  if (entry.on_algebra) return ws.algebras.at(entry.target);
  return resolve_triangular(ws, entry.target).algebra();
}

}  // namespace trider
