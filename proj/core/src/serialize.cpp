#include "g2/serialize.hpp"

namespace g2 {

using nlohmann::json;

namespace {

json root_json(const Root& r) { return root_key(r); }

Root root_of(const json& j) { return root_from_json(j); }

std::string kind_name(Letter::Kind k) {
  switch (k) {
    case Letter::Kind::X: return "x";
    case Letter::Kind::W: return "w";
    case Letter::Kind::H: return "h";
  }
  return "x";
}

Letter::Kind kind_of(const std::string& s) {
  if (s == "x") return Letter::Kind::X;
  if (s == "w") return Letter::Kind::W;
  if (s == "h") return Letter::Kind::H;
  throw Error(ErrorCode::ParseError, "unknown letter kind " + s);
}

std::vector<Matrix> matrices_by_root(const Ring& r, const json& j, const char* what) {
  std::vector<Matrix> out;
  for (const auto& root : all_roots()) {
    const auto key = root_key(root);
    if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string(what) + " lacks root " + key);
    out.push_back(matrix_from_json(r, j.at(key)));
  }
  return out;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < kDim; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < kDim; ++j) row.push_back(m.ring()->to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Ring& r, const json& j) {
  if (!j.is_array() || j.size() != kDim) throw Error(ErrorCode::ParseError, "matrix needs 14 rows");
  Matrix m(r);
  for (std::size_t i = 0; i < kDim; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != kDim) throw Error(ErrorCode::ParseError, "matrix row needs 14 entries");
    for (std::size_t k = 0; k < kDim; ++k) m.set(i, k, r->from_json(row[k]));
  }
  return m;
}

json word_to_json(const Ring& r, const GroupWord& w) {
  json out = json::array();
  for (const auto& l : w.letters) {
    out.push_back({{"kind", kind_name(l.kind)}, {"root", root_json(l.root)}, {"scalar", r->to_json(l.scalar)}});
  }
  return out;
}

GroupWord word_from_json(const Ring& r, const json& j) {
  GroupWord w;
  for (const auto& l : j) {
    w.letters.push_back({kind_of(l.value("kind", "x")), root_of(l.at("root")), r->from_json(l.at("scalar"))});
  }
  return w;
}

json table_to_json(const StructureTable& t) {
  json pairs = json::array();
  for (const auto& x : all_roots()) {
    for (const auto& y : all_roots()) {
      if (int n = t.nconst(x, y)) pairs.push_back({{"x", root_json(x)}, {"y", root_json(y)}, {"N", n}});
    }
  }
  json h = json::object();
  for (const auto& r : all_roots()) h[root_key(r)] = t.hbracket[root_index(r)];
  return {{"flips", t.flips}, {"pairs", pairs}, {"hbracket", h}};
}

StructureTable table_from_json(const json& j) {
  StructureTable t;
  t.flips = j.at("flips").get<SignFlips>();
  for (const auto& p : j.at("pairs")) {
    const Root x = root_of(p.at("x")), y = root_of(p.at("y"));
    if (!sum_is_root(x, y)) throw Error(ErrorCode::ParseError, "N given for a pair whose sum is not a root");
    t.n[root_index(x)][root_index(y)] = p.at("N").get<int>();
  }
  for (const auto& r : all_roots()) t.hbracket[root_index(r)] = j.at("hbracket").at(root_key(r)).get<std::array<int, 2>>();
  return t;
}

json spec_to_json(const AutomorphismSpec& spec) {
  json images = json::object();
  for (std::size_t k = 0; k < kRootCount; ++k) images[root_key(all_roots()[k])] = matrix_to_json(spec.images[k]);
  json out = {{"ring", spec.ring.descriptor()}, {"images", images}};
  if (spec.table) {
    json table = json::object();
    for (std::size_t k = 0; k < kRootCount; ++k) {
      json row = json::array();
      for (const auto& m : (*spec.table)[k]) row.push_back(matrix_to_json(m));
      table[root_key(all_roots()[k])] = row;
    }
    out["table"] = table;
  }
  if (spec.claimed_g || spec.claimed_rho) {
    json c = json::object();
    if (spec.claimed_g) {
      c["g"] = matrix_to_json(spec.claimed_g->matrix());
      c["g_inverse"] = matrix_to_json(spec.claimed_g->inverse_matrix());
    }
    if (spec.claimed_rho) c["rho"] = spec.claimed_rho->to_json();
    out["claimed"] = c;
  }
  return out;
}

AutomorphismSpec spec_from_json(const json& j) {
  AutomorphismSpec spec;
  spec.ring = Ring::parse(j.at("ring").get<std::string>());
  spec.images = matrices_by_root(spec.ring, j.at("images"), "images");
  if (j.contains("table")) {
    std::vector<std::vector<Matrix>> table;
    for (const auto& root : all_roots()) {
      std::vector<Matrix> row;
      for (const auto& m : j.at("table").at(root_key(root))) row.push_back(matrix_from_json(spec.ring, m));
      table.push_back(std::move(row));
    }
    spec.table = std::move(table);
  }
  if (j.contains("claimed")) {
    const auto& c = j.at("claimed");
    if (c.contains("g")) {
      GroupMatrix g(matrix_from_json(spec.ring, c.at("g")), matrix_from_json(spec.ring, c.at("g_inverse")));
      if (!g.checked()) throw Error(ErrorCode::ParseError, "claimed g_inverse is not the inverse of g");
      spec.claimed_g = g;
    }
    if (c.contains("rho")) spec.claimed_rho = RingMap::from_json(c.at("rho"));
  }
  return spec;
}

json decomposition_to_json(const Ring& r, const DecompositionResult& d) {
  json residual = d.exact() ? json("Exact") : json{{"FailedAt", root_key(*d.failed_at)}};
  return {{"ring", r.descriptor()},          {"g", matrix_to_json(d.g.matrix())},
          {"g_inverse", matrix_to_json(d.g.inverse_matrix())}, {"rho", d.rho.to_json()},
          {"residual", residual},             {"method", d.method}};
}

json to_json(const Mismatch& m) {
  return {{"row", m.row}, {"col", m.col}, {"expected", m.expected}, {"actual", m.actual}};
}

json to_json(const RelationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e = {{"instance", c.instance}, {"pass", c.pass}};
    if (c.mismatch) e["mismatch"] = to_json(*c.mismatch);
    if (!c.note.empty()) e["note"] = c.note;
    checks.push_back(std::move(e));
  }
  return {{"relation", r.relation}, {"ring", r.ring}, {"pass", r.pass}, {"failures", r.failures()}, {"checks", checks}};
}

json to_json(const R2Report& r) {
  json formulas = json::array();
  for (const auto& f : r.formulas) {
    json e = {{"number", f.number},
              {"text", f.text},
              {"holds", f.holds},
              {"stated_signs", f.stated_signs},
              {"computed_signs", f.computed_signs},
              {"signs_match", f.signs_match}};
    if (f.mismatch) e["mismatch_with_stated_signs"] = to_json(*f.mismatch);
    formulas.push_back(std::move(e));
  }
  return {{"relation", "R2"},
          {"ring", r.ring},
          {"pass", r.pass},
          {"formulas", formulas},
          {"literal_t2u3_variant_holds", r.literal_variant_holds},
          {"magnitudes", r.magnitudes}};
}

json to_json(const CalibrationResult& r) {
  json entries = json::array();
  for (const auto& e : r.table) {
    entries.push_back({{"formula", e.formula}, {"root", root_json(e.root)}, {"stated", e.stated}, {"computed", e.computed}});
  }
  return {{"found", r.found}, {"flips", r.flips}, {"matched", r.matched}, {"total", r.total}, {"signs", entries}};
}

json to_json(const JacobiReport& r) {
  json out = {{"pass", r.pass}, {"triples_checked", r.triples_checked}};
  if (r.first_failure) out["first_failure"] = *r.first_failure;
  return out;
}

json to_json(const MagnitudeReport& r) {
  json f = json::array();
  for (const auto& m : r.failures) {
    f.push_back({{"x", root_json(m.x)}, {"y", root_json(m.y)}, {"N", m.n}, {"expected", m.expected}});
  }
  return {{"pass", r.pass}, {"pairs_checked", r.pairs_checked}, {"failures", f}};
}

json to_json(const IdentityCheck& c) {
  json out = {{"identity", c.name}, {"root", root_json(c.root)}, {"pass", c.pass}};
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

json to_json(const ResidueSquareReport& r) {
  json mu = json::object();
  for (const auto& [a, b] : r.mu) mu[a] = b;
  return {{"ideal", r.ideal},
          {"quotient", r.quotient.descriptor()},
          {"residue_field", r.residue_field.descriptor()},
          {"mu", mu},
          {"commutes", r.commutes},
          {"failures", r.failures}};
}

}  // namespace g2
