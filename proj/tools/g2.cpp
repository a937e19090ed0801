#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "g2/localize.hpp"
#include "g2/proofkit.hpp"
#include "g2/relations.hpp"
#include "g2/serialize.hpp"
#include "g2/suite.hpp"

#ifndef G2_DEFAULT_FLEET
#define G2_DEFAULT_FLEET "config/fleet.json"
#endif

using nlohmann::json;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string ring = "int";
  std::string ideal;
  std::string relations = "R1,R2,R4,R5,R6";
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string spec;
  std::string out;
  std::string root = "1,0";
  std::string table = "calibrated";
  std::string config = G2_DEFAULT_FLEET;
  std::string criteria = "1,2,3,4,5,6,7,8";
  int depth = 4;
  bool no_frobenius = false;
};

struct Report {
  json data = json::object();
  std::vector<std::string> text;
  bool pass = true;
  void line(std::string s) { text.push_back(std::move(s)); }
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

const g2::StructureTable& table_of(const Options& o) {
  static const g2::StructureTable plain = g2::build_structure_table();
  if (o.table == "default") return plain;
  return g2::calibrated_table();
}

std::string format_matrix(const g2::Matrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t i = 0; i < g2::kDim; ++i) {
    for (std::size_t j = 0; j < g2::kDim; ++j) {
      cells.push_back(m.ring()->format(m(i, j)));
      width = std::max(width, cells.back().size());
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < g2::kDim; ++i) {
    for (std::size_t j = 0; j < g2::kDim; ++j) os << std::setw(static_cast<int>(width) + 1) << cells[i * g2::kDim + j];
    if (i + 1 < g2::kDim) os << '\n';
  }
  return os.str();
}

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

// ---------------------------------------------------------------------------

Report cmd_structure_constants(const Options& o) {
  Report r;
  const auto& t = table_of(o);
  const auto jac = g2::check_jacobi(t);
  const auto mag = g2::check_magnitudes(t);
  r.pass = jac.pass && mag.pass;
  r.data = {{"table", g2::table_to_json(t)}, {"jacobi", g2::to_json(jac)}, {"magnitudes", g2::to_json(mag)}};
  r.line("sign flips " + g2::table_to_json(t)["flips"].dump());
  for (const auto& x : g2::all_roots()) {
    for (const auto& y : g2::all_roots()) {
      if (int n = t.nconst(x, y)) r.line("N(" + g2::root_key(x) + "; " + g2::root_key(y) + ") = " + std::to_string(n));
    }
  }
  for (const auto& x : g2::all_roots()) {
    if (!x.is_positive()) continue;
    const auto& h = t.hbracket[g2::root_index(x)];
    r.line("[x_" + g2::root_key(x) + ", x_-" + g2::root_key(x) + "] = " + std::to_string(h[0]) + " h1 + " +
           std::to_string(h[1]) + " h2");
  }
  r.line(verdict(jac.pass) + " Jacobi identity on " + std::to_string(jac.triples_checked) + " triples");
  r.line(verdict(mag.pass) + " |N| = p + 1 on " + std::to_string(mag.pairs_checked) + " pairs");
  return r;
}

Report cmd_ad(const Options& o) {
  Report r;
  const g2::Root root = g2::parse_root(o.root);
  const g2::Ring ring = g2::Ring::parse(o.ring);
  const g2::Matrix m = g2::Matrix::from_int(ring, g2::ad_matrix(table_of(o), root));
  r.data = {{"root", g2::root_key(root)}, {"ring", ring.descriptor()}, {"matrix", g2::matrix_to_json(m)}};
  r.line("ad x_" + g2::root_key(root) + " over " + ring.descriptor() + " (basis h1, h2, roots in table order)");
  r.line(format_matrix(m));
  return r;
}

void add_relation(Report& r, const g2::RelationReport& rep) {
  r.pass = r.pass && rep.pass;
  r.data[rep.relation] = g2::to_json(rep);
  r.line(verdict(rep.pass) + " " + rep.relation + " over " + rep.ring + ": " + std::to_string(rep.checks.size()) +
         " checks, " + std::to_string(rep.failures()) + " failures");
  for (const auto& c : rep.checks) {
    if (!c.pass) r.line("  " + c.instance + (c.note.empty() ? "" : " " + c.note));
  }
}

Report cmd_verify(const Options& o) {
  Report r;
  const auto& t = table_of(o);
  const g2::Ring ring = g2::Ring::parse(o.ring);
  auto wanted = split(o.relations);
  for (const auto& w : wanted) {
    if (w != "R1" && w != "R2" && w != "R4" && w != "R5" && w != "R6") throw Usage("unknown relation " + w);
  }
  auto has = [&](const char* n) { return std::find(wanted.begin(), wanted.end(), n) != wanted.end(); };
  if (has("R1")) add_relation(r, g2::verify_R1(t, ring));
  if (has("R2")) {
    const auto rep = g2::verify_R2(t, ring);
    r.pass = r.pass && rep.pass;
    r.data["R2"] = g2::to_json(rep);
    r.line(verdict(rep.pass) + " R2 over " + rep.ring);
    for (const auto& f : rep.formulas) {
      std::string signs;
      for (int s : f.computed_signs) signs += s > 0 ? "+" : "-";
      const char* status = !f.holds ? "FAILS           " : f.signs_match ? "holds           " : "holds up to sign";
      r.line("  " + std::string(status) + "  " + f.text + (f.signs_match ? "" : "  (computed signs " + signs + ")"));
    }
    r.line(std::string("  literal t^2u^3 variant: ") + (rep.literal_variant_holds ? "holds" : "fails"));
  }
  if (has("R4") || has("R5")) {
    const auto rep = g2::verify_R4_R5(t, ring, {ring});
    if (has("R5")) add_relation(r, rep.r5);
    if (has("R4")) add_relation(r, rep.r4);
    if (has("R5")) {
      json c = json::array();
      for (const auto& row : rep.c) c.push_back(row);
      r.data["c"] = c;
    }
  }
  if (has("R6")) add_relation(r, g2::verify_R6(t, {ring}));
  return r;
}

Report cmd_identities(const Options& o) {
  Report r;
  const g2::Ring ring = g2::Ring::parse(o.ring);
  if (!ring->has_inverse_of_3()) throw Usage("3 not invertible in " + ring.descriptor());
  const g2::Chevalley g(table_of(o), ring);
  json longs = json::array(), shorts = json::array();
  for (const auto& a : g2::all_roots()) {
    if (!a.is_long()) continue;
    const auto rec = g2::recover_X_long(g, a);
    for (const auto& s : rec.squares) {
      const bool ok = s.sign != 0;
      r.pass = r.pass && ok;
      longs.push_back({{"alpha", g2::root_key(a)}, {"gamma", g2::root_key(s.gamma)}, {"beta", g2::root_key(s.beta)}, {"sign", s.sign}});
      r.line(verdict(ok) + " (x_" + g2::root_key(s.gamma) + "(1)x_" + g2::root_key(s.beta) + "(1) - x_" +
             g2::root_key(s.gamma) + "(1) - x_" + g2::root_key(s.beta) + "(1) + E)^2 = " + (s.sign < 0 ? "-" : "+") +
             "E_(" + g2::root_key(a) + ")");
    }
    const bool ok = rec.X == g.X(a);
    r.pass = r.pass && ok;
    r.line(verdict(ok) + " recovered X_" + g2::root_key(a) + " = ad x_" + g2::root_key(a));
  }
  for (const auto& b : g2::all_roots()) {
    if (!b.is_short()) continue;
    for (const auto& c : g2::check_short_identities(g, b)) {
      r.pass = r.pass && c.pass;
      shorts.push_back(g2::to_json(c));
      r.line(verdict(c.pass) + " " + g2::root_key(b) + ": " + c.name + (c.detail.empty() ? "" : " " + c.detail));
    }
  }
  r.data = {{"ring", ring.descriptor()}, {"long_squares", longs}, {"short_identities", shorts}};
  return r;
}

g2::MaximalIdealHandle ideal_of(const g2::Ring& ring, const std::string& text) {
  if (text.empty()) throw Usage("--ideal is required");
  return g2::parse_ideal(ring, text);
}

Report cmd_localize(const Options& o) {
  Report r;
  const g2::Ring ring = g2::Ring::parse(o.ring);
  const auto m = ideal_of(ring, o.ideal);
  const auto loc = g2::localize_at(ring, m);
  const auto* d = loc.ring.as<g2::DerivedFiniteRing>();
  json classes = json::array();
  r.line(loc.ring.descriptor() + ": " + std::to_string(*loc.ring->size()) + " classes");
  for (const auto& v : loc.ring->elements()) {
    const auto [a, s] = d->representative(v);
    classes.push_back({{"label", loc.ring->format(v)}, {"numerator", ring->format(a)}, {"denominator", ring->format(s)}});
    r.line("  " + loc.ring->format(v) + " = " + ring->format(a) + "/" + ring->format(s));
  }
  json map = json::object();
  r.line("canonical map a -> a/1:");
  for (const auto& a : ring->elements()) {
    map[ring->format(a)] = loc.ring->format(loc.canonical(a));
    r.line("  " + ring->format(a) + " -> " + loc.ring->format(loc.canonical(a)));
  }
  const auto rad = g2::radical_of_local(loc.ring);
  json radj = json::array();
  std::string rads;
  for (const auto& v : rad) {
    radj.push_back(loc.ring->format(v));
    rads += (rads.empty() ? "" : ", ") + loc.ring->format(v);
  }
  r.line("radical: {" + rads + "}");
  const auto sq = g2::residue_square_check(ring, m);
  r.pass = sq.commutes;
  r.line(verdict(sq.commutes) + " residue square R/I = " + sq.quotient.descriptor() + " ~ " + sq.residue_field.descriptor());
  r.data = {{"ring", ring.descriptor()}, {"ideal", m.label()},     {"localization", loc.ring.descriptor()},
            {"classes", classes},        {"canonical_map", map},   {"radical", radj},
            {"residue_square", g2::to_json(sq)}};
  return r;
}

Report cmd_embed(const Options& o) {
  Report r;
  const g2::Ring ring = g2::Ring::parse(o.ring);
  const auto e = g2::diagonal_embed(ring);
  json ideals = json::array();
  for (std::size_t i = 0; i < e.ideals.size(); ++i) {
    ideals.push_back({{"ideal", e.ideals[i].label()}, {"localization", e.localizations[i].descriptor()}});
    r.line("maximal ideal " + e.ideals[i].label() + " -> " + e.localizations[i].descriptor() + " (" +
           std::to_string(*e.localizations[i]->size()) + " elements)");
  }
  const auto& target = e.map.target();
  json map = json::object();
  for (const auto& a : ring->elements()) {
    map[ring->format(a)] = target->format(e.map(a));
    r.line("  " + ring->format(a) + " -> " + target->format(e.map(a)));
  }
  r.pass = e.injective;
  r.line(verdict(e.injective) + " injective into " + target.descriptor());
  r.data = {{"ring", ring.descriptor()}, {"ideals", ideals}, {"product", target.descriptor()}, {"map", map},
            {"injective", e.injective}};
  return r;
}

json read_json_file(const std::string& path) {
  if (path.empty()) throw Usage("--spec is required");
  std::ifstream in(path);
  if (!in) throw Usage("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Usage(path + ": " + e.what());
  }
}

Report cmd_decompose(const Options& o) {
  Report r;
  const auto spec = g2::spec_from_json(read_json_file(o.spec));
  const g2::GeneratorRelations rel(table_of(o));
  const auto chk = g2::check_spec_relations(spec, rel);
  if (!chk.pass) {
    r.pass = false;
    r.data = {{"ring", spec.ring.descriptor()}, {"relations", chk.failures}};
    r.line("FAIL images violate the generator relations:");
    for (const auto& f : chk.failures) r.line("  " + f);
    return r;
  }
  try {
    const auto d = g2::decompose_standard(spec, rel);
    r.pass = d.exact();
    r.data = g2::decomposition_to_json(spec.ring, d);
    r.line(verdict(d.exact()) + " " + (d.exact() ? "Exact" : "FailedAt " + g2::root_key(*d.failed_at)) + " via " +
           d.method + " search, rho = " + d.rho.name());
    r.line("g =");
    r.line(format_matrix(d.g.matrix()));
  } catch (const g2::Error& e) {
    if (e.code() != g2::ErrorCode::SearchExhausted && e.code() != g2::ErrorCode::NotOfRootForm &&
        e.code() != g2::ErrorCode::LengthMismatch) {
      throw;
    }
    r.pass = false;
    r.data = {{"ring", spec.ring.descriptor()}, {"error", e.what()}};
    r.line(std::string("FAIL ") + e.what());
  }
  return r;
}

Report cmd_calibrate(const Options&) {
  Report r;
  const auto& c = g2::default_calibration();
  r.pass = c.found;
  r.data = g2::to_json(c);
  r.line((c.found ? std::string("calibration found") : std::string("NoCalibrationFound")) + ": " +
         std::to_string(c.matched) + "/" + std::to_string(c.total) + " stated signs reproduced by flips " +
         json(c.flips).dump());
  for (const auto& e : c.table) {
    r.line("  formula " + std::to_string(e.formula) + " x_" + g2::root_key(e.root) + ": stated " + std::to_string(e.stated) +
           ", computed " + std::to_string(e.computed) + (e.stated == e.computed ? "" : "  <-- differs"));
  }
  return r;
}

Report cmd_fleet(const Options& o) {
  Report r;
  g2::SuiteOptions so;
  so.fleet = g2::load_fleet(o.config);
  so.seed = o.seed;
  json results = json::array();
  for (const auto& c : split(o.criteria)) {
    int n = 0;
    try {
      n = std::stoi(c);
    } catch (const std::exception&) {
      throw Usage("bad criterion " + c);
    }
    const auto res = g2::run_criterion(n, so);
    r.pass = r.pass && res.pass();
    results.push_back({{"criterion", res.number}, {"name", res.name}, {"pass", res.pass()}, {"seconds", res.seconds},
                       {"limit_seconds", res.limit_seconds}, {"details", res.details}});
    r.line(g2::summary_line(res));
  }
  std::string fleet;
  for (const auto& f : so.fleet) fleet += (fleet.empty() ? "" : ", ") + f.descriptor();
  r.line("fleet: " + fleet);
  r.data = {{"seed", o.seed}, {"fleet", fleet}, {"criteria", results}};
  return r;
}

Report cmd_random_spec(const Options& o) {
  Report r;
  const g2::Ring ring = g2::Ring::parse(o.ring);
  if (!ring->is_finite()) throw Usage("random specs need a finite ring");
  const g2::Chevalley g(table_of(o), ring);
  std::mt19937_64 rng(o.seed);
  const auto rs = g2::random_standard_spec(g, rng, !o.no_frobenius, o.depth);
  r.data = g2::spec_to_json(rs.spec);
  r.data["word"] = g2::word_to_json(ring, rs.word);
  r.line("spec over " + ring.descriptor() + ": inner word of length " + std::to_string(rs.word.letters.size()) +
         ", ring factor " + rs.rho.name() + " (use --format json for the spec)");
  return r;
}

int exit_code_for(g2::ErrorCode c) {
  switch (c) {
    case g2::ErrorCode::NoCalibrationFound:
    case g2::ErrorCode::SearchExhausted:
    case g2::ErrorCode::NotOfRootForm:
    case g2::ErrorCode::LengthMismatch:
    case g2::ErrorCode::NoIsomorphism:
    case g2::ErrorCode::NotPlusMinusOne:
    case g2::ErrorCode::InconsistentSigns:
      return 1;
    default:
      return 2;
  }
}

void emit(const Report& r, const Options& o) {
  std::ostringstream os;
  if (o.format == "json") {
    json out = r.data;
    out["pass"] = r.pass;
    os << out.dump(2) << '\n';
  } else {
    for (const auto& l : r.text) os << l << '\n';
  }
  if (o.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(o.out);
    if (!f) throw Usage("cannot write " + o.out);
    f << os.str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adjoint Chevalley group G2 over commutative rings"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", o.out, "Write the report to FILE");
  app.add_option("--seed", o.seed, "Seed for randomized specs");
  app.add_option("--table", o.table, "Structure table: calibrated or default")->check(CLI::IsMember({"calibrated", "default"}));

  std::map<std::string, std::function<Report(const Options&)>> commands;
  auto sub = [&](const std::string& name, const std::string& help, auto fn) {
    commands[name] = fn;
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  sub("structure-constants", "Print N and [x_a, x_-a]; check Jacobi and |N| = p+1", cmd_structure_constants);
  sub("ad", "Print ad x_a", cmd_ad)->add_option("--root", o.root, "Root as a,b in simple-root coordinates");
  app.get_subcommand("ad")->add_option("--ring", o.ring, "Ring descriptor");
  auto* verify = sub("verify", "Check relations R1, R2, R4, R5, R6 over a ring", cmd_verify);
  verify->add_option("--ring", o.ring, "Ring descriptor");
  verify->add_option("--relations", o.relations, "Comma-separated subset of R1,R2,R4,R5,R6");
  sub("identities", "Long-root square and the short-root identities (needs 1/3)", cmd_identities)
      ->add_option("--ring", o.ring, "Ring descriptor");
  auto* localize = sub("localize", "Localize a finite ring at a maximal ideal", cmd_localize);
  localize->add_option("--ring", o.ring, "Finite ring descriptor")->required();
  localize->add_option("--ideal", o.ideal, "Ideal generators, comma separated")->required();
  sub("embed", "Diagonal embedding into the product of localizations", cmd_embed)
      ->add_option("--ring", o.ring, "Finite ring descriptor")
      ->required();
  sub("decompose", "Decompose an automorphism spec as inner o ring automorphism", cmd_decompose)
      ->add_option("--spec", o.spec, "Spec JSON file")
      ->required();
  sub("calibrate", "Search sign rescalings against the stated R2 coefficients", cmd_calibrate);
  auto* fleet = sub("fleet", "Run the acceptance criteria over the fleet", cmd_fleet);
  fleet->add_option("--config", o.config, "Fleet config JSON");
  fleet->add_option("--criteria", o.criteria, "Comma-separated criterion numbers");
  auto* rs = sub("random-spec", "Emit a random standard automorphism spec", cmd_random_spec);
  rs->add_option("--ring", o.ring, "Finite ring descriptor")->required();
  rs->add_option("--depth", o.depth, "Maximum inner word length")->check(CLI::Range(0, 16));
  rs->add_flag("--no-frobenius", o.no_frobenius, "Keep the ring factor trivial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const auto* chosen = app.get_subcommands().front();
  try {
    const Report r = commands.at(chosen->get_name())(o);
    emit(r, o);
    return r.pass ? 0 : 1;
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << '\n' << chosen->help();
    return 2;
  } catch (const g2::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}
