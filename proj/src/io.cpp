#include "gpc/io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>

namespace gpc {

#ifndef GPC_DATA_DIR
#define GPC_DATA_DIR "data"
#endif

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(1) << '\n';
}

std::string default_data_dir() {
  if (const char* env = std::getenv("GPC_DATA_DIR")) return env;
  return GPC_DATA_DIR;
}

Json to_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational, got " + j.dump());
}

Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

namespace {

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<long long>(x.get_si());
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw InputError("bad integer " + j.dump());
    return x;
  }
  throw InputError("expected an integer, got " + j.dump());
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw InputError(std::string("missing integer field ") + key);
  return j[key].get<int>();
}

Json halfspace_json(const RVec& normal, const Rational& offset) {
  return Json{{"normal", to_json(normal)}, {"offset", to_json(offset)}};
}

std::vector<std::vector<int>> cycles_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("cycles must be an array");
  std::vector<std::vector<int>> out;
  for (const auto& c : j) out.push_back(c.get<std::vector<int>>());
  return out;
}

}  // namespace

Json to_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

std::vector<Integer> integers_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of integers");
  std::vector<Integer> v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

Json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("partition must be an array");
  auto parts = j.get<std::vector<int>>();
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] < 0 || (i && parts[i] > parts[i - 1])) throw InputError("partition must be non-increasing");
  return Partition(parts);
}

Json to_json(const Permutation& w) {
  return Json{{"cycles", w.cycle_string()}, {"one_line", w.one_line(w.degree())}};
}

Json to_json(const OccupationInequality& q) {
  Json j{{"lambda", to_json(q.lambda_coeffs)}};
  if (!q.is_pure()) j["mu"] = to_json(q.mu_coeffs);
  j["bound"] = integer_json(q.bound);
  j["text"] = q.to_string();
  return j;
}

OccupationInequality inequality_from_json(const Json& j) {
  OccupationInequality q;
  q.lambda_coeffs = integers_from_json(j.at("lambda"));
  if (j.contains("mu")) q.mu_coeffs = integers_from_json(j["mu"]);
  q.bound = integer_from_json(j.at("bound"));
  return q;
}

Json to_json(const WedgeState& s) {
  Json terms = Json::array();
  for (const auto& [subset, c] : s.amplitudes)
    terms.push_back(Json{{"subset", subset}, {"sign", c.sign}, {"radicand", to_json(c.radicand)}});
  return Json{{"N", s.N}, {"r", s.r}, {"terms", terms}};
}

WedgeState wedge_state_from_json(const Json& j) {
  WedgeState s;
  s.N = int_field(j, "N");
  s.r = int_field(j, "r");
  if (!j.contains("terms") || !j["terms"].is_array()) throw InputError("state needs a terms array");
  for (const auto& t : j["terms"]) {
    auto subset = t.at("subset").get<std::vector<int>>();
    RootCoefficient c{t.value("sign", 1), rational_from_json(t.at("radicand"))};
    if (!s.amplitudes.emplace(subset, c).second) throw InputError("repeated subset in state");
  }
  s.validate();
  return s;
}

Json to_json(const RationalPolytope& P) {
  Json eqs = Json::array(), facets = Json::array(), verts = Json::array();
  for (const auto& e : P.equations) eqs.push_back(halfspace_json(e.normal, e.offset));
  for (const auto& f : P.facets) facets.push_back(halfspace_json(f.normal, f.offset));
  for (const auto& v : P.vertices) verts.push_back(to_json(v));
  return Json{{"dim", P.ambient_dim}, {"equations", eqs}, {"facets", facets}, {"vertices", verts}};
}

RationalPolytope polytope_from_json(const Json& j) {
  RationalPolytope P;
  P.ambient_dim = int_field(j, "dim");
  auto check = [&](const RVec& v) {
    if (static_cast<int>(v.size()) != P.ambient_dim) throw InputError("polytope entry has the wrong dimension");
    return v;
  };
  for (const auto& e : j.at("equations"))
    P.equations.push_back({check(rationals_from_json(e.at("normal"))), rational_from_json(e.at("offset"))});
  for (const auto& f : j.at("facets"))
    P.facets.push_back({check(rationals_from_json(f.at("normal"))), rational_from_json(f.at("offset"))});
  for (const auto& v : j.at("vertices")) P.vertices.push_back(check(rationals_from_json(v)));
  return P;
}

Json to_json(const InequalityFamily& f) {
  Json j{{"kind", to_string(f.kind)}, {"N", f.N}};
  if (f.kind == FamilyKind::GrassmannSecond || f.kind == FamilyKind::Series)
    j["p"] = f.p;
  else
    j["r"] = f.r;
  Json items = Json::array();
  for (const auto& it : f.items) {
    Json x{{"indices", it.indices}, {"bound", integer_json(it.inequality.bound)}, {"c_gamma", integer_json(it.c_gamma)}};
    if (it.diagram) x["diagram"] = to_json(*it.diagram);
    x["text"] = it.inequality.to_string();
    items.push_back(std::move(x));
  }
  Json excl = Json::array();
  for (const auto& e : f.exclusions) {
    Json x{{"indices", e.indices},
           {"bound", integer_json(e.inequality.bound)},
           {"diagram", to_json(e.diagram)},
           {"c_gamma", integer_json(e.c_gamma)},
           {"reason", e.reason}};
    if (e.certificate)
      x["counterexample"] = Json{{"source", e.certificate->source},
                                 {"spectrum", to_json(e.certificate->spectrum)},
                                 {"state", to_json(e.certificate->witness)}};
    else
      x["counterexample"] = nullptr;
    excl.push_back(std::move(x));
  }
  j["items"] = items;
  j["exclusions"] = excl;
  if (!f.note.empty()) j["note"] = f.note;
  return j;
}

Json to_json(const std::vector<PlethysmComponent>& components) {
  Json a = Json::array();
  for (const auto& c : components)
    a.push_back(Json{{"lambda", to_json(c.lambda)}, {"mu", to_json(c.mu)}, {"mult", integer_json(c.multiplicity)}});
  return a;
}

Json to_json(const FacetMatch& m) {
  Json matched = Json::array(), unmatched = Json::array();
  for (const auto& f : m.matched)
    matched.push_back(Json{{"facet", halfspace_json(f.facet.normal, f.facet.offset)},
                           {"inequality", to_json(f.inequality)},
                           {"a", f.triple.a.values()},
                           {"v", to_json(f.triple.v)},
                           {"w", to_json(f.triple.w)},
                           {"c", integer_json(f.c)},
                           {"from_equation", f.from_equation}});
  for (const auto& f : m.unmatched) unmatched.push_back(halfspace_json(f.normal, f.offset));
  return Json{{"ambient", m.ambient}, {"matched", matched}, {"unmatched", unmatched}};
}

Json to_json(const PipelineReport& report) {
  Json steps = Json::array();
  for (const auto& s : report.steps)
    steps.push_back(Json{{"M", s.M},
                         {"points", s.points},
                         {"inner_dim", s.inner_dim},
                         {"inner_vertices", s.inner_vertices},
                         {"inner_facets", s.inner_facets},
                         {"ambient_facets", s.match.ambient},
                         {"matched", s.match.matched.size()},
                         {"unmatched", s.match.unmatched.size()},
                         {"converged", s.converged},
                         {"seconds", s.seconds}});
  Json ineqs = Json::array();
  for (const auto& q : report.inequalities) ineqs.push_back(to_json(q));
  Json j{{"nu", to_json(report.system.nu)},
         {"r", report.system.r},
         {"rank_bound", report.system.rank},
         {"status", report.status},
         {"converged_at", report.converged_at ? Json(*report.converged_at) : Json(nullptr)},
         {"steps", steps},
         {"inequalities", ineqs}};
  if (!report.steps.empty()) j["last_match"] = to_json(report.steps.back().match);
  j["inner"] = to_json(report.inner);
  j["outer"] = to_json(report.outer);
  return j;
}

Json to_json(const TableReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows)
    rows.push_back(Json{{"row", r.index},
                        {"expected", integer_json(r.expected)},
                        {"computed", integer_json(r.computed)},
                        {"v_consistent", r.v_consistent},
                        {"bound_consistent", r.bound_consistent},
                        {"derived_matches", r.derived_matches},
                        {"ok", r.ok()}});
  return Json{{"name", report.name}, {"all_ok", report.all_ok()}, {"rows", rows}};
}

GoldenTable golden_table_from_json(const Json& j) {
  GoldenTable t;
  t.name = j.value("name", "");
  t.nu = partition_from_json(j.at("nu"));
  t.r = int_field(j, "r");
  for (const auto& row : j.at("rows")) {
    GoldenRow g;
    g.lambda_coeffs = integers_from_json(row.at("lambda_coeffs"));
    g.bound = integer_from_json(row.at("bound"));
    g.v = Permutation::from_cycles(cycles_from_json(row.at("v_cycles")));
    g.w = Permutation::from_cycles(cycles_from_json(row.at("w_cycles")));
    g.c = integer_from_json(row.at("c"));
    t.rows.push_back(std::move(g));
  }
  return t;
}

VertexTable vertex_table_from_json(const Json& j) {
  VertexTable t;
  t.name = j.value("name", "");
  t.N = int_field(j, "N");
  t.r = int_field(j, "r");
  for (const auto& row : j.at("rows")) {
    VertexRow v{wedge_state_from_json(row.at("state")), rationals_from_json(row.at("vertex"))};
    if (v.state.N != t.N || v.state.r != t.r) throw InputError("state does not match the table system");
    t.rows.push_back(std::move(v));
  }
  return t;
}

std::vector<SchubertTableRow> schubert_table_from_json(const Json& j) {
  std::vector<SchubertTableRow> out;
  for (const auto& row : j.at("rows"))
    out.push_back({row.at("w").get<std::string>(), row.at("polynomial").get<std::string>()});
  return out;
}

Permutation permutation_from_word(const std::string& word) {
  std::vector<int> one_line;
  for (char ch : word) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw InputError("bad permutation word " + word);
    one_line.push_back(ch - '0' + 1);
  }
  return Permutation(one_line);
}

SparsePoly parse_letter_polynomial(const std::string& text, const std::string& letters) {
  SparsePoly f;
  std::size_t i = 0;
  auto fail = [&] { throw InputError("cannot parse polynomial '" + text + "'"); };
  while (i < text.size()) {
    Integer coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      coeff = Integer(text.substr(i, j - i));
      i = j;
    }
    Monomial m{};
    while (i < text.size() && text[i] != '+') {
      const auto pos = letters.find(text[i]);
      if (pos == std::string::npos) fail();
      ++i;
      int e = 1;
      if (i < text.size() && text[i] == '^') {
        std::size_t j = ++i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) fail();
        e = std::stoi(text.substr(i, j - i));
        i = j;
      }
      m.set(static_cast<int>(pos), m[static_cast<int>(pos)] + e);
    }
    f.add_term(m, coeff);
    if (i < text.size()) {
      ++i;
      if (i == text.size()) fail();
    }
  }
  return f;
}

}  // namespace gpc
