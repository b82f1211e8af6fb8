#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "gpc/io.hpp"
#include "gpc/schubert.hpp"

namespace fs = std::filesystem;
using namespace gpc;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInput = 2;
constexpr int kResource = 3;

std::vector<int> parse_int_list(const std::string& text) {
  std::string cleaned;
  for (char ch : text) cleaned += (ch == ',' || ch == '[' || ch == ']') ? ' ' : ch;
  std::istringstream in(cleaned);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("not an integer list: " + text);
    }
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  auto parts = parse_int_list(text);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] < 0 || (i && parts[i] > parts[i - 1])) throw InputError("not a partition: " + text);
  return Partition(parts);
}

void emit(const Json& j, const std::string& out) {
  if (out.empty())
    std::cout << j.dump(1) << '\n';
  else
    write_json_file(out, j);
}

// Runs body(i) for i in [0, n) on up to `jobs` threads.
template <class F>
void parallel_for(std::size_t n, int jobs, F&& body) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<fs::path> fixture_files(const std::string& dir, const std::string& sub, const std::string& prefix) {
  std::vector<fs::path> files;
  const fs::path root = fs::path(dir) / sub;
  if (!fs::is_directory(root)) throw InputError("missing fixture directory " + root.string());
  for (const auto& e : fs::directory_iterator(root))
    if (e.path().extension() == ".json" && e.path().filename().string().rfind(prefix, 0) == 0) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

struct Options {
  std::string out;
  std::string fixtures = default_data_dir();
  int jobs = 1;
  double tolerance = 1e-9;
};

int cmd_schubert(const std::string& word, const std::string& cycles, int n, bool table, const Options& opt) {
  if (table) {
    const auto rows = schubert_table_from_json(read_json_file((fs::path(opt.fixtures) / "tables/schubert_s4.json").string()));
    Json report = Json::array();
    int ok = 0;
    for (const auto& row : rows) {
      const Permutation w = permutation_from_word(row.word);
      const SparsePoly computed = schubert_polynomial(w);
      const bool match = computed == parse_letter_polynomial(row.polynomial, "xyz");
      ok += match;
      std::cout << row.word << "  " << computed.to_string() << (match ? "" : "  MISMATCH, expected " + row.polynomial) << '\n';
      report.push_back(Json{{"w", row.word}, {"computed", computed.to_string()}, {"expected", row.polynomial}, {"ok", match}});
    }
    std::cout << "schubert table: " << ok << "/" << rows.size() << " match\n";
    if (!opt.out.empty()) write_json_file(opt.out, report);
    return ok == static_cast<int>(rows.size()) ? kOk : kMismatch;
  }
  if (word.empty() == cycles.empty()) throw InputError("give exactly one of --w or --cycles");
  const Permutation w = word.empty() ? Permutation::parse_cycles(cycles) : permutation_from_word(word);
  const SparsePoly f = n > 0 ? schubert_polynomial(w, n) : schubert_polynomial(w);
  Json terms = Json::array();
  for (const auto& [m, c] : f.sorted_terms())
    terms.push_back(Json{{"exponents", m.exponents(std::max(1, f.variable_count()))}, {"coefficient", c.get_str()}});
  emit(Json{{"w", to_json(w)}, {"length", w.length()}, {"polynomial", f.to_string()}, {"terms", terms}}, opt.out);
  return kOk;
}

int cmd_coeff(const std::string& a, const std::string& nu, int r, const std::string& v, const std::string& w,
              const Options& opt) {
  const auto values = parse_int_list(a);
  const TestSpectrum spectrum(std::vector<long>(values.begin(), values.end()));
  const int rank = r > 0 ? r : spectrum.size();
  const Integer c = coefficient(spectrum, parse_partition(nu), rank, Permutation::parse_cycles(v), Permutation::parse_cycles(w));
  emit(Json{{"c", c.get_str()}}, opt.out);
  return kOk;
}

int cmd_verify_tables(const Options& opt) {
  const auto files = fixture_files(opt.fixtures, "tables", "wedge");
  std::vector<TableReport> reports(files.size());
  parallel_for(files.size(), opt.jobs,
               [&](std::size_t i) { reports[i] = verify_table(golden_table_from_json(read_json_file(files[i].string()))); });
  bool all = true;
  Json j = Json::array();
  for (const auto& rep : reports) {
    int ok = 0;
    for (const auto& row : rep.rows) {
      ok += row.ok();
      if (!row.ok())
        std::cout << rep.name << " row " << row.index << ": expected " << row.expected.get_str() << ", computed "
                  << row.computed.get_str() << (row.v_consistent ? "" : " (v inconsistent)")
                  << (row.bound_consistent ? "" : " (bound inconsistent)") << '\n';
    }
    std::cout << rep.name << ": " << ok << "/" << rep.rows.size() << " match\n";
    all = all && rep.all_ok();
    j.push_back(to_json(rep));
  }
  if (!opt.out.empty()) write_json_file(opt.out, j);
  return all ? kOk : kMismatch;
}

Json occupations_json(const Occupations& occ) {
  Json j{{"values", occ.values}};
  if (occ.exact) j["exact"] = to_json(*occ.exact);
  return j;
}

int cmd_occupation(const std::string& path, const Options& opt) {
  const WedgeState state = wedge_state_from_json(read_json_file(path));
  const Occupations occ = occupation_numbers(state);
  std::vector<std::pair<std::string, OccupationInequality>> checks;
  for (const auto& it : majorization_constraints(Partition::column(state.N), state.r).items)
    checks.emplace_back("majorization", it.inequality);
  if (state.r > state.N)
    for (const auto& it : grassmann_kind1(state.N, state.r).items) checks.emplace_back("grassmann1", it.inequality);
  for (const auto& it : grassmann_kind2(state.N, state.N + 1).items)
    if (static_cast<int>(it.indices.back()) <= state.r) checks.emplace_back("grassmann2", it.inequality);
  Json report = Json::array();
  bool all = true;
  for (const auto& [family, q] : checks) {
    double lhs = 0;
    bool holds = false, tight = false;
    if (occ.exact) {
      Rational s = 0;
      for (std::size_t i = 0; i < q.lambda_coeffs.size(); ++i) s += q.lambda_coeffs[i] * (*occ.exact)[i];
      holds = s <= q.bound;
      tight = s == q.bound;
      lhs = s.get_d();
    } else {
      for (std::size_t i = 0; i < q.lambda_coeffs.size(); ++i) lhs += q.lambda_coeffs[i].get_d() * occ.values[i];
      holds = lhs <= q.bound.get_d() + opt.tolerance;
      tight = std::abs(lhs - q.bound.get_d()) <= opt.tolerance;
    }
    all = all && holds;
    report.push_back(Json{{"family", family}, {"inequality", q.to_string()}, {"lhs", lhs}, {"holds", holds}, {"tight", tight}});
  }
  emit(Json{{"N", state.N}, {"r", state.r}, {"occupations", occupations_json(occ)}, {"inequalities", report}}, opt.out);
  return all ? kOk : kMismatch;
}

int cmd_verify_vertices(const Options& opt) {
  const auto files = fixture_files(opt.fixtures, "states", "wedge");
  bool all = true;
  Json j = Json::array();
  for (const auto& file : files) {
    const VertexTable table = vertex_table_from_json(read_json_file(file.string()));
    std::vector<VertexCheck> checks(table.rows.size());
    parallel_for(table.rows.size(), opt.jobs,
                 [&](std::size_t i) { checks[i] = verify_vertex(table.rows[i].state, table.rows[i].vertex, opt.tolerance); });
    int ok = 0;
    double worst = 0;
    Json rows = Json::array();
    for (std::size_t i = 0; i < checks.size(); ++i) {
      ok += checks[i].ok;
      worst = std::max(worst, checks[i].max_deviation);
      if (!checks[i].ok) std::cout << table.name << " row " << i + 1 << ": deviation " << checks[i].max_deviation << '\n';
      rows.push_back(Json{{"row", i + 1}, {"ok", checks[i].ok}, {"max_deviation", checks[i].max_deviation},
                          {"computed", checks[i].computed}});
    }
    std::cout << table.name << ": " << ok << "/" << checks.size() << " match (max deviation " << worst << ")\n";
    all = all && ok == static_cast<int>(checks.size());
    j.push_back(Json{{"name", table.name}, {"rows", rows}});
  }
  if (!opt.out.empty()) write_json_file(opt.out, j);
  return all ? kOk : kMismatch;
}

int cmd_generate(const std::string& kind, int N, int r, int p, const std::string& nu, int max_p, const Options& opt) {
  InequalityFamily fam;
  if (kind == "majorization") {
    if (nu.empty()) throw InputError("majorization needs --nu");
    fam = majorization_constraints(parse_partition(nu), r);
  } else if (kind == "grassmann1") {
    fam = grassmann_kind1(N, r);
  } else if (kind == "grassmann2") {
    fam = grassmann_kind2(N, p, max_p);
  } else if (kind == "series") {
    fam.kind = FamilyKind::Series;
    fam.N = N;
    fam.p = p;
    const OccupationInequality q = series_inequality(N, p);
    FamilyItem item;
    for (std::size_t i = 0; i < q.lambda_coeffs.size(); ++i)
      if (q.lambda_coeffs[i] != 0) item.indices.push_back(static_cast<int>(i) + 1);
    item.c_gamma = 1;
    item.inequality = q;
    fam.items.push_back(std::move(item));
  } else {
    throw InputError("unknown family kind " + kind);
  }
  emit(to_json(fam), opt.out);
  return kOk;
}

int cmd_plethysm(const std::string& nu, int r, const std::string& mu, int M, int rank, const Options& opt) {
  const Partition n = parse_partition(nu);
  if (!mu.empty()) {
    const Partition m = parse_partition(mu);
    std::vector<PlethysmComponent> comps;
    for (auto& [lambda, mult] : schur_decompose(plethysm_schur(m, character(n, r)))) comps.push_back({lambda, m, mult});
    emit(to_json(comps), opt.out);
    return kOk;
  }
  emit(to_json(inner_points(n, r, rank, M).components), opt.out);
  return kOk;
}

int cmd_polytope(const std::string& nu, int r, int rank, const PipelineOptions& popt, const Options& opt) {
  const PipelineReport report = pipeline(MomentSystem{parse_partition(nu), r, rank}, popt);
  emit(to_json(report), opt.out);
  std::cerr << "status: " << report.status;
  if (report.converged_at) std::cerr << " at M=" << *report.converged_at;
  std::cerr << '\n';
  if (!report.converged_at && report.status.rfind("resource cap", 0) == 0) return kResource;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Pauli constraints: Schubert calculus, occupation numbers and moment polytopes"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--out", opt.out, "Write JSON output to this file");
  app.add_option("--fixtures", opt.fixtures, "Directory holding tables/ and states/")->capture_default_str();
  app.add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--tolerance", opt.tolerance, "Floating-point tolerance")->capture_default_str();

  std::string word, cycles, a, nu, v, w, state, kind, mu;
  int n = 0, r = 0, N = 0, p = 0, M = 4, rank = 1, max_p = 7;
  bool table = false;
  PipelineOptions popt;
  int result = kOk;

  auto* schubert = app.add_subcommand("schubert", "Print a Schubert polynomial");
  schubert->add_option("--w", word, "0-based one-line word, e.g. 1032");
  schubert->add_option("--cycles", cycles, "Cycle notation, e.g. \"(1 2)(3 4)\"");
  schubert->add_option("-n", n, "Use the defining formula in S_n");
  schubert->add_flag("--table-s4", table, "Reproduce the S_4 table from the fixtures");
  schubert->callback([&] { result = cmd_schubert(word, cycles, n, table, opt); });

  auto* coeff = app.add_subcommand("coeff", "Coefficient c^v_w(a)");
  coeff->add_option("--a", a, "Test spectrum, e.g. 1,0,0,0,0,-1")->required();
  coeff->add_option("--nu", nu, "Young diagram, e.g. 1,1,1")->required();
  coeff->add_option("-r", r, "Rank (defaults to the length of a)");
  coeff->add_option("--v", v, "v in cycle notation")->required();
  coeff->add_option("--w", w, "w in cycle notation")->required();
  coeff->callback([&] { result = cmd_coeff(a, nu, r, v, w, opt); });

  app.add_subcommand("verify-tables", "Replay the inequality tables")->callback([&] { result = cmd_verify_tables(opt); });

  auto* occupation = app.add_subcommand("occupation", "Occupation numbers of a state and inequality report");
  occupation->add_option("--state", state, "State JSON file")->required()->check(CLI::ExistingFile);
  occupation->callback([&] { result = cmd_occupation(state, opt); });

  app.add_subcommand("verify-vertices", "Replay the extremal-state tables")->callback([&] { result = cmd_verify_vertices(opt); });

  auto* generate = app.add_subcommand("generate", "Emit an inequality family");
  generate->add_option("--kind", kind, "majorization, grassmann1, grassmann2 or series")->required();
  generate->add_option("-N", N, "Particle number");
  generate->add_option("-r", r, "Rank");
  generate->add_option("-p", p, "Level");
  generate->add_option("--nu", nu, "Young diagram for majorization");
  generate->add_option("--max-p", max_p, "Largest level expanded explicitly")->capture_default_str();
  generate->callback([&] { result = cmd_generate(kind, N, r, p, nu, max_p, opt); });

  auto* plethysm = app.add_subcommand("plethysm", "Irreducible components of plethysms");
  plethysm->add_option("--nu", nu, "Inner diagram")->required();
  plethysm->add_option("-r", r, "Rank")->required();
  plethysm->add_option("--mu", mu, "Outer diagram (otherwise all |mu| <= M)");
  plethysm->add_option("-M", M, "Largest |mu|")->capture_default_str();
  plethysm->add_option("--rank-bound", rank, "Largest height of mu")->capture_default_str();
  plethysm->callback([&] { result = cmd_plethysm(nu, r, mu, M, rank, opt); });

  auto* polytope = app.add_subcommand("polytope", "Inner/outer approximation loop");
  polytope->add_option("--nu", nu, "Young diagram")->required();
  polytope->add_option("-r", r, "Rank")->required();
  polytope->add_option("--rank-bound", rank, "Height bound for mu")->capture_default_str();
  polytope->add_option("-M", popt.M_max, "Largest |mu|")->capture_default_str();
  polytope->add_option("--max-degree", popt.limits.max_degree, "Cap on |nu|*M")->capture_default_str();
  polytope->add_option("--max-r", popt.limits.max_r, "Cap on r")->capture_default_str();
  polytope->callback([&] { result = cmd_polytope(nu, r, rank, popt, opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  }
  return result;
}
