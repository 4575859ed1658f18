// resurgia: command-line front end.
//
// Exit codes: 0 success, 1 specification error, 2 budget exceeded.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "resurgia/io.hpp"

using namespace resurgia;

namespace {

struct Options {
  std::string ideal_text;
  std::string ideal_file;
  std::string family;
  std::string a;
  std::string b;
  std::string builtin;
  std::string table;
  std::string weights;
  std::string output = "text";
  unsigned m = 3;
  unsigned k = 1;
  unsigned budget_body = kDefaultBodyBudget;
  unsigned budget_s = kDefaultSearchBound;
  unsigned budget_r = kDefaultSearchBound;
  unsigned n_max = kDefaultTruncationMax;
  bool closure = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("'" + path + "' is not valid JSON: " + e.what());
  }
}

class Job {
 public:
  Job(std::string command, const Options& opt) : command_(std::move(command)), opt_(opt) {}

  bool json() const { return opt_.output == "json"; }

  MonomialIdeal ideal() {
    if (!ideal_) {
      if (!opt_.ideal_text.empty() && !opt_.ideal_file.empty()) throw Error("give either --ideal or --ideal-file");
      if (!opt_.ideal_text.empty()) ideal_ = parse_ideal(opt_.ideal_text);
      else if (!opt_.ideal_file.empty()) ideal_ = parse_ideal(read_file(opt_.ideal_file));
      else throw Error(command_ + " needs --ideal or --ideal-file");
    }
    return *ideal_;
  }

  // Shorthand, or a path to a family JSON file.
  GradedFamily family(const std::string& spec, const char* flag) {
    if (spec.empty()) throw Error(command_ + " needs " + flag);
    if (std::filesystem::is_regular_file(spec)) return family_from_json(read_json_file(spec));
    std::map<std::string, MonomialIdeal> names;
    names.emplace("I", ideal());
    return parse_family(spec, names);
  }

  void certificate(const std::string& role, const BodyStatus status, unsigned index) {
    Json c;
    c["role"] = role;
    c["status"] = to_string(status);
    c["index"] = index;
    certificates_.push_back(std::move(c));
  }

  Json provenance() const {
    Json p;
    p["command"] = command_;
    Json budgets;
    budgets["body"] = opt_.budget_body;
    budgets["search_s"] = opt_.budget_s;
    budgets["search_r"] = opt_.budget_r;
    budgets["n_max"] = opt_.n_max;
    p["budgets"] = std::move(budgets);
    p["generator_ceiling"] = generator_ceiling();
    p["certificates"] = certificates_;
    return p;
  }

  void emit(Json body, const std::string& text) const {
    if (json()) {
      body["provenance"] = provenance();
      std::cout << body.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  }

  const Options& opt() const { return opt_; }

 private:
  std::string command_;
  const Options& opt_;
  std::optional<MonomialIdeal> ideal_;
  Json certificates_ = Json::array();
};

// ---------------------------------------------------------------- text rendering

std::string polyhedron_text(const QPolyhedron& p) {
  std::string out = "vertices:\n";
  for (const auto& v : p.vertices()) out += "  " + v.str() + "\n";
  out += "facets:\n";
  for (const auto& f : p.facets()) out += "  " + f.str() + "\n";
  return out;
}

std::string summary_text(const CertificateSummary& s) { return to_string(s.status) + "(" + std::to_string(s.index) + ")"; }

std::string result_text(const ResurgenceResult& r) {
  std::string out = "value: " + r.value.str() + "\n";
  out += "exact: " + std::string(r.exact ? "true" : "false") + "\n";
  out += "bound_direction: " + to_string(r.direction) + "\n";
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, BodyFormulaMethod>)
          out += "method: body_formula a=" + summary_text(m.a) + " b=" + summary_text(m.b) + "\n";
        else if constexpr (std::is_same_v<M, VertexSearchMethod>)
          out += "method: vertex_search s<=" + std::to_string(m.s_max) + " r<=" + std::to_string(m.r_max) +
                 (m.closure ? " closure" : "") + "\n";
        else
          out += "method: rees_formula body=" + summary_text(m.body) + " veronese=" + std::to_string(m.veronese) +
                 (m.b_equivalent ? " b-equivalent" : "") + "\n";
      },
      r.method);
  if (r.witness) {
    std::visit(
        [&](const auto& w) {
          using W = std::decay_t<decltype(w)>;
          if constexpr (std::is_same_v<W, VertexFacetWitness>)
            out += "witness: vertex " + w.vertex.str() + " facet " + w.facet.str() + "\n";
          else
            out += "witness: s=" + std::to_string(w.s) + " r=" + std::to_string(w.r) + "\n";
        },
        *r.witness);
  } else {
    out += "witness: none\n";
  }
  for (const auto& a : r.assertions) out += "assertion: " + a + "\n";
  for (const auto& e : r.equals) out += "equals: " + e + "\n";
  return out;
}

void record(Job& job, const std::string& role, const ResurgenceResult& r) {
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, BodyFormulaMethod>) {
          job.certificate(role + ".a", m.a.status, m.a.index);
          job.certificate(role + ".b", m.b.status, m.b.index);
        } else if constexpr (std::is_same_v<M, ReesFormulaMethod>) {
          job.certificate(role, m.body.status, m.body.index);
        }
      },
      r.method);
}

std::vector<Rational> parse_weights(const std::string& text, std::size_t n) {
  if (text.empty()) return std::vector<Rational>(n, Rational(1));
  std::vector<Rational> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) w.push_back(parse_rational(item));
  return w;
}

// ---------------------------------------------------------------- commands

void run_ideal_body(Job& job, bool symbolic) {
  const MonomialIdeal i = job.ideal();
  const QPolyhedron p = symbolic ? symbolic_polyhedron(i) : newton_polyhedron(i);
  Json out;
  out["ideal"] = ideal_json(i);
  out["polyhedron"] = polyhedron_json(p);
  job.emit(std::move(out), polyhedron_text(p));
}

void run_ideal_result(Job& job, const MonomialIdeal& i) {
  Json out;
  out["ideal"] = ideal_json(i);
  job.emit(std::move(out), print_ideal(i) + "\n");
}

void run_okounkov(Job& job) {
  const GradedFamily f = job.family(job.opt().family, "--family");
  const BodyCertificate cert = okounkov_body(f, job.opt().budget_body);
  job.certificate("family", cert.status, cert.index);
  Json out;
  out["family"] = f.describe();
  out["certificate"] = certificate_json(cert);
  job.emit(std::move(out), "certificate: " + to_string(cert.status) + "(" + std::to_string(cert.index) + ")\n" +
                               polyhedron_text(cert.body));
}

void run_result(Job& job, const ResurgenceResult& r) {
  record(job, "result", r);
  Json out;
  out["result"] = result_json(r);
  job.emit(std::move(out), result_text(r));
}

void run_truncate_profile(Job& job) {
  const GradedFamily a = job.family(job.opt().a, "--a");
  const GradedFamily b = job.family(job.opt().b, "--b");
  const bool with_weights = !job.opt().weights.empty();
  Json rows = Json::array();
  std::string text;
  for (const auto& [n, r] :
       truncation_resurgence_profile(a, b, job.opt().n_max, job.opt().budget_s, job.opt().budget_r, job.opt().closure)) {
    Json row;
    row["n"] = n;
    row["result"] = result_json(r);
    text += "n=" + std::to_string(n) + " value: " + r.value.str();
    if (r.witness) {
      const auto& w = std::get<SearchWitness>(*r.witness);
      text += " witness: s=" + std::to_string(w.s) + " r=" + std::to_string(w.r);
    }
    if (with_weights) {
      const GradedFamily t = truncate(a, n);
      const Rational wv = waldschmidt(t, parse_weights(job.opt().weights, t.ring().n()), job.opt().budget_body);
      row["waldschmidt"] = rational_json(wv);
      text += " waldschmidt: " + to_string(wv);
    }
    text += "\n";
    rows.push_back(std::move(row));
  }
  Json out;
  out["profile"] = std::move(rows);
  job.emit(std::move(out), text);
}

ReesTable rees_input(Job& job) {
  const auto& opt = job.opt();
  if (!opt.builtin.empty() && !opt.table.empty()) throw Error("give either --builtin or --table");
  if (!opt.builtin.empty()) {
    if (opt.builtin != "symmetric-minors") throw Error("unknown builtin '" + opt.builtin + "'");
    auto [package, family] = symmetric_minors_family(opt.m);
    return {std::move(package), std::move(family), {"b-equivalent"}};
  }
  if (!opt.table.empty()) return rees_table_from_json(read_json_file(opt.table));
  throw Error("rees needs --builtin or --table");
}

bool asserts_b_equivalent(const ReesTable& t) {
  return std::find(t.assertions.begin(), t.assertions.end(), "b-equivalent") != t.assertions.end();
}

void run_rees(Job& job, bool veronese) {
  const ReesTable t = rees_input(job);
  const unsigned budget = job.opt().budget_body;
  ResurgenceResult r;
  if (veronese) {
    r = veronese_resurgence(t.family, t.package, job.opt().k, budget);
    r.assertions = t.assertions;
  } else if (asserts_b_equivalent(t)) {
    r = b_equivalent_resurgence(t.family, t.package, t.assertions, budget);
  } else {
    r = rees_resurgence(t.family, t.package, budget);
    r.assertions = t.assertions;
  }
  run_result(job, r);
}

void run_duality(Job& job) {
  const MonomialIdeal i = job.ideal();
  const MonomialIdeal d = alexander_dual(i);
  const ExtRational left = dual_pair_resurgence(i, i);
  const ExtRational right = dual_pair_resurgence(d, d);
  Json out;
  out["ideal"] = ideal_json(i);
  out["dual"] = ideal_json(d);
  out["value"] = left.str();
  out["dual_value"] = right.str();
  out["holds"] = left == right;
  job.emit(std::move(out), "value: " + left.str() + "\ndual_value: " + right.str() +
                               "\nholds: " + (left == right ? "true" : "false") + "\n");
}

void run(const std::string& command, const Options& opt) {
  if (opt.output != "text" && opt.output != "json") throw Error("--output must be text or json");
  Job job(command, opt);
  if (command == "np") return run_ideal_body(job, false);
  if (command == "sp") return run_ideal_body(job, true);
  if (command == "dual") return run_ideal_result(job, alexander_dual(job.ideal()));
  if (command == "symbolic-power") return run_ideal_result(job, symbolic_power(job.ideal(), opt.k));
  if (command == "okounkov") return run_okounkov(job);
  if (command == "resurgence")
    return run_result(job, resurgence_search(job.family(opt.a, "--a"), job.family(opt.b, "--b"), opt.budget_s,
                                             opt.budget_r, opt.closure));
  if (command == "asymptotic-resurgence")
    return run_result(job, asymptotic_resurgence(job.family(opt.a, "--a"), job.family(opt.b, "--b"), opt.budget_body));
  if (command == "waldschmidt") {
    const GradedFamily f = job.family(opt.family, "--family");
    const Rational v = waldschmidt(f, parse_weights(opt.weights, f.ring().n()), opt.budget_body);
    Json out;
    out["family"] = f.describe();
    out["value"] = rational_json(v);
    return job.emit(std::move(out), "value: " + to_string(v) + "\n");
  }
  if (command == "truncate-profile") return run_truncate_profile(job);
  if (command == "rees") return run_rees(job, false);
  if (command == "veronese") return run_rees(job, true);
  if (command == "duality-check") return run_duality(job);
  throw Error("unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact resurgence computations for monomial ideals and graded families"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--output", opt.output, "text or json")->capture_default_str();
    sub->add_option("--budget-body", opt.budget_body, "largest index tried for body stabilization")
        ->capture_default_str();
    sub->add_option("--budget-search-s", opt.budget_s, "largest s in the (s, r) search")->capture_default_str();
    sub->add_option("--budget-search-r", opt.budget_r, "largest r in the (s, r) search")->capture_default_str();
  };
  auto ideal_input = [&](CLI::App* sub) {
    sub->add_option("--ideal", opt.ideal_text, "ideal, e.g. \"vars=x,y; gens=x*y\"");
    sub->add_option("--ideal-file", opt.ideal_file, "file holding the ideal as text or JSON");
  };
  auto rees_inputs = [&](CLI::App* sub) {
    sub->add_option("--builtin", opt.builtin, "built-in package: symmetric-minors");
    sub->add_option("--m", opt.m, "matrix size for symmetric-minors")->capture_default_str();
    sub->add_option("--table", opt.table, "explicit Rees table JSON file");
  };

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"np", "Newton polyhedron of the ideal"},
      {"sp", "symbolic polyhedron of the ideal"},
      {"dual", "Alexander dual of a squarefree ideal"},
      {"symbolic-power", "k-th symbolic power"},
      {"okounkov", "Newton-Okounkov body of a family with its certificate"},
      {"resurgence", "search lower bound for the resurgence of (a, b)"},
      {"asymptotic-resurgence", "asymptotic resurgence of (a, closure(b)) via bodies"},
      {"waldschmidt", "skew Waldschmidt constant of a monomial valuation"},
      {"truncate-profile", "resurgence of the truncations of a against b"},
      {"rees", "resurgence through a Rees package"},
      {"veronese", "Rees resurgence for the k-th Veronese"},
      {"duality-check", "compare the dual-pair value of an ideal and of its Alexander dual"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    common(sub);
    const std::string name = s.name;
    if (name == "rees" || name == "veronese") {
      rees_inputs(sub);
      if (name == "veronese") sub->add_option("--k", opt.k, "Veronese degree")->capture_default_str();
    } else {
      ideal_input(sub);
    }
    if (name == "symbolic-power") sub->add_option("--k", opt.k, "symbolic exponent")->capture_default_str();
    if (name == "okounkov" || name == "waldschmidt") sub->add_option("--family", opt.family, "family shorthand or JSON file");
    if (name == "waldschmidt" || name == "truncate-profile")
      sub->add_option("--weights", opt.weights, "comma-separated rational weights (default all 1)");
    if (name == "resurgence" || name == "asymptotic-resurgence" || name == "truncate-profile") {
      sub->add_option("--a", opt.a, "first family");
      sub->add_option("--b", opt.b, "second family");
    }
    if (name == "resurgence" || name == "truncate-profile")
      sub->add_flag("--closure", opt.closure, "test containment in the integral closure of b_r");
    if (name == "truncate-profile") sub->add_option("--n-max", opt.n_max, "largest truncation index")->capture_default_str();
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    for (CLI::App* sub : subs)
      if (sub->parsed()) run(sub->get_name(), opt);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
