#include "dieu/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "dieu/constructions.hpp"
#include "dieu/error.hpp"
#include "dieu/json_io.hpp"
#include "dieu/verify.hpp"

namespace dieu::cli {

namespace {

struct Globals {
  u64 p = 3;
  int f = 1;
  int e = 1;
  int ext = 1;
  int precision = 0;  // 0: the default rule below
  u64 seed = 1;
  long long size_cap = kDefaultSizeCap;
};

// Largest N <= 4f + 4 with p^N < 2^62; enough room for the Newton oracle on
// most inputs. The tower constructor still enforces the precision policy.
int default_precision(u64 p, int f) {
  int N = 4 * f + 4;
  for (; N > 1; --N) {
    u64 x = 1;
    bool ok = true;
    for (int i = 0; i < N && ok; ++i) {
      if (x > (u64(1) << 62) / p) ok = false;
      x *= p;
    }
    if (ok) break;
  }
  return N;
}

std::shared_ptr<const CoeffTower> make_tower(const Globals& G) {
  if (G.p < 2) throw Error(ErrorCode::invalid_argument, "p must be at least 2");
  const int N = G.precision > 0 ? G.precision : default_precision(G.p, G.f);
  return CoeffTower::build(G.p, G.f, G.e, G.ext, N);
}

std::string read_all(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string read_module_text(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::parse, "cannot open '" + path + "'");
  return read_all(file);
}

json built_json(const Built& b) {
  json j{{"module", to_json(b.module)}, {"pairing_omitted", b.pairing_omitted}};
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

json check_json(const Check& c) {
  return {{"criterion", c.criterion}, {"name", c.name},         {"validates", c.validates}, {"passed", c.passed},
          {"instances", c.instances}, {"failures", c.failures}, {"detail", c.detail}};
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Globals G;
  if (const char* env = std::getenv("DIEU_SEED")) {
    try {
      G.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "ignoring malformed DIEU_SEED\n";
    }
  }

  CLI::App app{"Rank-2 Dieudonne O-modules: invariants, families, strata and the Hecke probe"};
  app.name("dieu");
  app.require_subcommand(1);
  app.fallthrough();
  auto* p_opt = app.add_option("--p", G.p, "residue characteristic")->capture_default_str();
  app.add_option("--f", G.f, "inertia degree")->capture_default_str();
  app.add_option("--e", G.e, "ramification index")->capture_default_str();
  app.add_option("--ext", G.ext, "extension degree of the residue field over F_(p^f)")->capture_default_str();
  app.add_option("--precision", G.precision, "Witt length N (default: largest N <= 4f+4 with p^N < 2^62)");
  app.add_option("--seed", G.seed, "random seed (default: DIEU_SEED or 1)");
  app.add_option("--size-cap", G.size_cap, "largest enumeration allowed")->capture_default_str();

  // invariants
  auto* inv = app.add_subcommand("invariants", "invariant report for a module given as JSON");
  std::string module_path;
  inv->add_option("--module", module_path, "module JSON file, or - for stdin")->required();

  // construct
  auto* con = app.add_subcommand("construct", "emit the module JSON of a family");
  std::string family;
  int a = 0, e1 = 0, e2 = 0;
  std::vector<int> tau, ords;
  std::string variant = "general";
  bool general_mode = false;
  con->add_option("--family", family, "slope | normal | superspecial | non-rapoport | random")
      ->required()
      ->check(CLI::IsMember({"slope", "normal", "superspecial", "non-rapoport", "random"}));
  con->add_option("--a", a, "slope family parameter");
  con->add_option("--tau", tau, "normal form: slots of the a-index")->delimiter(',');
  con->add_option("--ord", ords, "normal form: entry valuations per tau slot, -1 for a zero entry")->delimiter(',');
  con->add_option("--e1", e1, "superspecial: first Lie exponent");
  con->add_option("--e2", e2, "superspecial: second Lie exponent");
  con->add_option("--variant", variant, "superspecial: rapoport | general")
      ->check(CLI::IsMember({"rapoport", "general"}))
      ->capture_default_str();
  con->add_flag("--general", general_mode, "random: do not force the separable determinant budget");

  // poset
  auto* pos = app.add_subcommand("poset", "a-type poset with stratum data");
  std::string format = "json";
  pos->add_option("--format", format, "json | dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();

  // hecke
  auto* hec = app.add_subcommand("hecke", "stable isotropic planes of the Hecke fibre");
  int s = 1;
  bool chart_only = false, full = false;
  unsigned threads = 0;
  hec->add_option("--s", s, "field F_(p^(2s))")->capture_default_str();
  hec->add_flag("--chart-only", chart_only, "enumerate the affine chart only (the default)");
  hec->add_flag("--full-grassmannian", full, "also walk every plane of the Grassmannian");
  hec->add_option("--threads", threads, "worker threads for the chart (0: hardware)");

  // sample-deform
  auto* sam = app.add_subcommand("sample-deform", "Newton points of random specializations of a deformation");
  std::vector<int> target;
  int trials = 100;
  std::string base_kind = "exact";
  sam->add_option("--target", target, "target a-type, comma separated")->required()->delimiter(',');
  sam->add_option("--trials", trials, "number of random assignments")->capture_default_str();
  sam->add_option("--base", base_kind,
                  "exact: normal form of a-type equal to the target; superspecial: moving only t_(i,a^i)")
      ->check(CLI::IsMember({"exact", "superspecial"}))
      ->capture_default_str();

  // verify
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  ver->add_option("--suite", suite, join(suite_names()))->required();
  ver->add_option("--s", s, "hecke suite: field F_(p^(2s))")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& x : args) argv.push_back(x.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  try {
    json result;
    if (*inv) {
      DModule M = module_from_text(read_module_text(module_path, in));
      result = invariant_report(M);
    } else if (*con) {
      auto t = make_tower(G);
      Built b;
      if (family == "slope") {
        b = slope_family(t, a);
      } else if (family == "normal") {
        if (!ords.empty() && ords.size() != tau.size())
          throw Error(ErrorCode::invalid_argument, "--ord needs one value per --tau slot");
        std::map<int, RamElem> entries;
        for (size_t k = 0; k < tau.size(); ++k) {
          const int v = ords.empty() ? -1 : ords[k];
          if (v == 0) throw Error(ErrorCode::invalid_argument, "normal form entries must be non-units");
          entries.emplace(tau[k], v < 0 ? t->zero() : t->pi_pow(v));
        }
        b = normal_form_entries(t, tau, entries);
      } else if (family == "superspecial") {
        b = superspecial(t, e1, e2, variant == "rapoport" ? SuperspecialVariant::rapoport : SuperspecialVariant::general);
      } else if (family == "non-rapoport") {
        b = non_rapoport_example(t);
      } else {
        Rng rng(G.seed);
        b = random_module(t, rng, !general_mode);
      }
      result = built_json(b);
    } else if (*pos) {
      ATypePoset P = atype_poset(G.e, G.f, G.size_cap);
      if (format == "dot") {
        out << poset_dot(P);
        return 0;
      }
      result = to_json(P);
    } else if (*hec) {
      HeckeSetting S = build_setting(G.p, s);
      auto planes = enumerate_stable_planes(S, true, G.size_cap, threads);
      result = to_json(compare_variety(S, planes, G.size_cap));
      if (full) {
        auto all = enumerate_stable_planes(S, false, G.size_cap);
        json off = json::array();
        for (const auto& P : all)
          if (!P.chart) off.push_back(to_json(P));
        result["full_grassmannian"] = {{"stable_planes", all.size()}, {"off_chart", off}};
      }
    } else if (*sam) {
      auto t = make_tower(G);
      if (static_cast<int>(target.size()) != G.f)
        throw Error(ErrorCode::shape, "--target needs f = " + std::to_string(G.f) + " entries");
      for (int v : target)
        if (v < 0 || v > G.e) throw Error(ErrorCode::invalid_argument, "target entries must lie in [0, e]");
      DModule base;
      if (base_kind == "exact") {
        std::vector<int> base_tau;
        std::map<int, RamElem> entries;
        for (int i = 0; i < G.f; ++i)
          if (target[i] > 0) {
            base_tau.push_back(i);
            entries.emplace(i, target[i] < G.e ? t->pi_pow(target[i]) : t->zero());
          }
        base = normal_form_entries(t, base_tau, entries).module;
      } else {
        std::vector<int> all(G.f);
        std::map<int, RamElem> zero;
        for (int i = 0; i < G.f; ++i) {
          all[i] = i;
          zero.emplace(i, t->zero());
        }
        base = normal_form(t, all, zero).module;
      }
      Rng rng(G.seed);
      const CoeffTower& r = t->residue();
      std::map<std::string, int> histogram;
      for (int trial = 0; trial < trials; ++trial) {
        Assignment as;
        for (auto key : deformation_keys(target, G.e)) {
          const bool moves = base_kind == "exact" || key.second == target[key.first];
          as.emplace(key, moves ? r.residue_random(rng) : r.wzero());
        }
        DModule M = deform_specialize(base, target, as).module;
        ++histogram[newton_point(M, NewtonMethod::oracle).index_str()];
      }
      json h = json::object();
      for (const auto& [k, v] : histogram) h[k] = v;
      result = {{"target", target},
                {"base", base_kind},
                {"trials", trials},
                {"slope_histogram", h}};
    } else if (*ver) {
      VerifyConfig cfg;
      cfg.seed = G.seed;
      cfg.size_cap = G.size_cap;
      cfg.hecke_s = s;
      if (p_opt->count() > 0) cfg.hecke_primes = {G.p};
      SuiteReport R = run_suite(suite, cfg);
      json checks = json::array();
      for (const auto& c : R.checks) checks.push_back(check_json(c));
      result = {{"suite", R.suite}, {"seed", G.seed}, {"passed", R.passed()}, {"checks", checks}};
      out << result.dump(2) << "\n";
      return R.passed() ? 0 : 1;
    }
    out << result.dump(2) << "\n";
    return 0;
  } catch (const std::exception& e) {
    out << error_json(e).dump(2) << "\n";
    return 1;
  }
}

}  // namespace dieu::cli
