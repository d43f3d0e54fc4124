#include "dieu/json_io.hpp"

#include "dieu/error.hpp"

namespace dieu {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

i64 as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<i64>();
}

json slots_json(const std::vector<SlotPair>& s) {
  json a = json::array();
  for (const auto& x : s) a.push_back({x[0], x[1]});
  return a;
}

}  // namespace

json to_json(const CoeffTower& t) {
  json j{{"p", t.p()}, {"f", t.f()}, {"e", t.e()}, {"ext", t.ext()}, {"N", t.N()}, {"modulus", t.modulus()}};
  if (!t.default_eisenstein()) j["eisenstein"] = t.params().eisenstein;
  return j;
}

std::shared_ptr<const CoeffTower> tower_from_json(const json& j) {
  TowerParams tp;
  const i64 p = as_int(field(j, "p"), "p");
  if (p < 2) bad("p must be at least 2");
  tp.p = static_cast<u64>(p);
  tp.f = static_cast<int>(as_int(field(j, "f"), "f"));
  tp.e = static_cast<int>(as_int(field(j, "e"), "e"));
  tp.ext = j.contains("ext") ? static_cast<int>(as_int(j.at("ext"), "ext")) : 1;
  tp.N = static_cast<int>(as_int(field(j, "N"), "N"));
  if (j.contains("eisenstein")) {
    if (!j.at("eisenstein").is_array()) bad("eisenstein must be an array");
    for (const auto& a : j.at("eisenstein")) tp.eisenstein.push_back(as_int(a, "eisenstein coefficient"));
  }
  auto t = CoeffTower::build(tp);
  if (j.contains("modulus")) {
    const json& m = j.at("modulus");
    if (!m.is_array()) bad("modulus must be an array");
    std::vector<u64> given;
    for (const auto& c : m) given.push_back(static_cast<u64>(as_int(c, "modulus coefficient")));
    if (given != t->modulus()) bad("modulus does not match the tower built from these parameters");
  }
  return t;
}

json to_json(const WittElem& w) { return w.coeffs(); }

json to_json(const RamElem& x) {
  json a = json::array();
  for (const auto& w : x.coeffs()) a.push_back(to_json(w));
  return a;
}

WittElem witt_from_json(const CoeffTower& t, const json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != t.degree())
    bad("Witt element must be an array of " + std::to_string(t.degree()) + " integers");
  std::vector<u64> c;
  for (const auto& x : j) {
    const i64 v = as_int(x, "Witt coefficient");
    if (v < 0 || static_cast<u64>(v) >= t.pN()) bad("Witt coefficient out of range [0, p^N)");
    c.push_back(static_cast<u64>(v));
  }
  return t.witt(c);
}

RamElem ram_from_json(const CoeffTower& t, const json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != t.e())
    bad("ramified element must be an array of " + std::to_string(t.e()) + " Witt elements");
  std::vector<WittElem> c;
  for (const auto& x : j) c.push_back(witt_from_json(t, x));
  return t.ram(c);
}

json to_json(const DModule& M) {
  json mats = json::array();
  for (const auto& A : M.A) {
    json m = json::array();
    for (int r = 0; r < 2; ++r) m.push_back({to_json(A(r, 0)), to_json(A(r, 1))});
    mats.push_back(m);
  }
  json delta = nullptr;
  if (M.delta) {
    delta = json::array();
    for (const auto& d : *M.delta) delta.push_back(to_json(d));
  }
  json j{{"tower", to_json(*M.tower)},
         {"matrices", mats},
         {"delta", delta},
         {"mode", M.mode == PolMode::separable ? "separable" : "general"}};
  if (M.precision != M.tower->N()) j["precision"] = M.precision;
  return j;
}

DModule module_from_json(const json& j) {
  auto t = tower_from_json(field(j, "tower"));
  const json& mats = field(j, "matrices");
  if (!mats.is_array() || static_cast<int>(mats.size()) != t->f())
    bad("matrices must hold one 2 x 2 matrix per slot (" + std::to_string(t->f()) + ")");
  std::vector<Mat2> A;
  for (const auto& m : mats) {
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 ||
        m[1].size() != 2)
      bad("each matrix must be 2 x 2");
    A.push_back(Mat2::of(ram_from_json(*t, m[0][0]), ram_from_json(*t, m[0][1]), ram_from_json(*t, m[1][0]),
                         ram_from_json(*t, m[1][1])));
  }
  std::optional<std::vector<RamElem>> delta;
  if (j.contains("delta") && !j.at("delta").is_null()) {
    const json& d = j.at("delta");
    if (!d.is_array() || static_cast<int>(d.size()) != t->f()) bad("delta must hold one element per slot");
    std::vector<RamElem> v;
    for (const auto& x : d) v.push_back(ram_from_json(*t, x));
    delta = std::move(v);
  }
  PolMode mode = PolMode::separable;
  if (j.contains("mode")) {
    const json& m = j.at("mode");
    if (m == "separable")
      mode = PolMode::separable;
    else if (m == "general")
      mode = PolMode::general;
    else
      bad("mode must be \"separable\" or \"general\"");
  }
  int precision = 0;
  if (j.contains("precision")) {
    precision = static_cast<int>(as_int(j.at("precision"), "precision"));
    if (precision < 1 || precision > t->N()) bad("precision must lie in [1, N]");
  }
  return build_module(t, std::move(A), std::move(delta), mode, precision);
}

DModule module_from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  // accept the envelope written by `dieu construct` as well as a bare module
  if (j.is_object() && j.contains("module") && !j.contains("tower")) j = json(j.at("module"));
  try {
    return module_from_json(j);
  } catch (const json::exception& e) {
    bad(std::string("malformed module: ") + e.what());
  }
}

json to_json(const NewtonPoint& n) {
  return {{"index_num", n.num()}, {"index_den", n.den()}, {"index", n.index_str()}, {"sequence", n.sequence()}};
}

json to_json(const Flags& f) {
  return {{"rapoport", f.rapoport},
          {"dp", f.dp},
          {"ordinary", f.ordinary},
          {"supersingular", f.supersingular},
          {"superspecial", f.superspecial}};
}

json to_json(const StratumRecord& r) {
  json j{{"a", r.a},
         {"dim", r.dim},
         {"spaced", r.spaced},
         {"lambda", r.lambda},
         {"generic_slope_lower", to_json(r.generic_slope_lower)}};
  j["generic_slope_exact"] = r.generic_slope_exact ? to_json(*r.generic_slope_exact) : json(nullptr);
  return j;
}

json to_json(const ATypePoset& P) {
  json nodes = json::array();
  for (const auto& n : P.nodes) nodes.push_back(to_json(n));
  json covers = json::array();
  for (auto [lo, hi] : P.covers) covers.push_back({lo, hi});
  return {{"e", P.e}, {"f", P.f}, {"nodes", nodes}, {"covers", covers}};
}

json to_json(const VarietyReport& R) {
  json extra = json::array();
  for (const auto& x : R.extra_variety_points) extra.push_back({x[0], x[1], x[2]});
  return {{"p", R.p},
          {"q", R.q},
          {"counts",
           {{"chart", R.chart_count}, {"expected", R.expected_count}, {"variety", R.variety_count}}},
          {"lines", R.lines},
          {"equations_verified", R.equations_verified},
          {"displayed_polynomials_verified", R.displayed_polys_verified},
          {"matches_parametrization", R.matches_parametrization},
          {"matches_equation_solving", R.matches_equation_solving},
          {"extra_variety_points", extra},
          {"extras_on_t1_t2_zero", R.extras_on_t1_t2_zero}};
}

json to_json(const StablePlane& P) {
  json j{{"rows", {P.rref[0], P.rref[1]}}};
  j["chart"] = P.chart ? json(*P.chart) : json(nullptr);
  return j;
}

json invariant_report(const DModule& M) {
  const LieType L = lie_type(M);
  const AType a = a_type(M);
  json j;
  j["lie_type"] = slots_json(L.slots);
  j["a_type"] = slots_json(a.slots);
  j["a_number"] = a.a_number;
  if (L.rapoport(M.e())) {
    AIndex ai = a_index(M);
    j["a_index"] = {{"tau", ai.tau}, {"t", ai.t}};
  } else {
    j["a_index"] = nullptr;
  }
  j["reduced_a_number"] = reduced_a_number(M);
  const NewtonPoint oracle = newton_point(M, NewtonMethod::oracle);
  const NewtonPoint fast = newton_point(M, NewtonMethod::fast);
  json n = to_json(oracle);
  n["method"] = "oracle";
  n["fast_index"] = fast.index_str();
  n["fast_agrees"] = fast == oracle;
  j["newton"] = n;
  j["flags"] = to_json(classify(M));
  return j;
}

json error_json(const std::exception& e) {
  json j;
  if (const auto* de = dynamic_cast<const Error*>(&e)) {
    j["error"] = std::string(to_string(de->code()));
    if (de->slot()) j["slot"] = *de->slot();
  } else {
    j["error"] = "internal";
  }
  j["message"] = e.what();
  return j;
}

}  // namespace dieu
