#include "wnrep/commands.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "wnrep/descriptor.hpp"
#include "wnrep/duality.hpp"
#include "wnrep/errors.hpp"
#include "wnrep/levi.hpp"
#include "wnrep/localize.hpp"
#include "wnrep/tensormod.hpp"

namespace wnrep {

using json = nlohmann::ordered_json;

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"support", "mult",    "criterion", "derham",
                                              "closure", "localize", "twist",    "dualize",
                                              "classify", "levi-check"};
  return names;
}

int thread_count(const Options& opt) {
  if (opt.threads > 0) return opt.threads;
  if (const char* env = std::getenv("WNREP_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

json to_json(const Weight& w) {
  json a = json::array();
  for (const auto& c : w.coords()) a.push_back(c.str());
  return a;
}

std::string require(const std::string& value, const char* flag) {
  if (value.empty()) throw ValidationError(std::string("missing --") + flag);
  return value;
}

DModule need_P(const Options& o) { return parse_dmodule(require(o.P, "P")); }

TensorModule need_T(const Options& o) {
  DModule P = need_P(o);
  return TensorModule(P, parse_glmodule(require(o.V, "V"), P.n()));
}

json window_json(const Window& w) {
  json j;
  j["radius"] = w.hi.empty() ? "0" : w.hi[0].str();
  j["margin"] = w.margin;
  return j;
}

json shadow_json(const Shadow& s) {
  auto part = [](const std::set<GlRoot>& roots) {
    json a = json::array();
    for (const auto& r : roots) a.push_back("E" + std::to_string(r.i + 1) + std::to_string(r.j + 1));
    return a;
  };
  json j;
  j["I"] = part(s.infinite);
  j["F"] = part(s.finite);
  j["Plus"] = part(s.plus);
  j["Minus"] = part(s.minus);
  return j;
}

json base_report(const std::string& command, const Options& o) {
  json j;
  j["command"] = command;
  json in;
  if (!o.P.empty()) in["P"] = o.P;
  if (!o.V.empty()) in["V"] = o.V;
  if (!o.S.empty()) in["S"] = o.S;
  j["inputs"] = in;
  return j;
}

json cmd_support(const Options& o) {
  TensorModule T = need_T(o);
  json j;
  j["module"] = T.descriptor();
  j["support_P"] = dmod_support(T.P()).str();
  j["support_V"] = T.V()->support().str();
  j["support"] = tmod_support(T).str();
  return j;
}

json cmd_mult(const Options& o, int threads) {
  TensorModule T = need_T(o);
  Window w = Window::box(T.n(), o.window);
  auto weights = weights_in(T, w);
  std::vector<long> dims(weights.size());
  parallel_for(weights.size(), threads, [&](std::size_t i) { dims[i] = tmod_mult(T, weights[i], w); });
  json j;
  j["module"] = T.descriptor();
  j["window"] = window_json(w);
  json rows = json::array();
  for (std::size_t i = 0; i < weights.size(); ++i) rows.push_back({{"weight", to_json(weights[i])}, {"dim", dims[i]}});
  j["mult"] = rows;
  return j;
}

json cmd_criterion(const Options& o) {
  TensorModule T = need_T(o);
  const Shadow sp = dmod_shadow(T.P()), sv = T.V()->shadow();
  json j;
  j["module"] = T.descriptor();
  j["shadow_P"] = shadow_json(sp);
  j["shadow_V"] = shadow_json(sv);
  j["finite_multiplicities"] = finmult_criterion(sp, sv);
  return j;
}

json cmd_derham(const Options& o, bool& pass) {
  DModule P = need_P(o);
  std::mt19937_64 rng(o.seed);
  Window w = Window::box(P.n(), o.window);
  Scalar r = derham_complex_residual(P, w, o.samples, rng);
  pass = r.is_zero();
  json j;
  j["module"] = P.descriptor();
  j["window"] = window_json(w);
  j["samples"] = o.samples;
  j["residual"] = r.str();
  return j;
}

json cmd_closure(const Options& o, bool& pass) {
  TensorModule T = need_T(o);
  const int n = T.n();
  Window w = Window::box(n, o.window, o.margin);
  std::mt19937_64 rng(o.seed);
  std::vector<TVector> seeds;
  if (o.start == "random") {
    for (int s = 0; s < 5; ++s) seeds.push_back(random_weight_vector(T, w, rng));
  } else if (o.start == "constant") {
    for (const auto& f : T.P().factors())
      if (f.kind != FactorKind::Poly) throw ValidationError("constant seed needs P = O*...*O");
    if (!T.V()->finite_dim()) throw ValidationError("constant seed needs finite-dimensional V");
    seeds.push_back(TVector({MultiIndex(static_cast<std::size_t>(n), 0), T.V()->all_labels().front()}, Scalar(1)));
  } else if (o.start == "derham") {
    auto k = fundamental_degree(*T.V());
    if (!k || *k == 0) throw ValidationError("derham seed needs V = wedge(k) with k >= 1");
    TensorModule prev(T.P(), wedge(n, *k - 1));
    for (int s = 0; s < 5 && seeds.size() < 5; ++s) {
      TVector v = derham_d(T.P(), *k - 1, random_weight_vector(prev, w, rng));
      if (!v.empty()) seeds.push_back(v);
    }
    if (seeds.empty()) throw EmptyModuleError("image of d is zero on the sampled vectors");
  } else {
    throw ValidationError("--start must be random, constant or derham");
  }
  ClosureResult c = submodule_closure(T, seeds, w, o.gen_degree);
  json j;
  j["module"] = T.descriptor();
  j["window"] = window_json(w);
  j["start"] = o.start;
  j["gen_degree"] = o.gen_degree;
  j["kind"] = "evidence (window heuristic)";
  j["span_dim"] = c.span_dim;
  json rows = json::array();
  bool saturated = true;
  for (const auto& [wt, d] : c.interior_dims) {
    long full = c.module_dims.at(wt);
    saturated = saturated && d == full;
    rows.push_back({{"weight", to_json(wt)}, {"dim", d}, {"module_dim", full}});
  }
  j["interior"] = rows;
  j["saturated"] = saturated;
  pass = true;
  return j;
}

LocElem parse_elem(const std::string& e) {
  if (e == "x") return LocElem::X;
  if (e == "d") return LocElem::D;
  throw ValidationError("--elem must be x or d");
}

json cmd_localize(const Options& o) {
  DModule P = need_P(o);
  if (o.at < 1 || o.at > P.n()) throw RangeError("--at out of range");
  json j;
  j["module"] = P.descriptor();
  j["at"] = o.at;
  j["elem"] = o.elem;
  j["localized"] = localize(P, o.at - 1, parse_elem(o.elem)).descriptor();
  return j;
}

json cmd_twist(const Options& o, bool& pass) {
  DModule P = need_P(o);
  if (o.at < 1 || o.at > P.n()) throw RangeError("--at out of range");
  TwistData t{o.at - 1, parse_elem(o.elem), Scalar::parse(o.exp)};
  std::mt19937_64 rng(o.seed);
  json checks = json::array();
  Scalar worst(0);
  for (int i = 0; i < P.n(); ++i)
    for (bool is_x : {true, false}) {
      WeylElement u = is_x ? WeylElement::x(P.n(), i) : WeylElement::d(P.n(), i);
      Scalar r = twist_action_check(P, t, u, o.samples, rng);
      if (r > worst) worst = r;
      checks.push_back({{"generator", u.str()}, {"residual", r.str()}});
    }
  pass = worst.is_zero();
  json j;
  j["module"] = P.descriptor();
  j["at"] = o.at;
  j["elem"] = o.elem;
  j["exp"] = t.c.str();
  j["localized"] = localize(P, t.index, t.elem).descriptor();
  j["twisted"] = twisted_localize(P, t).descriptor();
  j["checks"] = checks;
  j["residual"] = worst.str();
  return j;
}

json cmd_dualize(const Options& o, int threads, bool& pass) {
  TensorModule T = need_T(o);
  TensorModule D = dual_tensor(T);
  Window w = Window::box(T.n(), o.window);
  auto weights = weights_in(T, w);
  std::vector<long> a(weights.size()), b(weights.size());
  parallel_for(weights.size(), threads, [&](std::size_t i) {
    a[i] = tmod_mult(T, weights[i], w);
    b[i] = tmod_mult(D, -weights[i], w);
  });
  json rows = json::array();
  pass = true;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    pass = pass && a[i] == b[i];
    rows.push_back({{"weight", to_json(weights[i])}, {"dim", a[i]}, {"dual_dim", b[i]}});
  }
  json j;
  j["module"] = T.descriptor();
  j["dual"] = D.descriptor();
  j["window"] = window_json(w);
  j["mult"] = rows;
  return j;
}

json cmd_classify(const Options& o) {
  TensorModule T = need_T(o);
  Classification c = classify_case(T);
  json j;
  j["module"] = T.descriptor();
  j["case"] = case_name(c.kind);
  if (c.wedge_degree) j["wedge_degree"] = *c.wedge_degree;
  j["sum_partials_saturates"] = c.sum_partials_saturates;
  j["notes"] = c.notes;
  return j;
}

json cmd_levi(const Options& o, bool& pass) {
  LeviAlg L(o.n, o.p, o.m, o.k_blocks);
  DModule P = need_P(o);
  if (P.n() != L.m) throw DimensionError("P must have m factors");
  GlModulePtr V = parse_glmodule(require(o.V, "V"), L.m);
  GlModulePtr S;
  if (L.k_rank() > 0) S = parse_glmodule(require(o.S, "S"), L.k_rank(), L.k_blocks);
  json j;
  j["levi"] = {{"n", L.n}, {"p", L.p}, {"m", L.m}, {"k_blocks", L.k_blocks}};
  json lab = json::array();
  for (int i = 0; i < L.m; ++i) lab.push_back({{"W_m", i + 1}, {"gl_n", L.m_coord(i) + 1}});
  j["m_coordinates"] = lab;
  pass = true;
  if (S) {
    std::mt19937_64 rng(o.seed);
    FRSModule F(L, TensorModule(P, V), S);
    AxiomResiduals r = check_g_axioms(L, F, o.samples, rng);
    j["axioms"] = {{"cond1", r.cond1.str()},           {"cond2", r.cond2.str()},
                   {"semidirect", r.semidirect.str()}, {"k_bracket", r.k_bracket.str()},
                   {"w_bracket", r.w_bracket.str()},   {"samples", o.samples}};
    pass = r.max().is_zero();
  }
  json bt;
  try {
    Window w = Window::box(L.n, o.window);
    BackToTensorReport rep = backtotensor_check(L, P, V, S, w);
    bt["tilde_P"] = rep.tilde_P;
    bt["S_hat"] = rep.S_hat;
    bt["highest_weight"] = to_json(rep.highest_weight);
    bt["window"] = window_json(w);
    bt["weights_checked"] = rep.weights_checked;
    bt["support_contained"] = rep.support_contained;
    bt["top_matches_support"] = rep.top_matches_support;
    bt["mult_match"] = rep.mult_match;
    if (rep.degree_formula_checked) bt["degree_formula"] = rep.degree_formula;
    else bt["degree_formula"] = "not applicable: P is not cuspidal";
    json rows = json::array();
    for (const auto& row : rep.rows)
      rows.push_back({{"weight", to_json(row.weight)}, {"mult_F", row.mult_F}, {"mult_T", row.mult_T}, {"top", row.top}});
    bt["rows"] = rows;
    bt["ok"] = rep.ok();
    pass = pass && rep.ok();
  } catch (const UnsupportedError& e) {
    bt["skipped"] = e.what();
  }
  j["backtotensor"] = bt;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void flatten(const json& v, const std::string& path, std::ostringstream& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, path.empty() ? k : path + "." + k, out);
  } else if (v.is_array() && !v.empty() && !v.front().is_primitive()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "." + std::to_string(i), out);
  } else if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + scalar_text(v[i]);
    out << csv_escape(path) << "," << csv_escape(s) << "\n";
  } else {
    out << csv_escape(path) << "," << csv_escape(scalar_text(v)) << "\n";
  }
}

std::string to_csv(const json& j) {
  std::ostringstream out;
  // Tables become one row per weight, in report order.
  for (const char* key : {"mult", "interior"}) {
    if (!j.contains(key)) continue;
    const json& rows = j[key];
    const std::size_t n = rows.empty() ? 0 : rows.front()["weight"].size();
    for (std::size_t i = 0; i < n; ++i) out << (i ? "," : "") << "w" << i + 1;
    if (!rows.empty())
      for (const auto& [k, x] : rows.front().items())
        if (k != "weight") out << "," << k;
    out << "\n";
    for (const auto& r : rows) {
      bool first = true;
      for (const auto& c : r["weight"]) {
        out << (first ? "" : ",") << c.get<std::string>();
        first = false;
      }
      for (const auto& [k, x] : r.items())
        if (k != "weight") out << "," << scalar_text(x);
      out << "\n";
    }
    return out.str();
  }
  out << "key,value\n";
  flatten(j, "", out);
  return out.str();
}

}  // namespace

Report run(const std::string& command, const Options& o) {
  if (o.format != "json" && o.format != "csv") throw ValidationError("--format must be json or csv");
  if (o.window < 0 || o.margin < 0) throw RangeError("window radius and margin must be nonnegative");
  if (o.samples <= 0) throw RangeError("--samples must be positive");
  const int threads = thread_count(o);
  bool pass = true;
  json body;
  if (command == "support") body = cmd_support(o);
  else if (command == "mult") body = cmd_mult(o, threads);
  else if (command == "criterion") body = cmd_criterion(o);
  else if (command == "derham") body = cmd_derham(o, pass);
  else if (command == "closure") body = cmd_closure(o, pass);
  else if (command == "localize") body = cmd_localize(o);
  else if (command == "twist") body = cmd_twist(o, pass);
  else if (command == "dualize") body = cmd_dualize(o, threads, pass);
  else if (command == "classify") body = cmd_classify(o);
  else if (command == "levi-check") body = cmd_levi(o, pass);
  else throw ValidationError("unknown command '" + command + "'");
  if (o.format == "csv") return {to_csv(body), pass};
  json j = base_report(command, o);
  for (const auto& [k, v] : body.items()) j[k] = v;
  j["pass"] = pass;
  return {j.dump(2) + "\n", pass};
}

}  // namespace wnrep
