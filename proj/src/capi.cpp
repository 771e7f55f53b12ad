#include "wnrep/wnrep.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "wnrep/commands.hpp"
#include "wnrep/descriptor.hpp"
#include "wnrep/errors.hpp"
#include "wnrep/tensormod.hpp"

struct wnrep_dmodule {
  wnrep::DModule value;
};
struct wnrep_glmodule {
  wnrep::GlModulePtr value;
};
struct wnrep_tensor {
  wnrep::TensorModule value;
};

namespace {

thread_local std::string last_error;

template <class F>
wnrep_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return WNREP_OK;
  } catch (const wnrep::Error& e) {
    last_error = e.what();
    return static_cast<wnrep_status>(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return WNREP_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return WNREP_ERR_INTERNAL;
  }
}

wnrep_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return WNREP_ERR_NULL_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string str_or_empty(const char* s) { return s ? s : ""; }

}  // namespace

extern "C" {

const char* wnrep_last_error(void) { return last_error.c_str(); }

void wnrep_string_free(char* s) { std::free(s); }

wnrep_status wnrep_dmodule_parse(const char* text, wnrep_dmodule** out) {
  if (!text || !out) return null_arg("text/out");
  return guarded([&] { *out = new wnrep_dmodule{wnrep::parse_dmodule(text)}; });
}

void wnrep_dmodule_free(wnrep_dmodule* m) { delete m; }

wnrep_status wnrep_dmodule_rank(const wnrep_dmodule* m, int* out) {
  if (!m || !out) return null_arg("module/out");
  *out = m->value.n();
  return WNREP_OK;
}

wnrep_status wnrep_dmodule_describe(const wnrep_dmodule* m, char** out) {
  if (!m || !out) return null_arg("module/out");
  return guarded([&] { *out = dup_string(m->value.descriptor()); });
}

wnrep_status wnrep_glmodule_parse(const char* text, int n, wnrep_glmodule** out) {
  if (!text || !out) return null_arg("text/out");
  return guarded([&] { *out = new wnrep_glmodule{wnrep::parse_glmodule(text, n)}; });
}

void wnrep_glmodule_free(wnrep_glmodule* m) { delete m; }

wnrep_status wnrep_glmodule_describe(const wnrep_glmodule* m, char** out) {
  if (!m || !out) return null_arg("module/out");
  return guarded([&] { *out = dup_string(m->value->descriptor()); });
}

wnrep_status wnrep_tensor_create(const wnrep_dmodule* P, const wnrep_glmodule* V, wnrep_tensor** out) {
  if (!P || !V || !out) return null_arg("P/V/out");
  return guarded([&] { *out = new wnrep_tensor{wnrep::TensorModule(P->value, V->value)}; });
}

void wnrep_tensor_free(wnrep_tensor* t) { delete t; }

wnrep_status wnrep_tensor_describe(const wnrep_tensor* t, char** out) {
  if (!t || !out) return null_arg("tensor/out");
  return guarded([&] { *out = dup_string(t->value.descriptor()); });
}

wnrep_status wnrep_tensor_multiplicity(const wnrep_tensor* t, const char* const* mu, long radius,
                                       long* out) {
  if (!t || !mu || !out) return null_arg("tensor/mu/out");
  return guarded([&] {
    const int n = t->value.n();
    wnrep::Weight w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (!mu[i]) throw wnrep::ValidationError("weight has fewer than n coordinates");
      w[i] = wnrep::Scalar::parse(mu[i]);
    }
    if (radius < 0) throw wnrep::RangeError("radius must be nonnegative");
    *out = wnrep::tmod_mult(t->value, w, wnrep::Window::box(n, radius));
  });
}

wnrep_status wnrep_finmult_criterion(const wnrep_tensor* t, int* out) {
  if (!t || !out) return null_arg("tensor/out");
  return guarded([&] {
    *out = wnrep::finmult_criterion(wnrep::dmod_shadow(t->value.P()), t->value.V()->shadow()) ? 1 : 0;
  });
}

wnrep_status wnrep_classify(const wnrep_tensor* t, char** out) {
  if (!t || !out) return null_arg("tensor/out");
  return guarded([&] { *out = dup_string(wnrep::case_name(wnrep::classify_case(t->value).kind)); });
}

void wnrep_options_init(wnrep_options* opt) {
  if (!opt) return;
  const wnrep::Options d;
  *opt = wnrep_options{};
  opt->window = d.window;
  opt->margin = d.margin;
  opt->gen_degree = d.gen_degree;
  opt->samples = d.samples;
  opt->format = "json";
  opt->seed = d.seed;
  opt->at = d.at;
  opt->elem = "x";
  opt->exp = "0";
  opt->start = "random";
}

wnrep_status wnrep_run(const char* command, const wnrep_options* opt, char** out_report, int* out_pass) {
  if (!command || !opt || !out_report || !out_pass) return null_arg("command/options/out");
  return guarded([&] {
    wnrep::Options o;
    o.P = str_or_empty(opt->P);
    o.V = str_or_empty(opt->V);
    o.S = str_or_empty(opt->S);
    o.window = opt->window;
    o.margin = opt->margin;
    o.gen_degree = opt->gen_degree;
    o.samples = opt->samples;
    if (opt->format) o.format = opt->format;
    o.seed = opt->seed;
    o.at = opt->at;
    if (opt->elem) o.elem = opt->elem;
    if (opt->exp) o.exp = opt->exp;
    o.n = opt->n;
    o.p = opt->p;
    o.m = opt->m;
    if (opt->k_blocks) o.k_blocks.assign(opt->k_blocks, opt->k_blocks + opt->k_block_count);
    if (opt->start) o.start = opt->start;
    o.threads = opt->threads;
    wnrep::Report r = wnrep::run(command, o);
    *out_report = dup_string(r.text);
    *out_pass = r.pass ? 1 : 0;
  });
}

}  // extern "C"
