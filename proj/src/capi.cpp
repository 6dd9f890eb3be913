#include "herglotz/herglotz.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>

#include "herglotz/registry.hpp"
#include "herglotz/relations.hpp"

struct hz_context {
  std::string last_error;
};

namespace {

using herglotz::ErrorCode;

hz_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::Domain: return HZ_ERR_DOMAIN;
    case ErrorCode::Pole: return HZ_ERR_POLE;
    case ErrorCode::BudgetExceeded: return HZ_ERR_BUDGET;
    case ErrorCode::Range: return HZ_ERR_RANGE;
    case ErrorCode::PoleTooClose: return HZ_ERR_POLE_TOO_CLOSE;
    case ErrorCode::TruncationUncertified: return HZ_ERR_TRUNCATION;
  }
  return HZ_ERR_INTERNAL;
}

hz_status fail(hz_context* ctx, hz_status s, const std::string& msg) {
  if (ctx) ctx->last_error = msg;
  return s;
}

// Runs body, translating exceptions into status codes.
template <class Body>
hz_status guarded(hz_context* ctx, Body body) {
  try {
    if (ctx) ctx->last_error.clear();
    return body();
  } catch (const herglotz::Error& e) {
    return fail(ctx, status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ctx, HZ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ctx, HZ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ctx, HZ_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

const char* hz_version(void) { return "1.0.0"; }

const char* hz_status_string(hz_status status) {
  switch (status) {
    case HZ_OK: return "ok";
    case HZ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HZ_ERR_UNKNOWN_FUNCTION: return "unknown function";
    case HZ_ERR_UNKNOWN_IDENTITY: return "unknown identity";
    case HZ_ERR_DOMAIN: return "domain error";
    case HZ_ERR_POLE: return "pole";
    case HZ_ERR_BUDGET: return "budget exceeded";
    case HZ_ERR_RANGE: return "range error";
    case HZ_ERR_POLE_TOO_CLOSE: return "pole too close";
    case HZ_ERR_TRUNCATION: return "truncation uncertified";
    case HZ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

hz_status hz_context_create(hz_context** out) {
  if (!out) return HZ_ERR_INVALID_ARGUMENT;
  *out = new (std::nothrow) hz_context;
  return *out ? HZ_OK : HZ_ERR_INTERNAL;
}

void hz_context_destroy(hz_context* ctx) { delete ctx; }

const char* hz_context_last_error(const hz_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

size_t hz_function_count(void) { return herglotz::registry::functions().size(); }

const char* hz_function_name(size_t index) {
  const auto& f = herglotz::registry::functions();
  return index < f.size() ? f[index].name : nullptr;
}

hz_status hz_function_default_tol(const char* name, double* tol) {
  if (!name || !tol) return HZ_ERR_INVALID_ARGUMENT;
  const auto* f = herglotz::registry::find(name);
  if (!f) return HZ_ERR_UNKNOWN_FUNCTION;
  *tol = f->default_tol;
  return HZ_OK;
}

hz_status hz_eval(hz_context* ctx, const char* name, double x, double tol, hz_value* out) {
  if (!name || !out) return fail(ctx, HZ_ERR_INVALID_ARGUMENT, "null argument");
  const auto* f = herglotz::registry::find(name);
  if (!f) return fail(ctx, HZ_ERR_UNKNOWN_FUNCTION, std::string("unknown function: ") + name);
  if (!std::isfinite(x)) return fail(ctx, HZ_ERR_DOMAIN, std::string(name) + ": argument must be finite");
  return guarded(ctx, [&] {
    const herglotz::RealResult r = f->eval(x, tol > 0.0 ? tol : f->default_tol);
    out->value = r.value;
    out->error_estimate = r.error_estimate;
    return HZ_OK;
  });
}

size_t hz_identity_count(void) { return herglotz::relations::identities().size(); }

const char* hz_identity_name(size_t index) {
  const auto& ids = herglotz::relations::identities();
  return index < ids.size() ? ids[index].name : nullptr;
}

hz_status hz_identity_defaults(const char* name, const double** grid, size_t* count, double* tol) {
  if (!name) return HZ_ERR_INVALID_ARGUMENT;
  const auto id = herglotz::relations::parse_identity(name);
  if (!id) return HZ_ERR_UNKNOWN_IDENTITY;
  const auto& i = herglotz::relations::info(*id);
  if (grid) *grid = i.default_grid.data();
  if (count) *count = i.default_grid.size();
  if (tol) *tol = i.default_tol;
  return HZ_OK;
}

hz_status hz_verify(hz_context* ctx, const char* name, double param, double tol, hz_report* out) {
  if (!name || !out) return fail(ctx, HZ_ERR_INVALID_ARGUMENT, "null argument");
  const auto id = herglotz::relations::parse_identity(name);
  if (!id) return fail(ctx, HZ_ERR_UNKNOWN_IDENTITY, std::string("unknown identity: ") + name);
  return guarded(ctx, [&] {
    const double t = tol > 0.0 ? tol : herglotz::relations::info(*id).default_tol;
    const auto r = herglotz::relations::verify(*id, param, t);
    out->param = r.params.empty() ? param : r.params.front();
    out->partner = r.params.size() > 1 ? r.params[1] : out->param;
    out->lhs = r.lhs.value;
    out->lhs_error = r.lhs.error_estimate;
    out->rhs = r.rhs.value;
    out->rhs_error = r.rhs.error_estimate;
    out->residual = r.residual;
    out->tolerance = r.tolerance;
    out->pass = r.pass ? 1 : 0;
    return HZ_OK;
  });
}

}  // extern "C"
