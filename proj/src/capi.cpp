// C ABI layer: opaque context handle, JSON request dispatch, status
// mapping. All library exceptions are converted to status codes here;
// nothing C++ crosses the boundary.

#include "relmod.h"

#include <Eigen/Eigenvalues>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "braiding.hpp"
#include "errors.hpp"
#include "fusion.hpp"
#include "invariants.hpp"
#include "json_io.hpp"
#include "repr_sl21.hpp"
#include "tangles.hpp"
#include "verify.hpp"

struct relmod_ctx {
  relmod::Context cx;
  std::string last_error;
};

namespace {

using relmod::Context;
using relmod::Cplx;
using relmod::Error;
using relmod::Json;
using relmod::Mat;
using relmod::Status;
using relmod::Weight;
using relmod::WeightModule;

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "Ok";
    case Status::InvalidArgument: return "InvalidArgument";
    case Status::DegenerateWeight: return "DegenerateWeight";
    case Status::NotTypical: return "NotTypical";
    case Status::NotInAlcove: return "NotInAlcove";
    case Status::CriticalGrading: return "CriticalGrading";
    case Status::NotInLambdaZ: return "NotInLambdaZ";
    case Status::IllFormedDiagram: return "IllFormedDiagram";
    case Status::NotSimple: return "NotSimple";
    case Status::DegenerateDelta: return "DegenerateDelta";
    case Status::Internal: return "Internal";
  }
  return "Internal";
}

[[noreturn]] void bad(const std::string& what) {
  throw Error(Status::InvalidArgument, what);
}

bool bool_field(const Json& j, const char* key, bool fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) bad(std::string("field '") + key + "' must be a boolean");
  return it->get<bool>();
}

int int_field(const Json& j, const char* key, int fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number_integer())
    bad(std::string("field '") + key + "' must be an integer");
  return it->get<int>();
}

const Json& field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ------------------------------------------------------------ operations

Json op_typical(const Context& cx, const Json& req) {
  const Weight lam = relmod::weight_from_json(cx, field(req, "weight"));
  const relmod::TypicalityReport rep = relmod::is_typical(cx, lam);
  Json witnesses = Json::array();
  for (const relmod::Root& alpha : rep.vanishing)
    witnesses.push_back(
        relmod::weight_to_json(relmod::root_as_weight(cx.rs, alpha)));
  return Json{{"typical", rep.typical},
              {"arith", relmod::is_typical_arith(cx, lam)},
              {"near_wall", rep.near_wall},
              {"witnesses", std::move(witnesses)}};
}

Json op_alcove(const Context& cx, const Json& req) {
  const Weight lam = relmod::weight_from_json(cx, field(req, "weight"));
  return Json{{"in_alcove", relmod::in_alcove(cx, lam,
                                              bool_field(req, "strict", false))},
              {"in_lambda_z", relmod::in_lambda_z(cx, lam)},
              {"in_lambda_z0", relmod::in_lambda_z0(cx, lam)}};
}

Json op_mdim(const Context& cx, const Json& req) {
  const Weight lam = relmod::weight_from_json(cx, field(req, "weight"));
  const bool pert = cx.ideal == relmod::Ideal::Perturbative;
  const Cplx v = pert ? relmod::mdim_pert(cx, lam) : relmod::mdim_proj(cx, lam);
  return Json{{"value", relmod::cplx_to_json(v)},
              {"ideal", pert ? "pert" : "proj"}};
}

Json op_twist(const Context& cx, const Json& req) {
  const Weight lam = relmod::weight_from_json(cx, field(req, "weight"));
  return Json{{"value", relmod::cplx_to_json(relmod::twist_scalar(cx, lam))}};
}

Json op_sprime(const Context& cx, const Json& req) {
  const Weight lam = relmod::weight_from_json(cx, field(req, "lam"));
  const Weight mu = relmod::weight_from_json(cx, field(req, "mu"));
  return Json{{"value", relmod::cplx_to_json(relmod::s_prime(cx, lam, mu))}};
}

Json op_hopf(const Context& cx, const Json& req) {
  const Cplx v = relmod::hopf_value_sl21(
      cx, relmod::cplx_from_json(field(req, "a")), int_field(req, "c", 0),
      relmod::cplx_from_json(field(req, "a2")), int_field(req, "c2", 0),
      bool_field(req, "positive", true));
  return Json{{"value", relmod::cplx_to_json(v)}};
}

Json op_fuse(const Context& cx, const Json& req) {
  const std::vector<Weight> parts = relmod::tensor_decompose_zero(
      cx, relmod::cplx_from_json(field(req, "a")),
      relmod::cplx_from_json(field(req, "b")));
  Json summands = Json::array();
  for (const Weight& mu : parts)
    summands.push_back(Json{{"weight", relmod::weight_to_json(mu)},
                            {"envelope_dim", relmod::envelope_dim(cx, mu)}});
  return Json{{"summands", std::move(summands)}};
}

Json op_delta(const Context& cx, const Json& req) {
  std::string mode = "both";
  if (const auto it = req.find("mode"); it != req.end()) {
    if (!it->is_string()) bad("field 'mode' must be a string");
    mode = it->get<std::string>();
  }
  if (mode != "closed" && mode != "sum" && mode != "both")
    bad("mode must be one of closed, sum, both");
  const Cplx a = req.contains("a")
                     ? relmod::cplx_from_json(req.at("a"))
                     : Cplx(0.3, 0.0);
  Json out;
  for (const int sign : {+1, -1}) {
    Json part;
    const Cplx closed = relmod::delta_closed_form(cx, sign);
    if (mode != "sum") part["closed"] = relmod::cplx_to_json(closed);
    if (mode != "closed") {
      const Cplx sum = relmod::delta_numeric(cx, sign, a);
      part["sum"] = relmod::cplx_to_json(sum);
      part["a"] = relmod::cplx_to_json(a);
      if (mode == "both") part["diff"] = std::abs(sum - closed);
    }
    out[sign > 0 ? "plus" : "minus"] = std::move(part);
  }
  return out;
}

Json op_kirby(const Context& cx, const Json& req) {
  const std::vector<relmod::KirbyTerm> terms =
      relmod::kirby_color_sl21(cx, relmod::cplx_from_json(field(req, "a")));
  Json out = Json::array();
  for (const relmod::KirbyTerm& t : terms)
    out.push_back(Json{{"k", t.k},
                       {"c", t.c},
                       {"weight", relmod::weight_to_json(t.lam)},
                       {"coeff", relmod::cplx_to_json(t.coeff)}});
  return Json{{"terms", std::move(out)}};
}

Json op_module(const Context& cx, const Json& req) {
  const WeightModule v = relmod::module_from_json(cx, field(req, "module"));
  Json weights = Json::array();
  for (const Weight& w : v.weights) weights.push_back(relmod::weight_to_json(w));
  return Json{{"dim", v.dim},
              {"label", v.label},
              {"weights", std::move(weights)},
              {"parities", v.parities},
              {"quantum_dimension",
               relmod::cplx_to_json(relmod::quantum_dimension(cx, v))},
              {"relations_residual",
               relmod::check_relations(cx, v).max_residual}};
}

Json op_braid(const Context& cx, const Json& req) {
  const WeightModule v = relmod::module_from_json(cx, field(req, "left"));
  const WeightModule w = relmod::module_from_json(cx, field(req, "right"));
  const relmod::BraidingOperator op = relmod::braiding(cx, v, w);
  relmod::MorphismMatrix mm;
  mm.source = op.source;
  mm.target = op.target;
  mm.entries = op.forward;
  const Mat id = Mat::Identity(op.forward.rows(), op.forward.cols());
  Json out{{"dim_left", v.dim},
           {"dim_right", w.dim},
           {"morphism_residual", relmod::morphism_residual(cx, mm)},
           {"inverse_residual",
            (op.forward * op.inverse - id).cwiseAbs().maxCoeff()}};
  if (bool_field(req, "entries", false)) {
    out["forward"] = matrix_to_json(op.forward);
    out["inverse"] = matrix_to_json(op.inverse);
  }
  return out;
}

Json op_eval(const Context& cx, const Json& req) {
  const relmod::MorseDiagram d =
      relmod::diagram_from_json(cx, field(req, "diagram"));
  const relmod::MorphismMatrix mm = relmod::evaluate(cx, d);
  return Json{{"rows", mm.entries.rows()},
              {"cols", mm.entries.cols()},
              {"source", mm.source.label},
              {"target", mm.target.label},
              {"entries", matrix_to_json(mm.entries)}};
}

Json op_fprime(const Context& cx, const Json& req) {
  const relmod::MorseDiagram d =
      relmod::diagram_from_json(cx, field(req, "diagram"));
  return Json{{"value", relmod::cplx_to_json(relmod::f_prime(cx, d))}};
}

Json op_cgp(const Context& cx, const Json& req) {
  const relmod::SurgeryPresentation p =
      relmod::presentation_from_json(cx, field(req, "diagram"));
  const Cplx v = relmod::cgp_invariant(cx, p);
  int b_plus = 0, b_minus = 0;
  if (p.linking.rows() > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p.linking);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      if (es.eigenvalues()(i) > 1e-9) ++b_plus;
      if (es.eigenvalues()(i) < -1e-9) ++b_minus;
    }
  }
  return Json{{"value", relmod::cplx_to_json(v)},
              {"b_plus", b_plus},
              {"b_minus", b_minus}};
}

Json op_verify(const Context& cx, const Json& req) {
  Json opts = req;
  opts.erase("op");
  if (!opts.contains("m")) opts["m"] = cx.rs.m;
  if (!opts.contains("n")) opts["n"] = cx.rs.n;
  if (!opts.contains("ell")) opts["ell"] = cx.root.ell;
  const relmod::VerifyOptions o = relmod::verify_options_from_json(opts);
  return relmod::verify_report_to_json(relmod::run_verify(o));
}

Json dispatch(const Context& cx, const Json& req) {
  const Json& op = field(req, "op");
  if (!op.is_string()) bad("field 'op' must be a string");
  const std::string name = op.get<std::string>();
  if (name == "typical") return op_typical(cx, req);
  if (name == "alcove") return op_alcove(cx, req);
  if (name == "mdim") return op_mdim(cx, req);
  if (name == "twist") return op_twist(cx, req);
  if (name == "sprime") return op_sprime(cx, req);
  if (name == "hopf") return op_hopf(cx, req);
  if (name == "fuse") return op_fuse(cx, req);
  if (name == "delta") return op_delta(cx, req);
  if (name == "kirby") return op_kirby(cx, req);
  if (name == "module") return op_module(cx, req);
  if (name == "braid") return op_braid(cx, req);
  if (name == "eval") return op_eval(cx, req);
  if (name == "fprime") return op_fprime(cx, req);
  if (name == "cgp") return op_cgp(cx, req);
  if (name == "verify") return op_verify(cx, req);
  bad("unknown op '" + name +
      "' (expected typical, alcove, mdim, twist, sprime, hopf, fuse, delta, "
      "kirby, module, braid, eval, fprime, cgp, verify)");
}

// Builds the error envelope and returns the mapped status.
relmod_status fail(char** response, std::string* sink, Status status,
                   const std::string& message) {
  if (sink) *sink = message;
  if (response) {
    const Json envelope{{"status", static_cast<int>(status)},
                        {"error", message},
                        {"error_name", status_name(status)}};
    *response = dup_string(envelope.dump());
  }
  return static_cast<relmod_status>(status);
}

relmod_status run_json(const Context* cx, std::string* sink,
                       const char* request, char** response,
                       bool verify_only) {
  if (response) *response = nullptr;
  if (!request)
    return fail(response, sink, Status::InvalidArgument, "null request");
  try {
    const Json req = Json::parse(request);
    Json result;
    if (verify_only) {
      const relmod::VerifyOptions o = relmod::verify_options_from_json(req);
      result = relmod::verify_report_to_json(relmod::run_verify(o));
    } else {
      result = dispatch(*cx, req);
    }
    const Json envelope{{"status", 0}, {"result", std::move(result)}};
    if (response) {
      *response = dup_string(envelope.dump());
      if (!*response)
        return fail(response, sink, Status::Internal, "allocation failure");
    }
    if (sink) sink->clear();
    return RELMOD_OK;
  } catch (const Error& e) {
    return fail(response, sink, e.status, e.what());
  } catch (const Json::exception& e) {
    return fail(response, sink, Status::InvalidArgument, e.what());
  } catch (const std::invalid_argument& e) {
    // Precondition violations from the numeric layers.
    return fail(response, sink, Status::InvalidArgument, e.what());
  } catch (const std::bad_alloc&) {
    return fail(response, sink, Status::Internal, "allocation failure");
  } catch (const std::exception& e) {
    return fail(response, sink, Status::Internal, e.what());
  }
}

}  // namespace

extern "C" {

relmod_status relmod_ctx_new(int m, int n, int ell, const char* ideal,
                             double tol, relmod_ctx** out) {
  if (!out) {
    g_last_error = "null output pointer";
    return RELMOD_INVALID_ARGUMENT;
  }
  try {
    relmod::Ideal id = relmod::Ideal::Perturbative;
    const std::string ids = ideal ? ideal : "";
    if (ids == "proj" || ids == "projective") {
      id = relmod::Ideal::Projective;
    } else if (!(ids.empty() || ids == "pert" || ids == "perturbative")) {
      throw Error(Status::InvalidArgument,
                  "ideal must be 'pert' or 'proj', got '" + ids + "'");
    }
    const double t = tol > 0 ? tol : relmod::kDefaultTol;
    *out = new relmod_ctx{Context(m, n, ell, id, t), std::string()};
    g_last_error.clear();
    return RELMOD_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<relmod_status>(e.status);
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return RELMOD_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RELMOD_INTERNAL;
  }
}

void relmod_ctx_free(relmod_ctx* ctx) { delete ctx; }

const char* relmod_last_error(const relmod_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

const char* relmod_global_last_error(void) { return g_last_error.c_str(); }

relmod_status relmod_request(relmod_ctx* ctx, const char* request,
                             char** response) {
  if (!ctx) {
    if (response) *response = nullptr;
    return RELMOD_INVALID_ARGUMENT;
  }
  return run_json(&ctx->cx, &ctx->last_error, request, response,
                  /*verify_only=*/false);
}

relmod_status relmod_verify(const char* options_json, char** report_json) {
  return run_json(nullptr, &g_last_error,
                  options_json ? options_json : "{}", report_json,
                  /*verify_only=*/true);
}

void relmod_string_free(char* s) { std::free(s); }

const char* relmod_status_name(relmod_status s) {
  return status_name(static_cast<Status>(s));
}

}  // extern "C"
