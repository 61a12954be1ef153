#include "json_io.hpp"

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "repr_sl21.hpp"

namespace relmod {
namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(Status::InvalidArgument, what);
}

const Json& field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key, int fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return it->get<int>();
}

double num_or(const Json& j, const char* key, double fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number()) bad(std::string("field '") + key + "' must be a number");
  return it->get<double>();
}

}  // namespace

Json cplx_to_json(const Cplx& z) {
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

Cplx cplx_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_object()) return {num_or(j, "re", 0.0), num_or(j, "im", 0.0)};
  bad("expected a number or {\"re\", \"im\"}");
}

Json weight_to_json(const Weight& w) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < w.size(); ++i) out.push_back(cplx_to_json(w(i)));
  return out;
}

Weight weight_from_json(const Context& cx, const Json& j) {
  if (!j.is_array()) bad("weight must be an array of complex numbers");
  if (static_cast<int>(j.size()) != cx.rs.r)
    bad("weight must have " + std::to_string(cx.rs.r) + " coordinates, got " +
        std::to_string(j.size()));
  std::vector<Cplx> coords;
  for (const Json& e : j) coords.push_back(cplx_from_json(e));
  return make_weight(cx.rs, coords);
}

WeightModule module_from_json(const Context& cx, const Json& j) {
  if (!j.is_object()) bad("module descriptor must be an object");
  const Json& t = field(j, "type");
  if (!t.is_string()) bad("module 'type' must be a string");
  const std::string type = t.get<std::string>();
  if (type == "typical")
    return make_typical(cx, cplx_from_json(field(j, "a")),
                        int_field(j, "c", 0));
  if (type == "standard") return make_standard(cx);
  if (type == "trivial") return make_trivial(cx);
  if (type == "odd_trivial") return make_odd_trivial(cx);
  if (type == "epsilon") return make_epsilon(cx);
  if (type == "sigma")
    return make_sigma(cx, int_field(j, "parity", 0),
                      weight_from_json(cx, field(j, "weight")));
  if (type == "dual") return dual_module(cx, module_from_json(cx, field(j, "of")));
  bad("unknown module type '" + type +
      "' (expected typical, standard, trivial, odd_trivial, epsilon, sigma, "
      "dual)");
}

namespace {

Piece piece_from_op(const std::string& op) {
  if (op == "cupL") return Piece::CupL;
  if (op == "cupR") return Piece::CupR;
  if (op == "capL") return Piece::CapL;
  if (op == "capR") return Piece::CapR;
  if (op == "crossP") return Piece::CrossPos;
  if (op == "crossN") return Piece::CrossNeg;
  if (op == "twistP") return Piece::TwistPos;
  if (op == "twistN") return Piece::TwistNeg;
  bad("unknown op '" + op +
      "' (expected cupL, cupR, capL, capR, crossP, crossN, twistP, twistN)");
}

}  // namespace

MorseDiagram diagram_from_json(const Context& cx, const Json& j) {
  if (!j.is_object()) bad("diagram must be an object");
  MorseDiagram d;
  if (const auto it = j.find("palette"); it != j.end()) {
    if (!it->is_array()) bad("'palette' must be an array of modules");
    for (const Json& e : *it) d.palette.push_back(module_from_json(cx, e));
  }
  const bool has_bottom = j.contains("bottom");
  const bool has_cut = j.contains("cut");
  if (has_bottom && has_cut) bad("give either 'bottom' or 'cut', not both");
  if (has_bottom) {
    const Json& b = j.at("bottom");
    if (!b.is_array()) bad("'bottom' must be an array of strands");
    for (const Json& e : b) {
      if (!e.is_object()) bad("strand must be {\"color\", \"dual\"}");
      StrandColor s;
      s.color = int_field(e, "color", 0);
      const auto dit = e.find("dual");
      if (dit != e.end()) {
        if (!dit->is_boolean()) bad("strand 'dual' must be a boolean");
        s.dual = dit->get<bool>();
      }
      d.bottom.push_back(s);
    }
  } else if (has_cut) {
    const Json& c = j.at("cut");
    if (!c.is_number_integer()) bad("'cut' must be a palette index");
    d.bottom.push_back({c.get<int>(), false});
  }
  if (const auto it = j.find("slices"); it != j.end()) {
    if (!it->is_array()) bad("'slices' must be an array");
    for (const Json& e : *it) {
      if (!e.is_object()) bad("slice must be an object");
      const Json& op = field(e, "op");
      if (!op.is_string()) bad("slice 'op' must be a string");
      Slice s;
      s.kind = piece_from_op(op.get<std::string>());
      s.pos = int_field(e, "pos", 0);
      s.color = int_field(e, "color", -1);
      if (s.color < 0) {
        if (const auto cit = e.find("colors");
            cit != e.end() && cit->is_array() && !cit->empty())
          s.color = cit->front().get<int>();
      }
      d.slices.push_back(s);
    }
  }
  return d;
}

bool has_surgery(const Json& j) {
  const auto it = j.find("surgery");
  return it != j.end() && it->is_array() && !it->empty();
}

SurgeryPresentation presentation_from_json(const Context& cx, const Json& j) {
  SurgeryPresentation p;
  p.diagram = diagram_from_json(cx, j);
  if (const auto it = j.find("surgery"); it != j.end()) {
    if (!it->is_array()) bad("'surgery' must be an array of palette indices");
    for (const Json& e : *it) {
      if (!e.is_number_integer()) bad("surgery entries must be palette indices");
      p.kirby_slots.push_back(e.get<int>());
    }
  }
  if (const auto it = j.find("gradings"); it != j.end()) {
    if (!it->is_array()) bad("'gradings' must be an array of complex numbers");
    for (const Json& e : *it) p.gradings.push_back(cplx_from_json(e));
  }
  const auto n = static_cast<Eigen::Index>(p.kirby_slots.size());
  if (const auto it = j.find("linking"); it != j.end()) {
    if (!it->is_array() || static_cast<Eigen::Index>(it->size()) != n)
      bad("'linking' must be an array of " + std::to_string(n) + " rows");
    p.linking = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const Json& row = (*it)[static_cast<size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
        bad("'linking' rows must have " + std::to_string(n) + " entries");
      for (Eigen::Index c = 0; c < n; ++c) {
        const Json& e = row[static_cast<size_t>(c)];
        if (!e.is_number()) bad("'linking' entries must be numbers");
        p.linking(r, c) = e.get<double>();
      }
    }
  } else if (n > 0) {
    bad("'linking' is required when 'surgery' is non-empty");
  } else {
    p.linking = Eigen::MatrixXd::Zero(0, 0);
  }
  return p;
}

VerifyOptions verify_options_from_json(const Json& j) {
  if (!j.is_object()) bad("verify options must be an object");
  VerifyOptions o;
  o.m = int_field(j, "m", o.m);
  o.n = int_field(j, "n", o.n);
  o.ell = int_field(j, "ell", o.ell);
  const int seed = int_field(j, "seed", -1);
  if (seed >= 0) o.seed = static_cast<unsigned>(seed);
  if (const auto it = j.find("tol"); it != j.end()) {
    if (!it->is_number()) bad("field 'tol' must be a number");
    o.tol_override = it->get<double>();
  }
  return o;
}

Json verify_report_to_json(const VerifyReport& report) {
  Json opts{{"m", report.options.m},
            {"n", report.options.n},
            {"ell", report.options.ell},
            {"seed", report.options.seed}};
  if (report.options.tol_override) opts["tol"] = *report.options.tol_override;
  Json criteria = Json::array();
  for (const VerifyCriterion& c : report.criteria) {
    Json checks = Json::array();
    for (const VerifyCheck& ch : c.checks)
      checks.push_back(Json{{"name", ch.name},
                            {"residual", ch.residual},
                            {"tol", ch.tol},
                            {"pass", ch.pass}});
    criteria.push_back(Json{{"number", c.number},
                            {"name", c.name},
                            {"pass", c.pass},
                            {"worst", c.worst},
                            {"checks", std::move(checks)}});
  }
  return Json{{"options", std::move(opts)},
              {"pass", report.pass},
              {"criteria", std::move(criteria)}};
}

}  // namespace relmod
