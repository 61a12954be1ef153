// JSON encoding of the library's values and requests.
//
// Conventions:
//   complex z        number (real) or {"re": x, "im": y}
//   weight           array of r complex numbers (coordinates on the
//                    fundamental weights, odd node last)
//   module           {"type": "typical", "a": z, "c": 0}
//                    {"type": "standard"} | {"type": "trivial"}
//                    {"type": "odd_trivial"} | {"type": "epsilon"}
//                    {"type": "sigma", "parity": 0, "weight": [...]}
//                    {"type": "dual", "of": module}
//   diagram          {"palette": [module, ...],
//                     "cut": color            // or "bottom": [...]
//                     "bottom": [{"color": 0, "dual": false}, ...],
//                     "slices": [{"op": "cupL", "pos": 1, "color": 1}, ...]}
//                    ops: cupL cupR capL capR crossP crossN twistP twistN;
//                    "color" (or "colors": [c]) is consumed by cups only.
//   presentation     diagram fields plus "surgery": [palette indices],
//                    "gradings": [z, ...], "linking": [[...], ...]
//
// Parsers throw Error (InvalidArgument) on missing/ill-typed fields and let
// domain validation (colors, positions, gradings) happen in the evaluator.

#ifndef RELMOD_JSON_IO_HPP
#define RELMOD_JSON_IO_HPP

#include <json.hpp>

#include "tangles.hpp"
#include "verify.hpp"

namespace relmod {

using Json = nlohmann::json;

Json cplx_to_json(const Cplx& z);
Cplx cplx_from_json(const Json& j);

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Context& cx, const Json& j);

WeightModule module_from_json(const Context& cx, const Json& j);

MorseDiagram diagram_from_json(const Context& cx, const Json& j);

// True when the request carries a non-empty "surgery" list.
bool has_surgery(const Json& j);
SurgeryPresentation presentation_from_json(const Context& cx, const Json& j);

VerifyOptions verify_options_from_json(const Json& j);
Json verify_report_to_json(const VerifyReport& report);

}  // namespace relmod

#endif  // RELMOD_JSON_IO_HPP
