// Exercises the C ABI: context lifecycle, status mapping, and the JSON
// request surface, cross-checked against the C++ core it wraps.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>
#include <string>

#include "invariants.hpp"
#include "relmod.h"
#include "repr_sl21.hpp"

using Json = nlohmann::json;
using relmod::Cplx;

namespace {

struct CtxGuard {
  relmod_ctx* ctx = nullptr;
  ~CtxGuard() { relmod_ctx_free(ctx); }
};

// Sends one request and returns (status, parsed response).
std::pair<relmod_status, Json> call(relmod_ctx* ctx, const Json& req) {
  char* out = nullptr;
  const relmod_status st = relmod_request(ctx, req.dump().c_str(), &out);
  REQUIRE(out != nullptr);
  const Json parsed = Json::parse(out);
  relmod_string_free(out);
  return {st, parsed};
}

Cplx as_cplx(const Json& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

bool close(const Cplx& x, const Cplx& y, double tol = 1e-9) {
  return std::abs(x - y) <= tol * (1.0 + std::abs(x) + std::abs(y));
}

}  // namespace

TEST_CASE("context lifecycle and configuration errors") {
  relmod_ctx* ctx = nullptr;
  REQUIRE(relmod_ctx_new(2, 1, 5, "pert", 0.0, &ctx) == RELMOD_OK);
  REQUIRE(ctx != nullptr);
  CHECK(std::string(relmod_last_error(ctx)).empty());
  relmod_ctx_free(ctx);
  relmod_ctx_free(nullptr);  // must be a no-op

  ctx = nullptr;
  CHECK(relmod_ctx_new(2, 1, 4, "pert", 0.0, &ctx) ==
        RELMOD_INVALID_ARGUMENT);  // even level
  CHECK(ctx == nullptr);
  CHECK(!std::string(relmod_global_last_error()).empty());
  CHECK(relmod_ctx_new(2, 2, 5, "pert", 0.0, &ctx) ==
        RELMOD_INVALID_ARGUMENT);  // m == n
  CHECK(relmod_ctx_new(2, 1, 5, "bogus", 0.0, &ctx) ==
        RELMOD_INVALID_ARGUMENT);
  CHECK(relmod_ctx_new(2, 1, 5, "pert", 0.0, nullptr) ==
        RELMOD_INVALID_ARGUMENT);

  CHECK(std::string(relmod_status_name(RELMOD_OK)) == "Ok");
  CHECK(std::string(relmod_status_name(RELMOD_NOT_TYPICAL)) == "NotTypical");
  CHECK(std::string(relmod_status_name(RELMOD_ILL_FORMED_DIAGRAM)) ==
        "IllFormedDiagram");
}

TEST_CASE("request surface against the core library") {
  CtxGuard g;
  REQUIRE(relmod_ctx_new(2, 1, 5, nullptr, 0.0, &g.ctx) == RELMOD_OK);
  relmod::Context cx(2, 1, 5);

  SUBCASE("mdim, twist, hopf match direct calls") {
    auto [st, resp] = call(g.ctx, {{"op", "mdim"},
                                   {"weight", {1, Json{{"re", 0.3}}}}});
    REQUIRE(st == RELMOD_OK);
    REQUIRE(resp.at("status") == 0);
    const relmod::Weight lam = relmod::weight_sl21(cx, Cplx(0.3, 0), 1);
    CHECK(close(as_cplx(resp.at("result").at("value")),
                relmod::mdim_pert(cx, lam)));
    CHECK(resp.at("result").at("ideal") == "pert");

    auto [st2, resp2] =
        call(g.ctx, {{"op", "twist"}, {"weight", {1, Json{{"re", 0.3}}}}});
    REQUIRE(st2 == RELMOD_OK);
    CHECK(close(as_cplx(resp2.at("result").at("value")),
                relmod::twist_scalar(cx, lam)));

    auto [st3, resp3] = call(g.ctx, {{"op", "hopf"},
                                     {"a", 0.3},
                                     {"c", 1},
                                     {"a2", 0.45},
                                     {"c2", 0},
                                     {"positive", false}});
    REQUIRE(st3 == RELMOD_OK);
    CHECK(close(as_cplx(resp3.at("result").at("value")),
                relmod::hopf_value_sl21(cx, Cplx(0.3, 0), 1, Cplx(0.45, 0), 0,
                                        false)));
  }

  SUBCASE("typicality report with witnesses") {
    auto [st, resp] =
        call(g.ctx, {{"op", "typical"}, {"weight", {0, 0}}});
    REQUIRE(st == RELMOD_OK);
    CHECK(resp.at("result").at("typical") == false);
    CHECK(resp.at("result").at("arith") == false);
    CHECK(!resp.at("result").at("witnesses").empty());

    auto [st2, resp2] =
        call(g.ctx, {{"op", "typical"}, {"weight", {0, Json{{"re", 0.3}}}}});
    REQUIRE(st2 == RELMOD_OK);
    CHECK(resp2.at("result").at("typical") == true);
    CHECK(resp2.at("result").at("witnesses").empty());
  }

  SUBCASE("fusion summands") {
    auto [st, resp] = call(g.ctx, {{"op", "fuse"}, {"a", 0.3}, {"b", 0.4}});
    REQUIRE(st == RELMOD_OK);
    const Json& sums = resp.at("result").at("summands");
    REQUIRE(sums.size() == 3);
    std::vector<long long> dims;
    for (const Json& s : sums) dims.push_back(s.at("envelope_dim").get<long long>());
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<long long>({4, 4, 8}));
  }

  SUBCASE("delta in both modes") {
    auto [st, resp] = call(g.ctx, {{"op", "delta"}, {"mode", "both"}});
    REQUIRE(st == RELMOD_OK);
    const Json& plus = resp.at("result").at("plus");
    CHECK(close(as_cplx(plus.at("closed")),
                relmod::delta_closed_form(cx, +1)));
    CHECK(plus.at("diff").get<double>() < 1e-9);
    CHECK(resp.at("result").at("minus").at("diff").get<double>() < 1e-9);
  }

  SUBCASE("kirby color terms") {
    auto [st, resp] = call(g.ctx, {{"op", "kirby"}, {"a", 0.3}});
    REQUIRE(st == RELMOD_OK);
    const Json& terms = resp.at("result").at("terms");
    CHECK(terms.size() == 25);  // ell^2, zero-coefficient terms kept
    int nonzero = 0;
    for (const Json& t : terms)
      if (std::abs(as_cplx(t.at("coeff"))) > 1e-14) ++nonzero;
    CHECK(nonzero == 20);
  }

  SUBCASE("module descriptors") {
    auto [st, resp] = call(
        g.ctx,
        {{"op", "module"},
         {"module", {{"type", "typical"}, {"a", 0.3}, {"c", 1}}}});
    REQUIRE(st == RELMOD_OK);
    CHECK(resp.at("result").at("dim") == 8);
    CHECK(resp.at("result").at("relations_residual").get<double>() < 1e-10);

    auto [st2, resp2] = call(
        g.ctx, {{"op", "module"},
                {"module",
                 {{"type", "dual"},
                  {"of", {{"type", "standard"}}}}}});
    REQUIRE(st2 == RELMOD_OK);
    CHECK(resp2.at("result").at("dim") == 3);

    auto [st3, resp3] = call(
        g.ctx,
        {{"op", "module"},
         {"module",
          {{"type", "sigma"}, {"parity", 1}, {"weight", {0, 5}}}}});
    REQUIRE(st3 == RELMOD_OK);
    CHECK(resp3.at("result").at("dim") == 1);
    CHECK(close(as_cplx(resp3.at("result").at("quantum_dimension")),
                Cplx(-1, 0)));

    auto [st4, resp4] =
        call(g.ctx, {{"op", "module"}, {"module", {{"type", "nope"}}}});
    CHECK(st4 == RELMOD_INVALID_ARGUMENT);
    CHECK(resp4.at("error_name") == "InvalidArgument");
  }

  SUBCASE("braiding operator summary") {
    auto [st, resp] = call(g.ctx, {{"op", "braid"},
                                   {"left", {{"type", "standard"}}},
                                   {"right", {{"type", "standard"}}}});
    REQUIRE(st == RELMOD_OK);
    CHECK(resp.at("result").at("morphism_residual").get<double>() < 1e-10);
    CHECK(resp.at("result").at("inverse_residual").get<double>() < 1e-12);
    CHECK(!resp.at("result").contains("forward"));

    auto [st2, resp2] = call(g.ctx, {{"op", "braid"},
                                     {"left", {{"type", "standard"}}},
                                     {"right", {{"type", "standard"}}},
                                     {"entries", true}});
    REQUIRE(st2 == RELMOD_OK);
    CHECK(resp2.at("result").at("forward").size() == 9);
  }

  SUBCASE("tangle evaluation via JSON words") {
    // Open strand colored V(0.3, 0): the empty word is the identity.
    const Json empty_word{{"op", "eval"},
                          {"diagram",
                           {{"palette",
                             Json::array({{{"type", "typical"}, {"a", 0.3}}})},
                            {"cut", 0},
                            {"slices", Json::array()}}}};
    auto [st, resp] = call(g.ctx, empty_word);
    REQUIRE(st == RELMOD_OK);
    CHECK(resp.at("result").at("rows") == 4);
    CHECK(resp.at("result").at("cols") == 4);
    CHECK(as_cplx(Json{{"re", resp.at("result")
                                  .at("entries")[0][0][0]
                                  .get<double>()},
                       {"im", resp.at("result")
                                  .at("entries")[0][0][1]
                                  .get<double>()}}) == Cplx(1, 0));

    // The 0-framed unknot evaluated through f': the modified dimension.
    const Json unknot{{"op", "fprime"},
                      {"diagram",
                       {{"palette",
                         Json::array({{{"type", "typical"}, {"a", 0.3}}})},
                        {"cut", 0},
                        {"slices", Json::array()}}}};
    auto [st2, resp2] = call(g.ctx, unknot);
    REQUIRE(st2 == RELMOD_OK);
    CHECK(close(as_cplx(resp2.at("result").at("value")),
                relmod::mdim_pert(cx, relmod::weight_sl21(cx, Cplx(0.3, 0), 0))));

    // A word that never closes its circle is rejected by f'.
    const Json dangling{{"op", "fprime"},
                        {"diagram",
                         {{"palette",
                           Json::array({{{"type", "typical"}, {"a", 0.3}}})},
                          {"cut", 0},
                          {"slices",
                           Json::array({{{"op", "cupL"},
                                         {"pos", 1},
                                         {"color", 0}}})}}}};
    auto [st3, resp3] = call(g.ctx, dangling);
    CHECK(st3 == RELMOD_ILL_FORMED_DIAGRAM);
    CHECK(resp3.at("error_name") == "IllFormedDiagram");
    CHECK(!std::string(relmod_last_error(g.ctx)).empty());
  }

  SUBCASE("surgery invariant via JSON presentation") {
    // +1-stabilization around the cut strand; equals the unknot value.
    const Json word{
        {"op", "cgp"},
        {"diagram",
         {{"palette", Json::array({{{"type", "typical"}, {"a", 0.3}},
                                   {{"type", "typical"}, {"a", 0.99}}})},
          {"cut", 0},
          {"slices",
           Json::array({{{"op", "twistP"}, {"pos", 0}},
                        {{"op", "cupL"}, {"pos", 1}, {"color", 1}},
                        {{"op", "twistP"}, {"pos", 1}},
                        {{"op", "crossP"}, {"pos", 0}},
                        {{"op", "crossN"}, {"pos", 1}},
                        {{"op", "capR"}, {"pos", 0}}})},
          {"surgery", {1}},
          {"gradings", {0.7}},
          {"linking", {{1.0}}}}}};
    auto [st, resp] = call(g.ctx, word);
    REQUIRE(st == RELMOD_OK);
    CHECK(resp.at("result").at("b_plus") == 1);
    CHECK(resp.at("result").at("b_minus") == 0);
    CHECK(close(as_cplx(resp.at("result").at("value")),
                relmod::mdim_pert(cx, relmod::weight_sl21(cx, Cplx(0.3, 0), 0)),
                1e-8));

    // Critical grading surfaces with its own status.
    Json crit = word;
    crit["diagram"]["gradings"] = {0.5};
    auto [st2, resp2] = call(g.ctx, crit);
    CHECK(st2 == RELMOD_CRITICAL_GRADING);
    CHECK(resp2.at("error_name") == "CriticalGrading");

    // Missing linking matrix is a request error.
    Json nolink = word;
    nolink["diagram"].erase("linking");
    auto [st3, resp3] = call(g.ctx, nolink);
    CHECK(st3 == RELMOD_INVALID_ARGUMENT);
  }

  SUBCASE("domain errors map one-to-one") {
    auto [st, resp] =
        call(g.ctx, {{"op", "mdim"}, {"weight", {0, 0}}});  // atypical
    CHECK(st == RELMOD_NOT_TYPICAL);
    CHECK(resp.at("error_name") == "NotTypical");
    CHECK(resp.at("status") == 3);
    CHECK(!std::string(relmod_last_error(g.ctx)).empty());

    // A successful call clears the per-context message.
    auto [st2, resp2] = call(g.ctx, {{"op", "delta"}, {"mode", "closed"}});
    REQUIRE(st2 == RELMOD_OK);
    CHECK(std::string(relmod_last_error(g.ctx)).empty());

    auto [st3, resp3] = call(g.ctx, {{"op", "nope"}});
    CHECK(st3 == RELMOD_INVALID_ARGUMENT);

    char* out = nullptr;
    CHECK(relmod_request(g.ctx, "{not json", &out) ==
          RELMOD_INVALID_ARGUMENT);
    relmod_string_free(out);
    CHECK(relmod_request(g.ctx, nullptr, &out) == RELMOD_INVALID_ARGUMENT);
    relmod_string_free(out);
    CHECK(relmod_request(nullptr, "{}", &out) == RELMOD_INVALID_ARGUMENT);
  }

  SUBCASE("responses are byte-identical across repeated calls") {
    const Json req{{"op", "fuse"}, {"a", 0.3}, {"b", 0.4}};
    char* first = nullptr;
    char* second = nullptr;
    REQUIRE(relmod_request(g.ctx, req.dump().c_str(), &first) == RELMOD_OK);
    REQUIRE(relmod_request(g.ctx, req.dump().c_str(), &second) == RELMOD_OK);
    CHECK(std::string(first) == std::string(second));
    relmod_string_free(first);
    relmod_string_free(second);
  }
}

TEST_CASE("standalone verify entry") {
  char* report = nullptr;
  REQUIRE(relmod_verify("{}", &report) == RELMOD_OK);
  const Json parsed = Json::parse(report);
  relmod_string_free(report);
  REQUIRE(parsed.at("status") == 0);
  const Json& rep = parsed.at("result");
  CHECK(rep.at("pass") == true);
  REQUIRE(rep.at("criteria").size() == 10);
  for (const Json& c : rep.at("criteria")) {
    CHECK(c.at("pass") == true);
    for (const Json& ch : c.at("checks")) CHECK(ch.at("pass") == true);
  }

  // Configuration errors surface as status codes, not reports.
  char* bad = nullptr;
  CHECK(relmod_verify("{\"ell\": 4}", &bad) == RELMOD_INVALID_ARGUMENT);
  const Json baddoc = Json::parse(bad);
  relmod_string_free(bad);
  CHECK(baddoc.at("error_name") == "InvalidArgument");
}
