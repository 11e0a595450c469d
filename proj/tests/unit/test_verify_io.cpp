#include "helpers.hpp"

#include "json_io.hpp"
#include "sampling.hpp"
#include "suites.hpp"

#include "cochain/errors.hpp"

using namespace cochain;
using testing::dlam;
using testing::lam;
using testing::q;

TEST_CASE("forms survive a JSON round trip", "[io]") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& u : basis_trimmed(n, 2, k)) {
        const PolyForm scaled = u * q(-7, 3);
        CHECK(io::form_from_json(io::parse_json(io::form_to_json(scaled).dump())) == scaled);
      }
  const PolyForm face = trace(wedge(lam(3, 2), dlam(3, 3)), IndexSet(3, {1, 2, 3}));
  CHECK(io::form_from_json(io::form_to_json(face)) == face);
}

TEST_CASE("boundary data survives a JSON round trip", "[io]") {
  for (const auto& b : boundary_basis(2, 2, 1, Family::full))
    CHECK(io::boundary_from_json(io::parse_json(io::boundary_to_json(b).dump())) == b);
}

TEST_CASE("reading symmetric monomials", "[io]") {
  const auto j = io::parse_json(R"({"n":2,"k":1,"terms":[{"dlambda":[2],"poly":[{"alpha":[1,0,0],"num":3,"den":6}]}]})");
  CHECK(io::form_from_json(j) == wedge(lam(2, 0), dlam(2, 2)) * q(1, 2));
  const auto big = io::parse_json(R"({"n":1,"k":0,"terms":[{"dlambda":[],"poly":[{"alpha":[0,1],"num":"123456789012345678901234567890","den":1}]}]})");
  CHECK(io::form_from_json(big) == lam(1, 1) * Rational("123456789012345678901234567890"));
  CHECK(io::integer_from_json(io::integer_to_json(Integer("-98765432109876543210987"))) ==
        Integer("-98765432109876543210987"));
}

TEST_CASE("malformed JSON input", "[io][errors]") {
  CHECK_THROWS_AS(io::parse_json("{\"n\":"), ParseError);
  CHECK_THROWS_AS(io::form_from_json(io::parse_json(R"({"k":0,"terms":[]})")), ParseError);
  CHECK_THROWS_AS(io::form_from_json(io::parse_json(R"({"n":2,"k":1,"terms":[{"dlambda":[0],"poly":[]}]})")),
                  ParseError);
  CHECK_THROWS_AS(io::form_from_json(io::parse_json(R"({"n":2,"k":2,"terms":[{"dlambda":[2,1],"poly":[]}]})")),
                  ParseError);
  CHECK_THROWS_AS(
      io::form_from_json(io::parse_json(
          R"({"n":2,"k":0,"terms":[{"dlambda":[],"poly":[{"alpha":[0,0,0],"num":1,"den":0}]}]})")),
      ParseError);
  CHECK_THROWS_AS(io::boundary_from_json(io::parse_json(R"({"n":2,"k":0,"facets":[]})")), ParseError);
}

TEST_CASE("sampled points are interior and reproducible", "[sampling]") {
  for (int n = 1; n <= 4; ++n) {
    const auto a = verify::interior_points(n, 6, 42), b = verify::interior_points(n, 6, 42);
    REQUIRE(a.size() == 6);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].strictly_inside());
      CHECK(a[i].coords() == b[i].coords());
    }
    std::mt19937_64 rng(3);
    for (const auto& v : verify::tangent_vectors(n, 3, rng)) {
      Rational sum = 0;
      for (const auto& c : v.coeffs()) sum += c;
      CHECK(sum == 0);
    }
  }
  CHECK(verify::case_seed(1, {2, 3}) != verify::case_seed(1, {3, 2}));
}

TEST_CASE("suite configuration is validated", "[suites][errors]") {
  verify::SuiteConfig c;
  c.n_values = {9};
  CHECK_THROWS_AS(verify::validate(c), verify::ConfigError);
  c.n_values = {4};
  CHECK_THROWS_AS(verify::validate(c), verify::ConfigError);
  c.allow_slow = true;
  CHECK_NOTHROW(verify::validate(c));
  c.suites = {"nonsense"};
  CHECK_THROWS_AS(verify::validate(c), verify::ConfigError);
  verify::SuiteConfig d;
  d.r_values = {0};
  CHECK_THROWS_AS(verify::validate(d), verify::ConfigError);
}

TEST_CASE("suites pass and reports are deterministic", "[suites]") {
  verify::SuiteConfig c;
  c.n_values = {1, 2};
  c.r_values = {1};
  const auto first = verify::run_verify(c);
  const auto second = verify::run_verify(c);
  CHECK(first.passed);
  CHECK(first.report.dump() == second.report.dump());
  CHECK(first.report["suites"].size() == verify::suite_names().size());
  CHECK(first.report["schema"] == 1);
}

TEST_CASE("diagnostic findings never fail a run", "[suites]") {
  verify::SuiteConfig c;
  c.n_values = {1};
  c.r_values = {1};
  const auto s = verify::run_suite("toplevel-diagnostic", c);
  CHECK(s.passed());
  bool found_nonzero = false;
  for (const auto& check : s.checks)
    if (check.name == "d-extension-vanishes") found_nonzero = check.failed > 0;
  CHECK(found_nonzero);
}
