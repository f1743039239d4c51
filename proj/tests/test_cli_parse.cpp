#include "sunvol/serialize.hpp"
#include "sunvol/volumes.hpp"

#include <doctest.h>

#include <string>

using namespace sunvol;
using namespace sunvol::volumes;
using sunvol::serialize::SchemaError;
using json = nlohmann::json;

namespace {
ExactVolume eval_text(const std::string& text) {
  return eval_volume(parse_volume_expr(text));
}
}  // namespace

TEST_SUITE("cli") {

TEST_CASE("expression grammar accepts the documented forms") {
  CHECK(eval_text("SU(3)") == vol_su(3));
  CHECK(eval_text("U(4)") == vol_u(4));
  CHECK(eval_text("CP(3)") == vol_cpn(3));
  CHECK(eval_text("Flag(4)") == vol_flag(4));
  CHECK(eval_text("Gr(4,1)") == vol_cpn(3));
  CHECK(eval_text("Gr(5,2)") == vol_u(5) / (vol_u(2) * vol_u(3)));
  CHECK(eval_text("SU(9)/U(4)xU(4)") ==
        ExactVolume::make(BigRational(BigInt(1), BigInt("58525286400000")), 24));
  CHECK(eval_text("SU(4)/SU(2)xSU(2)") == vol_su_over_su_su(4, 2, 2));
  CHECK(eval_text("SU(4)/U(2)xU1[SU(3)]") == vol_su_over_up_u1(4, 2, 3));
  CHECK(eval_text("SU(6)/U(2)xU1[SU(3)]xU1[SU(2)]") ==
        vol_su(6) / (vol_u(2) * vol_u1_su(3) * vol_u1_su(2)));
  // mixed factor kinds fall back to the ratio oracle
  CHECK(eval_text("SU(6)/SU(2)xU(2)") == vol_su(6) / (vol_su(2) * vol_u(2)));
  CHECK(eval_text("U(5)/U(2)xU(3)") == vol_u(5) / (vol_u(2) * vol_u(3)));
}

TEST_CASE("whitespace and separator tolerance") {
  CHECK(eval_text("  SU(9) / U(4) x U(4)  ") == eval_text("SU(9)/U(4)xU(4)"));
  CHECK(eval_text("SU(9)/U(4)XU(4)") == eval_text("SU(9)/U(4)xU(4)"));
  CHECK(eval_text("CP( 3 )") == vol_cpn(3));
}

TEST_CASE("malformed expressions raise parse errors") {
  CHECK_THROWS_AS(parse_volume_expr("su(3)"), ParseError);  // case-sensitive
  CHECK_THROWS_AS(parse_volume_expr("XY(3)"), ParseError);
  CHECK_THROWS_AS(parse_volume_expr("SU(4)/"), ParseError);
  CHECK_THROWS_AS(parse_volume_expr("SU(4)/U(2)U(2)"), ParseError);  // missing x
  CHECK_THROWS_AS(parse_volume_expr("CP(3)/SU(2)"), ParseError);
  CHECK_THROWS_AS(parse_volume_expr("U1[SU(3)]"), ParseError);
  CHECK_THROWS_AS(parse_volume_expr("U1[U(3)]/SU(2)"), ParseError);
  CHECK_THROWS_AS(parse_volume_expr("SU()"), ParseError);
  CHECK_THROWS_AS(parse_volume_expr("Gr(4)"), ParseError);
  CHECK_THROWS_AS(parse_volume_expr(""), ParseError);
}

TEST_CASE("well-formed but unconstructible requests raise constraint errors") {
  // U(1) parses as a group; evaluation rejects the degenerate dimension
  const auto q = parse_volume_expr("U(1)");
  CHECK(q.kind == VolumeQuery::Kind::Group);
  CHECK_THROWS_AS(eval_volume(q), std::invalid_argument);
  // dimension-1 denominator factors must be written as U1[SU(m)]
  CHECK_THROWS_AS(eval_text("SU(4)/U(1)"), std::invalid_argument);
  CHECK_THROWS_AS(eval_text("SU(2)/U(2)xU(2)"), std::invalid_argument);
}

TEST_CASE("angle vectors round-trip through JSON") {
  auto av = euler::range_catalog(3, euler::ChartContext::ProjectiveSpace,
                                 euler::RangeConvention::Quotient);
  av.set_values({0.1, 0.2, 0.3, 0.4, 0.5, 0.6});
  av.beta = 1.25;
  av.beta_range = std::make_pair(0.0, 2.0);

  const json j = serialize::to_json(av);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("n") == 3);
  CHECK(j.at("convention") == "quotient");
  CHECK(j.at("xi") == doctest::Approx(4.0));
  REQUIRE(j.at("angles").size() == 6);
  CHECK(j.at("angles")[0].at("i") == 1);

  const auto back = serialize::angle_vector_from_json(j);
  CHECK(back.n == av.n);
  CHECK(back.context == av.context);
  CHECK(back.convention == av.convention);
  CHECK(back.xi == doctest::Approx(av.xi));
  CHECK(back.values() == av.values());
  REQUIRE(back.beta.has_value());
  CHECK(*back.beta == doctest::Approx(1.25));
  REQUIRE(back.beta_range.has_value());
  CHECK(back.beta_range->second == doctest::Approx(2.0));
  for (std::size_t i = 0; i < av.angles.size(); ++i) {
    CHECK(back.angles[i].lo == doctest::Approx(av.angles[i].lo));
    CHECK(back.angles[i].hi == doctest::Approx(av.angles[i].hi));
  }
}

TEST_CASE("kernels round-trip through JSON") {
  const auto k = kernels::haar_kernel_su(4);
  const json j = serialize::to_json(k);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("context") == "haar-su");
  REQUIRE(j.at("factors").size() == 6);
  // sin(2a) factors omit the exponent field
  CHECK(!j.at("factors")[0].contains("p"));
  CHECK(j.at("factors")[1].at("p") == 3);

  const auto back = serialize::kernel_from_json(j);
  CHECK(back.n == k.n);
  CHECK(back.context == k.context);
  CHECK(back.xi == doctest::Approx(k.xi));
  REQUIRE(back.factors.size() == k.factors.size());
  for (std::size_t i = 0; i < k.factors.size(); ++i) {
    CHECK(back.factors[i].angle_index == k.factors[i].angle_index);
    CHECK(back.factors[i].form == k.factors[i].form);
    CHECK(back.factors[i].p == k.factors[i].p);
  }
}

TEST_CASE("volume and integration results serialize with the schema tag") {
  const json v = serialize::to_json(vol_su(4));
  CHECK(v.at("schema") == 1);
  CHECK(v.at("rational") == "1/3");
  CHECK(v.at("sqrt_arg") == "2");
  CHECK(v.at("exact") == "sqrt(2)*pi^9/3");
  CHECK(v.at("float").get<double>() ==
        doctest::Approx(vol_su(4).to_double()).epsilon(1e-15));
  CHECK(v.contains("latex"));
  CHECK(v.contains("pi_pow"));

  numerics::IntegrationResult r;
  r.value = 2.5;
  r.abs_error_estimate = 0.01;
  r.method = numerics::Method::MonteCarlo;
  r.n_evals = 1000000;
  r.seed = 77;
  const json jr = serialize::to_json(r);
  CHECK(jr.at("schema") == 1);
  CHECK(jr.at("method") == "monte-carlo");
  CHECK(jr.at("seed") == 77);
  numerics::IntegrationResult f;
  f.method = numerics::Method::Factorized;
  CHECK(!serialize::to_json(f).contains("seed"));
}

TEST_CASE("schema violations are rejected as such") {
  CHECK_THROWS_AS(serialize::convention_from_string("half"), SchemaError);
  CHECK_THROWS_AS(serialize::chart_context_from_string("torus"), SchemaError);
  CHECK_THROWS_AS(serialize::factor_form_from_string("tan"), SchemaError);
  CHECK_THROWS_AS(serialize::angle_vector_from_json(json{{"schema", 1}}), SchemaError);
  CHECK_THROWS_AS(serialize::kernel_from_json(json::parse(R"({"schema":1,"n":2})")),
                  SchemaError);

  // enum spellings used by the wire format
  CHECK(serialize::convention_from_string("covering") == euler::RangeConvention::Covering);
  CHECK(serialize::chart_context_from_string("su-full") == euler::ChartContext::SUFull);
  CHECK(serialize::chart_context_from_string("hurwitz") == euler::ChartContext::HurwitzSphere);
  CHECK(serialize::kernel_context_from_string("pure-state") ==
        kernels::KernelContext::PureState);
  CHECK(serialize::factor_form_from_string("cossinpow") == kernels::FactorForm::CosSinPow);
}

}  // TEST_SUITE
