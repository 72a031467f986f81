#include <gtest/gtest.h>

#include "cmdef/builders.hpp"
#include "cmdef/certify.hpp"
#include "cmdef/invariants.hpp"
#include "cmdef/json_io.hpp"

using namespace cmdef;

namespace {

int premise_code(const CertifyInput& in) {
  try {
    certify_cmdef(in);
  } catch (const PremiseFailed& e) {
    return e.code();
  }
  return 0;
}

}  // namespace

TEST(Certify, FrobeniusSumConclusionsAndIndependentVerify) {
  for (std::size_t k : {2u, 3u, 4u}) {
    auto inst = build_example("ex51", 2, k);
    EXPECT_EQ(inst.module().dim(), 2 + 3 * k);
    auto c = certify_cmdef(inst.input);
    EXPECT_EQ(c.conclusion, static_cast<int>(k) - 2);
    EXPECT_EQ(c.codim, k);
    EXPECT_EQ(c.coprime, true);
    auto rep = verify_certificate(c);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.exit_code(), 0);
  }
}

TEST(Certify, SmallKGivesTrivialBound) {
  auto inst = build_frobenius_module(natural_module(builtin_group("SL2", 2)), 1);
  auto c = certify_cmdef(inst.input);
  EXPECT_EQ(c.conclusion, 0);
  EXPECT_FALSE(c.m);
  EXPECT_TRUE(verify_certificate(c).ok());
}

TEST(Certify, ConditionANeedsReductiveGroup) {
  auto inst = build_example("thm52", 2, 3);
  EXPECT_EQ(inst.module().group().name(), "Ga");
  auto in = inst.input;
  in.condition = Condition::a;
  EXPECT_EQ(premise_code(in), static_cast<int>(Premise::phsop));
}

TEST(Certify, TransferRequiredOverGa) {
  auto in = build_example("thm52", 2, 3).input;
  in.transfer.reset();
  EXPECT_NE(premise_code(in), 0);
}

TEST(Certify, DeterminantIdentities) {
  auto c = certify_cmdef(build_example("ex51", 2, 4).input);
  EXPECT_TRUE(determinant_identities(c.annihilators, c.witnesses));
  // the identity is the expansion of a determinant with a repeated row, so it
  // holds for arbitrary b as well
  auto b = c.witnesses;
  b[2] = b[2] + Poly::variable(2, c.module.dim(), 0);
  EXPECT_TRUE(determinant_identities(c.annihilators, b));
}

TEST(Certify, EvaluateAtX) {
  auto f = Poly::parse("x0*x2 + x1*x3 + x3", 3, 4);
  // x0 = 1, x1 = 0, x2 -> x0, x3 -> x1
  EXPECT_EQ(evaluate_at_x(f, 0, 1), Poly::parse("x0 + x1", 3, 2));
}

TEST(VerifyMutation, EachRecordedFieldIsChecked) {
  const auto good = certify_cmdef(build_example("ex51", 2, 3).input);
  auto code_of = [](Certificate c) { return verify_certificate(c).exit_code(); };
  {
    auto c = good;
    c.conclusion = 2;
    EXPECT_EQ(code_of(c), 4);
  }
  {
    auto c = good;
    c.noncoboundary[0].rank += 1;
    EXPECT_EQ(code_of(c), static_cast<int>(Premise::nontriviality));
  }
  {
    auto c = good;
    c.witnesses[1] = c.witnesses[1] + Poly::variable(2, c.module.dim(), 1);
    EXPECT_EQ(code_of(c), static_cast<int>(Premise::annihilator));
  }
  {
    auto c = good;
    c.codim = 2;
    EXPECT_EQ(code_of(c), static_cast<int>(Premise::phsop));
  }
  {
    auto c = good;
    c.declared_facts.push_back("SL2 reductive");
    EXPECT_EQ(code_of(c), static_cast<int>(Premise::phsop));
  }
  {
    auto c = good;
    c.m = *c.m + Poly::variable(2, c.module.dim(), 4);
    EXPECT_EQ(code_of(c), static_cast<int>(Premise::witness_m));
  }
  {
    auto c = good;
    c.nonmembership->rank += 1;
    EXPECT_EQ(code_of(c), static_cast<int>(Premise::witness_m));
  }
}

TEST(Json, CertificateRoundTripIsByteStable) {
  for (const char* name : {"ex51", "thm52"}) {
    auto c = certify_cmdef(build_example(name, 2, 3).input);
    const auto text = dump(to_json(c));
    auto back = certificate_from_json(Json::parse(text));
    EXPECT_EQ(dump(to_json(back)), text);
    EXPECT_TRUE(verify_certificate(back).ok());
  }
}

TEST(Json, ModuleRoundTrip) {
  auto v = build_example("ex52b", 3, 2).module();
  auto back = representation_from_json(to_json(v));
  EXPECT_EQ(back.action(), v.action());
  EXPECT_EQ(back.labels(), v.labels());
  EXPECT_EQ(dump(to_json(back)), dump(to_json(v)));
}

TEST(Json, SchemaViolationsAreInvalidArgument) {
  auto j = to_json(certify_cmdef(build_example("ex51", 2, 2).input));
  auto bad = j;
  bad["schema"] = "cmdef/0";
  EXPECT_THROW(certificate_from_json(bad), InvalidArgument);
  bad = j;
  bad.erase("cocycle");
  EXPECT_THROW(certificate_from_json(bad), InvalidArgument);
  bad = j;
  bad["annihilators"][0] = "1*y0";
  EXPECT_THROW(certificate_from_json(bad), InvalidArgument);
  bad = j;
  bad["module"]["group"] = "SO3";
  EXPECT_THROW(certificate_from_json(bad), InvalidArgument);
}

TEST(Builders, ExtensionLayoutsCertify) {
  auto v = natural_module(builtin_group("SL2", 2));
  auto g = cocycle_from_projection(frobenius_power(v)).cocycle;
  for (std::size_t k : {2u, 3u}) {
    auto sum = build_extension_sum(g, k);
    auto blocks = build_extension_blocks(g, k);
    EXPECT_TRUE(representation_law_failures(sum.module()).empty());
    EXPECT_TRUE(representation_law_failures(blocks.module()).empty());
    EXPECT_TRUE(verify_certificate(certify_cmdef(sum.input)).ok());
    EXPECT_TRUE(verify_certificate(certify_cmdef(blocks.input)).ok());
  }
  // a coboundary has nothing to extend by
  EXPECT_THROW(build_extension_sum(coboundary(v, GfVector{1, 0}), 2), InvalidArgument);
}

TEST(Builders, ExampleParameterChecks) {
  EXPECT_THROW(build_example("ex51", 3, 2), InvalidArgument);
  EXPECT_THROW(build_example("ex52a", 2, 2), InvalidArgument);
  EXPECT_THROW(build_example("nope", 2, 2), InvalidArgument);
  EXPECT_THROW(build_frobenius_module(natural_module(builtin_group("Gm", 3)), 2), InvalidArgument);
}

TEST(Certify, DroppingAnnihilatorsKeepsValidCertificates) {
  auto inst = build_example("ex51", 2, 4);
  auto full = certify_cmdef(inst.input);
  for (std::size_t k : {3u, 2u}) {
    auto in = inst.input;
    in.annihilators.erase(in.annihilators.begin() + k, in.annihilators.end());
    in.witnesses = std::vector<Poly>(full.witnesses.begin(), full.witnesses.begin() + k);
    auto c = certify_cmdef(in);
    EXPECT_EQ(c.conclusion, static_cast<int>(k) - 2);
    EXPECT_TRUE(verify_certificate(c).ok());
  }
}

TEST(Builders, UnipotentInstanceDimension) {
  for (Coeff p : {2u, 3u})
    for (std::size_t k : {2u, 3u}) {
      auto inst = build_example("thm52", p, k);
      EXPECT_EQ(inst.module().dim(), 2 + 2 * k);
      EXPECT_EQ(certify_cmdef(inst.input).conclusion, static_cast<int>(k) - 2);
    }
}
