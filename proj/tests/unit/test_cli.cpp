#include <gtest/gtest.h>

#include <sstream>

#include "atomfact/error.hpp"
#include "atomfact_cli/commands.hpp"
#include "atomfact_cli/json_io.hpp"
#include "helpers.hpp"

using namespace atomfact;
using namespace atomfact::cli;
using testutil::pmat;
using testutil::poly;

namespace {
const UPoly X = UPoly::x();
}

TEST(JsonIo, RoundTrip) {
  const PolyMatrix m = pmat({{poly({1, -2}), UPoly()}, {UPoly(Rat::parse("3/4")), X * X}});
  const json doc = to_json(m);
  EXPECT_EQ(doc["ring"], "Q[x]");
  EXPECT_EQ(doc["rows"], 2);
  EXPECT_EQ(doc["entries"][0][1], json::array());
  EXPECT_EQ(doc["entries"][1][0][0], "3/4");
  EXPECT_EQ(matrix_from_json(doc), m);
  EXPECT_EQ(matrix_from_json(json::parse(doc.dump())), m);
}

TEST(JsonIo, IntegerCoefficientsAccepted) {
  const json doc = json::parse(R"({"rows":1,"cols":1,"entries":[[[-1,0,1]]]})");
  EXPECT_EQ(matrix_from_json(doc), pmat({{poly({-1, 0, 1})}}));
}

TEST(JsonIo, Malformed) {
  EXPECT_THROW(matrix_from_json(json::parse(R"({"rows":2,"cols":1,"entries":[[[]]]})")), Error);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[[["x"]]]})")), Error);
  EXPECT_THROW(matrix_from_json(json::parse("[1,2]")), Error);
}

TEST(JsonIo, Pencil) {
  const Pencil p = Pencil::from_poly(pmat({{X, 1}, {0, X + UPoly(1)}}));
  EXPECT_EQ(pencil_from_json(to_json(p)), p);
  EXPECT_EQ(pencil_from_json(to_json(p.to_poly())), p);
}

TEST(Commands, FactorThenVerify) {
  const json in = to_json(pmat({{poly({-1, 0, 1})}}));
  const CommandResult f = factor_document(in);
  ASSERT_EQ(f.exit_code, kOk) << f.diagnostic;
  EXPECT_EQ(f.document["omega"], 2);
  EXPECT_EQ(verify_documents({f.document}).exit_code, kOk);

  json bad = f.document;
  bad["atoms"].erase(1);
  const CommandResult v = verify_documents({bad});
  EXPECT_EQ(v.exit_code, kVerifyFailed);
  EXPECT_EQ(v.document["first_failure"], "product");
}

TEST(Commands, ExitCodes) {
  EXPECT_EQ(factor_document(to_json(pmat({{0}}))).exit_code, kSingular);
  EXPECT_EQ(factor_document(to_json(pmat({{3}}))).exit_code, kUnit);
  EXPECT_EQ(factor_document(json::parse(R"({"rows":1})")).exit_code, kInputError);
  EXPECT_EQ(factor_document(to_json(PolyMatrix(1, 2))).exit_code, kInputError);
  EXPECT_EQ(exit_code_for(InvariantViolation("x")), kInternalError);
}

TEST(Commands, OtherCommands) {
  const json m = to_json(pmat({{X * X * X, 1}, {0, X}}));
  const CommandResult l = linearize_document(m);
  ASSERT_EQ(l.exit_code, kOk) << l.diagnostic;
  EXPECT_GT(l.document["padding"].get<int>(), 0);

  const CommandResult p = factor_pencil_document(to_json(pmat({{X, 1}, {0, X}})));
  ASSERT_EQ(p.exit_code, kOk) << p.diagnostic;
  EXPECT_EQ(p.document["atoms"].size(), 2u);

  const json c = to_json(pmat({{X, 1}}));
  const json u = to_json(pmat({{1}, {-X}}));
  for (const char* route : {"auto", "linear", "general"}) {
    const CommandResult t = trivialize_documents(c, u, route);
    ASSERT_EQ(t.exit_code, kOk) << route << ": " << t.diagnostic;
  }
  EXPECT_EQ(trivialize_documents(c, u, "bogus").exit_code, kInputError);

  const CommandResult g1 = gen_document(5, GenLimits{});
  const CommandResult g2 = gen_document(5, GenLimits{});
  EXPECT_EQ(g1.document.dump(), g2.document.dump());
  EXPECT_EQ(factor_document(g1.document).exit_code, kOk);
}

TEST(Commands, RunBatch) {
  JobSpec spec;
  spec.command = "gen";
  spec.seed = 3;
  std::ostringstream out, err;
  ASSERT_EQ(run(spec, out, err), kOk);
  const json doc = json::parse(out.str());
  EXPECT_TRUE(doc.contains("matrix"));

  spec.command = "nope";
  std::ostringstream out2, err2;
  EXPECT_EQ(run(spec, out2, err2), kInputError);
}
