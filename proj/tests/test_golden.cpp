#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "virhc/classification.hpp"

using namespace virhc;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(VIRHC_DATA_DIR) + "/" + name + ".txt");
  EXPECT_TRUE(in.good()) << name;
  std::string line;
  std::getline(in, line);
  return line;
}

const ClassificationData& data() {
  static const ClassificationData d = compute_delta();
  return d;
}

}  // namespace

TEST(Golden, DataVersion) { EXPECT_EQ(kReferenceDataVersion, "1"); }

TEST(Golden, Determinant) {
  EXPECT_EQ(canonical_string(data().delta), golden("delta"));
  EXPECT_EQ(parse_poly(golden("delta")), data().delta);
}

TEST(Golden, ShapeCoefficients) {
  const FactorizationCertificate cert = certify_factorization(data());
  ASSERT_TRUE(cert.shape.has_value());
  EXPECT_EQ(canonical_string(cert.shape->m2), golden("shape_m2"));
  EXPECT_EQ(canonical_string(cert.shape->akp), golden("shape_akp"));
  EXPECT_EQ(canonical_string(cert.shape->p2), golden("shape_p2"));
}

TEST(Golden, IntegralSpecialization) {
  const S0Certificate cert = certify_s0_display(specialize_s0(data()));
  EXPECT_EQ(canonical_string(cert.specialized), golden("s0"));
  EXPECT_EQ(canonical_string(cert.quotient), golden("s0_quotient"));
}
