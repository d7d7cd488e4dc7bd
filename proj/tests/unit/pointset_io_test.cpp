#include <gtest/gtest.h>

#include <ordlines/ordlines.hpp>

namespace ordlines {
namespace {

ParseErrorCode parse_code(const std::string& text) {
  try {
    parse_pointset(text);
  } catch (const ParseError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseErrorCode::empty_set;
}

TEST(PointSetIo, RoundTripsRandomSets) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const PointSet set = gen_random(1 + seed % 15, 2 + static_cast<int>(seed % 2), 50, seed);
    const PointSet back = parse_pointset(write_pointset(set));
    EXPECT_EQ(back, set);
    EXPECT_EQ(back.label(), set.label());
  }
}

TEST(PointSetIo, RoundTripsExtensionFieldAndProjective) {
  const PointSet hesse = gen_hesse();
  EXPECT_EQ(parse_pointset(write_pointset(hesse)), hesse);
  const PointSet planar({affine(Scalar::eisenstein(1, 2), Scalar::omega()), affine(Scalar::eisenstein(0, 0), Scalar::eisenstein(Rational(-3, 4), 0))});
  EXPECT_EQ(parse_pointset(write_pointset(planar)), planar);
}

TEST(PointSetIo, ParsesHandWrittenFile) {
  const PointSet set = parse_pointset(
      "# label: tiny\n"
      "dim=3 kind=affine field=Q\n"
      "0 0 0\n"
      "\n"
      "1/2 -3 4\n");
  EXPECT_EQ(set.label(), "tiny");
  ASSERT_EQ(set.size(), 2u);
  EXPECT_EQ(set[1], affine(Rational(1, 2), -3, 4));
}

TEST(PointSetIo, ReportsErrorCodes) {
  EXPECT_EQ(parse_code(""), ParseErrorCode::missing_header);
  EXPECT_EQ(parse_code("dim=4 kind=affine field=Q\n"), ParseErrorCode::bad_header);
  EXPECT_EQ(parse_code("dim=3 kind=projective field=Q\n"), ParseErrorCode::bad_header);
  EXPECT_EQ(parse_code("dim=2 kind=affine field=R\n"), ParseErrorCode::unknown_field);
  EXPECT_EQ(parse_code("dim=2 kind=affine field=Q\n1/0 2\n"), ParseErrorCode::malformed_rational);
  EXPECT_EQ(parse_code("dim=2 kind=affine field=Q\n1 2 3\n"), ParseErrorCode::wrong_coordinate_count);
  EXPECT_EQ(parse_code("dim=2 kind=projective field=Q\n0 0 0\n"), ParseErrorCode::zero_projective_point);
  EXPECT_EQ(parse_code("dim=2 kind=affine field=Q\n1 2\n2/2 4/2\n"), ParseErrorCode::duplicate_point);
  EXPECT_EQ(parse_code("dim=2 kind=affine field=Q\n"), ParseErrorCode::empty_set);
}

TEST(PointSetIo, ErrorMessageNamesLine) {
  try {
    parse_pointset("dim=2 kind=affine field=Q\n1 2\nx 3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(PointSetIo, DuplicatePointsRejectedByPointSet) {
  EXPECT_THROW(PointSet({affine(1, 2), affine(1, 2)}), DuplicatePointError);
  EXPECT_THROW(PointSet({affine(1, 2), affine(1, 2, 3)}), UsageError);
  EXPECT_THROW(PointSet(std::vector<Point>{}), UsageError);
}

}  // namespace
}  // namespace ordlines
