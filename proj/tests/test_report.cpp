#include "curvedt/report.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace curvedt;

TEST(Report, PolynomialRendering) {
    EXPECT_EQ(format_poly(LaurentPoly()), "0");
    EXPECT_EQ(format_poly(half_lefschetz(1)), "-u^(1/2)*v^(1/2)");
    EXPECT_EQ(format_poly(LaurentPoly(1) - LaurentPoly::u() + Rational(3) * LaurentPoly::v()), "1 - u + 3*v");
    EXPECT_EQ(format_poly(UniPoly::y_power(2, make_rational(1, 2)) - UniPoly(1)), "-1 + 1/2*y^(2)");
}

TEST(Report, JsonRoundTripIsByteIdentical) {
    const DTResult res = ih_poincare(2, {3, 1});
    const std::string text = canonical_dump(to_json(res));
    EXPECT_EQ(canonical_dump(json::parse(text)), text);
    EXPECT_EQ(text.find('.'), std::string::npos);

    const std::string strata = canonical_dump(to_json(certify_virtual_smallness(2, {2, 6})));
    EXPECT_EQ(canonical_dump(json::parse(strata)), strata);
    EXPECT_NE(strata.find("\"bound\":\"-1/2\""), std::string::npos);
}

TEST(Report, LargeIntegersBecomeStrings) {
    Integer big("123456789012345678901234567890");
    EXPECT_TRUE(integer_json(big).is_string());
    EXPECT_TRUE(integer_json(Integer(42)).is_number_integer());
}

TEST(Report, Tables) {
    ReportTable t{{"a", "b"}, {}};
    t.add_row({"1", "x,y"});
    std::ostringstream text, csv;
    t.print_text(text);
    t.print_csv(csv);
    EXPECT_EQ(text.str(), "a  b\n1  x,y\n");
    EXPECT_EQ(csv.str(), "a,b\n1,\"x,y\"\n");
}
