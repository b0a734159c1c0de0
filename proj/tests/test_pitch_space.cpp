#include <gtest/gtest.h>

#include "triadic/pitch_space.hpp"

using namespace triadic;

namespace {

std::vector<TIElement> all_ti()
{
  std::vector<TIElement> out;
  for (int k = 0; k < 24; ++k)
    out.push_back(TIElement::from_ordinal(k));
  return out;
}

} // namespace

TEST(PitchClass, ReducesOnConstruction)
{
  EXPECT_EQ(PitchClass(15).value(), 3);
  EXPECT_EQ(PitchClass(-1).value(), 11);
  EXPECT_EQ(PitchClass(-24).value(), 0);
  EXPECT_EQ((PitchClass(11) + 4).value(), 3);
  EXPECT_EQ((-PitchClass(4)).value(), 8);
}

TEST(PitchSpace, Transposition)
{
  EXPECT_EQ(tn_apply(4, PitchClass(11)), PitchClass(3));
  EXPECT_EQ(tn_apply(0, PitchClass(5)), PitchClass(5));
  EXPECT_EQ(tn_apply(7, PitchClass(2)), PitchClass(9));
}

TEST(PitchSpace, Inversion)
{
  EXPECT_EQ(in_apply(0, PitchClass(4)), PitchClass(8));
  EXPECT_EQ(in_apply(0, PitchClass(0)), PitchClass(0));
  EXPECT_EQ(in_apply(6, PitchClass(2)), PitchClass(4));
}

TEST(PitchSpace, ComposeExamples)
{
  EXPECT_EQ(ti_compose(TIElement::I(3), TIElement::T(4)), TIElement::I(11));
  EXPECT_EQ(ti_compose(TIElement::T(0), TIElement::I(5)), TIElement::I(5));
  EXPECT_EQ(ti_compose(TIElement::I(2), TIElement::I(2)), TIElement::T(0));
}

TEST(PitchSpace, InverseExamples)
{
  EXPECT_EQ(ti_invert(TIElement::T(5)), TIElement::T(7));
  EXPECT_EQ(ti_invert(TIElement::I(9)), TIElement::I(9));
  EXPECT_EQ(ti_invert(TIElement::T(0)), TIElement::T(0));
}

TEST(PitchSpace, CircDistExamples)
{
  EXPECT_EQ(circ_dist(PitchClass(4), PitchClass(3)), 1);
  EXPECT_EQ(circ_dist(PitchClass(7), PitchClass(9)), 2);
  EXPECT_EQ(circ_dist(PitchClass(0), PitchClass(6)), 6);
}

TEST(PitchSpace, InversionIsTranspositionAfterI0)
{
  for (int n = 0; n < 12; ++n) {
    for (int x = 0; x < 12; ++x)
      EXPECT_EQ(tn_apply(n, in_apply(0, PitchClass(x))), in_apply(n, PitchClass(x)));
  }
}

TEST(PitchSpace, CompositionMatchesPointwise)
{
  for (auto a : all_ti()) {
    for (auto b : all_ti()) {
      const auto ab = a * b;
      for (int x = 0; x < 12; ++x)
        ASSERT_EQ(ab(PitchClass(x)), a(b(PitchClass(x)))) << a.to_string() << " " << b.to_string();
    }
  }
}

TEST(PitchSpace, CompositionIsAssociative)
{
  const auto els = all_ti();
  for (auto a : els)
    for (auto b : els)
      for (auto c : els)
        ASSERT_EQ((a * b) * c, a * (b * c));
}

TEST(PitchSpace, InversesAreTwoSided)
{
  for (auto a : all_ti()) {
    EXPECT_EQ(a * ti_invert(a), TIElement::identity());
    EXPECT_EQ(ti_invert(a) * a, TIElement::identity());
  }
}

TEST(PitchSpace, ElementsAreDistinctFunctions)
{
  const auto els = all_ti();
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      bool differ = false;
      for (int x = 0; x < 12; ++x)
        differ = differ || els[i](PitchClass(x)) != els[j](PitchClass(x));
      EXPECT_TRUE(differ);
    }
  }
}

TEST(PitchSpace, DihedralPresentation)
{
  const auto s = TIElement::T(1);
  const auto t = TIElement::I(0);
  auto p = TIElement::identity();
  for (int k = 0; k < 12; ++k) {
    if (k > 0) {
      EXPECT_NE(p, TIElement::identity());
    }
    p = p * s;
  }
  EXPECT_EQ(p, TIElement::identity());
  EXPECT_EQ(t * t, TIElement::identity());
  EXPECT_EQ(t * s * t, ti_invert(s));
}

TEST(PitchSpace, CircDistIsBoundedMetric)
{
  for (int x = 0; x < 12; ++x) {
    for (int y = 0; y < 12; ++y) {
      const int d = circ_dist(PitchClass(x), PitchClass(y));
      EXPECT_LE(d, 6);
      EXPECT_EQ(d == 0, x == y);
      EXPECT_EQ(d, circ_dist(PitchClass(y), PitchClass(x)));
      for (int z = 0; z < 12; ++z)
        EXPECT_LE(d, circ_dist(PitchClass(x), PitchClass(z)) + circ_dist(PitchClass(z), PitchClass(y)));
    }
  }
}

TEST(PitchSpace, Rendering)
{
  EXPECT_EQ(TIElement::T(7).to_string(), "T_7");
  EXPECT_EQ(TIElement::I(11).to_string(), "I_11");
  EXPECT_EQ(TIElement::from_ordinal(13), TIElement::I(1));
  EXPECT_EQ(TIElement::I(1).ordinal(), 13);
}
