#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"
#include "triadic/duality.hpp"
#include "triadic/perm_group.hpp"

using namespace triadic;

namespace {

Permutation cycle(std::size_t n)
{
  return Permutation::from_function(n, [n](int i) { return (i + 1) % static_cast<int>(n); });
}

std::set<oracle::Images> image_set(PermGroup const &g)
{
  std::set<oracle::Images> out;
  for (auto const &p : g.elements())
    out.insert({p.images().begin(), p.images().end()});
  return out;
}

} // namespace

TEST(Permutation, ValidatesBijection)
{
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 3, 1}), std::invalid_argument);
  EXPECT_NO_THROW(Permutation({2, 0, 1}));
}

TEST(Permutation, ComposeRightToLeft)
{
  const Permutation a({1, 0, 2});
  const Permutation b({0, 2, 1});
  EXPECT_EQ((a * b)(1), a(b(1)));
  EXPECT_EQ(a * b, Permutation({1, 2, 0}));
  EXPECT_THROW(a * Permutation::identity(4), std::invalid_argument);
}

TEST(Permutation, InversePowOrder)
{
  const auto c = cycle(5);
  EXPECT_EQ(c * c.inverse(), Permutation::identity(5));
  EXPECT_EQ(c.pow(5), Permutation::identity(5));
  EXPECT_EQ(c.pow(-1), c.inverse());
  EXPECT_EQ(c.order(), 5u);
  EXPECT_EQ(Permutation({1, 0, 3, 4, 2}).order(), 6u);
  EXPECT_EQ(Permutation({1, 0, 3, 4, 2}).to_cycle_string(), "(0 1)(2 3 4)");
  EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "()");
  EXPECT_TRUE(Permutation({0, 2, 1}).has_fixed_point());
}

TEST(Generate, Examples)
{
  const auto lr = PermGroup::generate({triad_permutation(PlrOp::L), triad_permutation(PlrOp::R)});
  EXPECT_EQ(lr.order(), 24u);
  EXPECT_EQ(PermGroup::generate({}, 24).order(), 1u);
  EXPECT_EQ(PermGroup::generate({triad_permutation(TIElement::T(1))}).order(), 12u);
}

TEST(Generate, MatchesOracleClosure)
{
  const std::vector<Permutation> gens{triad_permutation(PlrOp::P), triad_permutation(PlrOp::L)};
  std::vector<oracle::Images> raw;
  for (auto const &g : gens)
    raw.push_back({g.images().begin(), g.images().end()});
  EXPECT_EQ(image_set(PermGroup::generate(gens)), oracle::closure(raw, 24));
}

TEST(Generate, RejectsMixedDegrees)
{
  EXPECT_THROW(PermGroup::generate({Permutation::identity(3), Permutation::identity(4)}),
               std::invalid_argument);
}

TEST(Generate, ClosedUnderProducts)
{
  for (auto const &g : {build_ti_group(), build_plr_group(), build_U()}) {
    EXPECT_TRUE(g.is_closed());
    for (auto const &a : g.elements())
      ASSERT_TRUE(g.contains(a.inverse()));
  }
}

TEST(Orbits, Examples)
{
  const int c = 0;
  const auto ti = build_ti_group();
  EXPECT_EQ(ti.orbit(c).size(), 24u);
  EXPECT_EQ(ti.stabilizer(c).order(), 1u);

  const PermGroup trivial = PermGroup::generate({}, 24);
  EXPECT_EQ(trivial.orbit(5), std::vector<int>{5});
  EXPECT_EQ(trivial.stabilizer(5), trivial);

  std::vector<int> majors(12);
  std::iota(majors.begin(), majors.end(), 0);
  EXPECT_EQ(build_transposition_group().orbit(c), majors);

  EXPECT_THROW(ti.orbit(24), std::out_of_range);
  EXPECT_THROW(ti.stabilizer(-1), std::out_of_range);
}

TEST(Orbits, OrbitStabilizerIdentity)
{
  const auto groups = {build_ti_group(), build_plr_group(), build_transposition_group(), build_U(),
                       PermGroup::generate({triad_permutation(PlrOp::P)})};
  for (auto const &g : groups) {
    for (int i = 0; i < 24; ++i)
      EXPECT_EQ(g.order(), g.orbit(i).size() * g.stabilizer(i).order());
  }
}

TEST(SimpleTransitivity, Examples)
{
  EXPECT_TRUE(is_simply_transitive(build_ti_group()));
  EXPECT_TRUE(is_simply_transitive(build_plr_group()));
  EXPECT_FALSE(is_simply_transitive(build_transposition_group()));
  EXPECT_EQ(build_transposition_group().orbits().size(), 2u);
  EXPECT_FALSE(is_simply_transitive(build_U()));
}

TEST(Centralizer, DualPairOnTriads)
{
  EXPECT_EQ(centralizer_semiregular(build_ti_group()), build_plr_group());
  EXPECT_EQ(centralizer_semiregular(build_plr_group()), build_ti_group());
  EXPECT_EQ(centralizer_semiregular(build_transposition_group()), build_U());
  EXPECT_EQ(centralizer_semiregular(build_transposition_group()).order(), 288u);
}

TEST(Centralizer, AgreesWithBruteForceInSmallDegree)
{
  // Sym(6) is small enough to scan outright.
  const auto rr = regular_reps(symmetric_table(3));
  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  std::set<oracle::Images> brute;
  do {
    bool ok = true;
    for (auto const &h : rr.left.generators())
      ok = ok && oracle::commute(perm, {h.images().begin(), h.images().end()});
    if (ok)
      brute.insert(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(image_set(centralizer_semiregular(rr.left)), brute);
  EXPECT_EQ(image_set(rr.right), brute);
}

TEST(Centralizer, RejectsNonSemiregular)
{
  const auto g = PermGroup::generate({Permutation({1, 0, 2, 3})});
  try {
    centralizer_semiregular(g);
    ADD_FAILURE();
  } catch (std::invalid_argument const &e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
  EXPECT_EQ(g.points_with_nontrivial_stabilizer(), (std::vector<int>{2, 3}));
}

TEST(Centralizer, CandidateCap)
{
  EXPECT_THROW(centralizer_semiregular(PermGroup::generate({}, 12), 1000), std::length_error);
}

TEST(Centralizer, WithinExamples)
{
  const auto q = build_Q();
  EXPECT_EQ(centralizer_within(build_ti_group(), q), build_plr_group());
  EXPECT_EQ(centralizer_within(build_transposition_group(), q), build_U());
  const auto z12 = build_transposition_group();
  EXPECT_EQ(centralizer_within(z12, z12), z12);
  EXPECT_THROW(centralizer_within(build_ti_group(), build_U()), std::invalid_argument);
}

TEST(Cayley, ValidationNamesAxiom)
{
  auto expect_axiom = [](CayleyTable const &t, std::string const &axiom) {
    try {
      t.validate();
      ADD_FAILURE() << axiom;
    } catch (std::invalid_argument const &e) {
      EXPECT_NE(std::string(e.what()).find(axiom), std::string::npos) << e.what();
    }
  };
  expect_axiom({{{0, 1}, {1, 2}}}, "closure");
  expect_axiom({{{1, 0}, {0, 0}}}, "identity");
  expect_axiom({{{0, 1}, {1, 1}}}, "inverses");
  // A loop that is not associative: identity and inverses hold.
  expect_axiom({{{0, 1, 2, 3, 4},
                 {1, 0, 3, 4, 2},
                 {2, 4, 0, 1, 3},
                 {3, 2, 4, 0, 1},
                 {4, 3, 1, 2, 0}}},
               "associativity");
  EXPECT_NO_THROW(dihedral_table(12).validate());
  EXPECT_NO_THROW(symmetric_table(3).validate());
}

TEST(Cayley, RegularRepresentations)
{
  const auto z4 = regular_reps(cyclic_table(4));
  EXPECT_EQ(z4.left.order(), 4u);
  EXPECT_EQ(z4.left, z4.right);

  for (auto const &table : {symmetric_table(3), dihedral_table(12), cyclic_table(12)}) {
    const auto rr = regular_reps(table);
    EXPECT_EQ(rr.left.order(), table.size());
    EXPECT_EQ(centralizer_semiregular(rr.left), rr.right);
    EXPECT_EQ(centralizer_semiregular(rr.right), rr.left);

    // The two images meet exactly in the image of the center.
    std::set<Permutation> center;
    const int n = static_cast<int>(table.size());
    for (int z = 0; z < n; ++z) {
      bool central = true;
      for (int g = 0; g < n; ++g)
        central = central && table.product[static_cast<std::size_t>(z)][static_cast<std::size_t>(g)] ==
                               table.product[static_cast<std::size_t>(g)][static_cast<std::size_t>(z)];
      if (central)
        center.insert(rr.left_of[static_cast<std::size_t>(z)]);
    }
    std::set<Permutation> both;
    for (auto const &p : rr.left.elements()) {
      if (rr.right.contains(p))
        both.insert(p);
    }
    EXPECT_EQ(both, center);
  }
}

TEST(Dihedral, Recognition)
{
  const auto plr = is_dihedral_24(build_plr_group());
  ASSERT_TRUE(plr);
  EXPECT_TRUE(satisfies_dihedral_relations(plr->s, plr->t, 12));
  EXPECT_TRUE(satisfies_dihedral_relations(triad_permutation(PlrWord::parse("LR")),
                                           triad_permutation(PlrOp::L), 12));
  EXPECT_TRUE(satisfies_dihedral_relations(triad_permutation(TIElement::T(1)),
                                           triad_permutation(TIElement::I(0)), 12));
  EXPECT_TRUE(is_dihedral_24(build_ti_group()));
  EXPECT_FALSE(is_dihedral_24(PermGroup::generate({cycle(24)})));
  EXPECT_FALSE(is_dihedral_24(build_transposition_group()));
}
