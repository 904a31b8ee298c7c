#include <gtest/gtest.h>

#include "mixcay/error.hpp"
#include "mixcay/group.hpp"
#include "oracles.hpp"

using namespace mixcay;

namespace {

void expect_group_axioms(const Group& g) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    EXPECT_EQ(g.mul(0, a), a);
    EXPECT_EQ(g.mul(a, 0), a);
    EXPECT_EQ(g.mul(a, g.inv(a)), 0u);
    EXPECT_EQ(g.mul(g.inv(a), a), 0u);
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
  }
}

std::vector<std::vector<Element>> as_lists(const std::vector<Subgroup>& hs) {
  std::vector<std::vector<Element>> out;
  for (const auto& h : hs) out.push_back(h.elements.members());
  return out;
}

}  // namespace

TEST(Group, CyclicTables) {
  const Group z1 = make_cyclic(1);
  EXPECT_EQ(z1.order(), 1u);
  EXPECT_EQ(z1.table(), (std::vector<std::vector<Element>>{{0}}));
  const Group z4 = make_cyclic(4);
  EXPECT_EQ(z4.mul(1, 3), 0u);
  EXPECT_EQ(z4.inv(1), 3u);
  EXPECT_THROW(make_cyclic(0), Error);
}

TEST(Group, ConstructorsSatisfyAxioms) {
  for (const char* spec : {"Z1", "Z5", "Z6", "D3", "D4", "S3", "S4", "Z2xZ2", "Z2xZ3", "Z2 x D3"})
    expect_group_axioms(parse_group_spec(spec));
}

TEST(Group, DihedralSymmetricProducts) {
  EXPECT_EQ(make_dihedral(3).order(), 6u);
  EXPECT_EQ(make_symmetric(3).order(), 6u);
  EXPECT_EQ(make_symmetric(4).order(), 24u);
  EXPECT_THROW(make_symmetric(5), Error);
  const Group v4 = direct_product(make_cyclic(2), make_cyclic(2));
  EXPECT_EQ(v4.order(), 4u);
  for (Element a = 1; a < 4; ++a) EXPECT_EQ(v4.inv(a), a);
  EXPECT_EQ(parse_group_spec("Z2*Z3").order(), 6u);
  EXPECT_EQ(parse_group_spec("Z2XZ2XZ2").order(), 8u);
}

TEST(Group, ParseErrors) {
  for (const char* bad : {"", "Q8", "Z", "Zx", "Z2x", "Z-1"}) {
    try {
      parse_group_spec(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_TRUE(e.kind() == ErrorKind::parse || e.kind() == ErrorKind::invalid_input) << bad;
    }
  }
}

TEST(Group, TableValidation) {
  // Repeated index in a row.
  try {
    Group::from_table({{0, 1}, {1, 1}}, "bad");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::validation);
  }
  // Latin square but not associative (identity at 0).
  const std::vector<std::vector<Element>> quasi = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    Group::from_table(quasi, "loop");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::validation);
    EXPECT_NE(std::string(e.what()).find("associ"), std::string::npos) << e.what();
  }
  EXPECT_THROW(Group::from_table({{1, 0}, {0, 1}}, "id"), Error);  // identity not at 0
  EXPECT_THROW(Group::from_table({{0, 2}, {1, 0}}, "range"), Error);
}

TEST(Group, TableTextRoundTrip) {
  for (const char* spec : {"Z4", "S3", "Z2xZ2"}) {
    const Group g = parse_group_spec(spec);
    const Group back = make_from_table(format_table(g), spec);
    EXPECT_EQ(g, back) << spec;
  }
  EXPECT_THROW(make_from_table("order 2\n0 1\n1", "short"), Error);
  EXPECT_THROW(make_from_table("2\n0 1\n1 0", "header"), Error);
  try {
    make_from_table("order 2\n0 1\n1 1\n", "dup");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::validation);
  }
}

TEST(Group, GeneratedSubgroup) {
  const Group z4 = make_cyclic(4);
  EXPECT_EQ(generated_subgroup(z4, ElementSet(4, {2})).elements.members(),
            (std::vector<Element>{0, 2}));
  EXPECT_EQ(generated_subgroup(z4, ElementSet(4, std::vector<Element>{})).elements.members(),
            (std::vector<Element>{0}));
  const Group s3 = make_symmetric(3);
  // A 3-cycle and a transposition generate S3.
  Element rot = 0, refl = 0;
  for (Element a = 1; a < 6; ++a) {
    if (s3.mul(a, a) == 0) refl = a;
    else rot = a;
  }
  EXPECT_EQ(generated_subgroup(s3, ElementSet(6, {rot, refl})).order(), 6u);
  EXPECT_EQ(generated_subgroup(s3, ElementSet(6, {rot})).order(), 3u);
}

TEST(Group, SubgroupLatticeSmallGroups) {
  EXPECT_EQ(as_lists(all_subgroups(make_cyclic(4))),
            (std::vector<std::vector<Element>>{{0}, {0, 2}, {0, 1, 2, 3}}));
  const auto z6 = all_subgroups(make_cyclic(6));
  ASSERT_EQ(z6.size(), 4u);
  EXPECT_EQ(z6[0].order(), 1u);
  EXPECT_EQ(z6[1].order(), 2u);
  EXPECT_EQ(z6[2].order(), 3u);
  EXPECT_EQ(z6[3].order(), 6u);
  EXPECT_EQ(all_subgroups(parse_group_spec("Z2xZ2")).size(), 5u);
  std::vector<std::size_t> orders;
  for (const auto& h : all_subgroups(make_symmetric(3))) orders.push_back(h.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 2, 2, 3, 6}));
  EXPECT_EQ(all_subgroups(make_symmetric(4)).size(), 30u);
}

TEST(Group, SubgroupLatticeMatchesSubsetOracle) {
  for (const char* spec : {"Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "S3", "D4", "Z8", "Z2xZ4", "Z2xZ2xZ2"}) {
    const Group g = parse_group_spec(spec);
    auto got = as_lists(all_subgroups(g));
    auto want = oracle::subgroups_by_subsets(g);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << spec;
    for (const auto& h : all_subgroups(g)) {
      EXPECT_EQ(g.order() % h.order(), 0u) << spec;  // Lagrange
      EXPECT_TRUE(is_subgroup(g, h.elements));
    }
  }
}

TEST(Group, SubgroupLatticeSortedAndCapped) {
  const auto hs = all_subgroups(make_symmetric(4));
  for (std::size_t i = 1; i < hs.size(); ++i) {
    const bool ordered = hs[i - 1].order() < hs[i].order() ||
                         (hs[i - 1].order() == hs[i].order() && hs[i - 1].elements < hs[i].elements);
    EXPECT_TRUE(ordered);
  }
  try {
    all_subgroups(make_cyclic(30));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::capacity);
  }
  EXPECT_EQ(all_subgroups(make_cyclic(30), 30).size(), 8u);
}

TEST(Group, CosetsConjugatesInverses) {
  const Group z4 = make_cyclic(4);
  const Subgroup h{ElementSet(4, {0, 2}), 4};
  for (Element t = 0; t < 4; ++t) EXPECT_EQ(conjugate_subgroup(z4, t, h), h);
  EXPECT_EQ(set_inverse(z4, ElementSet(4, {1, 2})).members(), (std::vector<Element>{2, 3}));
  EXPECT_EQ(left_coset(z4, 1, h).members(), (std::vector<Element>{1, 3}));
  EXPECT_EQ(set_product(z4, ElementSet(4, {1}), ElementSet(4, {0, 1})).members(),
            (std::vector<Element>{1, 2}));

  // S3: H = {e,(12)}, t = (13) gives {e,(23)}; found by table search to
  // stay independent of element naming.
  const Group s3 = make_symmetric(3);
  const auto& names = s3.element_names();
  auto find = [&](const std::string& nm) {
    for (Element a = 0; a < names.size(); ++a)
      if (names[a] == nm) return a;
    ADD_FAILURE() << "no element " << nm;
    return Element{0};
  };
  const Subgroup h12{ElementSet(6, {0, find("(1 2)")}), 6};
  const Subgroup got = conjugate_subgroup(s3, find("(1 3)"), h12);
  EXPECT_EQ(got.elements, ElementSet(6, {0, find("(2 3)")}));
  // Left and right cosets differ in S3.
  EXPECT_NE(left_coset(s3, find("(1 3)"), h12.elements), right_coset(s3, h12.elements, find("(1 3)")));
}

TEST(Group, ElementSetBasics) {
  const ElementSet a(6, {3, 1, 1});
  EXPECT_EQ(a.members(), (std::vector<Element>{1, 3}));
  EXPECT_TRUE(a.contains(3));
  EXPECT_EQ(a.with(0).members(), (std::vector<Element>{0, 1, 3}));
  EXPECT_EQ(a.without(1).members(), (std::vector<Element>{3}));
  EXPECT_TRUE(ElementSet(6, {1}).is_subset_of(a));
  EXPECT_FALSE(a.intersects(ElementSet(6, {2, 4})));
  EXPECT_EQ(ElementSet::full(3).members(), (std::vector<Element>{0, 1, 2}));
  EXPECT_THROW(ElementSet(3, {5}), Error);
}
