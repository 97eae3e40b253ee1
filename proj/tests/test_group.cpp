#include "doctest.h"

#include <set>

#include "subfactor/catalog.hpp"
#include "subfactor/errors.hpp"
#include "subfactor/group.hpp"

using namespace subfactor;

namespace {

std::vector<GroupPtr> test_groups()
{
  return {catalog::cyclic(1), catalog::cyclic(2), catalog::cyclic(6), catalog::klein_four(),
          catalog::symmetric(3), catalog::dihedral(4), catalog::quaternion(),
          catalog::symmetric(4), catalog::cyclic(12)};
}

Subgroup by_labels(const GroupPtr& g, std::initializer_list<const char*> labels)
{
  std::vector<Element> gens;
  for (const char* l : labels)
    gens.push_back(*g->find(l));
  return Subgroup::generated_by(g, gens);
}

} // namespace

TEST_CASE("tables load and reject malformed input")
{
  auto z2 = FiniteGroup::from_table({{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
  CHECK(z2.identity() == 0);
  CHECK(z2.inv(1) == 1);

  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2}, {1, 2}}), ValidationError);
  // Latin square without associativity: the loop of order 5
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(loop), ValidationError);
}

TEST_CASE("permutation closure")
{
  auto s3 = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.order() == 6);
  CHECK(s3.label(s3.identity()) == "1");
  CHECK(s3.find("(12)").has_value());
  CHECK(s3.find("(123)").has_value());
  CHECK(catalog::symmetric(4)->order() == 24);
  CHECK(catalog::dihedral(4)->order() == 8);
  CHECK_THROWS_AS(FiniteGroup::from_permutations({{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 50),
                  ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_permutations({{0, 0, 1}}), ValidationError);
}

TEST_CASE("group axioms hold for every catalog group")
{
  for (const auto& g : test_groups()) {
    const int n = g->order();
    for (int x = 0; x < n; ++x) {
      CHECK(g->mul(g->identity(), x) == x);
      CHECK(g->mul(x, g->inv(x)) == g->identity());
    }
  }
}

TEST_CASE("subgroup enumeration")
{
  CHECK(all_subgroups(catalog::cyclic(2)).size() == 2);
  CHECK(all_subgroups(catalog::symmetric(3)).size() == 6);
  CHECK(all_subgroups(catalog::klein_four()).size() == 5);
  CHECK(all_subgroups(catalog::dihedral(4)).size() == 10);
  CHECK(all_subgroups(catalog::quaternion()).size() == 6);
  CHECK(all_subgroups(catalog::symmetric(4)).size() == 30);
  CHECK(subgroups_up_to_conjugacy(catalog::symmetric(4)).size() == 11);
  CHECK(subgroups_up_to_conjugacy(catalog::symmetric(3)).size() == 4);

  auto subs = all_subgroups(catalog::symmetric(3));
  CHECK(subs.front().is_trivial());
  CHECK(subs.back().is_whole());
  std::multiset<int> orders;
  for (const auto& h : subs)
    orders.insert(h.order());
  CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 6});

  CHECK_THROWS_AS(all_subgroups(catalog::cyclic(12), 8), ValidationError);
}

TEST_CASE("normal core")
{
  auto s3 = catalog::symmetric(3);
  CHECK(core(Subgroup::whole(s3)).is_whole());
  CHECK(core(by_labels(s3, {"(12)"})).is_trivial());
  auto a3 = by_labels(s3, {"(123)"});
  CHECK(core(a3) == a3);

  for (const auto& g : test_groups()) {
    if (g->order() > 24)
      continue;
    for (const auto& h : all_subgroups(g)) {
      const Subgroup n = core(h);
      CHECK(n.is_subgroup_of(h));
      CHECK(n.is_normal());
      for (Element x = 0; x < g->order(); ++x)
        CHECK(n.conjugate_by(x) == n);
    }
  }
}

TEST_CASE("coset factorisation")
{
  auto s3 = catalog::symmetric(3);
  CosetSystem whole(Subgroup::whole(s3));
  CHECK(whole.reps() == std::vector<Element>{s3->identity()});

  CosetSystem by_a3(by_labels(s3, {"(123)"}));
  CHECK(by_a3.size() == 2);

  for (const auto& g : test_groups())
    for (const auto& h : all_subgroups(g)) {
      CosetSystem cs(h);
      CHECK(cs.reps()[0] == g->identity());
      CHECK(cs.size() * h.order() == g->order());
      for (Element x = 0; x < g->order(); ++x) {
        CHECK(g->mul(cs.k(x), cs.h(x)) == x);
        CHECK(h.contains(cs.h(x)));
        if (h.contains(x)) {
          CHECK(cs.k(x) == g->identity());
          CHECK(cs.h(x) == x);
        }
      }
    }
}

TEST_CASE("conjugacy classes partition the group")
{
  for (const auto& g : test_groups()) {
    auto data = conjugacy_classes(Subgroup::whole(g));
    CHECK(data.classes[0] == std::vector<Element>{g->identity()});
    int total = 0;
    for (int c = 0; c < data.size(); ++c) {
      total += data.class_sizes[c];
      for (Element x : data.classes[c])
        CHECK(data.class_of[x] == c);
    }
    CHECK(total == g->order());
  }
  CHECK(conjugacy_classes(Subgroup::whole(catalog::symmetric(3))).size() == 3);
  CHECK(conjugacy_classes(Subgroup::whole(catalog::quaternion())).size() == 5);
}

TEST_CASE("derived subgroup")
{
  CHECK(derived_subgroup(Subgroup::whole(catalog::symmetric(3))).order() == 3);
  CHECK(derived_subgroup(Subgroup::whole(catalog::quaternion())).order() == 2);
  CHECK(derived_subgroup(Subgroup::whole(catalog::cyclic(6))).is_trivial());
}
