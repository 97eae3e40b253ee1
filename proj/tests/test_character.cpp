#include "doctest.h"

#include <cmath>

#include "subfactor/catalog.hpp"
#include "subfactor/character.hpp"

using namespace subfactor;

namespace {

double orthogonality_error(const CharacterTable& t)
{
  double worst = 0;
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j) {
      const Complex ip = inner_product(t.rows[i], t.rows[j]);
      worst = std::max(worst, std::abs(ip - Complex(i == j ? 1.0 : 0.0)));
    }
  return worst;
}

} // namespace

TEST_CASE("character table of Z2")
{
  auto t = character_table(catalog::cyclic(2));
  REQUIRE(t.size() == 2);
  CHECK(std::abs(t.rows[0].values[0] - 1.0) < 1e-12);
  CHECK(std::abs(t.rows[0].values[1] - 1.0) < 1e-12);
  CHECK(std::abs(t.rows[1].values[0] - 1.0) < 1e-12);
  CHECK(std::abs(t.rows[1].values[1] + 1.0) < 1e-12);
}

TEST_CASE("character table of Z2 x Z2 consists of sign characters")
{
  auto t = character_table(catalog::klein_four());
  REQUIRE(t.size() == 4);
  for (const auto& row : t.rows)
    for (Complex v : row.values)
      CHECK(std::abs(std::abs(v.real()) - 1.0) < 1e-12);
}

TEST_CASE("character table of S3 has degrees 1, 1, 2")
{
  auto t = character_table(catalog::symmetric(3));
  CHECK(t.degrees == std::vector<int>{1, 1, 2});
}

TEST_CASE("orthogonality and degree sum for groups of order <= 32")
{
  const std::vector<GroupPtr> groups = {
      catalog::cyclic(1), catalog::cyclic(5), catalog::cyclic(12), catalog::klein_four(),
      catalog::symmetric(3), catalog::dihedral(4), catalog::quaternion(), catalog::dihedral(5),
      catalog::symmetric(4), catalog::direct_product(*catalog::symmetric(3), *catalog::cyclic(4)),
      catalog::direct_product(*catalog::quaternion(), *catalog::cyclic(4))};
  for (const auto& g : groups) {
    CAPTURE(g->order());
    for (std::uint64_t seed : {1u, 7u, 12345u}) {
      auto t = character_table(g, seed);
      CHECK(t.size() == conjugacy_classes(Subgroup::whole(g)).size());
      CHECK(orthogonality_error(t) < 1e-8);
      long long sum = 0;
      for (int d : t.degrees)
        sum += static_cast<long long>(d) * d;
      CHECK(sum == g->order());
      for (int i = 0; i < t.size(); ++i)
        CHECK(t.conjugate[t.conjugate[i]] == i);
    }
  }
}

TEST_CASE("row order does not depend on the seed")
{
  auto a = character_table(catalog::dihedral(5), 3);
  auto b = character_table(catalog::dihedral(5), 99);
  REQUIRE(a.size() == b.size());
  for (int i = 0; i < a.size(); ++i)
    for (std::size_t c = 0; c < a.rows[i].values.size(); ++c)
      CHECK(std::abs(a.rows[i].values[c] - b.rows[i].values[c]) < 1e-8);
}

TEST_CASE("character table of a subgroup domain")
{
  auto s4 = catalog::symmetric(4);
  for (const auto& h : all_subgroups(s4)) {
    auto t = character_table(h);
    CHECK(orthogonality_error(t) < 1e-8);
    long long sum = 0;
    for (int d : t.degrees)
      sum += static_cast<long long>(d) * d;
    CHECK(sum == h.order());
  }
}
