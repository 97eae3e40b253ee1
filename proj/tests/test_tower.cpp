#include "doctest.h"

#include <algorithm>

#include "subfactor/catalog.hpp"
#include "subfactor/errors.hpp"
#include "subfactor/induction.hpp"
#include "subfactor/tower.hpp"

using namespace subfactor;

namespace {

ProjectiveRep pauli_sigma()
{
  return build_sigma(catalog::pauli(Subgroup::whole(catalog::klein_four()))).total;
}

} // namespace

TEST_CASE("tower of the regular representation of Z2")
{
  auto sigma = regular_rep(Subgroup::whole(catalog::cyclic(2)));
  auto t = tower(sigma, 3);
  CHECK(t.upper_dims == std::vector<long long>{1, 2, 8, 32});
  CHECK(t.lower_dims == std::vector<long long>{1, 2, 8, 32});
  CHECK(t.index == 4);
  CHECK(t.depth == 2);
}

TEST_CASE("tower of the Pauli sigma")
{
  auto sigma = pauli_sigma();
  CHECK(sigma.dim() == 4);
  auto t = tower(sigma, 2);
  CHECK(t.upper_dims == std::vector<long long>{1, 4, 64});
  CHECK(t.index == 16);
  CHECK(t.depth == 2);
  // brute-force commutant dimension of the level-2 word
  auto word = tensor(sigma, sigma.conjugate());
  CHECK(commutant_dimension(word) == 64);
}

TEST_CASE("a trivial sigma has depth 1 and constant dimensions")
{
  auto sigma = trivial_rep(Subgroup::whole(catalog::symmetric(3)));
  auto t = tower(sigma, 4);
  CHECK(t.upper_dims == std::vector<long long>(5, 1));
  CHECK(t.depth == 1);
  CHECK(t.index == 1);
  auto graph = principal_graph(sigma);
  CHECK(graph.depth == 1);
  CHECK(graph.even == std::vector<int>{0});
  CHECK(graph.odd == std::vector<int>{0});
}

TEST_CASE("tower dimensions match explicit tensor words")
{
  auto s3 = catalog::symmetric(3);
  auto z2 = Subgroup::generated_by(s3, std::vector<Element>{*s3->find("(12)")});
  auto sigma = induce(trivial_rep(z2), CosetSystem(z2)).total;
  auto t = tower(sigma, 3);
  auto word = sigma;
  for (int n = 1; n <= 3; ++n) {
    if (n > 1)
      word = tensor(word, n % 2 == 0 ? sigma.conjugate() : sigma);
    CHECK(t.upper_dims[n] == commutant_dimension(word));
  }
  CHECK(t.depth == 3);
}

TEST_CASE("inclusion matrices propagate multiplicities")
{
  auto sigma = pauli_sigma();
  auto t = tower(sigma, 4);
  for (std::size_t n = 0; n + 1 < t.upper_multiplicities.size(); ++n) {
    const auto& inc = t.inclusion_matrices[n];
    const auto& m = t.upper_multiplicities[n];
    const auto& next = t.upper_multiplicities[n + 1];
    for (std::size_t j = 0; j < next.size(); ++j) {
      long long v = 0;
      for (std::size_t i = 0; i < m.size(); ++i)
        v += inc[i][j] * m[i];
      CHECK(v == next[j]);
    }
    long long sq = 0;
    for (long long x : m)
      sq += x * x;
    CHECK(sq == t.upper_dims[n]);
  }
}

TEST_CASE("overflow is reported instead of wrapping")
{
  auto sigma = regular_rep(Subgroup::whole(catalog::symmetric(4)));
  CHECK_THROWS_AS(tower(sigma, 40), ValidationError);
}

TEST_CASE("closure of the sign character of S3")
{
  auto s3 = catalog::symmetric(3);
  auto table = character_table(s3);
  auto sign = linear_characters(Subgroup::whole(s3))[1];
  CHECK(closure_irreducibles(sign, table) == std::vector<int>{0, 1});
  CHECK_FALSE(generates(sign, table));
  auto props = check_generator_properties(sign, table);
  CHECK(props.self_conjugate);
  CHECK_FALSE(props.proper_unit);
  CHECK_FALSE(props.generates_category);
}

TEST_CASE("generator properties of sigma")
{
  for (auto g : {catalog::symmetric(3), catalog::dihedral(4), catalog::quaternion()}) {
    auto table = character_table(g);
    for (const auto& h : all_subgroups(g)) {
      if (h.is_whole())
        continue;
      for (const auto& chi : linear_characters(h)) {
        auto sigma = build_sigma(chi).total;
        auto props = check_generator_properties(sigma, table);
        CHECK(props.self_conjugate);
        CHECK(props.proper_unit);
        // sigma generates exactly when it is faithful
        CHECK(props.generates_category == kernel(sigma).is_trivial());
      }
    }
  }
}

TEST_CASE("principal graph of the Pauli sigma")
{
  auto graph = principal_graph(pauli_sigma());
  CHECK(graph.depth == 2);
  // sigma is the regular representation: complete bipartite on 4 + 4
  CHECK(graph.even.size() == 4);
  CHECK(graph.odd.size() == 4);
  CHECK(graph.edges.size() == 16);
  CHECK(graph.warning.empty());
  CHECK(graph.degree_sequence() == std::vector<long long>(8, 4));
}

TEST_CASE("non-self-conjugate sigma raises a warning")
{
  auto z3 = Subgroup::whole(catalog::cyclic(3));
  auto chi = linear_characters(z3)[1];
  auto graph = principal_graph(chi);
  CHECK_FALSE(graph.warning.empty());
}
