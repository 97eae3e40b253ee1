#include "doctest.h"

#include <algorithm>
#include <map>

#include "subfactor/catalog.hpp"
#include "subfactor/classification.hpp"
#include "subfactor/errors.hpp"
#include "subfactor/induction.hpp"
#include "subfactor/io.hpp"

using namespace subfactor;

TEST_CASE("the Pauli record")
{
  auto psi = catalog::pauli(Subgroup::whole(catalog::klein_four()));
  auto rec = report(psi);
  CHECK(rec.index == 4);
  CHECK(rec.r == 2);
  CHECK(rec.irreducible);
  CHECK(rec.rel_commutant_dim == 1);
  CHECK(rec.graph.depth == 2);
  CHECK(rec.condition_holds);
  CHECK(rec.category_is_UG);
  CHECK(rec.kernel_K.is_trivial());
  CHECK(rec.sigma_dim == 4);
  CHECK(rec.tower.index == 16);
}

TEST_CASE("records with trivial psi")
{
  auto s3 = catalog::symmetric(3);
  auto z2 = Subgroup::generated_by(s3, std::vector<Element>{*s3->find("(12)")});
  auto rec = report(trivial_rep(z2));
  CHECK(rec.index == 3);
  CHECK(rec.irreducible);
  CHECK(rec.condition_holds);
  CHECK(rec.normal_core.is_trivial());

  auto c2 = catalog::cyclic(2);
  auto e = report(trivial_rep(Subgroup::trivial(c2)));
  CHECK(e.index == 2);
  CHECK(e.condition_holds);
  CHECK(e.graph.depth == 2);
  CHECK(e.sigma_dim == 2);

  auto z3 = Subgroup::generated_by(s3, std::vector<Element>{*s3->find("(123)")});
  auto normal = report(trivial_rep(z3));
  CHECK(normal.index == 2);
  CHECK_FALSE(normal.condition_holds);
  CHECK(normal.kernel_K == z3);
}

TEST_CASE("the condition on psi")
{
  auto g = catalog::cyclic(2);
  CHECK(check_condition(trivial_rep(Subgroup::trivial(g))));
  for (const auto& chi : linear_characters(Subgroup::whole(g)))
    CHECK_FALSE(check_condition(chi));
  CHECK(check_condition(catalog::pauli(Subgroup::whole(catalog::klein_four()))));
}

TEST_CASE("kernel of sigma equals the projective kernel of psi on the core")
{
  for (auto g : {catalog::symmetric(3), catalog::dihedral(4), catalog::quaternion(),
                 catalog::cyclic(6), catalog::symmetric(4)}) {
    for (const auto& h : all_subgroups(g)) {
      for (const auto& chi : linear_characters(h)) {
        auto sigma = build_sigma(chi).total;
        CHECK(kernel(sigma) == projective_kernel(chi, core(h)));
      }
    }
  }
}

TEST_CASE("enumerate over Z2")
{
  auto recs = enumerate(catalog::cyclic(2));
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].subgroup.is_whole());
  CHECK(recs[0].index == 1);
  CHECK_FALSE(recs[0].condition_holds);
  CHECK(recs[1].index == 1);
  CHECK_FALSE(recs[1].condition_holds);
  CHECK(recs[2].subgroup.is_trivial());
  CHECK(recs[2].index == 2);
  CHECK(recs[2].condition_holds);
}

TEST_CASE("enumerate is sorted and flags shared fingerprints")
{
  auto v4 = catalog::klein_four();
  EnumerateOptions opts;
  opts.extra.emplace_back("pauli", catalog::pauli(Subgroup::whole(v4)));
  auto recs = enumerate(v4, opts);
  CHECK(std::is_sorted(recs.begin(), recs.end(), [](const auto& a, const auto& b) {
    return std::pair(a.index, a.graph.depth) < std::pair(b.index, b.graph.depth);
  }));
  std::map<Fingerprint, int> classes;
  for (const auto& r : recs)
    ++classes[r.fingerprint];
  const ClassificationRecord* pauli = nullptr;
  for (const auto& r : recs) {
    CHECK(r.possibly_isomorphic == (classes[r.fingerprint] > 1));
    if (r.psi_label == "pauli")
      pauli = &r;
  }
  REQUIRE(pauli != nullptr);
  CHECK(pauli->index == 4);
  CHECK(pauli->graph.depth == 2);
  // (V4, {e}, trivial) is R^G in R: same index, depth and graph
  CHECK(pauli->possibly_isomorphic);
}

TEST_CASE("index is 1 only for H = G with r = 1")
{
  for (auto g : {catalog::symmetric(3), catalog::dihedral(4)}) {
    for (const auto& rec : enumerate(g)) {
      CHECK(rec.index >= 1);
      CHECK((rec.index == 1) == (rec.subgroup.is_whole() && rec.r == 1));
      CHECK(rec.irreducible == (rec.rel_commutant_dim == 1));
      CHECK(rec.condition_holds == rec.kernel_K.is_trivial());
      CHECK(rec.condition_holds == rec.category_is_UG);
    }
  }
}

TEST_CASE("ker sigma is the G-core of proj ker psi, which can be smaller than proj ker psi|N(H)")
{
  // 2-dimensional irreducible of a Sylow D4 in S4: scalar on the center
  // {1, (12)(34)}, which lies in N(H) = V4 but is not normal in S4
  auto s4 = catalog::symmetric(4);
  io::Json j;
  j["schema"] = 1;
  j["dim"] = 2;
  j["matrices"] = {{"(1324)", {{0.0, -1.0}, {1.0, 0.0}}}, {"(12)", {{1.0, 0.0}, {0.0, -1.0}}}};
  const auto psi = io::rep_from_json(j, s4);
  REQUIRE(psi.domain().order() == 8);
  CHECK(commutant_dimension(psi) == 1);

  const auto n_h = core(psi.domain());
  CHECK(n_h.order() == 4);
  const auto pk = projective_kernel(psi, n_h);
  CHECK(pk.order() == 2);
  CHECK_FALSE(pk.is_normal());

  const auto sigma = build_sigma(psi).total;
  CHECK(kernel(sigma).is_trivial());
  CHECK(kernel(sigma) == core(projective_kernel(psi, psi.domain())));
  CHECK(generates(sigma, character_table(s4)));

  CHECK_THROWS_AS(report(psi), InconsistencyError);
}
