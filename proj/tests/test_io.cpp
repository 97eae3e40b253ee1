#include "doctest.h"

#include "subfactor/catalog.hpp"
#include "subfactor/errors.hpp"
#include "subfactor/io.hpp"

using namespace subfactor;
using io::Json;

namespace {

const std::string kFixtures = SUBFACTOR_FIXTURE_DIR;

} // namespace

TEST_CASE("fixture groups match the catalog")
{
  CHECK(io::load_group(kFixtures + "/z6.json")->order() == 6);
  auto v4 = io::load_group(kFixtures + "/v4.json");
  CHECK(v4->table() == catalog::klein_four()->table());
  CHECK(v4->label(3) == "ab");
  auto s3 = io::load_group(kFixtures + "/s3.json");
  CHECK(s3->order() == 6);
  CHECK(s3->find("(12)").has_value());
  CHECK(io::load_group(kFixtures + "/d4.json")->order() == 8);
  auto q8 = io::load_group(kFixtures + "/q8.json");
  CHECK(conjugacy_classes(Subgroup::whole(q8)).size() == 5);
  CHECK(q8->element_order(*q8->find("i")) == 4);
}

TEST_CASE("group round trip through JSON")
{
  auto d4 = catalog::dihedral(4);
  auto back = io::group_from_json(io::group_to_json(*d4));
  CHECK(*back == *d4);
}

TEST_CASE("schema errors name the field")
{
  auto field_of = [](const Json& j) {
    try {
      io::group_from_json(j);
    } catch (const ValidationError& e) {
      return e.field();
    }
    return std::string("none");
  };
  CHECK(field_of(Json{{"order", 2}, {"mult", {{0, 1}, {1, 0}}}}) == "schema");
  CHECK(field_of(Json{{"schema", 2}, {"mult", {{0, 1}, {1, 0}}}}) == "schema");
  CHECK(field_of(Json{{"schema", 1}, {"mult", "x"}}) == "mult");
  CHECK(field_of(Json{{"schema", 1}, {"order", 3}, {"mult", {{0, 1}, {1, 0}}}}) == "order");
  CHECK(field_of(Json{{"schema", 1}}) == "mult");
  CHECK_THROWS_AS(io::load_group(kFixtures + "/missing.json"), ValidationError);
}

TEST_CASE("the Pauli fixture carries the expected cocycle")
{
  auto v4 = io::load_group(kFixtures + "/v4.json");
  auto psi = io::load_rep(kFixtures + "/pauli.json", v4);
  CHECK(psi.domain().is_whole());
  CHECK(psi.dim() == 2);
  CHECK(std::abs(psi.cocycle()(1, 2) - Complex(0, -1)) < 1e-12);
  auto reference = catalog::pauli(Subgroup::whole(catalog::klein_four()));
  for (Element g = 0; g < 4; ++g)
    CHECK(max_abs(Matrix(psi(g) - reference(g))) < 1e-12);
}

TEST_CASE("rep files given by generators are closed under products")
{
  auto s3 = catalog::symmetric(3);
  Json j;
  j["schema"] = 1;
  j["dim"] = 1;
  j["matrices"] = {{"(12)", {{{-1.0, 0.0}}}}, {"(123)", {{1.0}}}};
  auto sign = io::rep_from_json(j, s3);
  CHECK(sign.domain().is_whole());
  CHECK(std::abs(sign(*s3->find("(13)"))(0, 0) + 1.0) < 1e-12);

  j["matrices"] = {{"(123)", {{{-0.5, 0.8660254037844386}}}}};
  auto z3 = io::rep_from_json(j, s3);
  CHECK(z3.domain().order() == 3);
}

TEST_CASE("rep files are validated")
{
  auto v4 = catalog::klein_four();
  auto good = io::rep_to_json(catalog::pauli(Subgroup::whole(v4)));
  CHECK(io::rep_from_json(good, v4).dim() == 2);

  Json wrong_cocycle = good;
  wrong_cocycle["cocycle"] = Json::array({Json::array({"10", "01", Json::array({0.0, 1.0})})});
  CHECK_THROWS_AS(io::rep_from_json(wrong_cocycle, v4), ValidationError);

  Json wrong_dim = good;
  wrong_dim["dim"] = 3;
  CHECK_THROWS_AS(io::rep_from_json(wrong_dim, v4), ValidationError);

  Json unknown = good;
  unknown["matrices"]["zz"] = unknown["matrices"]["10"];
  CHECK_THROWS_AS(io::rep_from_json(unknown, v4), ValidationError);

  Json ragged = good;
  ragged["matrices"]["10"] = Json::array({Json::array({0.0, 1.0}), Json::array({1.0})});
  CHECK_THROWS_AS(io::rep_from_json(ragged, v4), ValidationError);

  Json perturbed = good;
  perturbed["matrices"]["10"][0][0] = Json::array({1e-3, 0.0});
  CHECK_THROWS_AS(io::rep_from_json(perturbed, v4), ValidationError);
  CHECK(io::rep_from_json(perturbed, v4, 1e-2).dim() == 2);
}

TEST_CASE("DOT output is deterministic and annotated")
{
  auto sigma = regular_rep(Subgroup::whole(catalog::cyclic(2)));
  auto g = principal_graph(sigma);
  const auto dot = io::graph_to_dot(g);
  CHECK(dot == io::graph_to_dot(principal_graph(sigma)));
  CHECK(dot.find("depth 2") != std::string::npos);
  CHECK(dot.find("d=1") != std::string::npos);
  CHECK(dot.find("e0 -- o0") != std::string::npos);
}

TEST_CASE("algebra files")
{
  auto b = io::load_algebra(kFixtures + "/pauli_leg_algebra.json");
  CHECK(b.ambient() == 4);
  CHECK(b.dim() == 4);
  Json j{{"schema", 1}, {"dim", 2}, {"matrices", Json::array({Json::array({Json::array({1.0})})})}};
  CHECK_THROWS_AS(io::algebra_from_json(j), ValidationError);
}
