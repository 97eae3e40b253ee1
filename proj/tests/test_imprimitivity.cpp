#include "doctest.h"

#include "subfactor/catalog.hpp"
#include "subfactor/errors.hpp"
#include "subfactor/imprimitivity.hpp"

using namespace subfactor;

namespace {

ProjectiveRep pauli_sigma()
{
  return build_sigma(catalog::pauli(Subgroup::whole(catalog::klein_four()))).total;
}

/// span{1, v v^*} for v = (1, 2, 3, 4) / |v|.
MatrixStarAlgebra generic_projection()
{
  Vector v(4);
  v << 1.0, 2.0, 3.0, 4.0;
  v.normalize();
  std::vector<Matrix> gens{v * v.adjoint()};
  return MatrixStarAlgebra::generate(4, gens);
}

} // namespace

TEST_CASE("standard algebras")
{
  CHECK(MatrixStarAlgebra::scalars(3).dim() == 1);
  CHECK(MatrixStarAlgebra::full(3).dim() == 9);
  CHECK(MatrixStarAlgebra::diagonal(3).dim() == 3);
  auto block = MatrixStarAlgebra::imprimitivity_block(2, 3, 4);
  CHECK(block.ambient() == 24);
  CHECK(block.dim() == 16);
  CHECK(block.contains_identity());
  CHECK(block.is_closed());
  CHECK(block.center().size() == 4);
}

TEST_CASE("generation closes under products")
{
  Matrix e01 = Matrix::Zero(3, 3);
  e01(0, 1) = 1.0;
  std::vector<Matrix> gens{e01};
  auto alg = MatrixStarAlgebra::generate(3, gens);
  // e01, e10, e00, e11 and the identity give M_2 + C
  CHECK(alg.dim() == 5);
  CHECK(alg.added_by_closure() > 0);
  CHECK(alg.is_closed());
  CHECK(alg.center().size() == 2);
}

TEST_CASE("invariance under sigma")
{
  auto sigma = pauli_sigma();
  CHECK(invariant_check(MatrixStarAlgebra::scalars(4), sigma));
  CHECK(invariant_check(MatrixStarAlgebra::full(4), sigma));
  // sigma(g) = conj(p) (x) p; L(C^2) (x) 1 is invariant
  std::vector<Matrix> gens;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Matrix e = Matrix::Zero(2, 2);
      e(i, j) = 1.0;
      gens.push_back(kron(e, Matrix::Identity(2, 2)));
    }
  auto left = MatrixStarAlgebra::generate(4, gens);
  CHECK(left.dim() == 4);
  CHECK(invariant_check(left, sigma));
  // sigma is monomial, so diagonals survive; a generic rank-one projection does not
  CHECK(invariant_check(MatrixStarAlgebra::diagonal(4), sigma));
  CHECK_FALSE(invariant_check(generic_projection(), sigma));
  CHECK_THROWS_AS(invariant_check(MatrixStarAlgebra::full(3), sigma), ValidationError);
}

TEST_CASE("factor criterion")
{
  auto sigma = pauli_sigma();
  CHECK(is_factor_correspondence(MatrixStarAlgebra::full(4), sigma));
  CHECK(is_factor_correspondence(MatrixStarAlgebra::scalars(4), sigma));

  // trivial sigma fixes every central element
  auto triv = trivial_rep(Subgroup::whole(catalog::cyclic(2)), 3);
  CHECK_FALSE(is_factor_correspondence(MatrixStarAlgebra::diagonal(3), triv));

  // the coset algebra of an induced rep is permuted transitively
  auto s3 = catalog::symmetric(3);
  auto z2 = Subgroup::generated_by(s3, std::vector<Element>{*s3->find("(12)")});
  auto perm = induce(trivial_rep(z2), CosetSystem(z2)).total;
  CHECK(is_factor_correspondence(MatrixStarAlgebra::diagonal(3), perm));
}

TEST_CASE("round trip on an induced representation")
{
  Rng rng(21);
  auto s3 = catalog::symmetric(3);
  auto z2 = Subgroup::generated_by(s3, std::vector<Element>{*s3->find("(12)")});
  auto chi = linear_characters(z2)[1];
  auto sigma = induce(chi, CosetSystem(z2)).total;
  const Matrix w = random_unitary(sigma.dim(), rng);
  auto b = MatrixStarAlgebra::imprimitivity_block(1, 1, 3).transformed(w);
  auto sys = decompose(sigma.transformed(w), b);
  CHECK(sys.residual < 1e-6);
  CHECK(sys.projections.size() == 3);
  CHECK(are_conjugate(sys.stabilizer, z2));
  CHECK(sys.d == 1);
  CHECK(sys.r == 1);
  CHECK(is_unitary(sys.unitary, 1e-8));
}

TEST_CASE("round trip recovers the Pauli decomposition")
{
  auto v4 = catalog::klein_four();
  auto g = catalog::direct_product(*v4, *catalog::cyclic(2));
  Rng rng(4);
  for (const auto& h : all_subgroups(g)) {
    if (!catalog::is_klein_four(h))
      continue;
    auto psi = catalog::pauli(h);
    auto base = tensor(psi.conjugate(), psi);
    auto ordinary = ProjectiveRep::create(base.domain(), base.matrices());
    auto sigma = induce(ordinary, CosetSystem(h)).total;
    const Matrix w = random_unitary(sigma.dim(), rng);
    auto b = MatrixStarAlgebra::imprimitivity_block(2, 2, h.index()).transformed(w);
    auto sys = decompose(sigma.transformed(w), b, 9);
    CHECK(sys.residual < 1e-6);
    CHECK(sys.stabilizer == h);
    CHECK(sys.d == 2);
    CHECK(sys.r == 2);
    auto aligned = align_cocycle(sys.psi, psi.cocycle());
    REQUIRE(aligned.has_value());
    CHECK(strictly_equivalent(*aligned, psi).equivalent);
  }
}

TEST_CASE("decompose on the scalars returns sigma itself")
{
  auto s3 = catalog::symmetric(3);
  auto table = character_table(s3);
  auto z3 = Subgroup::generated_by(s3, std::vector<Element>{*s3->find("(123)")});
  auto two = induce(linear_characters(z3)[1], CosetSystem(z3)).total;
  REQUIRE(commutant_dimension(two) == 1);
  auto sys = decompose(two, MatrixStarAlgebra::scalars(2));
  CHECK(sys.stabilizer.is_whole());
  CHECK(sys.d == 1);
  CHECK(sys.r == 2);
  CHECK(strictly_equivalent(sys.psi, two).equivalent);
  CHECK(sys.residual < 1e-6);
}

TEST_CASE("decompose on the conjugate Pauli leg")
{
  auto psi = catalog::pauli(Subgroup::whole(catalog::klein_four()));
  auto sigma = pauli_sigma();
  std::vector<Matrix> gens;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Matrix e = Matrix::Zero(2, 2);
      e(i, j) = 1.0;
      gens.push_back(kron(e, Matrix::Identity(2, 2)));
    }
  auto sys = decompose(sigma, MatrixStarAlgebra::generate(4, gens));
  CHECK(sys.stabilizer.is_whole());
  CHECK(sys.d == 2);
  CHECK(sys.r == 2);
  auto aligned = align_cocycle(sys.psi, psi.cocycle());
  REQUIRE(aligned.has_value());
  CHECK(twist_equivalent(*aligned, psi).equivalent);
  CHECK(sys.residual < 1e-6);
}

TEST_CASE("decompose rejects non-invariant and non-factor algebras")
{
  auto sigma = pauli_sigma();
  CHECK_THROWS(decompose(sigma, generic_projection()));
  auto triv = trivial_rep(Subgroup::whole(catalog::cyclic(2)), 3);
  CHECK_THROWS(decompose(triv, MatrixStarAlgebra::diagonal(3)));
}
