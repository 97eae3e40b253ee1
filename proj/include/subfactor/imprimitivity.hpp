#ifndef SUBFACTOR_IMPRIMITIVITY_HPP
#define SUBFACTOR_IMPRIMITIVITY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "subfactor/group.hpp"
#include "subfactor/induction.hpp"
#include "subfactor/linalg.hpp"
#include "subfactor/rep.hpp"

namespace subfactor {

/// A unital *-subalgebra of the m x m matrices, stored as a basis that is
/// orthonormal for the Hilbert-Schmidt inner product.
class MatrixStarAlgebra
{
public:
  /// Span of the given matrices, completed under adjoints, products and the
  /// identity. added_by_closure() reports how many dimensions completion added.
  static MatrixStarAlgebra generate(Eigen::Index ambient, std::span<const Matrix> spanning,
                                    std::uint64_t seed = 1);

  /// L(C^d) (x) 1_r (x) l-infinity(G/H) acting on (C^d (x) C^r) (x) l2(G/H)
  /// in the induced-representation basis order.
  static MatrixStarAlgebra imprimitivity_block(int d, int r, int cosets);

  static MatrixStarAlgebra scalars(Eigen::Index ambient);
  static MatrixStarAlgebra full(Eigen::Index ambient);
  static MatrixStarAlgebra diagonal(Eigen::Index ambient);

  Eigen::Index ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Matrix>& basis() const { return basis_; }
  bool contains_identity() const { return contains_identity_; }
  int added_by_closure() const { return added_; }

  bool contains(const Matrix& x, double tol = 1e-8) const;
  /// Random element (Gaussian coefficients on the basis).
  Matrix random_element(Rng& rng) const;
  /// Basis of the center Z_B (orthonormal).
  std::vector<Matrix> center(std::uint64_t seed = 1) const;
  /// Closure under adjoint and product, checked on random elements.
  bool is_closed(std::uint64_t seed = 1) const;
  MatrixStarAlgebra transformed(const Matrix& w) const;

private:
  MatrixStarAlgebra(Eigen::Index ambient, std::vector<Matrix> basis);
  Vector coordinates(const Matrix& x) const;

  Eigen::Index ambient_;
  std::vector<Matrix> basis_;
  Matrix stacked_;  // columns vec(basis[i])
  bool contains_identity_ = false;
  int added_ = 0;
};

/// sigma(g) B sigma(g)^* = B for every g.
bool invariant_check(const MatrixStarAlgebra& b, const ProjectiveRep& sigma);

/// The Ad sigma-fixed part of the center of B is the scalars.
bool is_factor_correspondence(const MatrixStarAlgebra& b, const ProjectiveRep& sigma,
                              std::uint64_t seed = 1);

struct ImprimitivitySystem
{
  /// Minimal central projections p_1..p_l of B; p_1 first.
  std::vector<Matrix> projections;
  /// action[g][j] = index of sigma(g) p_j sigma(g)^*.
  std::vector<std::vector<int>> action;
  Subgroup stabilizer;
  CosetSystem cosets;
  int d = 0;
  int r = 0;
  ProjectiveRep rho;
  ProjectiveRep psi;
  /// U sigma(g) U^* = ind(rho (x) psi)(g).
  Matrix unitary;
  double residual = 0;
};

/// Recovers (H, rho, psi, U) from an Ad sigma-invariant algebra B whose
/// central projections sigma permutes transitively. The stabilizer is that
/// of the projection carrying the most weight on the first basis vector.
ImprimitivitySystem decompose(const ProjectiveRep& sigma, const MatrixStarAlgebra& b,
                              std::uint64_t seed = 1);

} // namespace subfactor

#endif // SUBFACTOR_IMPRIMITIVITY_HPP
