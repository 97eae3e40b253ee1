#ifndef SUBFACTOR_REP_HPP
#define SUBFACTOR_REP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "subfactor/character.hpp"
#include "subfactor/group.hpp"
#include "subfactor/linalg.hpp"

namespace subfactor {

/// A T-valued 2-cocycle on a domain, c(g,h) stored by subgroup position.
class Cocycle
{
public:
  Cocycle(Subgroup domain, Matrix values);
  static Cocycle trivial(Subgroup domain);

  const Subgroup& domain() const { return domain_; }
  Complex operator()(Element g, Element h) const
  { return values_(domain_.position(g), domain_.position(h)); }
  const Matrix& values() const { return values_; }

  bool is_trivial(double tol = kTolerance) const;
  /// |c| = 1 everywhere and c(g,h)c(gh,k) = c(g,hk)c(h,k) for all triples.
  bool is_cocycle(double tol = kTolerance) const;

  Cocycle conj() const { return {domain_, values_.conjugate()}; }
  friend Cocycle operator*(const Cocycle& a, const Cocycle& b);
  /// Max |a(g,h) - b(g,h)|.
  friend double distance(const Cocycle& a, const Cocycle& b);

private:
  Subgroup domain_;
  Matrix values_;
};

/// A unitary projective representation, normalised so that pi(e) = 1,
/// with c(g,h) pi(g) pi(h) = pi(gh).
class ProjectiveRep
{
public:
  /// Validates the matrices (one per domain element, in domain order) and
  /// recovers the cocycle. A scalar pi(e) is replaced by the identity.
  static ProjectiveRep create(Subgroup domain, std::vector<Matrix> matrices,
                              double tol = kTolerance);

  const Subgroup& domain() const { return domain_; }
  int dim() const { return dim_; }
  const Matrix& operator()(Element g) const { return matrices_[domain_.position(g)]; }
  const std::vector<Matrix>& matrices() const { return matrices_; }
  const Cocycle& cocycle() const { return cocycle_; }
  bool is_ordinary(double tol = kTolerance) const { return cocycle_.is_trivial(tol); }

  ProjectiveRep conjugate() const;
  ProjectiveRep restrict_to(const Subgroup& sub) const;
  /// W pi(g) W^* for a unitary W.
  ProjectiveRep transformed(const Matrix& w) const;

  /// Builds without validation. Only for operations whose output cocycle is
  /// known by construction (tensor products, induction).
  static ProjectiveRep trusted(Subgroup domain, std::vector<Matrix> matrices, Cocycle cocycle);

private:
  ProjectiveRep(Subgroup domain, int dim, std::vector<Matrix> matrices, Cocycle cocycle);

  Subgroup domain_;
  int dim_;
  std::vector<Matrix> matrices_;
  Cocycle cocycle_;
};

/// Recovers c(g,h) as the scalar with pi(gh) = c(g,h) pi(g) pi(h). Throws
/// ValidationError for non-unitary or non-projective input.
Cocycle validate(const Subgroup& domain, const std::vector<Matrix>& matrices,
                 double tol = kTolerance);

ProjectiveRep tensor(const ProjectiveRep& a, const ProjectiveRep& b);
ProjectiveRep direct_sum(const ProjectiveRep& a, const ProjectiveRep& b);

ProjectiveRep trivial_rep(const Subgroup& domain, int dim = 1);
/// Left-regular permutation representation.
ProjectiveRep regular_rep(const Subgroup& domain);

/// Degree-1 ordinary characters of the domain as 1x1 representations, in
/// character-table order, values snapped to |domain|-th roots of unity.
/// Their number is checked against [H : [H,H]].
std::vector<ProjectiveRep> linear_characters(const Subgroup& domain, std::uint64_t seed = 1);

/// Trace per conjugacy class. Requires a trivial cocycle.
ClassFunction character(const ProjectiveRep& pi, const ClassesPtr& classes);
ClassFunction character(const ProjectiveRep& pi);

/// Multiplicity of an irreducible character in an ordinary representation.
long long multiplicity(const ClassFunction& irreducible, const ProjectiveRep& pi);

/// dim {A : A pi(g) = pi(g) A for all g}, as the null space of the stacked
/// commutation system over a generating set. Large dimensions fall back to
/// a randomized range finder for the averaging projector.
int commutant_dimension(const ProjectiveRep& pi, std::uint64_t seed = 1);

/// (1/|H|) sum |tr pi(h)|^2, which equals the commutant dimension for any
/// unitary projective representation.
double character_norm(const ProjectiveRep& pi);

/// {g in restrict_to : pi(g) is scalar}.
Subgroup projective_kernel(const ProjectiveRep& pi, const Subgroup& restrict_to,
                           double tol = kTolerance);

struct Equivalence
{
  bool equivalent = false;
  /// U with U pi1(g) U^* = mu(g) pi2(g).
  Matrix witness;
  /// Index of the linear character mu used (-1 for mu = 1).
  int twist = -1;
};

/// Unitary U with U pi1(g) U^* = pi2(g) for all g. Requires equal
/// dimension; different cocycles give a negative answer.
Equivalence strictly_equivalent(const ProjectiveRep& a, const ProjectiveRep& b,
                                std::uint64_t seed = 1, double tol = kTolerance);

/// Same, allowing mu to range over the degree-1 ordinary characters.
Equivalence twist_equivalent(const ProjectiveRep& a, const ProjectiveRep& b,
                             std::uint64_t seed = 1, double tol = kTolerance);

/// Rescales pi by a phase function mu so that its cocycle becomes target,
/// when the two cocycles differ by a coboundary. Searches the finitely many
/// phase choices on a generating set, so it is meant for small domains.
std::optional<ProjectiveRep> align_cocycle(const ProjectiveRep& pi, const Cocycle& target,
                                           double tol = 1e-7);

/// A small generating set of the domain (greedy, in element order).
std::vector<Element> generating_set(const Subgroup& domain);

} // namespace subfactor

#endif // SUBFACTOR_REP_HPP
