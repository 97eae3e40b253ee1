#ifndef SUBFACTOR_INDUCTION_HPP
#define SUBFACTOR_INDUCTION_HPP

#include "subfactor/character.hpp"
#include "subfactor/group.hpp"
#include "subfactor/rep.hpp"

namespace subfactor {

/// ind(base) on K (x) l2(G/H). Basis vector (a, j), a an index of K and j a
/// coset index in reps order, sits at position a * [G:H] + j.
struct InducedRep
{
  ProjectiveRep base;
  CosetSystem cosets;
  ProjectiveRep total;
};

/// (ind pi)(g) (xi (x) delta_kH) = pi(h(gk)) xi (x) delta_gkH.
InducedRep induce(const ProjectiveRep& pi, const CosetSystem& system);

/// chi_ind(g) = sum over k in reps with k^-1 g k in H of chi_pi(k^-1 g k),
/// evaluated from traces of pi alone.
ClassFunction frobenius_character(const ProjectiveRep& pi, const CosetSystem& system,
                                  const ClassesPtr& group_classes);

/// sigma = ind(conj(psi) (x) psi) from H = psi.domain() up to its parent group.
InducedRep build_sigma(const ProjectiveRep& psi);

/// {g : pi(g) = 1}. Requires an ordinary representation.
Subgroup kernel(const ProjectiveRep& pi, double tol = kTolerance);

} // namespace subfactor

#endif // SUBFACTOR_INDUCTION_HPP
