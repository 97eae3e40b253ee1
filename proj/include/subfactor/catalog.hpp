#ifndef SUBFACTOR_CATALOG_HPP
#define SUBFACTOR_CATALOG_HPP

#include "subfactor/group.hpp"
#include "subfactor/rep.hpp"

// Small named groups used by fixtures, tests and the self-test corpus.
namespace subfactor::catalog {

GroupPtr cyclic(int n);
/// Z2 x Z2 with elements 00, 10, 01, 11 (index = a + 2b).
GroupPtr klein_four();
/// Symmetric group on n points as a permutation group.
GroupPtr symmetric(int n);
/// Dihedral group of order 2n acting on the vertices of an n-gon.
GroupPtr dihedral(int n);
/// Quaternion group {1, -1, i, -i, j, -j, k, -k}.
GroupPtr quaternion();
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// The Pauli projective representation of a Klein four subgroup {e, a, b, ab}
/// (a < b the two smallest non-identity elements): a -> X, b -> Y, ab -> Z.
ProjectiveRep pauli(const Subgroup& klein);

/// Whether h is isomorphic to Z2 x Z2.
bool is_klein_four(const Subgroup& h);

} // namespace subfactor::catalog

#endif // SUBFACTOR_CATALOG_HPP
