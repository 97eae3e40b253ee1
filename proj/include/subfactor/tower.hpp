#ifndef SUBFACTOR_TOWER_HPP
#define SUBFACTOR_TOWER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "subfactor/character.hpp"
#include "subfactor/rep.hpp"

namespace subfactor {

using IntMatrix = std::vector<std::vector<long long>>;

/// fusion[i][j] = multiplicity of irreducible j in chi_i (x) chi. Rounded
/// once from character inner products; everything downstream is integral.
IntMatrix fusion_matrix(const CharacterTable& table, const ClassFunction& chi);

/// Bipartite fusion graph of tensoring by sigma, grown from the trivial
/// character. Even vertices come from words of even length, odd vertices
/// from odd length.
struct PrincipalGraph
{
  struct Edge
  {
    int even;
    int odd;
    long long multiplicity;
  };

  std::vector<int> even;
  std::vector<int> odd;
  std::vector<Edge> edges;
  /// Irreducible degree per character-table row, for labelling.
  std::vector<int> irreducible_degrees;
  /// Level at which each irreducible is first reached, -1 if never.
  std::vector<int> first_level;
  /// 1 + number of fusion steps until the reached set stops growing.
  int depth = 1;
  /// Non-empty when sigma is not self-conjugate.
  std::string warning;

  /// Sum of incident edge multiplicities per vertex, ascending.
  std::vector<long long> degree_sequence() const;
};

/// Intertwiner-algebra dimensions along the two towers of alternating words
/// sigma sigma-bar sigma ... (upper) and sigma-bar sigma ... (lower), levels
/// 0..n_max.
struct TowerReport
{
  int sigma_dim = 0;
  std::vector<long long> upper_dims;
  std::vector<long long> lower_dims;
  /// multiplicities[n][i] of irreducible i in the upper word of length n.
  IntMatrix upper_multiplicities;
  IntMatrix lower_multiplicities;
  /// Bratteli inclusion level n -> n+1 of the upper tower:
  /// m(n+1) = inclusion[n]^T m(n).
  std::vector<IntMatrix> inclusion_matrices;
  int depth = 1;
  /// d(sigma)^2 = (dim sigma)^2.
  long long index = 1;
};

TowerReport tower(const ProjectiveRep& sigma, int n_max, const CharacterTable& table);
TowerReport tower(const ProjectiveRep& sigma, int n_max);

PrincipalGraph principal_graph(const ProjectiveRep& sigma, const CharacterTable& table,
                               std::uint64_t seed = 1);
PrincipalGraph principal_graph(const ProjectiveRep& sigma);

/// Irreducibles occurring in some word in sigma, sigma-bar; conjugate-closed.
std::vector<int> closure_irreducibles(const ProjectiveRep& sigma, const CharacterTable& table);

struct GeneratorProperties
{
  bool self_conjugate = false;       ///< (a) sigma = sigma-bar
  bool proper_unit = false;          ///< (b) iota is a proper subobject of sigma
  bool generates_category = false;   ///< (c) closure is every irreducible
};

GeneratorProperties check_generator_properties(const ProjectiveRep& sigma,
                                               const CharacterTable& table,
                                               std::uint64_t seed = 1);

/// Whether every irreducible of G occurs in some tensor power of sigma.
bool generates(const ProjectiveRep& sigma, const CharacterTable& table);

} // namespace subfactor

#endif // SUBFACTOR_TOWER_HPP
