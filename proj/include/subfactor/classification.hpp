#ifndef SUBFACTOR_CLASSIFICATION_HPP
#define SUBFACTOR_CLASSIFICATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subfactor/character.hpp"
#include "subfactor/group.hpp"
#include "subfactor/rep.hpp"
#include "subfactor/tower.hpp"

namespace subfactor {

/// (index, depth, sorted principal-graph degree sequence).
struct Fingerprint
{
  long long index = 0;
  int depth = 0;
  std::vector<long long> degrees;

  auto operator<=>(const Fingerprint&) const = default;
};

/// Invariants of R^G in (R (x) L(C^r))^H for data (G, H, psi).
struct ClassificationRecord
{
  Subgroup subgroup;
  ProjectiveRep psi;
  std::string psi_label;
  int r = 0;
  Subgroup normal_core;
  Subgroup psi_projective_kernel;
  /// proj ker psi restricted to N(H) is trivial.
  bool condition_holds = false;
  /// Kernel of sigma = ind(conj(psi) (x) psi).
  Subgroup kernel_K;
  /// Every irreducible of G occurs in a tensor power of sigma.
  bool category_is_UG = false;
  /// [G:H] r^2
  long long index = 0;
  bool irreducible = false;
  int rel_commutant_dim = 0;
  int sigma_dim = 0;
  GeneratorProperties generator;
  TowerReport tower;
  PrincipalGraph graph;
  Fingerprint fingerprint;
  /// Position of this record's fingerprint class in the enumeration.
  int fingerprint_class = -1;
  /// Another record shares the fingerprint; isomorphism is not decided.
  bool possibly_isomorphic = false;
};

struct ReportOptions
{
  int n_max = 6;
  std::uint64_t seed = 1;
};

/// proj ker (psi | N(H)) = {e}.
bool check_condition(const ProjectiveRep& psi);

/// Builds every field. The three routes to "the category is U_G" (the
/// condition on psi, triviality of ker sigma, and generation by sigma) and
/// the two routes to irreducibility must agree; otherwise throws
/// InconsistencyError.
ClassificationRecord report(const ProjectiveRep& psi, const CharacterTable& table,
                            const ReportOptions& options = {}, std::string psi_label = {});
ClassificationRecord report(const ProjectiveRep& psi, const ReportOptions& options = {},
                            std::string psi_label = {});

struct EnumerateOptions
{
  ReportOptions report;
  bool up_to_conjugacy = true;
  std::size_t subgroup_cap = kDefaultSubgroupCap;
  /// Extra projective representations of subgroups (any dimension).
  std::vector<std::pair<std::string, ProjectiveRep>> extra;
};

/// Records for every subgroup H (up to conjugacy by default) with every
/// degree-1 character of H, plus the extra representations. Sorted by
/// (index, depth) and then by subgroup and label; records sharing a
/// fingerprint are grouped and flagged.
std::vector<ClassificationRecord> enumerate(const GroupPtr& group,
                                            const EnumerateOptions& options = {});

} // namespace subfactor

#endif // SUBFACTOR_CLASSIFICATION_HPP
