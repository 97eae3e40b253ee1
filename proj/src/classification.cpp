#include "subfactor/classification.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "subfactor/errors.hpp"
#include "subfactor/induction.hpp"

namespace subfactor {

bool check_condition(const ProjectiveRep& psi)
{
  return projective_kernel(psi, core(psi.domain())).is_trivial();
}

ClassificationRecord report(const ProjectiveRep& psi, const ReportOptions& options,
                            std::string psi_label)
{
  return report(psi, character_table(psi.domain().parent(), options.seed), options,
                std::move(psi_label));
}

ClassificationRecord report(const ProjectiveRep& psi, const CharacterTable& table,
                            const ReportOptions& options, std::string psi_label)
{
  const Subgroup& h = psi.domain();
  const Subgroup n_h = core(h);
  const InducedRep sigma = build_sigma(psi);
  const ProjectiveRep& s = sigma.total;

  ClassificationRecord rec{
      .subgroup = h,
      .psi = psi,
      .psi_label = std::move(psi_label),
      .r = psi.dim(),
      .normal_core = n_h,
      .psi_projective_kernel = projective_kernel(psi, n_h),
      .kernel_K = kernel(s),
  };
  rec.condition_holds = rec.psi_projective_kernel.is_trivial();
  rec.category_is_UG = generates(s, table);
  rec.index = static_cast<long long>(h.index()) * psi.dim() * psi.dim();
  rec.rel_commutant_dim = commutant_dimension(psi, options.seed);
  const double norm = character_norm(psi);
  rec.irreducible = std::abs(norm - 1.0) < 1e-6;
  rec.sigma_dim = s.dim();
  rec.generator = check_generator_properties(s, table, options.seed);
  rec.tower = tower(s, options.n_max, table);
  rec.graph = principal_graph(s, table, options.seed);
  rec.fingerprint = {rec.index, rec.graph.depth, rec.graph.degree_sequence()};

  // ker ind(rho) is the G-core of ker rho; this holds for every psi.
  const Subgroup kernel_core = core(projective_kernel(psi, h));
  if (!(rec.kernel_K == kernel_core))
    throw InconsistencyError("ker sigma " + rec.kernel_K.describe() +
                             " differs from the G-core of proj ker psi " + kernel_core.describe());
  const bool kernel_trivial = rec.kernel_K.is_trivial();
  if (kernel_trivial != rec.category_is_UG)
    throw InconsistencyError("generation by sigma (" + std::to_string(rec.category_is_UG) +
                             ") disagrees with triviality of ker sigma for H = " + h.describe());
  if (!(rec.kernel_K == rec.psi_projective_kernel))
    throw InconsistencyError(
        "ker sigma " + rec.kernel_K.describe() + " differs from proj ker psi|N(H) " +
        rec.psi_projective_kernel.describe() +
        "; the latter is not normal in G, so K = proj ker psi|N(H) fails for this psi");
  if (rec.condition_holds != kernel_trivial)
    throw InconsistencyError("condition on psi (" + std::to_string(rec.condition_holds) +
                             ") and trivial kernel of sigma (" + std::to_string(kernel_trivial) +
                             ") disagree for H = " + h.describe());
  if (rec.irreducible != (rec.rel_commutant_dim == 1) ||
      std::abs(norm - rec.rel_commutant_dim) > 1e-6)
    throw InconsistencyError("commutant dimension " + std::to_string(rec.rel_commutant_dim) +
                             " disagrees with the character norm " + std::to_string(norm));
  if (rec.tower.index != static_cast<long long>(rec.sigma_dim) * rec.sigma_dim)
    throw InconsistencyError("tower index differs from (dim sigma)^2");
  return rec;
}

namespace {

bool record_less(const ClassificationRecord& a, const ClassificationRecord& b)
{
  if (a.index != b.index)
    return a.index < b.index;
  if (a.graph.depth != b.graph.depth)
    return a.graph.depth < b.graph.depth;
  if (a.subgroup.order() != b.subgroup.order())
    return a.subgroup.order() < b.subgroup.order();
  if (a.subgroup.elements() != b.subgroup.elements())
    return a.subgroup.elements() < b.subgroup.elements();
  return a.psi_label < b.psi_label;
}

} // namespace

std::vector<ClassificationRecord> enumerate(const GroupPtr& group, const EnumerateOptions& options)
{
  const CharacterTable table = character_table(group, options.report.seed);
  const auto subgroups = options.up_to_conjugacy
                             ? subgroups_up_to_conjugacy(group, options.subgroup_cap)
                             : all_subgroups(group, options.subgroup_cap);
  std::vector<ClassificationRecord> records;
  for (const Subgroup& h : subgroups) {
    const auto chars = linear_characters(h, options.report.seed);
    for (std::size_t i = 0; i < chars.size(); ++i)
      records.push_back(report(chars[i], table, options.report,
                               i == 0 ? "trivial" : "linear:" + std::to_string(i)));
  }
  for (const auto& [label, psi] : options.extra) {
    if (psi.domain().parent() != group && !(psi.domain().group() == *group))
      throw ValidationError("representation '" + label + "' is not defined on a subgroup of G");
    records.push_back(report(psi, table, options.report, label));
  }
  std::sort(records.begin(), records.end(), record_less);

  std::map<Fingerprint, int> classes;
  std::map<Fingerprint, int> counts;
  for (const auto& rec : records)
    ++counts[rec.fingerprint];
  for (auto& rec : records) {
    auto [it, fresh] = classes.emplace(rec.fingerprint, static_cast<int>(classes.size()));
    rec.fingerprint_class = it->second;
    rec.possibly_isomorphic = counts[rec.fingerprint] > 1;
  }
  return records;
}

} // namespace subfactor
