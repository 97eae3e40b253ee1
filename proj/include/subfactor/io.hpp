#ifndef SUBFACTOR_IO_HPP
#define SUBFACTOR_IO_HPP

#include <filesystem>
#include <string>

#include "json.hpp"

#include "subfactor/classification.hpp"
#include "subfactor/imprimitivity.hpp"
#include "subfactor/tower.hpp"

namespace subfactor::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Parses a file; ValidationError names the path on failure.
Json read_json(const std::filesystem::path& path);

/// {"schema":1, "order", "mult", "labels"?} or
/// {"schema":1, "permutations": [[images]...] (0-based), "labels"?}.
GroupPtr group_from_json(const Json& j);
GroupPtr load_group(const std::filesystem::path& path);
Json group_to_json(const FiniteGroup& g);

/// {"schema":1, "dim", "matrices": {label: [[[re, im], ...], ...]},
///  "cocycle"?: [[g, h, [re, im]], ...]}
/// Keys are element labels (or decimal indices) of the group. If the keys do
/// not form a subgroup, they are read as generators and the remaining
/// matrices are filled in by products. A given cocycle must match the
/// recovered one within tol.
ProjectiveRep rep_from_json(const Json& j, const GroupPtr& group, double tol = kTolerance);
ProjectiveRep load_rep(const std::filesystem::path& path, const GroupPtr& group,
                       double tol = kTolerance);
Json rep_to_json(const ProjectiveRep& pi);

/// {"schema":1, "dim", "matrices": [matrix, ...]} spanning the algebra.
MatrixStarAlgebra algebra_from_json(const Json& j, std::uint64_t seed = 1);
MatrixStarAlgebra load_algebra(const std::filesystem::path& path, std::uint64_t seed = 1);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& field);

Json subgroup_to_json(const Subgroup& h);
Json tower_to_json(const TowerReport& t);
Json graph_to_json(const PrincipalGraph& g);
Json record_to_json(const ClassificationRecord& rec);
Json system_to_json(const ImprimitivitySystem& sys);

/// Deterministic Graphviz rendering with depth and degree annotations.
std::string graph_to_dot(const PrincipalGraph& g, const std::string& name = "principal");

std::string tower_to_table(const TowerReport& t);
std::string record_to_table(const ClassificationRecord& rec);
std::string records_to_table(const std::vector<ClassificationRecord>& recs);

/// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const Json& j);

} // namespace subfactor::io

#endif // SUBFACTOR_IO_HPP
