#include "subfactor/io.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "subfactor/errors.hpp"

namespace subfactor::io {

namespace {

void require_schema(const Json& j, const std::string& what)
{
  if (!j.is_object())
    throw ValidationError(what + ": expected a JSON object", "");
  if (!j.contains("schema"))
    throw ValidationError(what + ": missing schema version", "schema");
  if (!j["schema"].is_number_integer() || j["schema"].get<int>() != kSchemaVersion)
    throw ValidationError(what + ": unsupported schema version (expected 1)", "schema");
}

template <typename T>
T get_field(const Json& j, const std::string& field)
{
  if (!j.contains(field))
    throw ValidationError("missing field '" + field + "'", field);
  try {
    return j.at(field).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("field '" + field + "' has the wrong type: " + e.what(), field);
  }
}

Complex complex_from_json(const Json& j, const std::string& field)
{
  if (j.is_number())
    return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ValidationError("expected a number or [re, im] in '" + field + "'", field);
}

Json complex_to_json(Complex z)
{
  return Json::array({clean(z.real()), clean(z.imag())});
}

Element element_from_json(const Json& j, const FiniteGroup& g, const std::string& field)
{
  std::optional<Element> e;
  if (j.is_string())
    e = g.find(j.get<std::string>());
  else if (j.is_number_integer() && j.get<long long>() >= 0 && j.get<long long>() < g.order())
    e = static_cast<Element>(j.get<long long>());
  if (!e)
    throw ValidationError("unknown group element " + j.dump() + " in '" + field + "'", field);
  return *e;
}

Json labels_of(const FiniteGroup& g, const std::vector<Element>& elements)
{
  Json out = Json::array();
  for (Element e : elements)
    out.push_back(g.label(e));
  return out;
}

Json int_matrix_to_json(const IntMatrix& m)
{
  Json out = Json::array();
  for (const auto& row : m)
    out.push_back(row);
  return out;
}

} // namespace

Json read_json(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot open " + path.string(), "path");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what(), "path");
  }
}

GroupPtr group_from_json(const Json& j)
{
  require_schema(j, "group");
  std::vector<std::string> labels;
  if (j.contains("labels"))
    labels = get_field<std::vector<std::string>>(j, "labels");
  if (j.contains("mult")) {
    auto mult = get_field<std::vector<std::vector<int>>>(j, "mult");
    if (j.contains("order") && get_field<int>(j, "order") != static_cast<int>(mult.size()))
      throw ValidationError("order does not match the size of mult", "order");
    return share(FiniteGroup::from_table(std::move(mult), std::move(labels)));
  }
  if (j.contains("permutations")) {
    auto perms = get_field<std::vector<std::vector<int>>>(j, "permutations");
    if (!labels.empty())
      throw ValidationError("labels are generated for permutation groups", "labels");
    return share(FiniteGroup::from_permutations(perms));
  }
  throw ValidationError("group needs either 'mult' or 'permutations'", "mult");
}

GroupPtr load_group(const std::filesystem::path& path)
{
  try {
    return group_from_json(read_json(path));
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what(), e.field());
  }
}

Json group_to_json(const FiniteGroup& g)
{
  Json j;
  j["schema"] = kSchemaVersion;
  j["order"] = g.order();
  j["mult"] = g.table();
  j["labels"] = g.labels();
  return j;
}

Matrix matrix_from_json(const Json& j, const std::string& field)
{
  if (!j.is_array() || j.empty())
    throw ValidationError("matrix '" + field + "' must be a non-empty array of rows", field);
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty())
    throw ValidationError("matrix '" + field + "' must be a non-empty array of rows", field);
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw ValidationError("matrix '" + field + "' is ragged", field);
    for (Eigen::Index c = 0; c < cols; ++c)
      m(i, c) = complex_from_json(row[static_cast<std::size_t>(c)], field);
  }
  return m;
}

Json matrix_to_json(const Matrix& m)
{
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(complex_to_json(m(i, c)));
    out.push_back(std::move(row));
  }
  return out;
}

ProjectiveRep rep_from_json(const Json& j, const GroupPtr& group, double tol)
{
  require_schema(j, "rep");
  const int dim = get_field<int>(j, "dim");
  if (dim <= 0)
    throw ValidationError("dim must be positive", "dim");
  if (!j.contains("matrices") || !j["matrices"].is_object() || j["matrices"].empty())
    throw ValidationError("'matrices' must be a non-empty object keyed by element", "matrices");

  const FiniteGroup& g = *group;
  std::map<Element, Matrix> given;
  for (const auto& [key, value] : j["matrices"].items()) {
    const std::string field = "matrices." + key;
    const Element e = element_from_json(Json(key), g, field);
    Matrix m = matrix_from_json(value, field);
    if (m.rows() != dim || m.cols() != dim)
      throw ValidationError("matrix for " + key + " is not " + std::to_string(dim) + "x" +
                                std::to_string(dim),
                            field);
    if (!given.emplace(e, std::move(m)).second)
      throw ValidationError("element " + key + " is given twice", field);
  }

  std::vector<Element> keys;
  for (const auto& [e, m] : given)
    keys.push_back(e);
  const Subgroup domain = Subgroup::generated_by(group, keys);

  // Fill in missing elements by right multiplication with the given ones.
  std::map<Element, Matrix> known = given;
  if (!known.count(g.identity()))
    known.emplace(g.identity(), Matrix::Identity(dim, dim));
  std::vector<Element> frontier;
  for (const auto& [e, m] : known)
    frontier.push_back(e);
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element a : frontier)
      for (Element s : keys) {
        const Element b = g.mul(a, s);
        if (!known.count(b)) {
          known.emplace(b, known.at(a) * given.at(s));
          next.push_back(b);
        }
      }
    frontier = std::move(next);
  }

  std::vector<Matrix> mats;
  mats.reserve(domain.elements().size());
  for (Element e : domain.elements())
    mats.push_back(known.at(e));
  ProjectiveRep pi = ProjectiveRep::create(domain, std::move(mats), tol);

  if (j.contains("cocycle")) {
    const Json& c = j["cocycle"];
    if (!c.is_array())
      throw ValidationError("'cocycle' must be a list of [g, h, value]", "cocycle");
    for (const Json& entry : c) {
      if (!entry.is_array() || entry.size() != 3)
        throw ValidationError("'cocycle' entries must be [g, h, value]", "cocycle");
      const Element a = element_from_json(entry[0], g, "cocycle");
      const Element b = element_from_json(entry[1], g, "cocycle");
      if (!domain.contains(a) || !domain.contains(b))
        throw ValidationError("cocycle entry outside the domain", "cocycle");
      const Complex expected = complex_from_json(entry[2], "cocycle");
      if (std::abs(pi.cocycle()(a, b) - expected) > std::max(tol, 1e-9))
        throw ValidationError("declared cocycle value at (" + g.label(a) + ", " + g.label(b) +
                                  ") does not match the matrices",
                              "cocycle");
    }
  }
  return pi;
}

ProjectiveRep load_rep(const std::filesystem::path& path, const GroupPtr& group, double tol)
{
  try {
    return rep_from_json(read_json(path), group, tol);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what(), e.field());
  }
}

Json rep_to_json(const ProjectiveRep& pi)
{
  const Subgroup& h = pi.domain();
  const FiniteGroup& g = h.group();
  Json j;
  j["schema"] = kSchemaVersion;
  j["dim"] = pi.dim();
  Json mats = Json::object();
  for (Element e : h.elements())
    mats[g.label(e)] = matrix_to_json(pi(e));
  j["matrices"] = std::move(mats);
  if (!pi.is_ordinary()) {
    Json c = Json::array();
    for (Element a : h.elements())
      for (Element b : h.elements())
        c.push_back(Json::array({g.label(a), g.label(b), complex_to_json(pi.cocycle()(a, b))}));
    j["cocycle"] = std::move(c);
  }
  return j;
}

MatrixStarAlgebra algebra_from_json(const Json& j, std::uint64_t seed)
{
  require_schema(j, "algebra");
  const int dim = get_field<int>(j, "dim");
  if (dim <= 0)
    throw ValidationError("dim must be positive", "dim");
  if (!j.contains("matrices") || !j["matrices"].is_array())
    throw ValidationError("'matrices' must be a list", "matrices");
  std::vector<Matrix> spanning;
  for (std::size_t i = 0; i < j["matrices"].size(); ++i) {
    const std::string field = "matrices[" + std::to_string(i) + "]";
    Matrix m = matrix_from_json(j["matrices"][i], field);
    if (m.rows() != dim || m.cols() != dim)
      throw ValidationError(field + " is not " + std::to_string(dim) + "x" + std::to_string(dim),
                            field);
    spanning.push_back(std::move(m));
  }
  return MatrixStarAlgebra::generate(dim, spanning, seed);
}

MatrixStarAlgebra load_algebra(const std::filesystem::path& path, std::uint64_t seed)
{
  try {
    return algebra_from_json(read_json(path), seed);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what(), e.field());
  }
}

Json subgroup_to_json(const Subgroup& h)
{
  return labels_of(h.group(), h.elements());
}

Json tower_to_json(const TowerReport& t)
{
  Json j;
  j["sigma_dim"] = t.sigma_dim;
  j["index"] = t.index;
  j["depth"] = t.depth;
  j["upper_dims"] = t.upper_dims;
  j["lower_dims"] = t.lower_dims;
  j["upper_multiplicities"] = int_matrix_to_json(t.upper_multiplicities);
  j["lower_multiplicities"] = int_matrix_to_json(t.lower_multiplicities);
  Json inc = Json::array();
  for (const auto& m : t.inclusion_matrices)
    inc.push_back(int_matrix_to_json(m));
  j["inclusion_matrices"] = std::move(inc);
  return j;
}

Json graph_to_json(const PrincipalGraph& g)
{
  Json j;
  j["depth"] = g.depth;
  j["even"] = g.even;
  j["odd"] = g.odd;
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back(Json::array({e.even, e.odd, e.multiplicity}));
  j["edges"] = std::move(edges);
  j["irreducible_degrees"] = g.irreducible_degrees;
  j["first_level"] = g.first_level;
  j["degree_sequence"] = g.degree_sequence();
  if (!g.warning.empty())
    j["warning"] = g.warning;
  return j;
}

Json record_to_json(const ClassificationRecord& rec)
{
  Json j;
  j["group_order"] = rec.subgroup.group().order();
  j["subgroup"] = subgroup_to_json(rec.subgroup);
  j["psi"] = rec.psi_label;
  j["r"] = rec.r;
  j["normal_core"] = subgroup_to_json(rec.normal_core);
  j["psi_projective_kernel"] = subgroup_to_json(rec.psi_projective_kernel);
  j["condition_holds"] = rec.condition_holds;
  j["kernel_K"] = subgroup_to_json(rec.kernel_K);
  j["category_is_UG"] = rec.category_is_UG;
  j["index"] = rec.index;
  j["irreducible"] = rec.irreducible;
  j["rel_commutant_dim"] = rec.rel_commutant_dim;
  j["sigma_dim"] = rec.sigma_dim;
  j["depth"] = rec.graph.depth;
  j["generator"] = {{"self_conjugate", rec.generator.self_conjugate},
                    {"proper_unit", rec.generator.proper_unit},
                    {"generates_category", rec.generator.generates_category}};
  j["tower"] = tower_to_json(rec.tower);
  j["graph"] = graph_to_json(rec.graph);
  j["fingerprint"] = {{"index", rec.fingerprint.index},
                      {"depth", rec.fingerprint.depth},
                      {"degrees", rec.fingerprint.degrees}};
  if (rec.fingerprint_class >= 0) {
    j["fingerprint_class"] = rec.fingerprint_class;
    j["possibly_isomorphic"] = rec.possibly_isomorphic;
  }
  return j;
}

Json system_to_json(const ImprimitivitySystem& sys)
{
  Json j;
  j["stabilizer"] = subgroup_to_json(sys.stabilizer);
  j["cosets"] = labels_of(sys.stabilizer.group(), sys.cosets.reps());
  j["projections"] = sys.projections.size();
  j["action"] = sys.action;
  j["d"] = sys.d;
  j["r"] = sys.r;
  j["rho"] = rep_to_json(sys.rho);
  j["psi"] = rep_to_json(sys.psi);
  j["unitary"] = matrix_to_json(sys.unitary);
  j["residual"] = sys.residual;
  return j;
}

std::string graph_to_dot(const PrincipalGraph& g, const std::string& name)
{
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  label=\"depth " << g.depth << "\";\n";
  out << "  node [shape=circle];\n";
  auto vertex = [&](char side, int i) {
    out << "  " << side << i << " [label=\"" << i << "\\nd=" << g.irreducible_degrees[i];
    // first_level is per irreducible; show it on the side where it was reached
    if (g.first_level[i] >= 0 && (g.first_level[i] % 2 == 0) == (side == 'e'))
      out << "\\nlevel " << g.first_level[i];
    out << "\"";
    if (side == 'e' && i == 0)
      out << ", shape=doublecircle";
    out << "];\n";
  };
  for (int i : g.even)
    vertex('e', i);
  for (int i : g.odd)
    vertex('o', i);
  for (const auto& e : g.edges) {
    out << "  e" << e.even << " -- o" << e.odd;
    if (e.multiplicity > 1)
      out << " [label=\"" << e.multiplicity << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string tower_to_table(const TowerReport& t)
{
  std::ostringstream out;
  out << "dim sigma " << t.sigma_dim << ", index " << t.index << ", depth " << t.depth << "\n";
  out << std::setw(6) << "level" << std::setw(20) << "upper" << std::setw(20) << "lower" << "\n";
  for (std::size_t n = 0; n < t.upper_dims.size(); ++n)
    out << std::setw(6) << n << std::setw(20) << t.upper_dims[n] << std::setw(20)
        << t.lower_dims[n] << "\n";
  return out.str();
}

std::string record_to_table(const ClassificationRecord& rec)
{
  std::ostringstream out;
  auto flag = [](bool b) { return b ? "yes" : "no"; };
  out << "H            " << rec.subgroup.describe() << "\n";
  out << "psi          " << rec.psi_label << " (r = " << rec.r << ")\n";
  out << "N(H)         " << rec.normal_core.describe() << "\n";
  out << "condition    " << flag(rec.condition_holds) << "\n";
  out << "ker sigma    " << rec.kernel_K.describe() << "\n";
  out << "category UG  " << flag(rec.category_is_UG) << "\n";
  out << "index        " << rec.index << "\n";
  out << "irreducible  " << flag(rec.irreducible) << " (commutant " << rec.rel_commutant_dim
      << ")\n";
  out << "depth        " << rec.graph.depth << "\n";
  if (rec.possibly_isomorphic)
    out << "note         shares fingerprint class " << rec.fingerprint_class
        << "; isomorphism not decided\n";
  return out.str();
}

std::string records_to_table(const std::vector<ClassificationRecord>& recs)
{
  std::ostringstream out;
  out << std::left << std::setw(28) << "H" << std::setw(12) << "psi" << std::setw(4) << "r"
      << std::setw(8) << "index" << std::setw(7) << "depth" << std::setw(6) << "cond"
      << std::setw(6) << "irr" << "class\n";
  for (const auto& rec : recs) {
    out << std::setw(28) << rec.subgroup.describe() + " " << std::setw(12) << rec.psi_label + " "
        << std::setw(4) << rec.r << std::setw(8) << rec.index << std::setw(7) << rec.graph.depth
        << std::setw(6) << (rec.condition_holds ? "yes" : "no") << std::setw(6)
        << (rec.irreducible ? "yes" : "no") << rec.fingerprint_class
        << (rec.possibly_isomorphic ? " *" : "") << "\n";
  }
  return out.str();
}

std::string dump(const Json& j)
{
  return j.dump(2) + "\n";
}

} // namespace subfactor::io
