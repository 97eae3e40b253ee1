#include "subfactor/rep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "subfactor/errors.hpp"

namespace subfactor {

namespace {

void require_same_domain(const Subgroup& a, const Subgroup& b, const char* what)
{
  if (a.elements() != b.elements() || !(a.group() == b.group()))
    throw ValidationError(std::string(what) + ": representations live on different groups");
}

} // namespace

Cocycle::Cocycle(Subgroup domain, Matrix values)
: domain_(std::move(domain)), values_(std::move(values))
{
  if (values_.rows() != domain_.order() || values_.cols() != domain_.order())
    throw ValidationError("cocycle table has the wrong size", "cocycle");
}

Cocycle Cocycle::trivial(Subgroup domain)
{
  const int n = domain.order();
  return {std::move(domain), Matrix::Ones(n, n)};
}

bool Cocycle::is_trivial(double tol) const
{
  return max_abs(values_ - Matrix::Ones(values_.rows(), values_.cols())) < tol;
}

bool Cocycle::is_cocycle(double tol) const
{
  const FiniteGroup& g = domain_.group();
  if (max_abs(values_.cwiseAbs() - Eigen::MatrixXd::Ones(values_.rows(), values_.cols())) >= tol)
    return false;
  const auto& el = domain_.elements();
  for (Element a : el)
    for (Element b : el)
      for (Element c : el) {
        const Complex lhs = (*this)(a, b) * (*this)(g.mul(a, b), c);
        const Complex rhs = (*this)(a, g.mul(b, c)) * (*this)(b, c);
        if (std::abs(lhs - rhs) >= tol)
          return false;
      }
  return true;
}

Cocycle operator*(const Cocycle& a, const Cocycle& b)
{
  require_same_domain(a.domain_, b.domain_, "cocycle product");
  return {a.domain_, a.values_.cwiseProduct(b.values_)};
}

double distance(const Cocycle& a, const Cocycle& b)
{
  require_same_domain(a.domain_, b.domain_, "cocycle distance");
  return max_abs(a.values_ - b.values_);
}

ProjectiveRep::ProjectiveRep(Subgroup domain, int dim, std::vector<Matrix> matrices,
                             Cocycle cocycle)
: domain_(std::move(domain)), dim_(dim), matrices_(std::move(matrices)),
  cocycle_(std::move(cocycle))
{}

ProjectiveRep ProjectiveRep::trusted(Subgroup domain, std::vector<Matrix> matrices,
                                     Cocycle cocycle)
{
  const int dim = matrices.empty() ? 0 : static_cast<int>(matrices.front().rows());
  return {std::move(domain), dim, std::move(matrices), std::move(cocycle)};
}

Cocycle validate(const Subgroup& domain, const std::vector<Matrix>& matrices, double tol)
{
  const int n = domain.order();
  if (static_cast<int>(matrices.size()) != n)
    throw ValidationError("expected one matrix per group element", "matrices");
  const Eigen::Index dim = matrices.front().rows();
  if (dim == 0)
    throw ValidationError("representation dimension must be positive", "dim");
  for (int p = 0; p < n; ++p) {
    if (matrices[p].rows() != dim || matrices[p].cols() != dim)
      throw ValidationError("matrix for element " + domain.group().label(domain.at(p)) +
                                " has the wrong shape", "matrices");
    if (!is_unitary(matrices[p], tol))
      throw ValidationError("matrix for element " + domain.group().label(domain.at(p)) +
                                " is not unitary", "matrices");
  }
  const FiniteGroup& g = domain.group();
  Matrix values(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const Element a = domain.at(p), b = domain.at(q);
      const Matrix& ab = matrices[domain.position(g.mul(a, b))];
      const Matrix ratio = ab * matrices[q].adjoint() * matrices[p].adjoint();
      const auto c = scalar_value(ratio, tol);
      if (!c)
        throw ValidationError("not a projective representation: pi(gh) (pi(g) pi(h))^-1 is not "
                              "scalar for g=" + g.label(a) + ", h=" + g.label(b), "matrices");
      if (std::abs(std::abs(*c) - 1.0) >= tol)
        throw ValidationError("cocycle value is not of unit modulus", "matrices");
      values(p, q) = *c;
    }
  return {domain, std::move(values)};
}

ProjectiveRep ProjectiveRep::create(Subgroup domain, std::vector<Matrix> matrices, double tol)
{
  if (static_cast<int>(matrices.size()) != domain.order())
    throw ValidationError("expected one matrix per group element", "matrices");
  Matrix& unit = matrices[domain.position(domain.group().identity())];
  const auto lambda = scalar_value(unit, tol);
  if (!lambda)
    throw ValidationError("pi(e) is not scalar", "matrices");
  unit = Matrix::Identity(unit.rows(), unit.cols());
  auto c = validate(domain, matrices, tol);
  const int dim = static_cast<int>(matrices.front().rows());
  return {std::move(domain), dim, std::move(matrices), std::move(c)};
}

ProjectiveRep ProjectiveRep::conjugate() const
{
  std::vector<Matrix> mats;
  mats.reserve(matrices_.size());
  for (const auto& m : matrices_)
    mats.push_back(m.conjugate());
  return trusted(domain_, std::move(mats), cocycle_.conj());
}

ProjectiveRep ProjectiveRep::restrict_to(const Subgroup& sub) const
{
  if (!sub.is_subgroup_of(domain_))
    throw ValidationError("restriction target is not a subgroup of the domain", "subgroup");
  std::vector<Matrix> mats;
  Matrix c(sub.order(), sub.order());
  for (int p = 0; p < sub.order(); ++p) {
    mats.push_back((*this)(sub.at(p)));
    for (int q = 0; q < sub.order(); ++q)
      c(p, q) = cocycle_(sub.at(p), sub.at(q));
  }
  return trusted(sub, std::move(mats), Cocycle(sub, std::move(c)));
}

ProjectiveRep ProjectiveRep::transformed(const Matrix& w) const
{
  std::vector<Matrix> mats;
  mats.reserve(matrices_.size());
  for (const auto& m : matrices_)
    mats.push_back(w * m * w.adjoint());
  return trusted(domain_, std::move(mats), cocycle_);
}

ProjectiveRep tensor(const ProjectiveRep& a, const ProjectiveRep& b)
{
  require_same_domain(a.domain(), b.domain(), "tensor");
  std::vector<Matrix> mats;
  mats.reserve(a.matrices().size());
  for (std::size_t p = 0; p < a.matrices().size(); ++p)
    mats.push_back(kron(a.matrices()[p], b.matrices()[p]));
  return ProjectiveRep::trusted(a.domain(), std::move(mats), a.cocycle() * b.cocycle());
}

ProjectiveRep direct_sum(const ProjectiveRep& a, const ProjectiveRep& b)
{
  require_same_domain(a.domain(), b.domain(), "direct_sum");
  if (distance(a.cocycle(), b.cocycle()) > 1e-7)
    throw ValidationError("direct_sum: cocycles differ");
  std::vector<Matrix> mats;
  for (std::size_t p = 0; p < a.matrices().size(); ++p) {
    Matrix m = Matrix::Zero(a.dim() + b.dim(), a.dim() + b.dim());
    m.topLeftCorner(a.dim(), a.dim()) = a.matrices()[p];
    m.bottomRightCorner(b.dim(), b.dim()) = b.matrices()[p];
    mats.push_back(std::move(m));
  }
  return ProjectiveRep::trusted(a.domain(), std::move(mats), a.cocycle());
}

ProjectiveRep trivial_rep(const Subgroup& domain, int dim)
{
  std::vector<Matrix> mats(domain.order(), Matrix::Identity(dim, dim));
  return ProjectiveRep::trusted(domain, std::move(mats), Cocycle::trivial(domain));
}

ProjectiveRep regular_rep(const Subgroup& domain)
{
  const int n = domain.order();
  const FiniteGroup& g = domain.group();
  std::vector<Matrix> mats;
  for (Element h : domain.elements()) {
    Matrix m = Matrix::Zero(n, n);
    for (int x = 0; x < n; ++x)
      m(domain.position(g.mul(h, domain.at(x))), x) = 1.0;
    mats.push_back(std::move(m));
  }
  return ProjectiveRep::trusted(domain, std::move(mats), Cocycle::trivial(domain));
}

std::vector<ProjectiveRep> linear_characters(const Subgroup& domain, std::uint64_t seed)
{
  const CharacterTable table = character_table(domain, seed);
  const int n = domain.order();
  std::vector<ProjectiveRep> out;
  for (int i = 0; i < table.size(); ++i) {
    if (table.degrees[i] != 1)
      continue;
    std::vector<Matrix> mats;
    for (Element h : domain.elements()) {
      const double turns = std::arg(table.rows[i](h)) * n / (2 * std::numbers::pi);
      const double angle = 2 * std::numbers::pi * std::round(turns) / n;
      mats.push_back(Matrix::Constant(1, 1, std::polar(1.0, angle)));
    }
    out.push_back(ProjectiveRep::trusted(domain, std::move(mats), Cocycle::trivial(domain)));
  }
  const int expected = domain.order() / derived_subgroup(domain).order();
  if (static_cast<int>(out.size()) != expected)
    throw InconsistencyError("found " + std::to_string(out.size()) +
                             " linear characters but [H:[H,H]] = " + std::to_string(expected));
  return out;
}

ClassFunction character(const ProjectiveRep& pi, const ClassesPtr& classes)
{
  if (!pi.is_ordinary())
    throw ValidationError("character: representation has a nontrivial cocycle");
  if (classes->domain.elements() != pi.domain().elements())
    throw ValidationError("character: class data belongs to another group");
  ClassFunction chi{classes, std::vector<Complex>(classes->size())};
  for (int c = 0; c < classes->size(); ++c)
    chi.values[c] = pi(classes->representative(c)).trace();
  return chi;
}

ClassFunction character(const ProjectiveRep& pi)
{
  return character(pi, std::make_shared<const ConjugacyData>(conjugacy_classes(pi.domain())));
}

long long multiplicity(const ClassFunction& irreducible, const ProjectiveRep& pi)
{
  return round_multiplicity(inner_product(character(pi, irreducible.classes), irreducible));
}

std::vector<Element> generating_set(const Subgroup& domain)
{
  std::vector<Element> gens;
  Subgroup current = Subgroup::trivial(domain.parent());
  for (Element x : domain.elements()) {
    if (current.contains(x))
      continue;
    gens.push_back(x);
    current = Subgroup::generated_by(domain.parent(), gens);
    if (current.order() == domain.order())
      break;
  }
  return gens;
}

namespace {

constexpr int kDenseCommutantLimit = 24;

int dense_commutant_dimension(const ProjectiveRep& pi)
{
  const auto gens = generating_set(pi.domain());
  const Eigen::Index m = pi.dim();
  if (gens.empty())
    return static_cast<int>(m * m);
  const Matrix eye = Matrix::Identity(m, m);
  Matrix stacked(static_cast<Eigen::Index>(gens.size()) * m * m, m * m);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Matrix& u = pi(gens[k]);
    stacked.middleRows(static_cast<Eigen::Index>(k) * m * m, m * m) =
        kron(u.transpose(), eye) - kron(eye, u);
  }
  return static_cast<int>(null_space(stacked).cols());
}

Matrix average_conjugation(const ProjectiveRep& pi, const Matrix& y)
{
  Matrix acc = Matrix::Zero(y.rows(), y.cols());
  for (const auto& u : pi.matrices())
    acc += u * y * u.adjoint();
  return acc / static_cast<double>(pi.matrices().size());
}

int randomized_commutant_dimension(const ProjectiveRep& pi, std::uint64_t seed)
{
  Rng rng(seed);
  const Eigen::Index m = pi.dim();
  std::vector<Vector> basis;
  int misses = 0;
  while (misses < 3 && static_cast<Eigen::Index>(basis.size()) < m * m) {
    Vector x = vec(average_conjugation(pi, random_matrix(m, m, rng)));
    const double size = x.norm();
    for (const auto& b : basis)
      x -= b.dot(x) * b;
    for (const auto& b : basis)
      x -= b.dot(x) * b;
    if (x.norm() < 1e-8 * std::max(1.0, size)) {
      ++misses;
      continue;
    }
    basis.push_back(x / x.norm());
  }
  return static_cast<int>(basis.size());
}

} // namespace

int commutant_dimension(const ProjectiveRep& pi, std::uint64_t seed)
{
  if (pi.dim() <= kDenseCommutantLimit)
    return dense_commutant_dimension(pi);
  return randomized_commutant_dimension(pi, seed);
}

double character_norm(const ProjectiveRep& pi)
{
  double sum = 0;
  for (const auto& u : pi.matrices())
    sum += std::norm(u.trace());
  return sum / static_cast<double>(pi.matrices().size());
}

Subgroup projective_kernel(const ProjectiveRep& pi, const Subgroup& restrict_to, double tol)
{
  if (!restrict_to.is_subgroup_of(pi.domain()))
    throw ValidationError("projective_kernel: restriction is not a subgroup of the domain");
  std::vector<Element> keep;
  for (Element g : restrict_to.elements())
    if (scalar_value(pi(g), tol))
      keep.push_back(g);
  return Subgroup::from_elements(restrict_to.parent(), std::move(keep));
}

Equivalence strictly_equivalent(const ProjectiveRep& a, const ProjectiveRep& b,
                                std::uint64_t seed, double tol)
{
  require_same_domain(a.domain(), b.domain(), "strictly_equivalent");
  if (a.dim() != b.dim())
    throw ValidationError("strictly_equivalent: dimension mismatch");
  if (distance(a.cocycle(), b.cocycle()) > std::max(tol, 1e-7))
    return {};
  // T(Y) = avg_h b(h)^* Y a(h) maps onto the intertwiners X a(h) = b(h) X.
  Rng rng(seed);
  const Eigen::Index m = a.dim();
  for (int attempt = 0; attempt < 2; ++attempt) {
    const Matrix y = random_matrix(m, m, rng);
    Matrix x = Matrix::Zero(m, m);
    for (std::size_t p = 0; p < a.matrices().size(); ++p)
      x += b.matrices()[p].adjoint() * y * a.matrices()[p];
    x /= static_cast<double>(a.matrices().size());
    if (inverse_condition(x) < 1e-6)
      continue;
    Matrix u = unitary_factor(x);
    double residual = 0;
    for (std::size_t p = 0; p < a.matrices().size(); ++p)
      residual = std::max(residual,
                          max_abs(u * a.matrices()[p] * u.adjoint() - b.matrices()[p]));
    if (residual < std::max(1e-7, tol))
      return {true, std::move(u), -1};
  }
  return {};
}

Equivalence twist_equivalent(const ProjectiveRep& a, const ProjectiveRep& b,
                             std::uint64_t seed, double tol)
{
  auto strict = strictly_equivalent(a, b, seed, tol);
  if (strict.equivalent)
    return strict;
  const auto mus = linear_characters(a.domain(), seed);
  for (std::size_t i = 1; i < mus.size(); ++i) {
    auto eq = strictly_equivalent(a, tensor(b, mus[i]), seed, tol);
    if (eq.equivalent) {
      eq.twist = static_cast<int>(i);
      return eq;
    }
  }
  return {};
}

std::optional<ProjectiveRep> align_cocycle(const ProjectiveRep& pi, const Cocycle& target,
                                           double tol)
{
  const Subgroup& dom = pi.domain();
  require_same_domain(dom, target.domain(), "align_cocycle");
  const FiniteGroup& g = dom.group();
  const int n = dom.order();
  // we need mu(xy) = b(x,y) mu(x) mu(y) with b = target / c
  auto b = [&](Element x, Element y) { return target(x, y) / pi.cocycle()(x, y); };

  const auto gens = generating_set(dom);
  // breadth-first tree: elem = parent * gens[via]
  std::vector<int> parent(n, -1), via(n, -1);
  std::vector<Element> order{g.identity()};
  std::vector<bool> seen(n, false);
  seen[dom.position(g.identity())] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Element y = g.mul(order[i], gens[s]);
      if (!seen[dom.position(y)]) {
        seen[dom.position(y)] = true;
        parent[dom.position(y)] = dom.position(order[i]);
        via[dom.position(y)] = static_cast<int>(s);
        order.push_back(y);
      }
    }

  // mu(s)^ord(s) is fixed by walking s, s^2, ..., e
  std::vector<std::vector<Complex>> choices;
  for (Element s : gens) {
    const int k = g.element_order(s);
    Complex prod = 1;
    Element power = s;
    for (int j = 1; j < k; ++j) {
      prod *= b(power, s);
      power = g.mul(power, s);
    }
    const double base = -std::arg(prod) / k;
    std::vector<Complex> roots;
    for (int j = 0; j < k; ++j)
      roots.push_back(std::polar(1.0, base + 2 * std::numbers::pi * j / k));
    choices.push_back(std::move(roots));
  }

  std::vector<std::size_t> pick(gens.size(), 0);
  while (true) {
    std::vector<Complex> mu(n, 1.0);
    for (std::size_t i = 1; i < order.size(); ++i) {
      const int p = dom.position(order[i]);
      const int s = via[p];
      mu[p] = b(dom.at(parent[p]), gens[s]) * mu[parent[p]] * choices[s][pick[s]];
    }
    bool ok = true;
    for (int p = 0; p < n && ok; ++p)
      for (int q = 0; q < n && ok; ++q) {
        const int pq = dom.position(g.mul(dom.at(p), dom.at(q)));
        ok = std::abs(mu[pq] - b(dom.at(p), dom.at(q)) * mu[p] * mu[q]) < tol;
      }
    if (ok) {
      std::vector<Matrix> mats;
      for (int p = 0; p < n; ++p)
        mats.push_back(mu[p] * pi.matrices()[p]);
      return ProjectiveRep::create(dom, std::move(mats));
    }
    std::size_t s = 0;
    while (s < pick.size() && ++pick[s] == choices[s].size())
      pick[s++] = 0;
    if (s == pick.size())
      return std::nullopt;
  }
}

} // namespace subfactor
