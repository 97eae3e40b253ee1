#include "subfactor/imprimitivity.hpp"

#include <algorithm>
#include <cmath>

#include "subfactor/errors.hpp"

namespace subfactor {

namespace {

/// Appends x to an orthonormal list if it is not already in the span.
bool extend_orthonormal(std::vector<Vector>& basis, Vector x, double tol = 1e-9)
{
  const double size = std::max(1.0, x.norm());
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis)
      x -= b.dot(x) * b;
  if (x.norm() < tol * size)
    return false;
  basis.push_back(x / x.norm());
  return true;
}

std::vector<Matrix> as_matrices(const std::vector<Vector>& vecs, Eigen::Index m)
{
  std::vector<Matrix> out;
  out.reserve(vecs.size());
  for (const auto& v : vecs)
    out.push_back(unvec(v, m, m));
  return out;
}

Matrix basis_matrix(Eigen::Index rows, Eigen::Index cols, Eigen::Index i, Eigen::Index j)
{
  Matrix e = Matrix::Zero(rows, cols);
  e(i, j) = 1.0;
  return e;
}

} // namespace

MatrixStarAlgebra::MatrixStarAlgebra(Eigen::Index ambient, std::vector<Matrix> basis)
: ambient_(ambient), basis_(std::move(basis)), stacked_(ambient * ambient, basis_.size())
{
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].rows() != ambient_ || basis_[i].cols() != ambient_)
      throw ValidationError("algebra element has the wrong shape", "matrices");
    stacked_.col(static_cast<Eigen::Index>(i)) = vec(basis_[i]);
  }
  contains_identity_ = contains(Matrix::Identity(ambient_, ambient_));
}

MatrixStarAlgebra MatrixStarAlgebra::generate(Eigen::Index ambient,
                                              std::span<const Matrix> spanning,
                                              std::uint64_t seed)
{
  std::vector<Vector> basis;
  extend_orthonormal(basis, vec(Matrix::Identity(ambient, ambient)));
  for (const auto& x : spanning) {
    if (x.rows() != ambient || x.cols() != ambient)
      throw ValidationError("algebra element has the wrong shape", "matrices");
    extend_orthonormal(basis, vec(x));
    extend_orthonormal(basis, vec(Matrix(x.adjoint())));
  }
  const int initial = static_cast<int>(basis.size());

  // A product of two random elements of a *-closed subspace S lies in S
  // only if S is multiplicatively closed (generically), so keep adding
  // random products until two in a row land inside.
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto random_in_span = [&]() {
    Vector v = Vector::Zero(ambient * ambient);
    for (const auto& b : basis)
      v += Complex(normal(rng), normal(rng)) * b;
    return unvec(v, ambient, ambient);
  };
  int inside = 0;
  while (inside < 2) {
    const Matrix p = random_in_span() * random_in_span();
    const bool grew = extend_orthonormal(basis, vec(p));
    if (grew) {
      extend_orthonormal(basis, vec(Matrix(p.adjoint())));
      inside = 0;
    } else {
      ++inside;
    }
  }
  MatrixStarAlgebra out(ambient, as_matrices(basis, ambient));
  out.added_ = out.dim() - initial;
  return out;
}

MatrixStarAlgebra MatrixStarAlgebra::imprimitivity_block(int d, int r, int cosets)
{
  const Eigen::Index m = static_cast<Eigen::Index>(d) * r * cosets;
  const Matrix id_r = Matrix::Identity(r, r);
  std::vector<Matrix> basis;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int c = 0; c < cosets; ++c) {
        Matrix x = kron(kron(basis_matrix(d, d, i, j), id_r), basis_matrix(cosets, cosets, c, c));
        basis.push_back(x / std::sqrt(static_cast<double>(r)));
      }
  return {m, std::move(basis)};
}

MatrixStarAlgebra MatrixStarAlgebra::scalars(Eigen::Index ambient)
{
  return {ambient, {Matrix::Identity(ambient, ambient) / std::sqrt(static_cast<double>(ambient))}};
}

MatrixStarAlgebra MatrixStarAlgebra::full(Eigen::Index ambient)
{
  std::vector<Matrix> basis;
  for (Eigen::Index j = 0; j < ambient; ++j)
    for (Eigen::Index i = 0; i < ambient; ++i)
      basis.push_back(basis_matrix(ambient, ambient, i, j));
  return {ambient, std::move(basis)};
}

MatrixStarAlgebra MatrixStarAlgebra::diagonal(Eigen::Index ambient)
{
  std::vector<Matrix> basis;
  for (Eigen::Index i = 0; i < ambient; ++i)
    basis.push_back(basis_matrix(ambient, ambient, i, i));
  return {ambient, std::move(basis)};
}

Vector MatrixStarAlgebra::coordinates(const Matrix& x) const
{
  return stacked_.adjoint() * vec(x);
}

bool MatrixStarAlgebra::contains(const Matrix& x, double tol) const
{
  if (x.rows() != ambient_ || x.cols() != ambient_)
    return false;
  const Vector v = vec(x);
  const Vector residual = v - stacked_ * (stacked_.adjoint() * v);
  return residual.norm() < tol * std::max(1.0, v.norm());
}

Matrix MatrixStarAlgebra::random_element(Rng& rng) const
{
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector coeff(dim());
  for (int i = 0; i < dim(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    coeff(i) = Complex(re, im);
  }
  return unvec(stacked_ * coeff, ambient_, ambient_);
}

std::vector<Matrix> MatrixStarAlgebra::center(std::uint64_t seed) const
{
  // z = sum x_i b_i commutes with B iff it commutes with a generating set;
  // two random elements generate a semisimple B generically, and a third
  // one is used as a check.
  Rng rng(seed);
  const Eigen::Index m2 = ambient_ * ambient_;
  constexpr int kGenerators = 2;
  std::vector<Matrix> gens;
  for (int k = 0; k < kGenerators + 1; ++k)
    gens.push_back(random_element(rng));
  Matrix system(kGenerators * m2, dim());
  for (int i = 0; i < dim(); ++i)
    for (int k = 0; k < kGenerators; ++k)
      system.block(k * m2, i, m2, 1) = vec(Matrix(basis_[i] * gens[k] - gens[k] * basis_[i]));
  const Matrix coeffs = null_space(system);
  std::vector<Matrix> out;
  for (Eigen::Index c = 0; c < coeffs.cols(); ++c) {
    Matrix z = unvec(stacked_ * coeffs.col(c), ambient_, ambient_);
    const Matrix& check = gens[kGenerators];
    if (max_abs(Matrix(z * check - check * z)) > 1e-7 * std::max(1.0, max_abs(check)))
      throw NumericalError("center: random generators did not generate the algebra");
    out.push_back(std::move(z));
  }
  return out;
}

bool MatrixStarAlgebra::is_closed(std::uint64_t seed) const
{
  Rng rng(seed);
  for (int t = 0; t < 2; ++t) {
    const Matrix a = random_element(rng);
    const Matrix b = random_element(rng);
    if (!contains(a * b, 1e-7) || !contains(a.adjoint(), 1e-7))
      return false;
  }
  return contains_identity_;
}

MatrixStarAlgebra MatrixStarAlgebra::transformed(const Matrix& w) const
{
  std::vector<Matrix> basis;
  basis.reserve(basis_.size());
  for (const auto& b : basis_)
    basis.push_back(w * b * w.adjoint());
  return {ambient_, std::move(basis)};
}

bool invariant_check(const MatrixStarAlgebra& b, const ProjectiveRep& sigma)
{
  if (b.ambient() != sigma.dim())
    throw ValidationError("algebra and representation have different dimensions");
  for (Element g : generating_set(sigma.domain())) {
    const Matrix& u = sigma(g);
    for (const auto& x : b.basis())
      if (!b.contains(u * x * u.adjoint(), 1e-7))
        return false;
  }
  return true;
}

namespace {

/// Coordinates of the Ad sigma(g) action on an orthonormal family.
Matrix action_matrix(const std::vector<Matrix>& family, const Matrix& u)
{
  const auto n = static_cast<Eigen::Index>(family.size());
  Matrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Matrix moved = u * family[i] * u.adjoint();
    for (Eigen::Index j = 0; j < n; ++j)
      a(j, i) = (family[j].adjoint() * moved).trace();
  }
  return a;
}

} // namespace

bool is_factor_correspondence(const MatrixStarAlgebra& b, const ProjectiveRep& sigma,
                              std::uint64_t seed)
{
  if (!invariant_check(b, sigma))
    throw ValidationError("algebra is not invariant under Ad sigma");
  const auto z = b.center(seed);
  const auto gens = generating_set(sigma.domain());
  const auto n = static_cast<Eigen::Index>(z.size());
  if (gens.empty())
    return n == 1;
  Matrix system(static_cast<Eigen::Index>(gens.size()) * n, n);
  for (std::size_t k = 0; k < gens.size(); ++k)
    system.middleRows(static_cast<Eigen::Index>(k) * n, n) =
        action_matrix(z, sigma(gens[k])) - Matrix::Identity(n, n);
  return null_space(system).cols() == 1;
}

ImprimitivitySystem decompose(const ProjectiveRep& sigma, const MatrixStarAlgebra& b,
                              std::uint64_t seed)
{
  if (!sigma.is_ordinary())
    throw ValidationError("decompose: sigma must be an ordinary representation");
  if (!sigma.domain().is_whole())
    throw ValidationError("decompose: sigma must be a representation of the whole group");
  if (!invariant_check(b, sigma))
    throw ValidationError("decompose: algebra is not invariant under Ad sigma");

  const Subgroup& whole = sigma.domain();
  const FiniteGroup& g = whole.group();
  const Eigen::Index m = sigma.dim();
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  // Minimal central projections from a random self-adjoint central element.
  const auto z = b.center(seed);
  std::vector<Matrix> projections;
  std::vector<Matrix> ranges;
  for (int attempt = 0; attempt < 8 && projections.empty(); ++attempt) {
    Matrix c = Matrix::Zero(m, m);
    for (const auto& zi : z)
      c += normal(rng) * zi;
    c = (c + c.adjoint()).eval() / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(c);
    std::vector<double> values(eig.eigenvalues().data(), eig.eigenvalues().data() + m);
    const auto cluster = cluster_values(values, 1e-7);
    const int count = *std::max_element(cluster.begin(), cluster.end()) + 1;
    if (count != static_cast<int>(z.size()))
      continue;
    for (int k = 0; k < count; ++k) {
      std::vector<Eigen::Index> cols;
      for (Eigen::Index i = 0; i < m; ++i)
        if (cluster[i] == k)
          cols.push_back(i);
      Matrix w(m, static_cast<Eigen::Index>(cols.size()));
      for (std::size_t i = 0; i < cols.size(); ++i)
        w.col(static_cast<Eigen::Index>(i)) = eig.eigenvectors().col(cols[i]);
      projections.push_back(w * w.adjoint());
      ranges.push_back(std::move(w));
    }
  }
  if (projections.empty())
    throw NumericalError("decompose: central projections could not be separated; retry with "
                         "another seed");

  // p_1 carries the most weight on the first basis vector.
  std::size_t first = 0;
  for (std::size_t k = 1; k < projections.size(); ++k)
    if (projections[k](0, 0).real() > projections[first](0, 0).real() + 1e-9)
      first = k;
  std::swap(projections[0], projections[first]);
  std::swap(ranges[0], ranges[first]);
  const int l = static_cast<int>(projections.size());

  std::vector<std::vector<int>> action(g.order(), std::vector<int>(l, -1));
  for (Element x = 0; x < g.order(); ++x)
    for (int j = 0; j < l; ++j) {
      const Matrix moved = sigma(x) * projections[j] * sigma(x).adjoint();
      for (int k = 0; k < l && action[x][j] < 0; ++k)
        if (max_abs(Matrix(moved - projections[k])) < 1e-6)
          action[x][j] = k;
      if (action[x][j] < 0)
        throw ValidationError("decompose: sigma does not permute the central projections");
    }
  std::vector<bool> orbit(l, false);
  for (Element x = 0; x < g.order(); ++x)
    orbit[action[x][0]] = true;
  if (std::count(orbit.begin(), orbit.end(), true) != l)
    throw ValidationError("decompose: G does not act transitively on the central projections "
                          "(the fixed-point algebra is not a factor)");

  std::vector<Element> stab;
  for (Element x = 0; x < g.order(); ++x)
    if (action[x][0] == 0)
      stab.push_back(x);
  Subgroup h = Subgroup::from_elements(whole.parent(), std::move(stab));
  CosetSystem cosets(h);

  const Matrix& w1 = ranges[0];
  const Eigen::Index n = w1.cols();
  auto compress = [&](const Matrix& x) -> Matrix { return w1.adjoint() * x * w1; };

  Matrix compressed_basis(n * n, b.dim());
  for (int i = 0; i < b.dim(); ++i)
    compressed_basis.col(i) = vec(compress(b.basis()[i]));
  const Eigen::Index block_dim = rank(compressed_basis);

  // B p_1 is a full matrix algebra M_d (x) 1_r on the range of p_1: split it
  // with the spectral projections of a random self-adjoint element, then
  // connect them by matrix units e_i1.
  int d = 0, r = 0;
  std::vector<Matrix> eig_ranges;
  for (int attempt = 0; attempt < 8 && d == 0; ++attempt) {
    Matrix a = compress(b.random_element(rng));
    a = (a + a.adjoint()).eval() / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(a);
    std::vector<double> values(eig.eigenvalues().data(), eig.eigenvalues().data() + n);
    const auto cluster = cluster_values(values, 1e-7);
    const int count = *std::max_element(cluster.begin(), cluster.end()) + 1;
    if (static_cast<Eigen::Index>(count) * count != block_dim || n % count != 0)
      continue;
    std::vector<Matrix> parts;
    bool equal = true;
    for (int k = 0; k < count && equal; ++k) {
      std::vector<Eigen::Index> cols;
      for (Eigen::Index i = 0; i < n; ++i)
        if (cluster[i] == k)
          cols.push_back(i);
      equal = static_cast<Eigen::Index>(cols.size()) == n / count;
      Matrix w(n, static_cast<Eigen::Index>(cols.size()));
      for (std::size_t i = 0; i < cols.size(); ++i)
        w.col(static_cast<Eigen::Index>(i)) = eig.eigenvectors().col(cols[i]);
      parts.push_back(std::move(w));
    }
    if (!equal)
      continue;
    d = count;
    r = static_cast<int>(n / count);
    eig_ranges = std::move(parts);
  }
  if (d == 0)
    throw NumericalError("decompose: could not split B p_1 into a matrix algebra; retry with "
                         "another seed");

  const Matrix p1 = eig_ranges[0] * eig_ranges[0].adjoint();
  Matrix v_adj(n, n);
  v_adj.leftCols(r) = eig_ranges[0];
  for (int i = 1; i < d; ++i) {
    const Matrix pi_proj = eig_ranges[i] * eig_ranges[i].adjoint();
    bool found = false;
    for (int attempt = 0; attempt < 8 && !found; ++attempt) {
      const Matrix y = pi_proj * compress(b.random_element(rng)) * p1;
      const double lambda = (y.adjoint() * y).trace().real() / r;
      if (lambda < 1e-8)
        continue;
      const Matrix unit = y / std::sqrt(lambda);
      if (max_abs(Matrix(unit.adjoint() * unit - p1)) > 1e-7)
        continue;
      for (int s = 0; s < r; ++s)
        v_adj.col(static_cast<Eigen::Index>(i) * r + s) = unit * eig_ranges[0].col(s);
      found = true;
    }
    if (!found)
      throw NumericalError("decompose: no matrix unit connects the spectral projections");
  }
  if (!is_unitary(v_adj, 1e-7))
    throw NumericalError("decompose: basis identification is not unitary");
  const Matrix v = v_adj.adjoint();

  const Matrix eye_d = Matrix::Identity(d, d);
  const Matrix eye_r = Matrix::Identity(r, r);
  std::vector<Matrix> rhos, psis;
  for (Element x : h.elements()) {
    const Matrix block = compress(sigma(x));
    if (max_abs(Matrix(sigma(x) * w1 - w1 * block)) > 1e-7)
      throw InconsistencyError("decompose: stabilizer does not preserve the range of p_1");
    const Matrix pp = v * block * v_adj;

    // rho(x) Y rho(x)^* (x) 1 = pp (Y (x) 1) pp^*: solve X Y = Phi(Y) X.
    Matrix system(static_cast<Eigen::Index>(d) * d * d * d, d * d);
    for (int a = 0; a < d; ++a)
      for (int c = 0; c < d; ++c) {
        const Matrix y = basis_matrix(d, d, a, c);
        const Matrix phi =
            partial_trace_second(Matrix(pp * kron(y, eye_r) * pp.adjoint()), d, r) / double(r);
        system.middleRows((static_cast<Eigen::Index>(a) * d + c) * d * d, d * d) =
            kron(y.transpose(), eye_d) - kron(eye_d, phi);
      }
    const Matrix ns = null_space(system);
    if (ns.cols() != 1)
      throw ValidationError("decompose: rho(h) is not determined up to phase (null space of "
                            "dimension " + std::to_string(ns.cols()) + ")");
    Matrix rho = unvec(ns.col(0), d, d);
    rho *= std::sqrt(static_cast<double>(d) / (rho.adjoint() * rho).trace().real());
    for (Eigen::Index i = 0; i < d * d; ++i) {
      const Complex entry = rho(i / d, i % d);
      if (std::abs(entry) > 1e-6) {
        rho *= std::conj(entry) / std::abs(entry);
        break;
      }
    }
    const Matrix psi = partial_trace_first(Matrix(kron(rho.adjoint(), eye_r) * pp), d, r) / double(d);
    const double residual = max_abs(Matrix(pp - kron(rho, psi)));
    if (residual > 1e-6)
      throw ValidationError("decompose: pi(h) does not factor as rho(h) (x) psi(h) (residual " +
                            std::to_string(residual) + ")");
    rhos.push_back(std::move(rho));
    psis.push_back(psi);
  }
  auto rho = ProjectiveRep::create(h, std::move(rhos), 1e-6);
  auto psi = ProjectiveRep::create(h, std::move(psis), 1e-6);
  if (!(rho.cocycle() * psi.cocycle()).is_trivial(1e-6))
    throw InconsistencyError("decompose: cocycles of rho and psi are not conjugate");

  const Eigen::Index nc = cosets.size();
  Matrix u_adj(m, m);
  for (Eigen::Index j = 0; j < nc; ++j) {
    const Matrix moved = sigma(cosets.reps()[j]) * w1 * v_adj;
    for (Eigen::Index a = 0; a < n; ++a)
      u_adj.col(a * nc + j) = moved.col(a);
  }
  Matrix u = u_adj.adjoint();

  const ProjectiveRep product = tensor(rho, psi);
  const auto base = ProjectiveRep::trusted(h, product.matrices(), Cocycle::trivial(h));
  const InducedRep ind = induce(base, cosets);
  double residual = 0;
  for (Element x = 0; x < g.order(); ++x)
    residual = std::max(residual, max_abs(Matrix(u * sigma(x) * u_adj - ind.total(x))));
  if (residual > 1e-6)
    throw InconsistencyError("decompose: U sigma U^* differs from ind(rho (x) psi) by " +
                             std::to_string(residual));

  return {std::move(projections), std::move(action), std::move(h), std::move(cosets),
          d, r, std::move(rho), std::move(psi), std::move(u), residual};
}

} // namespace subfactor
