#include "subfactor/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace subfactor {

Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols)
{
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

Matrix null_space_of_gram(const Matrix& gram, double tol)
{
  const Eigen::Index n = gram.rows();
  if (n == 0)
    return Matrix(0, 0);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
  const Eigen::VectorXd& values = eig.eigenvalues();
  const double top = std::max(1.0, values(n - 1));
  // Gram eigenvalues are squared singular values.
  const double cut = tol * tol * top;
  Eigen::Index count = 0;
  while (count < n && values(count) < cut)
    ++count;
  return eig.eigenvectors().leftCols(count);
}

Matrix null_space(const Matrix& a, double tol)
{
  const Eigen::Index n = a.cols();
  if (n == 0)
    return Matrix(0, 0);
  if (a.rows() < n) {
    Matrix padded = Matrix::Zero(n, n);
    padded.topRows(a.rows()) = a;
    return null_space(padded, tol);
  }
  Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double cut = tol * std::max(1.0, s(0));
  Eigen::Index nonzero = 0;
  while (nonzero < n && s(nonzero) > cut)
    ++nonzero;
  return svd.matrixV().rightCols(n - nonzero);
}

Matrix column_span(const Matrix& a, double tol)
{
  if (a.size() == 0)
    return Matrix(a.rows(), 0);
  Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double cut = tol * std::max(1.0, s(0));
  Eigen::Index count = 0;
  while (count < s.size() && s(count) > cut)
    ++count;
  return svd.matrixU().leftCols(count);
}

Eigen::Index rank(const Matrix& a, double tol)
{
  return column_span(a, tol).cols();
}

Matrix unitary_factor(const Matrix& x)
{
  Eigen::JacobiSVD<Matrix> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

double inverse_condition(const Matrix& x)
{
  Eigen::JacobiSVD<Matrix> svd(x);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0)
    return 0.0;
  return s(s.size() - 1) / s(0);
}

Matrix partial_trace_first(const Matrix& m, Eigen::Index d, Eigen::Index r)
{
  Matrix out = Matrix::Zero(r, r);
  for (Eigen::Index i = 0; i < d; ++i)
    out += m.block(i * r, i * r, r, r);
  return out;
}

Matrix partial_trace_second(const Matrix& m, Eigen::Index d, Eigen::Index r)
{
  Matrix out(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      out(i, j) = m.block(i * r, j * r, r, r).trace();
  return out;
}

Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng)
{
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix out(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      out(i, j) = Complex(re, im);
    }
  return out;
}

Matrix random_unitary(Eigen::Index n, Rng& rng)
{
  Eigen::HouseholderQR<Matrix> qr(random_matrix(n, n, rng));
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0)
      q.col(j) *= r(j, j) / mag;
  }
  return q;
}

std::vector<int> cluster_values(const std::vector<double>& values, double tol)
{
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> cluster(values.size(), -1);
  int current = -1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || values[order[k]] - values[order[k - 1]] > tol)
      ++current;
    cluster[order[k]] = current;
  }
  return cluster;
}

double clean(double x)
{
  const double r = std::round(x * 1e10) / 1e10;
  return r == 0.0 ? 0.0 : r;
}

} // namespace subfactor
