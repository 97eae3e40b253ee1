#ifndef SUBFACTOR_LINALG_HPP
#define SUBFACTOR_LINALG_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace subfactor {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Rng = std::mt19937_64;

/// Default equality tolerance for complex scalars and matrix entries.
inline constexpr double kTolerance = 1e-9;

template <typename DerivedA, typename DerivedB>
Matrix kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          Complex(a(i, j)) * b.template cast<Complex>();
  return out;
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m)
{
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol = kTolerance)
{
  if (m.rows() != m.cols())
    return false;
  const Matrix prod = m.adjoint() * m;
  return max_abs(prod - Matrix::Identity(m.rows(), m.cols())) < tol;
}

/// Returns lambda if m = lambda * 1: off-diagonal max below tol and the
/// diagonal spread below tol.
template <typename Derived>
std::optional<Complex> scalar_value(const Eigen::MatrixBase<Derived>& m, double tol = kTolerance)
{
  const Eigen::Index n = m.rows();
  if (n == 0 || n != m.cols())
    return std::nullopt;
  const Complex d0 = m(0, 0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) {
        if (std::abs(Complex(m(i, i)) - d0) >= tol)
          return std::nullopt;
      } else if (std::abs(Complex(m(i, j))) >= tol) {
        return std::nullopt;
      }
    }
  return d0;
}

/// Column-major vectorisation, vec(A X B) = (B^T (x) A) vec(X).
template <typename Derived>
Vector vec(const Eigen::MatrixBase<Derived>& m)
{
  Matrix copy = m;
  return Eigen::Map<const Vector>(copy.data(), copy.size());
}

Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols);

/// Orthonormal basis (columns) of the null space of a. Singular values
/// below tol * max(1, sigma_max) count as zero.
Matrix null_space(const Matrix& a, double tol = 1e-7);

/// Same as null_space but takes the precomputed positive semidefinite Gram
/// matrix directly.
Matrix null_space_of_gram(const Matrix& gram, double tol = 1e-7);

/// Orthonormal basis of the column span of a, discarding directions whose
/// singular value is below tol * max(1, sigma_max).
Matrix column_span(const Matrix& a, double tol = 1e-7);

/// Numerical rank with the same relative threshold as column_span.
Eigen::Index rank(const Matrix& a, double tol = 1e-7);

/// Unitary polar factor W of x = W P.
Matrix unitary_factor(const Matrix& x);

/// Ratio of smallest to largest singular value (0 for the zero matrix).
double inverse_condition(const Matrix& x);

/// tr_1 over the first tensor leg: (d r x d r) -> (r x r).
Matrix partial_trace_first(const Matrix& m, Eigen::Index d, Eigen::Index r);

/// tr_2 over the second tensor leg: (d r x d r) -> (d x d).
Matrix partial_trace_second(const Matrix& m, Eigen::Index d, Eigen::Index r);

/// Entries drawn i.i.d. from the standard complex Gaussian.
Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-ish random unitary (QR of a Gaussian matrix with phase fix).
Matrix random_unitary(Eigen::Index n, Rng& rng);

/// Groups sorted real values into clusters whose consecutive gaps are below
/// tol. Returns cluster index per input position (input need not be sorted).
std::vector<int> cluster_values(const std::vector<double>& values, double tol);

/// Rounds to a 1e-10 grid and clears negative zero so reports are stable.
double clean(double x);

} // namespace subfactor

#endif // SUBFACTOR_LINALG_HPP
