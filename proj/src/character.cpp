#include "subfactor/character.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "subfactor/errors.hpp"

namespace subfactor {

ClassFunction ClassFunction::conj() const
{
  ClassFunction out = *this;
  for (auto& v : out.values)
    v = std::conj(v);
  return out;
}

bool ClassFunction::is_real(double tol) const
{
  return std::all_of(values.begin(), values.end(),
                     [&](Complex v) { return std::abs(v.imag()) < tol; });
}

namespace {

void require_same(const ClassFunction& a, const ClassFunction& b)
{
  if (a.classes != b.classes && a.classes->domain.elements() != b.classes->domain.elements())
    throw ValidationError("class functions live on different groups");
}

} // namespace

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b)
{
  require_same(a, b);
  ClassFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] *= b.values[i];
  return out;
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b)
{
  require_same(a, b);
  ClassFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] += b.values[i];
  return out;
}

Complex inner_product(const ClassFunction& a, const ClassFunction& b)
{
  require_same(a, b);
  Complex sum = 0;
  for (std::size_t c = 0; c < a.values.size(); ++c)
    sum += static_cast<double>(a.classes->class_sizes[c]) * a.values[c] * std::conj(b.values[c]);
  return sum / static_cast<double>(a.classes->domain.order());
}

ClassFunction CharacterTable::constant(Complex value) const
{
  return {classes, std::vector<Complex>(classes->size(), value)};
}

long long round_multiplicity(Complex value)
{
  const double r = std::round(value.real());
  if (std::abs(value - Complex(r, 0.0)) > 1e-6 || r < 0)
    throw NumericalError("multiplicity " + std::to_string(value.real()) + "+" +
                         std::to_string(value.imag()) + "i is not a nonnegative integer");
  return static_cast<long long>(r);
}

std::vector<long long> decompose(const CharacterTable& table, const ClassFunction& chi)
{
  std::vector<long long> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows)
    out.push_back(round_multiplicity(inner_product(chi, row)));
  return out;
}

CharacterTable character_table(const GroupPtr& group, std::uint64_t seed)
{
  return character_table(Subgroup::whole(group), seed);
}

CharacterTable character_table(const Subgroup& domain, std::uint64_t seed, int max_attempts)
{
  auto classes = std::make_shared<const ConjugacyData>(conjugacy_classes(domain));
  const FiniteGroup& g = domain.group();
  const int k = classes->size();
  const double order = domain.order();

  // structure[i](j, l) = #{x in C_i : x^-1 z_l in C_j}, z_l the rep of C_l,
  // so that C_i C_j = sum_l structure[i](j, l) C_l.
  std::vector<Eigen::MatrixXd> structure(k, Eigen::MatrixXd::Zero(k, k));
  for (int i = 0; i < k; ++i)
    for (Element x : classes->classes[i])
      for (int l = 0; l < k; ++l) {
        const Element y = g.mul(g.inv(x), classes->representative(l));
        structure[i](classes->class_of[y], l) += 1.0;
      }

  Rng rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i)
      combo += coeff(rng) * structure[i];
    Eigen::EigenSolver<Eigen::MatrixXd> eig(combo);
    if (eig.info() != Eigen::Success)
      continue;
    const Eigen::VectorXcd lambda = eig.eigenvalues();
    double scale = 1.0;
    for (int a = 0; a < k; ++a)
      scale = std::max(scale, std::abs(lambda(a)));
    bool separated = true;
    for (int a = 0; a < k && separated; ++a)
      for (int b = a + 1; b < k && separated; ++b)
        separated = std::abs(lambda(a) - lambda(b)) > 1e-6 * scale;
    if (!separated)
      continue;

    const Eigen::MatrixXcd vecs = eig.eigenvectors();
    std::vector<ClassFunction> rows;
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) {
      Eigen::VectorXcd omega = vecs.col(a);
      if (std::abs(omega(0)) < 1e-12) {
        ok = false;
        break;
      }
      omega /= omega(0);
      // every structure matrix must act by the scalar omega_i
      for (int i = 0; i < k && ok; ++i) {
        const Eigen::VectorXcd lhs = structure[i].cast<Complex>() * omega;
        ok = (lhs - omega(i) * omega).cwiseAbs().maxCoeff() < 1e-7 * std::max(1.0, order);
      }
      double norm = 0;
      for (int i = 0; i < k; ++i)
        norm += std::norm(omega(i)) / classes->class_sizes[i];
      const double degree = std::sqrt(order / norm);
      const double rounded = std::round(degree);
      if (std::abs(degree - rounded) > 1e-6)
        ok = false;
      ClassFunction chi{classes, std::vector<Complex>(k)};
      for (int i = 0; i < k; ++i)
        chi.values[i] = omega(i) * rounded / static_cast<double>(classes->class_sizes[i]);
      chi.values[0] = rounded;
      rows.push_back(std::move(chi));
    }
    if (!ok)
      continue;

    auto is_trivial = [](const ClassFunction& c) {
      return std::all_of(c.values.begin(), c.values.end(),
                         [](Complex v) { return std::abs(v - 1.0) < 1e-8; });
    };
    auto key_less = [&](const ClassFunction& a, const ClassFunction& b) {
      const bool ta = is_trivial(a), tb = is_trivial(b);
      if (ta != tb)
        return ta;
      for (int i = 0; i < k; ++i) {
        const double ar = std::round(a.values[i].real() * 1e8), br = std::round(b.values[i].real() * 1e8);
        if (ar != br)
          return i == 0 ? ar < br : ar > br;
        const double ai = std::round(a.values[i].imag() * 1e8), bi = std::round(b.values[i].imag() * 1e8);
        if (ai != bi)
          return ai > bi;
      }
      return false;
    };
    std::sort(rows.begin(), rows.end(), key_less);

    CharacterTable table{classes, std::move(rows), {}, {}};
    for (const auto& row : table.rows)
      table.degrees.push_back(static_cast<int>(std::lround(row.values[0].real())));
    for (int a = 0; a < k; ++a) {
      const ClassFunction c = table.rows[a].conj();
      int match = -1;
      for (int b = 0; b < k && match < 0; ++b) {
        double diff = 0;
        for (int i = 0; i < k; ++i)
          diff = std::max(diff, std::abs(c.values[i] - table.rows[b].values[i]));
        if (diff < 1e-6)
          match = b;
      }
      if (match < 0) {
        ok = false;
        break;
      }
      table.conjugate.push_back(match);
    }
    if (!ok || !is_trivial(table.rows[0]))
      continue;
    return table;
  }
  throw NumericalError("character table: degenerate class-algebra spectrum after " +
                       std::to_string(max_attempts) + " attempts; retry with another seed");
}

} // namespace subfactor
