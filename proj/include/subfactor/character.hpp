#ifndef SUBFACTOR_CHARACTER_HPP
#define SUBFACTOR_CHARACTER_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "subfactor/group.hpp"
#include "subfactor/linalg.hpp"

namespace subfactor {

using ClassesPtr = std::shared_ptr<const ConjugacyData>;

/// A function on the domain that is constant on conjugacy classes, stored
/// as one value per class.
struct ClassFunction
{
  ClassesPtr classes;
  std::vector<Complex> values;

  Complex operator()(Element g) const { return values[classes->class_of[g]]; }
  Complex degree() const { return values[0]; }
  ClassFunction conj() const;
  bool is_real(double tol = kTolerance) const;
};

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);

/// (1/|D|) sum_g a(g) conj(b(g))
Complex inner_product(const ClassFunction& a, const ClassFunction& b);

/// Irreducible characters of a domain subgroup. rows[0] is the trivial
/// character; the remaining rows are sorted by degree and then by values.
struct CharacterTable
{
  ClassesPtr classes;
  std::vector<ClassFunction> rows;
  std::vector<int> degrees;
  /// conjugate[i] = index of the row conj(rows[i]).
  std::vector<int> conjugate;

  int size() const { return static_cast<int>(rows.size()); }
  const Subgroup& domain() const { return classes->domain; }
  ClassFunction constant(Complex value) const;
};

/// Burnside's method: simultaneously diagonalise the class-sum structure
/// matrices through a random linear combination and read the central
/// characters off its eigenvectors. Retries with fresh coefficients when
/// the spectrum is degenerate; throws NumericalError after max_attempts.
CharacterTable character_table(const Subgroup& domain, std::uint64_t seed = 1,
                               int max_attempts = 16);
CharacterTable character_table(const GroupPtr& group, std::uint64_t seed = 1);

/// Rounds an inner product to the nearest nonnegative integer; throws
/// NumericalError if it is further than 1e-6 from one.
long long round_multiplicity(Complex value);

/// Multiplicities of every irreducible in chi.
std::vector<long long> decompose(const CharacterTable& table, const ClassFunction& chi);

} // namespace subfactor

#endif // SUBFACTOR_CHARACTER_HPP
