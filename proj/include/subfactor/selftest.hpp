#ifndef SUBFACTOR_SELFTEST_HPP
#define SUBFACTOR_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "subfactor/group.hpp"
#include "subfactor/rep.hpp"

namespace subfactor::selftest {

struct NamedGroup
{
  std::string name;
  GroupPtr group;
};

/// Z2, Z3, Z4, Z6, V4, S3, D4, Q8.
std::vector<NamedGroup> standard_groups();

/// A (G, H, psi) triple; psi lives on H.
struct Case
{
  std::string name;
  ProjectiveRep psi;
};

/// For each group and every subgroup H: every degree-1 character of H
/// multiplied by random phases (a coboundary), and the Pauli representation
/// under random phases and a random unitary when H is a Klein four group.
std::vector<Case> kernel_corpus(const std::vector<NamedGroup>& groups, std::uint64_t seed);

/// Cases where proj ker psi|N(H) need not be normal in G: sums of two
/// degree-1 characters under a random unitary, and the 2-dimensional
/// irreducible of a Sylow D4 inside S4.
std::vector<Case> reducible_corpus(const std::vector<NamedGroup>& groups, std::uint64_t seed);

/// sigma = ind(rho (x) psi) with known (H, rho, psi).
struct RoundTripCase
{
  std::string name;
  ProjectiveRep rho;
  ProjectiveRep psi;
};

/// At least `count` constructions with |G| <= 24 and d, r <= 2.
std::vector<RoundTripCase> round_trip_corpus(std::uint64_t seed, std::size_t count = 24);

struct CheckResult
{
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  double seconds = 0;
  std::string detail;
};

CheckResult check_pauli_example();
CheckResult check_kernel_identity(const std::vector<Case>& corpus);
/// ker sigma equals the G-core of proj ker psi; the detail counts the cases
/// where proj ker psi|N(H) is strictly larger.
CheckResult check_kernel_core(const std::vector<Case>& corpus);
CheckResult check_generation_criterion(const std::vector<Case>& corpus);
/// Tolerance 1e-8 on the class-wise deviation.
CheckResult check_frobenius(const std::vector<Case>& corpus);
/// Tolerance 1e-8 on row orthonormality; sum of squared degrees exact.
CheckResult check_orthogonality(const std::vector<NamedGroup>& groups);
CheckResult check_tower_values();
/// Residual tolerance 1e-6.
CheckResult check_round_trips(const std::vector<RoundTripCase>& corpus, std::uint64_t seed);
/// Serialises enumerate(S3) twice and compares the bytes.
CheckResult check_determinism(std::uint64_t seed);

/// Every check above on the embedded corpus.
std::vector<CheckResult> run_all(std::uint64_t seed = 1);

} // namespace subfactor::selftest

#endif // SUBFACTOR_SELFTEST_HPP
