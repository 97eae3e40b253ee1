#include "subfactor/tower.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "subfactor/errors.hpp"

namespace subfactor {

namespace {

long long checked_mul(long long a, long long b)
{
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw ValidationError("tower dimensions exceed the 64-bit range; lower --nmax", "nmax");
  return out;
}

long long checked_add(long long a, long long b)
{
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw ValidationError("tower dimensions exceed the 64-bit range; lower --nmax", "nmax");
  return out;
}

std::vector<long long> step(const IntMatrix& fusion, const std::vector<long long>& m)
{
  const std::size_t k = m.size();
  std::vector<long long> next(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    if (m[i] != 0)
      for (std::size_t j = 0; j < k; ++j)
        next[j] = checked_add(next[j], checked_mul(fusion[i][j], m[i]));
  return next;
}

long long algebra_dim(const std::vector<long long>& m)
{
  long long sum = 0;
  for (long long x : m)
    sum = checked_add(sum, checked_mul(x, x));
  return sum;
}

std::vector<long long> unit_vector(std::size_t k)
{
  std::vector<long long> m(k, 0);
  m[0] = 1;
  return m;
}

struct Fusions
{
  IntMatrix sigma;
  IntMatrix sigma_bar;
};

Fusions fusions(const ProjectiveRep& sigma, const CharacterTable& table)
{
  const ClassFunction chi = character(sigma, table.classes);
  return {fusion_matrix(table, chi), fusion_matrix(table, chi.conj())};
}

// Words of length n >= 1 in the upper tower end with sigma for odd n and
// with sigma-bar for even n; the lower tower swaps the two.
const IntMatrix& letter(const Fusions& f, int n, bool upper)
{
  return (n % 2 == 1) == upper ? f.sigma : f.sigma_bar;
}

std::vector<long long> direct_multiplicities(const CharacterTable& table,
                                             const ClassFunction& word)
{
  return decompose(table, word);
}

} // namespace

IntMatrix fusion_matrix(const CharacterTable& table, const ClassFunction& chi)
{
  const int k = table.size();
  IntMatrix out(k, std::vector<long long>(k, 0));
  for (int i = 0; i < k; ++i) {
    const ClassFunction prod = table.rows[i] * chi;
    for (int j = 0; j < k; ++j)
      out[i][j] = round_multiplicity(inner_product(prod, table.rows[j]));
  }
  return out;
}

std::vector<long long> PrincipalGraph::degree_sequence() const
{
  std::vector<long long> even_deg(irreducible_degrees.size(), 0);
  std::vector<long long> odd_deg(irreducible_degrees.size(), 0);
  for (const auto& e : edges) {
    even_deg[e.even] += e.multiplicity;
    odd_deg[e.odd] += e.multiplicity;
  }
  std::vector<long long> out;
  for (int v : even)
    out.push_back(even_deg[v]);
  for (int v : odd)
    out.push_back(odd_deg[v]);
  std::sort(out.begin(), out.end());
  return out;
}

TowerReport tower(const ProjectiveRep& sigma, int n_max)
{
  return tower(sigma, n_max, character_table(sigma.domain().parent()));
}

TowerReport tower(const ProjectiveRep& sigma, int n_max, const CharacterTable& table)
{
  if (n_max < 1)
    throw ValidationError("tower: n_max must be at least 1", "nmax");
  if (!sigma.is_ordinary())
    throw ValidationError("tower: sigma must be an ordinary representation");
  const Fusions f = fusions(sigma, table);
  const ClassFunction chi = character(sigma, table.classes);
  const std::size_t k = table.rows.size();

  TowerReport report;
  report.sigma_dim = sigma.dim();
  report.index = checked_mul(sigma.dim(), sigma.dim());

  // Both recursions: integer fusion steps, and direct character powers
  // while the word dimension keeps inner products well inside double range.
  for (bool upper : {true, false}) {
    std::vector<long long> m = unit_vector(k);
    ClassFunction word = table.constant(1.0);
    double word_dim = 1;
    IntMatrix& mults = upper ? report.upper_multiplicities : report.lower_multiplicities;
    std::vector<long long>& dims = upper ? report.upper_dims : report.lower_dims;
    mults.push_back(m);
    dims.push_back(1);
    for (int n = 1; n <= n_max; ++n) {
      const IntMatrix& fus = letter(f, n, upper);
      if (upper)
        report.inclusion_matrices.push_back(fus);
      m = step(fus, m);
      word_dim *= sigma.dim();
      if (word_dim < 1e9) {
        word = word * ((n % 2 == 1) == upper ? chi : chi.conj());
        if (direct_multiplicities(table, word) != m)
          throw InconsistencyError("tower: fusion recursion and character powers disagree at level " +
                                   std::to_string(n));
      }
      mults.push_back(m);
      dims.push_back(algebra_dim(m));
    }
  }
  report.depth = principal_graph(sigma, table).depth;
  return report;
}

PrincipalGraph principal_graph(const ProjectiveRep& sigma)
{
  return principal_graph(sigma, character_table(sigma.domain().parent()));
}

PrincipalGraph principal_graph(const ProjectiveRep& sigma, const CharacterTable& table,
                               std::uint64_t seed)
{
  if (!sigma.is_ordinary())
    throw ValidationError("principal_graph: sigma must be an ordinary representation");
  const Fusions f = fusions(sigma, table);
  const std::size_t k = table.rows.size();

  PrincipalGraph graph;
  graph.irreducible_degrees = table.degrees;
  graph.first_level.assign(k, -1);
  if (!strictly_equivalent(sigma, sigma.conjugate(), seed).equivalent)
    graph.warning = "sigma is not self-conjugate; alternating words used";

  std::vector<bool> support(k, false), reached(k, false), even(k, false), odd(k, false);
  support[0] = reached[0] = even[0] = true;
  graph.first_level[0] = 0;
  int last_growth = 0;
  std::set<std::pair<std::vector<bool>, int>> states{{support, 0}};
  for (int n = 1;; ++n) {
    const IntMatrix& fus = letter(f, n, true);
    std::vector<bool> next(k, false);
    for (std::size_t i = 0; i < k; ++i)
      if (support[i])
        for (std::size_t j = 0; j < k; ++j)
          if (fus[i][j] > 0)
            next[j] = true;
    support = next;
    for (std::size_t j = 0; j < k; ++j)
      if (support[j]) {
        (n % 2 == 0 ? even : odd)[j] = true;
        if (!reached[j]) {
          reached[j] = true;
          graph.first_level[j] = n;
          last_growth = n;
        }
      }
    if (!states.insert({support, n % 2}).second)
      break;
  }
  graph.depth = 1 + last_growth;

  for (std::size_t i = 0; i < k; ++i) {
    if (even[i])
      graph.even.push_back(static_cast<int>(i));
    if (odd[i])
      graph.odd.push_back(static_cast<int>(i));
  }
  for (int i : graph.even)
    for (int j : graph.odd)
      if (f.sigma[i][j] > 0)
        graph.edges.push_back({i, j, f.sigma[i][j]});
  return graph;
}

std::vector<int> closure_irreducibles(const ProjectiveRep& sigma, const CharacterTable& table)
{
  const Fusions f = fusions(sigma, table);
  const std::size_t k = table.rows.size();
  std::vector<bool> in(k, false);
  in[0] = true;
  // Sub-objects of products of members: close the set under tensoring by
  // sigma, sigma-bar and conjugation until stable.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<bool> next = in;
    for (std::size_t i = 0; i < k; ++i) {
      if (!in[i])
        continue;
      for (std::size_t j = 0; j < k; ++j)
        if (f.sigma[i][j] > 0 || f.sigma_bar[i][j] > 0)
          next[j] = true;
      next[table.conjugate[i]] = true;
    }
    for (std::size_t i = 0; i < k; ++i)
      if (next[i] && !in[i]) {
        in[i] = true;
        grew = true;
      }
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < k; ++i)
    if (in[i])
      out.push_back(static_cast<int>(i));
  return out;
}

GeneratorProperties check_generator_properties(const ProjectiveRep& sigma,
                                               const CharacterTable& table,
                                               std::uint64_t seed)
{
  const ClassFunction chi = character(sigma, table.classes);
  GeneratorProperties props;
  props.self_conjugate =
      chi.is_real(1e-8) && strictly_equivalent(sigma, sigma.conjugate(), seed).equivalent;
  props.proper_unit = multiplicity(table.rows[0], sigma) >= 1 && sigma.dim() > 1;
  props.generates_category = generates(sigma, table);
  return props;
}

bool generates(const ProjectiveRep& sigma, const CharacterTable& table)
{
  return static_cast<int>(closure_irreducibles(sigma, table).size()) == table.size();
}

} // namespace subfactor
