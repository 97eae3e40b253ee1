#include "subfactor/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "subfactor/errors.hpp"

namespace subfactor::catalog {

GroupPtr cyclic(int n)
{
  if (n < 1)
    throw ValidationError("cyclic group needs n >= 1");
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b)
      mult[a][b] = (a + b) % n;
  }
  return share(FiniteGroup::from_table(std::move(mult), std::move(labels)));
}

GroupPtr klein_four()
{
  std::vector<std::vector<int>> mult(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      mult[a][b] = a ^ b;
  return share(FiniteGroup::from_table(std::move(mult), {"00", "10", "01", "11"}));
}

GroupPtr symmetric(int n)
{
  if (n < 1)
    throw ValidationError("symmetric group needs n >= 1");
  if (n == 1)
    return share(FiniteGroup::from_permutations({{0}}));
  std::vector<int> transposition(n), cycle(n);
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (int i = 0; i < n; ++i)
    cycle[i] = (i + 1) % n;
  return share(FiniteGroup::from_permutations({transposition, cycle}));
}

GroupPtr dihedral(int n)
{
  if (n < 3)
    throw ValidationError("dihedral group needs n >= 3");
  std::vector<int> rotation(n), reflection(n);
  for (int i = 0; i < n; ++i) {
    rotation[i] = (i + 1) % n;
    reflection[i] = (n - i) % n;
  }
  return share(FiniteGroup::from_permutations({rotation, reflection}));
}

GroupPtr quaternion()
{
  // Units 1, i, j, k with sign bit: index = 2 * unit + sign.
  // unit products: row * column = sign, unit
  constexpr std::array<std::array<std::array<int, 2>, 4>, 4> units{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  std::vector<std::vector<int>> mult(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto [sign, unit] = units[a / 2][b / 2];
      mult[a][b] = 2 * unit + ((sign + a % 2 + b % 2) % 2);
    }
  return share(FiniteGroup::from_table(std::move(mult),
                                       {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}));
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
  const int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> mult(na * nb, std::vector<int>(na * nb));
  std::vector<std::string> labels;
  for (int x = 0; x < na * nb; ++x) {
    labels.push_back("(" + a.label(x % na) + "|" + b.label(x / na) + ")");
    for (int y = 0; y < na * nb; ++y)
      mult[x][y] = a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
  }
  return share(FiniteGroup::from_table(std::move(mult), std::move(labels)));
}

} // namespace subfactor::catalog

namespace subfactor::catalog {

bool is_klein_four(const Subgroup& h)
{
  if (h.order() != 4)
    return false;
  const FiniteGroup& g = h.group();
  return std::all_of(h.elements().begin(), h.elements().end(),
                     [&](Element x) { return g.mul(x, x) == g.identity(); });
}

ProjectiveRep pauli(const Subgroup& klein)
{
  if (!is_klein_four(klein))
    throw ValidationError("Pauli representation needs a Klein four subgroup");
  const FiniteGroup& g = klein.group();
  std::vector<Element> others;
  for (Element x : klein.elements())
    if (x != g.identity())
      others.push_back(x);
  const Element a = others[0], b = others[1], ab = g.mul(a, b);
  const Complex i(0.0, 1.0);
  std::vector<Matrix> mats(4);
  for (Element x : klein.elements()) {
    Matrix m(2, 2);
    if (x == a)
      m << 0.0, 1.0, 1.0, 0.0;
    else if (x == b)
      m << 0.0, -i, i, 0.0;
    else if (x == ab)
      m << 1.0, 0.0, 0.0, -1.0;
    else
      m = Matrix::Identity(2, 2);
    mats[klein.position(x)] = m;
  }
  return ProjectiveRep::create(klein, std::move(mats));
}

} // namespace subfactor::catalog
