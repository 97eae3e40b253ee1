#include "subfactor/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "subfactor/errors.hpp"

namespace subfactor {

namespace {

std::string cycle_label(const std::vector<int>& perm)
{
  const int n = static_cast<int>(perm.size());
  const char* sep = n >= 10 ? " " : "";
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (int start = 0; start < n; ++start) {
    if (seen[start] || perm[start] == start)
      continue;
    out += '(';
    int x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first)
        out += sep;
      out += std::to_string(x + 1);
      first = false;
      x = perm[x];
    }
    out += ')';
  }
  return out.empty() ? "1" : out;
}

std::vector<Element> closure(const FiniteGroup& g, std::vector<Element> seed)
{
  std::vector<bool> in(g.order(), false);
  std::vector<Element> gens;
  for (Element s : seed) {
    if (s < 0 || s >= g.order())
      throw ValidationError("element index out of range: " + std::to_string(s));
    gens.push_back(s);
  }
  std::vector<Element> elems{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (Element s : gens) {
      const Element y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

} // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> mult,
                                    std::vector<std::string> labels)
{
  const std::size_t n = mult.size();
  if (n == 0)
    throw ValidationError("multiplication table is empty", "mult");
  for (std::size_t i = 0; i < n; ++i) {
    if (mult[i].size() != n)
      throw ValidationError("multiplication table row " + std::to_string(i) +
                                " has wrong length", "mult");
    for (int v : mult[i])
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw ValidationError("multiplication table entry out of range", "mult");
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (row[mult[i][j]] || col[mult[j][i]])
        throw ValidationError("multiplication table is not a Latin square (line " +
                                  std::to_string(i) + ")", "mult");
      row[mult[i][j]] = true;
      col[mult[j][i]] = true;
    }
  }

  FiniteGroup g;
  g.order_ = static_cast<int>(n);
  g.mult_.reserve(n * n);
  for (const auto& row : mult)
    g.mult_.insert(g.mult_.end(), row.begin(), row.end());

  std::optional<Element> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = mult[e][x] == static_cast<int>(x) && mult[x][e] == static_cast<int>(x);
    if (ok)
      identity = static_cast<Element>(e);
  }
  if (!identity)
    throw ValidationError("multiplication table has no two-sided identity", "mult");
  g.identity_ = *identity;

  g.inv_.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (mult[x][y] == g.identity_) {
        if (mult[y][x] != g.identity_)
          throw ValidationError("left and right inverses differ", "mult");
        g.inv_[x] = static_cast<Element>(y);
      }

  auto check = [&](int a, int b, int c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw ValidationError("multiplication table is not associative (" + std::to_string(a) +
                                "," + std::to_string(b) + "," + std::to_string(c) + ")",
                            "mult");
  };
  const int on = g.order_;
  if (on <= 64) {
    for (int a = 0; a < on; ++a)
      for (int b = 0; b < on; ++b)
        for (int c = 0; c < on; ++c)
          check(a, b, c);
  } else {
    std::mt19937_64 rng(0x6a09e667f3bcc908ULL);
    std::uniform_int_distribution<int> pick(0, on - 1);
    for (int t = 0; t < 200000; ++t)
      check(pick(rng), pick(rng), pick(rng));
  }

  if (labels.empty()) {
    for (int i = 0; i < on; ++i)
      labels.push_back(std::to_string(i));
  }
  if (labels.size() != n)
    throw ValidationError("labels must have one entry per element", "labels");
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != n)
    throw ValidationError("labels must be distinct", "labels");
  g.labels_ = std::move(labels);
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& generators,
                                           std::size_t max_order)
{
  const std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != degree)
      throw ValidationError("permutation generators have different degrees", "permutations");
    std::vector<bool> hit(degree, false);
    for (int v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree || hit[v])
        throw ValidationError("generator is not a permutation of 0..n-1", "permutations");
      hit[v] = true;
    }
  }

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  // parent[b], gen[b]: b = elems[parent[b]] * generators[gen[b]]
  std::vector<int> parent{-1}, via{-1};
  std::vector<std::vector<int>> right(generators.size());

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t s = 0; s < generators.size(); ++s) {
      std::vector<int> y(degree);
      for (std::size_t x = 0; x < degree; ++x)
        y[x] = elems[i][generators[s][x]];
      auto [it, fresh] = index.emplace(y, static_cast<int>(elems.size()));
      if (fresh) {
        if (elems.size() >= max_order)
          throw ValidationError("generated group exceeds the order cap of " +
                                    std::to_string(max_order), "permutations");
        elems.push_back(std::move(y));
        parent.push_back(static_cast<int>(i));
        via.push_back(static_cast<int>(s));
      }
      right[s].push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  FiniteGroup g;
  g.order_ = static_cast<int>(n);
  g.identity_ = 0;
  g.mult_.assign(n * n, 0);
  // column b from column parent(b): a*b = (a*parent(b))*s
  for (std::size_t a = 0; a < n; ++a)
    g.mult_[a * n] = static_cast<int>(a);
  for (std::size_t b = 1; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      g.mult_[a * n + b] = right[via[b]][g.mult_[a * n + parent[b]]];
  g.inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.mult_[a * n + b] == 0)
        g.inv_[a] = static_cast<int>(b);
  for (const auto& p : elems)
    g.labels_.push_back(cycle_label(p));
  return g;
}

int FiniteGroup::element_order(Element a) const
{
  int k = 1;
  for (Element x = a; x != identity_; x = mul(x, a))
    ++k;
  return k;
}

std::optional<Element> FiniteGroup::find(std::string_view token) const
{
  for (int i = 0; i < order_; ++i)
    if (labels_[i] == token)
      return i;
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc() && ptr == token.data() + token.size() && value >= 0 && value < order_)
    return value;
  return std::nullopt;
}

std::vector<std::vector<int>> FiniteGroup::table() const
{
  std::vector<std::vector<int>> out(order_);
  for (int a = 0; a < order_; ++a)
    out[a].assign(mult_.begin() + static_cast<std::ptrdiff_t>(a) * order_,
                  mult_.begin() + static_cast<std::ptrdiff_t>(a + 1) * order_);
  return out;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> elements)
: parent_(std::move(parent)), elements_(std::move(elements)),
  position_(parent_->order(), -1)
{
  for (std::size_t i = 0; i < elements_.size(); ++i)
    position_[elements_[i]] = static_cast<int>(i);
}

Subgroup Subgroup::from_elements(GroupPtr parent, std::vector<Element> elements)
{
  if (!parent)
    throw ValidationError("subgroup needs a parent group");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Element e : elements)
    if (e < 0 || e >= parent->order())
      throw ValidationError("subgroup element out of range: " + std::to_string(e), "subgroup");
  Subgroup h(std::move(parent), std::move(elements));
  const FiniteGroup& g = *h.parent_;
  if (!h.contains(g.identity()))
    throw ValidationError("subgroup does not contain the identity", "subgroup");
  for (Element a : h.elements_) {
    if (!h.contains(g.inv(a)))
      throw ValidationError("subgroup is not closed under inverses", "subgroup");
    for (Element b : h.elements_)
      if (!h.contains(g.mul(a, b)))
        throw ValidationError("subgroup is not closed under multiplication", "subgroup");
  }
  return h;
}

Subgroup Subgroup::generated_by(GroupPtr parent, std::span<const Element> generators)
{
  auto elems = closure(*parent, {generators.begin(), generators.end()});
  return Subgroup(std::move(parent), std::move(elems));
}

Subgroup Subgroup::whole(GroupPtr parent)
{
  std::vector<Element> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent)
{
  const Element e = parent->identity();
  return Subgroup(std::move(parent), {e});
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const
{
  if (parent_ != other.parent_ && !(*parent_ == *other.parent_))
    return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Element e) { return other.contains(e); });
}

Subgroup Subgroup::conjugate_by(Element g) const
{
  std::vector<Element> out;
  out.reserve(elements_.size());
  for (Element x : elements_)
    out.push_back(parent_->conj(g, x));
  std::sort(out.begin(), out.end());
  return Subgroup(parent_, std::move(out));
}

bool Subgroup::is_normal() const
{
  for (Element g = 0; g < parent_->order(); ++g)
    for (Element x : elements_)
      if (!contains(parent_->conj(g, x)))
        return false;
  return true;
}

std::string Subgroup::describe() const
{
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i)
      out += ',';
    out += parent_->label(elements_[i]);
  }
  return out + "}";
}

CosetSystem::CosetSystem(Subgroup subgroup)
: subgroup_(std::move(subgroup))
{
  const FiniteGroup& g = subgroup_.group();
  coset_of_.assign(g.order(), -1);
  auto assign = [&](Element k) {
    const int idx = static_cast<int>(reps_.size());
    reps_.push_back(k);
    for (Element h : subgroup_.elements())
      coset_of_[g.mul(k, h)] = idx;
  };
  assign(g.identity());
  for (Element x = 0; x < g.order(); ++x)
    if (coset_of_[x] < 0)
      assign(x);
}

Element CosetSystem::h(Element g) const
{
  const FiniteGroup& grp = subgroup_.group();
  return grp.mul(grp.inv(k(g)), g);
}

ConjugacyData conjugacy_classes(const Subgroup& domain)
{
  const FiniteGroup& g = domain.group();
  ConjugacyData data{domain, {}, std::vector<int>(g.order(), -1), {}};
  auto add = [&](Element x) {
    std::vector<Element> cls;
    for (Element h : domain.elements()) {
      const Element y = g.conj(h, x);
      if (data.class_of[y] < 0) {
        data.class_of[y] = data.size();
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    data.class_sizes.push_back(static_cast<int>(cls.size()));
    data.classes.push_back(std::move(cls));
  };
  add(g.identity());
  for (Element x : domain.elements())
    if (data.class_of[x] < 0)
      add(x);
  return data;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& group, std::size_t cap)
{
  const FiniteGroup& g = *group;
  if (static_cast<std::size_t>(g.order()) > cap)
    throw ValidationError("group order " + std::to_string(g.order()) +
                          " exceeds the subgroup enumeration cap " + std::to_string(cap));

  struct Entry
  {
    std::vector<Element> elems;
    std::vector<Element> gens;
  };
  std::vector<Entry> cyclic;
  std::set<std::vector<Element>> seen;
  for (Element x = 0; x < g.order(); ++x) {
    auto elems = closure(g, {x});
    if (seen.insert(elems).second)
      cyclic.push_back({std::move(elems), {x}});
  }

  std::vector<Entry> known = cyclic;
  std::vector<Entry> frontier = cyclic;
  std::vector<Element> everything(g.order());
  std::iota(everything.begin(), everything.end(), 0);
  while (!frontier.empty()) {
    std::vector<Entry> next;
    for (const Entry& s : frontier) {
      std::vector<bool> in(g.order(), false);
      for (Element e : s.elems)
        in[e] = true;
      for (const Entry& c : cyclic) {
        if (in[c.gens[0]])
          continue;
        std::vector<Element> gens = s.gens;
        gens.push_back(c.gens[0]);
        // Lagrange: a subgroup whose order is a multiple of lcm(|S|, |C|)
        // exceeding |G|/2 is G itself.
        const std::size_t l = std::lcm(s.elems.size(), c.elems.size());
        auto elems = 2 * l > everything.size() ? everything : closure(g, gens);
        if (seen.insert(elems).second) {
          Entry e{std::move(elems), std::move(gens)};
          known.push_back(e);
          next.push_back(std::move(e));
        }
      }
    }
    frontier = std::move(next);
  }

  std::sort(known.begin(), known.end(), [](const Entry& a, const Entry& b) {
    if (a.elems.size() != b.elems.size())
      return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (auto& e : known)
    out.push_back(Subgroup::generated_by(group, e.gens));
  return out;
}

std::vector<Subgroup> subgroups_up_to_conjugacy(const GroupPtr& group, std::size_t cap)
{
  std::vector<Subgroup> reps;
  std::set<std::vector<Element>> covered;
  for (auto& h : all_subgroups(group, cap)) {
    if (covered.count(h.elements()))
      continue;
    for (Element g = 0; g < group->order(); ++g)
      covered.insert(h.conjugate_by(g).elements());
    reps.push_back(std::move(h));
  }
  return reps;
}

Subgroup core(const Subgroup& h)
{
  const FiniteGroup& g = h.group();
  std::vector<Element> keep;
  for (Element x : h.elements()) {
    bool in_all = true;
    // x in g H g^-1 for all g  <=>  g^-1 x g in H for all g
    for (Element y = 0; y < g.order() && in_all; ++y)
      in_all = h.contains(g.conj(g.inv(y), x));
    if (in_all)
      keep.push_back(x);
  }
  return Subgroup::from_elements(h.parent(), std::move(keep));
}

Subgroup derived_subgroup(const Subgroup& h)
{
  const FiniteGroup& g = h.group();
  std::vector<Element> commutators;
  for (Element a : h.elements())
    for (Element b : h.elements())
      commutators.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
  return Subgroup::generated_by(h.parent(), commutators);
}

bool are_conjugate(const Subgroup& a, const Subgroup& b)
{
  if (a.order() != b.order())
    return false;
  for (Element g = 0; g < a.group().order(); ++g)
    if (a.conjugate_by(g).elements() == b.elements())
      return true;
  return false;
}

} // namespace subfactor
