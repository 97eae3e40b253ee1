#ifndef SUBFACTOR_GROUP_HPP
#define SUBFACTOR_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subfactor {

/// Index of a group element inside its FiniteGroup.
using Element = int;

inline constexpr std::size_t kDefaultMaxOrder = 5000;
inline constexpr std::size_t kDefaultSubgroupCap = 128;

/// A finite group stored as a validated multiplication table.
///
/// Immutable after construction. Elements are indices 0..order-1; the
/// identity need not be index 0 for table input, but permutation closure
/// always places it first.
class FiniteGroup
{
public:
  /// Validates Latin-square, identity, inverse and associativity (exhaustive
  /// for order <= 64, 200000 sampled triples above that).
  static FiniteGroup from_table(std::vector<std::vector<int>> mult,
                                std::vector<std::string> labels = {});

  /// Closure of permutation generators (0-based image lists) under
  /// composition (a*b)(x) = a(b(x)). Elements are numbered in breadth-first
  /// order starting from the identity; labels use cycle notation.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators,
                                       std::size_t max_order = kDefaultMaxOrder);

  int order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return mult_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  /// g x g^-1
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }
  int element_order(Element a) const;

  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Looks up a label; falls back to a decimal element index.
  std::optional<Element> find(std::string_view token) const;

  std::vector<std::vector<int>> table() const;

  bool operator==(const FiniteGroup& other) const
  { return order_ == other.order_ && mult_ == other.mult_; }

private:
  FiniteGroup() = default;

  int order_ = 0;
  std::vector<int> mult_;
  Element identity_ = 0;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

/// A subgroup of a parent group, kept as a sorted element list together
/// with a position lookup so that data indexed "by subgroup element" can
/// live in dense arrays.
class Subgroup
{
public:
  /// Throws ValidationError unless elements form a subgroup of parent.
  static Subgroup from_elements(GroupPtr parent, std::vector<Element> elements);
  static Subgroup generated_by(GroupPtr parent, std::span<const Element> generators);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const FiniteGroup& group() const { return *parent_; }
  const std::vector<Element>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  int index() const { return parent_->order() / order(); }
  bool contains(Element g) const { return position_[g] >= 0; }
  /// Position of g in elements(), or -1.
  int position(Element g) const { return position_[g]; }
  Element at(int pos) const { return elements_[pos]; }
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_whole() const { return order() == parent_->order(); }

  bool is_subgroup_of(const Subgroup& other) const;
  /// g H g^-1
  Subgroup conjugate_by(Element g) const;
  bool is_normal() const;

  std::string describe() const;

  bool operator==(const Subgroup& other) const
  { return parent_ == other.parent_ && elements_ == other.elements_; }

private:
  Subgroup(GroupPtr parent, std::vector<Element> elements);

  GroupPtr parent_;
  std::vector<Element> elements_;
  std::vector<int> position_;
};

/// Left cosets kH with one fixed representative each. reps[0] is the
/// identity; other cosets are ordered by their smallest element index,
/// which is also the chosen representative.
class CosetSystem
{
public:
  explicit CosetSystem(Subgroup subgroup);

  const Subgroup& subgroup() const { return subgroup_; }
  const std::vector<Element>& reps() const { return reps_; }
  int size() const { return static_cast<int>(reps_.size()); }
  /// Index into reps() of the coset containing g.
  int coset_of(Element g) const { return coset_of_[g]; }
  /// g = k(g) h(g) with k(g) a representative and h(g) in H.
  Element k(Element g) const { return reps_[coset_of_[g]]; }
  Element h(Element g) const;

private:
  Subgroup subgroup_;
  std::vector<Element> reps_;
  std::vector<int> coset_of_;
};

/// Conjugacy classes of a domain subgroup under conjugation by its own
/// elements. The identity class comes first; the rest are ordered by smallest
/// member. class_of is indexed by parent element and is -1 outside the domain.
struct ConjugacyData
{
  Subgroup domain;
  std::vector<std::vector<Element>> classes;
  std::vector<int> class_of;
  std::vector<int> class_sizes;

  int size() const { return static_cast<int>(classes.size()); }
  Element representative(int c) const { return classes[c][0]; }
};

ConjugacyData conjugacy_classes(const Subgroup& domain);

/// Every subgroup exactly once, sorted by order then by element list.
/// Cyclic-extension: start from cyclic subgroups and repeatedly join with
/// cyclic subgroups until nothing new appears.
std::vector<Subgroup> all_subgroups(const GroupPtr& group,
                                    std::size_t cap = kDefaultSubgroupCap);

/// One representative per conjugacy class of subgroups (the first one in
/// all_subgroups order).
std::vector<Subgroup> subgroups_up_to_conjugacy(const GroupPtr& group,
                                                std::size_t cap = kDefaultSubgroupCap);

/// N(H), the intersection of all conjugates g H g^-1.
Subgroup core(const Subgroup& h);

/// Commutator subgroup [H, H].
Subgroup derived_subgroup(const Subgroup& h);

/// Whether a and b are conjugate subgroups of their common parent.
bool are_conjugate(const Subgroup& a, const Subgroup& b);

} // namespace subfactor

#endif // SUBFACTOR_GROUP_HPP
