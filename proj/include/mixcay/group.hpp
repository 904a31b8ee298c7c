#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mixcay {

using Element = std::uint32_t;

inline constexpr Element kIdentity = 0;
inline constexpr std::size_t kDefaultGroupCap = 24;

/// Sorted, duplicate-free set of element indices of a group of known order.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::size_t group_order, std::vector<Element> members);
  ElementSet(std::size_t group_order, std::initializer_list<Element> members)
      : ElementSet(group_order, std::vector<Element>(members)) {}

  static ElementSet full(std::size_t group_order);

  std::size_t group_order() const noexcept { return group_order_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Element e) const;
  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet with(Element e) const;
  ElementSet without(Element e) const;
  ElementSet without(const ElementSet& other) const;
  ElementSet united(const ElementSet& other) const;

  const std::vector<Element>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Element operator[](std::size_t i) const { return members_[i]; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.members_ == b.members_;
  }
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::size_t group_order_ = 0;
  std::vector<Element> members_;
};

/// Finite group stored as a Cayley table over dense indices with the
/// identity at index 0. Immutable after construction.
class Group {
 public:
  /// Validates closure, identity at 0, Latin-square rows/columns and
  /// associativity; throws Error(validation) naming the first failure.
  static Group from_table(std::vector<std::vector<Element>> table,
                          std::string name);

  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }

  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  bool contains(Element a) const noexcept { return a < order_; }

  std::vector<std::vector<Element>> table() const;

  // Optional display names, one per element; empty when none were given.
  const std::vector<std::string>& element_names() const noexcept {
    return element_names_;
  }
  Group with_element_names(std::vector<std::string> names) const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  Group() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::string name_;
  std::vector<std::string> element_names_;
};

struct Subgroup {
  ElementSet elements;
  std::size_t parent_order = 0;

  std::size_t order() const noexcept { return elements.size(); }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

Group make_cyclic(std::size_t n);
Group make_dihedral(std::size_t n);
Group make_symmetric(std::size_t n);
Group direct_product(const Group& a, const Group& b);

/// Parses the plain-text table format: `order n` followed by n rows of n
/// whitespace-separated indices.
Group make_from_table(std::string_view text, std::string name = "table");

/// Accepts `Zn`, `Dn`, `Sn` and direct products `A x B` (left-associative).
Group parse_group_spec(std::string_view spec);

std::string format_table(const Group& g);

ElementSet make_element_set(const Group& g, std::vector<Element> members);

bool is_subgroup(const Group& g, const ElementSet& s);
Subgroup generated_subgroup(const Group& g, const ElementSet& s);

/// Every subgroup of g, sorted by (order, elements). Throws
/// Error(capacity) when the order exceeds cap.
std::vector<Subgroup> all_subgroups(const Group& g,
                                    std::size_t cap = kDefaultGroupCap);

Subgroup conjugate_subgroup(const Group& g, Element t, const Subgroup& h);
ElementSet left_coset(const Group& g, Element t, const Subgroup& h);
ElementSet left_coset(const Group& g, Element t, const ElementSet& h);
ElementSet right_coset(const Group& g, const ElementSet& h, Element t);
ElementSet set_product(const Group& g, const ElementSet& a,
                       const ElementSet& b);
ElementSet set_inverse(const Group& g, const ElementSet& a);

}  // namespace mixcay
