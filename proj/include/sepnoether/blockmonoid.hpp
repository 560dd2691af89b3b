#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sepnoether/abelian.hpp"

namespace sepnoether {

inline constexpr std::uint64_t kDefaultNodeCap = 100'000'000;

struct SearchLimits {
  std::uint64_t node_cap = kDefaultNodeCap;
};

/// Element of N^k, candidate member of B(g_1,...,g_k).
class MultVector {
 public:
  MultVector() = default;
  explicit MultVector(std::vector<Int> entries);
  MultVector(std::initializer_list<Int> entries) : MultVector(std::vector<Int>(entries)) {}
  static MultVector zero(std::size_t k) { return MultVector(std::vector<Int>(k, 0)); }
  /// "[11,1,3]"
  static MultVector parse(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }
  Int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Int>& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  Int length() const noexcept;
  std::size_t support_size() const noexcept;
  bool is_zero() const noexcept { return length() == 0; }
  /// Componentwise a_i <= b_i.
  bool divides(const MultVector& other) const noexcept;

  std::string to_string() const;

  friend auto operator<=>(const MultVector&, const MultVector&) = default;
  friend bool operator==(const MultVector&, const MultVector&) = default;

 private:
  std::vector<Int> entries_;
};

MultVector operator+(const MultVector& a, const MultVector& b);

/// An ordered tuple of distinct elements (g_1,...,g_k) of a group, with
/// cached orders.
class Context {
 public:
  Context(GroupSpec group, std::vector<GroupElement> elements);

  /// "--elements (1,0);(1,1);(0,1)" style text.
  static Context parse(const GroupSpec& group, std::string_view elements);
  /// All non-identity elements in lexicographic order.
  static Context full_group(const GroupSpec& group, Int element_cap = kDefaultElementCap);

  const GroupSpec& group() const noexcept { return group_; }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Int>& orders() const noexcept { return orders_; }
  Int order(std::size_t i) const { return orders_.at(i); }
  std::size_t size() const noexcept { return elements_.size(); }
  Int max_order() const noexcept;
  Int order_sum() const noexcept;

  /// "(1,0);(1,1);(0,1)"
  std::string to_string() const;

  /// Lexicographic on the element list; group is assumed equal.
  friend bool operator<(const Context& a, const Context& b) { return a.elements_ < b.elements_; }
  friend bool operator==(const Context& a, const Context& b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }

 private:
  GroupSpec group_;
  std::vector<GroupElement> elements_;
  std::vector<Int> orders_;
};

bool is_zero_sum(const Context& ctx, const MultVector& m);

/// m*_i = ord(g_i) - m_i. Requires 0 <= m_i <= ord(g_i) and m zero-sum.
MultVector complementer(const Context& ctx, const MultVector& m);

/// True iff m is a nonzero zero-sum vector with no nonzero zero-sum vector
/// strictly below it componentwise. Throws if m is not zero-sum.
bool is_atom(const Context& ctx, const MultVector& m, const SearchLimits& limits = {});

/// Atoms of B(ctx) (optionally only those of length <= max_len), sorted
/// lexicographically. Every atom lies in the box prod [0, ord(g_i)].
std::vector<MultVector> enumerate_atoms(const Context& ctx, std::optional<Int> max_len = std::nullopt,
                                        const SearchLimits& limits = {});

/// Same atom set ordered by (length, lexicographic); the order the group-atom
/// machinery consumes.
std::vector<MultVector> atoms_by_length(const Context& ctx, std::optional<Int> max_len = std::nullopt,
                                        const SearchLimits& limits = {});

/// D(G): maximal atom length over the context of all non-identity elements.
Int davenport(const GroupSpec& group, const SearchLimits& limits = {});

/// Greedy decomposition of a zero-sum vector into atoms (repeatedly peel off
/// the first atom below what remains).
std::vector<MultVector> decompose_into_atoms(const Context& ctx, const MultVector& m, const SearchLimits& limits = {});

}  // namespace sepnoether
