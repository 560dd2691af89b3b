#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sepnoether/arith.hpp"

namespace sepnoether {

inline constexpr Int kDefaultElementCap = 1'000'000;

/// A finite abelian group C_{n_1} + ... + C_{n_r} in invariant-factor form,
/// n_r | n_{r-1} | ... | n_1, every n_i >= 2.
class GroupSpec {
 public:
  /// Canonicalizes an arbitrary list of cyclic orders. Factors equal to 1 are
  /// dropped; a trivial result is rejected.
  static GroupSpec canonicalize(std::span<const Int> moduli);
  static GroupSpec canonicalize(std::initializer_list<Int> moduli) {
    return canonicalize(std::span<const Int>(moduli.begin(), moduli.size()));
  }

  /// Accepts "12,4" or "C12xC4" (case-insensitive).
  static GroupSpec parse(std::string_view text);

  const std::vector<Int>& moduli() const noexcept { return moduli_; }
  Int modulus(std::size_t i) const { return moduli_.at(i); }
  std::size_t rank() const noexcept { return moduli_.size(); }
  Int exponent() const noexcept { return moduli_.front(); }
  Int order() const;
  bool is_cyclic() const noexcept { return moduli_.size() == 1; }

  /// "12,4"
  std::string to_string() const;
  /// "C12xC4"
  std::string to_alias() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  explicit GroupSpec(std::vector<Int> moduli) : moduli_(std::move(moduli)) {}
  std::vector<Int> moduli_;
};

/// Residue vector; coords[i] in [0, n_i).
struct GroupElement {
  std::vector<Int> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Reduces arbitrary integer coordinates into G. Throws on rank mismatch.
GroupElement make_element(const GroupSpec& group, std::span<const Int> coords);
GroupElement make_element(const GroupSpec& group, std::initializer_list<Int> coords);
GroupElement identity(const GroupSpec& group);
bool is_identity(const GroupElement& g);

/// Checks rank and that every residue is reduced.
bool belongs_to(const GroupSpec& group, const GroupElement& g);

Int element_order(const GroupSpec& group, const GroupElement& g);
Int d_star(const GroupSpec& group);

GroupElement add(const GroupSpec& group, const GroupElement& g, const GroupElement& h);
GroupElement negate(const GroupSpec& group, const GroupElement& g);
GroupElement scalar_mul(const GroupSpec& group, Int c, const GroupElement& g);

/// Mixed-radix index with the first coordinate most significant, so index
/// order coincides with lexicographic coordinate order.
Int element_index(const GroupSpec& group, const GroupElement& g);
GroupElement element_at(const GroupSpec& group, Int index);

/// All elements in lexicographic order, identity first.
std::vector<GroupElement> enumerate_elements(const GroupSpec& group, Int cap = kDefaultElementCap);

/// Size of the subgroup generated by the given elements.
Int subgroup_order(const GroupSpec& group, std::span<const GroupElement> gens);

/// "(1,0)"
std::string to_string(const GroupElement& g);
GroupElement parse_element(const GroupSpec& group, std::string_view text);

}  // namespace sepnoether
