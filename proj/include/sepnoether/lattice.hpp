#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sepnoether/blockmonoid.hpp"

namespace sepnoether {

/// Integer row lattice in Z^k kept in Hermite normal form: rows in
/// row-echelon order, positive pivots, entries above each pivot reduced into
/// [0, pivot). Optionally tracks, for each HNF row, its coefficients with
/// respect to the generators added so far.
class LatticeBasis {
 public:
  explicit LatticeBasis(std::size_t dimension, bool track_transform = false);

  /// HNF of the row lattice spanned by `rows` (which must share a length).
  static LatticeBasis hnf(const std::vector<std::vector<Int>>& rows, bool track_transform = false);

  void add_generator(std::span<const Int> row);

  bool contains(std::span<const Int> v) const;
  /// Coefficients c with sum_j c_j * generator_j == v, or nullopt when v is
  /// not in the lattice. Requires transform tracking.
  std::optional<std::vector<Int>> coefficients(std::span<const Int> v) const;

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t generator_count() const noexcept { return generator_count_; }
  const std::vector<std::vector<Int>>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivot_cols_; }
  std::vector<Int> pivots() const;
  /// [Z^k : L] for a full-rank lattice, 0 otherwise.
  Int index() const;
  bool tracks_transform() const noexcept { return track_; }

 private:
  void reduce_above();
  void check_dimension(std::size_t n) const;

  std::size_t dim_;
  bool track_;
  std::size_t generator_count_ = 0;
  std::vector<std::vector<Int>> rows_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<std::vector<Int>> transforms_;  // transforms_[j] * generators == rows_[j]
};

struct WitnessTerm {
  Int coeff;
  MultVector vector;
  friend bool operator==(const WitnessTerm&, const WitnessTerm&) = default;
};

/// target == sum coeff * vector.
struct Decomposition {
  MultVector target;
  std::vector<WitnessTerm> terms;

  std::vector<Int> evaluate() const;
  /// Sum reproduces the target and every term is zero-sum in ctx with length
  /// strictly below |target|.
  bool verify(const Context& ctx) const;
};

struct GroupAtomVerdict {
  bool is_group_atom = false;
  std::optional<Decomposition> witness;  // present iff !is_group_atom
  std::size_t generating_set_size = 0;
};

/// Group-atom test: m is a group atom iff m is not in the lattice L generated
/// by the monoid elements of length < |m|. Every such element is a sum of
/// atoms that are themselves shorter than |m|, so L is generated by the atoms
/// of length < |m| alone; that smaller set is what gets reduced here.
GroupAtomVerdict is_group_atom(const Context& ctx, const MultVector& m, const SearchLimits& limits = {});

/// Sufficient condition for a group atom without lattice work. Verifies by
/// enumeration that (i) d divides coordinate `index` of every atom with
/// non-full support, (ii) d does not divide m[index], (iii) |m| is minimal
/// among full-support atoms. `index` is 0-based. m must have full support.
bool certify_by_divisibility(const Context& ctx, const MultVector& m, std::size_t index, Int d,
                             const SearchLimits& limits = {});

/// The l in {1,...,alpha*gamma-1} with gcd(l, alpha*gamma) = 1 and
/// l*beta = 1 mod alpha, obtained as the least positive solution of
/// x = beta^{-1} (mod alpha), x = 1 (mod p) for each prime p | gamma, p !| alpha.
/// Returns 1 when alpha*gamma == 1.
Int find_scaling_unit(Int alpha, Int beta, Int gamma);

struct ScalingRefutation {
  Int ell = 0;
  Int ell_inverse = 0;  // modulo the exponent n_1
  Int gcd_d = 0;        // gcd(|m|, ord(g_k))
  MultVector scaled;    // entrywise l*m_i mod ord(g_i)
  bool via_complement = false;
  Decomposition decomposition;
};

/// Writes m (k = 2s+1 elements, ord(g_i) = exp(G) for i < k, and
/// |m| > s*exp(G) + ord(g_k)/p with p the least prime of ord(g_k)) as an
/// integral combination of strictly shorter monoid elements by rescaling with
/// a unit. Throws InvalidInput when the preconditions fail.
ScalingRefutation refute_by_scaling(const Context& ctx, const MultVector& m);

}  // namespace sepnoether
