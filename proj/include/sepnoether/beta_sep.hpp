#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "sepnoether/blockmonoid.hpp"

namespace sepnoether {

/// floor(exp(G) * (rank(G) + 1) / 2)
Int upper_bound(const GroupSpec& group);

/// Knobs for the subset sweep. Defaults enable every sound pruning except
/// the automorphism reduction.
struct SweepOptions {
  int workers = 1;
  bool full_support_only = true;  // only full-support group atoms count for a context
  bool length_rule = true;        // skip |m| > max ord with 2|m| > sum ord
  bool early_exit = true;         // stop at the general upper bound; lattice saturation stop
  bool symmetry = false;          // one subset per Aut(G)-orbit
  bool include_identity = false;  // audit: let contexts contain 0
  SearchLimits limits;
  Int element_cap = 4096;
  std::uint64_t subset_cap = 50'000'000;
  std::uint64_t automorphism_cap = 20'000'000;
  std::size_t wave_size = 512;  // contexts per deterministic merge round

  /// Every pruning disabled.
  static SweepOptions audit();
};

struct GroupAtomMax {
  Int length = 0;
  MultVector witness;  // lexicographically least among maximal-length group atoms
  std::size_t atoms_examined = 0;
};

/// Maximal length of a group atom in B(ctx), no pruning.
GroupAtomMax max_group_atom_length(const Context& ctx, const SearchLimits& limits = {});

/// Same with the context-level prunings of `options` applied
/// (full_support_only, length_rule, early_exit).
GroupAtomMax max_group_atom_length(const Context& ctx, const SweepOptions& options);

struct BetaSepResult {
  GroupSpec group;
  Int value = 0;
  Int upper_bound = 0;
  Context witness_context;
  MultVector witness_vector;
  std::uint64_t subsets_examined = 0;
  std::uint64_t subsets_pruned = 0;
  std::chrono::milliseconds elapsed{0};
};

/// beta_sep(G) as the maximal group-atom length over all contexts of at most
/// rank(G)+1 distinct non-identity elements. Contexts are ordered by size,
/// then lexicographically by element coordinates; the witness is the least
/// (context, vector) attaining the maximum. OpenMP over contexts, merged in
/// fixed-size waves so value, witness and counters do not depend on the
/// worker count.
BetaSepResult beta_sep(const GroupSpec& group, const SweepOptions& options = {});

/// Single-threaded reference sweep with the same semantics for value and
/// witness; counters may differ from beta_sep since pruning sees every
/// preceding result immediately.
BetaSepResult beta_sep_reference(const GroupSpec& group, const SweepOptions& options = {});

/// Audit note explaining why the identity is excluded from sweep contexts.
std::string identity_exclusion_note(const GroupSpec& group);

/// Automorphisms of G as permutations of element indices (see element_index).
std::vector<std::vector<std::uint32_t>> automorphisms(const GroupSpec& group, std::uint64_t cap);

}  // namespace sepnoether
