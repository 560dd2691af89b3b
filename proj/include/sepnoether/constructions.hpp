#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepnoether/beta_sep.hpp"
#include "sepnoether/lattice.hpp"

namespace sepnoether {

enum class CertificateKind { Divisibility, Lattice };

std::string to_string(CertificateKind kind);

/// A context and a group atom in it whose length bounds beta_sep(G) from below.
struct WitnessPackage {
  Context ctx;
  MultVector m;
  Int claimed_length = 0;
  CertificateKind certificate = CertificateKind::Lattice;
  std::size_t certificate_index = 0;  // 0-based coordinate for the divisibility certificate
  Int certificate_divisor = 0;
  bool odd_table = true;
  Int prime = 0;  // even table only

  /// Re-runs the recorded certificate.
  bool recertify(const SearchLimits& limits = {}) const;
};

/// Odd rank r = 2s-1: g_1 = e_1, g_{2i} = e_i + f_i, g_{2i+1} = f_i + e_{i+1},
/// g_{r+1} = e_s with m = [n_1-1, 1, ..., n_s-1, 1]. For r = 1 the table
/// collapses and the context (e_1) with m = [n_1] is used instead.
WitnessPackage odd_rank_construction(const GroupSpec& group);

/// Even rank r = 2s with a prime p | n_r (default: the least one):
/// g_1 = e_1 + (n_{s+1}/p) f_1, g_{2i} = e_i + f_{i+1}, g_{2i+1} = f_{i+1} + e_{i+1},
/// g_r = e_s, g_{r+1} = f_1 with m = [n_1-1, 1, ..., n_s-1, 1, n_{s+1}/p].
WitnessPackage even_rank_construction(const GroupSpec& group, std::optional<Int> prime = std::nullopt);

/// Whichever construction matches the rank parity.
WitnessPackage construction_for(const GroupSpec& group);

/// n_1 + ... + n_s (odd rank) or n_1 + ... + n_s + n_{s+1}/p (even rank,
/// least prime p | n_r).
Int construction_lower_bound(const GroupSpec& group);

/// Checks that the generator matrix of a construction context links the
/// coordinates into the congruence chain m_1 = -m_2 = ... (mod n_r) the
/// divisibility argument relies on.
bool congruence_chain_holds(const WitnessPackage& pkg);

/// Congruence chain holds, and every atom of B(ctx) with non-full support has
/// all coordinates divisible by d (full enumeration).
bool check_support_divisibility(const WitnessPackage& pkg, Int d, const SearchLimits& limits = {});

enum class CheckStatus { Match, Mismatch, Skipped };
std::string to_string(CheckStatus status);

struct TheoremCheck {
  std::string theorem;  // "6.1" | "6.2" | "1.2" | "remark-6.3"
  bool applies = false;
  std::optional<Int> closed_form;
  std::optional<Int> computed;
  CheckStatus status = CheckStatus::Skipped;
  std::string hypothesis;  // human-readable evaluation of the hypotheses
};

struct VerifyOptions {
  SweepOptions sweep;
  bool run_sweep = true;
};

struct TheoremReport {
  GroupSpec group;
  Int upper_bound = 0;
  Int lower_bound = 0;           // length of the construction witness
  bool lower_bound_certified = false;
  std::optional<BetaSepResult> sweep;
  std::string sweep_note;        // why the sweep was skipped, if it was
  std::vector<TheoremCheck> checks;

  /// lower <= computed <= upper when computed, lower <= upper otherwise.
  bool bounds_consistent() const;
  bool has_mismatch() const;
};

/// Hypothesis evaluation for each closed form. Theorems whose hypotheses fail
/// are reported with applies = false and never asserted.
std::vector<TheoremCheck> applicable_theorems(const GroupSpec& group);

TheoremReport verify_theorems(const GroupSpec& group, const VerifyOptions& options = {});

/// Builds the report around an already computed (or absent) sweep result.
TheoremReport evaluate_theorems(const GroupSpec& group, std::optional<BetaSepResult> sweep, std::string sweep_note,
                                const SearchLimits& limits = {});

}  // namespace sepnoether
