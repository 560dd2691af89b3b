#include "sepnoether/beta_sep.hpp"

#include <algorithm>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sepnoether/lattice.hpp"

namespace sepnoether {

Int upper_bound(const GroupSpec& group) {
  return checked_mul(group.exponent(), static_cast<Int>(group.rank()) + 1) / 2;
}

SweepOptions SweepOptions::audit() {
  SweepOptions o;
  o.full_support_only = false;
  o.length_rule = false;
  o.early_exit = false;
  o.symmetry = false;
  return o;
}

namespace {

// Group atoms longer than max ord satisfy 2|m| <= sum of orders; this is the resulting length ceiling.
Int context_ceiling(const Context& ctx) { return std::max(ctx.max_order(), ctx.order_sum() / 2); }

GroupAtomMax scan_context(const Context& ctx, bool full_support_only, bool length_rule, bool saturation,
                          const SearchLimits& limits) {
  const std::size_t k = ctx.size();
  const Int max_ord = ctx.max_order();
  const Int ord_sum = ctx.order_sum();
  std::optional<Int> max_len;
  if (length_rule) max_len = context_ceiling(ctx);

  const auto atoms = atoms_by_length(ctx, max_len, limits);
  const Int target_index = saturation ? subgroup_order(ctx.group(), ctx.elements()) : 0;

  GroupAtomMax best;
  best.witness = MultVector::zero(k);
  LatticeBasis lattice(k);
  std::size_t i = 0;
  while (i < atoms.size()) {
    const Int len = atoms[i].length();
    std::size_t level_end = i;
    while (level_end < atoms.size() && atoms[level_end].length() == len) ++level_end;

    const bool length_ok = !length_rule || len <= max_ord || 2 * len <= ord_sum;
    if (length_ok) {
      for (std::size_t j = i; j < level_end; ++j) {
        const MultVector& a = atoms[j];
        if (full_support_only && a.support_size() != k) continue;
        ++best.atoms_examined;
        if (!lattice.contains(a.entries())) {
          best.length = len;
          best.witness = a;
          break;  // level is in lexicographic order
        }
      }
    }
    for (std::size_t j = i; j < level_end; ++j) lattice.add_generator(atoms[j].entries());
    if (saturation && lattice.index() == target_index) break;
    i = level_end;
  }
  return best;
}

// Ordering key of a candidate result: longer is better, then earlier context
// position, then lexicographically smaller vector.
struct Best {
  Int length = 0;
  std::uint64_t position = 0;
  std::vector<Int> vector;
  std::vector<std::uint32_t> subset;

  bool improved_by(Int len, std::uint64_t pos, const MultVector& v) const {
    if (len != length) return len > length;
    if (pos != position) return pos < position;
    return v.entries() < vector;
  }
};

class SweepPlan {
 public:
  SweepPlan(const GroupSpec& group, const SweepOptions& options) : group_(group), options_(options) {
    if (options_.workers < 1) fail(ErrorKind::InvalidInput, "workers must be >= 1");
    const Int n = group.order();
    if (n > options_.element_cap)
      fail(ErrorKind::CapExceeded, "group order " + std::to_string(n) + " exceeds sweep element cap " +
                                       std::to_string(options_.element_cap));
    elements_ = enumerate_elements(group, options_.element_cap);
    for (Int idx = options_.include_identity ? 0 : 1; idx < n; ++idx)
      pool_.push_back(static_cast<std::uint32_t>(idx));
    max_k_ = std::min<std::size_t>(group.rank() + 1, pool_.size());
    std::uint64_t total = 0;
    for (std::size_t k = 1; k <= max_k_; ++k) {
      total += static_cast<std::uint64_t>(binomial(static_cast<Int>(pool_.size()), static_cast<Int>(k)));
      if (total > options_.subset_cap)
        fail(ErrorKind::CapExceeded, "sweep needs more than " + std::to_string(options_.subset_cap) + " subsets");
    }
    total_ = total;
    bound_ = upper_bound(group);
    if (options_.symmetry) autos_ = automorphisms(group, options_.automorphism_cap);
  }

  std::size_t max_k() const { return max_k_; }
  std::uint64_t total() const { return total_; }
  Int bound() const { return bound_; }
  const SweepOptions& options() const { return options_; }
  const GroupSpec& group() const { return group_; }

  /// Subsets in sweep order: by size, then lexicographic on pool positions
  /// (pool order is element-index order, i.e. lexicographic coordinates).
  template <typename Visit>
  void for_each_subset(Visit&& visit) const {
    std::uint64_t position = 0;
    for (std::size_t k = 1; k <= max_k_; ++k) {
      std::vector<std::uint32_t> pick(k);
      for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<std::uint32_t>(i);
      while (true) {
        std::vector<std::uint32_t> subset(k);
        for (std::size_t i = 0; i < k; ++i) subset[i] = pool_[pick[i]];
        if (!visit(position++, std::move(subset))) return;
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == pool_.size() - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }

  Context make_context(const std::vector<std::uint32_t>& subset) const {
    std::vector<GroupElement> els;
    els.reserve(subset.size());
    for (auto idx : subset) els.push_back(elements_[idx]);
    return Context(group_, std::move(els));
  }

  bool is_canonical(const std::vector<std::uint32_t>& subset) const {
    std::vector<std::uint32_t> image(subset.size());
    for (const auto& phi : autos_) {
      for (std::size_t i = 0; i < subset.size(); ++i) image[i] = phi[subset[i]];
      std::sort(image.begin(), image.end());
      if (image < subset) return false;
    }
    return true;
  }

  struct Outcome {
    bool examined = false;
    GroupAtomMax result;
  };

  /// Work for one context given the best result known when the round began.
  Outcome evaluate(std::uint64_t position, const std::vector<std::uint32_t>& subset, const Best& known) const {
    Outcome out;
    if (options_.symmetry && !is_canonical(subset)) return out;
    Context ctx = make_context(subset);
    if (options_.length_rule) {
      const Int ceiling = context_ceiling(ctx);
      if (ceiling < known.length || (ceiling == known.length && position > known.position)) return out;
    }
    out.examined = true;
    out.result = scan_context(ctx, options_.full_support_only, options_.length_rule, options_.early_exit,
                              options_.limits);
    return out;
  }

  BetaSepResult finish(const Best& best, std::uint64_t examined, std::uint64_t pruned,
                       std::chrono::steady_clock::time_point start) const {
    if (best.length == 0) fail(ErrorKind::Internal, "sweep found no group atom");
    Context ctx = make_context(best.subset);
    MultVector witness(best.vector);
    if (!is_group_atom(ctx, witness, options_.limits).is_group_atom)
      fail(ErrorKind::Internal, "sweep witness " + witness.to_string() + " failed group-atom re-verification");
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return BetaSepResult{group_, best.length, bound_, std::move(ctx), std::move(witness), examined, pruned, elapsed};
  }

 private:
  GroupSpec group_;
  SweepOptions options_;
  std::vector<GroupElement> elements_;
  std::vector<std::uint32_t> pool_;
  std::size_t max_k_ = 0;
  std::uint64_t total_ = 0;
  Int bound_ = 0;
  std::vector<std::vector<std::uint32_t>> autos_;
};

void absorb(Best& best, std::uint64_t position, const std::vector<std::uint32_t>& subset, const GroupAtomMax& r) {
  if (r.length == 0 || !best.improved_by(r.length, position, r.witness)) return;
  best.length = r.length;
  best.position = position;
  best.vector = r.witness.entries();
  best.subset = subset;
}

}  // namespace

GroupAtomMax max_group_atom_length(const Context& ctx, const SearchLimits& limits) {
  return scan_context(ctx, false, false, false, limits);
}

GroupAtomMax max_group_atom_length(const Context& ctx, const SweepOptions& options) {
  return scan_context(ctx, options.full_support_only, options.length_rule, options.early_exit, options.limits);
}

BetaSepResult beta_sep_reference(const GroupSpec& group, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SweepPlan plan(group, options);
  Best best;
  std::uint64_t examined = 0;
  plan.for_each_subset([&](std::uint64_t position, std::vector<std::uint32_t> subset) {
    if (options.early_exit && best.length == plan.bound()) return false;
    auto outcome = plan.evaluate(position, subset, best);
    if (outcome.examined) ++examined;
    absorb(best, position, subset, outcome.result);
    return true;
  });
  return plan.finish(best, examined, plan.total() - examined, start);
}

BetaSepResult beta_sep(const GroupSpec& group, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SweepPlan plan(group, options);
  Best best;
  std::uint64_t examined = 0;

  std::vector<std::uint64_t> positions;
  std::vector<std::vector<std::uint32_t>> wave;
  const std::size_t wave_size = std::max<std::size_t>(1, options.wave_size);
  bool stop = false;

  auto run_wave = [&] {
    const Best snapshot = best;
    std::vector<SweepPlan::Outcome> outcomes(wave.size());
    std::exception_ptr error;
    const auto count = static_cast<std::int64_t>(wave.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(options.workers)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        outcomes[static_cast<std::size_t>(i)] =
            plan.evaluate(positions[static_cast<std::size_t>(i)], wave[static_cast<std::size_t>(i)], snapshot);
      } catch (...) {
#pragma omp critical(sepnoether_sweep_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    for (std::size_t i = 0; i < wave.size(); ++i) {
      if (outcomes[i].examined) ++examined;
      absorb(best, positions[i], wave[i], outcomes[i].result);
    }
    wave.clear();
    positions.clear();
    if (options.early_exit && best.length == plan.bound()) stop = true;
  };

  plan.for_each_subset([&](std::uint64_t position, std::vector<std::uint32_t> subset) {
    positions.push_back(position);
    wave.push_back(std::move(subset));
    if (wave.size() == wave_size) run_wave();
    return !stop;
  });
  if (!stop && !wave.empty()) run_wave();
  return plan.finish(best, examined, plan.total() - examined, start);
}

std::string identity_exclusion_note(const GroupSpec& group) {
  return "contexts range over non-identity elements of " + group.to_alias() +
         ": a context containing 0 only gains the atom [1] at that coordinate, which never raises the maximal "
         "group-atom length; the reduction of beta_sep to group atoms over contexts of size <= rank+1 is taken as "
         "the definition of the computed quantity";
}

std::vector<std::vector<std::uint32_t>> automorphisms(const GroupSpec& group, std::uint64_t cap) {
  const auto elements = enumerate_elements(group);
  const std::size_t r = group.rank();
  const Int n = group.order();

  // Candidate images of each basis vector e_j: elements h with n_j * h = 0.
  std::vector<std::vector<GroupElement>> candidates(r);
  std::uint64_t combos = 1;
  for (std::size_t j = 0; j < r; ++j) {
    for (const auto& h : elements)
      if (is_identity(scalar_mul(group, group.modulus(j), h))) candidates[j].push_back(h);
    combos *= candidates[j].size();
    if (combos > cap) fail(ErrorKind::CapExceeded, "automorphism candidate count exceeds cap " + std::to_string(cap));
  }

  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::size_t> choice(r, 0);
  std::vector<char> seen(static_cast<std::size_t>(n));
  while (true) {
    std::vector<std::uint32_t> perm(static_cast<std::size_t>(n));
    std::fill(seen.begin(), seen.end(), 0);
    bool bijective = true;
    for (std::size_t x = 0; x < elements.size() && bijective; ++x) {
      GroupElement image = identity(group);
      for (std::size_t j = 0; j < r; ++j)
        image = add(group, image, scalar_mul(group, elements[x].coords[j], candidates[j][choice[j]]));
      const auto idx = static_cast<std::size_t>(element_index(group, image));
      if (seen[idx]) bijective = false;
      seen[idx] = 1;
      perm[x] = static_cast<std::uint32_t>(idx);
    }
    if (bijective) out.push_back(std::move(perm));
    std::size_t j = 0;
    while (j < r && ++choice[j] == candidates[j].size()) choice[j++] = 0;
    if (j == r) break;
  }
  return out;
}

}  // namespace sepnoether
