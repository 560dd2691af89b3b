#include "sepnoether/constructions.hpp"

#include <algorithm>
#include <set>

namespace sepnoether {

std::string to_string(CertificateKind kind) {
  return kind == CertificateKind::Divisibility ? "divisibility" : "lattice";
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Match: return "MATCH";
    case CheckStatus::Mismatch: return "MISMATCH";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "SKIPPED";
}

bool WitnessPackage::recertify(const SearchLimits& limits) const {
  if (!is_zero_sum(ctx, m) || m.length() != claimed_length) return false;
  if (certificate == CertificateKind::Divisibility)
    return certify_by_divisibility(ctx, m, certificate_index, certificate_divisor, limits);
  return is_group_atom(ctx, m, limits).is_group_atom;
}

namespace {

// Basis vectors e_1..e_s on the first s coordinates, f_1.. on the rest.
struct Basis {
  const GroupSpec& group;
  std::size_t s;

  std::vector<Int> zero() const { return std::vector<Int>(group.rank(), 0); }
  std::size_t e(std::size_t i) const { return i - 1; }
  std::size_t f(std::size_t j) const { return s + j - 1; }
};

void require_distinct(const std::vector<GroupElement>& els) {
  std::set<GroupElement> seen(els.begin(), els.end());
  if (seen.size() != els.size()) fail(ErrorKind::Internal, "construction produced repeated elements");
}

}  // namespace

WitnessPackage odd_rank_construction(const GroupSpec& group) {
  const std::size_t r = group.rank();
  if (r % 2 == 0) fail(ErrorKind::InvalidInput, "odd_rank_construction needs odd rank, got " + std::to_string(r));
  const Int n1 = group.exponent();
  if (r == 1) {
    Context ctx(group, {make_element(group, {1})});
    WitnessPackage pkg{std::move(ctx), MultVector{n1}, n1, CertificateKind::Lattice, 0, 0, true, 0};
    return pkg;
  }
  const std::size_t s = (r + 1) / 2;
  Basis b{group, s};
  std::vector<std::vector<Int>> rows(r + 1, b.zero());
  rows[0][b.e(1)] = 1;
  for (std::size_t i = 1; i + 1 <= s; ++i) {
    rows[2 * i - 1][b.e(i)] = 1;  // g_{2i}
    rows[2 * i - 1][b.f(i)] = 1;
    rows[2 * i][b.f(i)] = 1;      // g_{2i+1}
    rows[2 * i][b.e(i + 1)] = 1;
  }
  rows[r][b.e(s)] = 1;

  std::vector<GroupElement> els;
  for (const auto& row : rows) els.push_back(make_element(group, row));
  require_distinct(els);

  std::vector<Int> m;
  Int length = 0;
  for (std::size_t i = 0; i < s; ++i) {
    m.push_back(group.modulus(i) - 1);
    m.push_back(1);
    length += group.modulus(i);
  }
  Context ctx(group, std::move(els));
  MultVector mv(std::move(m));
  if (!is_zero_sum(ctx, mv)) fail(ErrorKind::Internal, "odd construction witness is not zero-sum");
  return WitnessPackage{std::move(ctx), std::move(mv), length, CertificateKind::Divisibility, r,
                        group.modulus(r - 1), true, 0};
}

WitnessPackage even_rank_construction(const GroupSpec& group, std::optional<Int> prime) {
  const std::size_t r = group.rank();
  if (r % 2 != 0) fail(ErrorKind::InvalidInput, "even_rank_construction needs even rank, got " + std::to_string(r));
  const Int nr = group.modulus(r - 1);
  const Int p = prime.value_or(min_prime_divisor(nr));
  if (p < 2 || min_prime_divisor(p) != p) fail(ErrorKind::InvalidInput, std::to_string(p) + " is not a prime");
  if (nr % p != 0)
    fail(ErrorKind::InvalidInput, "prime " + std::to_string(p) + " does not divide n_r = " + std::to_string(nr));

  const std::size_t s = r / 2;
  const Int ns1 = group.modulus(s);  // n_{s+1}
  Basis b{group, s};
  std::vector<std::vector<Int>> rows(r + 1, b.zero());
  rows[0][b.e(1)] = 1;
  rows[0][b.f(1)] = ns1 / p;
  for (std::size_t i = 1; i + 1 <= s; ++i) {
    rows[2 * i - 1][b.e(i)] = 1;  // g_{2i}
    rows[2 * i - 1][b.f(i + 1)] = 1;
    rows[2 * i][b.f(i + 1)] = 1;  // g_{2i+1}
    rows[2 * i][b.e(i + 1)] = 1;
  }
  rows[r - 1][b.e(s)] = 1;
  rows[r][b.f(1)] = 1;

  std::vector<GroupElement> els;
  for (const auto& row : rows) els.push_back(make_element(group, row));
  require_distinct(els);

  std::vector<Int> m;
  Int length = 0;
  for (std::size_t i = 0; i < s; ++i) {
    m.push_back(group.modulus(i) - 1);
    m.push_back(1);
    length += group.modulus(i);
  }
  m.push_back(ns1 / p);
  length += ns1 / p;

  Context ctx(group, std::move(els));
  MultVector mv(std::move(m));
  if (!is_zero_sum(ctx, mv)) fail(ErrorKind::Internal, "even construction witness is not zero-sum");
  return WitnessPackage{std::move(ctx), std::move(mv), length, CertificateKind::Divisibility, 1, p, false, p};
}

WitnessPackage construction_for(const GroupSpec& group) {
  return group.rank() % 2 == 1 ? odd_rank_construction(group) : even_rank_construction(group);
}

Int construction_lower_bound(const GroupSpec& group) {
  const std::size_t r = group.rank();
  const std::size_t s = (r + 1) / 2;
  Int total = 0;
  for (std::size_t i = 0; i < s; ++i) total += group.modulus(i);
  if (r % 2 == 0) total += group.modulus(s) / min_prime_divisor(group.modulus(r - 1));
  return total;
}

bool congruence_chain_holds(const WitnessPackage& pkg) {
  const GroupSpec& group = pkg.ctx.group();
  const std::size_t r = group.rank();
  const std::size_t k = pkg.ctx.size();
  if (k != r + 1) return r == 1 && k == 1;  // degenerate cyclic package

  // Each column yields a link between positions a, a+1 when its only nonzero
  // entries there are equal units (+1,+1 or -1,-1), i.e. m_a + m_{a+1} = 0.
  std::vector<int> links(r, 0);
  std::size_t special_columns = 0;
  for (std::size_t c = 0; c < r; ++c) {
    const Int n = group.modulus(c);
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < k; ++i)
      if (pkg.ctx.element(i).coords[c] != 0) nz.push_back(i);
    if (nz.size() != 2) return false;
    const Int va = pkg.ctx.element(nz[0]).coords[c];
    const Int vb = pkg.ctx.element(nz[1]).coords[c];
    if (nz[1] == nz[0] + 1 && va == vb && (va == 1 || va == n - 1)) {
      ++links[nz[0]];
      continue;
    }
    // Even table: the f_1 column ties m_{r+1} to m_1 via m_{r+1} + m_1 * n/p = 0 (mod n).
    if (!pkg.odd_table && nz[0] == 0 && nz[1] == r && vb == 1 && pkg.prime > 0 && mod_floor(va * pkg.prime, n) == 0) {
      ++special_columns;
      continue;
    }
    return false;
  }
  const std::size_t needed = pkg.odd_table ? r : r - 1;
  for (std::size_t a = 0; a < r; ++a)
    if (links[a] != (a < needed ? 1 : 0)) return false;
  return pkg.odd_table ? special_columns == 0 : special_columns == 1;
}

bool check_support_divisibility(const WitnessPackage& pkg, Int d, const SearchLimits& limits) {
  if (d < 1) fail(ErrorKind::InvalidInput, "divisor must be positive");
  if (!congruence_chain_holds(pkg)) return false;
  const std::size_t k = pkg.ctx.size();
  for (const auto& a : atoms_by_length(pkg.ctx, std::nullopt, limits)) {
    if (a.support_size() == k) continue;
    for (Int entry : a)
      if (entry % d != 0) return false;
  }
  return true;
}

namespace {

bool leading_equal(const GroupSpec& group, std::size_t count) {
  for (std::size_t i = 1; i < count && i < group.rank(); ++i)
    if (group.modulus(i) != group.modulus(0)) return false;
  return true;
}

std::string moduli_label(std::size_t i) { return "n_" + std::to_string(i); }

}  // namespace

std::vector<TheoremCheck> applicable_theorems(const GroupSpec& group) {
  const std::size_t r = group.rank();
  const bool odd = r % 2 == 1;
  const std::size_t s = odd ? (r + 1) / 2 : r / 2;
  const Int n1 = group.exponent();
  const Int p = min_prime_divisor(n1);
  std::vector<TheoremCheck> out;

  {
    TheoremCheck t;
    t.theorem = "6.1";
    if (!odd) {
      t.hypothesis = "rank " + std::to_string(r) + " is even";
    } else {
      t.applies = leading_equal(group, s);
      t.hypothesis = "r = 2s-1 with s = " + std::to_string(s) + "; " + moduli_label(s) + " = ... = n_1: " +
                     (t.applies ? "yes" : "no");
      if (t.applies) t.closed_form = static_cast<Int>(s) * n1;
    }
    out.push_back(std::move(t));
  }
  {
    TheoremCheck t;
    t.theorem = "6.2";
    if (odd) {
      t.hypothesis = "rank " + std::to_string(r) + " is odd";
    } else {
      const bool chain = leading_equal(group, s + 1);
      const bool divides = group.modulus(r - 1) % p == 0;
      t.applies = chain && divides;
      t.hypothesis = "r = 2s with s = " + std::to_string(s) + "; " + moduli_label(s + 1) + " = ... = n_1: " +
                     (chain ? "yes" : "no") + "; least prime p = " + std::to_string(p) + " of n_1 divides " +
                     moduli_label(r) + ": " + (divides ? "yes" : "no");
      if (t.applies) t.closed_form = static_cast<Int>(s) * n1 + n1 / p;
    }
    out.push_back(std::move(t));
  }
  {
    TheoremCheck t;
    t.theorem = "1.2";
    t.applies = leading_equal(group, r);
    t.hypothesis = std::string("all cyclic factors equal: ") + (t.applies ? "yes" : "no");
    if (t.applies) t.closed_form = odd ? static_cast<Int>(s) * n1 : static_cast<Int>(s) * n1 + n1 / p;
    out.push_back(std::move(t));
  }
  {
    TheoremCheck t;
    t.theorem = "remark-6.3";
    t.applies = true;
    bool twos = true;
    for (std::size_t i = s; i < r; ++i) twos = twos && group.modulus(i) == 2;
    const bool equality = group.is_cyclic() || twos;
    t.closed_form = d_star(group) + 1;
    t.hypothesis = std::string("beta_sep <= d*+1 = ") + std::to_string(*t.closed_form) +
                   (equality ? " with equality (cyclic or 2 = n_{s+1} = ... = n_r)" : " strictly");
    out.push_back(std::move(t));
  }
  return out;
}

bool TheoremReport::bounds_consistent() const {
  if (lower_bound > upper_bound) return false;
  if (sweep) return lower_bound <= sweep->value && sweep->value <= upper_bound;
  return true;
}

bool TheoremReport::has_mismatch() const {
  if (!bounds_consistent() || !lower_bound_certified) return true;
  return std::any_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.status == CheckStatus::Mismatch; });
}

TheoremReport verify_theorems(const GroupSpec& group, const VerifyOptions& options) {
  std::optional<BetaSepResult> sweep;
  std::string note;
  if (options.run_sweep) {
    try {
      sweep = beta_sep(group, options.sweep);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
      note = std::string("closed form only, sweep skipped: ") + e.what();
    }
  } else {
    note = "closed form only, sweep skipped";
  }
  return evaluate_theorems(group, std::move(sweep), std::move(note), options.sweep.limits);
}

TheoremReport evaluate_theorems(const GroupSpec& group, std::optional<BetaSepResult> sweep, std::string sweep_note,
                                const SearchLimits& limits) {
  TheoremReport report{group, upper_bound(group), 0, false, std::move(sweep), std::move(sweep_note), {}};

  WitnessPackage pkg = construction_for(group);
  report.lower_bound = pkg.claimed_length;
  report.lower_bound_certified = pkg.recertify(limits);

  report.checks = applicable_theorems(group);
  const std::size_t r = group.rank();
  const std::size_t s = r % 2 ? (r + 1) / 2 : r / 2;
  bool equality_case = group.is_cyclic();
  if (!equality_case) {
    equality_case = true;
    for (std::size_t i = s; i < r; ++i) equality_case = equality_case && group.modulus(i) == 2;
  }
  for (auto& check : report.checks) {
    if (!check.applies || !report.sweep) continue;
    check.computed = report.sweep->value;
    bool ok;
    if (check.theorem == "remark-6.3")
      ok = equality_case ? *check.computed == *check.closed_form : *check.computed < *check.closed_form;
    else
      ok = *check.computed == *check.closed_form;
    check.status = ok ? CheckStatus::Match : CheckStatus::Mismatch;
  }
  return report;
}

}  // namespace sepnoether
