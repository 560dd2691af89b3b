#include "sepnoether/lattice.hpp"

#include <algorithm>

namespace sepnoether {

namespace {

// a := a - q*b, sized to max(|a|, |b|).
void axpy_sub(std::vector<Int>& a, Int q, const std::vector<Int>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0) a[i] = checked_sub(a[i], checked_mul(q, b[i]));
}

// Returns (x*a + y*b, u*b - v*a) over the common length.
std::pair<std::vector<Int>, std::vector<Int>> combine(const std::vector<Int>& a, const std::vector<Int>& b, Int x,
                                                      Int y, Int u, Int v) {
  std::size_t n = std::max(a.size(), b.size());
  std::vector<Int> first(n, 0), second(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Int ai = i < a.size() ? a[i] : 0;
    Int bi = i < b.size() ? b[i] : 0;
    first[i] = checked_add(checked_mul(x, ai), checked_mul(y, bi));
    second[i] = checked_sub(checked_mul(u, bi), checked_mul(v, ai));
  }
  return {std::move(first), std::move(second)};
}

}  // namespace

LatticeBasis::LatticeBasis(std::size_t dimension, bool track_transform) : dim_(dimension), track_(track_transform) {}

LatticeBasis LatticeBasis::hnf(const std::vector<std::vector<Int>>& rows, bool track_transform) {
  if (rows.empty()) fail(ErrorKind::InvalidInput, "hnf: cannot infer dimension of an empty row set");
  LatticeBasis basis(rows.front().size(), track_transform);
  for (const auto& r : rows) basis.add_generator(r);
  return basis;
}

void LatticeBasis::check_dimension(std::size_t n) const {
  if (n != dim_)
    fail(ErrorKind::InvalidInput,
         "lattice dimension mismatch: expected " + std::to_string(dim_) + ", got " + std::to_string(n));
}

void LatticeBasis::add_generator(std::span<const Int> row) {
  check_dimension(row.size());
  std::vector<Int> v(row.begin(), row.end());
  std::vector<Int> t;
  if (track_) {
    t.assign(generator_count_ + 1, 0);
    t.back() = 1;
  }
  ++generator_count_;

  for (std::size_t col = 0; col < dim_; ++col) {
    if (v[col] == 0) continue;
    auto it = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), col);
    std::size_t pos = static_cast<std::size_t>(it - pivot_cols_.begin());
    if (it == pivot_cols_.end() || *it != col) {
      if (v[col] < 0) {
        for (auto& x : v) x = -x;
        for (auto& x : t) x = -x;
      }
      rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
      pivot_cols_.insert(it, col);
      if (track_) transforms_.insert(transforms_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(t));
      reduce_above();
      return;
    }
    // Unimodular 2x2 step zeroing v[col] against the existing pivot row.
    const Int a = rows_[pos][col];
    const Int b = v[col];
    ExtGcd e = ext_gcd(a, b);
    const Int u = a / e.g, w = b / e.g;
    auto [new_row, new_v] = combine(rows_[pos], v, e.x, e.y, u, w);
    rows_[pos] = std::move(new_row);
    v = std::move(new_v);
    if (track_) {
      auto [new_tr, new_t] = combine(transforms_[pos], t, e.x, e.y, u, w);
      transforms_[pos] = std::move(new_tr);
      t = std::move(new_t);
    }
  }
  reduce_above();
}

void LatticeBasis::reduce_above() {
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const std::size_t c = pivot_cols_[j];
    const Int p = rows_[j][c];
    for (std::size_t i = 0; i < j; ++i) {
      Int q = div_floor(rows_[i][c], p);
      if (q == 0) continue;
      axpy_sub(rows_[i], q, rows_[j]);
      if (track_) axpy_sub(transforms_[i], q, transforms_[j]);
    }
  }
}

bool LatticeBasis::contains(std::span<const Int> v) const {
  check_dimension(v.size());
  std::vector<Int> rest(v.begin(), v.end());
  std::size_t j = 0;
  for (std::size_t col = 0; col < dim_; ++col) {
    while (j < pivot_cols_.size() && pivot_cols_[j] < col) ++j;
    if (rest[col] == 0) continue;
    if (j == pivot_cols_.size() || pivot_cols_[j] != col) return false;
    const Int p = rows_[j][col];
    if (rest[col] % p != 0) return false;
    axpy_sub(rest, rest[col] / p, rows_[j]);
  }
  return true;
}

std::optional<std::vector<Int>> LatticeBasis::coefficients(std::span<const Int> v) const {
  if (!track_) fail(ErrorKind::InvalidInput, "coefficient extraction needs a transform-tracking basis");
  check_dimension(v.size());
  std::vector<Int> rest(v.begin(), v.end());
  std::vector<Int> coeff(generator_count_, 0);
  std::size_t j = 0;
  for (std::size_t col = 0; col < dim_; ++col) {
    while (j < pivot_cols_.size() && pivot_cols_[j] < col) ++j;
    if (rest[col] == 0) continue;
    if (j == pivot_cols_.size() || pivot_cols_[j] != col) return std::nullopt;
    const Int p = rows_[j][col];
    if (rest[col] % p != 0) return std::nullopt;
    const Int q = rest[col] / p;
    axpy_sub(rest, q, rows_[j]);
    axpy_sub(coeff, -q, transforms_[j]);
  }
  coeff.resize(generator_count_, 0);
  return coeff;
}

std::vector<Int> LatticeBasis::pivots() const {
  std::vector<Int> out;
  for (std::size_t j = 0; j < rows_.size(); ++j) out.push_back(rows_[j][pivot_cols_[j]]);
  return out;
}

Int LatticeBasis::index() const {
  if (rows_.size() != dim_) return 0;
  Int idx = 1;
  for (Int p : pivots()) idx = checked_mul(idx, p);
  return idx;
}

std::vector<Int> Decomposition::evaluate() const {
  std::vector<Int> sum(target.size(), 0);
  for (const auto& term : terms) {
    if (term.vector.size() != sum.size()) fail(ErrorKind::InvalidInput, "decomposition term has wrong dimension");
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = checked_add(sum[i], checked_mul(term.coeff, term.vector[i]));
  }
  return sum;
}

bool Decomposition::verify(const Context& ctx) const {
  if (evaluate() != target.entries()) return false;
  const Int len = target.length();
  return std::all_of(terms.begin(), terms.end(), [&](const WitnessTerm& t) {
    return t.vector.length() < len && is_zero_sum(ctx, t.vector);
  });
}

GroupAtomVerdict is_group_atom(const Context& ctx, const MultVector& m, const SearchLimits& limits) {
  if (!is_zero_sum(ctx, m)) fail(ErrorKind::InvalidInput, "is_group_atom: " + m.to_string() + " is not zero-sum");
  if (m.is_zero()) fail(ErrorKind::InvalidInput, "is_group_atom: the zero vector is not a group atom candidate");

  const auto atoms = atoms_by_length(ctx, m.length() - 1, limits);
  LatticeBasis basis(ctx.size(), true);
  for (const auto& a : atoms) basis.add_generator(a.entries());

  GroupAtomVerdict verdict;
  verdict.generating_set_size = atoms.size();
  auto coeff = basis.coefficients(m.entries());
  if (!coeff) {
    verdict.is_group_atom = true;
    return verdict;
  }
  Decomposition witness{m, {}};
  for (std::size_t j = 0; j < atoms.size(); ++j)
    if ((*coeff)[j] != 0) witness.terms.push_back({(*coeff)[j], atoms[j]});
  if (!witness.verify(ctx)) fail(ErrorKind::Internal, "is_group_atom: extracted witness does not reproduce the target");
  verdict.witness = std::move(witness);
  return verdict;
}

bool certify_by_divisibility(const Context& ctx, const MultVector& m, std::size_t index, Int d,
                             const SearchLimits& limits) {
  if (!is_zero_sum(ctx, m)) fail(ErrorKind::InvalidInput, "certify: " + m.to_string() + " is not zero-sum");
  if (m.support_size() != ctx.size()) fail(ErrorKind::InvalidInput, "certify: m must have full support");
  if (index >= ctx.size()) fail(ErrorKind::InvalidInput, "certify: coordinate index out of range");
  if (d < 1) fail(ErrorKind::InvalidInput, "certify: d must be positive");

  if (m[index] % d == 0) return false;  // (ii)
  std::optional<Int> min_full;
  for (const auto& a : atoms_by_length(ctx, std::nullopt, limits)) {
    if (a.support_size() < ctx.size()) {
      if (a[index] % d != 0) return false;  // (i)
    } else if (!min_full || a.length() < *min_full) {
      min_full = a.length();
    }
  }
  return min_full && m.length() <= *min_full;  // (iii)
}

Int find_scaling_unit(Int alpha, Int beta, Int gamma) {
  if (alpha < 1 || beta < 1 || gamma < 1) fail(ErrorKind::InvalidInput, "find_scaling_unit: arguments must be >= 1");
  if (std::gcd(alpha, beta) != 1) fail(ErrorKind::InvalidInput, "find_scaling_unit: gcd(alpha, beta) != 1");

  // CRT, folding one congruence at a time: x = residue (mod modulus).
  Int modulus = alpha;
  Int residue = alpha == 1 ? 0 : mod_inverse(beta, alpha);
  for (Int p : prime_divisors(gamma)) {
    if (alpha % p == 0) continue;
    // x = residue + modulus*y with residue + modulus*y = 1 (mod p)
    Int y = mod_floor((1 - residue) % p * mod_inverse(modulus % p, p), p);
    residue = checked_add(residue, checked_mul(modulus, y));
    modulus = checked_mul(modulus, p);
  }
  return residue == 0 ? modulus : residue;
}

ScalingRefutation refute_by_scaling(const Context& ctx, const MultVector& m) {
  const std::size_t k = ctx.size();
  if (m.size() != k) fail(ErrorKind::InvalidInput, "refute_by_scaling: dimension mismatch");
  if (k < 3 || k % 2 == 0) fail(ErrorKind::InvalidInput, "refute_by_scaling: needs an odd number k = 2s+1 >= 3 of elements");
  if (!is_zero_sum(ctx, m)) fail(ErrorKind::InvalidInput, "refute_by_scaling: " + m.to_string() + " is not zero-sum");

  const Int s = static_cast<Int>(k - 1) / 2;
  const Int n1 = ctx.group().exponent();
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (ctx.order(i) != n1)
      fail(ErrorKind::InvalidInput, "refute_by_scaling: ord(g_" + std::to_string(i + 1) + ") must equal exp(G) = " +
                                        std::to_string(n1));
  const Int last = ctx.order(k - 1);
  const Int p = min_prime_divisor(last);
  const Int len = m.length();
  if (last < 2 || len <= s * n1 + last / p)
    fail(ErrorKind::InvalidInput, "refute_by_scaling: needs |m| > s*exp(G) + ord(g_k)/p = " +
                                      std::to_string(s * n1 + last / p));

  ScalingRefutation out;
  out.gcd_d = std::gcd(len, last);
  const Int b = (len - s * n1) / out.gcd_d;
  out.ell = find_scaling_unit(last / out.gcd_d, b, out.gcd_d * n1 / last);
  out.ell_inverse = mod_inverse(out.ell, n1);

  std::vector<Int> scaled(k), t(k);
  for (std::size_t i = 0; i < k; ++i) {
    scaled[i] = mod_floor(checked_mul(out.ell, m[i]), ctx.order(i));
    Int diff = checked_sub(checked_mul(out.ell_inverse, scaled[i]), m[i]);
    if (diff % ctx.order(i) != 0) fail(ErrorKind::Internal, "refute_by_scaling: inverse scaling is not exact");
    t[i] = diff / ctx.order(i);
  }
  out.scaled = MultVector(scaled);

  auto unit = [&](std::size_t i) {
    std::vector<Int> e(k, 0);
    e[i] = ctx.order(i);
    return MultVector(std::move(e));
  };

  Decomposition dec{m, {}};
  if (out.scaled.length() < len) {
    // m = l^ * m_l - sum t_i ord(g_i) e_i
    if (!out.scaled.is_zero()) dec.terms.push_back({out.ell_inverse, out.scaled});
    for (std::size_t i = 0; i < k; ++i)
      if (t[i] != 0) dec.terms.push_back({-t[i], unit(i)});
  } else {
    MultVector comp = complementer(ctx, out.scaled);
    if (comp.length() >= len)
      fail(ErrorKind::Internal, "refute_by_scaling: neither m_l nor its complementer is shorter than |m|");
    // m = -l^ * m_l* + sum (l^ - t_i) ord(g_i) e_i
    out.via_complement = true;
    if (!comp.is_zero()) dec.terms.push_back({-out.ell_inverse, comp});
    for (std::size_t i = 0; i < k; ++i)
      if (out.ell_inverse != t[i]) dec.terms.push_back({out.ell_inverse - t[i], unit(i)});
  }
  if (!dec.verify(ctx)) fail(ErrorKind::Internal, "refute_by_scaling: decomposition failed verification");
  out.decomposition = std::move(dec);
  return out;
}

}  // namespace sepnoether
