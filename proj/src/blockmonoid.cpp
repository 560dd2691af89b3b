#include "sepnoether/blockmonoid.hpp"

#include <algorithm>
#include <set>

#include "sepnoether/text.hpp"

namespace sepnoether {

MultVector::MultVector(std::vector<Int> entries) : entries_(std::move(entries)) {
  for (Int e : entries_)
    if (e < 0) fail(ErrorKind::InvalidInput, "multiplicity vector has a negative entry");
}

MultVector MultVector::parse(std::string_view text) { return MultVector(text::parse_int_list(text)); }

Int MultVector::length() const noexcept {
  Int total = 0;
  for (Int e : entries_) total += e;
  return total;
}

std::size_t MultVector::support_size() const noexcept {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](Int e) { return e != 0; }));
}

bool MultVector::divides(const MultVector& other) const noexcept {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (entries_[i] > other.entries_[i]) return false;
  return true;
}

std::string MultVector::to_string() const { return text::join(entries_, '[', ']'); }

MultVector operator+(const MultVector& a, const MultVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::InvalidInput, "dimension mismatch in vector sum");
  std::vector<Int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return MultVector(std::move(out));
}

Context::Context(GroupSpec group, std::vector<GroupElement> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  if (elements_.empty()) fail(ErrorKind::InvalidInput, "context needs at least one element");
  for (const auto& g : elements_)
    if (!belongs_to(group_, g)) fail(ErrorKind::InvalidInput, "element " + sepnoether::to_string(g) + " is not in G");
  std::set<GroupElement> seen(elements_.begin(), elements_.end());
  if (seen.size() != elements_.size()) fail(ErrorKind::InvalidInput, "context elements must be pairwise distinct");
  orders_.reserve(elements_.size());
  for (const auto& g : elements_) orders_.push_back(element_order(group_, g));
}

Context Context::parse(const GroupSpec& group, std::string_view text) {
  std::vector<GroupElement> elements;
  for (std::string_view part : text::split(text, ';')) {
    part = text::trim(part);
    if (part.empty()) continue;
    elements.push_back(parse_element(group, part));
  }
  if (elements.empty()) fail(ErrorKind::Parse, "no elements given");
  return Context(group, std::move(elements));
}

Context Context::full_group(const GroupSpec& group, Int element_cap) {
  auto all = enumerate_elements(group, element_cap);
  all.erase(all.begin());  // identity comes first
  return Context(group, std::move(all));
}

Int Context::max_order() const noexcept { return *std::max_element(orders_.begin(), orders_.end()); }

Int Context::order_sum() const noexcept {
  Int total = 0;
  for (Int o : orders_) total += o;
  return total;
}

std::string Context::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ';';
    out += sepnoether::to_string(elements_[i]);
  }
  return out;
}

namespace {

void check_dimension(const Context& ctx, const MultVector& m) {
  if (m.size() != ctx.size())
    fail(ErrorKind::InvalidInput, "vector has " + std::to_string(m.size()) + " entries, context has " +
                                      std::to_string(ctx.size()) + " elements");
}

// Depth-first scan of the box prod [0, bound_i] for nonzero zero-sum vectors.
// Two prunings keep the scan to candidates that may be atoms:
//  - a nonzero zero-sum prefix is emitted as is and never extended;
//  - entry ord(g_i) is only allowed when every other entry is zero.
// Every atom in the box is emitted; emitted vectors may still be non-atoms.
class ZeroSumScanner {
 public:
  ZeroSumScanner(const Context& ctx, std::vector<Int> bounds, Int max_len, const SearchLimits& limits)
      : ctx_(ctx), bounds_(std::move(bounds)), max_len_(max_len), limits_(limits) {
    rank_ = ctx_.group().rank();
    sums_.assign((ctx_.size() + 1) * rank_, 0);
    current_.assign(ctx_.size(), 0);
  }

  std::vector<MultVector> run() {
    descend(0, 0);
    return std::move(found_);
  }

 private:
  Int* sum_at(std::size_t depth) { return sums_.data() + depth * rank_; }

  bool sum_is_zero(std::size_t depth) {
    const Int* s = sum_at(depth);
    for (std::size_t c = 0; c < rank_; ++c)
      if (s[c] != 0) return false;
    return true;
  }

  void count_node() {
    if (++nodes_ > limits_.node_cap)
      fail(ErrorKind::CapExceeded, "atom search exceeded node cap of " + std::to_string(limits_.node_cap));
  }

  void emit() { found_.emplace_back(current_); }

  void descend(std::size_t depth, Int length) {
    count_node();
    const std::size_t k = ctx_.size();
    if (length > 0 && sum_is_zero(depth)) {
      emit();
      return;
    }
    if (depth == k) return;

    const auto& mod = ctx_.group().moduli();
    const auto& g = ctx_.element(depth).coords;
    const Int ord = ctx_.order(depth);
    Int* next = sum_at(depth + 1);
    std::copy_n(sum_at(depth), rank_, next);
    Int limit = std::min(bounds_[depth], max_len_ - length);
    for (Int v = 0; v <= limit; ++v) {
      if (v > 0) {
        for (std::size_t c = 0; c < rank_; ++c) {
          next[c] += g[c];
          if (next[c] >= mod[c]) next[c] -= mod[c];
        }
      }
      if (v == ord && length > 0) break;
      current_[depth] = v;
      if (v == ord) {
        // Only the unit atom ord(g_i) e_i survives; later entries stay zero.
        emit();
        break;
      }
      descend(depth + 1, length + v);
    }
    current_[depth] = 0;
  }

  const Context& ctx_;
  std::vector<Int> bounds_;
  Int max_len_;
  SearchLimits limits_;
  std::size_t rank_ = 0;
  std::vector<Int> sums_;
  std::vector<Int> current_;
  std::vector<MultVector> found_;
  std::uint64_t nodes_ = 0;
};

bool length_then_lex(const MultVector& a, const MultVector& b) {
  Int la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  return a < b;
}

// Keeps the componentwise-minimal vectors among zero-sum candidates.
std::vector<MultVector> minimal_filter(std::vector<MultVector> candidates) {
  std::sort(candidates.begin(), candidates.end(), length_then_lex);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<MultVector> atoms;
  for (auto& c : candidates) {
    bool minimal = std::none_of(atoms.begin(), atoms.end(), [&](const MultVector& a) { return a.divides(c); });
    if (minimal) atoms.push_back(std::move(c));
  }
  return atoms;
}

}  // namespace

bool is_zero_sum(const Context& ctx, const MultVector& m) {
  check_dimension(ctx, m);
  const auto& mod = ctx.group().moduli();
  for (std::size_t c = 0; c < mod.size(); ++c) {
    Int s = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      s = mod_floor(s + mod_floor(m[i], mod[c]) * ctx.element(i).coords[c], mod[c]);
    if (s != 0) return false;
  }
  return true;
}

MultVector complementer(const Context& ctx, const MultVector& m) {
  check_dimension(ctx, m);
  std::vector<Int> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > ctx.order(i))
      fail(ErrorKind::InvalidInput, "complementer needs m_i <= ord(g_i); entry " + std::to_string(i) + " is " +
                                        std::to_string(m[i]) + " > " + std::to_string(ctx.order(i)));
    out[i] = ctx.order(i) - m[i];
  }
  if (!is_zero_sum(ctx, m)) fail(ErrorKind::InvalidInput, "complementer of a non-zero-sum vector");
  return MultVector(std::move(out));
}

bool is_atom(const Context& ctx, const MultVector& m, const SearchLimits& limits) {
  if (!is_zero_sum(ctx, m)) fail(ErrorKind::InvalidInput, "is_atom: vector " + m.to_string() + " is not zero-sum");
  if (m.is_zero()) return false;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] >= ctx.order(i) && m.support_size() > 1) return false;  // ord(g_i) e_i lies strictly below
  ZeroSumScanner scanner(ctx, m.entries(), m.length(), limits);
  for (const auto& c : scanner.run())
    if (c != m) return false;
  return true;
}

std::vector<MultVector> enumerate_atoms(const Context& ctx, std::optional<Int> max_len, const SearchLimits& limits) {
  auto atoms = atoms_by_length(ctx, max_len, limits);
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

std::vector<MultVector> atoms_by_length(const Context& ctx, std::optional<Int> max_len, const SearchLimits& limits) {
  Int cap = max_len.value_or(ctx.order_sum());
  if (cap <= 0) return {};
  ZeroSumScanner scanner(ctx, ctx.orders(), cap, limits);
  return minimal_filter(scanner.run());
}

Int davenport(const GroupSpec& group, const SearchLimits& limits) {
  Context ctx = Context::full_group(group);
  Int best = 0;
  for (const auto& a : atoms_by_length(ctx, std::nullopt, limits)) best = std::max(best, a.length());
  return best;
}

std::vector<MultVector> decompose_into_atoms(const Context& ctx, const MultVector& m, const SearchLimits& limits) {
  if (!is_zero_sum(ctx, m)) fail(ErrorKind::InvalidInput, "decompose: vector is not zero-sum");
  std::vector<MultVector> parts;
  std::vector<Int> rest = m.entries();
  while (std::any_of(rest.begin(), rest.end(), [](Int e) { return e != 0; })) {
    std::vector<Int> bounds(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) bounds[i] = std::min(rest[i], ctx.order(i));
    ZeroSumScanner scanner(ctx, bounds, MultVector(rest).length(), limits);
    auto atoms = minimal_filter(scanner.run());
    if (atoms.empty()) fail(ErrorKind::Internal, "decompose: no atom below a nonzero zero-sum remainder");
    const MultVector& a = atoms.front();
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= a[i];
    parts.push_back(a);
  }
  return parts;
}

}  // namespace sepnoether
