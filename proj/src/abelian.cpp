#include "sepnoether/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "sepnoether/text.hpp"

namespace sepnoether {

GroupSpec GroupSpec::canonicalize(std::span<const Int> moduli) {
  // Elementary divisors grouped by prime, then recombined largest-first.
  std::map<Int, std::vector<Int>> powers;
  for (Int n : moduli) {
    if (n < 1) fail(ErrorKind::InvalidInput, "cyclic order must be >= 1, got " + std::to_string(n));
    for (Int p : prime_divisors(n)) {
      Int q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      powers[p].push_back(q);
    }
  }
  std::size_t rank = 0;
  for (auto& [p, qs] : powers) {
    std::sort(qs.begin(), qs.end(), std::greater<>());
    rank = std::max(rank, qs.size());
  }
  if (rank == 0) fail(ErrorKind::InvalidInput, "trivial group: no cyclic factor of order >= 2");
  std::vector<Int> out(rank, 1);
  for (const auto& [p, qs] : powers)
    for (std::size_t i = 0; i < qs.size(); ++i) out[i] = checked_mul(out[i], qs[i]);
  return GroupSpec(std::move(out));
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::string_view s = text::trim(text);
  if (s.empty()) fail(ErrorKind::Parse, "empty group spec");
  if (s.front() == 'C' || s.front() == 'c') {
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::vector<Int> moduli;
    for (std::string_view part : text::split(lower, 'x')) {
      part = text::trim(part);
      if (part.size() < 2 || part.front() != 'c')
        fail(ErrorKind::Parse, "bad cyclic factor in group spec '" + std::string(text) + "'");
      auto values = text::parse_int_list(part.substr(1));
      if (values.size() != 1) fail(ErrorKind::Parse, "bad cyclic factor in group spec '" + std::string(text) + "'");
      moduli.push_back(values.front());
    }
    return canonicalize(moduli);
  }
  return canonicalize(text::parse_int_list(s));
}

Int GroupSpec::order() const {
  Int n = 1;
  for (Int m : moduli_) n = checked_mul(n, m);
  return n;
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(moduli_[i]);
  }
  return out;
}

std::string GroupSpec::to_alias() const {
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += 'x';
    out += 'C' + std::to_string(moduli_[i]);
  }
  return out;
}

GroupElement make_element(const GroupSpec& group, std::span<const Int> coords) {
  if (coords.size() != group.rank())
    fail(ErrorKind::InvalidInput, "element has " + std::to_string(coords.size()) + " coordinates, group rank is " +
                                      std::to_string(group.rank()));
  GroupElement g;
  g.coords.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) g.coords.push_back(mod_floor(coords[i], group.modulus(i)));
  return g;
}

GroupElement make_element(const GroupSpec& group, std::initializer_list<Int> coords) {
  return make_element(group, std::span<const Int>(coords.begin(), coords.size()));
}

GroupElement identity(const GroupSpec& group) { return GroupElement{std::vector<Int>(group.rank(), 0)}; }

bool is_identity(const GroupElement& g) {
  return std::all_of(g.coords.begin(), g.coords.end(), [](Int c) { return c == 0; });
}

bool belongs_to(const GroupSpec& group, const GroupElement& g) {
  if (g.coords.size() != group.rank()) return false;
  for (std::size_t i = 0; i < g.coords.size(); ++i)
    if (g.coords[i] < 0 || g.coords[i] >= group.modulus(i)) return false;
  return true;
}

Int element_order(const GroupSpec& group, const GroupElement& g) {
  Int ord = 1;
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    Int n = group.modulus(i);
    ord = std::lcm(ord, n / std::gcd(g.coords[i], n));
  }
  return ord;
}

Int d_star(const GroupSpec& group) {
  Int total = 0;
  for (Int n : group.moduli()) total += n - 1;
  return total;
}

GroupElement add(const GroupSpec& group, const GroupElement& g, const GroupElement& h) {
  GroupElement out = g;
  for (std::size_t i = 0; i < out.coords.size(); ++i)
    out.coords[i] = mod_floor(g.coords[i] + h.coords[i], group.modulus(i));
  return out;
}

GroupElement negate(const GroupSpec& group, const GroupElement& g) {
  GroupElement out = g;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = mod_floor(-g.coords[i], group.modulus(i));
  return out;
}

GroupElement scalar_mul(const GroupSpec& group, Int c, const GroupElement& g) {
  GroupElement out = g;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    Int n = group.modulus(i);
    out.coords[i] = mod_floor(mod_floor(c, n) * g.coords[i], n);
  }
  return out;
}

Int element_index(const GroupSpec& group, const GroupElement& g) {
  Int idx = 0;
  for (std::size_t i = 0; i < g.coords.size(); ++i) idx = idx * group.modulus(i) + g.coords[i];
  return idx;
}

GroupElement element_at(const GroupSpec& group, Int index) {
  GroupElement g{std::vector<Int>(group.rank(), 0)};
  for (std::size_t i = group.rank(); i-- > 0;) {
    g.coords[i] = index % group.modulus(i);
    index /= group.modulus(i);
  }
  return g;
}

std::vector<GroupElement> enumerate_elements(const GroupSpec& group, Int cap) {
  Int n = group.order();
  if (n > cap)
    fail(ErrorKind::CapExceeded, "group order " + std::to_string(n) + " exceeds element cap " + std::to_string(cap));
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(n));
  GroupElement g = identity(group);
  for (Int k = 0; k < n; ++k) {
    out.push_back(g);
    for (std::size_t i = group.rank(); i-- > 0;) {
      if (++g.coords[i] < group.modulus(i)) break;
      g.coords[i] = 0;
    }
  }
  return out;
}

Int subgroup_order(const GroupSpec& group, std::span<const GroupElement> gens) {
  const Int n = group.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<GroupElement> frontier{identity(group)};
  seen[0] = 1;
  Int count = 1;
  while (!frontier.empty()) {
    GroupElement cur = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : gens) {
      GroupElement next = add(group, cur, g);
      Int idx = element_index(group, next);
      if (!seen[static_cast<std::size_t>(idx)]) {
        seen[static_cast<std::size_t>(idx)] = 1;
        ++count;
        frontier.push_back(std::move(next));
      }
    }
  }
  return count;
}

std::string to_string(const GroupElement& g) { return text::join(g.coords, '(', ')'); }

GroupElement parse_element(const GroupSpec& group, std::string_view s) {
  auto coords = text::parse_int_list(s);
  if (coords.size() != group.rank())
    fail(ErrorKind::Parse, "element '" + std::string(s) + "' does not match group rank " + std::to_string(group.rank()));
  return make_element(group, coords);
}

}  // namespace sepnoether
