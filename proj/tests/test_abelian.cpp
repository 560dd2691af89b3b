#include <doctest.h>

#include <numeric>
#include <set>

#include "sepnoether/abelian.hpp"
#include "sepnoether/error.hpp"

using namespace sepnoether;

namespace {

// Elementary divisors of a list of cyclic orders: prime powers, as a sorted multiset.
std::multiset<Int> elementary_divisors(const std::vector<Int>& moduli) {
  std::multiset<Int> out;
  for (Int n : moduli) {
    for (Int p = 2; n > 1; ++p) {
      Int q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      if (q > 1) out.insert(q);
    }
  }
  return out;
}

Int brute_order(const GroupSpec& g, const GroupElement& x) {
  GroupElement acc = x;
  Int k = 1;
  while (!is_identity(acc)) {
    acc = add(g, acc, x);
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("canonical invariant factors") {
  CHECK(GroupSpec::canonicalize({4, 6}).moduli() == std::vector<Int>{12, 2});
  CHECK(GroupSpec::canonicalize({2, 3}).moduli() == std::vector<Int>{6});
  CHECK(GroupSpec::canonicalize({2, 4, 1}).moduli() == std::vector<Int>{4, 2});
  CHECK(GroupSpec::canonicalize({12, 4}).moduli() == std::vector<Int>{12, 4});
  CHECK(GroupSpec::parse("C12xC4") == GroupSpec::parse("12,4"));
  CHECK(GroupSpec::parse("c6xc2").to_alias() == "C6xC2");
  CHECK(GroupSpec::parse("6, 2").to_string() == "6,2");
}

TEST_CASE("canonicalization preserves elementary divisors and the divisibility chain") {
  const std::vector<std::vector<Int>> inputs = {{4, 6}, {2, 3, 5}, {10, 4, 6}, {9, 3, 27}, {8, 12, 18}, {30, 42}};
  for (const auto& in : inputs) {
    GroupSpec g = GroupSpec::canonicalize(in);
    CAPTURE(g.to_string());
    CHECK(elementary_divisors(in) == elementary_divisors(g.moduli()));
    for (std::size_t i = 1; i < g.rank(); ++i) CHECK(g.modulus(i - 1) % g.modulus(i) == 0);
    CHECK(g.modulus(g.rank() - 1) >= 2);
  }
}

TEST_CASE("bad group specs") {
  CHECK_THROWS_AS(GroupSpec::parse(""), Error);
  CHECK_THROWS_AS(GroupSpec::parse("1x"), Error);
  CHECK_THROWS_AS(GroupSpec::parse("0,2"), Error);
  CHECK_THROWS_AS(GroupSpec::parse("-3"), Error);
  CHECK_THROWS_AS(GroupSpec::parse("1"), Error);
}

TEST_CASE("structural constants") {
  GroupSpec g = GroupSpec::parse("12,4");
  CHECK(g.rank() == 2);
  CHECK(g.exponent() == 12);
  CHECK(g.order() == 48);
  CHECK(d_star(g) == 14);
  CHECK(d_star(GroupSpec::parse("2,2")) == 2);
  CHECK(d_star(GroupSpec::parse("5")) == 4);
  CHECK(d_star(GroupSpec::parse("6,6,2")) == 11);
}

TEST_CASE("element order matches repeated addition") {
  for (const char* spec : {"12,4", "6,2", "3,3,3", "8", "10,2"}) {
    GroupSpec g = GroupSpec::parse(spec);
    for (const auto& x : enumerate_elements(g)) CHECK(element_order(g, x) == brute_order(g, x));
  }
}

TEST_CASE("element arithmetic and indexing") {
  GroupSpec g = GroupSpec::parse("12,4");
  auto x = make_element(g, {11, 3});
  auto y = make_element(g, {5, 2});
  CHECK(add(g, x, y) == make_element(g, {4, 1}));
  CHECK(is_identity(add(g, x, negate(g, x))));
  CHECK(scalar_mul(g, -1, y) == negate(g, y));
  CHECK(scalar_mul(g, 12, y) == identity(g));
  CHECK(make_element(g, {-1, 5}) == make_element(g, {11, 1}));

  auto all = enumerate_elements(g);
  REQUIRE(all.size() == 48);
  for (Int i = 0; i < 48; ++i) {
    CHECK(element_index(g, all[i]) == i);
    CHECK(element_at(g, i) == all[i]);
  }
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("subgroup order") {
  GroupSpec g = GroupSpec::parse("12,4");
  std::vector<GroupElement> gens = {make_element(g, {2, 0})};
  CHECK(subgroup_order(g, gens) == 6);
  gens.push_back(make_element(g, {0, 2}));
  CHECK(subgroup_order(g, gens) == 12);
  gens.push_back(make_element(g, {1, 1}));
  CHECK(subgroup_order(g, gens) == 24);  // second coordinate parity follows the first
  gens.push_back(make_element(g, {0, 1}));
  CHECK(subgroup_order(g, gens) == 48);
}

TEST_CASE("element text") {
  GroupSpec g = GroupSpec::parse("12,4");
  CHECK(to_string(make_element(g, {1, 3})) == "(1,3)");
  CHECK(parse_element(g, "(13,7)") == make_element(g, {1, 3}));
  CHECK_THROWS_AS(parse_element(g, "(1)"), Error);
  CHECK_THROWS_AS(parse_element(g, "(a,1)"), Error);
}

TEST_CASE("element cap") {
  CHECK_THROWS_AS(enumerate_elements(GroupSpec::parse("100,100"), 1000), Error);
}
