#include <doctest.h>

#include <algorithm>

#include "sepnoether/constructions.hpp"
#include "sepnoether/error.hpp"
#include "sepnoether/lattice.hpp"

using namespace sepnoether;

namespace {

const TheoremCheck& check_named(const TheoremReport& r, const std::string& name) {
  auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const TheoremCheck& c) { return c.theorem == name; });
  REQUIRE(it != r.checks.end());
  return *it;
}

}  // namespace

TEST_CASE("odd table") {
  auto p = odd_rank_construction(GroupSpec::parse("2,2,2"));
  CHECK(p.ctx.size() == 4);
  CHECK(p.m == MultVector{1, 1, 1, 1});
  CHECK(p.claimed_length == 4);
  CHECK(p.certificate == CertificateKind::Divisibility);
  CHECK(p.certificate_index == 3);
  // coordinates e1, e2, f1: g1 = e1, g2 = e1+f1, g3 = f1+e2, g4 = e2
  CHECK(p.ctx.to_string() == "(1,0,0);(1,0,1);(0,1,1);(0,1,0)");

  auto q = odd_rank_construction(GroupSpec::parse("3,3,3"));
  CHECK(q.m == MultVector{2, 1, 2, 1});
  CHECK(q.claimed_length == 6);

  auto c5 = odd_rank_construction(GroupSpec::parse("5"));
  CHECK(c5.ctx.to_string() == "(1)");
  CHECK(c5.m == MultVector{5});
  CHECK(c5.recertify());

  CHECK_THROWS_AS(odd_rank_construction(GroupSpec::parse("2,2")), Error);
}

TEST_CASE("even table") {
  auto k = even_rank_construction(GroupSpec::parse("2,2"), 2);
  CHECK(k.ctx.to_string() == "(1,1);(1,0);(0,1)");
  CHECK(k.m == MultVector{1, 1, 1});
  auto c44 = even_rank_construction(GroupSpec::parse("4,4"));
  CHECK(c44.prime == 2);
  CHECK(c44.m == MultVector{3, 1, 2});
  CHECK(c44.claimed_length == 6);
  // Last entry n_{s+1}/p: for C6+C2 that is 2/2.
  auto c62 = even_rank_construction(GroupSpec::parse("6,2"));
  CHECK(c62.m == MultVector{5, 1, 1});
  CHECK(c62.claimed_length == 7);
  // Odd prime: the f1 sign convention must keep m zero-sum.
  auto c33 = even_rank_construction(GroupSpec::parse("3,3"));
  CHECK(is_zero_sum(c33.ctx, c33.m));
  CHECK(c33.claimed_length == 4);
  CHECK_THROWS_AS(even_rank_construction(GroupSpec::parse("6,2"), 3), Error);
  CHECK_THROWS_AS(even_rank_construction(GroupSpec::parse("2,2,2")), Error);
}

TEST_CASE("every construction is certified both ways") {
  for (const char* g : {"2", "3", "4", "5", "2,2", "3,3", "4,4", "6,6", "4,2", "6,2", "2,2,2", "3,3,3", "2,2,2,2",
                        "12,4", "6,6,2", "4,4,4", "6,6,6,6"}) {
    GroupSpec grp = GroupSpec::parse(g);
    CAPTURE(g);
    auto p = construction_for(grp);
    CHECK(is_zero_sum(p.ctx, p.m));
    CHECK(p.m.length() == p.claimed_length);
    CHECK(p.recertify());
    CHECK(p.claimed_length == construction_lower_bound(grp));
    if (grp.rank() <= 3 && grp.order() <= 64) CHECK(is_group_atom(p.ctx, p.m).is_group_atom);
  }
}

TEST_CASE("sub-support atoms are divisible") {
  auto odd = odd_rank_construction(GroupSpec::parse("2,2,2"));
  CHECK(check_support_divisibility(odd, 2));
  auto even = even_rank_construction(GroupSpec::parse("2,2"), 2);
  CHECK(check_support_divisibility(even, 2));
  auto c44 = even_rank_construction(GroupSpec::parse("4,4"));
  CHECK(check_support_divisibility(c44, 2));
  CHECK(congruence_chain_holds(c44));
}

TEST_CASE("corrupted table fails the divisibility check") {
  auto c44 = even_rank_construction(GroupSpec::parse("4,4"));
  std::vector<GroupElement> els = c44.ctx.elements();
  GroupSpec g = c44.ctx.group();
  // flip the sign of the e1 entry of g2
  els[1] = make_element(g, {-els[1].coords[0], els[1].coords[1]});
  WitnessPackage bad = c44;
  bad.ctx = Context(g, els);
  CHECK_FALSE(congruence_chain_holds(bad));
  CHECK_FALSE(check_support_divisibility(bad, 2));
}

TEST_CASE("full-support atoms of the odd table are long") {
  for (const char* g : {"2,2,2", "3,3,3", "4,2,2"}) {
    auto p = odd_rank_construction(GroupSpec::parse(g));
    Int bound = 0;
    for (std::size_t i = 0; i < (p.ctx.group().rank() + 1) / 2; ++i) bound += p.ctx.group().modulus(i);
    for (const auto& a : enumerate_atoms(p.ctx))
      if (a.support_size() == p.ctx.size()) CHECK(a.length() >= bound);
  }
}

TEST_CASE("theorem hypotheses") {
  auto k = applicable_theorems(GroupSpec::parse("2,2"));
  REQUIRE(k.size() == 4);
  CHECK(k[2].theorem == "1.2");
  CHECK(k[2].applies);
  CHECK(k[2].closed_form == 3);
  CHECK(k[1].applies);  // 6.2 with s = 1, n2 = n1 = 2

  auto mixed = applicable_theorems(GroupSpec::parse("6,2"));
  CHECK_FALSE(mixed[1].applies);
  CHECK_FALSE(mixed[2].applies);
  CHECK(mixed[3].applies);
  CHECK(mixed[3].closed_form == 7);

  auto odd = applicable_theorems(GroupSpec::parse("6,6,2"));
  CHECK(odd[0].applies);
  CHECK(odd[0].closed_form == 12);
}

TEST_CASE("verification reports") {
  auto k = verify_theorems(GroupSpec::parse("2,2"));
  CHECK(check_named(k, "1.2").status == CheckStatus::Match);
  CHECK(check_named(k, "1.2").computed == 3);
  CHECK_FALSE(k.has_mismatch());
  CHECK(k.bounds_consistent());

  auto mixed = verify_theorems(GroupSpec::parse("6,2"));
  CHECK(mixed.sweep->value == 7);
  CHECK(check_named(mixed, "6.2").status == CheckStatus::Skipped);
  CHECK(check_named(mixed, "remark-6.3").status == CheckStatus::Match);

  VerifyOptions closed;
  closed.run_sweep = false;
  auto big = verify_theorems(GroupSpec::parse("6,6,2"), closed);
  CHECK_FALSE(big.sweep);
  CHECK(big.sweep_note.find("closed form only, sweep skipped") != std::string::npos);
  CHECK(big.lower_bound == 12);
  CHECK(big.upper_bound == 12);
  CHECK(check_named(big, "6.1").closed_form == 12);
  CHECK(big.bounds_consistent());
}

TEST_CASE("a wrong computed value is reported as a mismatch") {
  GroupSpec g = GroupSpec::parse("2,2");
  auto r = beta_sep(g);
  r.value = 2;
  auto report = evaluate_theorems(g, r, "");
  CHECK(report.has_mismatch());
  CHECK(check_named(report, "1.2").status == CheckStatus::Mismatch);
}
