#include <doctest.h>

#include <algorithm>
#include <set>

#include "sepnoether/beta_sep.hpp"
#include "sepnoether/error.hpp"
#include "sepnoether/lattice.hpp"

using namespace sepnoether;

namespace {

Int sweep(const char* g, SweepOptions o = {}) { return beta_sep(GroupSpec::parse(g), o).value; }

void check_witness(const BetaSepResult& r) {
  CHECK(r.witness_vector.length() == r.value);
  CHECK(is_zero_sum(r.witness_context, r.witness_vector));
  CHECK(is_group_atom(r.witness_context, r.witness_vector).is_group_atom);
  CHECK(r.witness_context.size() <= r.group.rank() + 1);
}

}  // namespace

TEST_CASE("upper bound") {
  CHECK(upper_bound(GroupSpec::parse("12,4")) == 18);
  CHECK(upper_bound(GroupSpec::parse("2,2")) == 3);
  CHECK(upper_bound(GroupSpec::parse("5")) == 5);
  CHECK(upper_bound(GroupSpec::parse("2,2,2")) == 4);
}

TEST_CASE("maximal group atom per context") {
  GroupSpec c3 = GroupSpec::parse("3");
  auto one = max_group_atom_length(Context::parse(c3, "(1)"));
  CHECK(one.length == 3);
  CHECK(one.witness == MultVector{3});
  auto klein = max_group_atom_length(Context::parse(GroupSpec::parse("2,2"), "(1,0);(1,1);(0,1)"));
  CHECK(klein.length == 3);
  CHECK(klein.witness == MultVector{1, 1, 1});
  CHECK(max_group_atom_length(Context::parse(GroupSpec::parse("2,2"), "(1,1);(1,0);(0,1)")).length == 3);
}

TEST_CASE("small groups") {
  CHECK(sweep("2") == 2);
  CHECK(sweep("3") == 3);
  CHECK(sweep("4") == 4);
  CHECK(sweep("5") == 5);
  CHECK(sweep("2,2") == 3);
  CHECK(sweep("3,3") == 4);
  CHECK(sweep("4,4") == 6);
  CHECK(sweep("2,2,2") == 4);
  CHECK(sweep("4,2") == 5);
  CHECK(sweep("6,2") == 7);
}

TEST_CASE("witness re-verifies and respects the upper bound") {
  for (const char* g : {"2", "6", "2,2", "3,3", "4,2", "6,2", "4,4", "2,2,2", "6,6"}) {
    CAPTURE(g);
    auto r = beta_sep(GroupSpec::parse(g));
    CHECK(r.value <= r.upper_bound);
    check_witness(r);
  }
}

TEST_CASE("pruned and unpruned sweeps agree") {
  for (const char* g : {"2,2", "3,3", "2,2,2", "4,2", "5"}) {
    CAPTURE(g);
    auto pruned = beta_sep(GroupSpec::parse(g));
    auto audit = beta_sep(GroupSpec::parse(g), SweepOptions::audit());
    CHECK(pruned.value == audit.value);
    check_witness(audit);
    SweepOptions sym;
    sym.symmetry = true;
    CHECK(beta_sep(GroupSpec::parse(g), sym).value == audit.value);
  }
}

TEST_CASE("identity in contexts never changes the value") {
  SweepOptions o = SweepOptions::audit();
  o.include_identity = true;
  CHECK(sweep("2,2", o) == 3);
  CHECK(sweep("3", o) == 3);
  CHECK(sweep("4,2", o) == 5);
  CHECK_FALSE(identity_exclusion_note(GroupSpec::parse("2,2")).empty());
}

TEST_CASE("worker count does not change results") {
  for (const char* g : {"3,3", "6,2", "2,2,2", "4,4"}) {
    CAPTURE(g);
    SweepOptions one;
    one.wave_size = 16;
    auto base = beta_sep(GroupSpec::parse(g), one);
    for (int w : {2, 3, 8}) {
      SweepOptions o = one;
      o.workers = w;
      auto r = beta_sep(GroupSpec::parse(g), o);
      CHECK(r.value == base.value);
      CHECK(r.witness_context == base.witness_context);
      CHECK(r.witness_vector == base.witness_vector);
      CHECK(r.subsets_examined == base.subsets_examined);
      CHECK(r.subsets_pruned == base.subsets_pruned);
    }
    auto ref = beta_sep_reference(GroupSpec::parse(g));
    CHECK(ref.value == base.value);
    CHECK(ref.witness_context == base.witness_context);
    CHECK(ref.witness_vector == base.witness_vector);
  }
}

TEST_CASE("automorphism group sizes") {
  CHECK(automorphisms(GroupSpec::parse("2,2"), 1000).size() == 6);
  CHECK(automorphisms(GroupSpec::parse("5"), 1000).size() == 4);
  CHECK(automorphisms(GroupSpec::parse("4,2"), 1000).size() == 8);
  CHECK(automorphisms(GroupSpec::parse("2,2,2"), 1000).size() == 168);
  for (const auto& perm : automorphisms(GroupSpec::parse("6,2"), 1000)) {
    std::set<std::uint32_t> image(perm.begin(), perm.end());
    CHECK(image.size() == perm.size());
    CHECK(perm[0] == 0);
  }
}

TEST_CASE("caps") {
  SweepOptions o;
  o.element_cap = 10;
  CHECK_THROWS_AS(beta_sep(GroupSpec::parse("4,4"), o), Error);
  SweepOptions s;
  s.subset_cap = 5;
  CHECK_THROWS_AS(beta_sep(GroupSpec::parse("4,4"), s), Error);
}
