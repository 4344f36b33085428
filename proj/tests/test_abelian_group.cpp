#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracle.hpp"
#include "refmon/abelian_group.hpp"
#include "refmon/error.hpp"

using namespace refmon;

namespace {

using OSet = std::set<oracle::Group::Elt>;

OSet as_tuples(Subgroup const& s) {
  OSet out;
  for (GroupElem x : s.elements()) {
    out.insert(s.parent().decode(x));
  }
  return out;
}

Subgroup gen(AbelianGroup const& g, std::vector<Tuple> const& ts) {
  std::vector<GroupElem> codes;
  for (auto const& t : ts) {
    codes.push_back(g.encode(t));
  }
  return Subgroup::generated(g, codes);
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

std::vector<std::vector<std::uint32_t>> sweep_groups() {
  return {{2}, {4}, {6}, {8}, {2, 2}, {2, 4}, {3, 3}, {2, 6}, {4, 4}};
}

}  // namespace

TEST_CASE("group arithmetic", "[group]") {
  AbelianGroup const g({2, 4});
  CHECK(g.order() == 8);
  CHECK(g.exponent() == 4);
  auto const a = g.encode({1, 3});
  CHECK(g.decode(a) == Tuple{1, 3});
  CHECK(g.decode(g.add(a, a)) == Tuple{0, 2});
  CHECK(g.decode(g.neg(a)) == Tuple{1, 1});
  CHECK(g.element_order(a) == 4);
  CHECK(g.times(4, a) == g.zero());
  CHECK(to_string(g, a) == "(1,3)");
  CHECK(AbelianGroup().order() == 1);
}

TEST_CASE("generated subgroups, sums and intersections", "[group]") {
  AbelianGroup const g({2, 4});
  CHECK(Subgroup::generated(g, std::vector<GroupElem>{}).size() == 1);
  auto const a = gen(g, {{1, 2}});
  CHECK(as_tuples(a) == OSet{{0, 0}, {1, 2}});
  auto const b = gen(g, {{0, 1}});
  CHECK(subgroup_intersection(a, b) == Subgroup::trivial(g));
  CHECK(subgroup_sum(a, b) == Subgroup::whole(g));

  AbelianGroup const h({2});
  CHECK(kind_of([&] { subgroup_sum(a, Subgroup::whole(h)); }) == ErrorKind::ParentMismatch);
}

TEST_CASE("subgroup arithmetic matches tuple closure", "[group][property]") {
  for (auto const& f : sweep_groups()) {
    AbelianGroup const g(f);
    oracle::Group const og{f};
    auto const subs = all_subgroups(Subgroup::whole(g));
    std::set<OSet> lib;
    for (auto const& s : subs) {
      lib.insert(as_tuples(s));
    }
    CHECK(lib == og.subgroups());
    for (auto const& a : subs) {
      auto const ta = as_tuples(a);
      CHECK(as_tuples(Subgroup::generated(g, a.generators())) == ta);
      for (auto const& b : subs) {
        auto const tb = as_tuples(b);
        std::vector<oracle::Group::Elt> both(ta.begin(), ta.end());
        both.insert(both.end(), tb.begin(), tb.end());
        CHECK(as_tuples(subgroup_sum(a, b)) == og.span(both));
        OSet meet;
        for (auto const& x : ta) {
          if (tb.count(x)) {
            meet.insert(x);
          }
        }
        CHECK(as_tuples(subgroup_intersection(a, b)) == meet);
        if (a.is_subset_of(b)) {
          CHECK(is_pure(a, b) == og.pure(ta, tb));
        }
      }
      CHECK(is_pure(a, g) == og.pure(ta, og.span(og.elements())));
      for (std::uint32_t n = 1; n <= 8; ++n) {
        CHECK(as_tuples(multiple_subgroup(n, a)) == og.multiple(n, ta));
      }
    }
  }
}

TEST_CASE("purity", "[group]") {
  AbelianGroup const z4({4});
  CHECK(is_pure(Subgroup::whole(z4), z4));
  CHECK(is_pure(Subgroup::trivial(z4), z4));
  auto const two = gen(z4, {{2}});
  CHECK_FALSE(is_pure(two, z4));
  CHECK(purity_failure(two, Subgroup::whole(z4)) == 2);

  AbelianGroup const g({2, 4});
  CHECK(is_pure(gen(g, {{1, 2}}), g));
  CHECK(kind_of([&] { is_pure(Subgroup::whole(g), gen(g, {{1, 2}})); })
        == ErrorKind::PreconditionViolated);
}

TEST_CASE("pure complements", "[group]") {
  AbelianGroup const g({2, 4});
  auto const         whole = Subgroup::whole(g);
  CHECK(pure_complement(Subgroup::trivial(g), whole) == whole);
  CHECK(pure_complement(whole, whole) == Subgroup::trivial(g));
  CHECK(pure_complement(gen(g, {{1, 2}}), whole) == gen(g, {{0, 1}}));

  AbelianGroup const z4({4});
  CHECK(kind_of([&] { pure_complement(gen(z4, {{2}}), Subgroup::whole(z4)); })
        == ErrorKind::NotPure);
}

TEST_CASE("pure complements split every pure subgroup", "[group][property]") {
  for (auto const& f : sweep_groups()) {
    AbelianGroup const g(f);
    auto const         subs = all_subgroups(Subgroup::whole(g));
    for (auto const& b : subs) {
      for (auto const& a : subs) {
        if (!a.is_subset_of(b)) {
          continue;
        }
        if (!is_pure(a, b)) {
          CHECK(kind_of([&] { pure_complement(a, b); }) == ErrorKind::NotPure);
          continue;
        }
        auto const c = pure_complement(a, b);
        CHECK(c.is_subset_of(b));
        CHECK(subgroup_intersection(a, c) == Subgroup::trivial(g));
        CHECK(subgroup_sum(a, c) == b);
        auto const d = internal_projections(b, {a, c});
        for (GroupElem x : b.elements()) {
          CHECK(g.add(d.project(0, x), d.project(1, x)) == x);
          CHECK(a.contains(d.project(0, x)));
        }
        CHECK(pure_complement(a, b) == c);  // deterministic
        // purity passes to intermediate subgroups
        for (auto const& mid : subs) {
          if (a.is_subset_of(mid) && mid.is_subset_of(b)) {
            CHECK(is_pure(a, mid));
          }
        }
      }
    }
  }
}

TEST_CASE("cyclic decompositions", "[group]") {
  AbelianGroup const z6({6});
  CHECK(cyclic_decomposition(Subgroup::trivial(z6)).empty());
  auto const d6 = cyclic_decomposition(Subgroup::whole(z6));
  REQUIRE(d6.size() == 1);
  CHECK(d6[0].order == 6);
  CHECK(z6.element_order(d6[0].generator) == 6);

  AbelianGroup const g({2, 4});
  auto const         s = gen(g, {{1, 2}, {0, 2}});
  CHECK(as_tuples(s) == OSet{{0, 0}, {0, 2}, {1, 0}, {1, 2}});
  auto const d = cyclic_decomposition(s);
  REQUIRE(d.size() == 2);
  CHECK(d[0].order == 2);
  CHECK(d[1].order == 2);
}

TEST_CASE("cyclic decompositions are internal direct sums", "[group][property]") {
  for (auto const& f : sweep_groups()) {
    AbelianGroup const g(f);
    for (auto const& s : all_subgroups(Subgroup::whole(g))) {
      auto const d = cyclic_decomposition(s);
      std::size_t product = 1;
      std::vector<Subgroup> parts;
      for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(d[i].order > 1);
        CHECK(g.element_order(d[i].generator) == d[i].order);
        if (i > 0) {
          CHECK(d[i].order % d[i - 1].order == 0);
        }
        product *= d[i].order;
        parts.push_back(Subgroup::generated(g, std::vector<GroupElem>{d[i].generator}));
      }
      CHECK(product == s.size());
      if (!parts.empty()) {
        CHECK_NOTHROW(internal_projections(s, parts));
      }
    }
  }
}

TEST_CASE("internal projections", "[group]") {
  AbelianGroup const g({2, 4});
  auto const         whole = Subgroup::whole(g);
  auto const         x     = g.encode({1, 3});

  auto const one = internal_projections(whole, {whole});
  CHECK(one.project(0, x) == x);

  auto const coords = internal_projections(whole, {gen(g, {{1, 0}}), gen(g, {{0, 1}})});
  CHECK(g.decode(coords.project(0, x)) == Tuple{1, 0});
  CHECK(g.decode(coords.project(1, x)) == Tuple{0, 3});

  auto const skew = internal_projections(whole, {gen(g, {{1, 2}}), gen(g, {{0, 1}})});
  CHECK(g.decode(skew.project(0, x)) == Tuple{1, 2});
  CHECK(g.decode(skew.project(1, x)) == Tuple{0, 1});

  CHECK(kind_of([&] { internal_projections(whole, {gen(g, {{0, 2}}), gen(g, {{0, 1}})}); })
        == ErrorKind::NotDirectSum);
  CHECK(kind_of([&] { internal_projections(whole, {gen(g, {{1, 0}})}); })
        == ErrorKind::NotDirectSum);
}
