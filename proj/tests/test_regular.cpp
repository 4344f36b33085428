#include <catch2/catch_amalgamated.hpp>

#include "family.hpp"
#include "oracle.hpp"
#include "refmon/error.hpp"
#include "refmon/regular.hpp"
#include "refmon/triple.hpp"

using namespace refmon;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

Subgroup gen(AbelianGroup const& g, std::vector<Tuple> const& ts) {
  std::vector<GroupElem> codes;
  for (auto const& t : ts) {
    codes.push_back(g.encode(t));
  }
  return Subgroup::generated(g, codes);
}

// Λ = 2² with G_0 = g0, G_e = e, G_f = f, G_1 = H.
StructureTriple square_triple(AbelianGroup const& h, Subgroup g0, Subgroup e, Subgroup f) {
  return StructureTriple{semilattices::boolean(2), h, {g0, e, f, Subgroup::whole(h)}};
}

// 0 < e < f with M_e = Z/2 = {e, x} collapsing into M_f = {f}.
Monoid collapsing() {
  return Monoid::from_rows({{0, 1, 2, 3}, {1, 1, 2, 3}, {2, 2, 1, 3}, {3, 3, 3, 3}});
}

}  // namespace

TEST_CASE("decomposition of semilattices and blocks", "[regular]") {
  auto const s = decompose_regular(semilattices::boolean(2).monoid());
  for (Elem x = 0; x < 4; ++x) {
    CHECK(s.idempotent_of(x) == x);
    CHECK(s.group(x).size() == 1);
  }

  auto const b3 = decompose_regular(building_block(3));
  CHECK(std::vector<Elem>(b3.idempotents().begin(), b3.idempotents().end())
        == std::vector<Elem>{0, 1});
  CHECK(b3.group(1).size() == 3);
  CHECK(b3.group_exponent(1) == 3);
  CHECK(b3.inverse_of(2) == 3);

  auto const b22 = decompose_regular(direct_sum(building_block(2), building_block(2)));
  CHECK(b22.idempotents().size() == 4);
  CHECK(b22.group(b22.top()).size() == 4);
  CHECK(b22.group_exponent(b22.top()) == 2);

  auto const tail = Monoid::from_rows({{0, 1, 2, 3}, {1, 2, 3, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}});
  CHECK(kind_of([&] { decompose_regular(tail); }) == ErrorKind::NotRegular);
  CHECK(kind_of([&] { b3.group(2); }) == ErrorKind::InvalidInput);
}

TEST_CASE("decomposition matches the pre-order definition", "[regular][property]") {
  family::for_each_triple([](family::Member const& mem) {
    auto const m = realize_from_triple(mem.triple).monoid();
    auto const t = m.rows();
    auto const d = decompose_regular(m);
    CHECK(std::vector<Elem>(d.idempotents().begin(), d.idempotents().end())
          == oracle::idempotents(t));
    for (Elem x = 0; x < m.size(); ++x) {
      CHECK(d.idempotent_of(x) == oracle::idempotent_of(t, x));
      CHECK(m.add(x, d.inverse_of(x)) == d.idempotent_of(x));
      CHECK(d.idempotent_of(d.inverse_of(x)) == d.idempotent_of(x));
      for (Elem y = 0; y < m.size(); ++y) {
        CHECK(d.idempotent_of(m.add(x, y)) == m.add(d.idempotent_of(x), d.idempotent_of(y)));
      }
    }
    for (Elem e : d.idempotents()) {
      auto const g = d.group(e);
      CHECK(std::vector<Elem>(g.begin(), g.end()) == oracle::group(t, e));
    }
  });
}

TEST_CASE("(emb)", "[regular]") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    CHECK(check_emb(decompose_regular(direct_sum(building_block(n), building_block(2)))).holds);
  }
  CHECK(check_emb(decompose_regular(semilattices::diamond().monoid())).holds);

  auto const v = check_emb(decompose_regular(collapsing()));
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->x == 2);
  CHECK(v.witness->f == 3);
  CHECK_FALSE(describe(*v.witness).empty());
  CHECK_FALSE(oracle::emb(collapsing().rows()));
  CHECK(kind_of([] { structure_triple(collapsing()); }) == ErrorKind::EmbRequired);
}

TEST_CASE("(pur)", "[regular]") {
  CHECK(check_pur(decompose_regular(direct_sum(building_block(4), building_block(2)))).holds);
  CHECK(check_pur(decompose_regular(semilattices::chain(3).monoid())).holds);

  AbelianGroup const    z4({4});
  StructureTriple const t{semilattices::chain(1), z4, {gen(z4, {{2}}), Subgroup::whole(z4)}};
  auto const            m = realize_from_triple(t).monoid();
  auto const            v = check_pur(decompose_regular(m));
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->m == 2);
  CHECK_FALSE(oracle::pur(m.rows()));
}

TEST_CASE("the Mayer-Vietoris property", "[regular]") {
  AbelianGroup const h({2, 2});
  auto const         zero = Subgroup::trivial(h);
  auto const         a    = gen(h, {{1, 0}});
  auto const         b    = gen(h, {{0, 1}});

  auto const good = realize_from_triple(square_triple(h, zero, a, b)).monoid();
  CHECK(check_mvp(decompose_regular(good)).holds);
  CHECK(oracle::mvp(good.rows()));

  auto const bad = realize_from_triple(square_triple(h, zero, a, a)).monoid();
  auto const v   = check_mvp(decompose_regular(bad));
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->clause == 'a');

  CHECK(check_mvp(decompose_regular(semilattices::diamond().monoid())).holds);
}

TEST_CASE("refinement characterisation", "[regular]") {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    auto const r = characterize_refinement(direct_sum(building_block(n), building_block(2)));
    CHECK(r.brute);
    CHECK(r.via_theorem);
  }
  auto const d = characterize_refinement(semilattices::diamond().monoid());
  CHECK_FALSE(d.brute);
  CHECK_FALSE(d.via_theorem);
  CHECK_FALSE(d.distributive);

  AbelianGroup const h({2});
  auto const         whole = Subgroup::whole(h);
  auto const         m = realize_from_triple(square_triple(h, Subgroup::trivial(h), whole, whole));
  auto const         r = characterize_refinement(m.monoid());
  CHECK_FALSE(r.brute);
  CHECK_FALSE(r.via_theorem);
  CHECK(r.distributive);
  CHECK_FALSE(r.mvp);
}

TEST_CASE("structure triples", "[regular][triple]") {
  for (std::uint32_t n = 1; n <= 5; ++n) {
    auto const s = structure_triple(building_block(n));
    CHECK(s.triple.lambda.size() == 2);
    CHECK(s.triple.group.order() == n);
    CHECK(s.triple.subgroups[0].size() == 1);
    CHECK(s.triple.subgroups[1].size() == n);
    CHECK(s.iso.is_bijective());
  }
  auto const sl = structure_triple(semilattices::boolean(2).monoid());
  CHECK(sl.triple.group.order() == 1);
  CHECK(sl.triple.lambda.size() == 4);

  auto const s23 = structure_triple(direct_sum(building_block(2), building_block(3)));
  CHECK(s23.triple.lambda.size() == 4);
  CHECK(s23.triple.group.factors().size() == 1);
  CHECK(s23.triple.group.order() == 6);
  std::multiset<std::size_t> orders;
  for (auto const& g : s23.triple.subgroups) {
    orders.insert(g.size());
  }
  CHECK(orders == std::multiset<std::size_t>{1, 2, 3, 6});
  CHECK(oracle::is_hom(s23.iso.source().rows(), s23.iso.target().rows(),
                       std::vector<Elem>(s23.iso.map().begin(), s23.iso.map().end())));
}

TEST_CASE("realising triples", "[regular][triple]") {
  StructureTriple const trivial{semilattices::chain(0), AbelianGroup(), {Subgroup::trivial(AbelianGroup())}};
  CHECK(realize_from_triple(trivial).monoid().size() == 1);
  for (std::uint32_t n = 1; n <= 5; ++n) {
    AbelianGroup const    g({n});
    StructureTriple const t{semilattices::chain(1), g, {Subgroup::trivial(g), Subgroup::whole(g)}};
    CHECK(realize_from_triple(t).monoid() == building_block(n));
  }
  AbelianGroup const    g({2});
  StructureTriple const bad{semilattices::chain(1), g, {Subgroup::whole(g), Subgroup::trivial(g)}};
  CHECK(kind_of([&] { realize_from_triple(bad); }) == ErrorKind::InvalidTriple);
  StructureTriple const short_t{semilattices::chain(1), g, {Subgroup::whole(g)}};
  CHECK(kind_of([&] { validate_triple(short_t); }) == ErrorKind::InvalidTriple);
  StructureTriple const uncovered{semilattices::chain(1), g,
                                  {Subgroup::trivial(g), Subgroup::trivial(g)}};
  CHECK(kind_of([&] { validate_triple(uncovered); }) == ErrorKind::InvalidTriple);
  CHECK_NOTHROW(validate_triple(uncovered, false));
}

TEST_CASE("the realised 2² example", "[regular][triple]") {
  // the realised monoid is a submonoid of Λ × H
  AbelianGroup const h({2, 2});
  auto const         t = square_triple(h, Subgroup::trivial(h), gen(h, {{1, 0}}), gen(h, {{0, 1}}));
  auto const         r = realize_from_triple(t);
  CHECK(r.monoid().size() == 1 + 2 + 2 + 4);
  for (Elem x = 0; x < r.monoid().size(); ++x) {
    for (Elem y = 0; y < r.monoid().size(); ++y) {
      auto [e, a] = r.label(x);
      auto [f, b] = r.label(y);
      CHECK(r.label(r.monoid().add(x, y))
            == std::pair<Elem, GroupElem>{t.lambda.join(e, f), h.add(a, b)});
    }
  }
  CHECK(r.index_of(1, h.encode({1, 0})).has_value());
  CHECK_FALSE(r.index_of(1, h.encode({0, 1})).has_value());
}

TEST_CASE("triples round-trip through their monoids", "[regular][triple][property]") {
  family::for_each_triple([](family::Member const& mem) {
    auto const m = realize_from_triple(mem.triple).monoid();
    auto const s = structure_triple(m);
    CHECK(s.iso.is_bijective());
    CHECK(oracle::is_hom(m.rows(), s.realized.monoid().rows(),
                         std::vector<Elem>(s.iso.map().begin(), s.iso.map().end())));
    CHECK(find_isomorphism(m, realize_from_triple(s.triple).monoid()));
  });
}

TEST_CASE("triple conditions describe the realised monoid", "[regular][triple][property]") {
  family::for_each_triple([](family::Member const& mem) {
    auto const m  = realize_from_triple(mem.triple).monoid();
    auto const t  = m.rows();
    auto const tc = triple_conditions(mem.triple);
    CAPTURE(mem.name);
    CHECK(tc.refinement() == oracle::refinement(t));
    CHECK(tc.trivial_bottom == oracle::conical(t));
    CHECK(tc.pure == oracle::pur(t));
    CHECK(tc.distributive == oracle::distributive_lattice(mem.triple.lambda.monoid().rows()));
    CHECK(oracle::emb(t));

    auto const d = decompose_regular(m);
    CHECK(check_emb(d).holds);
    CHECK(check_pur(d).holds == oracle::pur(t));
    CHECK(check_mvp(d).holds == oracle::mvp(t));
    auto const r = characterize_refinement(m);
    CHECK(r.brute == r.via_theorem);
  });
}

TEST_CASE("generalized integers", "[regular]") {
  auto const inf = GeneralizedInteger::all_infinite();
  CHECK(inf.divides(1));
  CHECK(inf.divides(720720));
  auto const six = GeneralizedInteger::from_integer(6);
  CHECK(six.divides(3));
  CHECK_FALSE(six.divides(4));
  auto const two_inf = GeneralizedInteger::from_primes({{2, std::nullopt}, {3, 1}});
  CHECK(two_inf.divides(1024 * 3));
  CHECK_FALSE(two_inf.divides(9));
  CHECK(GeneralizedInteger::from_integer(1).divides(1));
  CHECK_FALSE(GeneralizedInteger::from_integer(1).divides(2));
  CHECK(kind_of([] { GeneralizedInteger::from_primes({{4, 1}}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { GeneralizedInteger::from_integer(0); }) == ErrorKind::InvalidInput);
  CHECK_FALSE(six.to_string().empty());
}

TEST_CASE("order restriction", "[regular]") {
  auto const b6 = building_block(6);
  CHECK(restrict_orders(b6, GeneralizedInteger::all_infinite()).monoid == b6);
  auto const two = restrict_orders(b6, GeneralizedInteger::from_integer(2));
  CHECK(two.embedding == std::vector<Elem>{0, 1, 4});
  CHECK(two.monoid == building_block(2));
  auto const one = restrict_orders(b6, GeneralizedInteger::from_integer(1));
  CHECK(one.monoid.size() == 2);
}

TEST_CASE("restriction preserves the class", "[regular][property]") {
  for (std::uint32_t k : {1u, 2u, 3u, 4u, 6u}) {
    auto const g = GeneralizedInteger::from_integer(k);
    family::for_each_triple([&](family::Member const& mem) {
      auto const m = realize_from_triple(mem.triple).monoid();
      if (!rep_report(m).in_rep()) {
        return;
      }
      auto const sub = restrict_orders(m, g);
      for (Elem x = 0; x < sub.monoid.size(); ++x) {
        CHECK(k % *oracle::order(m.rows(), sub.embedding[x]) == 0);
      }
      CHECK(rep_report(sub.monoid).in_rep());
    });
  }
}

TEST_CASE("membership reports", "[regular]") {
  auto const r = rep_report(building_block(3));
  CHECK(r.in_rep());
  CHECK(r.refinement_method == "exhaustive");
  CHECK(r.witnesses.empty());

  auto const big = rep_report(building_block(70));
  CHECK(big.in_rep());
  CHECK(big.refinement_method == "structural");

  auto const c = rep_report(collapsing());
  CHECK_FALSE(c.in_rep());
  CHECK_FALSE(c.emb);
  CHECK_FALSE(c.witnesses.empty());

  auto const tail = Monoid::from_rows({{0, 1, 2, 3}, {1, 2, 3, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}});
  auto const t    = rep_report(tail);
  CHECK_FALSE(t.regular);
  CHECK_FALSE(t.strongly_periodic);
  CHECK_FALSE(t.in_rep());
}
