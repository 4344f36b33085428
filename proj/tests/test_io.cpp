#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "family.hpp"
#include "refmon/error.hpp"
#include "refmon/io.hpp"

using namespace refmon;
using nlohmann::json;

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

bool same_triple(StructureTriple const& a, StructureTriple const& b) {
  return a.lambda == b.lambda && a.group == b.group && a.subgroups == b.subgroups;
}

std::string no_file(std::string const& name) {
  raise(ErrorKind::InvalidInput, "no file " + name);
}

StructureTriple square_triple() {
  AbelianGroup const h({2, 2});
  return StructureTriple{semilattices::boolean(2), h,
                         {Subgroup::trivial(h),
                          Subgroup::generated(h, std::vector<GroupElem>{h.encode({1, 0})}),
                          Subgroup::generated(h, std::vector<GroupElem>{h.encode({0, 1})}),
                          Subgroup::whole(h)}};
}

}  // namespace

TEST_CASE("monoid documents", "[io]") {
  auto const bb = building_block(3);
  auto const text = io::to_json(bb);
  CHECK(io::parse_monoid(text) == bb);
  CHECK(io::to_json(io::parse_monoid(text)) == text);
  auto const j = json::parse(text);
  CHECK(j["size"] == 4);
  CHECK(j["table"][2][2] == 3);

  auto const chain = semilattices::chain(2);
  auto const in    = io::parse_monoid_input(io::to_json(chain.monoid(), true));
  CHECK(in.semilattice);
  CHECK_FALSE(in.triple);
  CHECK(io::parse_semilattice(io::to_json(chain.monoid(), true)) == chain);
}

TEST_CASE("malformed monoids", "[io]") {
  CHECK(kind_of([] { io::parse_monoid("{"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::parse_monoid("[]"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::parse_monoid(R"({"size": 2, "table": [[0]]})"); })
        == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::parse_monoid(R"({"table": [[0, -1], [1, 0]]})"); })
        == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::parse_monoid(R"({"table": [[0, 1], [1, "a"]]})"); })
        == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::parse_monoid(R"({"table": [[0, 1], [0, 1]]})"); })
        != ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::parse_monoid(R"({"table": [[0, 1], [1, 0]], "kind": "semilattice"})"); })
        == ErrorKind::NotSemilattice);
}

TEST_CASE("groups, elements and generalized integers", "[io]") {
  AbelianGroup const g({2, 4});
  CHECK(io::parse_group(io::to_json(g)) == g);
  CHECK(kind_of([] { io::parse_group(R"({"factors": [2, "x"]})"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::parse_group(R"({"orders": [2]})"); }) == ErrorKind::InvalidInput);

  auto const x = io::parse_elements(R"([{"e": 1, "g": [1, 3]}, {"e": 0, "g": [0, 0]}])", g);
  REQUIRE(x.size() == 2);
  CHECK(x[0] == std::pair<Elem, GroupElem>{1, g.encode({1, 3})});
  CHECK(io::parse_elements(R"({"elements": [{"e": 2, "g": [0, 1]}]})", g).size() == 1);
  CHECK(kind_of([&] { io::parse_elements(R"([{"e": 1, "g": [1]}])", g); })
        == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { io::parse_elements(R"([{"e": 1, "g": [2, 0]}])", g); })
        == ErrorKind::InvalidInput);

  CHECK(io::parse_generalized_integer("12").divides(4));
  CHECK_FALSE(io::parse_generalized_integer("12").divides(8));
  CHECK(io::parse_generalized_integer("inf").is_all_infinite());
  auto const p = io::parse_generalized_integer(R"({"primes": {"2": "inf", "3": 1}})");
  CHECK(p.divides(1024 * 3));
  CHECK_FALSE(p.divides(9));
  CHECK(io::parse_generalized_integer(R"({"all_infinite": true})").is_all_infinite());
  CHECK(kind_of([] { io::parse_generalized_integer("0"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::parse_generalized_integer("\"many\""); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::parse_generalized_integer("[1]"); }) == ErrorKind::InvalidInput);
}

TEST_CASE("triple documents", "[io]") {
  auto const t    = square_triple();
  auto const text = io::to_json(t);
  CHECK(same_triple(io::parse_triple(text), t));
  CHECK(io::to_json(io::parse_triple(text)) == text);

  auto const in = io::parse_monoid_input(text);
  REQUIRE(in.triple);
  CHECK(in.monoid.size() == 9);

  // omitted subgroups are trivial
  auto sparse = json::parse(text);
  sparse["subgroups"].erase("0");
  CHECK(same_triple(io::parse_triple(sparse.dump()), t));

  auto bad = json::parse(text);
  bad["subgroups"]["7"] = bad["subgroups"]["3"];
  CHECK(kind_of([&] { io::parse_triple(bad.dump()); }) == ErrorKind::InvalidInput);
  bad = json::parse(text);
  bad["subgroups"]["x"] = bad["subgroups"]["3"];
  CHECK(kind_of([&] { io::parse_triple(bad.dump()); }) == ErrorKind::InvalidInput);
  bad = json::parse(text);
  bad["subgroups"]["3"] = bad["subgroups"]["1"];  // not monotone
  CHECK(kind_of([&] { io::parse_triple(bad.dump()); }) == ErrorKind::InvalidTriple);
}

TEST_CASE("triples round trip over the family", "[io][property]") {
  for (auto const& mem : family::all_triples()) {
    CAPTURE(mem.name);
    auto const text = io::to_json(mem.triple);
    CHECK(same_triple(io::parse_triple(text), mem.triple));
  }
}

TEST_CASE("hom documents", "[io]") {
  auto const bb   = building_block(2);
  auto const read = [&](std::string const& name) {
    if (name == "bb2.json") {
      return io::to_json(bb);
    }
    return no_file(name);
  };
  auto const h = io::parse_hom(
      R"({"source": "bb2.json", "target": {"table": [[0, 1], [1, 1]]}, "map": [0, 1, 1]})", read);
  CHECK(h.source == bb);
  CHECK(h.target.size() == 2);
  CHECK(h.map == std::vector<Elem>{0, 1, 1});
  CHECK(kind_of([&] { io::parse_hom(R"({"source": "gone.json", "target": "bb2.json", "map": []})", read); })
        == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { io::parse_hom(R"({"source": "bb2.json", "target": "bb2.json"})", read); })
        == ErrorKind::InvalidInput);
}

TEST_CASE("retract certificates", "[io]") {
  auto const t = square_triple();
  auto const c = order_unit_normalize(blocks_retract(t), 8);
  auto const text = io::to_json(c);
  auto const back = io::parse_certificate(text);
  CHECK(back.monoid == c.monoid);
  CHECK(back.target == c.target);
  CHECK(back.blocks == c.blocks);
  CHECK(back.eps == c.eps);
  CHECK(back.mu == c.mu);
  CHECK(back.unit == c.unit);
  CHECK(io::to_json(back) == text);
  CHECK_NOTHROW(verify(back));
  CHECK(json::parse(text).contains("unit_coordinates"));

  auto wrong = json::parse(text);
  wrong["format"] = "something-else";
  CHECK(kind_of([&] { io::parse_certificate(wrong.dump()); }) == ErrorKind::InvalidInput);
  wrong = json::parse(text);
  wrong["version"] = 2;
  CHECK(kind_of([&] { io::parse_certificate(wrong.dump()); }) == ErrorKind::InvalidInput);
  wrong = json::parse(text);
  wrong.erase("mu");
  CHECK(kind_of([&] { io::parse_certificate(wrong.dump()); }) == ErrorKind::InvalidInput);

  // a parsed but wrong map is the verifier's business
  wrong = json::parse(text);
  wrong["mu"]["map"][1] = 0;
  auto const broken = io::parse_certificate(wrong.dump());
  CHECK(certificate_violation(broken).has_value());

  // an explicit target instead of blocks
  auto explicit_target = c;
  explicit_target.blocks.reset();
  auto const e = io::parse_certificate(io::to_json(explicit_target));
  CHECK_FALSE(e.blocks);
  CHECK(e.target == c.target);
  CHECK_NOTHROW(verify(e));
}

TEST_CASE("approximation certificates", "[io]") {
  auto const t = square_triple();
  std::vector<std::pair<Elem, GroupElem>> x{{1, t.group.encode({1, 0})},
                                            {3, t.group.encode({1, 1})}};
  auto const c    = approximate(t, x);
  auto const text = io::to_json(c);
  auto const back = io::parse_approximation(text);
  CHECK(io::to_json(back) == text);
  CHECK(verify_certificate(back).ok());
  auto const j = json::parse(text);
  CHECK(j["N_size"] == c.n_size);
  CHECK(j["n"] == 2);
  CHECK(j.contains("N"));

  auto wrong = j;
  wrong["D"][0] = 99;
  CHECK(kind_of([&] { io::parse_approximation(wrong.dump()); }) == ErrorKind::InvalidInput);
  wrong = j;
  wrong["phi"].push_back(0);
  CHECK(kind_of([&] { io::parse_approximation(wrong.dump()); }) == ErrorKind::InvalidInput);
  wrong = j;
  wrong["format"] = "refmon-retract-certificate";
  CHECK(kind_of([&] { io::parse_approximation(wrong.dump()); }) == ErrorKind::InvalidInput);
  if (!j["pieces"].empty()) {
    wrong = j;
    wrong["pieces"][0]["w"] = 1000;
    CHECK(kind_of([&] { io::parse_approximation(wrong.dump()); }) == ErrorKind::InvalidInput);
  }
}
