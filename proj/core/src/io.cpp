#include "refmon/io.hpp"

#include <json.hpp>

#include "refmon/error.hpp"

namespace refmon::io {

using nlohmann::json;

namespace {

  constexpr char const* kRetractFormat = "refmon-retract-certificate";
  constexpr char const* kApproxFormat  = "refmon-approximation-certificate";

  [[noreturn]] void bad(std::string const& what) {
    raise(ErrorKind::InvalidInput, what);
  }

  json parse_text(std::string const& text) {
    try {
      return json::parse(text);
    } catch (json::exception const& e) {
      bad(std::string("malformed JSON: ") + e.what());
    }
  }

  json const& field(json const& j, char const* key) {
    if (!j.is_object() || !j.contains(key)) {
      bad(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
  }

  std::uint32_t as_uint(json const& j, std::string const& what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0
        || j.get<std::int64_t>() > std::int64_t(0xffffffff)) {
      bad(what + " must be a non-negative integer");
    }
    return static_cast<std::uint32_t>(j.get<std::int64_t>());
  }

  std::vector<Elem> as_uint_array(json const& j, std::string const& what) {
    if (!j.is_array()) {
      bad(what + " must be an array");
    }
    std::vector<Elem> out;
    for (auto const& v : j) {
      out.push_back(as_uint(v, what + " entry"));
    }
    return out;
  }

  // monoids

  Monoid monoid_from(json const& j) {
    auto const& rows = field(j, "table");
    if (!rows.is_array()) {
      bad("\"table\" must be an array of rows");
    }
    std::vector<std::vector<Elem>> table;
    for (auto const& r : rows) {
      table.push_back(as_uint_array(r, "table row"));
    }
    if (j.contains("size") && as_uint(j.at("size"), "size") != table.size()) {
      bad("\"size\" does not match the number of rows");
    }
    return Monoid::from_rows(table);
  }

  json monoid_to(Monoid const& m, bool semilattice) {
    json j;
    j["size"]  = m.size();
    j["table"] = m.rows();
    if (semilattice) {
      j["kind"] = "semilattice";
    }
    return j;
  }

  bool tagged_semilattice(json const& j) {
    return j.contains("kind") && j.at("kind") == "semilattice";
  }

  // groups

  AbelianGroup group_from(json const& j) {
    return AbelianGroup(as_uint_array(field(j, "factors"), "factor"));
  }

  json group_to(AbelianGroup const& g) {
    return json{{"factors", std::vector<std::uint32_t>(g.factors().begin(), g.factors().end())}};
  }

  GroupElem element_from(json const& j, AbelianGroup const& g) {
    auto const t = as_uint_array(j, "group element");
    if (t.size() != g.factors().size()) {
      bad("group element has " + std::to_string(t.size()) + " coordinates, expected "
          + std::to_string(g.factors().size()));
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] >= g.factors()[i]) {
        bad("group element coordinate " + std::to_string(t[i]) + " out of range");
      }
    }
    return g.encode(t);
  }

  json element_to(GroupElem a, AbelianGroup const& g) {
    return g.decode(a);
  }

  Subgroup subgroup_from(json const& j, AbelianGroup const& g) {
    auto const& gens = field(j, "generators");
    if (!gens.is_array()) {
      bad("\"generators\" must be an array");
    }
    std::vector<GroupElem> out;
    for (auto const& x : gens) {
      out.push_back(element_from(x, g));
    }
    return Subgroup::generated(g, out);
  }

  json subgroup_to(Subgroup const& s) {
    json gens = json::array();
    for (GroupElem x : s.generators()) {
      gens.push_back(element_to(x, s.parent()));
    }
    return json{{"generators", gens}};
  }

  // triples

  StructureTriple triple_from(json const& j) {
    Semilattice  lambda(monoid_from(field(j, "semilattice")));
    AbelianGroup g = group_from(field(j, "group"));
    std::vector<Subgroup> subgroups(lambda.size(), Subgroup::trivial(g));
    if (j.contains("subgroups")) {
      auto const& s = j.at("subgroups");
      if (!s.is_object()) {
        bad("\"subgroups\" must be an object keyed by semilattice index");
      }
      for (auto const& [key, value] : s.items()) {
        std::size_t pos = 0;
        unsigned long e = 0;
        try {
          e = std::stoul(key, &pos);
        } catch (std::exception const&) {
          pos = 0;
        }
        if (pos != key.size() || key.empty()) {
          bad("subgroup key \"" + key + "\" is not an index");
        }
        if (e >= lambda.size()) {
          bad("subgroup key " + key + " is outside the semilattice");
        }
        subgroups[e] = subgroup_from(value, g);
      }
    }
    StructureTriple t{std::move(lambda), std::move(g), std::move(subgroups)};
    validate_triple(t, false);
    return t;
  }

  json triple_to(StructureTriple const& t) {
    json subs = json::object();
    for (Elem e = 0; e < t.subgroups.size(); ++e) {
      subs[std::to_string(e)] = subgroup_to(t.subgroups[e]);
    }
    return json{{"semilattice", monoid_to(t.lambda.monoid(), true)},
                {"group", group_to(t.group)},
                {"subgroups", subs}};
  }

  std::vector<std::pair<Elem, GroupElem>> elements_from(json const& j, AbelianGroup const& g) {
    if (!j.is_array()) {
      bad("elements must be an array of {\"e\": ..., \"g\": [...]}");
    }
    std::vector<std::pair<Elem, GroupElem>> out;
    for (auto const& x : j) {
      out.emplace_back(as_uint(field(x, "e"), "e"), element_from(field(x, "g"), g));
    }
    return out;
  }

  json elements_to(std::vector<std::pair<Elem, GroupElem>> const& x, AbelianGroup const& g) {
    json out = json::array();
    for (auto [e, a] : x) {
      out.push_back(json{{"e", e}, {"g", element_to(a, g)}});
    }
    return out;
  }

  void check_format(json const& j, char const* format) {
    if (!j.contains("format") || j.at("format") != format) {
      bad(std::string("expected \"format\": \"") + format + "\"");
    }
    if (!j.contains("version") || j.at("version") != 1) {
      bad("unsupported certificate version");
    }
  }

}  // namespace

MonoidInput parse_monoid_input(std::string const& text) {
  json const j = parse_text(text);
  try {
    if (j.is_object() && j.contains("semilattice")) {
      auto t = triple_from(j);
      auto m = realize_from_triple(t).monoid();
      return MonoidInput{std::move(m), std::move(t), false};
    }
    MonoidInput in{monoid_from(j), std::nullopt, tagged_semilattice(j)};
    if (in.semilattice) {
      Semilattice{in.monoid};  // validates idempotency
    }
    return in;
  } catch (json::exception const& e) {
    bad(std::string("bad document: ") + e.what());
  }
}

Monoid parse_monoid(std::string const& text) {
  return parse_monoid_input(text).monoid;
}

std::string to_json(Monoid const& m, bool semilattice) {
  return monoid_to(m, semilattice).dump(2);
}

Semilattice parse_semilattice(std::string const& text) {
  return Semilattice(parse_monoid(text));
}

AbelianGroup parse_group(std::string const& text) {
  return group_from(parse_text(text));
}

std::string to_json(AbelianGroup const& g) {
  return group_to(g).dump(2);
}

StructureTriple parse_triple(std::string const& text) {
  json const j = parse_text(text);
  try {
    return triple_from(j);
  } catch (json::exception const& e) {
    bad(std::string("bad triple: ") + e.what());
  }
}

std::string to_json(StructureTriple const& t) {
  return triple_to(t).dump(2);
}

GeneralizedInteger parse_generalized_integer(std::string const& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (json::exception const&) {
    j = text;  // bare word such as inf
  }
  if (j.is_number_integer()) {
    auto const n = j.get<std::int64_t>();
    if (n <= 0) {
      bad("a generalized integer must be positive");
    }
    return GeneralizedInteger::from_integer(static_cast<std::uint64_t>(n));
  }
  if (j.is_string()) {
    if (j == "inf") {
      return GeneralizedInteger::all_infinite();
    }
    bad("unrecognised generalized integer \"" + j.get<std::string>() + "\"");
  }
  if (!j.is_object()) {
    bad("a generalized integer is an integer, \"inf\" or an object");
  }
  if (j.contains("all_infinite") && j.at("all_infinite") == true) {
    return GeneralizedInteger::all_infinite();
  }
  std::map<std::uint64_t, std::optional<std::uint32_t>> primes;
  if (j.contains("primes")) {
    for (auto const& [key, value] : j.at("primes").items()) {
      std::uint64_t p = 0;
      try {
        p = std::stoull(key);
      } catch (std::exception const&) {
        bad("prime key \"" + key + "\" is not a number");
      }
      if (value == "inf") {
        primes[p] = std::nullopt;
      } else {
        primes[p] = as_uint(value, "prime exponent");
      }
    }
  }
  return GeneralizedInteger::from_primes(std::move(primes));
}

std::vector<std::pair<Elem, GroupElem>> parse_elements(std::string const& text,
                                                       AbelianGroup const& g) {
  json const j = parse_text(text);
  if (j.is_object() && j.contains("elements")) {
    return elements_from(j.at("elements"), g);
  }
  return elements_from(j, g);
}

HomInput parse_hom(std::string const&                                     text,
                   std::function<std::string(std::string const&)> const& read_file) {
  json const j    = parse_text(text);
  auto       side = [&](char const* key) {
    json const& v = field(j, key);
    if (v.is_string()) {
      return parse_monoid(read_file(v.get<std::string>()));
    }
    return monoid_from(v);
  };
  try {
    HomInput h{side("source"), side("target"), as_uint_array(field(j, "map"), "map")};
    return h;
  } catch (json::exception const& e) {
    bad(std::string("bad hom file: ") + e.what());
  }
}

RetractCertificate parse_certificate(std::string const& text) {
  json const j = parse_text(text);
  try {
    check_format(j, kRetractFormat);
    RetractCertificate c{monoid_from(field(j, "monoid")), Monoid(), std::nullopt, {}, {},
                         std::nullopt};
    if (j.contains("blocks")) {
      c.blocks = BlockSum(as_uint_array(j.at("blocks"), "block order"));
      c.target = c.blocks->expand();
    } else {
      c.target = monoid_from(field(j, "target"));
    }
    c.eps = as_uint_array(field(field(j, "eps"), "map"), "eps");
    c.mu  = as_uint_array(field(field(j, "mu"), "map"), "mu");
    if (j.contains("unit") && !j.at("unit").is_null()) {
      c.unit = as_uint(j.at("unit"), "unit");
    }
    return c;
  } catch (json::exception const& e) {
    bad(std::string("bad certificate: ") + e.what());
  }
}

std::string to_json(RetractCertificate const& c) {
  json j;
  j["format"]  = kRetractFormat;
  j["version"] = 1;
  j["monoid"]  = monoid_to(c.monoid, false);
  if (c.blocks) {
    j["blocks"] = std::vector<std::uint32_t>(c.blocks->orders().begin(), c.blocks->orders().end());
  } else {
    j["target"] = monoid_to(c.target, false);
  }
  j["eps"] = json{{"map", c.eps}};
  j["mu"]  = json{{"map", c.mu}};
  if (c.unit) {
    j["unit"] = *c.unit;
    if (c.blocks) {
      j["unit_coordinates"] = c.blocks->decode(*c.unit);
    }
  }
  return j.dump(2);
}

ApproximationCertificate parse_approximation(std::string const& text) {
  json const j = parse_text(text);
  try {
    check_format(j, kApproxFormat);
    auto                     t = triple_from(field(j, "triple"));
    ApproximationCertificate c{t, elements_from(field(j, "elements"), t.group), 1, {}, {}, {},
                               0, 0};
    c.m = as_uint(field(j, "m"), "m");
    auto const& b = field(j, "bound");
    if (!b.is_number_unsigned() && !b.is_number_integer()) {
      bad("bound must be an integer");
    }
    c.bound  = b.get<std::uint64_t>();
    c.d      = as_uint_array(field(j, "D"), "D");
    c.phi    = as_uint_array(field(j, "phi"), "phi");
    c.n_size = as_uint(field(j, "N_size"), "N_size");
    for (auto const& p : field(j, "pieces")) {
      c.pieces.push_back(ApproxPiece{as_uint(field(p, "P"), "P"),
                                     as_uint(field(p, "lower"), "lower"),
                                     as_uint(field(p, "dagger"), "dagger"),
                                     subgroup_from(field(p, "H"), t.group),
                                     subgroup_from(field(p, "H_prime"), t.group),
                                     as_uint(field(p, "u"), "u"),
                                     as_uint(field(p, "v"), "v"),
                                     as_uint(field(p, "w"), "w"),
                                     as_uint(field(p, "psi"), "psi")});
    }
    for (Elem e : c.d) {
      if (e >= t.lambda.size()) {
        bad("D contains an element outside the semilattice");
      }
    }
    for (auto const& p : c.pieces) {
      for (Elem e : {p.p, p.lower, p.dagger, p.u, p.v, p.w, p.psi}) {
        if (e >= t.lambda.size()) {
          bad("piece refers to an element outside the semilattice");
        }
      }
    }
    for (Elem e : c.phi) {
      if (e >= t.lambda.size()) {
        bad("phi has a value outside the semilattice");
      }
    }
    if (c.phi.size() != c.d.size()) {
      bad("phi must have one entry per element of D");
    }
    return c;
  } catch (json::exception const& e) {
    bad(std::string("bad approximation certificate: ") + e.what());
  }
}

std::string to_json(ApproximationCertificate const& c) {
  json j;
  j["format"]   = kApproxFormat;
  j["version"]  = 1;
  j["triple"]   = triple_to(c.triple);
  j["elements"] = elements_to(c.x, c.triple.group);
  j["m"]        = c.m;
  j["n"]        = c.x.size();
  j["bound"]    = c.bound;
  j["D"]        = c.d;
  j["phi"]      = c.phi;
  j["N_size"]   = c.n_size;
  json pieces   = json::array();
  for (auto const& p : c.pieces) {
    pieces.push_back(json{{"P", p.p},
                          {"lower", p.lower},
                          {"dagger", p.dagger},
                          {"H", subgroup_to(p.h)},
                          {"H_prime", subgroup_to(p.h_prime)},
                          {"u", p.u},
                          {"v", p.v},
                          {"w", p.w},
                          {"psi", p.psi}});
  }
  j["pieces"] = pieces;
  j["N"]      = triple_to(approximation_triple(c));
  return j.dump(2);
}

}  // namespace refmon::io
