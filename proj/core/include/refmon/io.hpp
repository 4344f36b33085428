#pragma once

// JSON interchange. Every parser throws refmon::Error with kind
// InvalidInput for malformed documents; the validating constructors add
// their own kinds (NotCommutative, InvalidTriple, ...).
//
//   monoid       {"size": n, "table": [[...], ...], "kind": "semilattice"?}
//   group        {"factors": [d1, ...]}
//   subgroup     {"generators": [[a1, ...], ...]}
//   triple       {"semilattice": <monoid>, "group": <group>,
//                 "subgroups": {"<e>": <subgroup>, ...}}   (missing e: {0})
//   gen. integer {"primes": {"2": 1, "3": "inf"}, "all_infinite": false},
//                or a positive integer, or "inf"
//   hom          {"source": <monoid or path>, "target": ..., "map": [...]}
//   certificate  {"format": "refmon-retract-certificate", "version": 1,
//                 "monoid": <monoid>, "blocks": [n1, ...] or "target": <monoid>,
//                 "eps": {"map": [...]}, "mu": {"map": [...]}, "unit": k?}
//   elements     [{"e": idx, "g": [a1, ...]}, ...]
//
// Output is deterministic: keys are sorted and arrays keep library order.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "refmon/approx.hpp"
#include "refmon/limits.hpp"
#include "refmon/monoid.hpp"
#include "refmon/regular.hpp"
#include "refmon/semilattice.hpp"
#include "refmon/triple.hpp"

namespace refmon::io {

// A monoid file or a triple file (detected by the "semilattice" key).
struct MonoidInput {
  Monoid                         monoid;
  std::optional<StructureTriple> triple;
  bool                           semilattice = false;  // "kind": "semilattice"
};

MonoidInput parse_monoid_input(std::string const& text);

Monoid      parse_monoid(std::string const& text);
std::string to_json(Monoid const& m, bool semilattice = false);

Semilattice parse_semilattice(std::string const& text);

AbelianGroup parse_group(std::string const& text);
std::string  to_json(AbelianGroup const& g);

StructureTriple parse_triple(std::string const& text);
std::string     to_json(StructureTriple const& t);

GeneralizedInteger parse_generalized_integer(std::string const& text);

std::vector<std::pair<Elem, GroupElem>> parse_elements(std::string const& text,
                                                       AbelianGroup const& g);

// Homomorphism file; "source"/"target" strings are handed to read_file
// (the CLI resolves them relative to the hom file). The map is returned
// unvalidated.
struct HomInput {
  Monoid            source;
  Monoid            target;
  std::vector<Elem> map;
};

HomInput parse_hom(std::string const&                                   text,
                   std::function<std::string(std::string const&)> const& read_file);

RetractCertificate parse_certificate(std::string const& text);
std::string        to_json(RetractCertificate const& c);

ApproximationCertificate parse_approximation(std::string const& text);
std::string              to_json(ApproximationCertificate const& c);

}  // namespace refmon::io
