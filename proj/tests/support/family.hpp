#pragma once

// The exhaustive family of small structure triples: Λ a chain of length
// 0..3, the square 2² or the diamond M₃; G one of Z/2, Z/3, Z/4, Z/2⊕Z/2; and
// every monotone assignment e ↦ G_e.

#include <functional>
#include <string>
#include <vector>

#include "refmon/abelian_group.hpp"
#include "refmon/semilattice.hpp"
#include "refmon/triple.hpp"

namespace family {

struct NamedLattice {
  std::string        name;
  refmon::Semilattice lattice;
};

struct NamedGroup {
  std::string         name;
  refmon::AbelianGroup group;
};

inline std::vector<NamedLattice> lattices() {
  using namespace refmon::semilattices;
  return {{"chain0", chain(0)}, {"chain1", chain(1)},   {"chain2", chain(2)},
          {"chain3", chain(3)}, {"square", boolean(2)}, {"diamond", diamond()}};
}

inline std::vector<NamedGroup> groups() {
  using refmon::AbelianGroup;
  return {{"Z2", AbelianGroup({2})},
          {"Z3", AbelianGroup({3})},
          {"Z4", AbelianGroup({4})},
          {"Z2+Z2", AbelianGroup({2, 2})}};
}

struct Member {
  std::string            name;
  refmon::StructureTriple triple;
};

// Calls visit on every monotone assignment, in a fixed order.
inline void for_each_triple(std::function<void(Member const&)> const& visit) {
  for (auto const& [lname, lambda] : lattices()) {
    for (auto const& [gname, g] : groups()) {
      auto const subs = refmon::all_subgroups(refmon::Subgroup::whole(g));
      std::size_t const n = lambda.size();
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        bool monotone = true;
        for (refmon::Elem e = 0; e < n && monotone; ++e) {
          for (refmon::Elem f = 0; f < n && monotone; ++f) {
            if (lambda.leq(e, f) && !subs[pick[e]].is_subset_of(subs[pick[f]])) {
              monotone = false;
            }
          }
        }
        if (monotone) {
          std::vector<refmon::Subgroup> assign;
          std::string                   name = lname + "/" + gname + "/";
          for (refmon::Elem e = 0; e < n; ++e) {
            assign.push_back(subs[pick[e]]);
            name += std::to_string(pick[e]);
          }
          visit(Member{name, refmon::StructureTriple{lambda, g, assign}});
        }
        std::size_t i = 0;
        while (i < n && ++pick[i] == subs.size()) {
          pick[i++] = 0;
        }
        if (i == n) {
          break;
        }
      }
    }
  }
}

inline std::vector<Member> all_triples() {
  std::vector<Member> out;
  for_each_triple([&](Member const& m) { out.push_back(m); });
  return out;
}

}  // namespace family
