#pragma once

// Structure triples (Λ, G, {G_e}): a semilattice Λ, an abelian group G and
// subgroups G_e with G_e <= G_f whenever e <= f. Such a triple presents the
// monoid on the disjoint union of the {e} × G_e with
// (e, x) + (f, y) = (e ∨ f, x + y).

#include <optional>
#include <utility>
#include <vector>

#include "refmon/abelian_group.hpp"
#include "refmon/monoid.hpp"
#include "refmon/semilattice.hpp"

namespace refmon {

struct StructureTriple {
  Semilattice           lambda;
  AbelianGroup          group;
  std::vector<Subgroup> subgroups;  // indexed by the elements of lambda
};

// Throws InvalidTriple when there are not |Λ| subgroups of G, when
// e <= f but G_e is not contained in G_f, or (if require_cover) when the
// G_e do not cover G.
void validate_triple(StructureTriple const& t, bool require_cover = true);

// The conditions characterising refinement (distributive, sums,
// intersections), conicality (trivial_bottom) and purity (pure) of the
// realised monoid. Purity is measured inside G_⊤, which is G itself when
// the subgroups cover G.
struct TripleConditions {
  bool distributive   = false;  // Λ distributive
  bool sums           = false;  // G_e + G_f = G_{e∨f}
  bool intersections  = false;  // G_e ∩ G_f = ⋃_{g <= e, f} G_g
  bool trivial_bottom = false;  // G_0 = {0}
  bool pure           = false;  // each G_e pure in G_⊤

  bool refinement() const noexcept {
    return distributive && sums && intersections;
  }
};

TripleConditions triple_conditions(StructureTriple const& t,
                                   std::size_t max_size = kDefaultMaxSize);

class RealizedTriple {
 public:
  Monoid const& monoid() const noexcept {
    return _m;
  }
  // element index -> (Λ element, group element)
  std::pair<Elem, GroupElem> label(Elem a) const noexcept {
    return _labels[a];
  }
  std::optional<Elem> index_of(Elem e, GroupElem g) const;

 private:
  friend RealizedTriple realize_from_triple(StructureTriple const&);

  Monoid                                  _m;
  std::vector<std::pair<Elem, GroupElem>> _labels;
  std::vector<std::vector<GroupElem>>     _members;  // G_e, ascending
  std::vector<Elem>                       _offset;   // first index of {e} × G_e
};

// Elements are ordered by Λ index, then by group element, so (0, 0) is the
// zero. Needs monotonicity only; throws InvalidTriple otherwise.
RealizedTriple realize_from_triple(StructureTriple const& t);

struct StructureResult {
  StructureTriple triple;
  RealizedTriple  realized;
  // a -> (d(a), a + ⊤) as an isomorphism onto realized.monoid()
  MonoidHom iso;
  // Λ index -> idempotent of the input monoid
  std::vector<Elem> idempotent_of_index;
};

// Λ = E(M), G = M_⊤ written as a sum of cyclic groups, G_e = M_e + ⊤.
// Throws NotRegular, EmbRequired (with the failing (emb) witness) or
// InternalInconsistency if the map fails to be an isomorphism.
StructureResult structure_triple(Monoid const& m);

}  // namespace refmon
