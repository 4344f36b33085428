#pragma once

// Finite join-semilattices with 0, stored as idempotent monoids (x + y is
// the join). A finite semilattice with 0 has all meets, so meets are
// available everywhere; they are derived once at construction.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "refmon/monoid.hpp"

namespace refmon {

class Semilattice {
 public:
  // Throws NotSemilattice naming an element with x + x != x.
  explicit Semilattice(Monoid m);

  // The subsemilattice of an idempotent-closed subset of a monoid (e.g. the
  // idempotents of a commutative monoid), renumbered in ascending order of
  // the parent indices. Throws InvalidInput if the subset is not closed or
  // contains non-idempotents.
  static Semilattice from_subset(Monoid const& m, std::span<Elem const> elements);

  Monoid const& monoid() const noexcept {
    return _m;
  }
  std::size_t size() const noexcept {
    return _m.size();
  }
  Elem join(Elem a, Elem b) const noexcept {
    return _m.add(a, b);
  }
  Elem meet(Elem a, Elem b) const noexcept {
    return _meet[static_cast<std::size_t>(a) * _m.size() + b];
  }
  bool leq(Elem a, Elem b) const noexcept {
    return _m.add(a, b) == b;
  }
  bool less(Elem a, Elem b) const noexcept {
    return a != b && leq(a, b);
  }
  Elem top() const noexcept {
    return _top;
  }

  bool operator==(Semilattice const& that) const noexcept {
    return _m == that._m;
  }

 private:
  Monoid            _m;
  std::vector<Elem> _meet;
  Elem              _top;
};

namespace semilattices {
  // 0 < 1 < ... < length
  Semilattice chain(std::uint32_t length);
  // subsets of a k-element set, index = bitmask
  Semilattice boolean(std::uint32_t k);
  // 0, three pairwise incomparable atoms, 1
  Semilattice diamond();
  // 0 < a < c < 1, 0 < b < 1 with b incomparable to a, c
  Semilattice pentagon();
}  // namespace semilattices

// True iff the semilattice satisfies the refinement property (brute force).
bool is_distributive(Semilattice const& s, std::size_t max_size = kDefaultMaxSize);

struct JoinIrreducible {
  Elem                element;
  Elem                lower_cover;
  std::optional<Elem> dagger;  // present iff the semilattice is distributive
};

class JoinIrreducibleData {
 public:
  std::span<JoinIrreducible const> irreducibles() const noexcept {
    return _entries;
  }
  bool distributive() const noexcept {
    return _distributive;
  }
  bool is_irreducible(Elem p) const;
  JoinIrreducible const& at(Elem p) const;  // throws InvalidInput
  // The largest u with p not below u; throws NotDistributive if absent.
  Elem dagger(Elem p) const;
  // J(a): irreducibles below a, ascending.
  std::vector<Elem> below(Semilattice const& s, Elem a) const;

 private:
  friend JoinIrreducibleData join_irreducibles(Semilattice const&, std::size_t);
  std::vector<JoinIrreducible> _entries;
  bool                         _distributive = false;
};

JoinIrreducibleData join_irreducibles(Semilattice const& s,
                                      std::size_t max_size = kDefaultMaxSize);

// Closure of seeds ∪ {0} under join and meet, ascending.
std::vector<Elem> sublattice_generated(Semilattice const& s, std::span<Elem const> seeds);

// Ideals as bitsets over the elements (bit x set iff x belongs), so the
// semilattice must have at most 64 elements.
struct IdealLattice {
  Semilattice                lattice;    // join = ideal generated by the union
  std::vector<std::uint64_t> members;    // ideal index -> bitset
  std::vector<Elem>          embedding;  // a -> index of [0, a]
};

IdealLattice ideals(Semilattice const& s);

}  // namespace refmon
