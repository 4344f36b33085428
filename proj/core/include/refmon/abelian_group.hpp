#pragma once

// Finite abelian groups Z/d1 + ... + Z/dk and their subgroups.
//
// A group element is a tuple (a1, ..., ak) with 0 <= ai < di. Internally it
// is encoded as a mixed-radix integer with the first factor most
// significant, so comparing codes is comparing tuples lexicographically and
// "least element" always means lexicographically least tuple.
//
// Purity follows the standard definition: A <= B is pure when
// A ∩ nB = nA for every n >= 1. For finite groups it is enough to check
// n = 1, ..., exponent(B).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace refmon {

using GroupElem = std::uint32_t;
using Tuple     = std::vector<std::uint32_t>;

class AbelianGroup {
 public:
  AbelianGroup();  // the trivial group with no factors
  explicit AbelianGroup(std::vector<std::uint32_t> factors);

  std::span<std::uint32_t const> factors() const noexcept {
    return _factors;
  }
  std::size_t order() const noexcept {
    return _order;
  }
  std::uint32_t exponent() const noexcept;

  GroupElem zero() const noexcept {
    return 0;
  }
  GroupElem encode(Tuple const& t) const;
  Tuple     decode(GroupElem a) const;

  GroupElem add(GroupElem a, GroupElem b) const noexcept;
  GroupElem neg(GroupElem a) const noexcept;
  GroupElem sub(GroupElem a, GroupElem b) const noexcept {
    return add(a, neg(b));
  }
  GroupElem times(std::uint64_t k, GroupElem a) const noexcept;

  std::uint32_t element_order(GroupElem a) const noexcept;

  bool operator==(AbelianGroup const& that) const noexcept {
    return _factors == that._factors;
  }

 private:
  std::vector<std::uint32_t> _factors;
  std::vector<std::uint32_t> _stride;
  std::size_t                _order;
};

std::string to_string(AbelianGroup const& g, GroupElem a);

class Subgroup {
 public:
  // Closure of the generators. Throws InvalidInput on out-of-range codes.
  static Subgroup generated(AbelianGroup const& g, std::span<GroupElem const> gens);
  static Subgroup trivial(AbelianGroup const& g);
  static Subgroup whole(AbelianGroup const& g);

  AbelianGroup const& parent() const noexcept {
    return _parent;
  }
  // ascending
  std::span<GroupElem const> elements() const noexcept {
    return _elements;
  }
  std::span<GroupElem const> generators() const noexcept {
    return _generators;
  }
  std::size_t size() const noexcept {
    return _elements.size();
  }
  bool contains(GroupElem a) const noexcept {
    return a < _member.size() && _member[a];
  }
  bool is_subset_of(Subgroup const& that) const;
  std::uint32_t exponent() const;

  // Same parent and same elements; generators are irrelevant.
  bool operator==(Subgroup const& that) const noexcept {
    return _parent == that._parent && _elements == that._elements;
  }

 private:
  Subgroup(AbelianGroup parent, std::vector<GroupElem> gens);

  AbelianGroup           _parent;
  std::vector<GroupElem> _generators;
  std::vector<GroupElem> _elements;
  std::vector<bool>      _member;
};

// Throw ParentMismatch when the parents differ.
Subgroup subgroup_sum(Subgroup const& a, Subgroup const& b);
Subgroup subgroup_intersection(Subgroup const& a, Subgroup const& b);
Subgroup multiple_subgroup(std::uint64_t n, Subgroup const& a);  // nA

// A ∩ nB = nA for n = 1..exponent(B). Throws PreconditionViolated unless
// A <= B.
bool is_pure(Subgroup const& a, Subgroup const& b);
bool is_pure(Subgroup const& a, AbelianGroup const& b);

// The first n at which purity fails, or 0 when A is pure in B.
std::uint32_t purity_failure(Subgroup const& a, Subgroup const& b);

// C <= B with A ∩ C = {0} and A + C = B. Each quotient basis element of
// B/A is lifted to the lexicographically least element of its coset with
// the same order. Throws NotPure when A is not pure in B.
Subgroup pure_complement(Subgroup const& a, Subgroup const& b);

struct CyclicFactor {
  GroupElem     generator;
  std::uint32_t order;
  bool operator==(CyclicFactor const&) const = default;
};

// Internal direct-sum decomposition into cyclic subgroups with orders
// n1 | n2 | ... (invariant factors, none equal to 1). Empty for {0}.
std::vector<CyclicFactor> cyclic_decomposition(Subgroup const& a);

// Unique decomposition of every element of B as a sum of one element from
// each part.
class DirectSumDecomposition {
 public:
  Subgroup const& whole() const noexcept {
    return _whole;
  }
  std::span<Subgroup const> parts() const noexcept {
    return _parts;
  }
  // The component of b in parts()[i]. b must lie in whole().
  GroupElem project(std::size_t i, GroupElem b) const;

 private:
  friend DirectSumDecomposition internal_projections(Subgroup const&,
                                                     std::vector<Subgroup>);
  DirectSumDecomposition(Subgroup whole, std::vector<Subgroup> parts);

  Subgroup                            _whole;
  std::vector<Subgroup>               _parts;
  std::vector<std::vector<GroupElem>> _components;  // by position in whole
};

// Throws NotDirectSum naming an element of B with zero or several
// decompositions (or a part not contained in B).
DirectSumDecomposition internal_projections(Subgroup const& b, std::vector<Subgroup> parts);

// Every subgroup of B, by closure from {0}; ascending by element list.
std::vector<Subgroup> all_subgroups(Subgroup const& b);

}  // namespace refmon
