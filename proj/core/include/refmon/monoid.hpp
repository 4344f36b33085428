#pragma once

// Finite commutative monoids stored as Cayley tables.
//
// Elements are the indices 0, ..., size() - 1 and the identity is always the
// index 0. Tables are shared between copies, so Monoid values are cheap to
// pass around; they are never mutated after construction.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace refmon {

using Elem = std::uint32_t;

// Exhaustive searches (refinement, isomorphism) refuse larger inputs unless
// the caller raises the limit explicitly.
inline constexpr std::size_t kDefaultMaxSize = 64;

class AbelianGroup;

class Monoid {
 public:
  // Validating constructors. Throw refmon::Error with kind InvalidInput,
  // NoIdentityAtZero, NotCommutative or NotAssociative naming the first
  // violating element(s).
  static Monoid from_rows(std::vector<std::vector<Elem>> const& rows);
  static Monoid from_table(std::size_t size, std::vector<Elem> table);

  // No validation at all; for tables produced by constructions whose axioms
  // are guaranteed (direct sums, realised triples, ...).
  static Monoid assume_valid(std::size_t size, std::vector<Elem> table);

  Monoid();  // the trivial monoid

  std::size_t size() const noexcept {
    return _size;
  }

  Elem add(Elem x, Elem y) const noexcept {
    return (*_table)[static_cast<std::size_t>(x) * _size + y];
  }

  // k * x, with 0 * x = 0.
  Elem multiple(std::uint64_t k, Elem x) const noexcept;

  std::span<Elem const> table() const noexcept {
    return *_table;
  }

  std::vector<std::vector<Elem>> rows() const;

  bool operator==(Monoid const& that) const noexcept;

 private:
  Monoid(std::size_t size, std::shared_ptr<std::vector<Elem> const> table);

  std::size_t                             _size;
  std::shared_ptr<std::vector<Elem> const> _table;
};

////////////////////////////////////////////////////////////////////////////
// Constructions
////////////////////////////////////////////////////////////////////////////

// (Z/nZ) with a new zero adjoined. Index 0 is the new zero, index i + 1 is
// the residue i.
Monoid building_block(std::uint32_t n);

// G with a new zero adjoined. Index 0 is the new zero, index c + 1 is the
// group element with code c (see AbelianGroup).
Monoid nz_of_group(AbelianGroup const& group);

// Componentwise sum on the product set; (i, j) has index i * b.size() + j.
Monoid direct_sum(Monoid const& a, Monoid const& b);
Monoid direct_sum(std::span<Monoid const> summands);

////////////////////////////////////////////////////////////////////////////
// Elementwise properties
////////////////////////////////////////////////////////////////////////////

// The algebraic pre-order: x <= y iff x + z = y for some z.
bool leq(Monoid const& m, Elem x, Elem y);

// Least k >= 1 with (k + 1)x = x, or nullopt when x is not strongly periodic.
std::optional<std::uint32_t> element_order(Monoid const& m, Elem x);

bool is_idempotent(Monoid const& m, Elem x) noexcept;
std::vector<Elem> idempotents(Monoid const& m);

struct PropertyReport {
  bool              conical           = false;
  bool              regular           = false;
  bool              strongly_periodic = false;
  bool              is_semilattice    = false;
  std::vector<Elem> idempotents;
};

PropertyReport property_report(Monoid const& m);

// An element u such that every x satisfies x <= k u for some k >= 1.
bool is_order_unit(Monoid const& m, Elem u);

////////////////////////////////////////////////////////////////////////////
// Riesz refinement, by exhaustive search
////////////////////////////////////////////////////////////////////////////

// z11 + z12 = x1, z21 + z22 = x2, z11 + z21 = y1, z12 + z22 = y2.
struct RefinementMatrix {
  Elem z11, z12, z21, z22;
  bool operator==(RefinementMatrix const&) const = default;
};

// Lexicographically least refinement of x1 + x2 = y1 + y2, or nullopt.
// Throws PreconditionViolated if the sums differ and SizeLimitExceeded if
// m.size() > max_size.
std::optional<RefinementMatrix> find_refinement(Monoid const& m,
                                                Elem         x1,
                                                Elem         x2,
                                                Elem         y1,
                                                Elem         y2,
                                                std::size_t max_size
                                                = kDefaultMaxSize);

// A quadruple with x1 + x2 = y1 + y2 that admits no refinement.
struct RefinementFailure {
  Elem x1, x2, y1, y2;
};

std::optional<RefinementFailure>
refinement_counterexample(Monoid const& m, std::size_t max_size = kDefaultMaxSize);

bool has_refinement(Monoid const& m, std::size_t max_size = kDefaultMaxSize);

////////////////////////////////////////////////////////////////////////////
// Homomorphisms and congruences
////////////////////////////////////////////////////////////////////////////

class MonoidHom {
 public:
  // Throws NotHomomorphism naming a witness pair (or the image of 0), and
  // InvalidInput for out-of-range images.
  static MonoidHom validate(Monoid source, Monoid target, std::vector<Elem> map);
  static MonoidHom assume_valid(Monoid source, Monoid target, std::vector<Elem> map);
  static MonoidHom identity(Monoid const& m);

  Elem operator()(Elem x) const noexcept {
    return _map[x];
  }

  Monoid const& source() const noexcept {
    return _source;
  }
  Monoid const& target() const noexcept {
    return _target;
  }
  std::span<Elem const> map() const noexcept {
    return _map;
  }

  bool is_bijective() const;

 private:
  MonoidHom(Monoid source, Monoid target, std::vector<Elem> map);

  Monoid            _source;
  Monoid            _target;
  std::vector<Elem> _map;
};

// A pair (x, y) with h(x + y) != h(x) + h(y); x == y == 0 flags h(0) != 0.
struct HomViolation {
  Elem x, y;
};

std::optional<HomViolation> hom_violation(Monoid const&         source,
                                          Monoid const&         target,
                                          std::span<Elem const> map);

// outer o inner. Throws PreconditionViolated unless inner.target() equals
// outer.source().
MonoidHom compose(MonoidHom const& outer, MonoidHom const& inner);

// A partition of {0, ..., n - 1}, each element mapped to the least member of
// its class.
class Congruence {
 public:
  explicit Congruence(std::vector<Elem> representative);

  static Congruence discrete(std::size_t n);

  Elem representative(Elem x) const noexcept {
    return _rep[x];
  }
  std::size_t size() const noexcept {
    return _rep.size();
  }
  bool related(Elem x, Elem y) const noexcept {
    return _rep[x] == _rep[y];
  }
  std::vector<std::vector<Elem>> classes() const;
  std::size_t number_of_classes() const;

  // True iff x ~ y implies x + z ~ y + z for all z.
  bool is_compatible_with(Monoid const& m) const;

  bool operator==(Congruence const&) const = default;

 private:
  std::vector<Elem> _rep;
};

Congruence kernel(MonoidHom const& h);

// A bijective homomorphism m1 -> m2 found by backtracking over generator
// images, or nullopt.
std::optional<MonoidHom> find_isomorphism(Monoid const& m1,
                                          Monoid const& m2,
                                          std::size_t   max_size = kDefaultMaxSize);

// Submonoid on a closed subset containing 0; elements keep their relative
// order, so 0 stays at index 0.
struct Submonoid {
  Monoid            monoid;
  std::vector<Elem> embedding;  // submonoid index -> index in the parent

  std::optional<Elem> index_of(Elem parent_element) const;
};

// Throws InvalidInput if the subset is not closed or misses 0.
Submonoid submonoid_on(Monoid const& m, std::vector<Elem> elements);

std::string describe(RefinementMatrix const& z);

}  // namespace refmon
