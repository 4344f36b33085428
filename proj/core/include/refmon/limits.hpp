#pragma once

// Retract certificates: homomorphisms eps: M -> B and mu: B -> M with
// mu o eps = id. Then rho = eps o mu is idempotent with mu o rho = mu, and
// M is the direct limit of B -rho-> B -rho-> B -> ... with limiting maps
// mu. With B a finite sum of blocks (Z/n)⊔{0} this certifies that M is a
// direct limit of such sums.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "refmon/abelian_group.hpp"
#include "refmon/monoid.hpp"
#include "refmon/regular.hpp"
#include "refmon/triple.hpp"

namespace refmon {

// ⊕ (Z/n_i)⊔{0}. An element is a coordinate vector with entry 0 for the
// adjoined zero and r + 1 for the residue r; the index is the mixed-radix
// number with the first coordinate most significant, which matches
// direct_sum of the corresponding building blocks.
class BlockSum {
 public:
  BlockSum() = default;  // no blocks: the trivial monoid
  explicit BlockSum(std::vector<std::uint32_t> orders);

  std::span<std::uint32_t const> orders() const noexcept {
    return _orders;
  }
  std::size_t size() const noexcept {
    return _size;
  }
  std::vector<std::uint32_t> decode(Elem x) const;
  Elem                       encode(std::span<std::uint32_t const> coords) const;
  Elem                       add(Elem x, Elem y) const;

  // Throws SizeLimitExceeded above max_elements elements.
  Monoid expand(std::size_t max_elements = kMaxExpandedBlockSum) const;

  static constexpr std::size_t kMaxExpandedBlockSum = 4096;

  bool operator==(BlockSum const&) const = default;

 private:
  std::vector<std::uint32_t> _orders;
  std::size_t                _size = 1;
};

struct RetractCertificate {
  Monoid                  monoid;  // M
  Monoid                  target;  // B
  std::optional<BlockSum> blocks;  // present iff B is a block sum (then B == blocks->expand())
  std::vector<Elem>       eps;     // M -> B
  std::vector<Elem>       mu;      // B -> M
  std::optional<Elem>     unit;    // distinguished order-unit of B, if any
};

// The first violated requirement, or nullopt: ranges, blocks matching the
// target, eps and mu homomorphisms, mu(eps(x)) = x, and the unit being an
// order-unit of B with mu(unit) an order-unit of M.
std::optional<std::string> certificate_violation(RetractCertificate const& c);

// Throws InvalidCertificate with the violation.
void verify(RetractCertificate const& c);

// A ⊔ {0} as a retract of the sum of the blocks of a cyclic decomposition of
// A (a single block of order 1 for trivial A).
RetractCertificate nz_group_retract(AbelianGroup const& a);

// The realised triple as a retract of (G ⊔ {0})^J(Λ), with
// eps(e, x)_p = π_p(x) for p <= e (and 0 otherwise), mu = Σ_p mu_p,
// mu_p(y) = (p, π_p(y)). Throws InvalidTriple (subgroups must cover G),
// NotDistributive, NotInRep (with the failed deciders) and
// DecompositionFailure when G_e is not the direct sum of the H_p below e.
struct FiniteRepData {
  std::vector<Elem>     irreducibles;  // J(Λ), ascending
  std::vector<Subgroup> complements;   // H_p, parallel to irreducibles
};

RetractCertificate finite_rep_retract(StructureTriple const& t,
                                      FiniteRepData*         data     = nullptr,
                                      std::size_t            max_size = kDefaultMaxSize);

// outer o inner: eps = outer.eps o inner.eps, mu = inner.mu o outer.mu.
// Throws PreconditionViolated unless inner.target == outer.monoid.
RetractCertificate compose(RetractCertificate const& inner, RetractCertificate const& outer);

// Componentwise sum of certificates.
RetractCertificate direct_sum(std::span<RetractCertificate const> parts);

// Pre-compose with an isomorphism iso: M' -> M.
RetractCertificate pull_back(RetractCertificate const& c, MonoidHom const& iso);

// The full pipeline: the structure triple of M, the retract onto
// (G ⊔ {0})^J(Λ), then each G ⊔ {0} onto its cyclic blocks.
RetractCertificate blocks_retract(Monoid const& m, std::size_t max_size = kDefaultMaxSize);
RetractCertificate blocks_retract(StructureTriple const& t,
                                  std::size_t            max_size = kDefaultMaxSize);

struct DirectSystem {
  Monoid            term;       // every term is B
  MonoidHom         transition; // rho
  Monoid            limit;      // M
  MonoidHom         limiting;   // mu
  std::vector<Elem> image;      // image of rho, ascending
};

// Checks rho² = rho, mu o rho = mu and that mu maps the image of rho
// bijectively onto M. Throws InvalidCertificate.
DirectSystem limit_system(RetractCertificate const& c);

struct Factorization {
  MonoidHom psi;        // eps o phi : B -> B*
  MonoidHom phi_prime;  // mu : B* -> M
};

// phi: B -> M factors as phi' o psi with ker psi = ker phi. Throws
// PreconditionViolated unless phi.target() == c.monoid, and
// InternalInconsistency if either check fails.
Factorization factor_through(MonoidHom const& phi, RetractCertificate const& c);

// Restricts a block certificate to the blocks where eps(u) is a group
// element, i.e. B' = {x in B : x <= eps(u)}, and marks eps(u) as unit.
// Throws NotOrderUnit with a witness x not below any multiple of u, and
// PreconditionViolated when c.blocks is absent.
RetractCertificate order_unit_normalize(RetractCertificate const& c, Elem u);

// Every block order divides m. Throws PreconditionViolated without blocks.
bool verify_order_restriction(RetractCertificate const& c, GeneralizedInteger const& m);

// The homomorphism B -> M sending the residue 1 of block i to images[i];
// each images[i] must have order dividing the block order (InvalidInput
// otherwise).
MonoidHom hom_from_blocks(BlockSum const& b, Monoid const& m, std::span<Elem const> images);

// A homomorphism B -> M with uniformly random admissible generator images.
MonoidHom random_block_hom(BlockSum const& b, Monoid const& m, std::mt19937_64& rng);

}  // namespace refmon
