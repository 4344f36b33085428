#pragma once

// Finite submonoid approximation. Given a monoid presented by a structure
// triple and a finite set X of its elements, build a submonoid N that
// contains X and again lies in the class of strongly periodic conical
// refinement monoids with (emb) and (pur):
//
//   1. restrict to the elements whose order divides m = lcm(orders of X)
//   2. D = sublattice of Λ generated by the e_x and 0
//   3. for each join-irreducible P of D with lower cover P_* in D,
//      G_P = G_{P_*} ⊕ H_P, and H'_P = <π_P(g_x) : P <= e_x>
//   4. ψ(P) = u_P ∨ v_P ∨ w_P with u_P = P, v_P the least v <= P with
//      H'_P <= G_v, w_P the least-index element below P but not below P†
//   5. φ(A) = ∨ ψ(P) over P <= A, G'_A = ⊕ H'_P over P <= A, and
//      N = ⊔_A {φ(A)} × G'_A
//
// All four properties of φ (join-embedding, distributive image,
// φ(A) <= A, φ(e_x) = e_x) and |N| <= (m + 1)^(2^n n), n = |X|, are
// checked before a certificate is returned.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "refmon/abelian_group.hpp"
#include "refmon/triple.hpp"

namespace refmon {

struct ApproxPiece {
  Elem     p;       // join-irreducible of D
  Elem     lower;   // its lower cover in D
  Elem     dagger;  // largest element of D not above p
  Subgroup h;       // complement of G_lower in G_p (order-restricted)
  Subgroup h_prime;
  Elem     u, v, w, psi;
};

struct ApproximationCertificate {
  StructureTriple                          triple;
  std::vector<std::pair<Elem, GroupElem>>  x;        // (e_x, g_x)
  std::uint64_t                            m = 1;    // lcm of the orders in X
  std::vector<Elem>                        d;        // ascending
  std::vector<ApproxPiece>                 pieces;   // ascending by p
  std::vector<Elem>                        phi;      // parallel to d
  std::uint64_t                            bound = 0;  // saturates at 2^64 - 1
  std::size_t                              n_size = 0;
};

// Throws NotInRep when the triple's monoid fails a decider, InvalidInput
// for elements outside the monoid, and ClaimFailure if any step of the
// construction does not check out.
ApproximationCertificate approximate(StructureTriple const&                          t,
                                     std::vector<std::pair<Elem, GroupElem>> const& x,
                                     std::size_t max_size = kDefaultMaxSize);

// N as a triple over φ(D) (ascending by Λ index) with subgroups G'_A, and
// as a realised monoid.
StructureTriple approximation_triple(ApproximationCertificate const& c);

struct ApproxReport {
  std::vector<std::string> failures;
  bool ok() const noexcept {
    return failures.empty();
  }
};

// Recomputes everything derivable from the certificate's data (D, lower
// covers, daggers, ψ, φ, G'_A, N) and checks every claim.
ApproxReport verify_certificate(ApproximationCertificate const& c,
                                std::size_t max_size = kDefaultMaxSize);

// (m + 1)^(2^n n), saturating.
std::uint64_t approximation_bound(std::uint64_t m, std::uint64_t n);

}  // namespace refmon
