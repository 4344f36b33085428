#pragma once

// Regular monoids as semilattices of groups, and the deciders built on that
// view: (emb), (pur), the Mayer-Vietoris property, and the refinement
// characterisation through them.
//
// Conventions. E(M) is the set of idempotents, d(x) the idempotent of the
// group containing x, M_e = {x : d(x) = e} and x⁻ the inverse of x in
// M_{d(x)}.
//
//   (emb)  e <= f, x in M_e, x + f = f  implies  x = e
//   (pur)  e <= f, x in M_e, y in M_f, x + f = m y  implies
//          x + f = m (z + f) for some z in M_e
//   MVP    (a) M_e + M_f = M_{e+f}
//          (b) u in M_e, v in M_f, u + f = v + e  implies
//              u = w + e and v = w + f for some w

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "refmon/monoid.hpp"

namespace refmon {

class GroupDecomposition {
 public:
  Monoid const& monoid() const noexcept {
    return _m;
  }
  Elem idempotent_of(Elem x) const noexcept {
    return _d[x];
  }
  Elem inverse_of(Elem x) const noexcept {
    return _inv[x];
  }
  // ascending
  std::span<Elem const> idempotents() const noexcept {
    return _idem;
  }
  // M_e, ascending; throws InvalidInput if e is not idempotent.
  std::span<Elem const> group(Elem e) const;
  // lcm of the orders of the elements of M_e
  std::uint32_t group_exponent(Elem e) const;
  // join of all idempotents
  Elem top() const noexcept {
    return _top;
  }

 private:
  friend GroupDecomposition decompose_regular(Monoid const&);

  Monoid                         _m;
  std::vector<Elem>              _d;
  std::vector<Elem>              _inv;
  std::vector<Elem>              _idem;
  std::vector<std::vector<Elem>> _groups;  // parallel to _idem
  Elem                           _top = 0;
};

// d(x) = x + y for the least y with 2x + y = x. Throws NotRegular naming an
// x for which no such y exists.
GroupDecomposition decompose_regular(Monoid const& m);

template <typename Witness>
struct Verdict {
  bool                   holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept {
    return holds;
  }
};

struct EmbWitness {
  Elem e, f, x;  // x in M_e, x != e, x + f = f
};

struct PurWitness {
  Elem          e, f, x, y;
  std::uint32_t m;  // x + f = m y, and no z in M_e has x + f = m (z + f)
};

struct MvpWitness {
  char clause;  // 'a' or 'b'
  Elem e, f;
  Elem u;  // clause a: the element of M_{e+f} missing from M_e + M_f
  Elem v;  // clause b: (u, v) with u + f = v + e and no common lift
};

Verdict<EmbWitness> check_emb(GroupDecomposition const& d);
Verdict<PurWitness> check_pur(GroupDecomposition const& d);
Verdict<MvpWitness> check_mvp(GroupDecomposition const& d);

std::string describe(EmbWitness const& w);
std::string describe(PurWitness const& w);
std::string describe(MvpWitness const& w);

struct RefinementCharacterization {
  bool brute;            // exhaustive refinement search
  bool distributive;     // E(M) has refinement
  bool mvp;              // both clauses
  bool via_theorem;      // distributive && mvp
};

// Runs both routes; they must agree, otherwise InternalInconsistency.
// Throws NotRegular and SizeLimitExceeded.
RefinementCharacterization characterize_refinement(Monoid const& m,
                                                   std::size_t   max_size = kDefaultMaxSize);

// A formal product of prime powers with exponents in N ∪ {∞}.
class GeneralizedInteger {
 public:
  static GeneralizedInteger all_infinite();
  static GeneralizedInteger from_integer(std::uint64_t n);
  // exponent nullopt means ∞; zero exponents are dropped
  static GeneralizedInteger from_primes(
      std::map<std::uint64_t, std::optional<std::uint32_t>> primes);

  bool divides(std::uint64_t n) const;  // n | this
  bool is_all_infinite() const noexcept {
    return _all_infinite;
  }
  std::map<std::uint64_t, std::optional<std::uint32_t>> const& primes() const noexcept {
    return _primes;
  }
  std::string to_string() const;

 private:
  std::map<std::uint64_t, std::optional<std::uint32_t>> _primes;
  bool                                                   _all_infinite = false;
};

// M[m]: the elements whose order divides m. Throws NotRegular.
Submonoid restrict_orders(Monoid const& m, GeneralizedInteger const& g);

// Every decider relevant to membership in the class of strongly periodic
// conical refinement monoids with (emb) and (pur).
struct RepReport {
  bool                     conical           = false;
  bool                     regular           = false;
  bool                     strongly_periodic = false;
  bool                     refinement        = false;
  bool                     emb               = false;
  bool                     pur               = false;
  std::string              refinement_method;  // "exhaustive" or "structural"
  std::vector<std::string> witnesses;          // one line per failed check

  bool in_rep() const noexcept {
    return conical && regular && strongly_periodic && refinement && emb && pur;
  }
};

// Refinement is decided exhaustively when m.size() <= max_size and through
// distributivity of E(M) plus the MVP otherwise (regular monoids only; the
// idempotent semilattice must itself fit max_size).
RepReport rep_report(Monoid const& m, std::size_t max_size = kDefaultMaxSize);

}  // namespace refmon
