#pragma once

// Basis computations on an abstract finite abelian group given by its
// addition table on {0, ..., n - 1}, with 0 the identity. Used both for
// tuple groups and for the maximal subgroups of a regular monoid.

#include <cstdint>
#include <utility>
#include <vector>

namespace refmon::detail {

  class GroupTable {
   public:
    GroupTable(std::size_t n, std::vector<std::uint32_t> add);

    std::size_t size() const noexcept {
      return _n;
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
      return _add[a * _n + b];
    }

   private:
    std::size_t                _n;
    std::vector<std::uint32_t> _add;
  };

  using Mask = std::vector<char>;

  // base + <extra>; base must already be a subgroup.
  Mask closure(GroupTable const& g, Mask base, std::uint32_t extra);

  // Least k >= 1 with k * a in K.
  std::uint32_t order_modulo(GroupTable const& g, std::uint32_t a, Mask const& k);

  // Elements h1, h2, ... of H whose cosets form a basis of H/K, paired with
  // their orders modulo K. Orders come out non-increasing, each dividing the
  // previous one. Every choice is the least index available.
  std::vector<std::pair<std::uint32_t, std::uint32_t>>
  quotient_basis(GroupTable const& g, Mask const& h, Mask const& k);

}  // namespace refmon::detail
