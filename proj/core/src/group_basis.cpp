#include "group_basis.hpp"

#include <algorithm>

#include "refmon/error.hpp"

namespace refmon::detail {

  GroupTable::GroupTable(std::size_t n, std::vector<std::uint32_t> add)
      : _n(n), _add(std::move(add)) {}

  Mask closure(GroupTable const& g, Mask base, std::uint32_t extra) {
    if (base[extra]) {
      return base;
    }
    // base + <extra> = { b + j * extra }
    std::vector<std::uint32_t> multiples;
    std::uint32_t              m = extra;
    while (m != 0) {
      multiples.push_back(m);
      m = g.add(m, extra);
    }
    Mask out = base;
    for (std::uint32_t b = 0; b < g.size(); ++b) {
      if (base[b]) {
        for (std::uint32_t j : multiples) {
          out[g.add(b, j)] = 1;
        }
      }
    }
    return out;
  }

  std::uint32_t order_modulo(GroupTable const& g, std::uint32_t a, Mask const& k) {
    std::uint32_t ka = a;
    for (std::uint32_t n = 1;; ++n) {
      if (k[ka]) {
        return n;
      }
      ka = g.add(ka, a);
    }
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>>
  quotient_basis(GroupTable const& g, Mask const& h, Mask const& k) {
    if (h == k) {
      return {};
    }
    // an element of maximal order in H/K generates a direct summand
    std::uint32_t best = 0, best_order = 0;
    for (std::uint32_t a = 0; a < g.size(); ++a) {
      if (h[a]) {
        std::uint32_t const o = order_modulo(g, a, k);
        if (o > best_order) {
          best       = a;
          best_order = o;
        }
      }
    }
    Mask const k2   = closure(g, k, best);
    auto       rest = quotient_basis(g, h, k2);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> out{{best, best_order}};
    for (auto [r, n] : rest) {
      // least element of the coset r + K2 whose order modulo K is still n
      std::vector<std::uint32_t> coset;
      for (std::uint32_t t = 0; t < g.size(); ++t) {
        if (k2[t]) {
          coset.push_back(g.add(r, t));
        }
      }
      std::sort(coset.begin(), coset.end());
      bool found = false;
      for (std::uint32_t c : coset) {
        if (order_modulo(g, c, k) == n) {
          out.emplace_back(c, n);
          found = true;
          break;
        }
      }
      if (!found) {
        raise(ErrorKind::InternalInconsistency,
              "no order-preserving lift of a quotient basis element");
      }
    }
    return out;
  }

}  // namespace refmon::detail
