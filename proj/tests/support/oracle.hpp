#pragma once

// Naive reference implementations used to cross-check the library. They work
// on raw Cayley tables and tuples and never call library algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<std::uint32_t>>;
using U     = std::uint32_t;

inline U n_of(Table const& t) {
  return static_cast<U>(t.size());
}

inline bool leq(Table const& t, U x, U y) {
  for (U z = 0; z < n_of(t); ++z) {
    if (t[x][z] == y) {
      return true;
    }
  }
  return false;
}

inline U times(Table const& t, U k, U x) {
  U acc = 0;
  for (U i = 0; i < k; ++i) {
    acc = t[acc][x];
  }
  return acc;
}

inline std::optional<U> order(Table const& t, U x) {
  for (U m = 1; m <= n_of(t); ++m) {
    if (times(t, m + 1, x) == x) {
      return m;
    }
  }
  return std::nullopt;
}

inline bool conical(Table const& t) {
  for (U x = 0; x < n_of(t); ++x) {
    for (U y = 0; y < n_of(t); ++y) {
      if (t[x][y] == 0 && (x != 0 || y != 0)) {
        return false;
      }
    }
  }
  return true;
}

inline bool regular(Table const& t) {
  for (U x = 0; x < n_of(t); ++x) {
    if (!leq(t, t[x][x], x)) {
      return false;
    }
  }
  return true;
}

inline std::vector<U> idempotents(Table const& t) {
  std::vector<U> out;
  for (U x = 0; x < n_of(t); ++x) {
    if (t[x][x] == x) {
      out.push_back(x);
    }
  }
  return out;
}

// The idempotent e with e <= x <= e (regular monoids only).
inline U idempotent_of(Table const& t, U x) {
  for (U e : idempotents(t)) {
    if (leq(t, e, x) && leq(t, x, e)) {
      return e;
    }
  }
  return n_of(t);
}

inline std::vector<U> group(Table const& t, U e) {
  std::vector<U> out;
  for (U x = 0; x < n_of(t); ++x) {
    if (leq(t, e, x) && leq(t, x, e)) {
      out.push_back(x);
    }
  }
  return out;
}

// Every x1 + x2 = y1 + y2 refines, by trying all four-entry matrices.
inline bool refinement(Table const& t) {
  U const n = n_of(t);
  std::vector<std::vector<std::pair<U, U>>> split(n);
  for (U a = 0; a < n; ++a) {
    for (U b = 0; b < n; ++b) {
      split[t[a][b]].emplace_back(a, b);
    }
  }
  for (U s = 0; s < n; ++s) {
    for (auto [x1, x2] : split[s]) {
      for (auto [y1, y2] : split[s]) {
        bool found = false;
        for (auto [z11, z12] : split[x1]) {
          for (auto [z21, z22] : split[x2]) {
            if (t[z11][z21] == y1 && t[z12][z22] == y2) {
              found = true;
              break;
            }
          }
          if (found) {
            break;
          }
        }
        if (!found) {
          return false;
        }
      }
    }
  }
  return true;
}

// Meet in a finite semilattice: the greatest common lower bound.
inline U meet(Table const& t, U a, U b) {
  U best = 0;
  for (U c = 0; c < n_of(t); ++c) {
    if (leq(t, c, a) && leq(t, c, b) && leq(t, best, c)) {
      best = c;
    }
  }
  return best;
}

inline bool distributive_lattice(Table const& t) {
  U const n = n_of(t);
  for (U a = 0; a < n; ++a) {
    for (U b = 0; b < n; ++b) {
      for (U c = 0; c < n; ++c) {
        if (meet(t, a, t[b][c]) != t[meet(t, a, b)][meet(t, a, c)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// p != 0 and p is not the join of the elements strictly below it.
inline std::vector<U> join_irreducibles(Table const& t) {
  std::vector<U> out;
  for (U p = 1; p < n_of(t); ++p) {
    U below = 0;
    for (U x = 0; x < n_of(t); ++x) {
      if (x != p && leq(t, x, p)) {
        below = t[below][x];
      }
    }
    if (below != p) {
      out.push_back(p);
    }
  }
  return out;
}

// (emb), (pur) and MVP straight from their definitions.
inline bool emb(Table const& t) {
  for (U e : idempotents(t)) {
    for (U f : idempotents(t)) {
      if (!leq(t, e, f)) {
        continue;
      }
      for (U x : group(t, e)) {
        if (t[x][f] == f && x != e) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool pur(Table const& t) {
  for (U e : idempotents(t)) {
    for (U f : idempotents(t)) {
      if (!leq(t, e, f)) {
        continue;
      }
      auto const ge = group(t, e);
      auto const gf = group(t, f);
      for (U m = 1; m <= n_of(t); ++m) {
        for (U x : ge) {
          for (U y : gf) {
            if (t[x][f] != times(t, m, y)) {
              continue;
            }
            bool ok = false;
            for (U z : ge) {
              if (times(t, m, t[z][f]) == t[x][f]) {
                ok = true;
              }
            }
            if (!ok) {
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

inline bool mvp(Table const& t) {
  for (U e : idempotents(t)) {
    for (U f : idempotents(t)) {
      auto const ge = group(t, e);
      auto const gf = group(t, f);
      std::set<U> sums;
      for (U a : ge) {
        for (U b : gf) {
          sums.insert(t[a][b]);
        }
      }
      auto const gef = group(t, t[e][f]);
      if (sums != std::set<U>(gef.begin(), gef.end())) {
        return false;
      }
      for (U u : ge) {
        for (U v : gf) {
          if (t[u][f] != t[v][e]) {
            continue;
          }
          bool lift = false;
          for (U w = 0; w < n_of(t) && !lift; ++w) {
            lift = t[w][e] == u && t[w][f] == v;
          }
          if (!lift) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

inline bool is_hom(Table const& s, Table const& t, std::vector<U> const& map) {
  if (map.size() != s.size() || map[0] != 0) {
    return false;
  }
  for (U x = 0; x < n_of(s); ++x) {
    for (U y = 0; y < n_of(s); ++y) {
      if (map[s[x][y]] != t[map[x]][map[y]]) {
        return false;
      }
    }
  }
  return true;
}

inline std::vector<U> compose(std::vector<U> const& outer, std::vector<U> const& inner) {
  std::vector<U> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    out[i] = outer[inner[i]];
  }
  return out;
}

// Canonical partition: each index mapped to the least index with the same
// value.
inline std::vector<U> kernel(std::vector<U> const& map) {
  std::map<U, U> first;
  std::vector<U> out(map.size());
  for (U i = 0; i < map.size(); ++i) {
    out[i] = first.emplace(map[i], i).first->second;
  }
  return out;
}

// Groups as tuples over cyclic moduli.
struct Group {
  std::vector<U> mod;

  using Elt = std::vector<U>;

  Elt zero() const {
    return Elt(mod.size(), 0);
  }
  Elt add(Elt const& a, Elt const& b) const {
    Elt c(mod.size());
    for (std::size_t i = 0; i < mod.size(); ++i) {
      c[i] = (a[i] + b[i]) % mod[i];
    }
    return c;
  }
  Elt times(U k, Elt const& a) const {
    Elt c = zero();
    for (U i = 0; i < k; ++i) {
      c = add(c, a);
    }
    return c;
  }
  std::vector<Elt> elements() const {
    std::vector<Elt> out{zero()};
    for (std::size_t i = mod.size(); i-- > 0;) {
      std::vector<Elt> next;
      for (auto const& e : out) {
        for (U r = 0; r < mod[i]; ++r) {
          auto f = e;
          f[i]   = r;
          next.push_back(f);
        }
      }
      out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  U exponent() const {
    U e = 1;
    for (U d : mod) {
      e = std::lcm(e, d);
    }
    return e;
  }
  // All Z-combinations of the generators.
  std::set<Elt> span(std::vector<Elt> const& gens) const {
    std::set<Elt> out{zero()};
    bool          grew = true;
    while (grew) {
      grew = false;
      for (auto const& x : std::vector<Elt>(out.begin(), out.end())) {
        for (auto const& g : gens) {
          grew |= out.insert(add(x, g)).second;
        }
      }
    }
    return out;
  }
  std::set<Elt> multiple(U n, std::set<Elt> const& a) const {
    std::set<Elt> out;
    for (auto const& x : a) {
      out.insert(times(n, x));
    }
    return out;
  }
  bool pure(std::set<Elt> const& a, std::set<Elt> const& b) const {
    for (U n = 1; n <= exponent(); ++n) {
      std::set<Elt> lhs;
      for (auto const& x : multiple(n, b)) {
        if (a.count(x)) {
          lhs.insert(x);
        }
      }
      if (lhs != multiple(n, a)) {
        return false;
      }
    }
    return true;
  }
  // Every subgroup, as spans of at most two generators (enough for rank <= 2).
  std::set<std::set<Elt>> subgroups() const {
    std::set<std::set<Elt>> out;
    auto const              els = elements();
    for (auto const& a : els) {
      for (auto const& b : els) {
        out.insert(span({a, b}));
      }
    }
    return out;
  }
};

}  // namespace oracle
