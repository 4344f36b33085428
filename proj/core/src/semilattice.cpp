#include "refmon/semilattice.hpp"

#include <algorithm>
#include <string>

#include "refmon/error.hpp"

namespace refmon {

Semilattice::Semilattice(Monoid m) : _m(std::move(m)), _top(0) {
  std::size_t const n = _m.size();
  for (Elem x = 0; x < n; ++x) {
    if (_m.add(x, x) != x) {
      raise(ErrorKind::NotSemilattice,
            "element " + std::to_string(x) + " satisfies x + x != x");
    }
    _top = _m.add(_top, x);
  }
  _meet.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      Elem m = 0;
      for (Elem c = 0; c < n; ++c) {
        if (leq(c, a) && leq(c, b)) {
          m = _m.add(m, c);
        }
      }
      _meet[a * n + b] = m;
      _meet[b * n + a] = m;
    }
  }
}

Semilattice Semilattice::from_subset(Monoid const& m, std::span<Elem const> elements) {
  std::vector<Elem> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty() || sorted[0] != 0) {
    raise(ErrorKind::InvalidInput, "subset must contain 0");
  }
  for (Elem x : sorted) {
    if (x >= m.size()) {
      raise(ErrorKind::InvalidInput, "element " + std::to_string(x) + " out of range");
    }
    if (!is_idempotent(m, x)) {
      raise(ErrorKind::InvalidInput, "element " + std::to_string(x) + " is not idempotent");
    }
  }
  std::size_t const k = sorted.size();
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Elem const s  = m.add(sorted[i], sorted[j]);
      auto       it = std::lower_bound(sorted.begin(), sorted.end(), s);
      if (it == sorted.end() || *it != s) {
        raise(ErrorKind::InvalidInput,
              "subset not closed: " + std::to_string(sorted[i]) + " + "
                  + std::to_string(sorted[j]) + " = " + std::to_string(s));
      }
      table[i * k + j] = static_cast<Elem>(it - sorted.begin());
    }
  }
  return Semilattice(Monoid::assume_valid(k, std::move(table)));
}

namespace semilattices {

  Semilattice chain(std::uint32_t length) {
    std::size_t const n = length + 1;
    std::vector<Elem> t(n * n);
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        t[i * n + j] = std::max(i, j);
      }
    }
    return Semilattice(Monoid::assume_valid(n, std::move(t)));
  }

  Semilattice boolean(std::uint32_t k) {
    if (k > 6) {
      raise(ErrorKind::InvalidInput, "boolean lattices are limited to 6 atoms");
    }
    std::size_t const n = std::size_t(1) << k;
    std::vector<Elem> t(n * n);
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        t[i * n + j] = i | j;
      }
    }
    return Semilattice(Monoid::assume_valid(n, std::move(t)));
  }

  Semilattice diamond() {
    return Semilattice(Monoid::from_rows({{0, 1, 2, 3, 4},
                                          {1, 1, 4, 4, 4},
                                          {2, 4, 2, 4, 4},
                                          {3, 4, 4, 3, 4},
                                          {4, 4, 4, 4, 4}}));
  }

  Semilattice pentagon() {
    // 0, a = 1, c = 2, b = 3, 1 = 4
    return Semilattice(Monoid::from_rows({{0, 1, 2, 3, 4},
                                          {1, 1, 2, 4, 4},
                                          {2, 2, 2, 4, 4},
                                          {3, 4, 4, 3, 4},
                                          {4, 4, 4, 4, 4}}));
  }

}  // namespace semilattices

bool is_distributive(Semilattice const& s, std::size_t max_size) {
  return has_refinement(s.monoid(), max_size);
}

////////////////////////////////////////////////////////////////////////////
// Join-irreducibles
////////////////////////////////////////////////////////////////////////////

bool JoinIrreducibleData::is_irreducible(Elem p) const {
  return std::any_of(_entries.begin(), _entries.end(), [p](JoinIrreducible const& j) {
    return j.element == p;
  });
}

JoinIrreducible const& JoinIrreducibleData::at(Elem p) const {
  for (auto const& j : _entries) {
    if (j.element == p) {
      return j;
    }
  }
  raise(ErrorKind::InvalidInput, "element " + std::to_string(p) + " is not join-irreducible");
}

Elem JoinIrreducibleData::dagger(Elem p) const {
  auto const& j = at(p);
  if (!j.dagger) {
    raise(ErrorKind::NotDistributive,
          "the largest element not above " + std::to_string(p)
              + " needs a distributive semilattice");
  }
  return *j.dagger;
}

std::vector<Elem> JoinIrreducibleData::below(Semilattice const& s, Elem a) const {
  std::vector<Elem> out;
  for (auto const& j : _entries) {
    if (s.leq(j.element, a)) {
      out.push_back(j.element);
    }
  }
  return out;
}

JoinIrreducibleData join_irreducibles(Semilattice const& s, std::size_t max_size) {
  JoinIrreducibleData out;
  out._distributive   = is_distributive(s, max_size);
  std::size_t const n = s.size();
  for (Elem p = 1; p < n; ++p) {
    std::vector<Elem> covers;
    for (Elem c = 0; c < n; ++c) {
      if (!s.less(c, p)) {
        continue;
      }
      bool maximal = true;
      for (Elem d = 0; d < n && maximal; ++d) {
        maximal = !(s.less(c, d) && s.less(d, p));
      }
      if (maximal) {
        covers.push_back(c);
      }
    }
    if (covers.size() != 1) {
      continue;
    }
    JoinIrreducible j{p, covers[0], std::nullopt};
    if (out._distributive) {
      Elem u = 0;
      for (Elem x = 0; x < n; ++x) {
        if (!s.leq(p, x)) {
          u = s.join(u, x);
        }
      }
      if (s.leq(p, u)) {
        raise(ErrorKind::InternalInconsistency,
              "no largest element avoiding " + std::to_string(p)
                  + " in a distributive semilattice");
      }
      j.dagger = u;
    }
    out._entries.push_back(j);
  }
  return out;
}

std::vector<Elem> sublattice_generated(Semilattice const& s, std::span<Elem const> seeds) {
  std::vector<char> in(s.size(), 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (Elem x : seeds) {
    if (x >= s.size()) {
      raise(ErrorKind::InvalidInput, "seed " + std::to_string(x) + " out of range");
    }
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Elem y : {s.join(members[i], members[j]), s.meet(members[i], members[j])}) {
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

////////////////////////////////////////////////////////////////////////////
// Ideals
////////////////////////////////////////////////////////////////////////////

namespace {

  std::uint64_t bit(Elem x) {
    return std::uint64_t(1) << x;
  }

  // Smallest ideal containing the given set: alternately close under joins
  // and take the down-set until nothing changes.
  std::uint64_t ideal_closure(Semilattice const& s, std::uint64_t set) {
    std::size_t const n = s.size();
    set |= bit(0);
    std::uint64_t prev = 0;
    while (prev != set) {
      prev = set;
      for (Elem x = 0; x < n; ++x) {
        if (!(set & bit(x))) {
          continue;
        }
        for (Elem y = 0; y < n; ++y) {
          if ((set & bit(y))) {
            set |= bit(s.join(x, y));
          } else if (s.leq(y, x)) {
            set |= bit(y);
          }
        }
      }
    }
    return set;
  }

}  // namespace

IdealLattice ideals(Semilattice const& s) {
  std::size_t const n = s.size();
  if (n > 64) {
    raise(ErrorKind::SizeLimitExceeded, "ideal lattices need at most 64 elements");
  }
  std::vector<std::uint64_t> found{ideal_closure(s, 0)};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem x = 0; x < n; ++x) {
      if (found[i] & bit(x)) {
        continue;
      }
      std::uint64_t const id = ideal_closure(s, found[i] | bit(x));
      if (std::find(found.begin(), found.end(), id) == found.end()) {
        found.push_back(id);
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::size_t const k = found.size();
  auto index = [&](std::uint64_t id) {
    return static_cast<Elem>(std::lower_bound(found.begin(), found.end(), id) - found.begin());
  };
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      table[i * k + j] = index(ideal_closure(s, found[i] | found[j]));
    }
  }
  std::vector<Elem> embedding(n);
  for (Elem a = 0; a < n; ++a) {
    embedding[a] = index(ideal_closure(s, bit(a)));
  }
  return IdealLattice{Semilattice(Monoid::from_table(k, std::move(table))),
                      std::move(found),
                      std::move(embedding)};
}

}  // namespace refmon
