#include "refmon/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "refmon/abelian_group.hpp"
#include "refmon/error.hpp"

namespace refmon {

namespace {

  std::string triple_str(Elem x, Elem y) {
    std::ostringstream os;
    os << "(" << x << ", " << y << ")";
    return os.str();
  }

}  // namespace

////////////////////////////////////////////////////////////////////////////
// Monoid
////////////////////////////////////////////////////////////////////////////

Monoid::Monoid(std::size_t size, std::shared_ptr<std::vector<Elem> const> table)
    : _size(size), _table(std::move(table)) {}

Monoid::Monoid() : Monoid(1, std::make_shared<std::vector<Elem> const>(1, 0)) {}

Monoid Monoid::assume_valid(std::size_t size, std::vector<Elem> table) {
  return Monoid(size, std::make_shared<std::vector<Elem> const>(std::move(table)));
}

Monoid Monoid::from_rows(std::vector<std::vector<Elem>> const& rows) {
  std::size_t const n = rows.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (rows[x].size() != n) {
      raise(ErrorKind::InvalidInput,
            "table is not square: row " + std::to_string(x) + " has "
                + std::to_string(rows[x].size()) + " entries, expected "
                + std::to_string(n));
    }
    flat.insert(flat.end(), rows[x].begin(), rows[x].end());
  }
  return from_table(n, std::move(flat));
}

Monoid Monoid::from_table(std::size_t n, std::vector<Elem> t) {
  if (n == 0) {
    raise(ErrorKind::InvalidInput, "a monoid has at least one element");
  }
  if (t.size() != n * n) {
    raise(ErrorKind::InvalidInput,
          "table has " + std::to_string(t.size()) + " entries, expected "
              + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= n) {
      raise(ErrorKind::InvalidInput,
            "entry " + triple_str(i / n, i % n) + " = " + std::to_string(t[i])
                + " is out of range");
    }
  }
  auto at = [&](Elem x, Elem y) { return t[static_cast<std::size_t>(x) * n + y]; };
  for (Elem x = 0; x < n; ++x) {
    if (at(0, x) != x || at(x, 0) != x) {
      raise(ErrorKind::NoIdentityAtZero,
            "0 + " + std::to_string(x) + " != " + std::to_string(x));
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x + 1; y < n; ++y) {
      if (at(x, y) != at(y, x)) {
        raise(ErrorKind::NotCommutative, "first violating pair " + triple_str(x, y));
      }
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      Elem const xy = at(x, y);
      for (Elem z = 0; z < n; ++z) {
        if (at(xy, z) != at(x, at(y, z))) {
          raise(ErrorKind::NotAssociative,
                "first violating triple (" + std::to_string(x) + ", "
                    + std::to_string(y) + ", " + std::to_string(z) + ")");
        }
      }
    }
  }
  return assume_valid(n, std::move(t));
}

Elem Monoid::multiple(std::uint64_t k, Elem x) const noexcept {
  // double-and-add
  Elem result = 0;
  Elem power  = x;
  while (k > 0) {
    if (k & 1) {
      result = add(result, power);
    }
    power = add(power, power);
    k >>= 1;
  }
  return result;
}

std::vector<std::vector<Elem>> Monoid::rows() const {
  std::vector<std::vector<Elem>> out(_size);
  for (std::size_t x = 0; x < _size; ++x) {
    out[x].assign(_table->begin() + x * _size, _table->begin() + (x + 1) * _size);
  }
  return out;
}

bool Monoid::operator==(Monoid const& that) const noexcept {
  return _size == that._size && (_table == that._table || *_table == *that._table);
}

////////////////////////////////////////////////////////////////////////////
// Constructions
////////////////////////////////////////////////////////////////////////////

Monoid building_block(std::uint32_t n) {
  if (n == 0) {
    raise(ErrorKind::InvalidInput, "building block order must be positive");
  }
  std::size_t const size = n + 1;
  std::vector<Elem> t(size * size);
  for (Elem x = 0; x < size; ++x) {
    for (Elem y = 0; y < size; ++y) {
      Elem v;
      if (x == 0) {
        v = y;
      } else if (y == 0) {
        v = x;
      } else {
        v = ((x - 1) + (y - 1)) % n + 1;
      }
      t[x * size + y] = v;
    }
  }
  return Monoid::assume_valid(size, std::move(t));
}

Monoid nz_of_group(AbelianGroup const& g) {
  std::size_t const size = g.order() + 1;
  std::vector<Elem> t(size * size);
  for (Elem x = 0; x < size; ++x) {
    for (Elem y = 0; y < size; ++y) {
      Elem v;
      if (x == 0) {
        v = y;
      } else if (y == 0) {
        v = x;
      } else {
        v = g.add(x - 1, y - 1) + 1;
      }
      t[x * size + y] = v;
    }
  }
  return Monoid::assume_valid(size, std::move(t));
}

Monoid direct_sum(Monoid const& a, Monoid const& b) {
  std::size_t const na = a.size(), nb = b.size(), n = na * nb;
  std::vector<Elem> t(n * n);
  for (Elem x = 0; x < n; ++x) {
    Elem const x1 = x / nb, x2 = x % nb;
    for (Elem y = 0; y < n; ++y) {
      Elem const y1 = y / nb, y2 = y % nb;
      t[static_cast<std::size_t>(x) * n + y] = a.add(x1, y1) * nb + b.add(x2, y2);
    }
  }
  return Monoid::assume_valid(n, std::move(t));
}

Monoid direct_sum(std::span<Monoid const> summands) {
  Monoid result;
  for (auto const& s : summands) {
    result = direct_sum(result, s);
  }
  return result;
}

////////////////////////////////////////////////////////////////////////////
// Elementwise properties
////////////////////////////////////////////////////////////////////////////

bool leq(Monoid const& m, Elem x, Elem y) {
  for (Elem z = 0; z < m.size(); ++z) {
    if (m.add(x, z) == y) {
      return true;
    }
  }
  return false;
}

std::optional<std::uint32_t> element_order(Monoid const& m, Elem x) {
  // The sequence x, 2x, 3x, ... is eventually periodic; x lies on the cycle
  // iff it recurs within size() further steps.
  Elem kx = x;
  for (std::uint32_t k = 1; k <= m.size(); ++k) {
    kx = m.add(kx, x);
    if (kx == x) {
      return k;
    }
  }
  return std::nullopt;
}

bool is_idempotent(Monoid const& m, Elem x) noexcept {
  return m.add(x, x) == x;
}

std::vector<Elem> idempotents(Monoid const& m) {
  std::vector<Elem> out;
  for (Elem x = 0; x < m.size(); ++x) {
    if (is_idempotent(m, x)) {
      out.push_back(x);
    }
  }
  return out;
}

PropertyReport property_report(Monoid const& m) {
  PropertyReport r;
  r.conical = true;
  for (Elem x = 1; x < m.size() && r.conical; ++x) {
    for (Elem y = 0; y < m.size(); ++y) {
      if (m.add(x, y) == 0) {
        r.conical = false;
        break;
      }
    }
  }
  r.regular = true;
  for (Elem x = 0; x < m.size() && r.regular; ++x) {
    r.regular = leq(m, m.add(x, x), x);
  }
  r.strongly_periodic = true;
  for (Elem x = 0; x < m.size() && r.strongly_periodic; ++x) {
    r.strongly_periodic = element_order(m, x).has_value();
  }
  r.idempotents    = idempotents(m);
  r.is_semilattice = r.idempotents.size() == m.size();
  return r;
}

bool is_order_unit(Monoid const& m, Elem u) {
  std::vector<char> multiple_seen(m.size(), 0);
  std::vector<Elem> multiples;
  for (Elem ku = u; !multiple_seen[ku]; ku = m.add(ku, u)) {
    multiple_seen[ku] = 1;
    multiples.push_back(ku);
  }
  std::vector<char> below(m.size(), 0);
  for (Elem ku : multiples) {
    for (Elem z = 0; z < m.size(); ++z) {
      // x + z = ku for some z means x <= ku; mark every such x.
      for (Elem x = 0; x < m.size(); ++x) {
        if (!below[x] && m.add(x, z) == ku) {
          below[x] = 1;
        }
      }
    }
  }
  return std::all_of(below.begin(), below.end(), [](char c) { return c != 0; });
}

////////////////////////////////////////////////////////////////////////////
// Homomorphisms
////////////////////////////////////////////////////////////////////////////

MonoidHom::MonoidHom(Monoid source, Monoid target, std::vector<Elem> map)
    : _source(std::move(source)), _target(std::move(target)), _map(std::move(map)) {}

std::optional<HomViolation> hom_violation(Monoid const&         source,
                                          Monoid const&         target,
                                          std::span<Elem const> map) {
  if (map[0] != 0) {
    return HomViolation{0, 0};
  }
  for (Elem x = 0; x < source.size(); ++x) {
    for (Elem y = x; y < source.size(); ++y) {
      if (map[source.add(x, y)] != target.add(map[x], map[y])) {
        return HomViolation{x, y};
      }
    }
  }
  return std::nullopt;
}

MonoidHom MonoidHom::validate(Monoid source, Monoid target, std::vector<Elem> map) {
  if (map.size() != source.size()) {
    raise(ErrorKind::InvalidInput,
          "map has " + std::to_string(map.size()) + " entries, source has "
              + std::to_string(source.size()) + " elements");
  }
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= target.size()) {
      raise(ErrorKind::InvalidInput,
            "image of " + std::to_string(i) + " is out of range");
    }
  }
  if (auto v = hom_violation(source, target, map)) {
    if (v->x == 0 && v->y == 0) {
      raise(ErrorKind::NotHomomorphism, "0 is not mapped to 0");
    }
    raise(ErrorKind::NotHomomorphism,
          "h(x + y) != h(x) + h(y) for (x, y) = " + triple_str(v->x, v->y));
  }
  return MonoidHom(std::move(source), std::move(target), std::move(map));
}

MonoidHom MonoidHom::assume_valid(Monoid source, Monoid target, std::vector<Elem> map) {
  return MonoidHom(std::move(source), std::move(target), std::move(map));
}

MonoidHom MonoidHom::identity(Monoid const& m) {
  std::vector<Elem> map(m.size());
  std::iota(map.begin(), map.end(), 0);
  return MonoidHom(m, m, std::move(map));
}

bool MonoidHom::is_bijective() const {
  if (_source.size() != _target.size()) {
    return false;
  }
  std::vector<char> hit(_target.size(), 0);
  for (Elem y : _map) {
    if (hit[y]) {
      return false;
    }
    hit[y] = 1;
  }
  return true;
}

MonoidHom compose(MonoidHom const& outer, MonoidHom const& inner) {
  if (!(inner.target() == outer.source())) {
    raise(ErrorKind::PreconditionViolated,
          "cannot compose: target of the inner map is not the source of the outer map");
  }
  std::vector<Elem> map(inner.source().size());
  for (Elem x = 0; x < map.size(); ++x) {
    map[x] = outer(inner(x));
  }
  return MonoidHom::assume_valid(inner.source(), outer.target(), std::move(map));
}

////////////////////////////////////////////////////////////////////////////
// Congruences
////////////////////////////////////////////////////////////////////////////

Congruence::Congruence(std::vector<Elem> representative)
    : _rep(std::move(representative)) {
  for (Elem x = 0; x < _rep.size(); ++x) {
    if (_rep[x] > x || _rep[_rep[x]] != _rep[x]) {
      raise(ErrorKind::InvalidInput, "congruence representatives are not canonical");
    }
  }
}

Congruence Congruence::discrete(std::size_t n) {
  std::vector<Elem> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  return Congruence(std::move(rep));
}

std::vector<std::vector<Elem>> Congruence::classes() const {
  std::vector<std::vector<Elem>> out;
  std::vector<std::size_t>       slot(_rep.size(), 0);
  for (Elem x = 0; x < _rep.size(); ++x) {
    if (_rep[x] == x) {
      slot[x] = out.size();
      out.emplace_back();
    }
    out[slot[_rep[x]]].push_back(x);
  }
  return out;
}

std::size_t Congruence::number_of_classes() const {
  std::size_t k = 0;
  for (Elem x = 0; x < _rep.size(); ++x) {
    k += (_rep[x] == x);
  }
  return k;
}

bool Congruence::is_compatible_with(Monoid const& m) const {
  for (Elem x = 0; x < m.size(); ++x) {
    Elem const r = _rep[x];
    if (r == x) {
      continue;
    }
    for (Elem z = 0; z < m.size(); ++z) {
      if (_rep[m.add(x, z)] != _rep[m.add(r, z)]) {
        return false;
      }
    }
  }
  return true;
}

Congruence kernel(MonoidHom const& h) {
  std::vector<Elem> first_with_image(h.target().size(), static_cast<Elem>(-1));
  std::vector<Elem> rep(h.source().size());
  for (Elem x = 0; x < rep.size(); ++x) {
    Elem& f = first_with_image[h(x)];
    if (f == static_cast<Elem>(-1)) {
      f = x;
    }
    rep[x] = f;
  }
  return Congruence(std::move(rep));
}

////////////////////////////////////////////////////////////////////////////
// Submonoids
////////////////////////////////////////////////////////////////////////////

std::optional<Elem> Submonoid::index_of(Elem parent_element) const {
  auto it = std::lower_bound(embedding.begin(), embedding.end(), parent_element);
  if (it == embedding.end() || *it != parent_element) {
    return std::nullopt;
  }
  return static_cast<Elem>(it - embedding.begin());
}

Submonoid submonoid_on(Monoid const& m, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0) {
    raise(ErrorKind::InvalidInput, "a submonoid must contain 0");
  }
  std::vector<Elem> local(m.size(), static_cast<Elem>(-1));
  for (Elem i = 0; i < elements.size(); ++i) {
    if (elements[i] >= m.size()) {
      raise(ErrorKind::InvalidInput, "element out of range");
    }
    local[elements[i]] = i;
  }
  std::size_t const n = elements.size();
  std::vector<Elem> t(n * n);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      Elem const s = m.add(elements[i], elements[j]);
      if (local[s] == static_cast<Elem>(-1)) {
        raise(ErrorKind::InvalidInput,
              "subset is not closed: " + std::to_string(elements[i]) + " + "
                  + std::to_string(elements[j]) + " = " + std::to_string(s));
      }
      t[i * n + j] = local[s];
    }
  }
  return Submonoid{Monoid::assume_valid(n, std::move(t)), std::move(elements)};
}

std::string describe(RefinementMatrix const& z) {
  std::ostringstream os;
  os << "[[" << z.z11 << ", " << z.z12 << "], [" << z.z21 << ", " << z.z22 << "]]";
  return os.str();
}

}  // namespace refmon
