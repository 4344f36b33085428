#include "refmon/abelian_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "group_basis.hpp"
#include "refmon/error.hpp"

namespace refmon {

namespace {

  constexpr std::size_t kMaxGroupOrder = std::size_t(1) << 20;

  void check_parents(Subgroup const& a, Subgroup const& b) {
    if (!(a.parent() == b.parent())) {
      raise(ErrorKind::ParentMismatch, "subgroups of different groups");
    }
  }

  // The group table of B with B's elements renumbered 0, 1, ... in
  // ascending order (so local 0 is the identity and local order is
  // lexicographic order).
  detail::GroupTable local_table(Subgroup const& b) {
    auto const                 elems = b.elements();
    std::size_t const          n     = elems.size();
    std::vector<std::uint32_t> t(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        GroupElem const s = b.parent().add(elems[i], elems[j]);
        t[i * n + j]      = static_cast<std::uint32_t>(
            std::lower_bound(elems.begin(), elems.end(), s) - elems.begin());
      }
    }
    return detail::GroupTable(n, std::move(t));
  }

  detail::Mask local_mask(Subgroup const& b, Subgroup const& a) {
    detail::Mask m(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
      m[i] = a.contains(b.elements()[i]) ? 1 : 0;
    }
    return m;
  }

  // Greedy generating set for an element set that is known to be a subgroup.
  std::vector<GroupElem> greedy_generators(AbelianGroup const&           g,
                                           std::vector<GroupElem> const& elems) {
    std::vector<GroupElem> gens;
    std::vector<char>      in(g.order(), 0);
    std::vector<GroupElem> members{0};
    in[0] = 1;
    for (GroupElem x : elems) {
      if (in[x]) {
        continue;
      }
      gens.push_back(x);
      std::size_t const old = members.size();
      for (std::size_t i = 0; i < old; ++i) {
        GroupElem m = members[i];
        for (GroupElem y = g.add(m, x); y != m; y = g.add(y, x)) {
          if (!in[y]) {
            in[y] = 1;
            members.push_back(y);
          }
        }
      }
    }
    return gens;
  }

}  // namespace

////////////////////////////////////////////////////////////////////////////
// AbelianGroup
////////////////////////////////////////////////////////////////////////////

AbelianGroup::AbelianGroup() : _order(1) {}

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> factors)
    : _factors(std::move(factors)), _stride(_factors.size()), _order(1) {
  for (std::size_t i = _factors.size(); i-- > 0;) {
    if (_factors[i] == 0) {
      raise(ErrorKind::InvalidInput, "cyclic factors must be positive");
    }
    _stride[i] = static_cast<std::uint32_t>(_order);
    _order *= _factors[i];
    if (_order > kMaxGroupOrder) {
      raise(ErrorKind::InvalidInput, "group order exceeds 2^20");
    }
  }
}

std::uint32_t AbelianGroup::exponent() const noexcept {
  std::uint32_t e = 1;
  for (auto d : _factors) {
    e = std::lcm(e, d);
  }
  return e;
}

GroupElem AbelianGroup::encode(Tuple const& t) const {
  if (t.size() != _factors.size()) {
    raise(ErrorKind::InvalidInput,
          "tuple has " + std::to_string(t.size()) + " entries, group has "
              + std::to_string(_factors.size()) + " factors");
  }
  GroupElem code = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    code += (t[i] % _factors[i]) * _stride[i];
  }
  return code;
}

Tuple AbelianGroup::decode(GroupElem a) const {
  Tuple t(_factors.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = (a / _stride[i]) % _factors[i];
  }
  return t;
}

GroupElem AbelianGroup::add(GroupElem a, GroupElem b) const noexcept {
  GroupElem out = 0;
  for (std::size_t i = 0; i < _factors.size(); ++i) {
    std::uint32_t const d = _factors[i];
    out += (((a / _stride[i]) % d + (b / _stride[i]) % d) % d) * _stride[i];
  }
  return out;
}

GroupElem AbelianGroup::neg(GroupElem a) const noexcept {
  GroupElem out = 0;
  for (std::size_t i = 0; i < _factors.size(); ++i) {
    std::uint32_t const d = _factors[i];
    out += ((d - (a / _stride[i]) % d) % d) * _stride[i];
  }
  return out;
}

GroupElem AbelianGroup::times(std::uint64_t k, GroupElem a) const noexcept {
  GroupElem out = 0;
  for (std::size_t i = 0; i < _factors.size(); ++i) {
    std::uint64_t const d = _factors[i];
    out += static_cast<GroupElem>(((k % d) * ((a / _stride[i]) % d)) % d) * _stride[i];
  }
  return out;
}

std::uint32_t AbelianGroup::element_order(GroupElem a) const noexcept {
  std::uint32_t o = 1;
  for (std::size_t i = 0; i < _factors.size(); ++i) {
    std::uint32_t const d = _factors[i];
    std::uint32_t const c = (a / _stride[i]) % d;
    o                     = std::lcm(o, d / std::gcd(c, d));
  }
  return o;
}

std::string to_string(AbelianGroup const& g, GroupElem a) {
  std::ostringstream os;
  os << "(";
  auto t = g.decode(a);
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << (i ? "," : "") << t[i];
  }
  os << ")";
  return os.str();
}

////////////////////////////////////////////////////////////////////////////
// Subgroup
////////////////////////////////////////////////////////////////////////////

Subgroup::Subgroup(AbelianGroup parent, std::vector<GroupElem> gens)
    : _parent(std::move(parent)), _generators(std::move(gens)) {
  _member.assign(_parent.order(), false);
  for (GroupElem x : _generators) {
    if (x >= _parent.order()) {
      raise(ErrorKind::InvalidInput, "generator code out of range");
    }
  }
  _member[0] = true;
  _elements.push_back(0);
  for (std::size_t i = 0; i < _elements.size(); ++i) {
    for (GroupElem x : _generators) {
      GroupElem const y = _parent.add(_elements[i], x);
      if (!_member[y]) {
        _member[y] = true;
        _elements.push_back(y);
      }
    }
  }
  std::sort(_elements.begin(), _elements.end());
}

Subgroup Subgroup::generated(AbelianGroup const& g, std::span<GroupElem const> gens) {
  return Subgroup(g, std::vector<GroupElem>(gens.begin(), gens.end()));
}

Subgroup Subgroup::trivial(AbelianGroup const& g) {
  return Subgroup(g, {});
}

Subgroup Subgroup::whole(AbelianGroup const& g) {
  std::vector<GroupElem> gens;
  for (std::size_t i = 0; i < g.factors().size(); ++i) {
    Tuple t(g.factors().size(), 0);
    t[i] = 1;
    if (g.factors()[i] > 1) {
      gens.push_back(g.encode(t));
    }
  }
  return Subgroup(g, std::move(gens));
}

bool Subgroup::is_subset_of(Subgroup const& that) const {
  if (!(_parent == that._parent)) {
    return false;
  }
  return std::all_of(_elements.begin(), _elements.end(), [&](GroupElem x) {
    return that.contains(x);
  });
}

std::uint32_t Subgroup::exponent() const {
  std::uint32_t e = 1;
  for (GroupElem x : _elements) {
    e = std::lcm(e, _parent.element_order(x));
  }
  return e;
}

Subgroup subgroup_sum(Subgroup const& a, Subgroup const& b) {
  check_parents(a, b);
  std::vector<GroupElem> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subgroup::generated(a.parent(), gens);
}

Subgroup subgroup_intersection(Subgroup const& a, Subgroup const& b) {
  check_parents(a, b);
  std::vector<GroupElem> common;
  for (GroupElem x : a.elements()) {
    if (b.contains(x)) {
      common.push_back(x);
    }
  }
  return Subgroup::generated(a.parent(), greedy_generators(a.parent(), common));
}

Subgroup multiple_subgroup(std::uint64_t n, Subgroup const& a) {
  std::vector<GroupElem> gens;
  for (GroupElem x : a.generators()) {
    gens.push_back(a.parent().times(n, x));
  }
  return Subgroup::generated(a.parent(), gens);
}

////////////////////////////////////////////////////////////////////////////
// Purity and complements
////////////////////////////////////////////////////////////////////////////

std::uint32_t purity_failure(Subgroup const& a, Subgroup const& b) {
  check_parents(a, b);
  if (!a.is_subset_of(b)) {
    raise(ErrorKind::PreconditionViolated, "purity needs A <= B");
  }
  std::uint32_t const exp = b.exponent();
  for (std::uint32_t n = 1; n <= exp; ++n) {
    // A ∩ nB = nA; nA ⊆ A ∩ nB always holds, so compare sizes.
    Subgroup const nb = multiple_subgroup(n, b);
    Subgroup const na = multiple_subgroup(n, a);
    std::size_t    common = 0;
    for (GroupElem x : nb.elements()) {
      common += a.contains(x) ? 1 : 0;
    }
    if (common != na.size()) {
      return n;
    }
  }
  return 0;
}

bool is_pure(Subgroup const& a, Subgroup const& b) {
  return purity_failure(a, b) == 0;
}

bool is_pure(Subgroup const& a, AbelianGroup const& b) {
  return is_pure(a, Subgroup::whole(b));
}

namespace {

  bool is_complement(Subgroup const& a, Subgroup const& b, Subgroup const& c) {
    return c.is_subset_of(b) && a.size() * c.size() == b.size()
           && subgroup_intersection(a, c).size() == 1;
  }

}  // namespace

Subgroup pure_complement(Subgroup const& a, Subgroup const& b) {
  if (std::uint32_t n = purity_failure(a, b)) {
    raise(ErrorKind::NotPure,
          "A ∩ " + std::to_string(n) + "B != " + std::to_string(n) + "A");
  }
  auto const         table = local_table(b);
  detail::Mask const all(b.size(), 1);
  detail::Mask const bottom = local_mask(b, a);
  detail::Mask const zero   = [&] {
    detail::Mask z(b.size(), 0);
    z[0] = 1;
    return z;
  }();

  std::vector<GroupElem> lifts;
  for (auto [h, n] : detail::quotient_basis(table, all, bottom)) {
    // least element of h + A with order n in B
    std::vector<std::uint32_t> coset;
    for (std::uint32_t t = 0; t < b.size(); ++t) {
      if (bottom[t]) {
        coset.push_back(table.add(h, t));
      }
    }
    std::sort(coset.begin(), coset.end());
    for (std::uint32_t c : coset) {
      if (detail::order_modulo(table, c, zero) == n) {
        lifts.push_back(b.elements()[c]);
        break;
      }
    }
  }
  Subgroup c = Subgroup::generated(b.parent(), lifts);
  if (is_complement(a, b, c)) {
    return c;
  }
  // exhaustive fallback on small groups
  if (b.size() <= 64) {
    for (auto const& s : all_subgroups(b)) {
      if (is_complement(a, b, s)) {
        return s;
      }
    }
  }
  raise(ErrorKind::InternalInconsistency, "no complement found for a pure subgroup");
}

std::vector<CyclicFactor> cyclic_decomposition(Subgroup const& a) {
  auto const         table = local_table(a);
  detail::Mask const all(a.size(), 1);
  detail::Mask       zero(a.size(), 0);
  zero[0] = 1;
  auto basis = detail::quotient_basis(table, all, zero);
  std::vector<CyclicFactor> out;
  for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
    out.push_back({a.elements()[it->first], it->second});
  }
  return out;
}

////////////////////////////////////////////////////////////////////////////
// Internal direct sums
////////////////////////////////////////////////////////////////////////////

DirectSumDecomposition::DirectSumDecomposition(Subgroup whole, std::vector<Subgroup> parts)
    : _whole(std::move(whole)), _parts(std::move(parts)) {}

GroupElem DirectSumDecomposition::project(std::size_t i, GroupElem b) const {
  auto const elems = _whole.elements();
  auto       it    = std::lower_bound(elems.begin(), elems.end(), b);
  if (it == elems.end() || *it != b) {
    raise(ErrorKind::InvalidInput, "element is not in the decomposed group");
  }
  return _components[it - elems.begin()][i];
}

DirectSumDecomposition internal_projections(Subgroup const& b, std::vector<Subgroup> parts) {
  AbelianGroup const& g = b.parent();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    check_parents(b, parts[i]);
    if (!parts[i].is_subset_of(b)) {
      raise(ErrorKind::NotDirectSum, "part " + std::to_string(i) + " is not contained in B");
    }
  }
  auto const                          elems = b.elements();
  std::vector<std::vector<GroupElem>> comps(elems.size());
  std::vector<char>                   seen(elems.size(), 0);

  std::vector<std::size_t> digit(parts.size(), 0);
  bool                     done = false;
  while (!done) {
    GroupElem              sum = 0;
    std::vector<GroupElem> pick(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      pick[i] = parts[i].elements()[digit[i]];
      sum     = g.add(sum, pick[i]);
    }
    std::size_t const pos
        = std::lower_bound(elems.begin(), elems.end(), sum) - elems.begin();
    if (seen[pos]) {
      raise(ErrorKind::NotDirectSum,
            "element " + to_string(g, sum) + " has more than one decomposition");
    }
    seen[pos]  = 1;
    comps[pos] = std::move(pick);
    done       = true;
    for (std::size_t i = parts.size(); i-- > 0;) {
      if (++digit[i] < parts[i].size()) {
        done = false;
        break;
      }
      digit[i] = 0;
    }
  }
  for (std::size_t pos = 0; pos < elems.size(); ++pos) {
    if (!seen[pos]) {
      raise(ErrorKind::NotDirectSum,
            "element " + to_string(g, elems[pos]) + " has no decomposition");
    }
  }
  DirectSumDecomposition out(b, std::move(parts));
  out._components = std::move(comps);
  return out;
}

std::vector<Subgroup> all_subgroups(Subgroup const& b) {
  AbelianGroup const&                 g = b.parent();
  std::set<std::vector<GroupElem>>    seen;
  std::vector<Subgroup>               out{Subgroup::trivial(g)};
  seen.insert({0});
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (GroupElem x : b.elements()) {
      if (out[i].contains(x)) {
        continue;
      }
      std::vector<GroupElem> gens(out[i].generators().begin(), out[i].generators().end());
      gens.push_back(x);
      Subgroup s = Subgroup::generated(g, gens);
      std::vector<GroupElem> key(s.elements().begin(), s.elements().end());
      if (seen.insert(key).second) {
        out.push_back(std::move(s));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](Subgroup const& x, Subgroup const& y) {
    return std::lexicographical_compare(x.elements().begin(), x.elements().end(),
                                        y.elements().begin(), y.elements().end());
  });
  return out;
}

}  // namespace refmon
