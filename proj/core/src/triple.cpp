#include "refmon/triple.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "group_basis.hpp"
#include "refmon/error.hpp"
#include "refmon/regular.hpp"

namespace refmon {

void validate_triple(StructureTriple const& t, bool require_cover) {
  Semilattice const& s = t.lambda;
  if (t.subgroups.size() != s.size()) {
    raise(ErrorKind::InvalidTriple,
          "expected " + std::to_string(s.size()) + " subgroups, got "
              + std::to_string(t.subgroups.size()));
  }
  for (Elem e = 0; e < s.size(); ++e) {
    if (!(t.subgroups[e].parent() == t.group)) {
      raise(ErrorKind::InvalidTriple,
            "subgroup at " + std::to_string(e) + " lives in a different group");
    }
  }
  for (Elem e = 0; e < s.size(); ++e) {
    for (Elem f = 0; f < s.size(); ++f) {
      if (s.leq(e, f) && !t.subgroups[e].is_subset_of(t.subgroups[f])) {
        raise(ErrorKind::InvalidTriple,
              std::to_string(e) + " <= " + std::to_string(f)
                  + " but G_e is not contained in G_f");
      }
    }
  }
  if (require_cover && t.subgroups[s.top()].size() != t.group.order()) {
    raise(ErrorKind::InvalidTriple, "the subgroups do not cover G");
  }
}

TripleConditions triple_conditions(StructureTriple const& t, std::size_t max_size) {
  validate_triple(t, false);
  Semilattice const& s = t.lambda;
  auto const&        g = t.subgroups;
  TripleConditions   c;
  c.distributive   = is_distributive(s, max_size);
  c.trivial_bottom = g[0].size() == 1;
  c.sums           = true;
  c.intersections  = true;
  for (Elem e = 0; e < s.size(); ++e) {
    for (Elem f = e; f < s.size(); ++f) {
      if (!(subgroup_sum(g[e], g[f]) == g[s.join(e, f)])) {
        c.sums = false;
      }
      std::set<GroupElem> below;
      for (Elem h = 0; h < s.size(); ++h) {
        if (s.leq(h, e) && s.leq(h, f)) {
          below.insert(g[h].elements().begin(), g[h].elements().end());
        }
      }
      auto const meet = subgroup_intersection(g[e], g[f]);
      if (!std::equal(meet.elements().begin(), meet.elements().end(), below.begin(),
                      below.end())) {
        c.intersections = false;
      }
    }
  }
  c.pure = std::all_of(g.begin(), g.end(), [&](Subgroup const& a) {
    return is_pure(a, g[s.top()]);
  });
  return c;
}

////////////////////////////////////////////////////////////////////////////
// Realisation
////////////////////////////////////////////////////////////////////////////

std::optional<Elem> RealizedTriple::index_of(Elem e, GroupElem g) const {
  if (e >= _members.size()) {
    return std::nullopt;
  }
  auto const& mem = _members[e];
  auto        it  = std::lower_bound(mem.begin(), mem.end(), g);
  if (it == mem.end() || *it != g) {
    return std::nullopt;
  }
  return static_cast<Elem>(_offset[e] + (it - mem.begin()));
}

RealizedTriple realize_from_triple(StructureTriple const& t) {
  validate_triple(t, false);
  RealizedTriple out;
  for (Elem e = 0; e < t.lambda.size(); ++e) {
    out._offset.push_back(static_cast<Elem>(out._labels.size()));
    auto const els = t.subgroups[e].elements();
    out._members.emplace_back(els.begin(), els.end());
    for (GroupElem g : els) {
      out._labels.emplace_back(e, g);
    }
  }
  std::size_t const n = out._labels.size();
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [e, x] = out._labels[i];
    for (std::size_t j = 0; j < n; ++j) {
      auto [f, y]      = out._labels[j];
      table[i * n + j] = *out.index_of(t.lambda.join(e, f), t.group.add(x, y));
    }
  }
  out._m = Monoid::assume_valid(n, std::move(table));
  return out;
}

////////////////////////////////////////////////////////////////////////////
// From a monoid to its triple
////////////////////////////////////////////////////////////////////////////

namespace {

  struct TopGroup {
    AbelianGroup      group;
    std::vector<Elem> code_of;  // monoid element (in M_⊤) -> group code
  };

  // Writes the group M_⊤ as Z/n1 + ... + Z/nk with n1 | n2 | ... .
  TopGroup top_group(Monoid const& m, GroupDecomposition const& d) {
    Elem const        top = d.top();
    std::vector<Elem> local{top};
    for (Elem x : d.group(top)) {
      if (x != top) {
        local.push_back(x);
      }
    }
    std::size_t const          k = local.size();
    std::vector<std::uint32_t> add(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        Elem const s = m.add(local[i], local[j]);
        add[i * k + j]
            = static_cast<std::uint32_t>(std::find(local.begin(), local.end(), s) - local.begin());
      }
    }
    detail::GroupTable const table(k, std::move(add));
    detail::Mask const       all(k, 1);
    detail::Mask             zero(k, 0);
    zero[0]    = 1;
    auto basis = detail::quotient_basis(table, all, zero);
    std::reverse(basis.begin(), basis.end());

    std::vector<std::uint32_t> factors;
    for (auto [h, n] : basis) {
      factors.push_back(n);
    }
    TopGroup out{AbelianGroup(factors), std::vector<Elem>(m.size(), 0)};
    if (out.group.order() != k) {
      raise(ErrorKind::InternalInconsistency, "cyclic basis of the top group has wrong order");
    }
    std::vector<char> hit(m.size(), 0);
    for (GroupElem c = 0; c < out.group.order(); ++c) {
      Tuple const t   = out.group.decode(c);
      Elem        acc = top;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] > 0) {
          acc = m.add(acc, m.multiple(t[i], local[basis[i].first]));
        }
      }
      if (hit[acc]) {
        raise(ErrorKind::InternalInconsistency, "cyclic basis of the top group is dependent");
      }
      hit[acc]        = 1;
      out.code_of[acc] = c;
    }
    return out;
  }

}  // namespace

StructureResult structure_triple(Monoid const& m) {
  auto const d = decompose_regular(m);
  if (auto emb = check_emb(d); !emb.holds) {
    raise(ErrorKind::EmbRequired, describe(*emb.witness));
  }
  auto const idem   = d.idempotents();
  auto       lambda = Semilattice::from_subset(m, idem);
  auto       top    = top_group(m, d);

  std::vector<Subgroup> subgroups;
  for (Elem e : idem) {
    std::vector<GroupElem> gens;
    for (Elem x : d.group(e)) {
      gens.push_back(top.code_of[m.add(x, d.top())]);
    }
    subgroups.push_back(Subgroup::generated(top.group, gens));
  }
  StructureTriple triple{std::move(lambda), top.group, std::move(subgroups)};
  auto            realized = realize_from_triple(triple);

  std::vector<Elem> map(m.size());
  for (Elem a = 0; a < m.size(); ++a) {
    Elem const li = static_cast<Elem>(
        std::lower_bound(idem.begin(), idem.end(), d.idempotent_of(a)) - idem.begin());
    auto const idx = realized.index_of(li, top.code_of[m.add(a, d.top())]);
    if (!idx) {
      raise(ErrorKind::InternalInconsistency, "element " + std::to_string(a) + " has no image");
    }
    map[a] = *idx;
  }
  auto iso = MonoidHom::validate(m, realized.monoid(), std::move(map));
  if (!iso.is_bijective()) {
    raise(ErrorKind::InternalInconsistency, "the structure map is not a bijection");
  }
  return StructureResult{std::move(triple),
                         std::move(realized),
                         std::move(iso),
                         std::vector<Elem>(idem.begin(), idem.end())};
}

}  // namespace refmon
