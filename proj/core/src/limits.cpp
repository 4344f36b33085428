#include "refmon/limits.hpp"

#include <algorithm>
#include <sstream>

#include "refmon/error.hpp"
#include "refmon/semilattice.hpp"

namespace refmon {

////////////////////////////////////////////////////////////////////////////
// BlockSum
////////////////////////////////////////////////////////////////////////////

BlockSum::BlockSum(std::vector<std::uint32_t> orders) : _orders(std::move(orders)) {
  for (auto n : _orders) {
    if (n == 0) {
      raise(ErrorKind::InvalidInput, "block orders must be positive");
    }
    _size *= n + 1;
    if (_size > (std::size_t(1) << 31)) {
      raise(ErrorKind::SizeLimitExceeded, "block sum too large to index");
    }
  }
}

std::vector<std::uint32_t> BlockSum::decode(Elem x) const {
  std::vector<std::uint32_t> c(_orders.size());
  for (std::size_t i = _orders.size(); i-- > 0;) {
    c[i] = x % (_orders[i] + 1);
    x /= (_orders[i] + 1);
  }
  return c;
}

Elem BlockSum::encode(std::span<std::uint32_t const> coords) const {
  if (coords.size() != _orders.size()) {
    raise(ErrorKind::InvalidInput, "wrong number of block coordinates");
  }
  Elem x = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] > _orders[i]) {
      raise(ErrorKind::InvalidInput, "block coordinate out of range");
    }
    x = x * (_orders[i] + 1) + coords[i];
  }
  return x;
}

Elem BlockSum::add(Elem x, Elem y) const {
  auto a = decode(x);
  auto b = decode(y);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) {
      a[i] = b[i];
    } else if (b[i] != 0) {
      a[i] = (a[i] - 1 + b[i] - 1) % _orders[i] + 1;
    }
  }
  return encode(a);
}

Monoid BlockSum::expand(std::size_t max_elements) const {
  if (_size > max_elements) {
    raise(ErrorKind::SizeLimitExceeded,
          "block sum with " + std::to_string(_size) + " elements exceeds the limit "
              + std::to_string(max_elements));
  }
  std::vector<Monoid> blocks;
  for (auto n : _orders) {
    blocks.push_back(building_block(n));
  }
  return direct_sum(blocks);
}

////////////////////////////////////////////////////////////////////////////
// Verification
////////////////////////////////////////////////////////////////////////////

namespace {

  std::optional<Elem> order_unit_failure(Monoid const& m, Elem u) {
    std::vector<Elem> multiples;
    Elem              ku = u;
    for (std::size_t k = 0; k <= m.size(); ++k) {
      multiples.push_back(ku);
      ku = m.add(ku, u);
    }
    for (Elem x = 0; x < m.size(); ++x) {
      bool below = false;
      for (Elem v : multiples) {
        if (leq(m, x, v)) {
          below = true;
          break;
        }
      }
      if (!below) {
        return x;
      }
    }
    return std::nullopt;
  }

  std::string hom_message(char const* name, HomViolation v) {
    if (v.x == 0 && v.y == 0) {
      return std::string(name) + "(0) != 0";
    }
    return std::string(name) + " is not additive: " + name + "(" + std::to_string(v.x) + " + "
           + std::to_string(v.y) + ") != " + name + "(" + std::to_string(v.x) + ") + " + name
           + "(" + std::to_string(v.y) + ")";
  }

  bool in_range(std::span<Elem const> map, std::size_t n) {
    return std::all_of(map.begin(), map.end(), [n](Elem y) { return y < n; });
  }

}  // namespace

std::optional<std::string> certificate_violation(RetractCertificate const& c) {
  std::size_t const nm = c.monoid.size(), nb = c.target.size();
  if (c.eps.size() != nm) {
    return "eps has " + std::to_string(c.eps.size()) + " entries, M has "
           + std::to_string(nm) + " elements";
  }
  if (c.mu.size() != nb) {
    return "mu has " + std::to_string(c.mu.size()) + " entries, B has " + std::to_string(nb)
           + " elements";
  }
  if (!in_range(c.eps, nb)) {
    return "eps has a value outside B";
  }
  if (!in_range(c.mu, nm)) {
    return "mu has a value outside M";
  }
  if (c.blocks) {
    if (c.blocks->size() != nb) {
      return "blocks describe " + std::to_string(c.blocks->size())
             + " elements but B has " + std::to_string(nb);
    }
    for (Elem x = 0; x < nb; ++x) {
      for (Elem y = x; y < nb; ++y) {
        if (c.blocks->add(x, y) != c.target.add(x, y)) {
          return "B does not match its block description at (" + std::to_string(x) + ", "
                 + std::to_string(y) + ")";
        }
      }
    }
  }
  if (auto v = hom_violation(c.monoid, c.target, c.eps)) {
    return hom_message("eps", *v);
  }
  if (auto v = hom_violation(c.target, c.monoid, c.mu)) {
    return hom_message("mu", *v);
  }
  for (Elem x = 0; x < nm; ++x) {
    if (c.mu[c.eps[x]] != x) {
      return "mu(eps(" + std::to_string(x) + ")) = " + std::to_string(c.mu[c.eps[x]])
             + " != " + std::to_string(x);
    }
  }
  if (c.unit) {
    if (*c.unit >= nb) {
      return "unit outside B";
    }
    if (auto x = order_unit_failure(c.target, *c.unit)) {
      return "unit " + std::to_string(*c.unit) + " is not an order-unit of B: "
             + std::to_string(*x) + " is below no multiple";
    }
    if (auto x = order_unit_failure(c.monoid, c.mu[*c.unit])) {
      return "mu(unit) is not an order-unit of M: " + std::to_string(*x)
             + " is below no multiple";
    }
  }
  return std::nullopt;
}

void verify(RetractCertificate const& c) {
  if (auto v = certificate_violation(c)) {
    raise(ErrorKind::InvalidCertificate, *v);
  }
}

////////////////////////////////////////////////////////////////////////////
// Constructions
////////////////////////////////////////////////////////////////////////////

RetractCertificate nz_group_retract(AbelianGroup const& a) {
  Subgroup const whole   = Subgroup::whole(a);
  auto const     factors = cyclic_decomposition(whole);
  Monoid const   m       = nz_of_group(a);

  if (factors.empty()) {
    BlockSum b({1});
    return RetractCertificate{m, b.expand(), b, {0, 1}, {0, 1}, std::nullopt};
  }
  std::vector<std::uint32_t> orders;
  std::vector<Subgroup>      parts;
  for (auto const& f : factors) {
    orders.push_back(f.order);
    parts.push_back(Subgroup::generated(a, std::vector<GroupElem>{f.generator}));
  }
  BlockSum const b(orders);
  auto const     proj = internal_projections(whole, parts);

  std::vector<Elem> eps(m.size());
  eps[0] = 0;
  for (GroupElem g = 0; g < a.order(); ++g) {
    std::vector<std::uint32_t> coords(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      GroupElem const  pi = proj.project(i, g);
      std::uint32_t    k  = 0;
      while (a.times(k, factors[i].generator) != pi) {
        ++k;
      }
      coords[i] = k + 1;
    }
    eps[g + 1] = b.encode(coords);
  }
  std::vector<Elem> mu(b.size());
  for (Elem y = 0; y < b.size(); ++y) {
    auto const coords = b.decode(y);
    bool       any    = false;
    GroupElem  sum    = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] != 0) {
        any = true;
        sum = a.add(sum, a.times(coords[i] - 1, factors[i].generator));
      }
    }
    mu[y] = any ? sum + 1 : 0;
  }
  RetractCertificate c{m, b.expand(), b, std::move(eps), std::move(mu), std::nullopt};
  verify(c);
  return c;
}

RetractCertificate finite_rep_retract(StructureTriple const& t,
                                      FiniteRepData*         data,
                                      std::size_t            max_size) {
  validate_triple(t, true);
  Semilattice const& s  = t.lambda;
  auto const         ji = join_irreducibles(s, max_size);
  if (!ji.distributive()) {
    raise(ErrorKind::NotDistributive, "the semilattice of the triple is not distributive");
  }
  auto const realized = realize_from_triple(t);
  Monoid const& m     = realized.monoid();
  auto const    rep   = rep_report(m, max_size);
  if (!rep.in_rep()) {
    std::string why;
    for (auto const& w : rep.witnesses) {
      why += (why.empty() ? "" : "; ") + w;
    }
    raise(ErrorKind::NotInRep, why.empty() ? "a decider failed" : why);
  }

  std::vector<Elem>     irr;
  std::vector<Subgroup> h;
  for (auto const& p : ji.irreducibles()) {
    irr.push_back(p.element);
    h.push_back(pure_complement(t.subgroups[p.lower_cover], t.subgroups[p.element]));
  }
  // G_e = ⊕_{p in J(e)} H_p for every e
  for (Elem e = 0; e < s.size(); ++e) {
    std::vector<Subgroup> parts;
    for (std::size_t i = 0; i < irr.size(); ++i) {
      if (s.leq(irr[i], e)) {
        parts.push_back(h[i]);
      }
    }
    try {
      internal_projections(t.subgroups[e], std::move(parts));
    } catch (Error const& err) {
      raise(ErrorKind::DecompositionFailure,
            "G_" + std::to_string(e) + " is not the direct sum of the H_p below it: "
                + err.what());
    }
  }
  auto const proj = internal_projections(t.subgroups[s.top()], h);

  std::size_t const radix = t.group.order() + 1;
  std::size_t       nb    = 1;
  for (std::size_t i = 0; i < irr.size(); ++i) {
    nb *= radix;
    if (nb > BlockSum::kMaxExpandedBlockSum) {
      raise(ErrorKind::SizeLimitExceeded,
            "(G ⊔ {0})^J has more than " + std::to_string(BlockSum::kMaxExpandedBlockSum)
                + " elements");
    }
  }
  std::vector<Monoid> copies(irr.size(), nz_of_group(t.group));
  Monoid              b = direct_sum(copies);

  std::vector<Elem> eps(m.size());
  for (Elem a = 0; a < m.size(); ++a) {
    auto [e, x] = realized.label(a);
    Elem y      = 0;
    for (std::size_t i = 0; i < irr.size(); ++i) {
      Elem const coord = s.leq(irr[i], e) ? proj.project(i, x) + 1 : 0;
      y                = static_cast<Elem>(y * radix + coord);
    }
    eps[a] = y;
  }
  std::vector<Elem> mu(b.size());
  for (Elem y = 0; y < b.size(); ++y) {
    Elem acc = 0;
    Elem rest = y;
    for (std::size_t i = irr.size(); i-- > 0;) {
      Elem const coord = static_cast<Elem>(rest % radix);
      rest /= static_cast<Elem>(radix);
      if (coord != 0) {
        acc = m.add(acc, *realized.index_of(irr[i], proj.project(i, coord - 1)));
      }
    }
    mu[y] = acc;
  }
  if (data) {
    data->irreducibles = irr;
    data->complements  = h;
  }
  RetractCertificate c{m, std::move(b), std::nullopt, std::move(eps), std::move(mu),
                       std::nullopt};
  verify(c);
  return c;
}

RetractCertificate compose(RetractCertificate const& inner, RetractCertificate const& outer) {
  if (!(inner.target == outer.monoid)) {
    raise(ErrorKind::PreconditionViolated,
          "cannot compose certificates: the inner target is not the outer monoid");
  }
  RetractCertificate c{inner.monoid, outer.target, outer.blocks, {}, {}, std::nullopt};
  c.eps.resize(inner.monoid.size());
  for (Elem x = 0; x < c.eps.size(); ++x) {
    c.eps[x] = outer.eps[inner.eps[x]];
  }
  c.mu.resize(outer.target.size());
  for (Elem y = 0; y < c.mu.size(); ++y) {
    c.mu[y] = inner.mu[outer.mu[y]];
  }
  return c;
}

RetractCertificate direct_sum(std::span<RetractCertificate const> parts) {
  std::vector<Monoid>        ms, bs;
  std::vector<std::uint32_t> orders;
  bool                       all_blocks = true;
  std::size_t                nb         = 1;
  for (auto const& p : parts) {
    ms.push_back(p.monoid);
    bs.push_back(p.target);
    nb *= p.target.size();
    if (nb > BlockSum::kMaxExpandedBlockSum) {
      raise(ErrorKind::SizeLimitExceeded, "direct sum of certificates is too large");
    }
    if (p.blocks) {
      orders.insert(orders.end(), p.blocks->orders().begin(), p.blocks->orders().end());
    } else {
      all_blocks = false;
    }
  }
  RetractCertificate c{direct_sum(ms), direct_sum(bs), std::nullopt, {}, {}, std::nullopt};
  if (all_blocks) {
    c.blocks = BlockSum(orders);
  }
  auto map_sum = [&](std::size_t n, bool forward) {
    std::vector<Elem> out(n);
    for (Elem x = 0; x < n; ++x) {
      Elem rest = x, y = 0, scale = 1;
      for (std::size_t i = parts.size(); i-- > 0;) {
        auto const& p   = parts[i];
        std::size_t src = forward ? p.monoid.size() : p.target.size();
        std::size_t dst = forward ? p.target.size() : p.monoid.size();
        Elem const  xi  = static_cast<Elem>(rest % src);
        rest /= static_cast<Elem>(src);
        y += (forward ? p.eps[xi] : p.mu[xi]) * scale;
        scale *= static_cast<Elem>(dst);
      }
      out[x] = y;
    }
    return out;
  };
  c.eps = map_sum(c.monoid.size(), true);
  c.mu  = map_sum(c.target.size(), false);
  return c;
}

RetractCertificate pull_back(RetractCertificate const& c, MonoidHom const& iso) {
  if (!(iso.target() == c.monoid) || !iso.is_bijective()) {
    raise(ErrorKind::PreconditionViolated, "pull_back needs an isomorphism onto the monoid");
  }
  std::vector<Elem> inverse(iso.target().size());
  for (Elem x = 0; x < iso.source().size(); ++x) {
    inverse[iso(x)] = x;
  }
  RetractCertificate out{iso.source(), c.target, c.blocks, {}, {}, c.unit};
  out.eps.resize(iso.source().size());
  for (Elem x = 0; x < out.eps.size(); ++x) {
    out.eps[x] = c.eps[iso(x)];
  }
  out.mu.resize(c.target.size());
  for (Elem y = 0; y < out.mu.size(); ++y) {
    out.mu[y] = inverse[c.mu[y]];
  }
  return out;
}

RetractCertificate blocks_retract(Monoid const& m, std::size_t max_size) {
  auto const st    = structure_triple(m);
  FiniteRepData data;
  auto const    inner = finite_rep_retract(st.triple, &data, max_size);
  std::vector<RetractCertificate> per(data.irreducibles.size(), nz_group_retract(st.triple.group));
  auto const outer = direct_sum(per);
  auto       c     = pull_back(compose(inner, outer), st.iso);
  verify(c);
  return c;
}

RetractCertificate blocks_retract(StructureTriple const& t, std::size_t max_size) {
  return blocks_retract(realize_from_triple(t).monoid(), max_size);
}

////////////////////////////////////////////////////////////////////////////
// Direct systems and factorisation
////////////////////////////////////////////////////////////////////////////

DirectSystem limit_system(RetractCertificate const& c) {
  verify(c);
  std::size_t const nb = c.target.size();
  std::vector<Elem> rho(nb);
  for (Elem y = 0; y < nb; ++y) {
    rho[y] = c.eps[c.mu[y]];
  }
  for (Elem y = 0; y < nb; ++y) {
    if (rho[rho[y]] != rho[y]) {
      raise(ErrorKind::InvalidCertificate, "rho is not idempotent at " + std::to_string(y));
    }
    if (c.mu[rho[y]] != c.mu[y]) {
      raise(ErrorKind::InvalidCertificate, "mu o rho != mu at " + std::to_string(y));
    }
  }
  std::vector<Elem> image(rho);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::vector<char> hit(c.monoid.size(), 0);
  for (Elem y : image) {
    if (hit[c.mu[y]]) {
      raise(ErrorKind::InvalidCertificate, "mu is not injective on the image of rho");
    }
    hit[c.mu[y]] = 1;
  }
  if (image.size() != c.monoid.size()) {
    raise(ErrorKind::InvalidCertificate, "mu does not map the image of rho onto M");
  }
  return DirectSystem{c.target,
                      MonoidHom::assume_valid(c.target, c.target, std::move(rho)),
                      c.monoid,
                      MonoidHom::assume_valid(c.target, c.monoid, c.mu),
                      std::move(image)};
}

Factorization factor_through(MonoidHom const& phi, RetractCertificate const& c) {
  if (!(phi.target() == c.monoid)) {
    raise(ErrorKind::PreconditionViolated, "phi must map into the certified monoid");
  }
  verify(c);
  auto const eps = MonoidHom::assume_valid(c.monoid, c.target, c.eps);
  auto const mu  = MonoidHom::assume_valid(c.target, c.monoid, c.mu);
  auto       psi = compose(eps, phi);
  auto const back = compose(mu, psi);
  if (!std::equal(back.map().begin(), back.map().end(), phi.map().begin(), phi.map().end())) {
    raise(ErrorKind::InternalInconsistency, "phi' o psi != phi");
  }
  if (!(kernel(psi) == kernel(phi))) {
    raise(ErrorKind::InternalInconsistency, "ker psi != ker phi");
  }
  return Factorization{std::move(psi), mu};
}

RetractCertificate order_unit_normalize(RetractCertificate const& c, Elem u) {
  if (!c.blocks) {
    raise(ErrorKind::PreconditionViolated, "order-unit normalisation needs a block certificate");
  }
  if (u >= c.monoid.size()) {
    raise(ErrorKind::InvalidInput, "unit out of range");
  }
  if (auto x = order_unit_failure(c.monoid, u)) {
    raise(ErrorKind::NotOrderUnit,
          std::to_string(*x) + " is below no multiple of " + std::to_string(u));
  }
  BlockSum const&            b  = *c.blocks;
  auto const                 eu = b.decode(c.eps[u]);
  std::vector<std::size_t>   support;
  std::vector<std::uint32_t> orders;
  for (std::size_t i = 0; i < eu.size(); ++i) {
    if (eu[i] != 0) {
      support.push_back(i);
      orders.push_back(b.orders()[i]);
    }
  }
  BlockSum const                 sub(orders);
  auto restrict = [&](Elem y) {
    auto const                 full = b.decode(y);
    std::vector<std::uint32_t> part;
    for (std::size_t i = 0; i < full.size(); ++i) {
      if (std::find(support.begin(), support.end(), i) != support.end()) {
        part.push_back(full[i]);
      } else if (full[i] != 0) {
        raise(ErrorKind::InternalInconsistency, "eps(x) is not below eps(u)");
      }
    }
    return sub.encode(part);
  };
  RetractCertificate out{c.monoid, sub.expand(), sub, {}, {}, restrict(c.eps[u])};
  out.eps.resize(c.monoid.size());
  for (Elem x = 0; x < out.eps.size(); ++x) {
    out.eps[x] = restrict(c.eps[x]);
  }
  out.mu.resize(sub.size());
  for (Elem y = 0; y < sub.size(); ++y) {
    auto const                 part = sub.decode(y);
    std::vector<std::uint32_t> full(b.orders().size(), 0);
    for (std::size_t k = 0; k < support.size(); ++k) {
      full[support[k]] = part[k];
    }
    out.mu[y] = c.mu[b.encode(full)];
  }
  verify(out);
  return out;
}

bool verify_order_restriction(RetractCertificate const& c, GeneralizedInteger const& m) {
  if (!c.blocks) {
    raise(ErrorKind::PreconditionViolated, "order restriction needs a block certificate");
  }
  auto const o = c.blocks->orders();
  return std::all_of(o.begin(), o.end(), [&](std::uint32_t n) { return m.divides(n); });
}

////////////////////////////////////////////////////////////////////////////
// Homomorphisms out of block sums
////////////////////////////////////////////////////////////////////////////

MonoidHom hom_from_blocks(BlockSum const& b, Monoid const& m, std::span<Elem const> images) {
  auto const orders = b.orders();
  if (images.size() != orders.size()) {
    raise(ErrorKind::InvalidInput, "one generator image per block is needed");
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    auto const o = images[i] < m.size() ? element_order(m, images[i]) : std::nullopt;
    if (!o || orders[i] % *o != 0) {
      raise(ErrorKind::InvalidInput,
            "image of block " + std::to_string(i) + " has order not dividing "
                + std::to_string(orders[i]));
    }
  }
  std::vector<Elem> map(b.size());
  for (Elem y = 0; y < b.size(); ++y) {
    auto const coords = b.decode(y);
    Elem       acc    = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] != 0) {
        std::uint32_t const r = coords[i] - 1;
        acc = m.add(acc, m.multiple(r == 0 ? orders[i] : r, images[i]));
      }
    }
    map[y] = acc;
  }
  return MonoidHom::validate(b.expand(), m, std::move(map));
}

MonoidHom random_block_hom(BlockSum const& b, Monoid const& m, std::mt19937_64& rng) {
  std::vector<Elem> images;
  for (auto n : b.orders()) {
    std::vector<Elem> admissible;
    for (Elem x = 0; x < m.size(); ++x) {
      auto const o = element_order(m, x);
      if (o && n % *o == 0) {
        admissible.push_back(x);
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, admissible.size() - 1);
    images.push_back(admissible[pick(rng)]);
  }
  return hom_from_blocks(b, m, images);
}

}  // namespace refmon
