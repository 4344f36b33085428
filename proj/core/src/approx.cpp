#include "refmon/approx.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "refmon/error.hpp"
#include "refmon/regular.hpp"
#include "refmon/semilattice.hpp"

namespace refmon {

namespace {

  constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

  std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) {
      return kSaturated;
    }
    return a * b;
  }

  // {g in A : m g = 0}
  Subgroup torsion_part(Subgroup const& a, std::uint64_t m) {
    std::vector<GroupElem> keep;
    for (GroupElem g : a.elements()) {
      if (a.parent().times(m, g) == 0) {
        keep.push_back(g);
      }
    }
    return Subgroup::generated(a.parent(), keep);
  }

  std::vector<Subgroup> restricted_subgroups(StructureTriple const& t, std::uint64_t m) {
    std::vector<Subgroup> out;
    for (auto const& g : t.subgroups) {
      out.push_back(torsion_part(g, m));
    }
    return out;
  }

  std::uint64_t order_lcm(StructureTriple const& t,
                          std::vector<std::pair<Elem, GroupElem>> const& x) {
    std::uint64_t m = 1;
    for (auto [e, g] : x) {
      m = std::lcm(m, std::uint64_t(t.group.element_order(g)));
    }
    return m;
  }

  std::vector<Elem> generated_d(StructureTriple const& t,
                                std::vector<std::pair<Elem, GroupElem>> const& x) {
    std::vector<Elem> seeds;
    for (auto [e, g] : x) {
      seeds.push_back(e);
    }
    return sublattice_generated(t.lambda, seeds);
  }

  struct DIrreducible {
    Elem p, lower, dagger;
  };

  std::vector<DIrreducible> d_irreducibles(Semilattice const& lambda,
                                           std::vector<Elem> const& d,
                                           std::size_t              max_size) {
    auto const dsl = Semilattice::from_subset(lambda.monoid(), d);
    auto const ji  = join_irreducibles(dsl, max_size);
    std::vector<DIrreducible> out;
    for (auto const& j : ji.irreducibles()) {
      out.push_back({d[j.element], d[j.lower_cover], d[ji.dagger(j.element)]});
    }
    return out;
  }

  Subgroup g_prime(StructureTriple const& t, std::vector<ApproxPiece> const& pieces, Elem a) {
    std::vector<GroupElem> gens;
    for (auto const& piece : pieces) {
      if (t.lambda.leq(piece.p, a)) {
        gens.insert(gens.end(), piece.h_prime.generators().begin(),
                    piece.h_prime.generators().end());
      }
    }
    return Subgroup::generated(t.group, gens);
  }

  std::string name(Elem e) {
    return std::to_string(e);
  }

  template <typename T>
  std::size_t position(std::vector<T> const& v, T const& x) {
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), x) - v.begin());
  }

}  // namespace

std::uint64_t approximation_bound(std::uint64_t m, std::uint64_t n) {
  std::uint64_t exponent = n >= 58 ? kSaturated : sat_mul(std::uint64_t(1) << n, n);
  std::uint64_t result   = 1;
  std::uint64_t base     = m + 1;
  // square-and-multiply with saturation
  while (exponent > 0 && result != kSaturated) {
    if (exponent & 1) {
      result = sat_mul(result, base);
    }
    exponent >>= 1;
    if (exponent > 0) {
      base = sat_mul(base, base);
    }
  }
  return result;
}

ApproximationCertificate approximate(StructureTriple const&                          t,
                                     std::vector<std::pair<Elem, GroupElem>> const& x_in,
                                     std::size_t                                     max_size) {
  validate_triple(t, false);
  auto const realized = realize_from_triple(t);
  auto       x        = x_in;
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  for (auto [e, g] : x) {
    if (!realized.index_of(e, g)) {
      raise(ErrorKind::InvalidInput,
            "(" + name(e) + ", " + to_string(t.group, g) + ") is not an element of the monoid");
    }
  }
  auto const rep = rep_report(realized.monoid(), max_size);
  if (!rep.in_rep()) {
    std::string why;
    for (auto const& w : rep.witnesses) {
      why += (why.empty() ? "" : "; ") + w;
    }
    raise(ErrorKind::NotInRep, why);
  }

  ApproximationCertificate c{t, x, 1, {}, {}, {}, 0, 0};
  c.m                = order_lcm(t, x);
  c.bound            = approximation_bound(c.m, x.size());
  auto const gm      = restricted_subgroups(t, c.m);
  c.d                = generated_d(t, x);
  auto const irr     = d_irreducibles(t.lambda, c.d, max_size);
  Semilattice const& s = t.lambda;

  std::vector<Subgroup> h;
  for (auto const& j : irr) {
    try {
      h.push_back(pure_complement(gm[j.lower], gm[j.p]));
    } catch (Error const& err) {
      raise(ErrorKind::ClaimFailure,
            "no complement of G_" + name(j.lower) + " in G_" + name(j.p) + ": " + err.what());
    }
  }
  Elem top = 0;
  for (Elem a : c.d) {
    top = s.join(top, a);
  }
  std::vector<Subgroup> parts;
  for (std::size_t i = 0; i < irr.size(); ++i) {
    if (s.leq(irr[i].p, top)) {
      parts.push_back(h[i]);
    }
  }
  auto const proj = [&] {
    try {
      return internal_projections(gm[top], parts);
    } catch (Error const& err) {
      raise(ErrorKind::ClaimFailure,
            std::string("G_I is not the direct sum of the H_P: ") + err.what());
    }
  }();

  for (std::size_t i = 0; i < irr.size(); ++i) {
    auto const& j = irr[i];
    std::vector<GroupElem> u_set;
    for (auto [e, g] : x) {
      if (s.leq(j.p, e)) {
        GroupElem const gp = proj.project(i, g);
        if (std::find(u_set.begin(), u_set.end(), gp) == u_set.end()) {
          u_set.push_back(gp);
        }
      }
    }
    std::sort(u_set.begin(), u_set.end());
    Subgroup hp = Subgroup::generated(t.group, u_set);

    Elem v = j.p;
    for (Elem cand = 0; cand < s.size(); ++cand) {
      if (s.leq(cand, j.p) && hp.is_subset_of(gm[cand])) {
        v = s.meet(v, cand);
      }
    }
    if (!hp.is_subset_of(gm[v])) {
      raise(ErrorKind::ClaimFailure, "no least v below " + name(j.p) + " carrying H'_P");
    }
    Elem w = j.p;
    for (Elem cand = 0; cand < s.size(); ++cand) {
      if (s.leq(cand, j.p) && !s.leq(cand, j.dagger)) {
        w = cand;
        break;
      }
    }
    Elem const psi = s.join(s.join(j.p, v), w);
    c.pieces.push_back(ApproxPiece{j.p, j.lower, j.dagger, h[i], std::move(hp), j.p, v, w, psi});
  }

  for (Elem a : c.d) {
    Elem phi = 0;
    for (auto const& piece : c.pieces) {
      if (s.leq(piece.p, a)) {
        phi = s.join(phi, piece.psi);
      }
    }
    c.phi.push_back(phi);
  }
  c.n_size = 0;
  for (Elem a : c.d) {
    c.n_size += g_prime(t, c.pieces, a).size();
  }

  auto const report = verify_certificate(c, max_size);
  if (!report.ok()) {
    raise(ErrorKind::ClaimFailure, report.failures.front());
  }
  return c;
}

StructureTriple approximation_triple(ApproximationCertificate const& c) {
  StructureTriple const& t = c.triple;
  std::vector<Elem>      image(c.phi);
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
    raise(ErrorKind::ClaimFailure, "phi is not injective");
  }
  auto                  lambda = Semilattice::from_subset(t.lambda.monoid(), image);
  std::vector<Subgroup> subgroups;
  for (Elem e : image) {
    Elem const a = c.d[position(c.phi, e)];
    subgroups.push_back(g_prime(t, c.pieces, a));
  }
  return StructureTriple{std::move(lambda), t.group, std::move(subgroups)};
}

ApproxReport verify_certificate(ApproximationCertificate const& c, std::size_t max_size) {
  ApproxReport r;
  auto         fail = [&](std::string msg) { r.failures.push_back(std::move(msg)); };

  StructureTriple const& t = c.triple;
  try {
    validate_triple(t, false);
  } catch (Error const& err) {
    fail(std::string("invalid triple: ") + err.what());
    return r;
  }
  Semilattice const& s        = t.lambda;
  auto const         realized = realize_from_triple(t);
  for (auto [e, g] : c.x) {
    if (!realized.index_of(e, g)) {
      fail("X contains (" + name(e) + ", " + to_string(t.group, g)
           + ") which is not an element of M");
      return r;
    }
  }
  if (c.m != order_lcm(t, c.x)) {
    fail("m is not the lcm of the orders of X");
  }
  if (c.bound != approximation_bound(c.m, c.x.size())) {
    fail("the recorded bound is not (m + 1)^(2^n n)");
  }
  auto const gm = restricted_subgroups(t, c.m);
  if (c.d != generated_d(t, c.x)) {
    fail("D is not the sublattice generated by the e_x and 0");
    return r;
  }

  // pieces
  auto const irr = d_irreducibles(s, c.d, max_size);
  if (irr.size() != c.pieces.size()) {
    fail("wrong number of join-irreducibles of D");
    return r;
  }
  std::vector<Elem> psi;
  for (std::size_t i = 0; i < irr.size(); ++i) {
    auto const& j = irr[i];
    auto const& q = c.pieces[i];
    std::string const at = " at P = " + name(q.p);
    if (j.p != q.p || j.lower != q.lower || j.dagger != q.dagger) {
      fail("join-irreducible data of D does not match" + at);
      return r;
    }
    if (!(q.h.parent() == t.group) || !(q.h_prime.parent() == t.group)) {
      fail("H_P or H'_P lives in a different group" + at);
      return r;
    }
    if (!q.h.is_subset_of(gm[q.p]) || q.h.size() * gm[q.lower].size() != gm[q.p].size()
        || subgroup_intersection(q.h, gm[q.lower]).size() != 1) {
      fail("H_P is not a complement of G_{P_*} in G_P" + at);
    }
    if (!q.h_prime.is_subset_of(q.h)) {
      fail("H'_P is not contained in H_P" + at);
    }
    if (!s.leq(q.u, q.p) || !s.leq(q.v, q.p) || !s.leq(q.w, q.p)) {
      fail("u_P, v_P, w_P must lie below P" + at);
    }
    if (!q.h_prime.is_subset_of(gm[q.v])) {
      fail("H'_P is not contained in G_{v_P}" + at);
    }
    if (s.leq(q.w, q.dagger)) {
      fail("claim (1): w_P lies below P†" + at);
    }
    Elem const p = s.join(s.join(q.u, q.v), q.w);
    if (p != q.psi) {
      fail("psi(P) != u_P ∨ v_P ∨ w_P" + at);
    }
    psi.push_back(p);
  }
  for (auto [e, g] : c.x) {
    Elem join = 0;
    for (auto const& q : c.pieces) {
      if (s.leq(q.p, e)) {
        join = s.join(join, q.u);
      }
    }
    if (join != e) {
      fail("e_x != ∨ u_P for e_x = " + name(e));
    }
  }

  // phi and its claims
  std::size_t const nd = c.d.size();
  std::vector<Elem> phi(nd, 0);
  for (std::size_t a = 0; a < nd; ++a) {
    for (std::size_t i = 0; i < c.pieces.size(); ++i) {
      if (s.leq(c.pieces[i].p, c.d[a])) {
        phi[a] = s.join(phi[a], psi[i]);
      }
    }
  }
  if (phi != c.phi) {
    fail("phi does not match the join of psi over J_D(A)");
  }
  for (std::size_t a = 0; a < nd; ++a) {
    for (std::size_t b = 0; b < nd; ++b) {
      Elem const ab = s.join(c.d[a], c.d[b]);
      if (phi[position(c.d, ab)] != s.join(phi[a], phi[b])) {
        fail("claim (1): phi does not preserve the join of " + name(c.d[a]) + " and "
             + name(c.d[b]));
      }
      if (!s.leq(c.d[a], c.d[b]) && s.leq(phi[a], phi[b])) {
        fail("claim (1): phi is not an order embedding at " + name(c.d[a]) + ", "
             + name(c.d[b]));
      }
    }
    if (!s.leq(phi[a], c.d[a])) {
      fail("claim (3): phi(A) is not below A for A = " + name(c.d[a]));
    }
  }
  std::vector<Elem> image(phi);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  try {
    auto const sub = Semilattice::from_subset(s.monoid(), image);
    if (!is_distributive(sub, max_size)) {
      fail("claim (2): phi(D) is not distributive");
    }
  } catch (Error const& err) {
    fail(std::string("claim (2): phi(D) is not a subsemilattice: ") + err.what());
  }
  for (auto [e, g] : c.x) {
    if (phi[position(c.d, e)] != e) {
      fail("claim (4): phi(e_x) != e_x for e_x = " + name(e));
    }
  }
  if (!r.ok()) {
    return r;
  }

  // G'_A and N
  std::vector<Subgroup> gp;
  for (Elem a : c.d) {
    gp.push_back(g_prime(t, c.pieces, a));
  }
  for (std::size_t a = 0; a < nd; ++a) {
    std::vector<Subgroup> parts;
    for (auto const& q : c.pieces) {
      if (s.leq(q.p, c.d[a])) {
        parts.push_back(q.h_prime);
      }
    }
    try {
      internal_projections(gp[a], std::move(parts));
    } catch (Error const& err) {
      fail("G'_A is not the direct sum of the H'_P for A = " + name(c.d[a]) + ": "
           + err.what());
    }
    if (!gp[a].is_subset_of(t.subgroups[phi[a]])) {
      fail("N is not contained in M: G'_A is not inside G_phi(A) for A = " + name(c.d[a]));
    }
    for (std::size_t b = 0; b < nd; ++b) {
      Elem const join = s.join(c.d[a], c.d[b]);
      Elem const meet = s.meet(c.d[a], c.d[b]);
      if (!(subgroup_sum(gp[a], gp[b]) == gp[position(c.d, join)])) {
        fail("G'_A + G'_B != G'_{A∨B} for A = " + name(c.d[a]) + ", B = " + name(c.d[b]));
      }
      if (!(subgroup_intersection(gp[a], gp[b]) == gp[position(c.d, meet)])) {
        fail("G'_A ∩ G'_B != G'_{A∧B} for A = " + name(c.d[a]) + ", B = " + name(c.d[b]));
      }
      if (s.leq(c.d[a], c.d[b]) && !is_pure(gp[a], gp[b])) {
        fail("G'_A is not pure in G'_B for A = " + name(c.d[a]) + ", B = " + name(c.d[b]));
      }
    }
  }
  for (auto [e, g] : c.x) {
    if (!gp[position(c.d, e)].contains(g)) {
      fail("X is not contained in N: (" + name(e) + ", " + to_string(t.group, g)
           + ") is missing");
    }
  }
  std::size_t n_size = 0;
  for (auto const& g : gp) {
    n_size += g.size();
  }
  if (n_size != c.n_size) {
    fail("|N| = " + std::to_string(n_size) + " but the certificate records "
         + std::to_string(c.n_size));
  }
  if (n_size > c.bound) {
    fail("|N| = " + std::to_string(n_size) + " exceeds the bound " + std::to_string(c.bound));
  }
  if (!r.ok()) {
    return r;
  }
  auto const n_monoid = realize_from_triple(approximation_triple(c)).monoid();
  auto const rep      = rep_report(n_monoid, max_size);
  if (!rep.in_rep()) {
    fail("N fails a decider: "
         + (rep.witnesses.empty() ? std::string("unknown") : rep.witnesses.front()));
  }
  return r;
}

}  // namespace refmon
