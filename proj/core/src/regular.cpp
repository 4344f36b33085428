#include "refmon/regular.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "refmon/error.hpp"
#include "refmon/semilattice.hpp"

namespace refmon {

////////////////////////////////////////////////////////////////////////////
// Decomposition
////////////////////////////////////////////////////////////////////////////

std::span<Elem const> GroupDecomposition::group(Elem e) const {
  auto it = std::lower_bound(_idem.begin(), _idem.end(), e);
  if (it == _idem.end() || *it != e) {
    raise(ErrorKind::InvalidInput, "element " + std::to_string(e) + " is not idempotent");
  }
  return _groups[it - _idem.begin()];
}

std::uint32_t GroupDecomposition::group_exponent(Elem e) const {
  std::uint32_t exp = 1;
  for (Elem x : group(e)) {
    exp = std::lcm(exp, element_order(_m, x).value_or(1));
  }
  return exp;
}

GroupDecomposition decompose_regular(Monoid const& m) {
  std::size_t const  n = m.size();
  GroupDecomposition out;
  out._m = m;
  out._d.resize(n);
  out._inv.resize(n);
  for (Elem x = 0; x < n; ++x) {
    Elem const x2 = m.add(x, x);
    Elem       y  = 0;
    while (y < n && m.add(x2, y) != x) {
      ++y;
    }
    if (y == n) {
      raise(ErrorKind::NotRegular,
            "2x <= x fails for x = " + std::to_string(x));
    }
    Elem const e = m.add(x, y);
    // x + 2y is an inverse of x up to adding e
    Elem const inv = m.add(m.add(x, m.add(y, y)), e);
    if (m.add(e, e) != e || m.add(x, inv) != e || m.add(x, e) != x) {
      raise(ErrorKind::InternalInconsistency,
            "group decomposition failed at x = " + std::to_string(x));
    }
    out._d[x]   = e;
    out._inv[x] = inv;
  }
  out._idem = idempotents(m);
  out._groups.resize(out._idem.size());
  for (Elem x = 0; x < n; ++x) {
    auto it = std::lower_bound(out._idem.begin(), out._idem.end(), out._d[x]);
    out._groups[it - out._idem.begin()].push_back(x);
  }
  for (Elem e : out._idem) {
    out._top = m.add(out._top, e);
  }
  return out;
}

////////////////////////////////////////////////////////////////////////////
// Deciders
////////////////////////////////////////////////////////////////////////////

Verdict<EmbWitness> check_emb(GroupDecomposition const& d) {
  Monoid const& m = d.monoid();
  for (Elem e : d.idempotents()) {
    for (Elem f : d.idempotents()) {
      if (m.add(e, f) != f) {
        continue;
      }
      for (Elem x : d.group(e)) {
        if (x != e && m.add(x, f) == f) {
          return {false, EmbWitness{e, f, x}};
        }
      }
    }
  }
  return {};
}

Verdict<PurWitness> check_pur(GroupDecomposition const& d) {
  Monoid const& m = d.monoid();
  for (Elem e : d.idempotents()) {
    for (Elem f : d.idempotents()) {
      if (m.add(e, f) != f) {
        continue;
      }
      auto const          ge  = d.group(e);
      auto const          gf  = d.group(f);
      std::uint32_t const exp = d.group_exponent(f);
      for (std::uint32_t k = 1; k <= exp; ++k) {
        std::set<Elem> reachable;  // k (z + f) for z in M_e
        for (Elem z : ge) {
          reachable.insert(m.multiple(k, m.add(z, f)));
        }
        for (Elem y : gf) {
          Elem const ky = m.multiple(k, y);
          for (Elem x : ge) {
            if (m.add(x, f) == ky && !reachable.count(ky)) {
              return {false, PurWitness{e, f, x, y, k}};
            }
          }
        }
      }
    }
  }
  return {};
}

Verdict<MvpWitness> check_mvp(GroupDecomposition const& d) {
  Monoid const& m = d.monoid();
  std::size_t const n = m.size();
  auto const idem = d.idempotents();
  for (std::size_t i = 0; i < idem.size(); ++i) {
    for (std::size_t j = i; j < idem.size(); ++j) {
      Elem const     e = idem[i], f = idem[j];
      std::set<Elem> sums;
      for (Elem a : d.group(e)) {
        for (Elem b : d.group(f)) {
          sums.insert(m.add(a, b));
        }
      }
      for (Elem g : d.group(m.add(e, f))) {
        if (!sums.count(g)) {
          return {false, MvpWitness{'a', e, f, g, 0}};
        }
      }
    }
  }
  for (Elem e : idem) {
    for (Elem f : idem) {
      std::set<std::pair<Elem, Elem>> lifted;
      for (Elem w = 0; w < n; ++w) {
        lifted.emplace(m.add(w, e), m.add(w, f));
      }
      for (Elem u : d.group(e)) {
        for (Elem v : d.group(f)) {
          if (m.add(u, f) == m.add(v, e) && !lifted.count({u, v})) {
            return {false, MvpWitness{'b', e, f, u, v}};
          }
        }
      }
    }
  }
  return {};
}

std::string describe(EmbWitness const& w) {
  std::ostringstream os;
  os << "emb fails: e = " << w.e << " <= f = " << w.f << ", x = " << w.x
     << " in M_e with x + f = f but x != e";
  return os.str();
}

std::string describe(PurWitness const& w) {
  std::ostringstream os;
  os << "pur fails: e = " << w.e << " <= f = " << w.f << ", x = " << w.x << " in M_e, y = "
     << w.y << " in M_f, x + f = " << w.m << "y but no z in M_e has x + f = " << w.m
     << "(z + f)";
  return os.str();
}

std::string describe(MvpWitness const& w) {
  std::ostringstream os;
  if (w.clause == 'a') {
    os << "MVP (a) fails: e = " << w.e << ", f = " << w.f << ", element " << w.u
       << " of M_{e+f} is not in M_e + M_f";
  } else {
    os << "MVP (b) fails: e = " << w.e << ", f = " << w.f << ", u = " << w.u << ", v = " << w.v
       << " satisfy u + f = v + e but no w has u = w + e and v = w + f";
  }
  return os.str();
}

RefinementCharacterization characterize_refinement(Monoid const& m, std::size_t max_size) {
  auto const                 d = decompose_regular(m);
  RefinementCharacterization r{};
  r.brute                      = has_refinement(m, max_size);
  auto const lambda            = Semilattice::from_subset(m, d.idempotents());
  r.distributive               = is_distributive(lambda, max_size);
  r.mvp                        = check_mvp(d).holds;
  r.via_theorem                = r.distributive && r.mvp;
  if (r.brute != r.via_theorem) {
    raise(ErrorKind::InternalInconsistency,
          std::string("exhaustive refinement says ") + (r.brute ? "true" : "false")
              + " but distributivity and MVP say " + (r.via_theorem ? "true" : "false"));
  }
  return r;
}

////////////////////////////////////////////////////////////////////////////
// Generalized integers
////////////////////////////////////////////////////////////////////////////

namespace {

  std::map<std::uint64_t, std::uint32_t> factorize(std::uint64_t n) {
    std::map<std::uint64_t, std::uint32_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      while (n % p == 0) {
        ++out[p];
        n /= p;
      }
    }
    if (n > 1) {
      ++out[n];
    }
    return out;
  }

  bool is_prime(std::uint64_t p) {
    return p >= 2 && factorize(p).size() == 1 && factorize(p).begin()->second == 1;
  }

}  // namespace

GeneralizedInteger GeneralizedInteger::all_infinite() {
  GeneralizedInteger g;
  g._all_infinite = true;
  return g;
}

GeneralizedInteger GeneralizedInteger::from_integer(std::uint64_t n) {
  if (n == 0) {
    raise(ErrorKind::InvalidInput, "a generalized integer from 0 is not defined");
  }
  GeneralizedInteger g;
  for (auto [p, k] : factorize(n)) {
    g._primes[p] = k;
  }
  return g;
}

GeneralizedInteger GeneralizedInteger::from_primes(
    std::map<std::uint64_t, std::optional<std::uint32_t>> primes) {
  GeneralizedInteger g;
  for (auto [p, k] : primes) {
    if (!is_prime(p)) {
      raise(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
    }
    if (!k || *k > 0) {
      g._primes[p] = k;
    }
  }
  return g;
}

bool GeneralizedInteger::divides(std::uint64_t n) const {
  if (n == 0) {
    return false;
  }
  if (_all_infinite) {
    return true;
  }
  for (auto [p, k] : factorize(n)) {
    auto it = _primes.find(p);
    if (it == _primes.end()) {
      return false;
    }
    if (it->second && *it->second < k) {
      return false;
    }
  }
  return true;
}

std::string GeneralizedInteger::to_string() const {
  if (_all_infinite) {
    return "prod p^inf";
  }
  if (_primes.empty()) {
    return "1";
  }
  std::ostringstream os;
  bool               first = true;
  for (auto [p, k] : _primes) {
    os << (first ? "" : " * ") << p << "^" << (k ? std::to_string(*k) : "inf");
    first = false;
  }
  return os.str();
}

Submonoid restrict_orders(Monoid const& m, GeneralizedInteger const& g) {
  decompose_regular(m);  // throws NotRegular
  std::vector<Elem> keep;
  for (Elem x = 0; x < m.size(); ++x) {
    auto const o = element_order(m, x);
    if (o && g.divides(*o)) {
      keep.push_back(x);
    }
  }
  return submonoid_on(m, std::move(keep));
}

////////////////////////////////////////////////////////////////////////////
// Report
////////////////////////////////////////////////////////////////////////////

RepReport rep_report(Monoid const& m, std::size_t max_size) {
  RepReport  r;
  auto const props    = property_report(m);
  r.conical           = props.conical;
  r.regular           = props.regular;
  r.strongly_periodic = props.strongly_periodic;
  if (!r.conical) {
    for (Elem x = 1; x < m.size(); ++x) {
      for (Elem y = 0; y < m.size(); ++y) {
        if (m.add(x, y) == 0) {
          r.witnesses.push_back("not conical: " + std::to_string(x) + " + "
                                + std::to_string(y) + " = 0");
          x = static_cast<Elem>(m.size());
          break;
        }
      }
    }
  }
  if (!r.strongly_periodic) {
    for (Elem x = 0; x < m.size(); ++x) {
      if (!element_order(m, x)) {
        r.witnesses.push_back("not strongly periodic: " + std::to_string(x));
        break;
      }
    }
  }
  std::optional<GroupDecomposition> d;
  if (r.regular) {
    d = decompose_regular(m);
  } else {
    for (Elem x = 0; x < m.size(); ++x) {
      if (!leq(m, m.add(x, x), x)) {
        r.witnesses.push_back("not regular: 2x <= x fails for x = " + std::to_string(x));
        break;
      }
    }
  }

  if (m.size() <= max_size) {
    r.refinement_method = "exhaustive";
    if (auto bad = refinement_counterexample(m, max_size)) {
      r.refinement = false;
      r.witnesses.push_back("refinement fails: " + std::to_string(bad->x1) + " + "
                            + std::to_string(bad->x2) + " = " + std::to_string(bad->y1)
                            + " + " + std::to_string(bad->y2) + " has no refinement");
    } else {
      r.refinement = true;
    }
  } else if (d) {
    r.refinement_method = "structural";
    auto const lambda   = Semilattice::from_subset(m, d->idempotents());
    bool const distr    = is_distributive(lambda, max_size);
    auto const mvp      = check_mvp(*d);
    r.refinement        = distr && mvp.holds;
    if (!distr) {
      r.witnesses.push_back("refinement fails: the idempotents are not distributive");
    }
    if (!mvp.holds) {
      r.witnesses.push_back("refinement fails: " + describe(*mvp.witness));
    }
  } else {
    raise(ErrorKind::SizeLimitExceeded,
          "refinement of a non-regular monoid of size " + std::to_string(m.size())
              + " needs the exhaustive search; raise max_size");
  }

  if (d) {
    auto const emb = check_emb(*d);
    auto const pur = check_pur(*d);
    r.emb          = emb.holds;
    r.pur          = pur.holds;
    if (!emb.holds) {
      r.witnesses.push_back(describe(*emb.witness));
    }
    if (!pur.holds) {
      r.witnesses.push_back(describe(*pur.witness));
    }
  }
  return r;
}

}  // namespace refmon
