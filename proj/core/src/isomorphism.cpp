#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "refmon/error.hpp"
#include "refmon/monoid.hpp"

namespace refmon {

namespace {

  using Profile = std::array<std::uint32_t, 5>;

  // Isomorphism-invariant data attached to every element; candidate images
  // must carry the same profile.
  std::vector<Profile> profiles(Monoid const& m) {
    std::size_t const    n = m.size();
    std::vector<Profile> out(n, Profile{});
    for (Elem x = 0; x < n; ++x) {
      out[x][0] = element_order(m, x).value_or(0);
      out[x][1] = is_idempotent(m, x) ? 1 : 0;
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        Elem const s = m.add(x, y);
        if (s == x) {
          ++out[x][2];  // stabiliser size
        }
        ++out[s][3];  // number of ordered decompositions
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (leq(m, y, x)) {
          ++out[x][4];  // size of the down-set
        }
      }
    }
    return out;
  }

  std::vector<Elem> greedy_generators(Monoid const& m) {
    std::vector<char> in(m.size(), 0);
    in[0] = 1;
    std::vector<Elem> members{0};
    std::vector<Elem> gens;
    for (Elem x = 1; x < m.size(); ++x) {
      if (in[x]) {
        continue;
      }
      gens.push_back(x);
      // re-close under all generators
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (Elem g : gens) {
          Elem const s = m.add(members[i], g);
          if (!in[s]) {
            in[s] = 1;
            members.push_back(s);
          }
        }
      }
    }
    return gens;
  }

  class IsoSearch {
   public:
    IsoSearch(Monoid const& a, Monoid const& b)
        : _a(a),
          _b(b),
          _pa(profiles(a)),
          _pb(profiles(b)),
          _gens(greedy_generators(a)),
          _image(_gens.size(), 0) {}

    std::optional<std::vector<Elem>> run() {
      auto sa = _pa, sb = _pb;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) {
        return std::nullopt;
      }
      if (backtrack(0)) {
        return _map;
      }
      return std::nullopt;
    }

   private:
    bool backtrack(std::size_t depth) {
      if (!extend(depth)) {
        return false;
      }
      if (depth == _gens.size()) {
        return true;
      }
      for (Elem c = 0; c < _b.size(); ++c) {
        if (_pb[c] != _pa[_gens[depth]]) {
          continue;
        }
        _image[depth] = c;
        if (backtrack(depth + 1)) {
          return true;
        }
      }
      return false;
    }

    // Close the partial map over the first `depth` generators; false on a
    // clash, a non-injective value or a profile mismatch.
    bool extend(std::size_t depth) {
      Elem const unset = static_cast<Elem>(-1);
      _map.assign(_a.size(), unset);
      std::vector<Elem> preimage(_b.size(), unset);
      _map[0]     = 0;
      preimage[0] = 0;
      std::vector<Elem> queue{0};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        Elem const x = queue[i];
        for (std::size_t k = 0; k < depth; ++k) {
          Elem const y  = _a.add(x, _gens[k]);
          Elem const fy = _b.add(_map[x], _image[k]);
          if (_map[y] == unset) {
            if (preimage[fy] != unset || _pa[y] != _pb[fy]) {
              return false;
            }
            _map[y]      = fy;
            preimage[fy] = y;
            queue.push_back(y);
          } else if (_map[y] != fy) {
            return false;
          }
        }
      }
      return true;
    }

    Monoid const&        _a;
    Monoid const&        _b;
    std::vector<Profile> _pa, _pb;
    std::vector<Elem>    _gens;
    std::vector<Elem>    _image;
    std::vector<Elem>    _map;
  };

}  // namespace

std::optional<MonoidHom> find_isomorphism(Monoid const& m1,
                                          Monoid const& m2,
                                          std::size_t   max_size) {
  if (std::max(m1.size(), m2.size()) > max_size) {
    raise(ErrorKind::SizeLimitExceeded,
          "isomorphism search on monoids of size " + std::to_string(m1.size()) + "/"
              + std::to_string(m2.size()) + " exceeds the limit "
              + std::to_string(max_size));
  }
  if (m1.size() != m2.size()) {
    return std::nullopt;
  }
  auto map = IsoSearch(m1, m2).run();
  if (!map) {
    return std::nullopt;
  }
  auto h = MonoidHom::validate(m1, m2, std::move(*map));
  if (!h.is_bijective()) {
    raise(ErrorKind::InternalInconsistency, "isomorphism search produced a non-bijection");
  }
  return h;
}

}  // namespace refmon
