#include <algorithm>
#include <string>
#include <vector>

#include "refmon/error.hpp"
#include "refmon/monoid.hpp"

namespace refmon {

namespace {

  void check_size(Monoid const& m, std::size_t max_size, char const* what) {
    if (m.size() > max_size) {
      raise(ErrorKind::SizeLimitExceeded,
            std::string(what) + " on a monoid of size " + std::to_string(m.size())
                + " exceeds the limit " + std::to_string(max_size)
                + " (raise it with max_size / --max-size)");
    }
  }

  // For every pair (a, b), the ascending list of c with a + c = b, stored in
  // compressed rows.
  class DifferenceIndex {
   public:
    explicit DifferenceIndex(Monoid const& m) : _n(m.size()) {
      std::size_t const n = _n;
      _offset.assign(n * n + 1, 0);
      for (Elem a = 0; a < n; ++a) {
        for (Elem c = 0; c < n; ++c) {
          ++_offset[a * n + m.add(a, c) + 1];
        }
      }
      for (std::size_t i = 1; i < _offset.size(); ++i) {
        _offset[i] += _offset[i - 1];
      }
      _data.resize(n * n);
      std::vector<std::size_t> fill(_offset.begin(), _offset.end() - 1);
      for (Elem a = 0; a < n; ++a) {
        for (Elem c = 0; c < n; ++c) {
          _data[fill[a * n + m.add(a, c)]++] = c;
        }
      }
      _below.resize(n);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          if (!solutions(a, b).empty()) {
            _below[b].push_back(a);
          }
        }
      }
    }

    // ascending list of a with a <= b
    std::span<Elem const> below(Elem b) const noexcept {
      return _below[b];
    }

    std::span<Elem const> solutions(Elem a, Elem b) const noexcept {
      std::size_t const i = static_cast<std::size_t>(a) * _n + b;
      return {_data.data() + _offset[i], _data.data() + _offset[i + 1]};
    }

   private:
    std::size_t              _n;
    std::vector<std::size_t> _offset;
    std::vector<Elem>        _data;
    std::vector<std::vector<Elem>> _below;
  };

  std::optional<RefinementMatrix> search(Monoid const&          m,
                                         DifferenceIndex const& diff,
                                         Elem                   x1,
                                         Elem                   x2,
                                         Elem                   y1,
                                         Elem                   y2) {
    for (Elem z11 : diff.below(x1)) {
      auto row = diff.solutions(z11, x1);  // z12
      if (row.empty()) {
        continue;
      }
      auto col = diff.solutions(z11, y1);  // z21
      if (col.empty()) {
        continue;
      }
      for (Elem z12 : row) {
        for (Elem z21 : col) {
          for (Elem z22 : diff.solutions(z21, x2)) {
            if (m.add(z12, z22) == y2) {
              return RefinementMatrix{z11, z12, z21, z22};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace

std::optional<RefinementMatrix> find_refinement(Monoid const& m,
                                                Elem          x1,
                                                Elem          x2,
                                                Elem          y1,
                                                Elem          y2,
                                                std::size_t   max_size) {
  check_size(m, max_size, "find_refinement");
  for (Elem v : {x1, x2, y1, y2}) {
    if (v >= m.size()) {
      raise(ErrorKind::InvalidInput, "element " + std::to_string(v) + " out of range");
    }
  }
  if (m.add(x1, x2) != m.add(y1, y2)) {
    raise(ErrorKind::PreconditionViolated,
          "x1 + x2 != y1 + y2, nothing to refine");
  }
  DifferenceIndex const diff(m);
  return search(m, diff, x1, x2, y1, y2);
}

std::optional<RefinementFailure> refinement_counterexample(Monoid const& m,
                                                           std::size_t   max_size) {
  check_size(m, max_size, "refinement search");
  std::size_t const n = m.size();
  DifferenceIndex const diff(m);

  // pairs[s] = all (a, b) with a <= b and a + b = s
  std::vector<std::vector<std::pair<Elem, Elem>>> pairs(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      pairs[m.add(a, b)].emplace_back(a, b);
    }
  }
  // Swapping the two rows, the two columns, or transposing the matrix maps
  // refinements to refinements, so only ordered quadruples need checking.
  for (Elem s = 0; s < n; ++s) {
    auto const& ps = pairs[s];
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = i; j < ps.size(); ++j) {
        auto [x1, x2] = ps[i];
        auto [y1, y2] = ps[j];
        if (!search(m, diff, x1, x2, y1, y2)) {
          return RefinementFailure{x1, x2, y1, y2};
        }
      }
    }
  }
  return std::nullopt;
}

bool has_refinement(Monoid const& m, std::size_t max_size) {
  return !refinement_counterexample(m, max_size).has_value();
}

}  // namespace refmon
