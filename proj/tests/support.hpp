#pragma once

// Independent reference implementations used only by the tests. None of
// this calls into the LR engine, the matcher or the enumerator.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "abext/abelian_group.hpp"
#include "abext/extensions.hpp"
#include "abext/partition.hpp"

namespace abext::testing {

  inline std::uint64_t factorial(std::size_t n) {
    std::uint64_t out = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      out *= i;
    }
    return out;
  }

  inline std::uint64_t binomial(std::size_t n, std::size_t k) {
    std::uint64_t out = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      out = out * (n - k + i) / i;
    }
    return out;
  }

  // Standard Young tableaux of shape lambda, by the hook-length formula.
  inline std::uint64_t syt_count(Partition const& lambda) {
    auto const    conj = lambda.conjugate();
    std::uint64_t hooks = 1;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
      for (int j = 0; j < lambda[i]; ++j) {
        auto const arm = lambda[i] - j - 1;
        auto const leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
        hooks *= static_cast<std::uint64_t>(arm + leg + 1);
      }
    }
    return factorial(lambda.size()) / hooks;
  }

  // Littlewood-Richardson coefficient by plain search: fill the cells of
  // outer/inner row by row, keep rows weakly increasing and columns strictly
  // increasing, then test content and the lattice property of the reverse
  // reading word once the filling is complete.
  class BruteLR {
   public:
    BruteLR(Partition inner, Partition content, Partition outer)
        : _inner(std::move(inner)),
          _content(std::move(content)),
          _outer(std::move(outer)) {
      for (std::size_t r = 0; r < _outer.length(); ++r) {
        for (int c = _inner[r]; c < _outer[r]; ++c) {
          _cells.emplace_back(r, c);
        }
      }
    }

    std::uint64_t count() {
      if (_outer.size() != _inner.size() + _content.size()
          || !contains(_outer, _inner)) {
        return 0;
      }
      _value.clear();
      _total = 0;
      fill(0);
      return _total;
    }

   private:
    void fill(std::size_t at) {
      if (at == _cells.size()) {
        _total += valid();
        return;
      }
      auto const [r, c] = _cells[at];
      for (int v = 1; v <= static_cast<int>(_content.length()); ++v) {
        if (c > _inner[r]) {
          if (_value.at({r, c - 1}) > v) {
            continue;
          }
        }
        if (r > 0 && c >= _inner[r - 1]) {
          if (_value.at({r - 1, c}) >= v) {
            continue;
          }
        }
        _value[{r, c}] = v;
        fill(at + 1);
        _value.erase({r, c});
      }
    }

    bool valid() const {
      std::vector<int> seen(_content.length() + 1, 0);
      for (std::size_t r = 0; r < _outer.length(); ++r) {
        for (int c = _outer[r] - 1; c >= _inner[r]; --c) {
          int const v = _value.at({r, c});
          ++seen[static_cast<std::size_t>(v)];
          if (v > 1 && seen[static_cast<std::size_t>(v)]
                           > seen[static_cast<std::size_t>(v - 1)]) {
            return false;
          }
        }
      }
      for (std::size_t i = 0; i < _content.length(); ++i) {
        if (seen[i + 1] != _content[i]) {
          return false;
        }
      }
      return true;
    }

    Partition                                 _inner, _content, _outer;
    std::vector<std::pair<std::size_t, int>>  _cells;
    std::map<std::pair<std::size_t, int>, int> _value;
    std::uint64_t                             _total = 0;
  };

  inline std::uint64_t brute_lr(Partition const& inner,
                                Partition const& content,
                                Partition const& outer) {
    return BruteLR(inner, content, outer).count();
  }

  // Every mu containing lambda with mu/lambda a horizontal strip of k boxes:
  // row i may grow by at most lambda[i-1] - lambda[i].
  inline std::set<Partition> horizontal_strips(Partition const& lambda, int k) {
    std::set<Partition>   out;
    std::vector<long long> rows(lambda.parts().begin(), lambda.parts().end());
    rows.push_back(0);
    std::vector<long long> grown = rows;
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
      if (i == rows.size()) {
        if (left == 0) {
          out.insert(make_partition(grown));
        }
        return;
      }
      long long const room = i == 0 ? left : rows[i - 1] - rows[i];
      for (long long add = 0; add <= std::min<long long>(room, left); ++add) {
        grown[i] = rows[i] + add;
        self(self, i + 1, left - static_cast<int>(add));
      }
      grown[i] = rows[i];
    };
    rec(rec, 0, k);
    return out;
  }

  // All partitions with at most `max_size` boxes.
  inline std::vector<Partition> partitions_up_to(std::size_t max_size) {
    std::vector<Partition> out;
    for (std::size_t n = 0; n <= max_size; ++n) {
      for (auto const& p : partitions_of(n)) {
        out.push_back(p);
      }
    }
    return out;
  }

  // Every abelian group of order exactly n, built from the factorization.
  inline std::vector<AbelianGroup> groups_of_order(std::uint64_t n) {
    std::vector<AbelianGroup> out{AbelianGroup{}};
    for (auto const& [p, e] : factorize(n)) {
      std::vector<AbelianGroup> next;
      for (auto const& g : out) {
        for (auto const& type : partitions_of(static_cast<std::size_t>(e))) {
          next.push_back(direct_product(g, AbelianGroup::p_group(p, type)));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  inline std::vector<AbelianGroup> groups_up_to(std::uint64_t bound) {
    std::vector<AbelianGroup> out;
    for (std::uint64_t n = 1; n <= bound; ++n) {
      for (auto& g : groups_of_order(n)) {
        out.push_back(std::move(g));
      }
    }
    return out;
  }

  inline GroupSet to_set(std::vector<char const*> const& texts) {
    GroupSet out;
    for (auto const* t : texts) {
      out.insert(parse_group(t));
    }
    return out;
  }

}  // namespace abext::testing
