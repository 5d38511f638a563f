#include "abext/lr.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace abext {

  namespace {

    // Fills the skew shape outer/inner in reverse reading order (rows top to
    // bottom, each row right to left). Along that order the row condition
    // says values are weakly decreasing, the column condition compares with
    // the already-filled cell above, and the lattice condition is a running
    // count check, so every constraint is decided at placement time.
    class SkewFiller {
     public:
      SkewFiller(Partition const& inner,
                 Partition const& content,
                 Partition const& outer)
          : _inner(inner), _content(content), _outer(outer) {
        for (std::size_t r = 0; r < outer.length(); ++r) {
          _rows.emplace_back(static_cast<std::size_t>(outer[r]), 0);
          for (auto c = outer[r] - 1; c >= inner[r]; --c) {
            _cells.emplace_back(r, static_cast<std::size_t>(c));
          }
        }
        _used.assign(content.length() + 1, 0);
      }

      std::uint64_t count(bool stop_at_first) {
        _stop_at_first = stop_at_first;
        _found         = 0;
        place(0);
        return _found;
      }

     private:
      void place(std::size_t index) {
        if (index == _cells.size()) {
          ++_found;
          return;
        }
        auto const [r, c] = _cells[index];
        // right neighbour in the same row was placed just before, if it is a
        // skew cell
        int max_value = static_cast<int>(_content.length());
        if (c + 1 < _rows[r].size()) {
          max_value = std::min(max_value, _rows[r][c + 1]);
        }
        int min_value = 1;
        if (r > 0 && static_cast<int>(c) >= _inner[r - 1]) {
          min_value = _rows[r - 1][c] + 1;
        }
        for (int v = min_value; v <= max_value; ++v) {
          auto const vi = static_cast<std::size_t>(v);
          if (_used[vi] >= static_cast<std::size_t>(_content[vi - 1])) {
            continue;
          }
          if (v > 1 && _used[vi - 1] <= _used[vi]) {
            continue;
          }
          _rows[r][c] = v;
          ++_used[vi];
          place(index + 1);
          --_used[vi];
          _rows[r][c] = 0;
          if (_stop_at_first && _found > 0) {
            return;
          }
        }
      }

      Partition const& _inner;
      Partition const& _content;
      Partition const& _outer;

      std::vector<std::vector<int>>                  _rows;
      std::vector<std::pair<std::size_t, std::size_t>> _cells;
      std::vector<std::size_t>                       _used;
      bool                                           _stop_at_first = false;
      std::uint64_t                                  _found         = 0;
    };

    bool admissible(Partition const& inner,
                    Partition const& content,
                    Partition const& outer) {
      return outer.size() == inner.size() + content.size()
             && contains(outer, inner) && contains(outer, content);
    }

    // Candidate outer shapes: row i lies in [max(lambda_i, nu_i), lambda_1 +
    // nu_1], the rows are weakly decreasing, there are at most len(lambda) +
    // len(nu) of them, and the total is |lambda| + |nu|.
    void candidates_rec(Partition const&        lambda,
                        Partition const&        nu,
                        std::size_t             row,
                        std::size_t             max_rows,
                        int                     cap,
                        long long               remaining,
                        std::vector<long long>& prefix,
                        std::vector<Partition>& out) {
      if (remaining == 0) {
        if (row >= lambda.length() && row >= nu.length()) {
          out.emplace_back(std::span<const long long>(prefix));
        }
        return;
      }
      if (row == max_rows) {
        return;
      }
      int const floor = std::max({lambda[row], nu[row], 1});
      int const top   = static_cast<int>(std::min<long long>(cap, remaining));
      for (int v = top; v >= floor; --v) {
        prefix.push_back(v);
        candidates_rec(
            lambda, nu, row + 1, max_rows, v, remaining - v, prefix, out);
        prefix.pop_back();
      }
    }

    struct PairKey {
      Partition lambda;
      Partition nu;
      bool      operator==(PairKey const&) const = default;
    };

    struct PairKeyHash {
      std::size_t operator()(PairKey const& k) const noexcept {
        PartitionHash h;
        return h(k.lambda) * 31u + h(k.nu);
      }
    };

    class ExpansionCache {
     public:
      Expansion const* find(PairKey const& key) const {
        std::shared_lock lock(_mutex);
        auto             it = _table.find(key);
        return it == _table.end() ? nullptr : &it->second;
      }

      Expansion const& insert(PairKey key, Expansion value) {
        std::unique_lock lock(_mutex);
        // node-based map: references stay valid across rehashing
        return _table.try_emplace(std::move(key), std::move(value))
            .first->second;
      }

     private:
      mutable std::shared_mutex                              _mutex;
      std::unordered_map<PairKey, Expansion, PairKeyHash>    _table;
    };

    ExpansionCache& expansion_cache() {
      static ExpansionCache cache;
      return cache;
    }

    Expansion compute_expansion(Partition const& lambda, Partition const& nu) {
      Expansion              result;
      std::vector<Partition> candidates;
      std::vector<long long> prefix;
      auto const total = static_cast<long long>(lambda.size() + nu.size());
      candidates_rec(lambda,
                     nu,
                     0,
                     lambda.length() + nu.length(),
                     lambda[0] + nu[0],
                     total,
                     prefix,
                     candidates);
      for (auto const& mu : candidates) {
        SkewFiller filler(lambda, nu, mu);
        if (auto c = filler.count(false); c > 0) {
          result.terms.emplace(mu, c);
        }
      }
      return result;
    }

  }  // namespace

  std::set<Partition> Expansion::support() const {
    std::set<Partition> out;
    for (auto const& [mu, c] : terms) {
      out.insert(mu);
    }
    return out;
  }

  std::uint64_t Expansion::multiplicity(Partition const& mu) const {
    auto it = terms.find(mu);
    return it == terms.end() ? 0 : it->second;
  }

  std::uint64_t lr_coefficient(Partition const& inner,
                               Partition const& content,
                               Partition const& outer) {
    if (!admissible(inner, content, outer)) {
      return 0;
    }
    return SkewFiller(inner, content, outer).count(false);
  }

  bool lr_positive(Partition const& inner,
                   Partition const& content,
                   Partition const& outer) {
    if (!admissible(inner, content, outer)) {
      return false;
    }
    return SkewFiller(inner, content, outer).count(true) > 0;
  }

  Expansion lr_expand(Partition const& lambda, Partition const& nu) {
    PairKey key{lambda, nu};
    auto&   cache = expansion_cache();
    if (auto const* hit = cache.find(key)) {
      return *hit;
    }
    return cache.insert(std::move(key), compute_expansion(lambda, nu));
  }

}  // namespace abext
