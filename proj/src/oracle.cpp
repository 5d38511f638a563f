#include "abext/oracle.hpp"

#include <set>
#include <vector>

#include "abext/error.hpp"

namespace abext {

  namespace {

    int exact_log(std::uint64_t value, std::uint64_t p) {
      int e = 0;
      while (value > 1) {
        value /= p;
        ++e;
      }
      return e;
    }

    // The group Z/p^{mu_1} x ... x Z/p^{mu_r} with elements numbered in mixed
    // radix. Tables are small because the order is capped by the oracle bound.
    class ExplicitPGroup {
     public:
      ExplicitPGroup(std::uint64_t p, Partition const& mu) : _p(p) {
        _order = 1;
        for (auto e : mu.parts()) {
          std::uint64_t radix = 1;
          for (int i = 0; i < e; ++i) {
            radix *= p;
          }
          _radices.push_back(radix);
          _order *= radix;
        }
        _exponent = mu[0];
        _digits.resize(_order * _radices.size());
        for (std::size_t x = 0; x < _order; ++x) {
          auto rest = x;
          for (std::size_t i = 0; i < _radices.size(); ++i) {
            _digits[x * _radices.size() + i] = rest % _radices[i];
            rest /= _radices[i];
          }
        }
        _add.resize(_order * _order);
        for (std::size_t a = 0; a < _order; ++a) {
          for (std::size_t b = 0; b < _order; ++b) {
            std::size_t code = 0, scale = 1;
            for (std::size_t i = 0; i < _radices.size(); ++i) {
              auto d = (digit(a, i) + digit(b, i)) % _radices[i];
              code += d * scale;
              scale *= _radices[i];
            }
            _add[a * _order + b] = static_cast<std::uint32_t>(code);
          }
        }
        _times_p.resize(_order);
        _log_order.resize(_order);
        for (std::size_t x = 0; x < _order; ++x) {
          std::size_t y = x;
          for (std::uint64_t i = 1; i < p; ++i) {
            y = _add[y * _order + x];
          }
          _times_p[x] = static_cast<std::uint32_t>(y);
        }
        for (std::size_t x = 0; x < _order; ++x) {
          int         e = 0;
          std::size_t y = x;
          while (y != 0) {
            y = _times_p[y];
            ++e;
          }
          _log_order[x] = e;
        }
      }

      std::size_t order() const {
        return _order;
      }
      std::uint64_t prime() const {
        return _p;
      }
      int exponent() const {
        return _exponent;
      }
      std::uint32_t add(std::size_t a, std::size_t b) const {
        return _add[a * _order + b];
      }
      std::uint32_t times_p(std::size_t x) const {
        return _times_p[x];
      }
      int log_order(std::size_t x) const {
        return _log_order[x];
      }

     private:
      std::uint64_t digit(std::size_t x, std::size_t i) const {
        return _digits[x * _radices.size() + i];
      }

      std::uint64_t              _p;
      std::size_t                _order = 1;
      int                        _exponent = 0;
      std::vector<std::uint64_t> _radices;
      std::vector<std::uint64_t> _digits;
      std::vector<std::uint32_t> _add;
      std::vector<std::uint32_t> _times_p;
      std::vector<int>           _log_order;
    };

    struct Subgroup {
      std::vector<std::uint32_t> elements;
      std::vector<bool>          member;
    };

    Partition subgroup_type(ExplicitPGroup const& grp, Subgroup const& s) {
      std::vector<int> logs;
      for (int j = 1; j <= grp.exponent(); ++j) {
        std::uint64_t count = 0;
        for (auto x : s.elements) {
          if (grp.log_order(x) <= j) {
            ++count;
          }
        }
        logs.push_back(exact_log(count, grp.prime()));
      }
      return type_from_torsion_logs(logs);
    }

    Partition quotient_type(ExplicitPGroup const& grp, Subgroup const& s) {
      std::vector<std::uint64_t> count(static_cast<std::size_t>(grp.exponent()),
                                       0);
      for (std::size_t g = 0; g < grp.order(); ++g) {
        std::size_t x = g;
        for (int j = 1; j <= grp.exponent(); ++j) {
          x = grp.times_p(x);
          if (s.member[x]) {
            ++count[static_cast<std::size_t>(j - 1)];
          }
        }
      }
      std::vector<int> logs;
      for (auto c : count) {
        logs.push_back(exact_log(c / s.elements.size(), grp.prime()));
      }
      return type_from_torsion_logs(logs);
    }

    bool p_part_extension(std::uint64_t    p,
                          Partition const& mu,
                          Partition const& lambda,
                          Partition const& nu) {
      if (mu.size() != lambda.size() + nu.size()) {
        return false;
      }
      ExplicitPGroup grp(p, mu);
      auto const     n = grp.order();

      auto viable = [&](Subgroup const& s, bool last) {
        auto st = subgroup_type(grp, s);
        auto qt = quotient_type(grp, s);
        if (last) {
          return st == lambda && qt == nu;
        }
        return contains(lambda, st) && contains(qt, nu);
      };

      Subgroup zero{{0}, std::vector<bool>(n, false)};
      zero.member[0] = true;
      if (lambda.empty()) {
        return viable(zero, true);
      }
      std::vector<Subgroup> level{zero};
      for (std::size_t k = 1; k <= lambda.size(); ++k) {
        bool const                   last = k == lambda.size();
        std::set<std::vector<bool>>  seen;
        std::vector<Subgroup>        next;
        for (auto const& s : level) {
          auto done = s.member;
          for (std::size_t g = 0; g < n; ++g) {
            if (done[g] || !s.member[grp.times_p(g)]) {
              continue;
            }
            // S + <g> has index p over S
            Subgroup bigger{s.elements, s.member};
            std::uint32_t shift = 0;
            for (std::uint64_t i = 1; i < p; ++i) {
              shift = grp.add(shift, g);
              for (auto x : s.elements) {
                auto y = grp.add(x, shift);
                bigger.elements.push_back(y);
                bigger.member[y] = true;
                done[y]          = true;
              }
            }
            if (!seen.insert(bigger.member).second) {
              continue;
            }
            if (!viable(bigger, last)) {
              continue;
            }
            if (last) {
              return true;
            }
            next.push_back(std::move(bigger));
          }
        }
        level = std::move(next);
        if (level.empty()) {
          return false;
        }
      }
      return false;
    }

  }  // namespace

  Partition type_from_torsion_logs(std::span<const int> logs) {
    std::vector<long long> columns;
    int                    previous_log  = 0;
    long long              previous_diff = -1;
    for (auto d : logs) {
      long long diff = d - previous_log;
      if (diff < 0 || (previous_diff >= 0 && diff > previous_diff)) {
        throw InvalidInput("torsion counts do not come from an abelian p-group");
      }
      columns.push_back(diff);
      previous_log  = d;
      previous_diff = diff;
    }
    return Partition(std::span<const long long>(columns)).conjugate();
  }

  bool brute_force_is_extension(AbelianGroup const& g,
                                AbelianGroup const& h,
                                AbelianGroup const& k,
                                OracleConfig const& config) {
    std::set<Prime> primes;
    for (auto const* grp : {&g, &h, &k}) {
      for (auto const& [p, type] : grp->types()) {
        primes.insert(p);
      }
    }
    for (auto p : primes) {
      auto const mu = g.p_part(p);
      if (mu.size() != h.p_part(p).size() + k.p_part(p).size()) {
        return false;
      }
    }
    for (auto p : primes) {
      auto const mu = g.p_part(p);
      if (checked_pow(p, mu.size()) > config.max_p_part_order) {
        throw ResourceLimit("p-part of order " + to_string(checked_pow(p, mu.size()))
                            + " exceeds oracle bound "
                            + std::to_string(config.max_p_part_order));
      }
    }
    for (auto p : primes) {
      if (!p_part_extension(p, g.p_part(p), h.p_part(p), k.p_part(p))) {
        return false;
      }
    }
    return true;
  }

}  // namespace abext
