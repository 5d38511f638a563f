#include "abext/props.hpp"

#include <random>
#include <sstream>

#include "abext/extensions.hpp"
#include "abext/families.hpp"
#include "abext/lr.hpp"
#include "abext/parallel.hpp"

namespace abext {

  namespace {

    constexpr std::size_t kept_failures = 8;

    void note(PropertyResult& r, std::string what) {
      if (r.failures.size() < kept_failures) {
        r.failures.push_back(std::move(what));
      }
    }

    std::vector<std::pair<Partition, Partition>> small_pairs(std::size_t total) {
      std::vector<std::pair<Partition, Partition>> out;
      for (std::size_t a = 0; a <= total; ++a) {
        for (std::size_t b = 0; a + b <= total; ++b) {
          for (auto const& lambda : partitions_of(a)) {
            for (auto const& nu : partitions_of(b)) {
              out.emplace_back(lambda, nu);
            }
          }
        }
      }
      return out;
    }

    Partition random_partition(std::mt19937_64& rng, std::size_t size) {
      auto const all = partitions_of(size);
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      return all[pick(rng)];
    }

    AbelianGroup random_group(std::mt19937_64& rng) {
      std::uniform_int_distribution<std::size_t> size(0, 3);
      AbelianGroup::type_map                     types;
      for (Prime p : {2, 3, 5}) {
        types.emplace(p, random_partition(rng, size(rng)));
      }
      return AbelianGroup(std::move(types));
    }

    PropertyResult lr_symmetry(PropertyOptions const& opts) {
      PropertyResult r{"lr symmetry", 0, {}};
      auto const     pairs = small_pairs(opts.max_total_size);
      std::vector<char> ok(pairs.size(), 1);
      parallel_for(pairs.size(), opts.jobs, [&](std::size_t i) {
        auto const& [lambda, nu] = pairs[i];
        ok[i] = lr_expand(lambda, nu) == lr_expand(nu, lambda);
      });
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        ++r.checked;
        if (!ok[i]) {
          note(r, to_string(pairs[i].first) + " . " + to_string(pairs[i].second));
        }
      }
      return r;
    }

    PropertyResult lr_extremes(PropertyOptions const& opts) {
      PropertyResult r{"lr extreme terms", 0, {}};
      for (auto const& [lambda, nu] : small_pairs(opts.max_total_size)) {
        ++r.checked;
        auto const e = lr_expand(lambda, nu);
        for (auto const& mu :
             {union_merge(lambda, nu), componentwise_sum(lambda, nu)}) {
          if (e.multiplicity(mu) != 1) {
            note(r,
                 to_string(mu) + " in " + to_string(lambda) + " . "
                     + to_string(nu));
          }
        }
      }
      return r;
    }

    PropertyResult order_and_rank(PropertyOptions const& opts,
                                  std::mt19937_64&       rng) {
      PropertyResult r{"extension order and rank", 0, {}};
      for (std::size_t i = 0; i < opts.random_extensions; ++i) {
        auto const h = random_group(rng);
        auto const k = random_group(rng);
        ++r.checked;
        auto const label = format_group(h) + " . " + format_group(k);
        auto const all   = extension_set(h, k);
        if (!all.contains(direct_product(h, k))) {
          note(r, "direct product missing from " + label);
        }
        for (auto const& g : all) {
          if (g.order() != h.order() * k.order()) {
            note(r, "order of " + format_group(g) + " in " + label);
          }
          for (auto const& [p, type] : g.types()) {
            auto const lh = h.p_part(p).length();
            auto const lk = k.p_part(p).length();
            if (type.length() < std::max(lh, lk) || type.length() > lh + lk) {
              note(r, "rank of " + format_group(g) + " in " + label);
            }
          }
        }
      }
      return r;
    }

    PropertyResult associativity(PropertyOptions const& opts,
                                 std::mt19937_64&       rng) {
      PropertyResult                              r{"associativity of .", 0, {}};
      std::uniform_int_distribution<std::size_t> size(0, opts.max_total_size);
      for (std::size_t i = 0; i < opts.random_triples; ++i) {
        std::size_t a = size(rng), b = size(rng), c = size(rng);
        while (a + b + c > opts.max_total_size) {
          a = size(rng);
          b = size(rng);
          c = size(rng);
        }
        auto const x = GroupSet{AbelianGroup::p_group(2, random_partition(rng, a))};
        auto const y = GroupSet{AbelianGroup::p_group(2, random_partition(rng, b))};
        auto const z = GroupSet{AbelianGroup::p_group(2, random_partition(rng, c))};
        ++r.checked;
        if (!(set_extension(set_extension(x, y), z)
              == set_extension(x, set_extension(y, z)))) {
          note(r,
               format_group(*x.begin()) + ", " + format_group(*y.begin()) + ", "
                   + format_group(*z.begin()));
        }
      }
      return r;
    }

    PropertyResult family_round_trip() {
      PropertyResult r{"family round trip", 0, {}};
      for (auto const* table : appendix_tables()) {
        for (auto const& pattern : table->patterns) {
          std::size_t params = 0;
          for (auto const& s : pattern.slots) {
            params += s.kind != SlotKind::fixed_cyclic;
          }
          for (std::uint64_t t = 0; t < 3; ++t) {
            std::vector<std::uint64_t> values;
            for (std::size_t j = 0; j < params; ++j) {
              values.push_back(1 + (t + j) % 3);
            }
            auto const g = instantiate_pattern(pattern, values);
            ++r.checked;
            if (!matches(g, pattern) || !family_contains(g, *table)) {
              note(r, format_group(g) + " against " + pattern.describe());
            }
          }
        }
      }
      return r;
    }

  }  // namespace

  std::vector<PropertyResult> run_properties(PropertyOptions const& opts) {
    std::mt19937_64             rng(opts.seed);
    std::vector<PropertyResult> out;
    out.push_back(lr_symmetry(opts));
    out.push_back(lr_extremes(opts));
    out.push_back(order_and_rank(opts, rng));
    out.push_back(associativity(opts, rng));
    out.push_back(family_round_trip());
    return out;
  }

  nlohmann::json to_json(std::vector<PropertyResult> const& results) {
    nlohmann::json out = nlohmann::json::array();
    for (auto const& r : results) {
      out.push_back({{"name", r.name},
                     {"checked", r.checked},
                     {"passed", r.passed()},
                     {"failures", r.failures}});
    }
    return out;
  }

  std::string to_text(std::vector<PropertyResult> const& results) {
    std::ostringstream os;
    for (auto const& r : results) {
      os << (r.passed() ? "pass " : "FAIL ") << r.name << " (" << r.checked
         << " checked)\n";
      for (auto const& f : r.failures) {
        os << "  " << f << '\n';
      }
    }
    return os.str();
  }

}  // namespace abext
