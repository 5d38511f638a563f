#include "abext/extensions.hpp"

#include <set>
#include <vector>

#include "abext/error.hpp"
#include "abext/lr.hpp"

namespace abext {

  GroupSet::GroupSet(std::initializer_list<AbelianGroup> groups) {
    for (auto const& g : groups) {
      insert(g);
    }
  }

  GroupSet::Key GroupSet::key_of(AbelianGroup const& g) {
    return Key{g.order(), format_group(g)};
  }

  bool GroupSet::insert(AbelianGroup g) {
    auto key = key_of(g);
    return _members.try_emplace(std::move(key), std::move(g)).second;
  }

  void GroupSet::merge(GroupSet const& other) {
    for (auto const& [key, g] : other._members) {
      _members.try_emplace(key, g);
    }
  }

  bool GroupSet::contains(AbelianGroup const& g) const {
    return _members.contains(key_of(g));
  }

  bool is_extension(AbelianGroup const& g,
                    AbelianGroup const& h,
                    AbelianGroup const& k) {
    std::set<Prime> primes;
    for (auto const* grp : {&g, &h, &k}) {
      for (auto const& [p, type] : grp->types()) {
        primes.insert(p);
      }
    }
    for (auto p : primes) {
      if (!lr_positive(h.p_part(p), k.p_part(p), g.p_part(p))) {
        return false;
      }
    }
    return true;
  }

  GroupSet extension_set(AbelianGroup const& h, AbelianGroup const& k) {
    std::set<Prime> primes;
    for (auto const* grp : {&h, &k}) {
      for (auto const& [p, type] : grp->types()) {
        primes.insert(p);
      }
    }
    std::vector<std::pair<Prime, std::vector<Partition>>> per_prime;
    for (auto p : primes) {
      auto support = lr_expand(h.p_part(p), k.p_part(p)).support();
      per_prime.emplace_back(
          p, std::vector<Partition>(support.begin(), support.end()));
    }

    GroupSet                 result;
    std::vector<std::size_t> choice(per_prime.size(), 0);
    while (true) {
      AbelianGroup::type_map types;
      for (std::size_t i = 0; i < per_prime.size(); ++i) {
        types.emplace(per_prime[i].first, per_prime[i].second[choice[i]]);
      }
      result.insert(AbelianGroup(std::move(types)));
      // odometer increment
      std::size_t i = 0;
      for (; i < choice.size(); ++i) {
        if (++choice[i] < per_prime[i].second.size()) {
          break;
        }
        choice[i] = 0;
      }
      if (i == choice.size()) {
        break;
      }
    }
    return result;
  }

  GroupSet set_product(GroupSet const& a, GroupSet const& b) {
    if (a.empty() || b.empty()) {
      throw InvalidInput("set_product requires nonempty operands");
    }
    GroupSet result;
    for (auto const& h : a) {
      for (auto const& k : b) {
        result.insert(direct_product(h, k));
      }
    }
    return result;
  }

  GroupSet set_extension(GroupSet const& a, GroupSet const& b) {
    if (a.empty() || b.empty()) {
      throw InvalidInput("set_extension requires nonempty operands");
    }
    GroupSet result;
    for (auto const& h : a) {
      for (auto const& k : b) {
        result.merge(extension_set(h, k));
      }
    }
    return result;
  }

  GroupSet set_union(GroupSet const& a, GroupSet const& b) {
    GroupSet result = a;
    result.merge(b);
    return result;
  }

  GroupSet set_difference(GroupSet const& a, GroupSet const& b) {
    GroupSet result;
    for (auto const& g : a) {
      if (!b.contains(g)) {
        result.insert(g);
      }
    }
    return result;
  }

}  // namespace abext
