#include "abext/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "abext/error.hpp"
#include "abext/lr.hpp"

namespace abext {

  namespace {

    constexpr std::uint64_t tuple_budget = 5'000'000;

    int valuation(std::uint64_t m, Prime p) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      return e;
    }

    std::string slot_text(Slot const& s) {
      switch (s.kind) {
        case SlotKind::free_cyclic:
          return std::string("Z/") + s.param;
        case SlotKind::even_cyclic:
          return std::string("Z/2") + s.param;
        case SlotKind::triple_cyclic:
          return std::string("Z/3") + s.param;
        case SlotKind::fixed_cyclic:
          return "Z/" + std::to_string(s.modulus);
      }
      return {};
    }

    // Per-prime view of a pattern: the exponents fixed slots force, the
    // slots that must contribute a part, and the slots that may.
    struct PrimeProfile {
      std::vector<int> fixed;
      std::size_t      mandatory = 0;
      std::size_t      optional  = 0;
    };

    PrimeProfile profile(FamilyPattern const& pattern, Prime p) {
      PrimeProfile out;
      for (auto const& s : pattern.slots) {
        switch (s.kind) {
          case SlotKind::free_cyclic:
            ++out.optional;
            break;
          case SlotKind::even_cyclic:
            ++(p == 2 ? out.mandatory : out.optional);
            break;
          case SlotKind::triple_cyclic:
            ++(p == 3 ? out.mandatory : out.optional);
            break;
          case SlotKind::fixed_cyclic:
            if (auto e = valuation(s.modulus, p); e > 0) {
              out.fixed.push_back(e);
            }
            break;
        }
      }
      return out;
    }

    std::set<Prime> forced_primes(FamilyPattern const& pattern) {
      std::set<Prime> out;
      for (auto const& s : pattern.slots) {
        if (s.kind == SlotKind::even_cyclic) {
          out.insert(2);
        } else if (s.kind == SlotKind::triple_cyclic) {
          out.insert(3);
        } else if (s.kind == SlotKind::fixed_cyclic) {
          for (auto [p, e] : factorize(s.modulus)) {
            out.insert(p);
          }
        }
      }
      return out;
    }

    FamilyPattern fixed_pattern(AbelianGroup const& g) {
      FamilyPattern out;
      for (auto d : g.invariant_factors()) {
        out.slots.push_back(Slot::fixed(static_cast<std::uint64_t>(d)));
      }
      return out;
    }

    std::vector<FamilyPattern> all_patterns(Family const& f) {
      auto out = f.patterns;
      for (auto const& g : f.exceptional) {
        out.push_back(fixed_pattern(g));
      }
      return out;
    }

    void relabel(FamilyPattern& pattern) {
      static constexpr std::string_view letters = "nklmabcdefghijpqrs";
      std::size_t                       next    = 0;
      for (auto& s : pattern.slots) {
        if (s.kind != SlotKind::fixed_cyclic) {
          s.param = letters[next++ % letters.size()];
        }
      }
    }

    void add_unique(std::vector<FamilyPattern>& out, FamilyPattern pattern) {
      auto canon = pattern.canonical();
      for (auto const& q : out) {
        if (q.canonical() == canon) {
          return;
        }
      }
      out.push_back(std::move(canon));
    }

    // Number of parameter tuples sweep() would visit, without building any
    // group. The last slot is counted in closed form; the count stops once it
    // passes `budget`.
    std::uint64_t count_tuples(std::vector<Slot> const& slots,
                               std::size_t              index,
                               std::uint64_t            room,
                               std::uint64_t            previous,
                               std::uint64_t            budget) {
      if (index == slots.size()) {
        return 1;
      }
      auto const& s     = slots[index];
      auto const  step  = s.step();
      auto        first = s.kind == SlotKind::fixed_cyclic ? s.modulus : step;
      if (index > 0 && slots[index - 1] == s) {
        first = std::max(first, previous);
      }
      auto const last = std::min(
          room, s.kind == SlotKind::fixed_cyclic ? s.modulus : room);
      if (first > last) {
        return 1;
      }
      if (index + 1 == slots.size()) {
        return 1 + (last - first) / step + 1;
      }
      std::uint64_t total = 1;
      for (std::uint64_t v = first; v <= last && total <= budget; v += step) {
        total += count_tuples(slots, index + 1, room / v, v, budget - total);
      }
      return total;
    }

    void sweep(std::vector<Slot> const&         slots,
               std::size_t                      index,
               std::uint64_t                    room,
               std::uint64_t                    previous,
               AbelianGroup const&              partial,
               std::uint64_t&                   tuples,
               std::map<std::uint64_t, AbelianGroup>& cyclic_cache,
               GroupSet&                        out) {
      if (++tuples > tuple_budget) {
        throw ResourceLimit("family enumeration exceeded "
                            + std::to_string(tuple_budget)
                            + " parameter tuples; lower the bound");
      }
      if (index == slots.size()) {
        out.insert(partial);
        return;
      }
      auto const& s     = slots[index];
      bool const  twin  = index > 0 && slots[index - 1] == s;
      auto const  step  = s.step();
      auto        first = s.kind == SlotKind::fixed_cyclic ? s.modulus : step;
      if (twin) {
        first = std::max(first, previous);
      }
      auto const last = s.kind == SlotKind::fixed_cyclic ? s.modulus : room;
      for (std::uint64_t v = first; v <= last && v <= room; v += step) {
        auto [it, fresh] = cyclic_cache.try_emplace(v);
        if (fresh) {
          it->second = AbelianGroup::cyclic(v);
        }
        sweep(slots,
              index + 1,
              room / v,
              v,
              direct_product(partial, it->second),
              tuples,
              cyclic_cache,
              out);
      }
    }

    Family from_rows(std::string name,
                     std::string title,
                     std::initializer_list<std::string_view> rows) {
      Family f{std::move(name), std::move(title), {}, {}};
      for (auto row : rows) {
        f.patterns.push_back(parse_pattern(row));
      }
      return f;
    }

    Family renamed(Family f, std::string name, std::string title) {
      f.name  = std::move(name);
      f.title = std::move(title);
      return f;
    }

    struct Registry {
      std::vector<Family>         tables;
      std::map<std::string, Family> by_name;

      Registry() {
        tables.push_back(from_rows("A1",
                                   "Table 1. The set of groups A1 = B1",
                                   {"Z/k", "(Z/2)^2"}));
        tables.push_back(from_rows("A2",
                                   "Table 2. The set of groups A2 = B2",
                                   {"Z/k x Z/l",
                                    "Z/2k x (Z/2)^2",
                                    "(Z/4)^2 x Z/2",
                                    "(Z/3)^3",
                                    "(Z/2)^4"}));
        tables.push_back(
            from_rows("A3p",
                      "Table 3. The set of groups A'3 = PA3 = A1 x A2",
                      {"Z/k x Z/l x Z/m",
                       "Z/2k x (Z/4)^2 x Z/2",
                       "Z/3k x (Z/3)^3",
                       "Z/2k x Z/2l x (Z/2)^2",
                       "Z/2k x (Z/2)^4",
                       "(Z/4)^2 x (Z/2)^3",
                       "(Z/2)^6"}));
        tables.push_back(from_rows("B3p",
                                   "Table 4. The set of groups B'3",
                                   {"Z/k x Z/l x Z/m",
                                    "Z/2k x (Z/4)^2 x Z/2",
                                    "Z/3k x (Z/3)^3",
                                    "Z/2k x Z/2l x (Z/2)^2",
                                    "Z/2k x (Z/2)^4",
                                    "(Z/4)^2 x (Z/2)^3",
                                    "(Z/2)^6",
                                    "(Z/4)^4",
                                    "(Z/8)^2 x Z/4 x Z/2",
                                    "(Z/6)^2 x (Z/3)^2",
                                    "(Z/6)^3 x Z/2"}));
        tables.push_back(from_rows(
            "PA4p",
            "Table 5. The set of groups PA'4 = A1 x A'3 + A2 x A2",
            {"Z/n x Z/k x Z/l x Z/m",
             "Z/n x Z/k x Z/2l x (Z/2)^2",
             "Z/n x Z/k x (Z/4)^2 x Z/2",
             "Z/n x Z/k x (Z/3)^3",
             "Z/n x Z/k x (Z/2)^4",
             "Z/2n x (Z/4)^2 x (Z/2)^3",
             "Z/2n x (Z/2)^6",
             "(Z/4)^4 x (Z/2)^2",
             "(Z/4)^2 x (Z/2)^5",
             "(Z/3)^6",
             "(Z/2)^8"}));
        tables.push_back(from_rows(
            "PB4p",
            "Table 6. The set of groups PB'4 = B1 x B'3 + B2 x B2",
            {"Z/n x Z/k x Z/l x Z/m",
             "Z/n x Z/k x Z/2l x (Z/2)^2",
             "Z/n x Z/k x (Z/4)^2 x Z/2",
             "Z/n x Z/k x (Z/3)^3",
             "Z/n x Z/k x (Z/2)^4",
             "Z/2n x (Z/4)^2 x (Z/2)^3",
             "Z/2n x (Z/2)^6",
             "(Z/4)^4 x (Z/2)^2",
             "(Z/4)^2 x (Z/2)^5",
             "(Z/3)^6",
             "(Z/2)^8",
             "Z/n x (Z/4)^4",
             "Z/n x (Z/8)^2 x Z/4 x Z/2",
             "Z/n x (Z/6)^2 x (Z/3)^2",
             "Z/n x (Z/6)^3 x Z/2",
             "(Z/8)^2 x Z/4 x (Z/2)^3",
             "(Z/6)^3 x (Z/2)^3"}));
        for (auto const& t : tables) {
          by_name.emplace(t.name, t);
        }
        auto const& a1  = tables[0];
        auto const& a2  = tables[1];
        auto const& a3p = tables[2];
        auto const& b3p = tables[3];
        auto const  b1  = renamed(a1, "B1", "B1 = A1");
        auto const  b2  = renamed(a2, "B2", "B2 = A2");
        by_name.emplace("B1", b1);
        by_name.emplace("B2", b2);
        for (auto f : {family_product(a1, a1),
                       family_product(a1, a2),
                       family_product(a2, a2),
                       family_product(a1, a3p),
                       family_product(b2, b2),
                       family_product(b1, b3p)}) {
          by_name.emplace(f.name, std::move(f));
        }
      }
    };

    Registry const& registry() {
      static Registry const r;
      return r;
    }

  }  // namespace

  Slot Slot::free(char param) {
    return Slot{SlotKind::free_cyclic, 0, param};
  }
  Slot Slot::even(char param) {
    return Slot{SlotKind::even_cyclic, 0, param};
  }
  Slot Slot::triple(char param) {
    return Slot{SlotKind::triple_cyclic, 0, param};
  }
  Slot Slot::fixed(std::uint64_t m) {
    if (m < 2) {
      throw InvalidInput("fixed slot modulus must be at least 2");
    }
    return Slot{SlotKind::fixed_cyclic, m, 0};
  }

  std::uint64_t Slot::step() const noexcept {
    switch (kind) {
      case SlotKind::free_cyclic:
        return 1;
      case SlotKind::even_cyclic:
        return 2;
      case SlotKind::triple_cyclic:
        return 3;
      case SlotKind::fixed_cyclic:
        return modulus;
    }
    return 1;
  }

  std::strong_ordering operator<=>(Slot const& a, Slot const& b) {
    if (auto c = a.kind <=> b.kind; c != 0) {
      return c;
    }
    return b.modulus <=> a.modulus;
  }

  std::string FamilyPattern::describe() const {
    if (slots.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < slots.size();) {
      std::size_t j = i + 1;
      if (slots[i].kind == SlotKind::fixed_cyclic) {
        while (j < slots.size() && slots[j] == slots[i]) {
          ++j;
        }
      }
      if (!out.empty()) {
        out += " x ";
      }
      if (j - i > 1) {
        out += "(" + slot_text(slots[i]) + ")^" + std::to_string(j - i);
      } else {
        out += slot_text(slots[i]);
      }
      i = j;
    }
    return out;
  }

  std::string FamilyPattern::constraints() const {
    std::string out;
    for (auto const& s : slots) {
      if (s.kind == SlotKind::fixed_cyclic) {
        continue;
      }
      if (!out.empty()) {
        out += ", ";
      }
      out += std::string(1, s.param) + " >= 1";
    }
    return out;
  }

  FamilyPattern FamilyPattern::canonical() const {
    FamilyPattern out = *this;
    std::stable_sort(out.slots.begin(), out.slots.end());
    for (auto& s : out.slots) {
      if (s.kind != SlotKind::fixed_cyclic) {
        s.param = 'k';
      }
    }
    return out;
  }

  FamilyPattern parse_pattern(std::string_view text) {
    std::string compact;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        compact += c;
      }
    }
    auto fail = [&](std::string const& why) {
      return SyntaxError(why + " in pattern '" + std::string(text) + "'");
    };
    FamilyPattern out;
    if (compact == "1") {
      return out;
    }
    std::string_view rest = compact;
    while (!rest.empty()) {
      auto const       sep    = rest.find('x');
      std::string_view factor = rest.substr(0, sep);
      rest = sep == std::string_view::npos ? std::string_view{}
                                           : rest.substr(sep + 1);
      if (sep != std::string_view::npos && rest.empty()) {
        throw fail("trailing separator");
      }
      std::size_t reps = 1;
      if (factor.starts_with('(')) {
        auto close = factor.find(')');
        if (close == std::string_view::npos || close + 1 >= factor.size()
            || factor[close + 1] != '^') {
          throw fail("expected (Z/m)^r");
        }
        auto const count = factor.substr(close + 2);
        if (count.empty()
            || !std::all_of(count.begin(), count.end(), [](char c) {
                 return std::isdigit(static_cast<unsigned char>(c));
               })) {
          throw fail("bad repetition count");
        }
        reps   = std::stoul(std::string(count));
        factor = factor.substr(1, close - 1);
        if (reps == 0) {
          throw fail("zero repetition count");
        }
      }
      if (!factor.starts_with("Z/") || factor.size() < 3) {
        throw fail("expected a factor Z/...");
      }
      auto const body  = factor.substr(2);
      auto const split = body.find_first_not_of("0123456789");
      auto const digits = body.substr(0, split);
      Slot       slot;
      if (split == std::string_view::npos) {
        slot = Slot::fixed(std::stoull(std::string(digits)));
      } else {
        if (split + 1 != body.size()
            || !std::isalpha(static_cast<unsigned char>(body[split]))) {
          throw fail("bad parameter");
        }
        char const param = body[split];
        if (digits.empty()) {
          slot = Slot::free(param);
        } else if (digits == "2") {
          slot = Slot::even(param);
        } else if (digits == "3") {
          slot = Slot::triple(param);
        } else {
          throw fail("only Z/k, Z/2k and Z/3k are parameterized");
        }
      }
      if (reps > 1 && slot.kind != SlotKind::fixed_cyclic) {
        throw fail("repetition of a parameterized factor");
      }
      out.slots.insert(out.slots.end(), reps, slot);
    }
    return out;
  }

  AbelianGroup instantiate_pattern(FamilyPattern const&              pattern,
                                   std::vector<std::uint64_t> const& values) {
    AbelianGroup out;
    std::size_t  next = 0;
    for (auto const& s : pattern.slots) {
      std::uint64_t order = s.modulus;
      if (s.kind != SlotKind::fixed_cyclic) {
        if (next >= values.size() || values[next] == 0) {
          throw InvalidInput("pattern '" + pattern.describe()
                             + "' needs one positive value per parameter");
        }
        order = s.step() * values[next++];
      }
      out = direct_product(out, AbelianGroup::cyclic(order));
    }
    if (next != values.size()) {
      throw InvalidInput("too many parameter values for '" + pattern.describe()
                         + "'");
    }
    return out;
  }

  bool matches(AbelianGroup const& g, FamilyPattern const& pattern) {
    auto primes = forced_primes(pattern);
    for (auto const& [p, type] : g.types()) {
      primes.insert(p);
    }
    for (auto p : primes) {
      auto const prof  = profile(pattern, p);
      auto       parts = g.p_part(p).parts();
      for (auto e : prof.fixed) {
        auto it = std::find(parts.begin(), parts.end(), e);
        if (it == parts.end()) {
          return false;
        }
        parts.erase(it);
      }
      if (parts.size() < prof.mandatory
          || parts.size() > prof.mandatory + prof.optional) {
        return false;
      }
    }
    return true;
  }

  bool family_contains(AbelianGroup const& g, Family const& family) {
    if (family.exceptional.contains(g)) {
      return true;
    }
    return std::any_of(family.patterns.begin(),
                       family.patterns.end(),
                       [&](FamilyPattern const& p) { return matches(g, p); });
  }

  bool family_contains(AbelianGroup const& g, std::string_view name) {
    return family_contains(g, builtin_family(name));
  }

  Family family_product(Family const& a, Family const& b) {
    Family out;
    out.name  = a.name + "x" + b.name;
    out.title = a.name + " x " + b.name;
    for (auto const& p : all_patterns(a)) {
      for (auto const& q : all_patterns(b)) {
        FamilyPattern joined = p;
        joined.slots.insert(joined.slots.end(), q.slots.begin(), q.slots.end());
        add_unique(out.patterns, std::move(joined));
      }
    }
    for (auto& p : out.patterns) {
      relabel(p);
    }
    return out;
  }

  Family family_union(Family const& a, Family const& b) {
    Family out;
    out.name  = a.name + "+" + b.name;
    out.title = a.name + " + " + b.name;
    for (auto const* f : {&a, &b}) {
      for (auto const& p : f->patterns) {
        add_unique(out.patterns, p);
      }
      out.exceptional.merge(f->exceptional);
    }
    for (auto& p : out.patterns) {
      relabel(p);
    }
    return out;
  }

  GroupSet enumerate_family(Family const& family, std::uint64_t order_bound) {
    if (order_bound == 0) {
      throw InvalidInput("order bound must be at least 1");
    }
    GroupSet                              out;
    std::uint64_t                         tuples = 0;
    std::map<std::uint64_t, AbelianGroup> cyclic_cache;
    std::uint64_t planned = 0;
    for (auto const& pattern : family.patterns) {
      planned += count_tuples(
          pattern.canonical().slots, 0, order_bound, 0, tuple_budget);
      if (planned > tuple_budget) {
        throw ResourceLimit("family enumeration would exceed "
                            + std::to_string(tuple_budget)
                            + " parameter tuples; lower the bound");
      }
    }
    for (auto const& pattern : family.patterns) {
      auto const canon = pattern.canonical();
      sweep(canon.slots,
            0,
            order_bound,
            0,
            AbelianGroup(),
            tuples,
            cyclic_cache,
            out);
    }
    for (auto const& g : family.exceptional) {
      if (g.order() <= order_bound) {
        out.insert(g);
      }
    }
    return out;
  }

  std::vector<Partition> pattern_types_at(FamilyPattern const& pattern,
                                          Prime                p,
                                          std::size_t          max_size) {
    auto const prof = profile(pattern, p);
    std::vector<long long> fixed_raw(prof.fixed.begin(), prof.fixed.end());
    Partition const        fixed(fixed_raw);
    std::vector<Partition> out;
    if (fixed.size() > max_size) {
      return out;
    }
    for (std::size_t n = 0; n <= max_size - fixed.size(); ++n) {
      for (auto const& pi : partitions_of(n)) {
        if (pi.length() >= prof.mandatory
            && pi.length() <= prof.mandatory + prof.optional) {
          out.push_back(union_merge(pi, fixed));
        }
      }
    }
    return out;
  }

  bool extension_family_contains(AbelianGroup const& g,
                                 Family const&       a,
                                 Family const&       b) {
    auto const left  = all_patterns(a);
    auto const right = all_patterns(b);
    for (auto const& p : left) {
      for (auto const& q : right) {
        auto primes = forced_primes(p);
        primes.merge(forced_primes(q));
        for (auto const& [prime, type] : g.types()) {
          primes.insert(prime);
        }
        bool ok = true;
        for (auto prime : primes) {
          auto const mu  = g.p_part(prime);
          auto const lhs = pattern_types_at(p, prime, mu.size());
          auto const rhs = pattern_types_at(q, prime, mu.size());
          bool       found = false;
          for (auto const& lambda : lhs) {
            if (!contains(mu, lambda)) {
              continue;
            }
            for (auto const& nu : rhs) {
              if (lambda.size() + nu.size() == mu.size()
                  && lr_positive(lambda, nu, mu)) {
                found = true;
                break;
              }
            }
            if (found) {
              break;
            }
          }
          if (!found) {
            ok = false;
            break;
          }
        }
        if (ok) {
          return true;
        }
      }
    }
    return false;
  }

  Family const& builtin_family(std::string_view name) {
    auto const& r  = registry();
    auto        it = r.by_name.find(std::string(name));
    if (it == r.by_name.end()) {
      throw LookupError("unknown family '" + std::string(name) + "'");
    }
    return it->second;
  }

  std::vector<std::string> builtin_family_names() {
    std::vector<std::string> out;
    for (auto const& [name, f] : registry().by_name) {
      out.push_back(name);
    }
    return out;
  }

  std::vector<Family const*> appendix_tables() {
    std::vector<Family const*> out;
    for (auto const& t : registry().tables) {
      out.push_back(&t);
    }
    return out;
  }

  std::string render_tables_text() {
    std::ostringstream os;
    bool               first = true;
    for (auto const* t : appendix_tables()) {
      if (!first) {
        os << '\n';
      }
      first = false;
      os << t->title << '\n';
      for (std::size_t i = 0; i < t->patterns.size(); ++i) {
        auto const& p = t->patterns[i];
        os << '(' << i + 1 << ") | " << p.describe() << " |";
        if (auto c = p.constraints(); !c.empty()) {
          os << ' ' << c;
        }
        os << '\n';
      }
    }
    return os.str();
  }

  nlohmann::json to_json(FamilyPattern const& pattern) {
    nlohmann::json slots = nlohmann::json::array();
    for (auto const& s : pattern.slots) {
      switch (s.kind) {
        case SlotKind::free_cyclic:
          slots.push_back({{"kind", "free"}, {"param", std::string(1, s.param)}});
          break;
        case SlotKind::even_cyclic:
          slots.push_back({{"kind", "even"}, {"param", std::string(1, s.param)}});
          break;
        case SlotKind::triple_cyclic:
          slots.push_back(
              {{"kind", "triple"}, {"param", std::string(1, s.param)}});
          break;
        case SlotKind::fixed_cyclic:
          slots.push_back({{"kind", "fixed"}, {"modulus", s.modulus}});
          break;
      }
    }
    return {{"group", pattern.describe()},
            {"constraints", pattern.constraints()},
            {"slots", slots}};
  }

  nlohmann::json render_tables_json() {
    nlohmann::json out   = nlohmann::json::array();
    int            index = 0;
    for (auto const* t : appendix_tables()) {
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t i = 0; i < t->patterns.size(); ++i) {
        auto row     = to_json(t->patterns[i]);
        row["index"] = i + 1;
        rows.push_back(row);
      }
      out.push_back({{"table", ++index},
                     {"family", t->name},
                     {"title", t->title},
                     {"rows", rows}});
    }
    return out;
  }

}  // namespace abext
