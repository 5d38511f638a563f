#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "abext/abelian_group.hpp"
#include "abext/extensions.hpp"
#include "json.hpp"

namespace abext {

  enum class SlotKind {
    free_cyclic,    // Z/k,  k >= 1
    even_cyclic,    // Z/2k, k >= 1
    triple_cyclic,  // Z/3k, k >= 1
    fixed_cyclic    // Z/m,  m >= 2 fixed
  };

  //! One cyclic factor of a table row. `param` is the letter used when
  //! printing a parameterized slot; it does not take part in comparisons.
  struct Slot {
    SlotKind      kind    = SlotKind::free_cyclic;
    std::uint64_t modulus = 0;
    char          param   = 'k';

    static Slot free(char param = 'k');
    static Slot even(char param = 'k');
    static Slot triple(char param = 'k');
    //! Throws InvalidInput for m < 2.
    static Slot fixed(std::uint64_t m);

    //! The smallest order the slot can take.
    [[nodiscard]] std::uint64_t step() const noexcept;

    friend bool operator==(Slot const& a, Slot const& b) {
      return a.kind == b.kind && a.modulus == b.modulus;
    }
    //! Parameterized kinds first, then fixed slots by decreasing modulus.
    friend std::strong_ordering operator<=>(Slot const& a, Slot const& b);
  };

  //! A direct product of constrained cyclic slots: one row of a table.
  struct FamilyPattern {
    std::vector<Slot> slots;

    //! "Z/2k x (Z/4)^2 x Z/2"; the empty pattern prints as "1".
    [[nodiscard]] std::string describe() const;
    //! "k >= 1, l >= 1", or empty for a row without parameters.
    [[nodiscard]] std::string constraints() const;

    //! Slots in canonical order, used for syntactic deduplication.
    [[nodiscard]] FamilyPattern canonical() const;

    friend bool operator==(FamilyPattern const&, FamilyPattern const&) = default;
  };

  //! Inverse of describe(): factors `Z/k`, `Z/2k`, `Z/3k`, `Z/m`, optionally
  //! as `(Z/m)^r`, separated by `x`. Throws SyntaxError.
  FamilyPattern parse_pattern(std::string_view text);

  struct Family {
    std::string                name;
    std::string                title;
    std::vector<FamilyPattern> patterns;
    GroupSet                   exceptional;
  };

  //! The member obtained by setting the parameters, in slot order, to
  //! `values` (so Z/2k with k = 3 is Z/6). Throws InvalidInput on a count
  //! mismatch or a zero value.
  AbelianGroup instantiate_pattern(FamilyPattern const&              pattern,
                                   std::vector<std::uint64_t> const& values);

  //! Whether some choice of slot orders multiplies out to G.
  bool matches(AbelianGroup const& g, FamilyPattern const& pattern);

  bool family_contains(AbelianGroup const& g, Family const& family);
  //! Throws LookupError for an unknown name.
  bool family_contains(AbelianGroup const& g, std::string_view name);

  //! Pairwise slot concatenation. Exceptional members are first turned into
  //! fixed-slot patterns, so the result has no exceptional members.
  //! Duplicates are removed syntactically (after canonical slot order).
  Family family_product(Family const& a, Family const& b);

  //! Patterns and exceptional members of both.
  Family family_union(Family const& a, Family const& b);

  //! Members of order at most `order_bound`. Throws InvalidInput for a zero
  //! bound and ResourceLimit when the parameter sweep grows too large.
  GroupSet enumerate_family(Family const& family, std::uint64_t order_bound);

  //! The possible types of the p-part of a member of `pattern` with at most
  //! `max_size` boxes.
  std::vector<Partition> pattern_types_at(FamilyPattern const& pattern,
                                          Prime                p,
                                          std::size_t          max_size);

  //! G in a . b, decided from the patterns without truncating either family.
  bool extension_family_contains(AbelianGroup const& g,
                                 Family const&       a,
                                 Family const&       b);

  //! Throws LookupError for an unknown name.
  Family const&            builtin_family(std::string_view name);
  std::vector<std::string> builtin_family_names();

  //! Tables 1 to 6 of the appendix, in order.
  std::vector<Family const*> appendix_tables();

  //! One caption line per table followed by rows `(i) | group | constraints`.
  std::string    render_tables_text();
  nlohmann::json render_tables_json();

  nlohmann::json to_json(FamilyPattern const& pattern);

}  // namespace abext
