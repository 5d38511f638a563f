#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abext/partition.hpp"
#include "json.hpp"

namespace abext {

  using Prime = std::uint64_t;

  //! Group orders use checked 128-bit arithmetic; anything larger raises
  //! OverflowError instead of wrapping.
  using Order = unsigned __int128;

  std::string to_string(Order value);

  bool is_prime(std::uint64_t n);

  //! Prime factorization in increasing prime order. factorize(1) is empty.
  std::vector<std::pair<Prime, int>> factorize(std::uint64_t n);

  //! Checked product; throws OverflowError.
  Order checked_mul(Order a, Order b);

  //! Checked power; throws OverflowError.
  Order checked_pow(Order base, std::size_t exponent);

  //! Isomorphism class of a finite abelian group, stored as its Sylow types:
  //! for each prime p dividing the order, the partition [n_1, ..., n_r] with
  //! G_p = Z/p^{n_1} x ... x Z/p^{n_r}. The trivial group has no entries.
  class AbelianGroup {
   public:
    using type_map = std::map<Prime, Partition>;

    AbelianGroup() = default;

    //! Throws InvalidInput if a key is not prime. Empty types are dropped.
    explicit AbelianGroup(type_map types);

    //! Z/n, split into prime-power parts. Z/1 is trivial; n = 0 throws.
    static AbelianGroup cyclic(std::uint64_t n);

    static AbelianGroup p_group(Prime p, Partition type);

    [[nodiscard]] type_map const& types() const noexcept {
      return _types;
    }

    [[nodiscard]] bool is_trivial() const noexcept {
      return _types.empty();
    }

    //! Type of the Sylow p-subgroup; empty when p does not divide the order.
    //! Throws InvalidInput for non-prime p.
    [[nodiscard]] Partition p_part(Prime p) const;

    //! Minimum number of generators: the longest Sylow type.
    [[nodiscard]] std::size_t rank() const noexcept;

    //! Throws OverflowError past 2^128.
    [[nodiscard]] Order order() const;

    //! d_1, d_2, ... with d_{i+1} | d_i, one per row of the longest type.
    [[nodiscard]] std::vector<Order> invariant_factors() const;

    friend bool operator==(AbelianGroup const&, AbelianGroup const&) = default;
    friend auto operator<=>(AbelianGroup const&,
                            AbelianGroup const&) = default;

   private:
    type_map _types;
  };

  //! Grammar: `1` for the trivial group, otherwise factors separated by `x`,
  //! `*` or `×`. A factor is `Z/n` or `Cn` (optionally parenthesized) with an
  //! optional repetition `^r`. Whitespace is insignificant.
  AbelianGroup parse_group(std::string_view text);

  //! Invariant-factor form with repeats collapsed, e.g. "Z/6^2 x Z/3^2";
  //! the trivial group is "1". Round-trips through parse_group.
  std::string format_group(AbelianGroup const& g);

  std::ostream& operator<<(std::ostream& os, AbelianGroup const& g);

  //! Per-prime multiset union of types.
  AbelianGroup direct_product(AbelianGroup const& g, AbelianGroup const& h);

  //! {"primes": {"2": [3,3,2,1], "3": [1,1]}}
  nlohmann::json to_json(AbelianGroup const& g);
  AbelianGroup   group_from_json(nlohmann::json const& j);

}  // namespace abext
