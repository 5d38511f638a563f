#pragma once

#include <cstdint>
#include <map>
#include <set>

#include "abext/partition.hpp"

namespace abext {

  //! The product of two Young diagrams written as a formal sum: every
  //! partition with a nonzero Littlewood-Richardson coefficient, mapped to
  //! that coefficient. Iteration follows Partition ordering.
  struct Expansion {
    std::map<Partition, std::uint64_t> terms;

    [[nodiscard]] std::set<Partition> support() const;
    [[nodiscard]] std::uint64_t       multiplicity(Partition const& mu) const;
    [[nodiscard]] bool                contains(Partition const& mu) const {
      return terms.contains(mu);
    }

    friend bool operator==(Expansion const&, Expansion const&) = default;
  };

  //! Number of semistandard fillings of outer/inner with content `content`
  //! whose reverse reading word is a lattice word. Zero when the sizes do not
  //! add up or the skew shape does not exist.
  std::uint64_t lr_coefficient(Partition const& inner,
                               Partition const& content,
                               Partition const& outer);

  //! lr_coefficient(...) > 0, stopping at the first valid filling.
  bool lr_positive(Partition const& inner,
                   Partition const& content,
                   Partition const& outer);

  //! The full product inner * content. Results are memoized in a process-wide
  //! table that is safe to share between threads.
  Expansion lr_expand(Partition const& lambda, Partition const& nu);

}  // namespace abext
