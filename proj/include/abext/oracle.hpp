#pragma once

#include <cstdint>
#include <span>

#include "abext/abelian_group.hpp"

namespace abext {

  struct OracleConfig {
    //! Largest p-part order the oracle will materialize.
    std::uint64_t max_p_part_order = 1024;
  };

  //! Element-level check of 0 -> H -> G -> K -> 0, independent of the LR
  //! machinery: for each prime, every subgroup of the explicit group G_p is
  //! enumerated and tested for type(S) = type(H_p), type(G_p / S) = type(K_p).
  //! Throws ResourceLimit when a p-part of G exceeds the configured bound.
  bool brute_force_is_extension(AbelianGroup const& g,
                                AbelianGroup const& h,
                                AbelianGroup const& k,
                                OracleConfig const& config = {});

  //! Recovers a type (a_i) from d_j = log_p |A[p^j]| = sum_i min(a_i, j),
  //! j = 1, 2, .... Throws InvalidInput if the sequence is not realizable.
  Partition type_from_torsion_logs(std::span<const int> logs);

}  // namespace abext
