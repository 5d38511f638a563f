#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace abext {

  struct PropertyOptions {
    std::uint64_t seed              = 20240917;
    std::size_t   max_total_size    = 8;     // exhaustive LR checks
    std::size_t   random_extensions = 1000;  // order law and rank bounds
    std::size_t   random_triples    = 100;   // associativity of .
    unsigned      jobs              = 0;
  };

  struct PropertyResult {
    std::string              name;
    std::uint64_t            checked = 0;
    std::vector<std::string> failures;  // at most a handful are kept

    [[nodiscard]] bool passed() const {
      return failures.empty();
    }
  };

  //! Structural properties of the LR engine, the extension criterion and
  //! the built-in families. Random instances come from a std::mt19937_64
  //! seeded with `seed`, so a fixed seed gives identical results.
  std::vector<PropertyResult> run_properties(PropertyOptions const& opts);

  nlohmann::json to_json(std::vector<PropertyResult> const& results);
  std::string    to_text(std::vector<PropertyResult> const& results);

}  // namespace abext
