#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "abext/extensions.hpp"
#include "abext/families.hpp"
#include "json.hpp"

namespace abext {

  enum class Verdict { pass, fail, pass_vacuous };

  std::string to_string(Verdict v);

  //! A group together with the (H, K) pair that produced it.
  struct Witness {
    AbelianGroup group;
    AbelianGroup h;
    AbelianGroup k;
  };

  //! A secondary check folded into a report (an inclusion, a sub-claim).
  struct SubCheck {
    std::string              name;
    std::uint64_t            checked = 0;
    bool                     passed  = true;
    std::vector<std::string> failures;
  };

  struct VerificationReport {
    std::string          claim_id;
    std::uint64_t        bound         = 0;
    std::uint64_t        checked_pairs = 0;
    GroupSet             witnesses;
    std::vector<Witness> sources;  // one per witness, in witness order
    std::vector<SubCheck> checks;
    Verdict              verdict = Verdict::fail;
    bool                 vacuous = false;
    std::chrono::duration<double> elapsed{0};

    //! Everything except elapsed time, so sweeps can be compared byte for
    //! byte.
    [[nodiscard]] nlohmann::json to_json(bool with_elapsed = true) const;
    [[nodiscard]] std::string    to_text() const;
  };

  using ExtensionFn
      = std::function<GroupSet(AbelianGroup const&, AbelianGroup const&)>;

  struct VerifyOptions {
    std::uint64_t bound = 64;
    unsigned      jobs  = 0;
    //! Replaces a built-in family by name (fault injection).
    std::map<std::string, Family> family_overrides;
    //! Replaces extension_set (fault injection).
    ExtensionFn extension;
  };

  //! A1 . A1 inside A1 x A1 and A1 . A2 inside A'3.
  VerificationReport verify_prop_ext_low(VerifyOptions const& opts);

  //! Extensions from A2 . A2 and A1 . A'3 outside PA'4: exactly (Z/4)^5.
  VerificationReport verify_thm_main(VerifyOptions const& opts);

  //! A2 x A2 outside A1 x A'3: exactly (Z/3)^6 and (Z/4)^4 x (Z/2)^2, plus
  //! A1 x A'3 inside A2 x A2 and A1 . A'3 inside A2 . A2.
  VerificationReport verify_prop_product_types(VerifyOptions const& opts);

  //! Extensions from B1 . B'3 and B2 . B2 outside PB'4: none.
  VerificationReport verify_thm_second(VerifyOptions const& opts);

  //! The explicit Young-diagram products of the classification proofs.
  VerificationReport regression_expansions();

  //! Dispatch on "prop-ext-low", "thm-main", "prop-product-types",
  //! "thm-second", "regressions". Throws LookupError otherwise.
  VerificationReport run_claim(std::string const&   claim,
                               VerifyOptions const& opts);

  std::vector<std::string> claim_names();

  // Exposed for tests.

  struct SymbolicCase {
    std::string              id;
    std::string              lambda;  // entries may use a, b, c
    std::string              nu;
    std::vector<std::string> terms;   // entries may also be x (template)
    std::vector<std::string> lows;    // lower bounds for x entries, in order
    std::vector<std::vector<int>> instances;  // values of (a, b, c)
  };

  struct ConcreteCase {
    std::string              id;
    Partition                lambda;
    Partition                nu;
    std::vector<Partition>   expected;
  };

  std::vector<ConcreteCase> const& concrete_cases();
  std::vector<SymbolicCase> const& symbolic_cases();

  //! Evaluates an entry list such as "[a+2,b,1]" at the given parameters.
  //! Returns the raw entries, which need not be weakly decreasing.
  std::vector<long long> instantiate(std::string const&      text,
                                     std::vector<int> const& params);

}  // namespace abext
