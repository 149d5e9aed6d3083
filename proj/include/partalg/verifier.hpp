#pragma once

// Named suites of algebra identities, each checked by exact subtraction to
// zero in the diagram basis at a fixed ambient rank.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partalg/jucys_murphy.hpp"

namespace partalg {

  enum class SuiteId {
    hr_presentation,
    hr_derived,
    prel_a,
    star_invariance,
    sigma_split,
    lemma_f10,
    thm_ab,
    thm_ac,
    pairwise_commute,
    jm_commute,
    centrality,
    c_e,
    n_pres,
    sigma_involution,
    r_2,
    alt_recursion,
  };

  inline constexpr std::array<SuiteId, 16> kAllSuites = {
      SuiteId::hr_presentation,  SuiteId::hr_derived,
      SuiteId::prel_a,           SuiteId::star_invariance,
      SuiteId::sigma_split,      SuiteId::lemma_f10,
      SuiteId::thm_ab,           SuiteId::thm_ac,
      SuiteId::pairwise_commute, SuiteId::jm_commute,
      SuiteId::centrality,       SuiteId::c_e,
      SuiteId::n_pres,           SuiteId::sigma_involution,
      SuiteId::r_2,              SuiteId::alt_recursion,
  };

  std::string_view suite_name(SuiteId id) noexcept;

  // Throws UnknownSuite.
  SuiteId parse_suite(std::string_view name);

  struct CheckResult {
    std::string              id;
    std::vector<std::string> indices;  // in index notation, e.g. "5/2"
    bool                     pass = false;
    // Terms of the first nonzero difference against the first member.
    std::size_t residual_terms = 0;
  };

  struct VerificationReport {
    std::string              suite;
    int                      rank = 0;
    // Dimension of V for tensor suites.
    std::optional<int>       n;
    std::vector<CheckResult> checks;
    // Instances inside the quantifier whose elements need a larger rank.
    int                      out_of_range = 0;
    std::vector<std::string> notes;
    double                   elapsed_seconds = 0;

    bool vacuous() const noexcept {
      return checks.empty();
    }
    std::size_t failures() const noexcept;
    bool        passed() const noexcept {
      return failures() == 0;
    }
  };

  // Runs one suite against a built cache. Checks are distributed over `jobs`
  // threads; the order of the result does not depend on `jobs`.
  VerificationReport verify_suite(SuiteId            suite,
                                  JMCache const&     cache,
                                  int                jobs = 1);

  // Builds the cache at rank k (k <= enumeration_cap()) and runs one suite.
  VerificationReport verify_suite(SuiteId suite, int k, int jobs = 1);

  std::vector<VerificationReport> verify_all(JMCache const& cache,
                                             int            jobs = 1);
  std::vector<VerificationReport> verify_all(int k, int jobs = 1);

}  // namespace partalg
