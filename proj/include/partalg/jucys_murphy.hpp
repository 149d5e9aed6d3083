#pragma once

// The sigma and L families defined by the recursions
//
//   L_{i+1}   = -s_i L_i p_{i+1/2} - p_{i+1/2} L_i s_i
//               + p_{i+1/2} L_i p_{i+1} p_{i+1/2} + s_i L_i s_i + sigma_{i+1}
//   L_{i+1/2} = -L_i p_{i+1/2} - p_{i+1/2} L_i
//               + p_{i+1/2} L_i p_i p_{i+1/2} + s_i L_{i-1/2} s_i
//               + sigma_{i+1/2}
//
// with L_0 = L_{1/2} = 0, L_1 = p_1, sigma_{1/2} = sigma_1 = sigma_{3/2} = 1,
// sigma_2 = s_1, and five-term recursions for sigma_{i+1}, sigma_{i+1/2}
// from i = 2 on.

#include <map>
#include <utility>
#include <vector>

#include "partalg/element.hpp"
#include "partalg/half_index.hpp"

namespace partalg {

  enum class Family { sigma, L };

  // Replacement values consulted during the build; later entries derive from
  // the replaced value.
  using FamilyOverrides = std::map<std::pair<Family, int>, AlgebraElement>;

  class JMCache {
   public:
    // Builds every sigma_h and L_h with ceil(h) <= ambient_rank, embedded at
    // ambient_rank. Override keys are (family, doubled index).
    explicit JMCache(int ambient_rank, FamilyOverrides overrides = {});

    int ambient_rank() const noexcept {
      return rank_;
    }

    // Largest index available at the ambient rank.
    HalfIndex max_index() const noexcept {
      return {2 * rank_};
    }

    bool available(HalfIndex h) const noexcept {
      return h.ceiling() <= rank_;
    }

    // Defined for h >= 1/2.
    AlgebraElement const& sigma(HalfIndex h) const;

    AlgebraElement const& L(HalfIndex h) const;

    // z_h = L_0 + L_{1/2} + ... + L_h.
    AlgebraElement const& central(HalfIndex h) const;

    // sigma_{i+1/2} by the rewritten five-term form; i >= 2.
    AlgebraElement sigma_half_alt(int i) const;

    // L_{i+1/2} = -L_i p_{i+1/2} - p_{i+1/2} L_i + (z - L_{i-1/2}) p_{i+1/2}
    //             + s_i L_{i-1/2} s_i + sigma_{i+1/2};  i >= 1.
    AlgebraElement L_half_alt(int i) const;

    // Generators at the ambient rank.
    AlgebraElement s(int i) const;
    AlgebraElement p(int j) const;
    AlgebraElement p_half(int i) const;  // p_{i+1/2}
    AlgebraElement one() const;

   private:
    void check(HalfIndex h, int lowest) const;

    AlgebraElement build_sigma(int doubled) const;
    AlgebraElement build_L(int doubled) const;

    int                         rank_;
    std::vector<AlgebraElement> sigma_;  // by doubled index; slot 0 unused
    std::vector<AlgebraElement> L_;
    std::vector<AlgebraElement> central_;
  };

}  // namespace partalg
