#include "partalg/jucys_murphy.hpp"

#include "partalg/errors.hpp"

namespace partalg {

  JMCache::JMCache(int ambient_rank, FamilyOverrides overrides)
      : rank_(ambient_rank) {
    if (ambient_rank < 0 || ambient_rank > kMaxRank) {
      throw IndexOutOfRange("ambient rank " + std::to_string(ambient_rank));
    }
    int const top = 2 * rank_;
    sigma_.reserve(top + 1);
    L_.reserve(top + 1);
    central_.reserve(top + 1);

    auto settle = [&](Family f, int d, AlgebraElement value) {
      if (auto it = overrides.find({f, d}); it != overrides.end()) {
        value = embed(it->second, rank_);
      }
      if (d < top && value.all_half()) {
        value = value.as_half();
      }
      return value;
    };

    for (int d = 0; d <= top; ++d) {
      sigma_.push_back(d == 0 ? AlgebraElement(rank_)
                              : settle(Family::sigma, d, build_sigma(d)));
      L_.push_back(settle(Family::L, d, build_L(d)));
      central_.push_back(d == 0 ? L_[0] : central_[d - 1] + L_[d]);
    }
  }

  void JMCache::check(HalfIndex h, int lowest) const {
    if (h.doubled < lowest) {
      throw IndexOutOfRange("index " + h.to_string() + " below the family");
    }
    if (!available(h)) {
      throw RankTooSmall("index " + h.to_string() + " needs rank "
                         + std::to_string(h.ceiling()) + ", ambient rank is "
                         + std::to_string(rank_));
    }
  }

  AlgebraElement const& JMCache::sigma(HalfIndex h) const {
    check(h, 1);
    return sigma_[h.doubled];
  }

  AlgebraElement const& JMCache::L(HalfIndex h) const {
    check(h, 0);
    return L_[h.doubled];
  }

  AlgebraElement const& JMCache::central(HalfIndex h) const {
    check(h, 0);
    return central_[h.doubled];
  }

  AlgebraElement JMCache::s(int i) const {
    return s_element(i, rank_);
  }

  AlgebraElement JMCache::p(int j) const {
    return p_element(j, rank_);
  }

  AlgebraElement JMCache::p_half(int i) const {
    return p_half_element(i, rank_);
  }

  AlgebraElement JMCache::one() const {
    return AlgebraElement::identity(rank_);
  }

  AlgebraElement JMCache::build_sigma(int d) const {
    if (d <= 3) {
      return one();
    }
    if (d == 4) {
      return s(1);
    }
    // sigma_{i+1} for d = 2i+2, sigma_{i+1/2} for d = 2i+1
    int const   i         = (d - 1) / 2;
    auto const& L_prev    = L_[2 * (i - 1)];
    auto const& sigma_prv = sigma_[d - 2];
    auto const  s_lo      = s(i - 1);
    auto const  s_hi      = s(i);
    auto const  ph_lo     = p_half(i - 1);
    auto const  ph_hi     = p_half(i);
    auto const  p_mid     = p(i);
    if (d % 2 == 0) {
      return product(s_lo, s_hi, sigma_prv, s_hi, s_lo)
           + product(s_hi, ph_lo, L_prev, s_hi, ph_lo, s_hi)
           + product(ph_lo, L_prev, s_hi, ph_lo)
           - product(s_hi, ph_lo, L_prev, s_lo, ph_hi, p_mid, ph_lo)
           - product(ph_lo, p_mid, ph_hi, s_lo, L_prev, ph_lo, s_hi);
    }
    return product(s_lo, s_hi, sigma_prv, s_hi, s_lo)
         + product(ph_lo, L_prev, s_hi, ph_lo, s_hi)
         + product(s_hi, ph_lo, L_prev, s_hi, ph_lo)
         - product(ph_lo, L_prev, s_lo, ph_hi, p_mid, ph_lo)
         - product(s_hi, ph_lo, p_mid, ph_hi, s_lo, L_prev, ph_lo, s_hi);
  }

  AlgebraElement JMCache::build_L(int d) const {
    if (d <= 1) {
      return AlgebraElement(rank_);
    }
    if (d == 2) {
      return p(1);
    }
    int const i = (d - 1) / 2;
    auto const& Li = L_[2 * i];
    auto const  si = s(i);
    auto const  ph = p_half(i);
    if (d % 2 == 0) {
      // L_{i+1}
      return -product(si, Li, ph) - product(ph, Li, si)
           + product(ph, Li, p(i + 1), ph) + product(si, Li, si)
           + sigma_[d];
    }
    // L_{i+1/2}
    return -product(Li, ph) - product(ph, Li) + product(ph, Li, p(i), ph)
         + product(si, L_[2 * i - 1], si) + sigma_[d];
  }

  AlgebraElement JMCache::sigma_half_alt(int i) const {
    if (i < 2) {
      throw IndexOutOfRange("alternative sigma form needs i >= 2");
    }
    check(HalfIndex::half(i), 1);
    auto const& Lp    = L(HalfIndex::whole(i - 1));
    auto const  s_lo  = s(i - 1);
    auto const  s_hi  = s(i);
    auto const  ph_lo = p_half(i - 1);
    auto const  ph_hi = p_half(i);
    auto const  p_mid = p(i);
    return product(s_lo, s_hi, sigma(HalfIndex::half(i - 1)), s_hi, s_lo)
         + product(ph_lo, Lp, s_lo, ph_hi, s_lo)
         + product(s_lo, ph_hi, s_lo, Lp, ph_lo)
         - product(ph_lo, Lp, s_lo, ph_hi, p_mid, ph_lo)
         - product(s_lo, ph_hi, p_mid, ph_lo, Lp, s_lo, ph_hi, s_lo);
  }

  AlgebraElement JMCache::L_half_alt(int i) const {
    if (i < 1) {
      throw IndexOutOfRange("alternative L form needs i >= 1");
    }
    check(HalfIndex::half(i), 0);
    auto const& Li     = L(HalfIndex::whole(i));
    auto const& L_prev = L(HalfIndex::half(i - 1));
    auto const  ph     = p_half(i);
    auto const  shift  = AlgebraElement::scalar(rank_, z_poly()) - L_prev;
    return -product(Li, ph) - product(ph, Li) + product(shift, ph)
         + product(s(i), L_prev, s(i)) + sigma(HalfIndex::half(i));
  }

}  // namespace partalg
