#pragma once

// Finite Z[z]-linear combinations of diagrams of one rank: elements of the
// partition algebra A_k(z), with product rho1 rho2 = z^l (rho1 o rho2).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "partalg/diagram.hpp"
#include "partalg/polynomial.hpp"

namespace partalg {

  class AlgebraElement {
   public:
    using Term = std::pair<Diagram, IntPolynomial>;

    // The zero element of rank 0.
    AlgebraElement() = default;

    // The zero element of the given rank.
    explicit AlgebraElement(int rank);

    static AlgebraElement from_diagram(Diagram const& d,
                                       IntPolynomial  coeff = 1);

    // Sums the given terms; repeated diagrams accumulate and zeros are
    // dropped. Every diagram must have the given rank.
    static AlgebraElement from_terms(int rank, std::vector<Term> terms);

    static AlgebraElement identity(int rank);

    static AlgebraElement scalar(int rank, IntPolynomial c);

    int rank() const noexcept {
      return rank_;
    }

    // Terms sorted by diagram; no zero coefficients.
    std::vector<Term> const& terms() const noexcept {
      return terms_;
    }

    std::size_t size() const noexcept {
      return terms_.size();
    }

    bool is_zero() const noexcept {
      return terms_.empty();
    }

    // Claimed membership in A_{k-1/2}(z). When set, every diagram satisfies
    // is_half.
    bool half_flag() const noexcept {
      return half_;
    }

    // True iff every diagram satisfies is_half.
    bool all_half() const noexcept;

    // Returns a copy with half_flag set; throws Error if some diagram is not
    // in A_{k-1/2}.
    AlgebraElement as_half() const;

    IntPolynomial coefficient(Diagram const& d) const;

    AlgebraElement& operator+=(AlgebraElement const& other);
    AlgebraElement& operator-=(AlgebraElement const& other);
    AlgebraElement& operator*=(AlgebraElement const& other);

    friend AlgebraElement operator+(AlgebraElement a, AlgebraElement const& b) {
      return a += b;
    }
    friend AlgebraElement operator-(AlgebraElement a, AlgebraElement const& b) {
      return a -= b;
    }
    friend AlgebraElement operator*(AlgebraElement const& a,
                                    AlgebraElement const& b);
    friend AlgebraElement operator*(IntPolynomial const& c,
                                    AlgebraElement const& a);
    AlgebraElement operator-() const;

    friend bool operator==(AlgebraElement const& a, AlgebraElement const& b) {
      return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    // One term per line: "<coeff> * [<diagram>]".
    std::string to_string() const;

   private:
    int               rank_ = 0;
    bool              half_ = true;
    std::vector<Term> terms_;
  };

  AlgebraElement add(AlgebraElement const& a, AlgebraElement const& b);
  AlgebraElement mul(AlgebraElement const& a, AlgebraElement const& b);

  // Applies the * anti-involution to every diagram.
  AlgebraElement star(AlgebraElement const& a);

  // Substitutes z = n in every coefficient.
  AlgebraElement evaluate(AlgebraElement const& a, Integer const& n);

  bool equals(AlgebraElement const& a, AlgebraElement const& b);

  AlgebraElement embed(AlgebraElement const& a, int new_rank);

  // Left-to-right product of one or more factors.
  template <typename... Rest>
  AlgebraElement product(AlgebraElement const& first, Rest const&... rest) {
    AlgebraElement acc = first;
    ((acc = acc * rest), ...);
    return acc;
  }

  // a*b - b*a
  inline AlgebraElement commutator(AlgebraElement const& a,
                                   AlgebraElement const& b) {
    return a * b - b * a;
  }

  // Convenience constructors for the generators at a given rank.
  inline AlgebraElement s_element(int i, int rank) {
    return AlgebraElement::from_diagram(s_diagram(i, rank));
  }
  inline AlgebraElement p_element(int j, int rank) {
    return AlgebraElement::from_diagram(p_diagram(j, rank));
  }
  // p_{i+1/2}
  inline AlgebraElement p_half_element(int i, int rank) {
    return AlgebraElement::from_diagram(p_half_diagram(i, rank));
  }

}  // namespace partalg
