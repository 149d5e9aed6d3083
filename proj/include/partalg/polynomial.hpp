#pragma once

// Elements of Z[z] with arbitrary-precision coefficients.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace partalg {

  using Integer = boost::multiprecision::cpp_int;

  class IntPolynomial {
   public:
    IntPolynomial() = default;

    // The constant polynomial c.
    IntPolynomial(Integer c);  // NOLINT(runtime/explicit)
    IntPolynomial(long long c) : IntPolynomial(Integer(c)) {}  // NOLINT
    IntPolynomial(int c) : IntPolynomial(Integer(c)) {}        // NOLINT

    // Coefficients by ascending power of z; trailing zeros are trimmed.
    static IntPolynomial from_coefficients(std::vector<Integer> coeffs);
    static IntPolynomial from_coefficients(std::initializer_list<long long> c);

    // c * z^power.
    static IntPolynomial monomial(Integer c, int power);

    bool is_zero() const noexcept {
      return coeffs_.empty();
    }

    bool is_constant() const noexcept {
      return coeffs_.size() <= 1;
    }

    // -1 for the zero polynomial.
    int degree() const noexcept {
      return static_cast<int>(coeffs_.size()) - 1;
    }

    std::vector<Integer> const& coefficients() const noexcept {
      return coeffs_;
    }

    Integer coefficient(int power) const;

    Integer evaluate(Integer const& z) const;

    IntPolynomial shifted(int power) const;

    // this += a * b * z^shift, without allocating a temporary.
    void add_product(IntPolynomial const& a,
                     IntPolynomial const& b,
                     int                  shift);

    IntPolynomial& operator+=(IntPolynomial const& other);
    IntPolynomial& operator-=(IntPolynomial const& other);
    IntPolynomial& operator*=(IntPolynomial const& other);

    friend IntPolynomial operator+(IntPolynomial a, IntPolynomial const& b) {
      return a += b;
    }
    friend IntPolynomial operator-(IntPolynomial a, IntPolynomial const& b) {
      return a -= b;
    }
    friend IntPolynomial operator*(IntPolynomial a, IntPolynomial const& b) {
      return a *= b;
    }
    IntPolynomial operator-() const;

    friend bool operator==(IntPolynomial const&, IntPolynomial const&) = default;

    // Human-readable form, e.g. "3 + 2z - z^2".
    std::string to_string() const;

    // Drops trailing zero coefficients.
    void trim();

   private:
    std::vector<Integer> coeffs_;
  };

  // The indeterminate z.
  inline IntPolynomial const& z_poly() {
    static IntPolynomial const z = IntPolynomial::monomial(1, 1);
    return z;
  }

}  // namespace partalg
