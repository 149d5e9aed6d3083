#include "partalg/polynomial.hpp"

#include <algorithm>

namespace partalg {

  IntPolynomial::IntPolynomial(Integer c) {
    if (c != 0) {
      coeffs_.push_back(std::move(c));
    }
  }

  IntPolynomial IntPolynomial::from_coefficients(std::vector<Integer> coeffs) {
    IntPolynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  IntPolynomial
  IntPolynomial::from_coefficients(std::initializer_list<long long> c) {
    std::vector<Integer> coeffs(c.begin(), c.end());
    return from_coefficients(std::move(coeffs));
  }

  IntPolynomial IntPolynomial::monomial(Integer c, int power) {
    IntPolynomial p;
    if (c != 0) {
      p.coeffs_.resize(power + 1);
      p.coeffs_[power] = std::move(c);
    }
    return p;
  }

  void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
      coeffs_.pop_back();
    }
  }

  Integer IntPolynomial::coefficient(int power) const {
    if (power < 0 || power > degree()) {
      return 0;
    }
    return coeffs_[power];
  }

  Integer IntPolynomial::evaluate(Integer const& z) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * z + *it;
    }
    return acc;
  }

  IntPolynomial IntPolynomial::shifted(int power) const {
    if (is_zero() || power == 0) {
      return *this;
    }
    IntPolynomial p;
    p.coeffs_.resize(power);
    p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return p;
  }

  void IntPolynomial::add_product(IntPolynomial const& a,
                                  IntPolynomial const& b,
                                  int                  shift) {
    if (a.is_zero() || b.is_zero()) {
      return;
    }
    std::size_t const top = a.coeffs_.size() + b.coeffs_.size() - 1 + shift;
    if (coeffs_.size() < top) {
      coeffs_.resize(top);
    }
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        coeffs_[i + j + shift] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    trim();
  }

  IntPolynomial& IntPolynomial::operator+=(IntPolynomial const& other) {
    if (coeffs_.size() < other.coeffs_.size()) {
      coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
      coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
  }

  IntPolynomial& IntPolynomial::operator-=(IntPolynomial const& other) {
    if (coeffs_.size() < other.coeffs_.size()) {
      coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
      coeffs_[i] -= other.coeffs_[i];
    }
    trim();
    return *this;
  }

  IntPolynomial& IntPolynomial::operator*=(IntPolynomial const& other) {
    IntPolynomial product;
    product.add_product(*this, other, 0);
    return *this = std::move(product);
  }

  IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial p = *this;
    for (auto& c : p.coeffs_) {
      c = -c;
    }
    return p;
  }

  std::string IntPolynomial::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::string out;
    for (std::size_t power = 0; power < coeffs_.size(); ++power) {
      Integer const& c = coeffs_[power];
      if (c == 0) {
        continue;
      }
      Integer magnitude = abs(c);
      if (out.empty()) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (power == 0 || magnitude != 1) {
        out += magnitude.str();
      }
      if (power >= 1) {
        out += 'z';
      }
      if (power >= 2) {
        out += '^' + std::to_string(power);
      }
    }
    return out;
  }

}  // namespace partalg
