#include "partalg/element.hpp"

#include <algorithm>
#include <unordered_map>

namespace partalg {

  namespace {

    using Accumulator =
        std::unordered_map<Diagram, IntPolynomial, DiagramHash>;

    std::vector<AlgebraElement::Term> drain(Accumulator& acc) {
      std::vector<AlgebraElement::Term> terms;
      terms.reserve(acc.size());
      for (auto& [d, c] : acc) {
        c.trim();
        if (!c.is_zero()) {
          terms.emplace_back(d, std::move(c));
        }
      }
      std::sort(terms.begin(), terms.end(), [](auto const& x, auto const& y) {
        return x.first < y.first;
      });
      return terms;
    }

    void require_same_rank(AlgebraElement const& a, AlgebraElement const& b) {
      if (a.rank() != b.rank()) {
        throw RankMismatch("algebra elements of rank "
                           + std::to_string(a.rank()) + " and "
                           + std::to_string(b.rank()));
      }
    }

    // Merges two sorted term lists, combining coefficients with `op`.
    template <typename Op>
    std::vector<AlgebraElement::Term>
    merge_terms(std::vector<AlgebraElement::Term> const& x,
                std::vector<AlgebraElement::Term> const& y,
                Op                                       op) {
      std::vector<AlgebraElement::Term> out;
      out.reserve(x.size() + y.size());
      auto i = x.begin();
      auto j = y.begin();
      while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first < j->first)) {
          out.push_back(*i++);
        } else if (i == x.end() || j->first < i->first) {
          out.emplace_back(j->first, op(IntPolynomial{}, j->second));
          ++j;
        } else {
          IntPolynomial c = op(i->second, j->second);
          if (!c.is_zero()) {
            out.emplace_back(i->first, std::move(c));
          }
          ++i;
          ++j;
        }
      }
      return out;
    }

  }  // namespace

  AlgebraElement::AlgebraElement(int rank) : rank_(rank) {
    if (rank < 0 || rank > kMaxRank) {
      throw IndexOutOfRange("rank " + std::to_string(rank) + " out of range");
    }
  }

  AlgebraElement AlgebraElement::from_diagram(Diagram const& d,
                                              IntPolynomial  coeff) {
    AlgebraElement a(d.rank());
    a.half_ = is_half(d);
    if (!coeff.is_zero()) {
      a.terms_.emplace_back(d, std::move(coeff));
    }
    return a;
  }

  AlgebraElement AlgebraElement::from_terms(int rank, std::vector<Term> terms) {
    AlgebraElement a(rank);
    Accumulator    acc;
    for (auto& [d, c] : terms) {
      if (d.rank() != rank) {
        throw RankMismatch("term of rank " + std::to_string(d.rank())
                           + " in element of rank " + std::to_string(rank));
      }
      a.half_ = a.half_ && is_half(d);
      acc[d] += c;
    }
    a.terms_ = drain(acc);
    return a;
  }

  AlgebraElement AlgebraElement::identity(int rank) {
    return from_diagram(Diagram::identity(rank));
  }

  AlgebraElement AlgebraElement::scalar(int rank, IntPolynomial c) {
    return from_diagram(Diagram::identity(rank), std::move(c));
  }

  bool AlgebraElement::all_half() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](Term const& t) {
      return is_half(t.first);
    });
  }

  AlgebraElement AlgebraElement::as_half() const {
    if (!all_half()) {
      throw Error("element is not in the half-integer subalgebra");
    }
    AlgebraElement a = *this;
    a.half_          = true;
    return a;
  }

  IntPolynomial AlgebraElement::coefficient(Diagram const& d) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), d,
        [](Term const& t, Diagram const& key) { return t.first < key; });
    if (it != terms_.end() && it->first == d) {
      return it->second;
    }
    return {};
  }

  AlgebraElement& AlgebraElement::operator+=(AlgebraElement const& other) {
    require_same_rank(*this, other);
    terms_ = merge_terms(terms_, other.terms_,
                         [](IntPolynomial a, IntPolynomial const& b) {
                           return a += b;
                         });
    half_ = half_ && other.half_;
    return *this;
  }

  AlgebraElement& AlgebraElement::operator-=(AlgebraElement const& other) {
    require_same_rank(*this, other);
    terms_ = merge_terms(terms_, other.terms_,
                         [](IntPolynomial a, IntPolynomial const& b) {
                           return a -= b;
                         });
    half_ = half_ && other.half_;
    return *this;
  }

  AlgebraElement& AlgebraElement::operator*=(AlgebraElement const& other) {
    return *this = *this * other;
  }

  AlgebraElement operator*(AlgebraElement const& a, AlgebraElement const& b) {
    require_same_rank(a, b);
    AlgebraElement out(a.rank());
    out.half_ = a.half_ && b.half_;
    if (a.is_zero() || b.is_zero()) {
      return out;
    }
    Accumulator acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1 << 14));
    for (auto const& [da, ca] : a.terms_) {
      for (auto const& [db, cb] : b.terms_) {
        CompositionResult r = compose(da, db);
        acc[r.diagram].add_product(ca, cb, r.removed_blocks);
      }
    }
    out.terms_ = drain(acc);
    return out;
  }

  AlgebraElement operator*(IntPolynomial const& c, AlgebraElement const& a) {
    AlgebraElement out(a.rank());
    out.half_ = a.half_;
    if (c.is_zero()) {
      return out;
    }
    out.terms_.reserve(a.size());
    for (auto const& [d, coeff] : a.terms_) {
      out.terms_.emplace_back(d, c * coeff);
    }
    return out;
  }

  AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out = *this;
    for (auto& t : out.terms_) {
      t.second = -t.second;
    }
    return out;
  }

  std::string AlgebraElement::to_string() const {
    if (is_zero()) {
      return "0\n";
    }
    std::string out;
    for (auto const& [d, c] : terms_) {
      out += c.is_constant() ? c.to_string() : "(" + c.to_string() + ")";
      out += " * [" + d.to_string() + "]\n";
    }
    return out;
  }

  AlgebraElement add(AlgebraElement const& a, AlgebraElement const& b) {
    return a + b;
  }

  AlgebraElement mul(AlgebraElement const& a, AlgebraElement const& b) {
    return a * b;
  }

  AlgebraElement star(AlgebraElement const& a) {
    std::vector<AlgebraElement::Term> terms;
    terms.reserve(a.size());
    for (auto const& [d, c] : a.terms()) {
      terms.emplace_back(involute(d), c);
    }
    AlgebraElement out = AlgebraElement::from_terms(a.rank(), std::move(terms));
    return a.half_flag() ? out.as_half() : out;
  }

  AlgebraElement evaluate(AlgebraElement const& a, Integer const& n) {
    std::vector<AlgebraElement::Term> terms;
    terms.reserve(a.size());
    for (auto const& [d, c] : a.terms()) {
      terms.emplace_back(d, IntPolynomial(c.evaluate(n)));
    }
    AlgebraElement out = AlgebraElement::from_terms(a.rank(), std::move(terms));
    return a.half_flag() ? out.as_half() : out;
  }

  bool equals(AlgebraElement const& a, AlgebraElement const& b) {
    return a == b;
  }

  AlgebraElement embed(AlgebraElement const& a, int new_rank) {
    if (new_rank == a.rank()) {
      return a;
    }
    std::vector<AlgebraElement::Term> terms;
    terms.reserve(a.size());
    for (auto const& [d, c] : a.terms()) {
      terms.emplace_back(embed(d, new_rank), c);
    }
    AlgebraElement out = AlgebraElement::from_terms(new_rank, std::move(terms));
    return out.as_half();
  }

}  // namespace partalg
