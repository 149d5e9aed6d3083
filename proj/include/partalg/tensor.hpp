#pragma once

// The action of A_r(n) on V^{(x)r}, dim V = n, and of A_{r+1/2}(n) on
// V^{(x)r} identified with V^{(x)r} (x) v_n. Basis tensors are index tuples
// with entries in 1..n; all arithmetic is over the integers.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "partalg/element.hpp"
#include "partalg/half_index.hpp"
#include "partalg/verifier.hpp"

namespace partalg {

  inline constexpr std::size_t kDefaultTensorBudget = 4096;

  struct RepConfig {
    int n = 1;
    int r = 0;

    // Number of basis tensors, n^r.
    std::size_t dimension() const noexcept;

    // Throws IndexOutOfRange for n < 1 or r < 0 and BudgetExceeded when
    // n^r > budget.
    void validate(std::size_t budget = kDefaultTensorBudget) const;

    friend bool operator==(RepConfig, RepConfig) = default;
  };

  using TensorIndex = std::vector<int>;

  // Integer combination of basis tensors; no zero coefficients.
  using TensorVector = std::map<TensorIndex, Integer>;

  // All basis tuples of V^{(x)r} in lexicographic order.
  std::vector<TensorIndex> tensor_basis(RepConfig cfg);

  class SparseOperator {
   public:
    using Columns = std::map<TensorIndex, TensorVector>;

    // The zero operator.
    explicit SparseOperator(RepConfig cfg) : cfg_(cfg) {}

    static SparseOperator identity(RepConfig cfg);

    // Column v is `column(v)` for each basis tuple v.
    template <typename F>
    static SparseOperator from_columns(RepConfig cfg, F column) {
      SparseOperator op(cfg);
      for (TensorIndex const& v : tensor_basis(cfg)) {
        TensorVector image = column(v);
        if (!image.empty()) {
          op.columns_.emplace(v, std::move(image));
        }
      }
      return op;
    }

    RepConfig config() const noexcept {
      return cfg_;
    }

    // Nonzero columns only.
    Columns const& columns() const noexcept {
      return columns_;
    }

    TensorVector apply(TensorIndex const& v) const;
    TensorVector apply(TensorVector const& x) const;

    Integer entry(TensorIndex const& row, TensorIndex const& col) const;

    std::size_t nonzero_count() const noexcept;

    bool is_zero() const noexcept {
      return columns_.empty();
    }

    SparseOperator& operator+=(SparseOperator const& other);
    SparseOperator& operator-=(SparseOperator const& other);

    friend SparseOperator operator+(SparseOperator a, SparseOperator const& b) {
      return a += b;
    }
    friend SparseOperator operator-(SparseOperator a, SparseOperator const& b) {
      return a -= b;
    }
    // Composition: (a * b)(v) = a(b(v)).
    friend SparseOperator operator*(SparseOperator const& a,
                                    SparseOperator const& b);
    friend SparseOperator operator*(Integer const& c, SparseOperator const& a);

    friend bool operator==(SparseOperator const& a,
                           SparseOperator const& b) = default;

   private:
    RepConfig cfg_;
    Columns   columns_;
  };

  // Adds c * x into acc, dropping zeros.
  void accumulate(TensorVector& acc, TensorVector const& x, Integer const& c);

  // Sum over output tuples j such that labelling top vertex a with j_a and
  // bottom vertex b' with v_b is constant on every block of d.
  TensorVector diagram_action(Diagram const& d, RepConfig cfg,
                              TensorIndex const& v);

  // Image of a with z = n. When `half`, a has rank r+1 and acts on
  // V^{(x)r} (x) v_n, which is identified with V^{(x)r}.
  SparseOperator rep_operator(AlgebraElement const& a, RepConfig cfg,
                              bool half = false);

  // The value transposition (a b) applied to every factor.
  TensorIndex swap_values(TensorIndex v, int a, int b);

  // sigma_{k+1/2} or sigma_{k+1} with k >= 1 and k+1 <= r, acting through
  // s_{i_k, i_{k+1}} on the leading factors; later factors are untouched.
  TensorVector sigma_action_direct(HalfIndex idx, RepConfig cfg,
                                   TensorIndex const& v);

  // L_{k-1/2} or L_k with 1 <= k <= r.
  TensorVector L_action_direct(HalfIndex idx, RepConfig cfg,
                               TensorIndex const& v);

  // Sum of value transpositions s_{i,j}, i < j, skipping those that move
  // `exclude` when it is in 1..n.
  SparseOperator kappa_operator(RepConfig cfg, int exclude = 0);

  // kappa_{n, i_r}: on each basis tuple, skip transpositions moving the last
  // entry.
  SparseOperator kappa_last_operator(RepConfig cfg);

  // Rank over Q of the operators flattened to vectors.
  std::size_t operator_rank(std::vector<SparseOperator> const& ops);

  enum class TensorSuite {
    generator_consistency,
    sigma_formulas,
    L_formulas,
    central_action,
    commutant,
    hr_equality,
  };

  inline constexpr std::array<TensorSuite, 6> kAllTensorSuites = {
      TensorSuite::generator_consistency, TensorSuite::sigma_formulas,
      TensorSuite::L_formulas,            TensorSuite::central_action,
      TensorSuite::commutant,             TensorSuite::hr_equality,
  };

  std::string_view tensor_suite_name(TensorSuite s) noexcept;

  // Throws UnknownSuite.
  TensorSuite parse_tensor_suite(std::string_view name);

  // Report suite name is "tensor:<name>", rank is r.
  VerificationReport verify_tensor_suite(TensorSuite s, RepConfig cfg,
                                         std::size_t budget
                                         = kDefaultTensorBudget);

  // The (n, r) pairs checked by default.
  std::vector<RepConfig> default_tensor_grid();

}  // namespace partalg
