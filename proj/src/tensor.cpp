#include "partalg/tensor.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include "partalg/errors.hpp"
#include "partalg/jucys_murphy.hpp"

namespace partalg {

  std::size_t RepConfig::dimension() const noexcept {
    std::size_t d = 1;
    for (int i = 0; i < r; ++i) {
      d *= static_cast<std::size_t>(n);
    }
    return d;
  }

  void RepConfig::validate(std::size_t budget) const {
    if (n < 1) {
      throw IndexOutOfRange("dim V must be at least 1, got "
                            + std::to_string(n));
    }
    if (r < 0 || r > kMaxRank) {
      throw IndexOutOfRange("tensor power " + std::to_string(r)
                            + " is out of range");
    }
    std::size_t d = 1;
    for (int i = 0; i < r; ++i) {
      d *= static_cast<std::size_t>(n);
      if (d > budget) {
        throw BudgetExceeded("n^r = " + std::to_string(n) + "^"
                             + std::to_string(r) + " exceeds the budget "
                             + std::to_string(budget));
      }
    }
  }

  std::vector<TensorIndex> tensor_basis(RepConfig cfg) {
    std::vector<TensorIndex> out;
    out.reserve(cfg.dimension());
    TensorIndex v(static_cast<std::size_t>(cfg.r), 1);
    while (true) {
      out.push_back(v);
      int pos = cfg.r - 1;
      while (pos >= 0 && v[pos] == cfg.n) {
        v[pos] = 1;
        --pos;
      }
      if (pos < 0) {
        return out;
      }
      ++v[pos];
    }
  }

  void accumulate(TensorVector& acc, TensorVector const& x, Integer const& c) {
    if (c == 0) {
      return;
    }
    for (auto const& [idx, val] : x) {
      auto [it, inserted] = acc.try_emplace(idx, Integer(c * val));
      if (!inserted) {
        it->second += c * val;
        if (it->second == 0) {
          acc.erase(it);
        }
      }
    }
  }

  SparseOperator SparseOperator::identity(RepConfig cfg) {
    return from_columns(cfg, [](TensorIndex const& v) {
      return TensorVector{{v, Integer(1)}};
    });
  }

  TensorVector SparseOperator::apply(TensorIndex const& v) const {
    auto it = columns_.find(v);
    return it == columns_.end() ? TensorVector{} : it->second;
  }

  TensorVector SparseOperator::apply(TensorVector const& x) const {
    TensorVector out;
    for (auto const& [idx, val] : x) {
      if (auto it = columns_.find(idx); it != columns_.end()) {
        accumulate(out, it->second, val);
      }
    }
    return out;
  }

  Integer SparseOperator::entry(TensorIndex const& row,
                                TensorIndex const& col) const {
    auto it = columns_.find(col);
    if (it == columns_.end()) {
      return 0;
    }
    auto jt = it->second.find(row);
    return jt == it->second.end() ? Integer(0) : jt->second;
  }

  std::size_t SparseOperator::nonzero_count() const noexcept {
    std::size_t count = 0;
    for (auto const& [col, image] : columns_) {
      count += image.size();
    }
    return count;
  }

  namespace {

    void require_same_config(RepConfig a, RepConfig b) {
      if (a != b) {
        throw RankMismatch("operators act on different tensor spaces");
      }
    }

    void combine(SparseOperator::Columns&       cols,
                 SparseOperator::Columns const& other, Integer const& sign) {
      for (auto const& [col, image] : other) {
        TensorVector& target = cols[col];
        accumulate(target, image, sign);
        if (target.empty()) {
          cols.erase(col);
        }
      }
    }

  }  // namespace

  SparseOperator& SparseOperator::operator+=(SparseOperator const& other) {
    require_same_config(cfg_, other.cfg_);
    combine(columns_, other.columns_, 1);
    return *this;
  }

  SparseOperator& SparseOperator::operator-=(SparseOperator const& other) {
    require_same_config(cfg_, other.cfg_);
    combine(columns_, other.columns_, -1);
    return *this;
  }

  SparseOperator operator*(SparseOperator const& a, SparseOperator const& b) {
    require_same_config(a.cfg_, b.cfg_);
    SparseOperator out(a.cfg_);
    for (auto const& [col, image] : b.columns_) {
      TensorVector result = a.apply(image);
      if (!result.empty()) {
        out.columns_.emplace(col, std::move(result));
      }
    }
    return out;
  }

  SparseOperator operator*(Integer const& c, SparseOperator const& a) {
    SparseOperator out(a.cfg_);
    if (c == 0) {
      return out;
    }
    for (auto const& [col, image] : a.columns_) {
      TensorVector& target = out.columns_[col];
      for (auto const& [row, val] : image) {
        target.emplace(row, Integer(c * val));
      }
    }
    return out;
  }

  TensorVector diagram_action(Diagram const& d, RepConfig cfg,
                              TensorIndex const& v) {
    int const k = d.rank();
    if (k != cfg.r || static_cast<int>(v.size()) != k) {
      throw RankMismatch("diagram of rank " + std::to_string(k)
                         + " applied to a tensor of length "
                         + std::to_string(v.size()));
    }
    int const blocks = d.block_count();
    // 0 = unset, otherwise the value forced by the bottom row.
    std::vector<int> forced(static_cast<std::size_t>(blocks), 0);
    for (int b = 1; b <= k; ++b) {
      int& slot = forced[d.bottom_label(b)];
      if (slot == 0) {
        slot = v[b - 1];
      } else if (slot != v[b - 1]) {
        return {};
      }
    }
    std::vector<int> free_blocks;
    for (int a = 1; a <= k; ++a) {
      int const lab = d.top_label(a);
      if (forced[lab] == 0
          && std::find(free_blocks.begin(), free_blocks.end(), lab)
                 == free_blocks.end()) {
        free_blocks.push_back(lab);
      }
    }
    std::vector<int> value = forced;
    for (int lab : free_blocks) {
      value[lab] = 1;
    }
    TensorVector out;
    while (true) {
      TensorIndex w(static_cast<std::size_t>(k));
      for (int a = 1; a <= k; ++a) {
        w[a - 1] = value[d.top_label(a)];
      }
      out.emplace(std::move(w), Integer(1));
      std::size_t pos = free_blocks.size();
      while (pos > 0 && value[free_blocks[pos - 1]] == cfg.n) {
        value[free_blocks[pos - 1]] = 1;
        --pos;
      }
      if (pos == 0) {
        return out;
      }
      ++value[free_blocks[pos - 1]];
    }
  }

  SparseOperator rep_operator(AlgebraElement const& a, RepConfig cfg,
                              bool half) {
    int const expected = half ? cfg.r + 1 : cfg.r;
    if (a.rank() != expected) {
      throw RankMismatch("element of rank " + std::to_string(a.rank())
                         + " does not act on V^(x)" + std::to_string(cfg.r)
                         + (half ? " (x) v_n" : ""));
    }
    if (half && !a.all_half()) {
      throw Error("element does not lie in A_{r+1/2}");
    }
    std::vector<std::pair<Diagram, Integer>> terms;
    for (auto const& [d, coeff] : a.terms()) {
      Integer c = coeff.evaluate(cfg.n);
      if (c != 0) {
        terms.emplace_back(d, std::move(c));
      }
    }
    RepConfig const acting{cfg.n, expected};
    return SparseOperator::from_columns(cfg, [&](TensorIndex const& v) {
      TensorIndex input = v;
      if (half) {
        input.push_back(cfg.n);
      }
      TensorVector out;
      for (auto const& [d, c] : terms) {
        TensorVector image = diagram_action(d, acting, input);
        if (half) {
          TensorVector projected;
          for (auto& [w, val] : image) {
            if (w.back() == cfg.n) {
              projected.emplace(TensorIndex(w.begin(), w.end() - 1), val);
            }
          }
          image = std::move(projected);
        }
        accumulate(out, image, c);
      }
      return out;
    });
  }

  TensorIndex swap_values(TensorIndex v, int a, int b) {
    for (int& x : v) {
      if (x == a) {
        x = b;
      } else if (x == b) {
        x = a;
      }
    }
    return v;
  }

  namespace {

    // (a b) on the first `count` factors.
    TensorIndex swap_prefix(TensorIndex v, std::size_t count, int a, int b) {
      for (std::size_t i = 0; i < count; ++i) {
        if (v[i] == a) {
          v[i] = b;
        } else if (v[i] == b) {
          v[i] = a;
        }
      }
      return v;
    }

    void require_length(RepConfig cfg, TensorIndex const& v) {
      if (static_cast<int>(v.size()) != cfg.r) {
        throw RankMismatch("tensor of length " + std::to_string(v.size())
                           + " in V^(x)" + std::to_string(cfg.r));
      }
    }

  }  // namespace

  TensorVector sigma_action_direct(HalfIndex idx, RepConfig cfg,
                                   TensorIndex const& v) {
    require_length(cfg, v);
    if (idx.doubled < 1) {
      throw IndexOutOfRange("sigma_" + idx.to_string() + " is not defined");
    }
    if (idx.ceiling() > cfg.r) {
      throw RankTooSmall("sigma_" + idx.to_string() + " needs V^(x)"
                         + std::to_string(idx.ceiling()));
    }
    // sigma_{1/2} = sigma_1 = 1
    if (idx.doubled <= 2) {
      return {{v, Integer(1)}};
    }
    std::size_t const k = static_cast<std::size_t>((idx.doubled - 1) / 2);
    std::size_t const count = idx.is_integer() ? k + 1 : k - 1;
    return {{swap_prefix(v, count, v[k - 1], v[k]), Integer(1)}};
  }

  TensorVector L_action_direct(HalfIndex idx, RepConfig cfg,
                               TensorIndex const& v) {
    require_length(cfg, v);
    if (idx.doubled < 0) {
      throw IndexOutOfRange("L_" + idx.to_string() + " is not defined");
    }
    if (idx.ceiling() > cfg.r) {
      throw RankTooSmall("L_" + idx.to_string() + " needs V^(x)"
                         + std::to_string(idx.ceiling()));
    }
    if (idx.doubled == 0) {
      return {};
    }
    std::size_t const k  = static_cast<std::size_t>((idx.doubled + 1) / 2);
    int const         ik = v[k - 1];
    TensorVector      out;
    if (idx.is_integer()) {
      for (int j = 1; j <= cfg.n; ++j) {
        TensorIndex w = swap_prefix(v, k - 1, ik, j);
        w[k - 1]      = j;
        accumulate(out, {{w, Integer(1)}}, 1);
      }
    } else {
      accumulate(out, {{v, Integer(cfg.n)}}, 1);
      for (int j = 1; j <= cfg.n; ++j) {
        accumulate(out, {{swap_prefix(v, k - 1, ik, j), Integer(1)}}, -1);
      }
    }
    return out;
  }

  namespace {

    TensorVector kappa_column(RepConfig cfg, TensorIndex const& v,
                              int exclude) {
      TensorVector out;
      for (int a = 1; a <= cfg.n; ++a) {
        for (int b = a + 1; b <= cfg.n; ++b) {
          if (a != exclude && b != exclude) {
            accumulate(out, {{swap_values(v, a, b), Integer(1)}}, 1);
          }
        }
      }
      return out;
    }

  }  // namespace

  SparseOperator kappa_operator(RepConfig cfg, int exclude) {
    return SparseOperator::from_columns(cfg, [&](TensorIndex const& v) {
      return kappa_column(cfg, v, exclude);
    });
  }

  SparseOperator kappa_last_operator(RepConfig cfg) {
    if (cfg.r < 1) {
      throw RankTooSmall("kappa_{n,i_r} needs r >= 1");
    }
    return SparseOperator::from_columns(cfg, [&](TensorIndex const& v) {
      return kappa_column(cfg, v, v.back());
    });
  }

  std::size_t operator_rank(std::vector<SparseOperator> const& ops) {
    // Columns of the flattened matrix: the union of nonzero positions.
    std::map<std::pair<TensorIndex, TensorIndex>, std::size_t> position;
    for (auto const& op : ops) {
      for (auto const& [col, image] : op.columns()) {
        for (auto const& [row, val] : image) {
          position.try_emplace({row, col}, 0);
        }
      }
    }
    std::size_t next = 0;
    for (auto& [key, slot] : position) {
      slot = next++;
    }
    std::vector<std::vector<Integer>> m(ops.size(),
                                        std::vector<Integer>(next, 0));
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (auto const& [col, image] : ops[i].columns()) {
        for (auto const& [row, val] : image) {
          m[i][position.at({row, col})] = val;
        }
      }
    }
    // Fraction-free elimination; every division below is exact.
    std::size_t rank = 0;
    Integer     prev = 1;
    for (std::size_t c = 0; c < next && rank < m.size(); ++c) {
      std::size_t pivot = rank;
      while (pivot < m.size() && m[pivot][c] == 0) {
        ++pivot;
      }
      if (pivot == m.size()) {
        continue;
      }
      std::swap(m[pivot], m[rank]);
      for (std::size_t i = rank + 1; i < m.size(); ++i) {
        for (std::size_t j = c + 1; j < next; ++j) {
          m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
        }
        m[i][c] = 0;
      }
      prev = m[rank][c];
      ++rank;
    }
    return rank;
  }

  std::string_view tensor_suite_name(TensorSuite s) noexcept {
    switch (s) {
      case TensorSuite::generator_consistency:
        return "generator_consistency";
      case TensorSuite::sigma_formulas:
        return "sigma_formulas";
      case TensorSuite::L_formulas:
        return "L_formulas";
      case TensorSuite::central_action:
        return "central_action";
      case TensorSuite::commutant:
        return "commutant";
      case TensorSuite::hr_equality:
        return "hr_equality";
    }
    return "";
  }

  TensorSuite parse_tensor_suite(std::string_view name) {
    for (TensorSuite s : kAllTensorSuites) {
      if (tensor_suite_name(s) == name) {
        return s;
      }
    }
    throw UnknownSuite("unknown tensor suite '" + std::string(name) + "'");
  }

  std::vector<RepConfig> default_tensor_grid() {
    return {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {5, 2}};
  }

  namespace {

    // Generators act on places: s_i swaps factors i and i+1, p_j replaces
    // factor j by the sum of all basis vectors, p_{i+1/2} keeps tensors with
    // equal factors i and i+1.
    TensorVector place_action(GeneratorKind kind, int index, int n,
                              TensorIndex const& v) {
      std::size_t const i = static_cast<std::size_t>(index - 1);
      switch (kind) {
        case GeneratorKind::s: {
          TensorIndex w = v;
          std::swap(w[i], w[i + 1]);
          return {{w, Integer(1)}};
        }
        case GeneratorKind::p: {
          TensorVector out;
          for (int m = 1; m <= n; ++m) {
            TensorIndex w = v;
            w[i]          = m;
            out.emplace(std::move(w), Integer(1));
          }
          return out;
        }
        case GeneratorKind::p_half:
          if (v[i] == v[i + 1]) {
            return {{v, Integer(1)}};
          }
          return {};
      }
      return {};
    }

    struct Generator {
      GeneratorKind kind;
      int           index;
      std::string   name;
    };

    // Generators of A_r, or of A_{r+1/2} when `half`.
    std::vector<Generator> generators(int r, bool half) {
      std::vector<Generator> out;
      for (int j = 1; j <= r; ++j) {
        out.push_back({GeneratorKind::p, j, "p_" + std::to_string(j)});
      }
      int const last_half = half ? r : r - 1;
      for (int i = 1; i <= last_half; ++i) {
        out.push_back({GeneratorKind::p_half, i,
                       "p_" + HalfIndex::half(i).to_string()});
      }
      for (int i = 1; i <= r - 1; ++i) {
        out.push_back({GeneratorKind::s, i, "s_" + std::to_string(i)});
      }
      return out;
    }

    // Adjacent value transpositions generating S_m.
    std::vector<SparseOperator> symmetric_generators(RepConfig cfg, int m) {
      std::vector<SparseOperator> out;
      for (int a = 1; a < m; ++a) {
        out.push_back(
            SparseOperator::from_columns(cfg, [&](TensorIndex const& v) {
              return TensorVector{{swap_values(v, a, a + 1), Integer(1)}};
            }));
      }
      return out;
    }

    struct TensorSuiteBuilder {
      RepConfig                cfg;
      std::vector<CheckResult> checks;
      std::vector<std::string> notes;

      // Passes iff every operator equals the first.
      void equal(std::string id, std::vector<std::string> indices,
                 std::vector<SparseOperator> const& chain) {
        CheckResult res{std::move(id), std::move(indices), true, 0};
        for (std::size_t m = 1; m < chain.size(); ++m) {
          SparseOperator diff = chain[m] - chain[0];
          if (!diff.is_zero()) {
            res.pass           = false;
            res.residual_terms = diff.nonzero_count();
            break;
          }
        }
        checks.push_back(std::move(res));
      }

      // Passes iff `op` commutes with every operator in `with`.
      void commutes(std::string id, std::vector<std::string> indices,
                    SparseOperator const&              op,
                    std::vector<SparseOperator> const& with) {
        CheckResult res{std::move(id), std::move(indices), true, 0};
        for (auto const& t : with) {
          SparseOperator diff = op * t - t * op;
          if (!diff.is_zero()) {
            res.pass           = false;
            res.residual_terms = diff.nonzero_count();
            break;
          }
        }
        checks.push_back(std::move(res));
      }
    };

    AlgebraElement generator_element(Generator const& g, int rank) {
      return AlgebraElement::from_diagram(generator(g.kind, g.index, rank));
    }

    void require_cap(int rank) {
      if (rank > enumeration_cap()) {
        throw CapExceeded("tensor suite needs algebra rank "
                          + std::to_string(rank) + " above the cap "
                          + std::to_string(enumeration_cap())
                          + " (raise PA_MAX_RANK)");
      }
    }

    void generator_consistency(TensorSuiteBuilder& b) {
      RepConfig const cfg = b.cfg;
      for (Generator const& g : generators(cfg.r, false)) {
        SparseOperator expected =
            SparseOperator::from_columns(cfg, [&](TensorIndex const& v) {
              return place_action(g.kind, g.index, cfg.n, v);
            });
        b.equal("generator", {g.name},
                {expected, rep_operator(generator_element(g, cfg.r), cfg)});
      }
      for (Generator const& g : generators(cfg.r, true)) {
        SparseOperator expected =
            SparseOperator::from_columns(cfg, [&](TensorIndex const& v) {
              TensorIndex input = v;
              input.push_back(cfg.n);
              TensorVector out;
              for (auto& [w, val] : place_action(g.kind, g.index, cfg.n,
                                                 input)) {
                if (w.back() == cfg.n) {
                  out.emplace(TensorIndex(w.begin(), w.end() - 1), val);
                }
              }
              return out;
            });
        b.equal("half_generator", {g.name},
                {expected,
                 rep_operator(generator_element(g, cfg.r + 1), cfg, true)});
      }
    }

    void sigma_formulas(TensorSuiteBuilder& b) {
      RepConfig const cfg = b.cfg;
      require_cap(cfg.r);
      JMCache const cache(cfg.r);
      for (int d = 3; d <= 2 * cfg.r; ++d) {
        HalfIndex const h{d};
        b.equal("sigma", {h.to_string()},
                {SparseOperator::from_columns(cfg,
                                              [&](TensorIndex const& v) {
                                                return sigma_action_direct(
                                                    h, cfg, v);
                                              }),
                 rep_operator(cache.sigma(h), cfg)});
      }
    }

    void L_formulas(TensorSuiteBuilder& b) {
      RepConfig const cfg = b.cfg;
      require_cap(cfg.r);
      JMCache const cache(cfg.r);
      for (int d = 1; d <= 2 * cfg.r; ++d) {
        HalfIndex const h{d};
        b.equal("L", {h.to_string()},
                {SparseOperator::from_columns(cfg,
                                              [&](TensorIndex const& v) {
                                                return L_action_direct(h, cfg,
                                                                       v);
                                              }),
                 rep_operator(cache.L(h), cfg)});
      }
    }

    Integer binom2(int n) {
      return Integer(n) * (n - 1) / 2;
    }

    void central_action(TensorSuiteBuilder& b) {
      RepConfig const cfg = b.cfg;
      int const       r   = cfg.r;
      if (r < 1) {
        return;
      }
      require_cap(r);
      JMCache const        cache(r);
      SparseOperator const id = SparseOperator::identity(cfg);
      Integer const        c2 = binom2(cfg.n);
      b.equal("z_whole", {std::to_string(r)},
              {kappa_operator(cfg) - (c2 - Integer(r) * cfg.n) * id,
               rep_operator(cache.central(HalfIndex::whole(r)), cfg)});
      if (r >= 2) {
        HalfIndex const h{2 * r - 1};
        b.equal("z_half", {h.to_string()},
                {kappa_last_operator(cfg) - (c2 - Integer(r) * cfg.n + 1) * id,
                 rep_operator(cache.central(h), cfg)});
      }
    }

    void commutant(TensorSuiteBuilder& b) {
      RepConfig const cfg   = b.cfg;
      auto const      whole = symmetric_generators(cfg, cfg.n);
      for (Generator const& g : generators(cfg.r, false)) {
        b.commutes("S_n", {g.name},
                   rep_operator(generator_element(g, cfg.r), cfg), whole);
      }
      auto const fixing = symmetric_generators(cfg, cfg.n - 1);
      for (Generator const& g : generators(cfg.r, true)) {
        b.commutes("S_n-1", {g.name},
                   rep_operator(generator_element(g, cfg.r + 1), cfg, true),
                   fixing);
      }
    }

    void hr_equality(TensorSuiteBuilder& b) {
      RepConfig const outer = b.cfg;
      if (outer.r >= 1) {
        require_cap(outer.r + 1);
      }
      Integer const c2 = binom2(outer.n);
      for (int k = 1; k <= outer.r; ++k) {
        RepConfig const      cfg{outer.n, k};
        JMCache const        cache(k + 1);
        SparseOperator const id = SparseOperator::identity(cfg);
        HalfIndex const      whole = HalfIndex::whole(k);
        HalfIndex const      half  = HalfIndex::half(k);
        SparseOperator const hr_whole =
            kappa_operator(cfg) - (c2 - Integer(k) * outer.n) * id;
        SparseOperator const hr_half =
            kappa_operator(cfg, outer.n)
            - (c2 - Integer(k + 1) * outer.n + 1) * id;
        b.equal("Z_whole", {whole.to_string()},
                {hr_whole, rep_operator(cache.central(whole), cfg, true)});
        b.equal("Z_half", {half.to_string()},
                {hr_half, rep_operator(cache.central(half), cfg, true)});
        b.equal("M_equals_L", {half.to_string()},
                {hr_half - hr_whole, rep_operator(cache.L(half), cfg, true)});
      }
      b.notes.push_back(
          "only indices >= 3/2 are compared: M_1 = p_1 - 1 differs from "
          "L_1 = p_1");
    }

  }  // namespace

  VerificationReport verify_tensor_suite(TensorSuite s, RepConfig cfg,
                                         std::size_t budget) {
    cfg.validate(budget);
    auto const         start = std::chrono::steady_clock::now();
    TensorSuiteBuilder builder{cfg, {}, {}};
    switch (s) {
      case TensorSuite::generator_consistency:
        generator_consistency(builder);
        break;
      case TensorSuite::sigma_formulas:
        sigma_formulas(builder);
        break;
      case TensorSuite::L_formulas:
        L_formulas(builder);
        break;
      case TensorSuite::central_action:
        central_action(builder);
        break;
      case TensorSuite::commutant:
        commutant(builder);
        break;
      case TensorSuite::hr_equality:
        hr_equality(builder);
        break;
    }
    VerificationReport report;
    report.suite  = "tensor:" + std::string(tensor_suite_name(s));
    report.rank   = cfg.r;
    report.n      = cfg.n;
    report.checks = std::move(builder.checks);
    report.notes  = std::move(builder.notes);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
  }

}  // namespace partalg
