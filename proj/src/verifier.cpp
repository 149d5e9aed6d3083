#include "partalg/verifier.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <utility>

#include "partalg/errors.hpp"

namespace partalg {

  namespace {

    using Chain    = std::vector<AlgebraElement>;
    using Producer = std::function<Chain()>;

    // Element access at the cache's ambient rank. ph(i) is p_{i+1/2},
    // Lh(i) is L_{i+1/2}, sgh(i) is sigma_{i+1/2}.
    struct Ops {
      JMCache const* c;

      AlgebraElement s(int i) const {
        return c->s(i);
      }
      AlgebraElement p(int j) const {
        return c->p(j);
      }
      AlgebraElement ph(int i) const {
        return c->p_half(i);
      }
      AlgebraElement L(int i) const {
        return c->L(HalfIndex::whole(i));
      }
      AlgebraElement Lh(int i) const {
        return c->L(HalfIndex::half(i));
      }
      AlgebraElement sg(int i) const {
        return c->sigma(HalfIndex::whole(i));
      }
      AlgebraElement sgh(int i) const {
        return c->sigma(HalfIndex::half(i));
      }
      AlgebraElement one() const {
        return c->one();
      }
      AlgebraElement z() const {
        return AlgebraElement::scalar(c->ambient_rank(), z_poly());
      }
      AlgebraElement zero() const {
        return AlgebraElement(c->ambient_rank());
      }
    };

    std::string ix(int i) {
      return std::to_string(i);
    }

    std::string hx(int doubled) {
      return HalfIndex{doubled}.to_string();
    }

    struct Pending {
      std::string              id;
      std::vector<std::string> indices;
      Producer                 make;
    };

    class SuiteBuilder {
     public:
      explicit SuiteBuilder(JMCache const& cache)
          : o{&cache}, k(cache.ambient_rank()) {}

      Ops const o;
      int const k;

      // `needs` is the least ambient rank containing every element of the
      // instance.
      void add(std::string id, std::vector<std::string> indices, int needs,
               Producer make) {
        if (needs > k) {
          ++out_of_range;
          return;
        }
        pending.push_back({std::move(id), std::move(indices), std::move(make)});
      }

      template <typename A, typename B>
      void commute(std::string id, std::vector<std::string> indices,
                   int needs, A a, B b) {
        add(std::move(id), std::move(indices), needs, [a, b] {
          AlgebraElement x = a();
          AlgebraElement y = b();
          return Chain{x * y, y * x};
        });
      }

      void note(std::string text) {
        notes.push_back(std::move(text));
      }

      std::vector<Pending>     pending;
      std::vector<std::string> notes;
      int                      out_of_range = 0;
    };

    // Generators of A_{doubled/2} with their display names.
    std::vector<std::pair<std::string, AlgebraElement>>
    subalgebra_generators(Ops const& o, int doubled) {
      int const whole = doubled / 2;
      int const halfs = (doubled - 1) / 2;  // p_{j+1/2} for j = 1..halfs
      std::vector<std::pair<std::string, AlgebraElement>> gens;
      for (int j = 1; j <= whole; ++j) {
        gens.emplace_back("p_" + ix(j), o.p(j));
      }
      for (int j = 1; j <= halfs; ++j) {
        gens.emplace_back("p_" + hx(2 * j + 1), o.ph(j));
      }
      for (int j = 1; j < whole; ++j) {
        gens.emplace_back("s_" + ix(j), o.s(j));
      }
      return gens;
    }

    void hr_presentation(SuiteBuilder& b) {
      Ops const o = b.o;
      int const k = b.k;
      for (int i = 1; i <= k - 1; ++i) {
        b.add("coxeter.s_square", {ix(i)}, i + 1,
              [=] { return Chain{o.s(i) * o.s(i), o.one()}; });
      }
      for (int i = 1; i <= k - 1; ++i) {
        for (int j = 1; j <= k - 1; ++j) {
          if (std::abs(i - j) != 1) {
            b.commute("coxeter.s_far_commute", {ix(i), ix(j)}, k,
                      [=] { return o.s(i); }, [=] { return o.s(j); });
          }
        }
      }
      for (int i = 1; i <= k - 2; ++i) {
        b.add("coxeter.braid", {ix(i)}, i + 2, [=] {
          return Chain{product(o.s(i), o.s(i + 1), o.s(i)),
                       product(o.s(i + 1), o.s(i), o.s(i + 1))};
        });
      }
      for (int i = 1; i <= k; ++i) {
        b.add("idempotent.p_square", {ix(i)}, i,
              [=] { return Chain{o.p(i) * o.p(i), o.z() * o.p(i)}; });
      }
      for (int i = 1; i <= k - 1; ++i) {
        b.add("idempotent.p_half_square", {ix(i)}, i + 1,
              [=] { return Chain{o.ph(i) * o.ph(i), o.ph(i)}; });
        b.add("idempotent.s_absorbs_p_half", {ix(i)}, i + 1, [=] {
          return Chain{o.s(i) * o.ph(i), o.ph(i) * o.s(i), o.ph(i)};
        });
        b.add("idempotent.s_absorbs_p_pair", {ix(i)}, i + 1, [=] {
          return Chain{product(o.s(i), o.p(i), o.p(i + 1)),
                       product(o.p(i), o.p(i + 1), o.s(i)),
                       o.p(i) * o.p(i + 1)};
        });
      }
      for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
          b.commute("commute.p_p", {ix(i), ix(j)}, k, [=] { return o.p(i); },
                    [=] { return o.p(j); });
        }
      }
      for (int i = 1; i <= k - 1; ++i) {
        for (int j = 1; j <= k - 1; ++j) {
          b.commute("commute.p_half_p_half", {ix(i), ix(j)}, k,
                    [=] { return o.ph(i); }, [=] { return o.ph(j); });
        }
      }
      b.note("commute.p_p_half: p_i and p_{j+1/2} checked for j not in "
             "{i-1, i}");
      for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k - 1; ++j) {
          if (j != i - 1 && j != i) {
            b.commute("commute.p_p_half", {ix(i), ix(j)}, k,
                      [=] { return o.p(i); }, [=] { return o.ph(j); });
          }
        }
      }
      for (int i = 1; i <= k - 1; ++i) {
        for (int j = 1; j <= k; ++j) {
          if (j != i && j != i + 1) {
            b.commute("commute.s_p", {ix(i), ix(j)}, k,
                      [=] { return o.s(i); }, [=] { return o.p(j); });
          }
        }
        for (int j = 1; j <= k - 1; ++j) {
          if (j != i - 1 && j != i + 1) {
            b.commute("commute.s_p_half", {ix(i), ix(j)}, k,
                      [=] { return o.s(i); }, [=] { return o.ph(j); });
          }
        }
      }
      b.note("coxeter.s_far_commute: s_i and s_j checked for |i-j| != 1");
      for (int i = 1; i <= k - 1; ++i) {
        b.add("conjugate.s_p", {ix(i)}, i + 1, [=] {
          return Chain{product(o.s(i), o.p(i), o.s(i)), o.p(i + 1)};
        });
      }
      for (int i = 2; i <= k - 1; ++i) {
        b.add("conjugate.s_p_half", {ix(i)}, i + 1, [=] {
          return Chain{product(o.s(i), o.ph(i - 1), o.s(i)),
                       product(o.s(i - 1), o.ph(i), o.s(i - 1))};
        });
      }
      for (int i = 1; i <= k - 1; ++i) {
        for (int j : {i, i + 1}) {
          b.add("contract.p_half_p", {ix(i), ix(j)}, i + 1, [=] {
            return Chain{product(o.ph(i), o.p(j), o.ph(i)), o.ph(i)};
          });
        }
      }
      // p_i p_{j-1/2} p_i = p_i for j = i, i+1; p_{1/2} is not a generator.
      for (int i = 1; i <= k; ++i) {
        for (int j : {i, i + 1}) {
          if (j - 1 >= 1) {
            b.add("contract.p_p_half", {ix(i), ix(j)}, j, [=] {
              return Chain{product(o.p(i), o.ph(j - 1), o.p(i)), o.p(i)};
            });
          }
        }
      }
    }

    void hr_derived(SuiteBuilder& b) {
      Ops const o = b.o;
      for (int i = 1; i <= b.k; ++i) {
        b.add("p_half_s_next", {ix(i)}, i + 2, [=] {
          return Chain{product(o.ph(i), o.s(i + 1), o.ph(i)),
                       o.ph(i) * o.ph(i + 1)};
        });
        if (i >= 2) {
          b.add("p_half_s_prev", {ix(i)}, i + 1, [=] {
            return Chain{product(o.ph(i), o.s(i - 1), o.ph(i)),
                         o.ph(i) * o.ph(i - 1)};
          });
        }
        b.add("p_s_p", {ix(i)}, i + 1, [=] {
          return Chain{product(o.p(i), o.s(i), o.p(i)), o.p(i) * o.p(i + 1),
                       product(o.p(i + 1), o.s(i), o.p(i + 1))};
        });
        b.add("p_p_half_p_ascending", {ix(i)}, i + 1, [=] {
          return Chain{product(o.p(i), o.ph(i), o.p(i + 1)), o.p(i) * o.s(i)};
        });
        b.add("p_p_half_p_descending", {ix(i)}, i + 1, [=] {
          return Chain{product(o.p(i + 1), o.ph(i), o.p(i)),
                       o.p(i + 1) * o.s(i)};
        });
      }
    }

    void prel_a(SuiteBuilder& b) {
      Ops const o = b.o;
      for (int i = 1; i <= b.k; ++i) {
        b.add("sigma_absorbs_p_half", {ix(i)}, i + 1,
              [=] { return Chain{o.sg(i + 1) * o.ph(i), o.ph(i)}; });
        b.add("shift_p_half", {ix(i)}, i + 2, [=] {
          return Chain{product(o.s(i + 1), o.sg(i + 1), o.ph(i + 1)),
                       product(o.ph(i), o.s(i + 1), o.sg(i + 1))};
        });
        b.add("sigma_p_lower", {ix(i)}, i + 1, [=] {
          return Chain{product(o.sg(i + 1), o.p(i), o.ph(i)),
                       product(o.s(i), o.L(i), o.ph(i))};
        });
        b.add("sigma_p_upper", {ix(i)}, i + 1, [=] {
          return Chain{product(o.sg(i + 1), o.p(i + 1), o.ph(i)),
                       o.L(i) * o.ph(i)};
        });
        b.add("p_half_L_p_half", {ix(i)}, i + 1, [=] {
          return Chain{product(o.ph(i), o.L(i), o.ph(i)), o.ph(i)};
        });
      }
    }

    void star_invariance(SuiteBuilder& b) {
      JMCache const& c = *b.o.c;
      for (int d = 0; d <= 2 * b.k; ++d) {
        b.add("L", {hx(d)}, HalfIndex{d}.ceiling(), [&c, d] {
          return Chain{star(c.L({d})), c.L({d})};
        });
        if (d >= 1) {
          b.add("sigma", {hx(d)}, HalfIndex{d}.ceiling(), [&c, d] {
            return Chain{star(c.sigma({d})), c.sigma({d})};
          });
        }
      }
    }

    void sigma_split(SuiteBuilder& b) {
      Ops const o = b.o;
      for (int i = 1; i <= b.k; ++i) {
        b.add("split", {ix(i)}, i + 1, [=] {
          return Chain{o.sgh(i) * o.s(i), o.s(i) * o.sgh(i), o.sg(i + 1)};
        });
        b.add("coxeter_from_sigma", {ix(i)}, i + 1, [=] {
          return Chain{o.s(i), o.sgh(i) * o.sg(i + 1), o.sg(i + 1) * o.sgh(i)};
        });
      }
    }

    void lemma_f10(SuiteBuilder& b) {
      Ops const o = b.o;
      for (int i = 1; i <= b.k; ++i) {
        b.add("chain", {ix(i)}, i + 2, [=] {
          return Chain{
              product(o.s(i), o.s(i + 1), o.sg(i + 1), o.s(i + 1), o.s(i),
                      o.ph(i)),
              product(o.s(i + 1), o.ph(i), o.L(i), o.s(i), o.ph(i + 1),
                      o.p(i + 1), o.ph(i)),
              product(o.sgh(i), o.s(i + 1), o.ph(i))};
        });
      }
    }

    void thm_ab(SuiteBuilder& b) {
      Ops const o = b.o;
      b.note("sigma_p_below: closed form checked as "
             "s_{i-1} s_i sigma_i p_{i+1} s_i s_{i-1}; without the s_i after "
             "s_{i-1} the equality fails");
      for (int i = 2; i <= b.k; ++i) {
        b.add("sigma_p_half_below", {ix(i)}, i + 1, [=] {
          return Chain{o.sg(i + 1) * o.ph(i - 1), o.ph(i - 1) * o.sg(i + 1),
                       product(o.ph(i - 1), o.L(i - 1), o.s(i), o.ph(i - 1))};
        });
        b.add("sigma_p_below", {ix(i)}, i + 1, [=] {
          return Chain{o.sg(i + 1) * o.p(i - 1), o.p(i - 1) * o.sg(i + 1),
                       product(o.s(i - 1), o.s(i), o.sg(i), o.p(i + 1), o.s(i),
                               o.s(i - 1))};
        });
        b.commute("half_sigma_p_below", {ix(i)}, i + 1,
                  [=] { return o.sgh(i); }, [=] { return o.p(i - 1); });
      }
      for (int i = 3; i <= b.k; ++i) {
        b.commute("sigma_p_half_two_below", {ix(i)}, i + 1,
                  [=] { return o.sg(i + 1); }, [=] { return o.ph(i - 2); });
        b.commute("sigma_s_two_below", {ix(i)}, i + 1,
                  [=] { return o.sg(i + 1); }, [=] { return o.s(i - 2); });
        b.commute("sigma_p_two_below", {ix(i)}, i + 1,
                  [=] { return o.sg(i + 1); }, [=] { return o.p(i - 2); });
        b.commute("half_sigma_p_half_two_below", {ix(i)}, i + 1,
                  [=] { return o.sgh(i); }, [=] { return o.ph(i - 2); });
        b.commute("half_sigma_s_two_below", {ix(i)}, i + 1,
                  [=] { return o.sgh(i); }, [=] { return o.s(i - 2); });
        b.commute("half_sigma_p_two_below", {ix(i)}, i + 1,
                  [=] { return o.sgh(i); }, [=] { return o.p(i - 2); });
      }
    }

    void thm_ac(SuiteBuilder& b) {
      Ops const o = b.o;
      for (int i = 1; i <= b.k; ++i) {
        b.add("L_p_half", {ix(i)}, i + 1, [=] {
          return Chain{o.L(i + 1) * o.ph(i), o.ph(i) * o.L(i + 1),
                       product(o.ph(i), o.L(i), o.p(i + 1), o.ph(i))};
        });
        b.commute("L_p", {ix(i)}, i + 1, [=] { return o.L(i + 1); },
                  [=] { return o.p(i); });
        b.commute("half_L_p", {ix(i)}, i + 1, [=] { return o.Lh(i); },
                  [=] { return o.p(i); });
      }
      for (int i = 2; i <= b.k; ++i) {
        b.commute("L_p_half_below", {ix(i)}, i + 1,
                  [=] { return o.L(i + 1); }, [=] { return o.ph(i - 1); });
        b.commute("L_s_below", {ix(i)}, i + 1, [=] { return o.L(i + 1); },
                  [=] { return o.s(i - 1); });
        b.commute("L_p_below", {ix(i)}, i + 1, [=] { return o.L(i + 1); },
                  [=] { return o.p(i - 1); });
        b.commute("half_L_p_half_below", {ix(i)}, i + 1,
                  [=] { return o.Lh(i); }, [=] { return o.ph(i - 1); });
        b.commute("half_L_s_below", {ix(i)}, i + 1, [=] { return o.Lh(i); },
                  [=] { return o.s(i - 1); });
        b.commute("half_L_p_below", {ix(i)}, i + 1, [=] { return o.Lh(i); },
                  [=] { return o.p(i - 1); });
      }
    }

    void pairwise_commute(SuiteBuilder& b) {
      Ops const o = b.o;
      // Each element against the generators of the subalgebra it centralizes,
      // as doubled indices: (element index, subalgebra index).
      struct Claim {
        char const* id;
        bool        is_L;
        int         element;
        int         subalgebra;
      };
      for (int i = 1; i <= b.k; ++i) {
        Claim const claims[] = {
            {"L_centralizes", true, 2 * i + 2, 2 * i + 1},
            {"sigma_centralizes", false, 2 * i + 2, 2 * i - 1},
            {"L_centralizes", true, 2 * i + 1, 2 * i},
            {"sigma_centralizes", false, 2 * i + 1, 2 * i - 2},
        };
        for (Claim const& claim : claims) {
          int const needs = HalfIndex{claim.element}.ceiling();
          if (needs > b.k) {
            ++b.out_of_range;
            continue;
          }
          for (auto& [name, g] : subalgebra_generators(o, claim.subalgebra)) {
            bool const is_L = claim.is_L;
            int const  e    = claim.element;
            b.commute(
                claim.id, {hx(e), hx(claim.subalgebra), name}, needs,
                [=] { return is_L ? o.c->L({e}) : o.c->sigma({e}); },
                [g = g] { return g; });
          }
        }
      }
      for (int d1 = 0; d1 <= 2 * b.k; ++d1) {
        for (int d2 = d1 + 1; d2 <= 2 * b.k; ++d2) {
          b.commute("L_pair", {hx(d1), hx(d2)}, HalfIndex{d2}.ceiling(),
                    [=] { return o.c->L({d1}); },
                    [=] { return o.c->L({d2}); });
        }
      }
    }

    void jm_commute(SuiteBuilder& b) {
      Ops const o = b.o;
      for (int i = 1; i <= b.k; ++i) {
        b.add("contract_p", {ix(i)}, i + 1, [=] {
          AlgebraElement sum = o.Lh(i) + o.L(i + 1);
          return Chain{sum * o.p(i + 1), o.p(i + 1) * sum, o.z() * o.p(i + 1)};
        });
        b.add("contract_p_half", {ix(i)}, i + 1, [=] {
          AlgebraElement sum = o.L(i) + o.Lh(i);
          return Chain{sum * o.ph(i), o.ph(i) * sum, o.z() * o.ph(i)};
        });
        b.commute("window_s", {ix(i)}, i + 1,
                  [=] { return o.Lh(i - 1) + o.L(i) + o.Lh(i) + o.L(i + 1); },
                  [=] { return o.s(i); });
      }
    }

    void centrality(SuiteBuilder& b) {
      Ops const o = b.o;
      for (int d = 1; d <= 2 * b.k; ++d) {
        for (auto& [name, g] : subalgebra_generators(o, d)) {
          b.commute("central", {hx(d), name}, HalfIndex{d}.ceiling(),
                    [=] { return o.c->central({d}); }, [g = g] { return g; });
        }
      }
    }

    void c_e(SuiteBuilder& b) {
      Ops const o = b.o;
      for (int i = 1; i <= b.k; ++i) {
        b.commute("window_sigma", {ix(i)}, i + 1,
                  [=] { return o.L(i) + o.Lh(i) + o.L(i + 1); },
                  [=] { return o.sg(i + 1); });
        b.commute("window_half_sigma", {ix(i)}, i + 1,
                  [=] { return o.Lh(i - 1) + o.L(i) + o.Lh(i); },
                  [=] { return o.sgh(i); });
      }
    }

    void n_pres(SuiteBuilder& b) {
      Ops const o = b.o;
      int const k = b.k;
      // Coxeter generator rebuilt from the sigma family.
      auto cox = [o](int l) {
        return l == 1 ? o.sg(2) : o.sgh(l) * o.sg(l + 1);
      };
      for (int i = 2; i <= k - 1; ++i) {
        b.add("involution.half_sigma", {ix(i)}, i + 1,
              [=] { return Chain{o.sgh(i) * o.sgh(i), o.one()}; });
      }
      for (int i = 1; i <= k - 1; ++i) {
        b.add("involution.sigma", {ix(i)}, i + 1,
              [=] { return Chain{o.sg(i + 1) * o.sg(i + 1), o.one()}; });
      }
      for (int i = 1; i <= k - 1; ++i) {
        for (int j = 2; j <= k - 1; ++j) {
          if (j != i + 1) {
            b.commute("braid.sigma_half_sigma", {ix(i), ix(j)}, k,
                      [=] { return o.sg(i + 1); },
                      [=] { return o.sgh(j); });
          }
        }
      }
      b.note("braid.sigma_sigma and braid.half_sigma_half_sigma: checked "
             "for |i-j| != 1");
      for (int i = 2; i <= k; ++i) {
        for (int j = 2; j <= k; ++j) {
          if (std::abs(i - j) != 1) {
            b.commute("braid.sigma_sigma", {ix(i), ix(j)}, k,
                      [=] { return o.sg(i); }, [=] { return o.sg(j); });
          }
        }
      }
      for (int i = 2; i <= k - 1; ++i) {
        for (int j = 2; j <= k - 1; ++j) {
          if (std::abs(i - j) != 1) {
            b.commute("braid.half_sigma_half_sigma", {ix(i), ix(j)}, k,
                      [=] { return o.sgh(i); }, [=] { return o.sgh(j); });
          }
        }
      }
      for (int i = 1; i <= k - 2; ++i) {
        b.add("braid.coxeter", {ix(i)}, i + 2, [=] {
          return Chain{product(cox(i), cox(i + 1), cox(i)),
                       product(cox(i + 1), cox(i), cox(i + 1))};
        });
      }
      for (int i = 1; i <= k; ++i) {
        b.add("idempotent.p_square", {ix(i)}, i,
              [=] { return Chain{o.p(i) * o.p(i), o.z() * o.p(i)}; });
      }
      b.note("idempotent.p_half_square: the stated relation has p_{i+1/2}^2 "
             "on both sides; checked as p_{i+1/2}^2 = p_{i+1/2}");
      for (int i = 1; i <= k - 1; ++i) {
        b.add("idempotent.p_half_square", {ix(i)}, i + 1,
              [=] { return Chain{o.ph(i) * o.ph(i), o.ph(i)}; });
        b.add("idempotent.sigma_absorbs_p_half", {ix(i)}, i + 1, [=] {
          return Chain{o.sg(i + 1) * o.ph(i), o.ph(i) * o.sg(i + 1), o.ph(i)};
        });
        b.add("idempotent.half_sigma_absorbs_p_half", {ix(i)}, i + 1, [=] {
          return Chain{o.sgh(i) * o.ph(i), o.ph(i) * o.sgh(i), o.ph(i)};
        });
        b.add("idempotent.sigmas_agree_left_of_p_pair", {ix(i)}, i + 1, [=] {
          return Chain{product(o.sgh(i), o.p(i), o.p(i + 1)),
                       product(o.sg(i + 1), o.p(i), o.p(i + 1))};
        });
        b.add("idempotent.sigmas_agree_right_of_p_pair", {ix(i)}, i + 1, [=] {
          return Chain{product(o.p(i), o.p(i + 1), o.sgh(i)),
                       product(o.p(i), o.p(i + 1), o.sg(i + 1))};
        });
      }
      for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
          b.commute("commute.p_p", {ix(i), ix(j)}, k, [=] { return o.p(i); },
                    [=] { return o.p(j); });
        }
      }
      for (int i = 1; i <= k - 1; ++i) {
        for (int j = 1; j <= k - 1; ++j) {
          b.commute("commute.p_half_p_half", {ix(i), ix(j)}, k,
                    [=] { return o.ph(i); }, [=] { return o.ph(j); });
        }
        for (int j = 1; j <= k; ++j) {
          if (j != i && j != i + 1) {
            b.commute("commute.p_half_p", {ix(i), ix(j)}, k,
                      [=] { return o.ph(i); }, [=] { return o.p(j); });
          }
        }
      }
      for (int i = 2; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
          if (j != i - 1 && j != i) {
            b.commute("commute.sigma_p", {ix(i), ix(j)}, k,
                      [=] { return o.sg(i); }, [=] { return o.p(j); });
          }
        }
        for (int j = 1; j <= k - 1; ++j) {
          if (j != i) {
            b.commute("commute.sigma_p_half", {ix(i), ix(j)}, k,
                      [=] { return o.sg(i); }, [=] { return o.ph(j); });
          }
        }
      }
      for (int i = 2; i <= k - 1; ++i) {
        for (int j = 1; j <= k; ++j) {
          if (j != i && j != i + 1) {
            b.commute("commute.half_sigma_p", {ix(i), ix(j)}, k,
                      [=] { return o.sgh(i); }, [=] { return o.p(j); });
          }
        }
        for (int j = 1; j <= k - 1; ++j) {
          if (j != i - 1) {
            b.commute("commute.half_sigma_p_half", {ix(i), ix(j)}, k,
                      [=] { return o.sgh(i); }, [=] { return o.ph(j); });
          }
        }
      }
      for (int i = 1; i <= k - 1; ++i) {
        b.add("commute.conjugate_p", {ix(i)}, i + 1, [=] {
          return Chain{product(o.sgh(i), o.p(i), o.sgh(i)),
                       product(o.sg(i + 1), o.p(i + 1), o.sg(i + 1))};
        });
      }
      for (int i = 2; i <= k - 1; ++i) {
        b.add("commute.conjugate_p_half", {ix(i)}, i + 1, [=] {
          return Chain{product(o.sgh(i), o.ph(i - 1), o.sgh(i)),
                       product(o.sg(i), o.ph(i), o.sg(i))};
        });
      }
      for (int i = 1; i <= k - 1; ++i) {
        for (int j : {i, i + 1}) {
          b.add("contract.p_half_p", {ix(i), ix(j)}, i + 1, [=] {
            return Chain{product(o.ph(i), o.p(j), o.ph(i)), o.ph(i)};
          });
        }
      }
      for (int i = 1; i <= k; ++i) {
        for (int j : {i, i + 1}) {
          if (j - 1 >= 1) {
            b.add("contract.p_p_half", {ix(i), ix(j)}, j, [=] {
              return Chain{product(o.p(i), o.ph(j - 1), o.p(i)), o.p(i)};
            });
          }
        }
      }
    }

    void sigma_involution(SuiteBuilder& b) {
      Ops const o = b.o;
      for (int d = 1; d <= 2 * b.k; ++d) {
        b.add("square", {hx(d)}, HalfIndex{d}.ceiling(), [=] {
          auto const& x = o.c->sigma({d});
          return Chain{x * x, o.one()};
        });
      }
      // The five summands of the sigma_{i+1} recursion, signs dropped.
      struct Summands {
        AlgebraElement A, B, C, D, E;
      };
      auto summands = [o](int i) {
        auto const Lp = o.L(i - 1);
        return Summands{
            product(o.s(i - 1), o.s(i), o.sg(i), o.s(i), o.s(i - 1)),
            product(o.s(i), o.ph(i - 1), Lp, o.s(i), o.ph(i - 1), o.s(i)),
            product(o.ph(i - 1), Lp, o.s(i), o.ph(i - 1)),
            product(o.s(i), o.ph(i - 1), Lp, o.s(i - 1), o.ph(i), o.p(i),
                    o.ph(i - 1)),
            product(o.ph(i - 1), o.p(i), o.ph(i), o.s(i - 1), Lp, o.ph(i - 1),
                    o.s(i)),
        };
      };
      using Pick = Chain (*)(Summands const&);
      std::pair<char const*, Pick> const identities[] = {
          {"summands.EE=EC", [](Summands const& t) {
             return Chain{t.E * t.E, t.E * t.C};
           }},
          {"summands.ED=EA", [](Summands const& t) {
             return Chain{t.E * t.D, t.E * t.A};
           }},
          {"summands.EB=AB", [](Summands const& t) {
             return Chain{t.E * t.B, t.A * t.B};
           }},
          {"summands.DE=DA", [](Summands const& t) {
             return Chain{t.D * t.E, t.D * t.A};
           }},
          {"summands.DD=CD", [](Summands const& t) {
             return Chain{t.D * t.D, t.C * t.D};
           }},
          {"summands.DC=AC", [](Summands const& t) {
             return Chain{t.D * t.C, t.A * t.C};
           }},
          {"summands.CE=CA", [](Summands const& t) {
             return Chain{t.C * t.E, t.C * t.A};
           }},
          {"summands.DB=CB", [](Summands const& t) {
             return Chain{t.D * t.B, t.C * t.B};
           }},
          {"summands.CC=AD", [](Summands const& t) {
             return Chain{t.C * t.C, t.A * t.D};
           }},
          {"summands.AE=BB", [](Summands const& t) {
             return Chain{t.A * t.E, t.B * t.B};
           }},
          {"summands.AA=1", [](Summands const& t) {
             return Chain{t.A * t.A,
                          AlgebraElement::identity(t.A.rank())};
           }},
          {"summands.BE=BC", [](Summands const& t) {
             return Chain{t.B * t.E, t.B * t.C};
           }},
          {"summands.BD=BA", [](Summands const& t) {
             return Chain{t.B * t.D, t.B * t.A};
           }},
      };
      for (int i = 2; i <= b.k; ++i) {
        for (auto const& [id, pick] : identities) {
          b.add(id, {ix(i)}, i + 1,
                [=, pick = pick] { return pick(summands(i)); });
        }
      }
    }

    void r_2(SuiteBuilder& b) {
      Ops const o = b.o;
      for (int i = 1; i <= b.k; ++i) {
        b.add("p_sigma_p", {ix(i)}, i + 1, [=] {
          return Chain{product(o.p(i + 1), o.sg(i + 1), o.p(i + 1)),
                       o.L(i) * o.p(i + 1)};
        });
        b.add("p_half_sigma_p", {ix(i)}, i + 1, [=] {
          return Chain{product(o.p(i + 1), o.sgh(i), o.p(i + 1)),
                       (o.z() - o.Lh(i - 1)) * o.p(i + 1)};
        });
        b.add("p_half_sigma_p_half", {ix(i)}, i + 2, [=] {
          return Chain{product(o.ph(i + 1), o.sg(i + 1), o.ph(i + 1)),
                       o.ph(i) * o.ph(i + 1)};
        });
      }
    }

    void alt_recursion(SuiteBuilder& b) {
      Ops const o = b.o;
      b.note("last_summand_rewrite: third member checked with p_{i+1} s_i; "
             "the order s_i p_{i+1} breaks the chain");
      for (int i = 2; i <= b.k; ++i) {
        b.add("half_sigma_rewritten", {ix(i)}, i + 1, [=] {
          return Chain{o.c->sigma_half_alt(i), o.sgh(i)};
        });
        b.add("last_summand_rewrite", {ix(i)}, i + 1, [=] {
          auto const Lp = o.L(i - 1);
          auto const lo = o.s(i - 1);
          auto const hi = o.s(i);
          return Chain{
              product(hi, o.ph(i - 1), o.p(i), o.ph(i), lo, Lp, o.ph(i - 1),
                      hi),
              product(lo, o.ph(i), lo, hi, o.p(i), o.ph(i), lo, Lp, hi, lo,
                      o.ph(i), lo),
              product(lo, o.ph(i), lo, o.p(i + 1), hi, o.ph(i), lo, hi, Lp, lo,
                      o.ph(i), lo),
              product(lo, o.ph(i), lo, o.p(i + 1), lo, hi, o.ph(i - 1), Lp, lo,
                      o.ph(i), lo),
              product(lo, o.ph(i), o.p(i), o.ph(i - 1), Lp, lo, o.ph(i), lo)};
        });
      }
      for (int i = 1; i <= b.k; ++i) {
        b.add("half_L_rewritten", {ix(i)}, i + 1, [=] {
          return Chain{o.c->L_half_alt(i), o.Lh(i)};
        });
      }
    }

    using SuiteFn = void (*)(SuiteBuilder&);

    SuiteFn suite_fn(SuiteId id) {
      switch (id) {
        case SuiteId::hr_presentation:
          return hr_presentation;
        case SuiteId::hr_derived:
          return hr_derived;
        case SuiteId::prel_a:
          return prel_a;
        case SuiteId::star_invariance:
          return star_invariance;
        case SuiteId::sigma_split:
          return sigma_split;
        case SuiteId::lemma_f10:
          return lemma_f10;
        case SuiteId::thm_ab:
          return thm_ab;
        case SuiteId::thm_ac:
          return thm_ac;
        case SuiteId::pairwise_commute:
          return pairwise_commute;
        case SuiteId::jm_commute:
          return jm_commute;
        case SuiteId::centrality:
          return centrality;
        case SuiteId::c_e:
          return c_e;
        case SuiteId::n_pres:
          return n_pres;
        case SuiteId::sigma_involution:
          return sigma_involution;
        case SuiteId::r_2:
          return r_2;
        case SuiteId::alt_recursion:
          return alt_recursion;
      }
      throw UnknownSuite("unknown suite id");
    }

    CheckResult evaluate_check(Pending const& item) {
      CheckResult r{item.id, item.indices, true, 0};
      Chain const chain = item.make();
      for (std::size_t m = 1; m < chain.size(); ++m) {
        if (!(chain[m] == chain[0])) {
          r.pass           = false;
          r.residual_terms = (chain[m] - chain[0]).size();
          break;
        }
      }
      return r;
    }

    std::vector<CheckResult> run_checks(std::vector<Pending> const& pending,
                                        int                         jobs) {
      std::vector<CheckResult> results(pending.size());
      std::size_t const        workers =
          std::min<std::size_t>(std::max(jobs, 1), pending.size());
      if (workers <= 1) {
        for (std::size_t n = 0; n < pending.size(); ++n) {
          results[n] = evaluate_check(pending[n]);
        }
        return results;
      }
      std::atomic<std::size_t> next{0};
      std::exception_ptr       failure;
      std::mutex               failure_mutex;
      std::vector<std::thread> threads;
      for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
          for (std::size_t n = next++; n < pending.size(); n = next++) {
            try {
              results[n] = evaluate_check(pending[n]);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) {
                failure = std::current_exception();
              }
            }
          }
        });
      }
      for (auto& t : threads) {
        t.join();
      }
      if (failure) {
        std::rethrow_exception(failure);
      }
      return results;
    }

    void check_rank_bound(int k) {
      if (k < 0) {
        throw IndexOutOfRange("rank " + std::to_string(k) + " is negative");
      }
      if (k > enumeration_cap()) {
        throw CapExceeded("rank " + std::to_string(k) + " exceeds the cap "
                          + std::to_string(enumeration_cap())
                          + " (raise PA_MAX_RANK)");
      }
    }

  }  // namespace

  std::string_view suite_name(SuiteId id) noexcept {
    switch (id) {
      case SuiteId::hr_presentation:
        return "hr_presentation";
      case SuiteId::hr_derived:
        return "hr_derived";
      case SuiteId::prel_a:
        return "prel_a";
      case SuiteId::star_invariance:
        return "star_invariance";
      case SuiteId::sigma_split:
        return "sigma_split";
      case SuiteId::lemma_f10:
        return "lemma_f10";
      case SuiteId::thm_ab:
        return "thm_ab";
      case SuiteId::thm_ac:
        return "thm_ac";
      case SuiteId::pairwise_commute:
        return "pairwise_commute";
      case SuiteId::jm_commute:
        return "jm_commute";
      case SuiteId::centrality:
        return "centrality";
      case SuiteId::c_e:
        return "c_e";
      case SuiteId::n_pres:
        return "n_pres";
      case SuiteId::sigma_involution:
        return "sigma_involution";
      case SuiteId::r_2:
        return "r_2";
      case SuiteId::alt_recursion:
        return "alt_recursion";
    }
    return "?";
  }

  SuiteId parse_suite(std::string_view name) {
    for (SuiteId id : kAllSuites) {
      if (suite_name(id) == name) {
        return id;
      }
    }
    throw UnknownSuite("unknown suite '" + std::string(name) + "'");
  }

  std::size_t VerificationReport::failures() const noexcept {
    std::size_t n = 0;
    for (auto const& c : checks) {
      n += c.pass ? 0 : 1;
    }
    return n;
  }

  VerificationReport verify_suite(SuiteId suite, JMCache const& cache,
                                  int jobs) {
    auto const   start = std::chrono::steady_clock::now();
    SuiteBuilder builder(cache);
    suite_fn(suite)(builder);
    VerificationReport report;
    report.suite        = std::string(suite_name(suite));
    report.rank         = cache.ambient_rank();
    report.checks       = run_checks(builder.pending, jobs);
    report.out_of_range = builder.out_of_range;
    report.notes        = std::move(builder.notes);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
  }

  VerificationReport verify_suite(SuiteId suite, int k, int jobs) {
    check_rank_bound(k);
    JMCache const cache(k);
    return verify_suite(suite, cache, jobs);
  }

  std::vector<VerificationReport> verify_all(JMCache const& cache, int jobs) {
    std::vector<VerificationReport> reports;
    for (SuiteId id : kAllSuites) {
      reports.push_back(verify_suite(id, cache, jobs));
    }
    return reports;
  }

  std::vector<VerificationReport> verify_all(int k, int jobs) {
    check_rank_bound(k);
    JMCache const cache(k);
    return verify_all(cache, jobs);
  }

}  // namespace partalg
