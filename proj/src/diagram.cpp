#include "partalg/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace partalg {

  struct DiagramBuilder {
    // Renumbers arbitrary labels into a restricted growth string.
    static Diagram make(std::span<int const> labels, int rank) {
      Diagram d;
      d.rank_ = static_cast<std::uint8_t>(rank);
      std::array<int, 8 * kMaxRank> seen;
      seen.fill(-1);
      int next = 0;
      for (std::size_t v = 0; v < labels.size(); ++v) {
        int& slot = seen[labels[v]];
        if (slot < 0) {
          slot = next++;
        }
        d.labels_[v] = static_cast<std::uint8_t>(slot);
      }
      return d;
    }
  };

  namespace {

    void check_rank(int rank) {
      if (rank < 0 || rank > kMaxRank) {
        throw IndexOutOfRange("rank " + std::to_string(rank)
                              + " outside 0.." + std::to_string(kMaxRank));
      }
    }

    // Small fixed-capacity union-find over block ids.
    struct BlockForest {
      std::array<std::uint8_t, 4 * kMaxRank> parent;

      explicit BlockForest(int n) {
        std::iota(parent.begin(), parent.begin() + n, std::uint8_t{0});
      }

      int find(int x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }

      void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          parent[std::max(x, y)] = static_cast<std::uint8_t>(std::min(x, y));
        }
      }
    };

  }  // namespace

  Diagram Diagram::identity(int rank) {
    check_rank(rank);
    std::array<int, 2 * kMaxRank> labels{};
    for (int a = 0; a < rank; ++a) {
      labels[a]        = a;
      labels[rank + a] = a;
    }
    return DiagramBuilder::make({labels.data(), 2 * std::size_t(rank)}, rank);
  }

  Diagram Diagram::from_labels(std::span<int const> labels, int rank) {
    check_rank(rank);
    if (labels.size() != 2 * std::size_t(rank)) {
      throw MalformedPartition("expected " + std::to_string(2 * rank)
                               + " vertex labels");
    }
    // Compress to 0..2k-1 first so the builder's lookup table suffices.
    std::vector<int> sorted(labels.begin(), labels.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::array<int, 2 * kMaxRank> compact{};
    for (std::size_t v = 0; v < labels.size(); ++v) {
      compact[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), labels[v])
          - sorted.begin());
    }
    return DiagramBuilder::make({compact.data(), labels.size()}, rank);
  }

  Diagram Diagram::from_blocks(std::span<RawBlock const> blocks, int rank) {
    check_rank(rank);
    std::array<int, 2 * kMaxRank> labels;
    labels.fill(-1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw MalformedPartition("empty block");
      }
      for (Vertex v : blocks[b]) {
        if (v.index < 1 || v.index > rank) {
          throw MalformedPartition("label " + std::to_string(v.index)
                                   + (v.primed ? "'" : "")
                                   + " out of range for rank "
                                   + std::to_string(rank));
        }
        int& slot = labels[(v.primed ? rank : 0) + v.index - 1];
        if (slot >= 0) {
          throw MalformedPartition("label " + std::to_string(v.index)
                                   + (v.primed ? "'" : "")
                                   + " appears more than once");
        }
        slot = static_cast<int>(b);
      }
    }
    for (int v = 0; v < 2 * rank; ++v) {
      if (labels[v] < 0) {
        int a = v % rank + 1;
        throw MalformedPartition("label " + std::to_string(a)
                                 + (v >= rank ? "'" : "") + " is missing");
      }
    }
    return from_labels({labels.data(), 2 * std::size_t(rank)}, rank);
  }

  int Diagram::block_count() const noexcept {
    int max = -1;
    for (std::size_t v = 0; v < vertex_count(); ++v) {
      max = std::max<int>(max, labels_[v]);
    }
    return max + 1;
  }

  std::vector<RawBlock> Diagram::blocks() const {
    std::vector<RawBlock> out(block_count());
    for (std::size_t v = 0; v < vertex_count(); ++v) {
      bool primed = v >= rank_;
      int  index  = static_cast<int>(primed ? v - rank_ : v) + 1;
      out[labels_[v]].push_back({index, primed});
    }
    return out;
  }

  std::string Diagram::to_string() const {
    std::string out;
    for (auto const& block : blocks()) {
      if (!out.empty()) {
        out += " | ";
      }
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) {
          out += ' ';
        }
        out += std::to_string(block[i].index);
        if (block[i].primed) {
          out += '\'';
        }
      }
    }
    return out;
  }

  CompositionResult compose(Diagram const& top, Diagram const& bottom) {
    if (top.rank() != bottom.rank()) {
      throw RankMismatch("cannot compose rank " + std::to_string(top.rank())
                         + " with rank " + std::to_string(bottom.rank()));
    }
    int const k  = top.rank();
    int const nt = top.block_count();
    int const nb = bottom.block_count();

    // Nodes 0..nt-1 are blocks of `top`, nt..nt+nb-1 blocks of `bottom`.
    BlockForest forest(nt + nb);
    for (int m = 0; m < k; ++m) {
      forest.unite(top.label(k + m), nt + bottom.label(m));
    }

    std::array<int, 2 * kMaxRank> labels{};
    std::array<bool, 4 * kMaxRank> outer{};
    for (int a = 0; a < k; ++a) {
      labels[a]     = forest.find(top.label(a));
      labels[k + a] = forest.find(nt + bottom.label(k + a));
      outer[labels[a]]     = true;
      outer[labels[k + a]] = true;
    }
    int removed = 0;
    for (int x = 0; x < nt + nb; ++x) {
      if (forest.find(x) == x && !outer[x]) {
        ++removed;
      }
    }
    return {DiagramBuilder::make({labels.data(), 2 * std::size_t(k)}, k),
            removed};
  }

  Diagram involute(Diagram const& d) {
    int const                     k = d.rank();
    std::array<int, 2 * kMaxRank> labels{};
    for (int a = 0; a < k; ++a) {
      labels[a]     = d.label(k + a);
      labels[k + a] = d.label(a);
    }
    return DiagramBuilder::make({labels.data(), 2 * std::size_t(k)}, k);
  }

  bool is_half(Diagram const& d) noexcept {
    int const k = d.rank();
    return k == 0 || d.label(k - 1) == d.label(2 * k - 1);
  }

  bool in_subalgebra(Diagram const& d, int doubled) noexcept {
    int const k     = d.rank();
    int const whole = (doubled + 1) / 2;  // strands 1..whole may be touched
    if (whole > k) {
      return true;
    }
    auto through_strand = [&](int a) {
      int const label = d.top_label(a);
      if (d.bottom_label(a) != label) {
        return false;
      }
      for (std::size_t v = 0; v < d.vertex_count(); ++v) {
        if (d.label(v) == label && v != std::size_t(a - 1)
            && v != std::size_t(k + a - 1)) {
          return false;
        }
      }
      return true;
    };
    for (int a = whole + 1; a <= k; ++a) {
      if (!through_strand(a)) {
        return false;
      }
    }
    if (doubled % 2 == 1 && whole >= 1) {
      return d.top_label(whole) == d.bottom_label(whole);
    }
    return true;
  }

  Diagram embed(Diagram const& d, int new_rank) {
    check_rank(new_rank);
    int const k = d.rank();
    if (new_rank < k) {
      throw RankTooSmall("cannot embed rank " + std::to_string(k)
                         + " diagram into rank " + std::to_string(new_rank));
    }
    std::array<int, 2 * kMaxRank> labels{};
    int const                     fresh = 2 * k;
    for (int a = 0; a < new_rank; ++a) {
      if (a < k) {
        labels[a]            = d.label(a);
        labels[new_rank + a] = d.label(k + a);
      } else {
        labels[a]            = fresh + a;
        labels[new_rank + a] = fresh + a;
      }
    }
    return DiagramBuilder::make({labels.data(), 2 * std::size_t(new_rank)},
                                new_rank);
  }

  Diagram generator(GeneratorKind kind, int index, int rank) {
    check_rank(rank);
    std::array<int, 2 * kMaxRank> labels{};
    for (int a = 0; a < rank; ++a) {
      labels[a]        = a;
      labels[rank + a] = a;
    }
    auto need = [&](int lo, int hi, char const* name) {
      if (index < lo || index > hi) {
        throw IndexOutOfRange(std::string(name) + " index "
                              + std::to_string(index) + " outside "
                              + std::to_string(lo) + ".."
                              + std::to_string(hi) + " at rank "
                              + std::to_string(rank));
      }
    };
    int const i = index - 1;
    switch (kind) {
      case GeneratorKind::s:
        need(1, rank - 1, "s");
        labels[rank + i]     = i + 1;
        labels[rank + i + 1] = i;
        break;
      case GeneratorKind::p:
        need(1, rank, "p");
        labels[rank + i] = 2 * rank;
        break;
      case GeneratorKind::p_half:
        need(1, rank - 1, "p_half");
        labels[i + 1]        = i;
        labels[rank + i + 1] = i;
        break;
    }
    return DiagramBuilder::make({labels.data(), 2 * std::size_t(rank)}, rank);
  }

  int enumeration_cap() {
    if (char const* env = std::getenv("PA_MAX_RANK")) {
      int value = 0;
      auto [ptr, ec] =
          std::from_chars(env, env + std::char_traits<char>::length(env), value);
      if (ec == std::errc{} && value >= 0) {
        return std::min(value, kMaxRank);
      }
    }
    return kDefaultEnumerationCap;
  }

  void for_each_diagram(int                                 k,
                        std::function<void(Diagram const&)> visit,
                        int                                 cap) {
    if (k < 0 || k > cap) {
      throw CapExceeded("enumeration of rank " + std::to_string(k)
                        + " exceeds the cap " + std::to_string(cap));
    }
    int const n = 2 * k;
    if (n == 0) {
      visit(Diagram::identity(0));
      return;
    }
    // Restricted growth strings a[0..n-1]: a[0] = 0 and
    // a[v] <= 1 + max(a[0..v-1]).
    std::vector<int> rgs(n, 0), prefix_max(n, 0);
    while (true) {
      visit(Diagram::from_labels(rgs, k));
      int v = n - 1;
      while (v > 0 && rgs[v] == prefix_max[v - 1] + 1) {
        --v;
      }
      if (v == 0) {
        return;
      }
      ++rgs[v];
      prefix_max[v] = std::max(prefix_max[v - 1], rgs[v]);
      for (int w = v + 1; w < n; ++w) {
        rgs[w]        = 0;
        prefix_max[w] = prefix_max[v];
      }
    }
  }

  std::vector<Diagram> enumerate_diagrams(int k, int cap) {
    std::vector<Diagram> out;
    for_each_diagram(k, [&](Diagram const& d) { out.push_back(d); }, cap);
    return out;
  }

  Diagram parse_diagram(std::string_view text, int rank) {
    std::vector<RawBlock> blocks(1);
    int                   max_index = 0;
    std::size_t           pos       = 0;
    auto fail = [&](std::string const& why) -> Diagram {
      throw ParseError("cannot parse diagram \"" + std::string(text)
                       + "\": " + why);
    };
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == '|') {
        if (blocks.back().empty()) {
          return fail("empty block");
        }
        blocks.emplace_back();
        ++pos;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        int value = 0;
        auto [ptr, ec] =
            std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} || value < 1) {
          return fail("bad label");
        }
        pos = static_cast<std::size_t>(ptr - text.data());
        bool primed = pos < text.size() && text[pos] == '\'';
        if (primed) {
          ++pos;
        }
        blocks.back().push_back({value, primed});
        max_index = std::max(max_index, value);
      } else {
        return fail(std::string("unexpected character '") + c + "'");
      }
    }
    if (blocks.back().empty()) {
      if (blocks.size() == 1) {
        if (rank <= 0) {
          return Diagram::identity(0);
        }
        return fail("no labels");
      }
      return fail("empty block");
    }
    if (max_index > kMaxRank) {
      return fail("label exceeds maximum rank " + std::to_string(kMaxRank));
    }
    return Diagram::from_blocks(blocks, rank < 0 ? max_index : rank);
  }

}  // namespace partalg
