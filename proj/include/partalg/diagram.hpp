#pragma once

// Set-partition diagrams: the basis of the partition algebra A_k(z).
//
// A rank-k diagram is a set partition of the 2k vertices 1..k (top row) and
// 1'..k' (bottom row). Vertices are ordered 1 < ... < k < 1' < ... < k' and a
// diagram is stored as the restricted growth string of its block labels in
// that order, which makes the representation canonical: two diagrams are
// equal iff their label arrays are equal.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partalg/errors.hpp"

namespace partalg {

  inline constexpr int kMaxRank = 16;

  // A vertex label: `index` in 1..k, `primed` for the bottom row.
  struct Vertex {
    int  index  = 1;
    bool primed = false;

    friend constexpr bool operator==(Vertex, Vertex) = default;
  };

  using RawBlock = std::vector<Vertex>;

  class Diagram {
   public:
    // The identity diagram of rank 0.
    Diagram() = default;

    static Diagram identity(int rank);

    // Builds the canonical diagram from an unordered block list. Throws
    // MalformedPartition on overlaps, missing or out-of-range labels.
    static Diagram from_blocks(std::span<RawBlock const> blocks, int rank);

    // Builds from a label per vertex (index 0..k-1 top, k..2k-1 bottom); the
    // labels may be arbitrary small integers, they are renumbered.
    static Diagram from_labels(std::span<int const> labels, int rank);

    int rank() const noexcept {
      return rank_;
    }

    std::size_t vertex_count() const noexcept {
      return 2 * static_cast<std::size_t>(rank_);
    }

    // Canonical block label of vertex v (0-based, bottom row offset by rank).
    int label(std::size_t v) const noexcept {
      return labels_[v];
    }

    int top_label(int a) const noexcept {
      return labels_[a - 1];
    }

    int bottom_label(int a) const noexcept {
      return labels_[rank_ + a - 1];
    }

    int block_count() const noexcept;

    // Blocks in canonical order: each sorted by the vertex order, blocks
    // sorted by least element.
    std::vector<RawBlock> blocks() const;

    // Text form: blocks separated by " | ", labels by spaces, primes as a
    // trailing apostrophe, e.g. "1 2' | 2 1'".
    std::string to_string() const;

    // Restricted growth string as bytes; equal diagrams serialize equally.
    std::string_view key() const noexcept {
      return {reinterpret_cast<char const*>(labels_.data()), vertex_count()};
    }

    friend bool operator==(Diagram const& a, Diagram const& b) noexcept {
      return a.rank_ == b.rank_ && a.key() == b.key();
    }

    friend std::strong_ordering operator<=>(Diagram const& a,
                                            Diagram const& b) noexcept {
      if (auto c = a.rank_ <=> b.rank_; c != 0) {
        return c;
      }
      return a.key().compare(b.key()) <=> 0;
    }

   private:
    friend struct DiagramBuilder;

    std::uint8_t                            rank_ = 0;
    std::array<std::uint8_t, 2 * kMaxRank> labels_{};
  };

  struct CompositionResult {
    Diagram diagram;
    int     removed_blocks = 0;
  };

  // Places `top` above `bottom`, identifies the middle rows and deletes the
  // components that live entirely in the middle row; `removed_blocks` counts
  // them.
  CompositionResult compose(Diagram const& top, Diagram const& bottom);

  // Swaps i and i' for every i (reflection in the horizontal axis).
  Diagram involute(Diagram const& d);

  // True iff k and k' lie in the same block, i.e. d is in A_{k-1/2}.
  bool is_half(Diagram const& d) noexcept;

  // True iff d lies in the subalgebra A_m (doubled = 2m) of the ambient
  // algebra: strands beyond m are identity strands, and for half-integer m the
  // strand m+1/2 joins its top and bottom vertex.
  bool in_subalgebra(Diagram const& d, int doubled) noexcept;

  // Appends identity strands up to rank `new_rank`.
  Diagram embed(Diagram const& d, int new_rank);

  enum class GeneratorKind { s, p, p_half };

  // s(i): swaps strands i and i+1. p(j): isolates j and j'. p_half(i): joins
  // i, i+1, i', (i+1)' into a single block.
  Diagram generator(GeneratorKind kind, int index, int rank);

  inline Diagram s_diagram(int i, int rank) {
    return generator(GeneratorKind::s, i, rank);
  }

  inline Diagram p_diagram(int j, int rank) {
    return generator(GeneratorKind::p, j, rank);
  }

  // The diagram p_{i+1/2}.
  inline Diagram p_half_diagram(int i, int rank) {
    return generator(GeneratorKind::p_half, i, rank);
  }

  inline constexpr int kDefaultEnumerationCap = 4;

  // Enumeration cap, honouring the PA_MAX_RANK environment variable.
  int enumeration_cap();

  // Calls `visit` once per diagram of rank k, in restricted-growth-string
  // order. Throws CapExceeded if k exceeds `cap`.
  void for_each_diagram(int                                 k,
                        std::function<void(Diagram const&)> visit,
                        int                                 cap);

  std::vector<Diagram> enumerate_diagrams(int k, int cap);

  inline std::vector<Diagram> enumerate_diagrams(int k) {
    return enumerate_diagrams(k, enumeration_cap());
  }

  // Accepts the text form ("1 2' | 2 1'"). The rank is the largest label
  // index unless `rank` is given.
  Diagram parse_diagram(std::string_view text, int rank = -1);

  struct DiagramHash {
    std::size_t operator()(Diagram const& d) const noexcept {
      return std::hash<std::string_view>{}(d.key()) ^ d.rank();
    }
  };

}  // namespace partalg
