#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace partalg {

  // An index in {0, 1/2, 1, 3/2, ...}, stored doubled.
  struct HalfIndex {
    int doubled = 0;

    static constexpr HalfIndex whole(int i) noexcept {
      return {2 * i};
    }

    // i + 1/2
    static constexpr HalfIndex half(int i) noexcept {
      return {2 * i + 1};
    }

    constexpr bool is_integer() const noexcept {
      return doubled % 2 == 0;
    }

    // floor of the value
    constexpr int whole_part() const noexcept {
      return doubled / 2;
    }

    // ceiling of the value; the least rank whose algebra contains the index
    constexpr int ceiling() const noexcept {
      return (doubled + 1) / 2;
    }

    // "3" or "5/2"
    std::string to_string() const;

    // Accepts "m", "m/2" and "m+1/2"; throws ParseError otherwise.
    static HalfIndex parse(std::string_view text);

    friend constexpr auto operator<=>(HalfIndex, HalfIndex) = default;
  };

}  // namespace partalg
