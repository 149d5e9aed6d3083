#include "partalg/half_index.hpp"

#include <charconv>

#include "partalg/errors.hpp"

namespace partalg {

  namespace {

    int parse_count(std::string_view text, std::string_view whole) {
      int value = 0;
      auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                       value);
      if (ec != std::errc{} || end != text.data() + text.size() || value < 0
          || text.empty()) {
        throw ParseError("bad index '" + std::string(whole) + "'");
      }
      return value;
    }

  }  // namespace

  std::string HalfIndex::to_string() const {
    if (is_integer()) {
      return std::to_string(doubled / 2);
    }
    return std::to_string(doubled) + "/2";
  }

  HalfIndex HalfIndex::parse(std::string_view text) {
    if (auto plus = text.find('+'); plus != std::string_view::npos) {
      if (text.substr(plus + 1) != "1/2") {
        throw ParseError("bad index '" + std::string(text) + "'");
      }
      return half(parse_count(text.substr(0, plus), text));
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      if (text.substr(slash + 1) != "2") {
        throw ParseError("bad index '" + std::string(text) + "'");
      }
      return {parse_count(text.substr(0, slash), text)};
    }
    return whole(parse_count(text, text));
  }

}  // namespace partalg
