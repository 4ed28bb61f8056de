#include "rtage/rational.hpp"

#include <charconv>

namespace rtage {

Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_int(text)};
  return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

}  // namespace rtage
