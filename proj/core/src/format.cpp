#include "gkde/format.hpp"

#include <charconv>
#include <cstdio>

namespace gkde::format {

std::string shortest(double v)
{
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string g17(double v)
{
  char buf[64];
  const int len = std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

} // namespace gkde::format
