#include "qmom/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace qmom {

namespace {

bool parse_int64(const std::string& s, std::int64_t& out) {
  if (s.empty())
    return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-')
    i = 1;
  if (i == s.size())
    return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      return false;
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size())
    return false;
  out = v;
  return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  std::int64_t num = 0;
  std::int64_t den = 1;
  if (slash == std::string::npos) {
    if (!parse_int64(text, num))
      throw Error(Error::Kind::parse, "malformed rational \"" + text + "\"");
  } else {
    if (!parse_int64(text.substr(0, slash), num) ||
        !parse_int64(text.substr(slash + 1), den))
      throw Error(Error::Kind::parse, "malformed rational \"" + text + "\"");
    if (den == 0)
      throw Error(Error::Kind::parse,
                  "malformed rational \"" + text + "\" (zero denominator)");
  }
  return Rational(num, den);
}

} // namespace qmom
