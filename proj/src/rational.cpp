#include "omatrix/rational.hpp"

#include <cctype>

namespace omatrix {

Rational parse_rat(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    if (s.empty()) throw InputError("malformed rational '" + text + "'");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw InputError("malformed rational '" + text + "'");
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw InputError("malformed rational '" + text + "'");
  };
  if (slash == std::string::npos) {
    check_int(text);
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
      throw InputError("malformed rational '" + text + "'");
    r.canonicalize();
    return r;
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  check_int(num);
  check_int(den);
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
    throw InputError("malformed rational '" + text + "'");
  if (r.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace omatrix
