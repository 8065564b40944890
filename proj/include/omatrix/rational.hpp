#ifndef OMATRIX_RATIONAL_HPP
#define OMATRIX_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace omatrix {

// Exact rational scalar. GMP keeps values canonical (gcd 1, positive
// denominator) under arithmetic; anything built by hand goes through
// make_rat / parse_rat which canonicalize explicitly.
using Rational = mpq_class;

// Raised on malformed user input (manifests, CLI arguments).  Maps to
// exit code 2 in the command-line tool.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

inline Rational make_rat(long num, long den = 1) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q" in base 10.
Rational parse_rat(const std::string& text);

// Renders as "p" or "p/q" with positive q.
std::string rat_str(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace omatrix

#endif
