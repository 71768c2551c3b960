#include "superspace/rational.hpp"

#include <cctype>

#include "superspace/errors.hpp"

namespace superspace {

Rational make_rational(long num, long den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  const std::size_t digits_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits_start) throw ParseError("expected an integer in '" + s + "'", i);
  if (i < s.size()) {
    if (s[i] != '/') throw ParseError("unexpected character in rational '" + s + "'", i);
    ++i;
    const std::size_t den_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_start || i != s.size())
      throw ParseError("malformed denominator in '" + s + "'", i);
  }
  Rational q;
  if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
    throw ParseError("malformed rational '" + s + "'", 0);
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'", 0);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational rising(const Rational& a, int k) {
  Rational out(1);
  for (int t = 0; t < k; ++t) out *= a + t;
  return out;
}

Rational falling(const Rational& j, int k) {
  Rational out(1);
  for (int t = 0; t < k; ++t) out *= j - t;
  return out;
}

Rational factorial(int k) { return rising(Rational(1), k); }

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n == -1 && k == -1) return 1;
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace superspace
