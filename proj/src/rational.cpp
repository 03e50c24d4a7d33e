#include "twomilton/rational.hpp"

#include <cctype>

#include "twomilton/errors.hpp"

namespace twomilton {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::string to_string(const Rational& r) {
  BigInt d = denominator(r);
  if (d == 1) return numerator(r).str();
  return numerator(r).str() + "/" + d.str();
}

std::string to_decimal(const Rational& r, int digits) {
  BigInt num = numerator(r), den = denominator(r);
  std::string sign = num < 0 ? "-" : "";
  if (num < 0) num = -num;
  BigInt whole = num / den, rem = num % den;
  std::string out = sign + whole.str();
  if (digits <= 0) return out;
  out += '.';
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return InvalidInput("not a rational number: '" + text + "'"); };
  if (text.empty()) throw bad();
  auto digits_only = [](const std::string& s, std::size_t from) {
    if (from >= s.size()) return false;
    for (std::size_t i = from; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  Rational sign = text[0] == '-' ? -1 : 1;
  std::string body = text.substr(start);
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string p = body.substr(0, slash), q = body.substr(slash + 1);
    if (!digits_only(p, 0) || !digits_only(q, 0)) throw bad();
    BigInt qd(q);
    if (qd == 0) throw bad();
    return sign * Rational(BigInt(p), qd);
  }
  if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string w = body.substr(0, dot), f = body.substr(dot + 1);
    if ((!w.empty() && !digits_only(w, 0)) || !digits_only(f, 0)) throw bad();
    BigInt scale = 1;
    for (std::size_t i = 0; i < f.size(); ++i) scale *= 10;
    return sign * (Rational(w.empty() ? BigInt(0) : BigInt(w)) + Rational(BigInt(f), scale));
  }
  if (!digits_only(body, 0)) throw bad();
  return sign * Rational(BigInt(body));
}

BigInt floor(const Rational& r) {
  BigInt n = numerator(r), d = denominator(r);
  BigInt q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

BigInt ceil(const Rational& r) { return -floor(-r); }

}  // namespace twomilton
