#include "equistream/rational.hpp"

#include <cctype>

namespace equistream {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
      throw ParseError("bad rational literal '" + raw + "'");
    BigInt d(den);
    if (d == 0) throw ParseError("zero denominator in '" + raw + "'");
    return Rational(BigInt(num), d);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (head.empty() || head == "-" || head == "+") head += "0";
    if (!is_integer_token(head) || tail.empty() || !is_integer_token(tail) ||
        tail[0] == '-' || tail[0] == '+')
      throw ParseError("bad decimal literal '" + raw + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
    BigInt whole(head);
    BigInt frac(tail);
    bool neg = s[0] == '-';
    BigInt num = whole * scale + (neg ? -frac : frac);
    return Rational(num, scale);
  }
  if (!is_integer_token(s)) throw ParseError("bad rational literal '" + raw + "'");
  return Rational(BigInt(s), BigInt(1));
}

std::string Rational::str() const {
  std::string out = numerator().str();
  if (denominator() != 1) out += "/" + denominator().str();
  return out;
}

Rational rational_pow(long long base, long long exp) {
  if (base == 0) throw BadParameter("pow with zero base");
  bool inv = exp < 0;
  unsigned long long e = inv ? static_cast<unsigned long long>(-exp)
                             : static_cast<unsigned long long>(exp);
  BigInt acc = 1, b = base;
  while (e) {
    if (e & 1ULL) acc *= b;
    b *= b;
    e >>= 1ULL;
  }
  return inv ? Rational(BigInt(1), acc) : Rational(acc, BigInt(1));
}

}  // namespace equistream
