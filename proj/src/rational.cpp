#include "hexmg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hexmg {

namespace {

BigInt pow10(int n) {
  BigInt p = 1;
  for (int i = 0; i < n; ++i) p *= 10;
  return p;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  int exponent = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string e = s.substr(epos + 1);
    s = s.substr(0, epos);
    bool eneg = false;
    if (!e.empty() && (e[0] == '-' || e[0] == '+')) {
      eneg = e[0] == '-';
      e = e.substr(1);
    }
    if (!all_digits(e) || e.size() > 6) throw std::invalid_argument("bad exponent in '" + text + "'");
    exponent = std::stoi(e) * (eneg ? -1 : 1);
  }
  std::string ip = s, fp;
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    ip = s.substr(0, dot);
    fp = s.substr(dot + 1);
  }
  if (ip.empty() && fp.empty()) throw std::invalid_argument("not a number: '" + text + "'");
  if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
    throw std::invalid_argument("not a number: '" + text + "'");
  BigInt digits(ip.empty() && fp.empty() ? std::string("0") : ip + fp);
  int scale = static_cast<int>(fp.size()) - exponent;
  Rational r = scale >= 0 ? Rational(digits, pow10(scale)) : Rational(digits * pow10(-scale));
  return neg ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  Rational num = parse_decimal(text.substr(0, slash));
  Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return num / den;
}

std::string to_decimal(const Rational& x, int places) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt scaled = num * pow10(places);
  BigInt q = scaled / den;
  BigInt rem = scaled % den;
  BigInt twice = rem * 2;
  if (twice > den || (twice == den && (q % 2) == 1)) q += 1;
  std::string digits = q.str();
  if (static_cast<int>(digits.size()) <= places)
    digits = std::string(places + 1 - digits.size(), '0') + digits;
  std::string out = digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  if (neg && q != 0) out = "-" + out;
  return out;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string to_fraction_string(const Rational& x) {
  return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

}  // namespace hexmg
