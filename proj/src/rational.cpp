#include "springer/rational.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace springer {

namespace {

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

// Parses "[+-]digits[/digits]" starting at pos; advances pos.
Rational parse_rational_at(const std::string& s, size_t& pos) {
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = (s[pos] == '-');
    ++pos;
  }
  size_t digits_begin = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits_begin) throw std::invalid_argument("expected number in scalar: " + s);
  std::string num = s.substr(digits_begin, pos - digits_begin);
  if (negative) num = "-" + num;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t den_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == den_begin) throw std::invalid_argument("expected denominator in scalar: " + s);
    std::string den = s.substr(den_begin, pos - den_begin);
    if (Integer(den) == 0) throw std::invalid_argument("zero denominator in scalar: " + s);
    return Rational(Integer(num), Integer(den));
  }
  return Rational(Integer(num));
}

}  // namespace

std::string format_scalar(const GaussianRational& z) {
  if (z.im == 0) return format_rational(z.re);
  std::string im_part = format_rational(abs(z.im)) + "*i";
  if (z.re == 0) return (z.im < 0 ? "-" : "") + im_part;
  return format_rational(z.re) + (z.im < 0 ? "-" : "+") + im_part;
}

GaussianRational parse_scalar(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty scalar");

  GaussianRational result;
  bool saw_real = false, saw_imag = false;
  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    // Shorthand "i" / "+i" / "-i".
    if (s[pos] == '+' || s[pos] == '-') {
      if (pos + 1 < s.size() && s[pos + 1] == 'i' &&
          (pos + 2 == s.size() || s[pos + 2] == '+' || s[pos + 2] == '-')) {
        sign = (s[pos] == '-') ? -1 : 1;
        pos += 2;
        if (saw_imag) throw std::invalid_argument("duplicate imaginary part: " + text);
        result.im += sign;
        saw_imag = true;
        continue;
      }
    } else if (s[pos] == 'i' && (pos + 1 == s.size() || s[pos + 1] == '+' || s[pos + 1] == '-')) {
      ++pos;
      if (saw_imag) throw std::invalid_argument("duplicate imaginary part: " + text);
      result.im += 1;
      saw_imag = true;
      continue;
    }
    Rational r = parse_rational_at(s, pos);
    bool imag_term = false;
    if (pos < s.size() && (s[pos] == '*' || s[pos] == 'i')) {
      if (s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != 'i')
          throw std::invalid_argument("expected i after * in scalar: " + text);
      }
      ++pos;  // consume 'i'
      imag_term = true;
    }
    if (imag_term) {
      if (saw_imag) throw std::invalid_argument("duplicate imaginary part: " + text);
      result.im += r;
      saw_imag = true;
    } else {
      if (saw_real) throw std::invalid_argument("duplicate real part: " + text);
      result.re += r;
      saw_real = true;
    }
  }
  if (!saw_real && !saw_imag) throw std::invalid_argument("malformed scalar: " + text);
  return result;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << format_scalar(z);
}

}  // namespace springer
