#include "tolsys/rational.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "tolsys/error.hpp"

namespace tolsys {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

Rational reduce(i128 num, i128 den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] {
    return InputError("not a decimal number: '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  i128 mantissa = 0;
  int scale = 0;
  bool digits = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      digits = true;
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) {
        ++scale;
      }
      if (mantissa > (i128{1} << 62)) {
        throw fail();
      }
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!digits) {
    throw fail();
  }
  int exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    auto [ptr, ec] =
        std::from_chars(text.data() + i, text.data() + text.size(), exponent);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw fail();
    }
    i = text.size();
  }
  if (i != text.size()) {
    throw fail();
  }
  int shift = exponent - scale;
  if (shift > 18 || shift < -18) {
    throw fail();
  }
  i128 num = negative ? -mantissa : mantissa;
  i128 den = 1;
  for (int k = 0; k < std::abs(shift); ++k) {
    (shift > 0 ? num : den) *= 10;
  }
  return reduce(num, den);
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) {
    throw InputError("threshold must be finite");
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) {
    throw InputError("cannot format threshold");
  }
  return parse(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) {
    return std::to_string(num_);
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) {
    --q;
  }
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) {
    ++q;
  }
  return q;
}

Rational operator+(const Rational &a, const Rational &b) {
  return reduce(i128{a.num_} * b.den_ + i128{b.num_} * a.den_,
                i128{a.den_} * b.den_);
}

Rational operator*(const Rational &a, std::int64_t k) {
  return reduce(i128{a.num_} * k, a.den_);
}

Rational operator/(const Rational &a, const Rational &b) {
  return reduce(i128{a.num_} * b.den_, i128{a.den_} * b.num_);
}

bool operator==(const Rational &a, const Rational &b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
  i128 lhs = i128{a.num_} * b.den_;
  i128 rhs = i128{b.num_} * a.den_;
  if (lhs < rhs) {
    return std::strong_ordering::less;
  }
  if (lhs > rhs) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

} // namespace tolsys
