#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace tolsys {

/// Exact nonnegative-or-signed rational used for distance thresholds.
///
/// Strict comparisons `d < eps` at `d == eps` decide whether an edge exists,
/// so thresholds are carried exactly and rounded to double only once.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "0.25", "3", "1e-2", "-0.5". Throws InputError on junk.
  static Rational parse(std::string_view text);
  /// Shortest round-trip decimal of `x`, then parsed exactly: 0.3 -> 3/10.
  static Rational from_double(double x);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// Correctly rounded when |num|, den < 2^53.
  double to_double() const;
  std::string to_string() const;

  /// Smallest integer >= this.
  std::int64_t ceil() const;
  std::int64_t floor() const;

  friend Rational operator+(const Rational &a, const Rational &b);
  friend Rational operator*(const Rational &a, std::int64_t k);
  friend Rational operator/(const Rational &a, const Rational &b);
  friend bool operator==(const Rational &a, const Rational &b);
  friend std::strong_ordering operator<=>(const Rational &a,
                                          const Rational &b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

} // namespace tolsys
