#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lossy {

// Exact nonnegative rational. Accuracy parameters (alpha, epsilon) are kept
// exact so that ceiling expressions like d = ceil(alpha/(alpha-1)) never
// suffer float boundary errors (alpha = 2 must give d = 2, not 3).
struct rational {
  long long num = 0;
  long long den = 1;

  rational() = default;
  rational(long long n) : num(n), den(1) {}
  rational(long long n, long long d) : num(n), den(d) {
    if (d <= 0) throw std::invalid_argument("rational: nonpositive denominator");
    normalize();
  }

  void normalize() {
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  // Parses a plain decimal string such as "2", "1.5", "0.34".
  static rational parse(const std::string& s) {
    auto dot = s.find('.');
    if (s.empty() || s.find_first_not_of("0123456789.") != std::string::npos ||
        dot != s.rfind('.'))
      throw std::invalid_argument("rational: cannot parse '" + s + "'");
    if (dot == std::string::npos) return rational(std::stoll(s), 1);
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (frac.size() > 15) throw std::invalid_argument("rational: too many decimals");
    long long den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    long long num = (whole.empty() ? 0 : std::stoll(whole)) * den +
                    (frac.empty() ? 0 : std::stoll(frac));
    return rational(num, den);
  }

  double value() const { return double(num) / double(den); }

  rational operator+(const rational& o) const { return rational(num * o.den + o.num * den, den * o.den); }
  rational operator-(const rational& o) const { return rational(num * o.den - o.num * den, den * o.den); }
  rational operator*(const rational& o) const { return rational(num * o.num, den * o.den); }
  rational operator/(const rational& o) const {
    if (o.num == 0) throw std::invalid_argument("rational: division by zero");
    long long n = num * o.den, d = den * o.num;
    if (d < 0) { n = -n; d = -d; }
    return rational(n, d);
  }

  bool operator==(const rational& o) const { return num == o.num && den == o.den; }
  bool operator<(const rational& o) const { return num * o.den < o.num * den; }
  bool operator<=(const rational& o) const { return num * o.den <= o.num * den; }
  bool operator>(const rational& o) const { return o < *this; }
  bool operator>=(const rational& o) const { return o <= *this; }

  long long ceil() const { return (num + den - 1) / den; }
  long long floor() const { return num / den; }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace lossy
