#include "k3stab/scalar.hpp"
#include "k3stab/surd.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace k3stab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw DomainError("not an integer: '" + std::string(text) + "'");
  // a leading 0 would make the string constructor read octal
  s.remove_prefix(std::min(s.find_first_not_of('0'), s.size() - 1));
  Integer z{std::string(s)};
  return negative ? Integer(-z) : z;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer p = parse_integer(s.substr(0, slash));
    Integer q = parse_integer(s.substr(slash + 1));
    if (q == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exponent = static_cast<long>(parse_integer(s.substr(e + 1)).convert_to<long>());
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw DomainError("not a number: '" + std::string(text) + "'");
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) throw DomainError("not a number: '" + std::string(text) + "'");
    digits = std::string(s);
  }
  Rational value{parse_integer(digits)};
  Integer ten_power = mp::pow(Integer(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  value = exponent < 0 ? Rational(value / Rational(ten_power)) : Rational(value * Rational(ten_power));
  return negative ? Rational(-value) : value;
}

// ---------------------------------------------------------------------------

QuadraticSurd::QuadraticSurd(Rational a, Rational b, Integer d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (b_ == 0) {
    d_ = 0;
    return;
  }
  if (d_ <= 1) throw DomainError("quadratic surd radicand must exceed 1");
  Integer r = isqrt(d_);
  if (r * r == d_) {
    a_ += b_ * Rational(r);
    b_ = 0;
    d_ = 0;
  }
}

QuadraticSurd QuadraticSurd::sqrt(const Rational& q) {
  if (q.sign() < 0) throw DomainError("square root of a negative rational");
  if (q == 0) return {};
  Integer m = denominator(q);
  Integer n = numerator(q) * m;  // sqrt(q) = sqrt(n) / m
  Integer factor = 1;
  for (unsigned long p = 2; p < 100000; p += (p == 2 ? 1 : 2)) {
    Integer p2 = Integer(p) * Integer(p);
    if (p2 > n) break;
    while (n % p2 == 0) {
      n /= p2;
      factor *= p;
    }
  }
  Integer r = isqrt(n);
  if (r * r == n) return QuadraticSurd(Rational(factor * r, m));
  return QuadraticSurd(Rational(0), Rational(factor, m), n);
}

const Rational& QuadraticSurd::to_rational() const {
  if (!is_rational()) throw DomainError("irrational value " + str() + " where a rational is required");
  return a_;
}

int QuadraticSurd::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(d_);
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

Rational QuadraticSurd::lower_bound(unsigned bits) const {
  if (is_rational()) return a_;
  Integer mag = floor(Rational(abs(b_))) + 1;
  unsigned extra = static_cast<unsigned>(mp::msb(mag)) + 1;
  Integer scale = Integer(1) << (bits + extra);
  Integer root = isqrt(d_ * scale * scale);  // root/scale <= sqrt(d) < (root+1)/scale
  Rational lo(root, scale), hi(root + 1, scale);
  return b_.sign() > 0 ? Rational(a_ + b_ * lo) : Rational(a_ + b_ * hi);
}

Rational QuadraticSurd::upper_bound(unsigned bits) const {
  return -(-*this).lower_bound(bits);
}

double QuadraticSurd::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
}

const Integer& QuadraticSurd::common_radicand(const QuadraticSurd& o) const {
  if (b_ == 0) return o.d_;
  if (o.b_ == 0 || d_ == o.d_) return d_;
  throw DomainError("arithmetic mixes quadratic surds with different radicands");
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
  Integer d = common_radicand(o);
  *this = QuadraticSurd(a_ + o.a_, b_ + o.b_, d);
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& o) {
  Integer d = common_radicand(o);
  *this = QuadraticSurd(a_ - o.a_, b_ - o.b_, d);
  return *this;
}

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& o) {
  Integer d = common_radicand(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
  Rational b = a_ * o.b_ + b_ * o.a_;
  *this = QuadraticSurd(a, b, d);
  return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& o) {
  Integer d = common_radicand(o);
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(d);
  if (norm == 0) throw DomainError("division by zero in Q(sqrt d)");
  QuadraticSurd num = *this * o.conjugate();
  *this = QuadraticSurd(num.a_ / norm, num.b_ / norm, num.d_);
  return *this;
}

std::string QuadraticSurd::str() const {
  if (is_rational()) return to_string(a_);
  std::ostringstream os;
  if (a_ != 0) os << to_string(a_) << (b_.sign() < 0 ? "-" : "+");
  else if (b_.sign() < 0) os << "-";
  Rational mag = abs(b_);
  if (mag != 1) os << to_string(mag) << "*";
  os << "sqrt(" << d_.str() << ")";
  return os.str();
}

}  // namespace k3stab
