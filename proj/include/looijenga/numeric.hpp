#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace looijenga {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// floor(a/b) for integers, b != 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int floor_rat(const Rat& r) { return floor_div(num(r), den(r)); }
inline Int ceil_rat(const Rat& r) { return ceil_div(num(r), den(r)); }

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  if (n == 0) return 0;
  Int x = boost::multiprecision::sqrt(n);
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

// Largest integer k with k <= mu + sqrt(q), q >= 0 rational, mu rational.
inline Int floor_center_plus_sqrt(const Rat& mu, const Rat& q) {
  if (q < 0) throw std::domain_error("negative radicand");
  // k <= mu + sqrt(q)  <=>  k - mu <= sqrt(q).
  Int k = floor_rat(mu) + isqrt(floor_rat(q)) + 2;
  auto ok = [&](const Int& c) {
    Rat d = Rat(c) - mu;
    if (d <= 0) return true;
    return d * d <= q;
  };
  while (!ok(k)) --k;
  return k;
}

// Smallest integer k with k >= mu - sqrt(q).
inline Int ceil_center_minus_sqrt(const Rat& mu, const Rat& q) {
  return -floor_center_plus_sqrt(-mu, q);
}

inline std::string rat_to_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int n(s.substr(0, slash)), d(s.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(n, d);
}

}  // namespace looijenga
