#pragma once

#include "looijenga/numeric.hpp"

#include <map>
#include <optional>
#include <string>

namespace looijenga {

// Element of a divisible multiplicative abelian group: a sign (exponent of -1,
// mod 2), rational exponents on primes, and rational exponents on formal
// symbols. Models both Pic^0(D) = G_m and the coordinate groups of the
// boundary components. Roots exist except for even roots of the sign, which
// are reported as obstructions (the sign component is not divisible).
class GmElem {
 public:
  GmElem() = default;  // the identity

  static GmElem one() { return GmElem(); }
  static GmElem minus_one();
  static GmElem from_rational(const Rat& r);  // r != 0
  static GmElem symbol(const std::string& name);

  bool negative() const { return negative_; }
  const std::map<Int, Rat>& prime_exponents() const { return primes_; }
  const std::map<std::string, Rat>& symbol_exponents() const { return symbols_; }

  bool is_one() const { return !negative_ && primes_.empty() && symbols_.empty(); }
  bool operator==(const GmElem& o) const {
    return negative_ == o.negative_ && primes_ == o.primes_ && symbols_ == o.symbols_;
  }
  bool operator!=(const GmElem& o) const { return !(*this == o); }
  bool operator<(const GmElem& o) const;  // arbitrary total order for containers

  GmElem operator*(const GmElem& o) const;
  GmElem operator/(const GmElem& o) const { return *this * o.inverse(); }
  GmElem inverse() const;
  GmElem pow(const Int& e) const;
  // k-th roots and general rational powers; throws std::domain_error when the
  // sign obstruction is hit (negative element, even denominator).
  GmElem pow(const Rat& e) const;

  // Exact rational value when all exponents are integers and no symbols occur.
  std::optional<Rat> as_rational() const;

  std::string to_string() const;

 private:
  bool negative_ = false;
  std::map<Int, Rat> primes_;
  std::map<std::string, Rat> symbols_;
};

// Deterministic fresh-symbol source (atomic counter).
std::string fresh_symbol();
void reset_symbol_counter();  // test support

// Deterministic full factorization (trial division + Miller-Rabin + Pollard
// rho); n > 0.
std::map<Int, Int> factorize(Int n);

}  // namespace looijenga
