#include "looijenga/gm.hpp"

#include <atomic>
#include <sstream>

namespace looijenga {

namespace {

Int mulmod(const Int& a, const Int& b, const Int& m) { return a * b % m; }

Int powmod(Int base, Int exp, const Int& m) {
  Int r(1);
  base %= m;
  while (exp > 0) {
    if (exp % 2 == 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp /= 2;
  }
  return r;
}

bool miller_rabin(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  for (Int c = 1;; ++c) {
    Int x(2), y(2), d(1);
    while (d == 1) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      Int diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      d = boost::multiprecision::gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(Int n, std::map<Int, Int>& out) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<Int, Int> factorize(Int n) {
  if (n <= 0) throw std::domain_error("factorize: positive input required");
  std::map<Int, Int> out;
  for (int p : {2, 3, 5, 7, 11, 13}) {
    while (n % p == 0) {
      ++out[Int(p)];
      n /= p;
    }
  }
  if (n > 1) factor_into(n, out);
  return out;
}

GmElem GmElem::minus_one() {
  GmElem g;
  g.negative_ = true;
  return g;
}

GmElem GmElem::from_rational(const Rat& r) {
  if (r == 0) throw std::domain_error("GmElem: zero is not invertible");
  GmElem g;
  g.negative_ = r < 0;
  Int n = boost::multiprecision::abs(num(r)), d = den(r);
  for (auto& [p, e] : factorize(n)) g.primes_[p] += Rat(e);
  for (auto& [p, e] : factorize(d)) {
    g.primes_[p] -= Rat(e);
    if (g.primes_[p] == 0) g.primes_.erase(p);
  }
  return g;
}

GmElem GmElem::symbol(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("GmElem: empty symbol name");
  GmElem g;
  g.symbols_[name] = 1;
  return g;
}

bool GmElem::operator<(const GmElem& o) const {
  if (negative_ != o.negative_) return negative_ < o.negative_;
  if (primes_ != o.primes_) return primes_ < o.primes_;
  return symbols_ < o.symbols_;
}

GmElem GmElem::operator*(const GmElem& o) const {
  GmElem g = *this;
  g.negative_ = negative_ != o.negative_;
  for (auto& [p, e] : o.primes_) {
    auto it = g.primes_.find(p);
    if (it == g.primes_.end()) {
      g.primes_[p] = e;
    } else {
      it->second += e;
      if (it->second == 0) g.primes_.erase(it);
    }
  }
  for (auto& [s, e] : o.symbols_) {
    auto it = g.symbols_.find(s);
    if (it == g.symbols_.end()) {
      g.symbols_[s] = e;
    } else {
      it->second += e;
      if (it->second == 0) g.symbols_.erase(it);
    }
  }
  return g;
}

GmElem GmElem::inverse() const {
  GmElem g = *this;
  for (auto& [p, e] : g.primes_) e = -e;
  for (auto& [s, e] : g.symbols_) e = -e;
  return g;
}

GmElem GmElem::pow(const Int& e) const {
  GmElem g;
  if (e == 0) return g;
  g.negative_ = negative_ && (e % 2 != 0);
  for (auto& [p, x] : primes_) g.primes_[p] = x * Rat(e);
  for (auto& [s, x] : symbols_) g.symbols_[s] = x * Rat(e);
  return g;
}

GmElem GmElem::pow(const Rat& e) const {
  if (den(e) == 1) return pow(num(e));
  if (negative_ && den(e) % 2 == 0)
    throw std::domain_error("GmElem: even root of a negative element (sign obstruction)");
  GmElem g;
  if (e == 0) return g;
  g.negative_ = negative_ && (num(e) % 2 != 0);
  for (auto& [p, x] : primes_) {
    Rat v = x * e;
    if (v != 0) g.primes_[p] = v;
  }
  for (auto& [s, x] : symbols_) {
    Rat v = x * e;
    if (v != 0) g.symbols_[s] = v;
  }
  return g;
}

std::optional<Rat> GmElem::as_rational() const {
  if (!symbols_.empty()) return std::nullopt;
  Rat v = negative_ ? Rat(-1) : Rat(1);
  for (auto& [p, e] : primes_) {
    if (den(e) != 1) return std::nullopt;
    Int k = num(e);
    Int pw(1);
    Int base = p;
    Int n = boost::multiprecision::abs(k);
    for (Int i = 0; i < n; ++i) pw *= base;
    if (k >= 0)
      v *= Rat(pw);
    else
      v /= Rat(pw);
  }
  return v;
}

std::string GmElem::to_string() const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  if (negative_) {
    os << "-1";
    first = false;
  }
  for (auto& [p, e] : primes_) {
    if (!first) os << "*";
    os << p.str();
    if (e != 1) os << "^(" << rat_to_string(e) << ")";
    first = false;
  }
  for (auto& [s, e] : symbols_) {
    if (!first) os << "*";
    os << s;
    if (e != 1) os << "^(" << rat_to_string(e) << ")";
    first = false;
  }
  return os.str();
}

namespace {
std::atomic<unsigned long> symbol_counter{0};
}

std::string fresh_symbol() { return "t" + std::to_string(++symbol_counter); }

void reset_symbol_counter() { symbol_counter = 0; }

}  // namespace looijenga
