#pragma once

// Exact integer and rational arithmetic. All verdict-relevant computation in
// this project runs on these types; floating point is confined to the witness
// module.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsp {

class NumError : public std::runtime_error {
public:
  explicit NumError(const std::string& what) : std::runtime_error(what) {}
};

// Sign-magnitude big integer, little-endian 32-bit limbs.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);
  static BigInt from_string(const std::string& s);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  int sign() const { return sign_; }

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  BigInt operator-() const;

  // Truncated toward zero, like C integer division.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  static BigInt gcd(BigInt a, BigInt b);
  BigInt abs() const;

  // -1, 0, 1
  static int cmp(const BigInt& a, const BigInt& b);
  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

  std::string str() const;
  // Throws NumError unless the value fits in long long.
  long long to_ll() const;
  double to_double() const;

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static void sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  void trim();

  int sign_ = 0;
  std::vector<uint32_t> mag_;
};

// Reduced fraction with positive denominator.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(long long v) : num_(v), den_(1) {}
  Rat(BigInt n, BigInt d);
  Rat(long long n, long long d) : Rat(BigInt(n), BigInt(d)) {}

  // Accepts "p", "p/q", optional leading '-'. Rejects zero denominators.
  static Rat parse(const std::string& s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }
  int sign() const { return num_.sign(); }

  Rat operator-() const;
  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  static int cmp(const Rat& a, const Rat& b);
  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a, b) >= 0; }

  Rat abs() const { return num_.is_negative() ? -*this : *this; }
  // Largest integer <= value.
  BigInt floor() const;

  // "p/q" when q != 1, else "p".
  std::string str() const;
  double to_double() const { return num_.to_double() / den_.to_double(); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& v);

private:
  void reduce();
  BigInt num_, den_;
};

// splitmix64: the deterministic seed expander used everywhere randomness is
// needed (witness restarts, fuzz suites, generic flag draws).
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }
  // uniform double in [0, 1)
  double unit() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }
};

}  // namespace dsp
