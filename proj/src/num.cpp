#include "dsp/num.hpp"

#include <algorithm>
#include <ostream>

namespace dsp {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                               : static_cast<unsigned long long>(v);
  while (m) {
    mag_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
    m >>= 32;
  }
}

BigInt BigInt::from_string(const std::string& s) {
  if (s.empty()) throw NumError("empty integer literal");
  size_t i = 0;
  int sign = 1;
  if (s[0] == '-' || s[0] == '+') {
    sign = s[0] == '-' ? -1 : 1;
    i = 1;
  }
  if (i == s.size()) throw NumError("bad integer literal: " + s);
  BigInt out;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw NumError("bad integer literal: " + s);
    out *= BigInt(10);
    out += BigInt(s[i] - '0');
  }
  if (sign < 0) out.sign_ = -out.sign_;
  return out;
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

void BigInt::add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t s = carry + a[i] + (i < b.size() ? b[i] : 0);
    a[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  if (carry) a.push_back(static_cast<uint32_t>(carry));
}

void BigInt::sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t d = int64_t(a[i]) - borrow - (i < b.size() ? int64_t(b[i]) : 0);
    if (d < 0) {
      d += int64_t(1) << 32;
      borrow = 1;
    } else {
      borrow = 0;
    }
    a[i] = static_cast<uint32_t>(d);
  }
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (o.sign_ == 0) return *this;
  if (sign_ == 0) return *this = o;
  if (sign_ == o.sign_) {
    add_mag(mag_, o.mag_);
    return *this;
  }
  int c = cmp_mag(mag_, o.mag_);
  if (c == 0) {
    sign_ = 0;
    mag_.clear();
  } else if (c > 0) {
    sub_mag(mag_, o.mag_);
    trim();
  } else {
    std::vector<uint32_t> m = o.mag_;
    sub_mag(m, mag_);
    mag_ = std::move(m);
    sign_ = o.sign_;
    trim();
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
  BigInt t = o;
  t.sign_ = -t.sign_;
  return *this += t;
}

BigInt BigInt::operator-() const {
  BigInt t = *this;
  t.sign_ = -t.sign_;
  return t;
}

BigInt& BigInt::operator*=(const BigInt& o) {
  if (sign_ == 0 || o.sign_ == 0) {
    sign_ = 0;
    mag_.clear();
    return *this;
  }
  std::vector<uint32_t> out(mag_.size() + o.mag_.size(), 0);
  for (size_t i = 0; i < mag_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < o.mag_.size(); ++j) {
      uint64_t cur = out[i + j] + uint64_t(mag_[i]) * o.mag_[j] + carry;
      out[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + o.mag_.size();
    while (carry) {
      uint64_t cur = out[k] + carry;
      out[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  mag_ = std::move(out);
  sign_ *= o.sign_;
  trim();
  return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw NumError("division by zero");
  if (cmp_mag(a.mag_, b.mag_) < 0) {
    q = BigInt(0);
    r = a;
    return;
  }
  // Schoolbook long division on 32-bit limbs, magnitudes only.
  std::vector<uint32_t> rem;
  std::vector<uint32_t> quo(a.mag_.size(), 0);
  auto rem_cmp_b = [&]() { return cmp_mag(rem, b.mag_); };
  for (size_t i = a.mag_.size(); i-- > 0;) {
    rem.insert(rem.begin(), a.mag_[i]);
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.empty() || rem_cmp_b() < 0) continue;
    // Binary-search the quotient limb.
    uint64_t lo = 1, hi = 0xffffffffULL, best = 1;
    auto fits = [&](uint64_t cand) {
      // cand * b <= rem ?
      std::vector<uint32_t> t(b.mag_.size() + 2, 0);
      uint64_t carry = 0;
      for (size_t j = 0; j < b.mag_.size(); ++j) {
        uint64_t cur = uint64_t(b.mag_[j]) * cand + carry;
        t[j] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
      }
      size_t k = b.mag_.size();
      while (carry) {
        t[k++] = static_cast<uint32_t>(carry);
        carry >>= 32;
      }
      while (!t.empty() && t.back() == 0) t.pop_back();
      return cmp_mag(t, rem) <= 0;
    };
    while (lo <= hi) {
      uint64_t mid = lo + (hi - lo) / 2;
      if (fits(mid)) {
        best = mid;
        lo = mid + 1;
      } else {
        if (mid == 0) break;
        hi = mid - 1;
      }
    }
    quo[i] = static_cast<uint32_t>(best);
    // rem -= best * b
    std::vector<uint32_t> t(b.mag_.size() + 2, 0);
    uint64_t carry = 0;
    for (size_t j = 0; j < b.mag_.size(); ++j) {
      uint64_t cur = uint64_t(b.mag_[j]) * best + carry;
      t[j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = b.mag_.size();
    while (carry) {
      t[k++] = static_cast<uint32_t>(carry);
      carry >>= 32;
    }
    while (!t.empty() && t.back() == 0) t.pop_back();
    sub_mag(rem, t);
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  q.mag_ = std::move(quo);
  q.sign_ = a.sign_ * b.sign_;
  q.trim();
  r.mag_ = std::move(rem);
  r.sign_ = a.sign_;
  r.trim();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.sign_ = a.sign_ ? 1 : 0;
  b.sign_ = b.sign_ ? 1 : 0;
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt BigInt::abs() const {
  BigInt t = *this;
  if (t.sign_ < 0) t.sign_ = 1;
  return t;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  int c = cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c : -c;
}

std::string BigInt::str() const {
  if (sign_ == 0) return "0";
  std::vector<uint32_t> m = mag_;
  std::string digits;
  while (!m.empty()) {
    // divide magnitude by 10^9
    uint64_t rem = 0;
    for (size_t i = m.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | m[i];
      m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
      rem = cur % 1000000000ULL;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(char('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

long long BigInt::to_ll() const {
  if (mag_.size() > 2) throw NumError("BigInt too large for long long");
  unsigned long long m = 0;
  for (size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
  if (sign_ >= 0) {
    if (m > 0x7fffffffffffffffULL) throw NumError("BigInt too large for long long");
    return static_cast<long long>(m);
  }
  if (m > 0x8000000000000000ULL) throw NumError("BigInt too large for long long");
  return -static_cast<long long>(m - 1) - 1;
}

double BigInt::to_double() const {
  double v = 0;
  for (size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
  return sign_ < 0 ? -v : v;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

Rat::Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw NumError("zero denominator");
  reduce();
}

void Rat::reduce() {
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rat Rat::parse(const std::string& s) {
  size_t slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt::from_string(s), BigInt(1));
  BigInt n = BigInt::from_string(s.substr(0, slash));
  BigInt d = BigInt::from_string(s.substr(slash + 1));
  if (d.is_zero()) throw NumError("zero denominator in rational: " + s);
  return Rat(std::move(n), std::move(d));
}

Rat Rat::operator-() const {
  Rat t = *this;
  t.num_ = -t.num_;
  return t;
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rat operator-(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }
Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw NumError("division by zero rational");
  return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

int Rat::cmp(const Rat& a, const Rat& b) { return BigInt::cmp(a.num_ * b.den_, b.num_ * a.den_); }

BigInt Rat::floor() const {
  BigInt q, r;
  BigInt::divmod(num_, den_, q, r);
  if (num_.is_negative() && !r.is_zero()) q -= BigInt(1);
  return q;
}

std::string Rat::str() const {
  if (is_integer()) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.str(); }

}  // namespace dsp
