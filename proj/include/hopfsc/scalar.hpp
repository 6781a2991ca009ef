#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

// Exact scalars for the engine: arbitrary-precision rationals and odd prime
// fields. Each element carries its field descriptor so that mixing fields is
// caught at the first arithmetic operation instead of producing nonsense.

namespace hopfsc {

// Bad user-supplied data: malformed files, dimension or field mismatches,
// unmet preconditions of an operation.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A violated invariant that well-formed input should never be able to reach.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Rational number kept in lowest terms with positive denominator.
class Rat {
 public:
  struct Desc {
    friend bool operator==(const Desc &, const Desc &) { return true; }
  };

  Rat() : v_(0) {}
  explicit Rat(long n) : v_(n) {}
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw input_error("rational with zero denominator");
    v_.canonicalize();
  }

  static Rat zero(Desc) { return Rat(); }
  static Rat one(Desc) { return Rat(1); }
  static Rat from_int(Desc, long n) { return Rat(n); }

  // Accepts an optional sign, digits, and an optional "/digits" suffix.
  static std::optional<Rat> parse(Desc, const std::string &s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool digits = false, slash = false, denom_digits = false;
    for (; i < s.size(); ++i) {
      if (s[i] == '/') {
        if (slash || !digits) return std::nullopt;
        slash = true;
      } else if (s[i] >= '0' && s[i] <= '9') {
        (slash ? denom_digits : digits) = true;
      } else {
        return std::nullopt;
      }
    }
    if (!digits || (slash && !denom_digits)) return std::nullopt;
    // mpq_set_str rejects a leading '+' even though it is unambiguous
    mpq_class v(s[0] == '+' ? s.substr(1) : s, 10);
    if (slash && mpz_sgn(v.get_den().get_mpz_t()) == 0)
      return std::nullopt;
    v.canonicalize();
    Rat r;
    r.v_ = v;
    return r;
  }

  Desc desc() const { return {}; }
  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return mpq_sgn(v_.get_mpq_t()) < 0; }
  std::string str() const { return v_.get_str(); }

  Rat inv() const {
    if (is_zero()) throw internal_error("inverse of zero");
    Rat r;
    r.v_ = 1 / v_;
    return r;
  }

  Rat operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
  }
  Rat &operator+=(const Rat &o) {
    v_ += o.v_;
    return *this;
  }
  Rat &operator-=(const Rat &o) {
    v_ -= o.v_;
    return *this;
  }
  Rat &operator*=(const Rat &o) {
    v_ *= o.v_;
    return *this;
  }
  Rat &operator/=(const Rat &o) {
    if (o.is_zero()) throw internal_error("division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rat operator+(Rat a, const Rat &b) { return a += b; }
  friend Rat operator-(Rat a, const Rat &b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat &b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat &b) { return a /= b; }
  friend bool operator==(const Rat &a, const Rat &b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat &a, const Rat &b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat &a, const Rat &b) { return a.v_ < b.v_; }

 private:
  mpq_class v_;
};

// Element of F_p, an odd prime field, stored as the canonical residue in
// [0, p). Characteristic 2 is rejected up front: the constructions served by
// this engine routinely divide by 2.
class Fp {
 public:
  struct Desc {
    std::uint32_t p = 0;
    friend bool operator==(const Desc &, const Desc &) = default;
  };

  static Desc field(std::uint32_t p) {
    if (p < 3) throw input_error("field characteristic must be an odd prime (got " + std::to_string(p) + ")");
    if (p % 2 == 0) throw input_error("characteristic 2 is not supported");
    for (std::uint32_t d = 3; d * d <= p; d += 2)
      if (p % d == 0)
        throw input_error(std::to_string(p) + " is not prime");
    return Desc{p};
  }

  Fp() = default;  // unset; valid only as an assignment target
  Fp(Desc d, std::uint64_t v) : v_(static_cast<std::uint32_t>(v % d.p)), p_(d.p) {}

  static Fp zero(Desc d) { return Fp(d, 0); }
  static Fp one(Desc d) { return Fp(d, 1); }
  static Fp from_int(Desc d, long n) {
    long r = n % static_cast<long>(d.p);
    if (r < 0) r += d.p;
    return Fp(d, static_cast<std::uint64_t>(r));
  }

  static std::optional<Fp> parse(Desc d, const std::string &s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    std::uint64_t acc = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
      acc = (acc * 10 + static_cast<std::uint64_t>(s[i] - '0')) % d.p;
    }
    Fp r(d, acc);
    if (s[0] == '-') r = -r;
    return r;
  }

  Desc desc() const { return Desc{p_}; }
  std::uint32_t residue() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return false; }  // residues carry no sign
  std::string str() const { return std::to_string(v_); }

  Fp inv() const {
    if (v_ == 0) throw internal_error("inverse of zero");
    // extended Euclid on (v, p); p is prime so the gcd is 1
    std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
    while (m != 0) {
      std::int64_t q = a / m;
      std::int64_t t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    std::int64_t r = x0 % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    Fp out;
    out.v_ = static_cast<std::uint32_t>(r);
    out.p_ = p_;
    return out;
  }

  Fp operator-() const {
    check_set();
    Fp r = *this;
    r.v_ = v_ == 0 ? 0 : p_ - v_;
    return r;
  }
  Fp &operator+=(const Fp &o) {
    check_match(o);
    v_ = (v_ + o.v_) % p_;
    return *this;
  }
  Fp &operator-=(const Fp &o) {
    check_match(o);
    v_ = (v_ + p_ - o.v_) % p_;
    return *this;
  }
  Fp &operator*=(const Fp &o) {
    check_match(o);
    v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) * o.v_) % p_);
    return *this;
  }
  Fp &operator/=(const Fp &o) { return *this *= o.inv(); }
  friend Fp operator+(Fp a, const Fp &b) { return a += b; }
  friend Fp operator-(Fp a, const Fp &b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp &b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp &b) { return a /= b; }
  friend bool operator==(const Fp &a, const Fp &b) { return a.p_ == b.p_ && a.v_ == b.v_; }
  friend bool operator!=(const Fp &a, const Fp &b) { return !(a == b); }
  friend bool operator<(const Fp &a, const Fp &b) { return a.v_ < b.v_; }

 private:
  void check_set() const {
    if (p_ == 0) throw internal_error("arithmetic on an unset prime-field element");
  }
  void check_match(const Fp &o) const {
    check_set();
    if (p_ != o.p_) throw internal_error("prime-field mismatch in scalar arithmetic");
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

}  // namespace hopfsc
