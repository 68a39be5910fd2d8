#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "bruhatkit/errors.hpp"

namespace bruhatkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class RingKind { rationals, prime_field, integers };

// The ambient coefficient ring.  All Scalar arithmetic is exact; the three
// supported rings are Q (arbitrary precision), F_p (p prime) and Z.
class Ring {
 public:
  static Ring rationals() { return Ring(RingKind::rationals, 0); }
  static Ring integers() { return Ring(RingKind::integers, 0); }

  static Ring prime_field(std::int64_t p) {
    if (p < 2 || !is_prime(p)) {
      throw ParseError("prime field modulus must be a prime >= 2, got " + std::to_string(p));
    }
    return Ring(RingKind::prime_field, p);
  }

  // Accepts "Q", "Z", "Fp:<p>" and the shorthand "F<p>" (e.g. "F2").
  static Ring parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text == "Z") return integers();
    std::string digits;
    if (text.rfind("Fp:", 0) == 0) {
      digits = text.substr(3);
    } else if (text.size() >= 2 && text[0] == 'F') {
      digits = text.substr(1);
    }
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      return prime_field(std::stoll(digits));
    }
    throw ParseError("unknown field spec '" + text + "' (expected Q, Z, or Fp:<p>)");
  }

  RingKind kind() const { return kind_; }
  std::int64_t modulus() const { return modulus_; }
  bool is_field() const { return kind_ != RingKind::integers; }

  std::string name() const {
    switch (kind_) {
      case RingKind::rationals: return "Q";
      case RingKind::integers: return "Z";
      case RingKind::prime_field: return "Fp:" + std::to_string(modulus_);
    }
    return "?";
  }

  bool operator==(const Ring& other) const {
    return kind_ == other.kind_ && modulus_ == other.modulus_;
  }
  bool operator!=(const Ring& other) const { return !(*this == other); }

 private:
  Ring(RingKind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}

  static bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  }

  RingKind kind_;
  std::int64_t modulus_;
};

// Immutable exact ring element.  Q and Z values are stored as canonical
// rationals (reduced, positive denominator; Z keeps denominator 1), F_p
// values as residues in [0, p).
class Scalar {
 public:
  static Scalar zero(const Ring& ring) { return of(ring, 0); }
  static Scalar one(const Ring& ring) { return of(ring, 1); }

  static Scalar of(const Ring& ring, long long n) {
    Scalar s(ring);
    if (ring.kind() == RingKind::prime_field) {
      s.residue_ = mod(n, ring.modulus());
    } else {
      s.rational_ = n;
    }
    return s;
  }

  static Scalar rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("NotAUnit", "zero denominator");
    Scalar s(Ring::rationals());
    // cpp_rational wants a positive denominator; reduction is automatic
    s.rational_ = den < 0 ? BigRational(-num, -den) : BigRational(num, den);
    return s;
  }

  static Scalar integer(const BigInt& n) {
    Scalar s(Ring::integers());
    s.rational_ = n;
    return s;
  }

  static Scalar mod_p(long long n, std::int64_t p) {
    return of(Ring::prime_field(p), n);
  }

  const Ring& ring() const { return ring_; }

  bool is_zero() const {
    return ring_.kind() == RingKind::prime_field ? residue_ == 0 : rational_ == 0;
  }
  bool is_one() const {
    return ring_.kind() == RingKind::prime_field ? residue_ == 1 : rational_ == 1;
  }

  bool is_unit() const {
    switch (ring_.kind()) {
      case RingKind::rationals: return !is_zero();
      case RingKind::prime_field: return residue_ != 0;
      case RingKind::integers:
        return boost::multiprecision::denominator(rational_) == 1 &&
               (boost::multiprecision::numerator(rational_) == 1 ||
                boost::multiprecision::numerator(rational_) == -1);
    }
    return false;
  }

  Scalar inverse() const {
    if (!is_unit()) {
      throw Error("NotAUnit", str() + " is not invertible in " + ring_.name());
    }
    if (ring_.kind() == RingKind::prime_field) {
      Scalar s(ring_);
      s.residue_ = mod_inverse(residue_, ring_.modulus());
      return s;
    }
    Scalar s(ring_);
    s.rational_ = 1 / rational_;
    return s;
  }

  Scalar operator-() const {
    Scalar s(ring_);
    if (ring_.kind() == RingKind::prime_field) {
      s.residue_ = residue_ == 0 ? 0 : ring_.modulus() - residue_;
    } else {
      s.rational_ = -rational_;
    }
    return s;
  }

  Scalar operator+(const Scalar& other) const {
    check_ring(other);
    Scalar s(ring_);
    if (ring_.kind() == RingKind::prime_field) {
      s.residue_ = mod(residue_ + other.residue_, ring_.modulus());
    } else {
      s.rational_ = rational_ + other.rational_;
    }
    return s;
  }

  Scalar operator-(const Scalar& other) const { return *this + (-other); }

  Scalar operator*(const Scalar& other) const {
    check_ring(other);
    Scalar s(ring_);
    if (ring_.kind() == RingKind::prime_field) {
      s.residue_ = mod(residue_ * other.residue_, ring_.modulus());
    } else {
      s.rational_ = rational_ * other.rational_;
    }
    return s;
  }

  Scalar operator/(const Scalar& other) const { return *this * other.inverse(); }

  bool operator==(const Scalar& other) const {
    return ring_ == other.ring_ &&
           (ring_.kind() == RingKind::prime_field ? residue_ == other.residue_
                                                  : rational_ == other.rational_);
  }
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  // Underlying representation, for exact rearrangements (e.g. clearing
  // denominators before fraction-free elimination).
  const BigRational& rational_value() const {
    if (ring_.kind() == RingKind::prime_field) {
      throw Error("RingMismatch", "F_p elements have no rational value");
    }
    return rational_;
  }

  std::int64_t residue_value() const {
    if (ring_.kind() != RingKind::prime_field) {
      throw Error("RingMismatch", "only F_p elements have residues");
    }
    return residue_;
  }

  // Text forms: "a/b" for Q, "n mod p" for F_p, "n" for Z.
  std::string str() const {
    if (ring_.kind() == RingKind::prime_field) {
      return std::to_string(residue_) + " mod " + std::to_string(ring_.modulus());
    }
    const BigInt num = boost::multiprecision::numerator(rational_);
    const BigInt den = boost::multiprecision::denominator(rational_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  static Scalar parse(const Ring& ring, const std::string& text) {
    try {
      if (ring.kind() == RingKind::prime_field) {
        std::string body = text;
        auto at = text.find(" mod ");
        if (at != std::string::npos) {
          std::int64_t p = std::stoll(text.substr(at + 5));
          if (p != ring.modulus()) {
            throw ParseError("modulus mismatch in '" + text + "' for " + ring.name());
          }
          body = text.substr(0, at);
        }
        return of(ring, std::stoll(body));
      }
      auto slash = text.find('/');
      if (slash != std::string::npos) {
        if (ring.kind() != RingKind::rationals) {
          throw ParseError("fraction '" + text + "' is not a " + ring.name() + " element");
        }
        return rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
      }
      Scalar s(ring);
      s.rational_ = BigInt(text);
      return s;
    } catch (const std::invalid_argument&) {
      throw ParseError("cannot parse scalar '" + text + "' in " + ring.name());
    } catch (const std::runtime_error& e) {
      if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const Error*>(&e)) throw;
      throw ParseError("cannot parse scalar '" + text + "' in " + ring.name());
    }
  }

 private:
  explicit Scalar(const Ring& ring) : ring_(ring) {}

  void check_ring(const Scalar& other) const {
    if (ring_ != other.ring_) {
      throw Error("RingMismatch", ring_.name() + " vs " + other.ring_.name());
    }
  }

  static std::int64_t mod(std::int64_t n, std::int64_t p) {
    std::int64_t r = n % p;
    return r < 0 ? r + p : r;
  }

  static std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    // extended Euclid; a in [1, p)
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
      std::int64_t q = old_r / r;
      std::int64_t tmp = old_r - q * r;
      old_r = r;
      r = tmp;
      tmp = old_s - q * s;
      old_s = s;
      s = tmp;
    }
    return mod(old_s, p);
  }

  Ring ring_;
  BigRational rational_;      // Q and Z
  std::int64_t residue_ = 0;  // F_p
};

inline Scalar invert(const Scalar& a) { return a.inverse(); }
inline bool is_unit(const Scalar& a) { return a.is_unit(); }

}  // namespace bruhatkit
