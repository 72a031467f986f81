#pragma once

#include <cstdint>
#include <iosfwd>

namespace cmdef {

using Coeff = std::uint32_t;

// The prime field GF(p). Residues are stored as Coeff in [0, p).
class PrimeField {
 public:
  // Largest supported characteristic; products of two residues fit in 64 bits
  // with room to spare.
  static constexpr Coeff kMaxPrime = 65521;

  explicit PrimeField(Coeff p);

  Coeff p() const { return p_; }

  Coeff reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const;
  // Throws InvalidArgument on zero.
  Coeff inv(Coeff a) const;

  static bool is_prime(std::uint64_t n);

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Coeff p_;
};

// A single element of GF(p) carrying its characteristic.
class FieldElement {
 public:
  FieldElement(Coeff p, std::int64_t value);

  Coeff value() const { return value_; }
  Coeff p() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement inverse() const;

  friend FieldElement operator+(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a, FieldElement b);
  friend FieldElement operator*(FieldElement a, FieldElement b);
  friend FieldElement operator/(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a);
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a);

 private:
  Coeff p_;
  Coeff value_;
};

}  // namespace cmdef
