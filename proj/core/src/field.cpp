#include "cmdef/field.hpp"

#include <ostream>
#include <string>

#include "cmdef/errors.hpp"

namespace cmdef {

PrimeField::PrimeField(Coeff p) : p_(p) {
  if (p > kMaxPrime || !is_prime(p))
    throw InvalidArgument("characteristic must be a prime <= 65521, got " +
                          std::to_string(p));
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw InvalidArgument("inverse of zero in GF(p)");
  return pow(a, p_ - 2);
}

bool PrimeField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldElement::FieldElement(Coeff p, std::int64_t value)
    : p_(PrimeField(p).p()), value_(PrimeField(p).reduce(value)) {}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
  if (a.p() != b.p()) throw RingMismatch("field elements of different characteristic");
}
}  // namespace

FieldElement FieldElement::inverse() const {
  return FieldElement(p_, PrimeField(p_).inv(value_));
}

FieldElement operator+(FieldElement a, FieldElement b) {
  check_same(a, b);
  return FieldElement(a.p_, static_cast<std::int64_t>(a.value_) + b.value_);
}
FieldElement operator-(FieldElement a, FieldElement b) {
  check_same(a, b);
  return FieldElement(a.p_, static_cast<std::int64_t>(a.value_) - b.value_);
}
FieldElement operator*(FieldElement a, FieldElement b) {
  check_same(a, b);
  return FieldElement(a.p_, static_cast<std::int64_t>(
                                static_cast<std::uint64_t>(a.value_) * b.value_ % a.p_));
}
FieldElement operator/(FieldElement a, FieldElement b) { return a * b.inverse(); }
FieldElement operator-(FieldElement a) {
  return FieldElement(a.p_, -static_cast<std::int64_t>(a.value_));
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  return os << a.value_ << " (mod " << a.p_ << ")";
}

}  // namespace cmdef
