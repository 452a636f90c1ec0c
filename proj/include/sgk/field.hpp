#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgk {

using Scalar = mpq_class;

/// Coefficient field: exact rationals (characteristic 0) or GF(p).
///
/// Values are always stored as mpq_class. Over GF(p) they are kept as
/// canonical integer representatives in [0, p), so equality of stored
/// scalars is equality in the field.
class Field {
 public:
  Field() = default;
  explicit Field(std::uint64_t characteristic) : p_(characteristic) {
    if (p_ == 1) throw std::invalid_argument("GF(1) is not a field");
    if (p_ != 0) {
      mpz_class z(static_cast<unsigned long>(p_));
      if (mpz_probab_prime_p(z.get_mpz_t(), 25) == 0)
        throw std::invalid_argument("GF(" + std::to_string(p_) + "): characteristic must be prime");
    }
  }

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p) { return Field(p); }

  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  std::string name() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

  /// Maps an arbitrary rational into the field's canonical representation.
  Scalar from_rational(const Scalar& q) const {
    if (p_ == 0) return q;
    mpz_class m(static_cast<unsigned long>(p_));
    mpz_class num = q.get_num() % m;
    if (num < 0) num += m;
    mpz_class den = q.get_den() % m;
    if (den == 0) throw std::domain_error("denominator divisible by characteristic " + std::to_string(p_));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    mpz_class r = (num * inv) % m;
    return Scalar(r);
  }

  Scalar from_int(long v) const { return from_rational(Scalar(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }

  Scalar inv(const Scalar& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero");
    if (p_ == 0) return 1 / a;
    mpz_class m(static_cast<unsigned long>(p_));
    mpz_class r;
    mpz_class n = a.get_num();
    mpz_invert(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return Scalar(r);
  }

  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  // a += b * c
  void axpy(Scalar& a, const Scalar& b, const Scalar& c) const {
    a += b * c;
    if (p_ != 0) a = reduce(a);
  }

  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  Scalar reduce(const Scalar& q) const {
    if (p_ == 0) return q;
    mpz_class m(static_cast<unsigned long>(p_));
    mpz_class r = q.get_num() % m;
    if (r < 0) r += m;
    return Scalar(r);
  }

  std::uint64_t p_ = 0;
};

/// Integer-or-fraction text form ("3", "-1/2").
inline std::string to_string(const Scalar& q) { return q.get_str(); }

}  // namespace sgk
