#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace dgm {

/// Deterministic primality test, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// The ground field: the rationals or GF(p).
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() noexcept { return FieldSpec(); }
  /// Throws Errc::NonPrimeModulus unless p is prime.
  static FieldSpec prime(std::uint64_t p);

  FieldSpec() noexcept = default;

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  /// 0 for the rationals.
  std::uint64_t modulus() const noexcept { return modulus_; }

  /// "Q" or "GF(p)".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) noexcept = default;

 private:
  Kind kind_ = Kind::Rationals;
  std::uint64_t modulus_ = 0;
};

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator, residues in [0, p). Equality is equality of representations.
class Scalar {
 public:
  explicit Scalar(FieldSpec field = FieldSpec::rationals());

  static Scalar zero(FieldSpec field) { return Scalar(field); }
  static Scalar one(FieldSpec field) { return make(field, 1); }
  static Scalar make(FieldSpec field, long num, long den = 1);
  static Scalar make(FieldSpec field, const mpz_class& num, const mpz_class& den);
  /// Accepts `a` or `a/b` with an optional leading sign. Residues are reduced mod p.
  static Scalar parse(FieldSpec field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Residue in [0, p); only meaningful over GF(p).
  std::uint64_t residue() const;
  /// Only meaningful over the rationals.
  const mpq_class& rational() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) noexcept;

  /// Canonical stored form: `a`, `-a/b`, or the residue.
  std::string to_string() const;

  /// Sign-magnitude split used by renderers. Over GF(p) residues above p/2 are
  /// shown as negatives, so -1 renders as a leading minus in every field.
  struct Signed {
    bool negative;
    std::string magnitude;
    bool unit;  ///< magnitude is 1
  };
  Signed split_sign() const;

 private:
  void check_same_field(const Scalar& other) const;

  FieldSpec field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace dgm
