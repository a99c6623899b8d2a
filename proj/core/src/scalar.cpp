#include "dgm/scalar.hpp"

#include <ostream>

#include "dgm/error.hpp"

namespace dgm {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t small : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // This witness set is exact below 2^64.
  for (std::uint64_t a : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(Errc::NonPrimeModulus, "modulus " + std::to_string(p) + " is not prime");
  }
  FieldSpec f;
  f.kind_ = Kind::PrimeField;
  f.modulus_ = p;
  return f;
}

std::string FieldSpec::to_string() const {
  if (is_rationals()) return "Q";
  return "GF(" + std::to_string(modulus_) + ")";
}

Scalar::Scalar(FieldSpec field) : field_(field) {
  if (field_.is_rationals()) {
    value_ = mpq_class(0);
  } else {
    value_ = std::uint64_t{0};
  }
}

Scalar Scalar::make(FieldSpec field, long num, long den) {
  return make(field, mpz_class(num), mpz_class(den));
}

Scalar Scalar::make(FieldSpec field, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(Errc::ZeroDenominator, "zero denominator");
  Scalar s(field);
  if (field.is_rationals()) {
    mpq_class q(num, den);
    q.canonicalize();
    s.value_ = std::move(q);
    return s;
  }
  const std::uint64_t p = field.modulus();
  const std::uint64_t d = reduce(den, p);
  if (d == 0) {
    throw Error(Errc::DenominatorDivisibleByP,
                "denominator divisible by " + std::to_string(p));
  }
  s.value_ = mul_mod(reduce(num, p), pow_mod(d, p - 2, p), p);
  return s;
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  if (!digits_only(num_text) || !digits_only(den_text)) {
    throw Error(Errc::SyntaxError, "malformed scalar '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (negative) num = -num;
  return make(field, num, den);
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Scalar::residue() const { return std::get<std::uint64_t>(value_); }

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(value_); }

void Scalar::check_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw Error(Errc::FieldMismatch,
                "field mismatch: " + field_.to_string() + " vs " + other.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.value_ = mpq_class(1) / rational();
  } else {
    const std::uint64_t p = field_.modulus();
    s.value_ = pow_mod(residue(), p - 2, p);
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_rationals()) {
    std::get<mpq_class>(value_) += rhs.rational();
  } else {
    const std::uint64_t p = field_.modulus();
    const std::uint64_t a = residue();
    const std::uint64_t b = rhs.residue();
    value_ = a >= p - b ? a - (p - b) : a + b;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_rationals()) {
    std::get<mpq_class>(value_) *= rhs.rational();
  } else {
    value_ = mul_mod(residue(), rhs.residue(), field_.modulus());
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (field_.is_rationals()) {
    std::get<mpq_class>(s.value_) = -rational();
  } else if (residue() != 0) {
    s.value_ = field_.modulus() - residue();
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) noexcept {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_rationals()) return rational().get_str();
  return std::to_string(residue());
}

Scalar::Signed Scalar::split_sign() const {
  if (field_.is_rationals()) {
    const mpq_class& q = rational();
    const bool negative = sgn(q) < 0;
    mpq_class mag = negative ? mpq_class(-q) : q;
    return {negative, mag.get_str(), mag == 1};
  }
  const std::uint64_t p = field_.modulus();
  const std::uint64_t r = residue();
  if (r != 0 && r > p / 2) {
    const std::uint64_t mag = p - r;
    return {true, std::to_string(mag), mag == 1};
  }
  return {false, std::to_string(r), r == 1};
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace dgm
