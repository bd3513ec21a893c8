#include "egqldpc/field.hpp"

#include <string>

#include "egqldpc/error.hpp"

namespace egqldpc {
namespace {

// Largest order we are willing to represent; element codes stay well inside
// 32 bits and slow-path products never overflow 64 bits.
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;

using Poly = std::vector<std::uint32_t>;

Poly decode(std::uint32_t code, std::uint32_t p, std::uint32_t s) {
  Poly c(s, 0);
  for (std::uint32_t i = 0; i < s; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

std::uint32_t encode(const Poly& c, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

std::uint32_t inverse_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime and small; Fermat.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of num modulo a monic divisor. Both lowest degree first.
Poly poly_mod(Poly num, const Poly& monic, std::uint32_t p) {
  const std::size_t deg = monic.size() - 1;
  while (num.size() > deg) {
    const std::uint64_t lead = num.back();
    if (lead != 0) {
      const std::size_t shift = num.size() - 1 - deg;
      for (std::size_t i = 0; i < deg; ++i) {
        num[shift + i] = static_cast<std::uint32_t>(
            (num[shift + i] + (p - lead) * monic[i]) % p);
      }
    }
    num.pop_back();
  }
  return num;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
  const std::size_t deg = monic.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  const Poly f(monic.begin(), monic.end());
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
      Poly g = decode(static_cast<std::uint32_t>(enc), p, static_cast<std::uint32_t>(d));
      g.push_back(1);
      const Poly r = poly_mod(f, g, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

Field make_field(std::uint32_t p, std::uint32_t s) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (s < 1) throw Error(ErrorCode::DegreeOutOfRange, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < s; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw Error(ErrorCode::DegreeOutOfRange,
                  "field order " + std::to_string(p) + "^" + std::to_string(s) + " too large");
    }
  }
  if (s == 1) return Field(p, 1, {0, 1});
  for (std::uint32_t enc = 0; enc < q; ++enc) {
    Poly f = decode(enc, p, s);
    f.push_back(1);
    if (is_irreducible(f, p)) return Field(p, s, std::move(f));
  }
  // Unreachable: irreducibles exist in every degree.
  throw Error(ErrorCode::DegreeOutOfRange, "no irreducible polynomial found");
}

Field make_field_of_order(std::uint32_t q) {
  if (q < 2) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t s = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++s;
  }
  if (rest != 1) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  return make_field(p, s);
}

Field::Field(std::uint32_t p, std::uint32_t s, std::vector<std::uint32_t> modulus)
    : p_(p), s_(s), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < s; ++i) q_ *= p;
  if (q_ > kTableCap) return;
  add_table_.resize(q_ * q_);
  mul_table_.resize(q_ * q_);
  neg_table_.resize(q_);
  inv_table_.resize(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    neg_table_[a] = static_cast<std::uint8_t>(neg_slow(a));
    for (std::uint32_t b = 0; b < q_; ++b) {
      add_table_[a * q_ + b] = static_cast<std::uint8_t>(add_slow(a, b));
      mul_table_[a * q_ + b] = static_cast<std::uint8_t>(mul_slow(a, b));
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a) inv_table_[a] = static_cast<std::uint8_t>(inv_slow(a));
  tabled_ = true;
}

void Field::check(FieldElement a) const {
  if (a.code >= q_) {
    throw Error(ErrorCode::ElementOutOfRange,
                "element " + std::to_string(a.code) + " not in GF(" + std::to_string(q_) + ")");
  }
}

FieldElement Field::element(std::uint32_t code) const {
  check({code});
  return {code};
}

std::uint32_t Field::add_slow(std::uint32_t a, std::uint32_t b) const {
  if (s_ == 1) return (a + b) % p_;
  std::uint32_t code = 0, scale = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    code += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return code;
}

std::uint32_t Field::neg_slow(std::uint32_t a) const {
  if (s_ == 1) return (p_ - a) % p_;
  std::uint32_t code = 0, scale = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    code += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return code;
}

std::uint32_t Field::mul_slow(std::uint32_t a, std::uint32_t b) const {
  if (s_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  const Poly x = decode(a, p_, s_);
  const Poly y = decode(b, p_, s_);
  Poly prod(2 * s_ - 1, 0);
  for (std::uint32_t i = 0; i < s_; ++i) {
    for (std::uint32_t j = 0; j < s_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_);
    }
  }
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(s_, 0);
  return encode(r, p_);
}

std::uint32_t Field::inv_slow(std::uint32_t a) const {
  if (s_ == 1) return inverse_mod_p(a, p_);
  // a^(q-2) by square and multiply.
  std::uint32_t result = 1, base = a;
  for (std::uint32_t e = q_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = mul_slow(result, base);
    base = mul_slow(base, base);
  }
  return result;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (tabled_) return {add_table_[a.code * q_ + b.code]};
  return {add_slow(a.code, b.code)};
}

FieldElement Field::neg(FieldElement a) const {
  check(a);
  if (tabled_) return {neg_table_[a.code]};
  return {neg_slow(a.code)};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (tabled_) return {mul_table_[a.code * q_ + b.code]};
  return {mul_slow(a.code, b.code)};
}

FieldElement Field::inv(FieldElement a) const {
  check(a);
  if (a.code == 0) throw Error(ErrorCode::ZeroInverse, "zero has no multiplicative inverse");
  if (tabled_) return {inv_table_[a.code]};
  return {inv_slow(a.code)};
}

}  // namespace egqldpc
