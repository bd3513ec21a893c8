#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace egqldpc {

// An element of GF(p^s), identified by the integer code sum c_i * p^i of its
// coefficient vector. Code 0 is zero, code 1 is one.
struct FieldElement {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

// GF(p^s) with a fixed modulus. Immutable after construction, so a Field may
// be shared freely between threads.
class Field {
 public:
  // Orders up to this size get precomputed add/mul/inverse tables.
  static constexpr std::uint32_t kTableCap = 64;

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t s() const noexcept { return s_; }
  std::uint32_t q() const noexcept { return q_; }

  // Coefficients c_0..c_s of the monic modulus, lowest degree first.
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }

  bool contains(FieldElement a) const noexcept { return a.code < q_; }
  FieldElement element(std::uint32_t code) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.s_ == b.s_ && a.modulus_ == b.modulus_;
  }

 private:
  friend Field make_field(std::uint32_t p, std::uint32_t s);

  Field(std::uint32_t p, std::uint32_t s, std::vector<std::uint32_t> modulus);

  void check(FieldElement a) const;
  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_slow(std::uint32_t a) const;
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_slow(std::uint32_t a) const;

  std::uint32_t p_;
  std::uint32_t s_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  bool tabled_ = false;
  std::vector<std::uint8_t> add_table_;
  std::vector<std::uint8_t> mul_table_;
  std::vector<std::uint8_t> neg_table_;
  std::vector<std::uint8_t> inv_table_;
};

bool is_prime(std::uint64_t n);

// Builds GF(p^s). The modulus is the monic irreducible polynomial of degree s
// whose lower coefficients have the smallest encoding sum c_i * p^i. For s = 1
// arithmetic is plain residue arithmetic and the modulus is x.
Field make_field(std::uint32_t p, std::uint32_t s);

// GF(q) for a prime power q. Throws NotPrimePower otherwise.
Field make_field_of_order(std::uint32_t q);

// Monic irreducibility test over GF(p) by trial division with every monic
// polynomial of degree 1..deg/2. Coefficients lowest degree first.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

}  // namespace egqldpc
