#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "leray/error.hpp"

namespace leray {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Z/p for a prime p < 2^31.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
      throw InputError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint32_t modulus() const noexcept { return p_; }

  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type zero() const noexcept { return 0; }
  bool is_zero(value_type a) const noexcept { return a == 0; }
  value_type add(value_type a, value_type b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type sub(value_type a, value_type b) const noexcept { return add(a, neg(b)); }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw InternalError("inverse of zero in GF(" + std::to_string(p_) + ")");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }

 private:
  std::uint32_t p_;
};

// The rationals, with arbitrary precision.
class RationalField {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  value_type from_int(std::int64_t v) const { return value_type(v); }
  value_type zero() const { return value_type(0); }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw InternalError("inverse of zero in Q");
    return 1 / a;
  }
};

/**
 * Runtime choice of coefficient field: GF(p) or Q.
 *
 * Text names are "gf<p>" (e.g. "gf2", "gf3") and "q".
 */
class FieldSpec {
 public:
  static FieldSpec prime(std::uint32_t p) {
    PrimeField check(p);
    FieldSpec f;
    f.modulus_ = check.modulus();
    return f;
  }
  static FieldSpec rational() { return FieldSpec{}; }
  static FieldSpec gf2() { return prime(2); }
  static FieldSpec gf3() { return prime(3); }

  static FieldSpec parse(const std::string& name) {
    if (name == "q" || name == "Q" || name == "rational") return rational();
    if (name.size() > 2 && (name.rfind("gf", 0) == 0 || name.rfind("GF", 0) == 0)) {
      const std::string digits = name.substr(2);
      if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 10) {
        const auto p = std::stoull(digits);
        if (p < (1ull << 31)) return prime(static_cast<std::uint32_t>(p));
      }
    }
    throw InputError("unknown field '" + name + "' (expected gf<p> or q)");
  }

  bool is_rational() const noexcept { return !modulus_; }
  std::optional<std::uint32_t> modulus() const noexcept { return modulus_; }

  std::string name() const { return modulus_ ? "gf" + std::to_string(*modulus_) : "q"; }

  // Calls f(PrimeField) or f(RationalField).
  template <class F>
  decltype(auto) visit(F&& f) const {
    if (modulus_) return f(PrimeField(*modulus_));
    return f(RationalField{});
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec() = default;
  std::optional<std::uint32_t> modulus_;
};

}  // namespace leray
