#pragma once

// Exact scalar fields: the rationals, prime fields F_p, and GF(2^16).
//
// Every field is a small value type exposing the same arithmetic surface so
// the linear algebra in matrix.hpp can be written once as a template.

#include <array>
#include <charconv>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace srlc {

template <typename F>
concept Field = requires(const F f, const typename F::value_type& a,
                         const typename F::value_type& b, std::int64_t k) {
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(k) } -> std::same_as<typename F::value_type>;
  { f.add(a, b) } -> std::same_as<typename F::value_type>;
  { f.sub(a, b) } -> std::same_as<typename F::value_type>;
  { f.mul(a, b) } -> std::same_as<typename F::value_type>;
  { f.neg(a) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, b) } -> std::same_as<bool>;
  { f.characteristic() } -> std::same_as<std::uint32_t>;
  { f.name() } -> std::convertible_to<std::string>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
};

class Rationals {
 public:
  using value_type = mpq_class;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(std::int64_t k) const {
    mpz_class z;
    // mpz_class has no int64 constructor on every platform.
    z = static_cast<long>(k);
    return value_type(z);
  }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero");
    return value_type(1) / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  std::string to_string(const value_type& a) const {
    value_type c = a;
    c.canonicalize();
    return c.get_str();
  }
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

/// Integers modulo a prime p < 2^31, stored as canonical residues.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31))
      throw std::invalid_argument("prime field modulus must be a prime below 2^31, got " +
                                  std::to_string(p));
  }

  std::uint32_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t k) const {
    std::int64_t r = k % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }
  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} * b) % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return from_int(t);
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "F_" + std::to_string(p_); }
  std::string to_string(value_type a) const { return std::to_string(a); }

 private:
  std::uint32_t p_;
};

/// GF(2^16) = F_2[x]/(x^16 + x^12 + x^3 + x + 1), elements as bit patterns.
///
/// Used whenever characteristic 2 needs more room than F_2 itself offers,
/// e.g. for sampling linear forms whose coefficient minors are all nonzero.
/// Cohomology dimensions over an extension field equal those over F_2.
class BinaryField16 {
 public:
  using value_type = std::uint16_t;
  static constexpr std::uint32_t kModulusPoly = 0x1100B;
  static constexpr std::uint32_t kOrder = 1u << 16;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t k) const { return static_cast<value_type>(k & 1); }
  value_type add(value_type a, value_type b) const { return a ^ b; }
  value_type sub(value_type a, value_type b) const { return a ^ b; }
  value_type neg(value_type a) const { return a; }
  value_type mul(value_type a, value_type b) const {
    if (a == 0 || b == 0) return 0;
    const auto& t = tables();
    return t.exp[t.log[a] + t.log[b]];
  }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    const auto& t = tables();
    return t.exp[(kOrder - 1 - t.log[a]) % (kOrder - 1)];
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::uint32_t characteristic() const { return 2; }
  std::string name() const { return "GF(2^16)"; }
  std::string to_string(value_type a) const { return "0x" + hex(a); }

  /// Multiplicative order of the class of x; 2^16 - 1 iff the modulus is primitive.
  static std::uint32_t generator_order() { return tables().generator_order; }

 private:
  struct Tables {
    std::array<value_type, 2 * kOrder> exp{};
    std::array<std::uint32_t, kOrder> log{};
    std::uint32_t generator_order = 0;
  };

  static std::string hex(value_type a) {
    char buf[8];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), a, 16);
    return std::string(buf, end);
  }

  static const Tables& tables() {
    static const Tables t = [] {
      Tables t;
      std::uint32_t x = 1;
      std::uint32_t k = 0;
      do {
        t.exp[k] = static_cast<value_type>(x);
        t.log[x] = k;
        ++k;
        x <<= 1;
        if (x & kOrder) x ^= kModulusPoly;
      } while (x != 1 && k < kOrder);
      t.generator_order = k;
      if (k != kOrder - 1) throw std::logic_error("GF(2^16) modulus is not primitive");
      for (std::uint32_t j = kOrder - 1; j < 2 * kOrder; ++j) t.exp[j] = t.exp[j - (kOrder - 1)];
      return t;
    }();
    return t;
  }
};

static_assert(Field<Rationals>);
static_assert(Field<PrimeField>);
static_assert(Field<BinaryField16>);

/// User-facing field selection: the rationals or F_p.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p) {
    PrimeField check(p);
    (void)check;
    return {Kind::PrimeField, p};
  }

  /// Parses "q" or "fp:<p>".
  static FieldSpec parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.starts_with("fp:")) {
      std::string_view digits = text.substr(3);
      std::uint64_t p = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
        throw std::invalid_argument("bad field modulus in '" + std::string(text) + "'");
      if (p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("field modulus " + std::string(digits) + " is not a prime below 2^31");
      return {Kind::PrimeField, static_cast<std::uint32_t>(p)};
    }
    throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected q or fp:<p>)");
  }

  std::string to_string() const {
    return kind == Kind::Rationals ? std::string("q") : "fp:" + std::to_string(p);
  }
  std::uint32_t characteristic() const { return kind == Kind::Rationals ? 0 : p; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Calls fn with the concrete field object selected by spec.
template <typename Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::Rationals) return fn(Rationals{});
  return fn(PrimeField(spec.p));
}

}  // namespace srlc
