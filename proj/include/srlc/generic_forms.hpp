#pragma once

// Coefficient matrices A = (a_{t,p}) of linear forms θ_p = Σ_t a_{t,p} x_t,
// and the certificate that every square submatrix of A is nonsingular.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "srlc/matrix.hpp"

namespace srlc {

class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The certifier enumerates all minors; it refuses to run beyond this.
inline constexpr int kMaxCertifiableVertices = 16;

enum class MatrixStrategy { Vandermonde, Seeded };

template <Field F>
struct GenericMatrix {
  int n = 0;
  int d = 0;
  Matrix<F> entries;  // n × d, entries(t-1, p-1) = a_{t,p}
  MatrixStrategy strategy = MatrixStrategy::Seeded;
  std::uint64_t requested_seed = 0;
  std::uint64_t accepted_seed = 0;
  int attempts = 0;
  bool certified = false;

  const typename F::value_type& coefficient(int t, int p) const { return entries(t - 1, p - 1); }

  std::string provenance() const {
    if (strategy == MatrixStrategy::Vandermonde) return "vandermonde";
    return "seeded:" + std::to_string(accepted_seed);
  }
};

/// Row and column indices of a singular square submatrix, if any.
struct SingularMinor {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

namespace detail {

template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return true;
  while (true) {
    if (!visit(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Checks every k × k submatrix, k = 1..min(rows, cols). Returns the first
/// singular one in enumeration order, or nullopt when all are nonsingular.
template <Field F>
std::optional<SingularMinor> find_singular_minor(const Matrix<F>& a) {
  if (a.rows() > static_cast<std::size_t>(kMaxCertifiableVertices))
    throw CertificationError("refusing to certify a matrix with more than " +
                             std::to_string(kMaxCertifiableVertices) + " rows");
  const F& f = a.field();
  const std::size_t kmax = std::min(a.rows(), a.cols());
  std::optional<SingularMinor> found;
  for (std::size_t k = 1; k <= kmax && !found; ++k) {
    detail::for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
      return detail::for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
        if (f.is_zero(determinant(a.submatrix(rows, cols)))) {
          found = SingularMinor{rows, cols};
          return false;
        }
        return true;
      });
    });
  }
  return found;
}

template <Field F>
bool certify_generic(const Matrix<F>& a) {
  return !find_singular_minor(a).has_value();
}

/// Uniform-ish random element; for Q a positive integer below 2^16.
inline mpq_class sample_element(const Rationals&, std::mt19937_64& rng) {
  mpz_class z;
  z = static_cast<unsigned long>(rng() % 65535 + 1);
  return mpq_class(z);
}

inline PrimeField::value_type sample_element(const PrimeField& f, std::mt19937_64& rng) {
  const std::uint64_t p = f.modulus();
  const std::uint64_t limit = (std::mt19937_64::max() / p) * p;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return static_cast<PrimeField::value_type>(x % p);
}

inline BinaryField16::value_type sample_element(const BinaryField16&, std::mt19937_64& rng) {
  return static_cast<BinaryField16::value_type>(rng() & 0xFFFF);
}

/// a_{t,p} = t^{p-1}. Over Q all minors are positive (distinct positive
/// nodes); over a finite field the certificate decides.
template <Field F>
Matrix<F> vandermonde_entries(int n, int d, const F& field) {
  Matrix<F> a(field, n, d);
  for (int t = 1; t <= n; ++t) {
    auto power = field.one();
    for (int p = 1; p <= d; ++p) {
      a(t - 1, p - 1) = power;
      power = field.mul(power, field.from_int(t));
    }
  }
  return a;
}

template <Field F>
Matrix<F> seeded_entries(int n, int d, const F& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix<F> a(field, n, d);
  for (int t = 0; t < n; ++t)
    for (int p = 0; p < d; ++p) a(t, p) = sample_element(field, rng);
  return a;
}

/// Builds and certifies A. The seeded strategy resamples with seed + 1,
/// seed + 2, ... until a certified matrix appears or max_attempts is spent.
template <Field F>
GenericMatrix<F> generic_matrix(int n, int d, const F& field, MatrixStrategy strategy,
                                std::uint64_t seed = 0, int max_attempts = 64) {
  if (d < 1 || n < 1) throw std::invalid_argument("generic matrix needs n, d >= 1");
  if (d > n)
    throw std::invalid_argument("generic matrix needs d <= n (got n=" + std::to_string(n) +
                                ", d=" + std::to_string(d) + ")");
  if (n > kMaxCertifiableVertices)
    throw CertificationError("refusing to certify genericity for n > " +
                             std::to_string(kMaxCertifiableVertices));
  GenericMatrix<F> g{n, d, Matrix<F>(field), strategy, seed, seed, 0, false};
  if (strategy == MatrixStrategy::Vandermonde) {
    g.entries = vandermonde_entries(n, d, field);
    g.attempts = 1;
    g.certified = certify_generic(g.entries);
    if (!g.certified)
      throw CertificationError("Vandermonde matrix is not generic over " + field.name());
    return g;
  }
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    g.entries = seeded_entries(n, d, field, s);
    g.accepted_seed = s;
    g.attempts = attempt + 1;
    if (certify_generic(g.entries)) {
      g.certified = true;
      return g;
    }
  }
  throw CertificationError("no generic " + std::to_string(n) + "x" + std::to_string(d) +
                           " matrix over " + field.name() + " after " +
                           std::to_string(max_attempts) + " attempts (field too small?)");
}

/// Wraps arbitrary entries without certifying them.
template <Field F>
GenericMatrix<F> uncertified_matrix(Matrix<F> entries, std::uint64_t seed = 0) {
  GenericMatrix<F> g{static_cast<int>(entries.rows()), static_cast<int>(entries.cols()),
                     std::move(entries), MatrixStrategy::Seeded, seed, seed, 1, false};
  return g;
}

/// Calls fn(field, strategy) with the field used for brute-force kernel work:
/// Q with Vandermonde forms, F_p (p odd) with certified seeded forms, and for
/// characteristic 2 the extension GF(2^16), since F_2 has no generic forms.
template <typename Fn>
decltype(auto) with_kernel_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::Rationals) return fn(Rationals{}, MatrixStrategy::Vandermonde);
  if (spec.p == 2) return fn(BinaryField16{}, MatrixStrategy::Seeded);
  return fn(PrimeField(spec.p), MatrixStrategy::Seeded);
}

}  // namespace srlc
