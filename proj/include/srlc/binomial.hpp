#pragma once

// Nonnegative integer sequences of the form
//
//   value(i) = Σ_k c_k · C(i - offset, k)
//
// which is how every graded dimension in this library depends on the degree.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace srlc {

/// C(a, b), zero when b < 0, b > a or a < 0.
inline std::uint64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  std::uint64_t r = 1;
  for (std::int64_t k = 1; k <= b; ++k) r = r * static_cast<std::uint64_t>(a - b + k) / k;
  return r;
}

struct BinomialSeries {
  std::int64_t offset = 0;
  std::vector<std::uint64_t> coeffs;

  std::uint64_t at(std::int64_t i) const {
    std::uint64_t v = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      v += coeffs[k] * binomial(i - offset, static_cast<std::int64_t>(k));
    return v;
  }

  bool is_zero() const {
    for (auto c : coeffs)
      if (c != 0) return false;
    return true;
  }

  /// Coefficients of value(i) as a polynomial in i, lowest degree first.
  /// Valid for i >= offset.
  std::vector<mpq_class> monomial_coeffs() const {
    std::vector<mpq_class> poly(coeffs.empty() ? 1 : coeffs.size(), mpq_class(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      // C(i - offset, k) = Π_{j<k} (i - offset - j) / k!
      std::vector<mpq_class> term{mpq_class(1)};
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<mpq_class> next(term.size() + 1, mpq_class(0));
        mpq_class shift = -(mpq_class(offset) + mpq_class(static_cast<long>(j)));
        for (std::size_t e = 0; e < term.size(); ++e) {
          next[e + 1] += term[e];
          next[e] += term[e] * shift;
        }
        term = std::move(next);
      }
      mpz_class fact = 1;
      for (std::size_t j = 2; j <= k; ++j) fact *= static_cast<unsigned long>(j);
      mpz_class ck;
      ck = static_cast<unsigned long>(coeffs[k]);
      for (std::size_t e = 0; e < term.size(); ++e) {
        mpq_class add = term[e] * mpq_class(ck) / mpq_class(fact);
        add.canonicalize();
        poly[e] += add;
      }
    }
    for (auto& c : poly) c.canonicalize();
    while (poly.size() > 1 && sgn(poly.back()) == 0) poly.pop_back();
    return poly;
  }

  /// Renders the polynomial in `var`, e.g. "3 + 3i" or "1/2i^2 - 1/2i".
  std::string polynomial_string(const std::string& var = "i") const {
    auto poly = monomial_coeffs();
    std::string out;
    for (std::size_t e = 0; e < poly.size(); ++e) {
      const mpq_class& c = poly[e];
      if (sgn(c) == 0) continue;
      mpq_class mag = abs(c);
      if (out.empty()) {
        if (sgn(c) < 0) out += "-";
      } else {
        out += sgn(c) < 0 ? " - " : " + ";
      }
      bool unit = mag == 1;
      if (e == 0 || !unit) out += mag.get_str();
      if (e >= 1) out += var;
      if (e >= 2) out += "^" + std::to_string(e);
    }
    return out.empty() ? "0" : out;
  }
};

}  // namespace srlc
