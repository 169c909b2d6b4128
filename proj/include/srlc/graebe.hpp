#pragma once

// Explicit matrices for the Z^n-graded k[Δ]-module H^l_m(k[Δ]).
//
// The degree -r piece is ⊕ H^{l-1}(Δ, cost s(U)) over exponent vectors
// U ∈ N^n with |U| = r and s(U) ∈ Δ. Multiplication by x_t sends the -U
// component to the -(U - e_t) component: zero when t ∉ s(U), the identity
// when t stays in the support, and ι* when t drops out of it. Linear forms θ
// act as the corresponding weighted sums of these blocks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "srlc/binomial.hpp"
#include "srlc/cohomology.hpp"
#include "srlc/generic_forms.hpp"
#include "srlc/hochster.hpp"

namespace srlc {

using ExponentVector = std::vector<int>;

inline Face support(const ExponentVector& u) {
  std::uint64_t mask = 0;
  for (std::size_t t = 0; t < u.size(); ++t)
    if (u[t] != 0) mask |= Face::bit(static_cast<int>(t) + 1);
  return Face::from_mask(mask);
}

inline int total_degree(const ExponentVector& u) {
  int s = 0;
  for (int x : u) s += x;
  return s;
}

namespace detail {

// All ways to write `total` as an ordered sum of `parts` positive integers.
inline void compositions(int total, int parts, std::vector<int>& prefix,
                         std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  for (int first = 1; first <= total - (parts - 1); ++first) {
    prefix.push_back(first);
    compositions(total - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Exponent vectors (length n) with |U| = r and support exactly `face`.
inline std::vector<ExponentVector> exponents_with_support(int n, const Face& face, int r) {
  std::vector<ExponentVector> out;
  if (face.empty()) {
    if (r == 0) out.emplace_back(n, 0);
    return out;
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> prefix;
  detail::compositions(r, face.size(), prefix, comps);
  for (const auto& c : comps) {
    ExponentVector u(n, 0);
    for (int k = 0; k < face.size(); ++k) u[face.vertices()[k] - 1] = c[k];
    out.push_back(std::move(u));
  }
  return out;
}

/// W_{r,F}: exponents on F = {f_1 < ... < f_j} (listed in that order) with
/// |U| = r, every entry positive and the first m entries equal to 1.
inline std::vector<std::vector<int>> enumerate_w(const Face& face, int m, int r) {
  if (face.size() <= m)
    throw std::invalid_argument("enumerate_w needs |F| > m (|F|=" + std::to_string(face.size()) +
                                ", m=" + std::to_string(m) + ")");
  std::vector<std::vector<int>> tails;
  std::vector<int> prefix;
  const int rest = r - m;
  if (rest >= face.size() - m) detail::compositions(rest, face.size() - m, prefix, tails);
  std::vector<std::vector<int>> out;
  for (auto& t : tails) {
    std::vector<int> u(static_cast<std::size_t>(m), 1);
    u.insert(u.end(), t.begin(), t.end());
    out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The degree -r piece of H^l_m(k[Δ]) with its block decomposition.
template <Field F>
struct GradedPiece {
  int l = 0;
  int r = 0;
  std::vector<ExponentVector> index;             // lexicographic
  std::vector<Face> supports;                    // s(U) per index entry
  std::vector<std::size_t> block_dims;           // dim H^{l-1}(Δ, cost s(U))
  std::vector<std::size_t> offsets;              // coordinate offset per block
  std::map<ExponentVector, std::size_t> position;
  std::size_t total_dim = 0;
};

struct KernelReport {
  int l = 0;
  int m = 0;
  int i = 0;
  std::size_t brute_dim = 0;
  std::size_t closed_form_dim = 0;
  /// θ_{m+1} maps ker^l_{m,i} onto ker^l_{m,i-1}; only defined for i >= m + 1.
  std::optional<bool> surjective_onto_previous;
  std::string field;
  std::string matrix_provenance;

  bool consistent() const {
    return brute_dim == closed_form_dim && surjective_onto_previous.value_or(true);
  }
};

/// Local cohomology of k[Δ] as an explicit graded module over one field.
/// Pieces and θ-matrices are memoized.
template <Field F>
class LocalCohomologyModule {
 public:
  explicit LocalCohomologyModule(SimplicialComplex complex, F field = F{})
      : cache_(std::move(complex), std::move(field)) {}

  const SimplicialComplex& complex() const { return cache_.complex(); }
  const F& field() const { return cache_.field(); }
  CohomologyCache<F>& cohomology() { return cache_; }
  int krull_dim() const { return srlc::krull_dim(complex()); }

  const GradedPiece<F>& piece(int l, int r) {
    if (r < 0) throw std::invalid_argument("graded piece needs r >= 0");
    auto key = std::make_pair(l, r);
    if (auto it = pieces_.find(key); it != pieces_.end()) return *it->second;
    auto piece = std::make_unique<GradedPiece<F>>();
    piece->l = l;
    piece->r = r;
    const int n = complex().vertex_count();
    for (const auto& face : complex().all_faces()) {
      if (face.size() > r) continue;
      for (auto& u : exponents_with_support(n, face, r)) piece->index.push_back(std::move(u));
    }
    std::sort(piece->index.begin(), piece->index.end());
    for (std::size_t k = 0; k < piece->index.size(); ++k) {
      const auto& u = piece->index[k];
      piece->supports.push_back(support(u));
      piece->block_dims.push_back(cache_.dim(piece->supports.back(), l - 1));
      piece->offsets.push_back(piece->total_dim);
      piece->total_dim += piece->block_dims.back();
      piece->position.emplace(u, k);
    }
    return *pieces_.emplace(key, std::move(piece)).first->second;
  }

  /// (·θ_p)*: piece(l, i+1) → piece(l, i). Block (T, T + e_t) is
  /// a_{t,p} · ι*[H^{l-1}(Δ, cost s(T+e_t)) → H^{l-1}(Δ, cost s(T))].
  Matrix<F> theta_action(int l, int i, int p, const GenericMatrix<F>& a,
                         bool require_certified = true) {
    if (require_certified && !a.certified)
      throw CertificationError("theta action needs a certified coefficient matrix");
    if (p < 1 || p > a.d)
      throw std::invalid_argument("form index " + std::to_string(p) + " outside 1.." +
                                  std::to_string(a.d));
    if (a.n != complex().vertex_count())
      throw std::invalid_argument("coefficient matrix has the wrong number of rows");
    if (i < 0) throw std::invalid_argument("theta action needs i >= 0");
    const auto& dom = piece(l, i + 1);
    const auto& cod = piece(l, i);
    const F& f = field();
    Matrix<F> out(f, cod.total_dim, dom.total_dim);
    for (std::size_t ti = 0; ti < cod.index.size(); ++ti) {
      if (cod.block_dims[ti] == 0) continue;
      ExponentVector u = cod.index[ti];
      for (int t = 1; t <= a.n; ++t) {
        ++u[t - 1];
        auto it = dom.position.find(u);
        --u[t - 1];
        if (it == dom.position.end()) continue;
        const std::size_t ui = it->second;
        if (dom.block_dims[ui] == 0) continue;
        const auto& coeff = a.coefficient(t, p);
        if (f.is_zero(coeff)) continue;
        const auto& phi = cache_.induced_map(dom.supports[ui], cod.supports[ti], l - 1);
        out.add_block(cod.offsets[ti], dom.offsets[ui], phi.scaled(coeff));
      }
    }
    return out;
  }

  /// Σ_F C(i - m, |F| - m - 1) · dim H^{l-1}(Δ, cost F).
  std::size_t kernel_closed_form(int l, int m, int i) {
    auto by_size = pair_dims_by_face_size(cache_, l - 1);
    std::size_t total = 0;
    for (std::size_t k = 0; k < by_size.size(); ++k)
      total += binomial(i - m, static_cast<std::int64_t>(k) - m) * by_size[k];
    return total;
  }

  /// Basis (columns) of ker^l_{m,i} inside piece(l, i+1).
  Matrix<F> kernel_intersection(int l, int m, int i, const GenericMatrix<F>& a,
                                bool require_certified = true) {
    const auto& dom = piece(l, i + 1);
    if (m == 0) return Matrix<F>::identity(field(), dom.total_dim);
    std::vector<Matrix<F>> blocks;
    for (int p = 1; p <= m; ++p) blocks.push_back(theta_action(l, i, p, a, require_certified));
    return kernel_basis(vstack(field(), blocks, dom.total_dim));
  }

  KernelReport kernel_dims(int l, int m, int i, const GenericMatrix<F>& a,
                           bool require_certified = true) {
    if (require_certified && !a.certified)
      throw CertificationError("kernel dimensions need a certified coefficient matrix");
    if (m < 0 || m > a.d)
      throw std::invalid_argument("m=" + std::to_string(m) + " outside 0.." + std::to_string(a.d));
    if (i < m)
      throw std::invalid_argument("kernel dimensions need i >= m (i=" + std::to_string(i) +
                                  ", m=" + std::to_string(m) + ")");
    KernelReport report;
    report.l = l;
    report.m = m;
    report.i = i;
    report.field = field().name();
    report.matrix_provenance = a.provenance();
    auto basis = kernel_intersection(l, m, i, a, require_certified);
    report.brute_dim = basis.cols();
    report.closed_form_dim = kernel_closed_form(l, m, i);
    if (i >= m + 1) {
      const std::size_t target = kernel_intersection(l, m, i - 1, a, require_certified).cols();
      if (m + 1 <= a.d) {
        auto image = theta_action(l, i, m + 1, a, require_certified) * basis;
        report.surjective_onto_previous = rank(std::move(image)) == target;
      } else {
        // No θ_{m+1} among the forms; only a map onto zero is known to be onto.
        report.surjective_onto_previous = target == 0;
      }
    }
    return report;
  }

 private:
  CohomologyCache<F> cache_;
  std::map<std::pair<int, int>, std::unique_ptr<GradedPiece<F>>> pieces_;
};

template <Field F>
GradedPiece<F> graded_piece(const SimplicialComplex& complex, int l, int r, const F& field = F{}) {
  LocalCohomologyModule<F> module(complex, field);
  return module.piece(l, r);
}

}  // namespace srlc
