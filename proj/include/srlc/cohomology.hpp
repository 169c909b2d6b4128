#pragma once

// Cohomology of pairs (Δ, cost F) and the maps between them induced by
// inclusion of contrastars.
//
// C^k(Δ, cost F) is realized as the cochains supported on k-faces containing
// F. That is a subcomplex of the augmented cochain complex of Δ, and for
// τ ⊆ σ the cochains of (Δ, cost σ) sit inside those of (Δ, cost τ), so the
// induced map ι* is a literal inclusion followed by reduction modulo
// coboundaries. With F = ∅ this is reduced cohomology of Δ.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "srlc/complex.hpp"
#include "srlc/matrix.hpp"

namespace srlc {

/// Coboundary δ: C^i(Δ, cost F) → C^{i+1}(Δ, cost F), rows indexed by the
/// (i+1)-faces containing F and columns by the i-faces containing F.
template <Field F>
Matrix<F> pair_coboundary(const SimplicialComplex& complex, const Face& face, int degree,
                          const F& field = F{}) {
  if (!complex.contains(face))
    throw std::invalid_argument("face " + face.to_string() + " is not in the complex");
  auto domain = complex.faces_containing(face, degree);
  auto codomain = complex.faces_containing(face, degree + 1);
  std::unordered_map<std::uint64_t, std::size_t> column_of;
  for (std::size_t c = 0; c < domain.size(); ++c) column_of.emplace(domain[c].mask(), c);

  Matrix<F> delta(field, codomain.size(), domain.size());
  for (std::size_t r = 0; r < codomain.size(); ++r) {
    const auto& verts = codomain[r].vertices();
    for (std::size_t j = 0; j < verts.size(); ++j) {
      auto it = column_of.find(codomain[r].mask() & ~Face::bit(verts[j]));
      if (it == column_of.end()) continue;
      delta(r, it->second) = field.from_int(j % 2 == 0 ? 1 : -1);
    }
  }
  return delta;
}

/// A basis of H^i(Δ, cost F) together with the data needed to write any
/// cocycle as a combination of the basis plus a coboundary.
template <Field F>
class CohomologyBasis {
 public:
  using value_type = typename F::value_type;

  CohomologyBasis(const SimplicialComplex& complex, Face face, int degree, const F& field = F{})
      : face_(std::move(face)), degree_(degree), representatives_(field), decomposer_(field),
        cocycle_test_(field) {
    if (!complex.contains(face_))
      throw std::invalid_argument("face " + face_.to_string() + " is not in the complex");
    cochain_faces_ = complex.faces_containing(face_, degree_);
    const std::size_t dim_c = cochain_faces_.size();

    auto delta_out = pair_coboundary(complex, face_, degree_, field);
    auto delta_in = pair_coboundary(complex, face_, degree_ - 1, field);
    auto cocycles = kernel_basis(delta_out);

    // Pivots of [B | Z] that land in the Z block are cocycles independent of
    // the coboundaries and of each other.
    auto [reduced, pivots] = rref(hstack(delta_in, cocycles));
    std::vector<std::vector<value_type>> reps;
    std::vector<std::vector<value_type>> boundary_cols;
    for (auto p : pivots) {
      if (p < delta_in.cols())
        boundary_cols.push_back(delta_in.column(p));
      else
        reps.push_back(cocycles.column(p - delta_in.cols()));
    }
    representatives_ = Matrix<F>::from_columns(field, dim_c, reps);

    auto all_cols = reps;
    all_cols.insert(all_cols.end(), boundary_cols.begin(), boundary_cols.end());
    auto full = left_inverse(Matrix<F>::from_columns(field, dim_c, all_cols));
    std::vector<std::size_t> head(reps.size());
    for (std::size_t k = 0; k < head.size(); ++k) head[k] = k;
    std::vector<std::size_t> every(dim_c);
    for (std::size_t k = 0; k < dim_c; ++k) every[k] = k;
    decomposer_ = full.submatrix(head, every);
    cocycle_test_ = std::move(delta_out);
  }

  const Face& face() const { return face_; }
  int degree() const { return degree_; }
  std::size_t dim() const { return representatives_.cols(); }
  /// The faces indexing cochain coordinates, lexicographic.
  const std::vector<Face>& cochain_faces() const { return cochain_faces_; }
  /// Columns are cocycle representatives of a basis.
  const Matrix<F>& representatives() const { return representatives_; }

  bool is_cocycle(const std::vector<value_type>& cochain) const {
    for (const auto& x : cocycle_test_.apply(cochain))
      if (!cocycle_test_.field().is_zero(x)) return false;
    return true;
  }

  /// Coordinates of the class of a cocycle in this basis.
  std::vector<value_type> decompose(const std::vector<value_type>& cocycle) const {
    if (cocycle.size() != cochain_faces_.size())
      throw std::invalid_argument("cochain has wrong length");
    if (!is_cocycle(cocycle)) throw std::invalid_argument("decompose called on a non-cocycle");
    return decomposer_.apply(cocycle);
  }

 private:
  Face face_;
  int degree_;
  std::vector<Face> cochain_faces_;
  Matrix<F> representatives_;
  Matrix<F> decomposer_;
  Matrix<F> cocycle_test_;
};

/// Memo of cohomology bases of one complex over one field, keyed by
/// (face, degree). Lookups and insertions are serialized by a mutex; returned
/// references stay valid for the cache's lifetime.
template <Field F>
class CohomologyCache {
 public:
  explicit CohomologyCache(SimplicialComplex complex, F field = F{})
      : complex_(std::move(complex)), field_(std::move(field)) {}

  CohomologyCache(const CohomologyCache&) = delete;
  CohomologyCache& operator=(const CohomologyCache&) = delete;

  const SimplicialComplex& complex() const { return complex_; }
  const F& field() const { return field_; }

  const CohomologyBasis<F>& basis(const Face& face, int degree) {
    const auto key = std::make_pair(face.mask(), degree);
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return *it->second;
    }
    auto fresh = std::make_unique<CohomologyBasis<F>>(complex_, face, degree, field_);
    std::lock_guard lock(mutex_);
    auto [it, inserted] = memo_.try_emplace(key, std::move(fresh));
    return *it->second;
  }

  std::size_t dim(const Face& face, int degree) { return basis(face, degree).dim(); }

  /// ι*: H^i(Δ, cost σ) → H^i(Δ, cost τ) for τ ⊆ σ, as a
  /// dim(τ-basis) × dim(σ-basis) matrix.
  const Matrix<F>& induced_map(const Face& sigma, const Face& tau, int degree) {
    if (!tau.is_subset_of(sigma))
      throw std::invalid_argument("induced map needs " + tau.to_string() + " ⊆ " + sigma.to_string());
    const auto key = std::make_tuple(sigma.mask(), tau.mask(), degree);
    {
      std::lock_guard lock(mutex_);
      if (auto it = maps_.find(key); it != maps_.end()) return *it->second;
    }
    auto fresh = std::make_unique<Matrix<F>>(compute_induced_map(sigma, tau, degree));
    std::lock_guard lock(mutex_);
    auto [it, inserted] = maps_.try_emplace(key, std::move(fresh));
    return *it->second;
  }

 private:
  Matrix<F> compute_induced_map(const Face& sigma, const Face& tau, int degree) {
    const auto& src = basis(sigma, degree);
    const auto& dst = basis(tau, degree);
    std::unordered_map<std::uint64_t, std::size_t> row_of;
    for (std::size_t r = 0; r < dst.cochain_faces().size(); ++r)
      row_of.emplace(dst.cochain_faces()[r].mask(), r);

    Matrix<F> out(field_, dst.dim(), src.dim());
    for (std::size_t j = 0; j < src.dim(); ++j) {
      std::vector<typename F::value_type> embedded(dst.cochain_faces().size(), field_.zero());
      for (std::size_t k = 0; k < src.cochain_faces().size(); ++k)
        embedded[row_of.at(src.cochain_faces()[k].mask())] = src.representatives()(k, j);
      auto coeffs = dst.decompose(embedded);
      for (std::size_t i = 0; i < coeffs.size(); ++i) out(i, j) = coeffs[i];
    }
    return out;
  }

  SimplicialComplex complex_;
  F field_;
  std::mutex mutex_;
  std::map<std::pair<std::uint64_t, int>, std::unique_ptr<CohomologyBasis<F>>> memo_;
  std::map<std::tuple<std::uint64_t, std::uint64_t, int>, std::unique_ptr<Matrix<F>>> maps_;
};

template <Field F>
CohomologyBasis<F> cohomology_basis(const SimplicialComplex& complex, const Face& face, int degree,
                                    const F& field = F{}) {
  return CohomologyBasis<F>(complex, face, degree, field);
}

template <Field F>
Matrix<F> induced_map(const SimplicialComplex& complex, const Face& sigma, const Face& tau,
                      int degree, const F& field = F{}) {
  if (!complex.contains(sigma) || !complex.contains(tau))
    throw std::invalid_argument("induced map between faces not in the complex");
  CohomologyCache<F> cache(complex, field);
  return cache.induced_map(sigma, tau, degree);
}

/// dim H̃^i(Δ; k).
template <Field F>
std::size_t reduced_cohomology_dim(const SimplicialComplex& complex, int degree,
                                   const F& field = F{}) {
  if (complex.is_void()) return 0;
  return CohomologyBasis<F>(complex, Face{}, degree, field).dim();
}

/// dim H^i(Δ, cost F) == dim H̃^{i-|F|}(lk F; k).
template <Field F>
bool link_iso_check(const SimplicialComplex& complex, const Face& face, int degree,
                    const F& field = F{}) {
  auto pair_dim = CohomologyBasis<F>(complex, face, degree, field).dim();
  auto link_dim = reduced_cohomology_dim(complex.link(face), degree - face.size(), field);
  return pair_dim == link_dim;
}

}  // namespace srlc
