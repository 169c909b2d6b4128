#pragma once

// Graded dimensions of H^l_m(k[Δ]) and the link conditions built on them:
// singularity dimension, Cohen-Macaulayness and Buchsbaumness.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "srlc/binomial.hpp"
#include "srlc/cohomology.hpp"
#include "srlc/complex.hpp"

namespace srlc {

/// Either -∞ or a face dimension >= -1. Never encoded as an integer.
class SingularityDimension {
 public:
  static SingularityDimension neg_infinity() { return SingularityDimension(); }
  static SingularityDimension finite(int value) {
    if (value < -1) throw std::invalid_argument("singularity dimension below -1");
    SingularityDimension s;
    s.finite_ = true;
    s.value_ = value;
    return s;
  }

  bool is_neg_infinity() const { return !finite_; }
  int value() const {
    if (!finite_) throw std::logic_error("singularity dimension is -inf");
    return value_;
  }
  /// -∞ is below every integer.
  bool less_than(int m) const { return !finite_ || value_ < m; }
  std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

  friend bool operator==(const SingularityDimension& a, const SingularityDimension& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }

 private:
  SingularityDimension() = default;
  bool finite_ = false;
  int value_ = 0;
};

struct SingularWitness {
  Face face;
  int degree;       // i with H̃^i(lk F) ≠ 0 and i < d - 1 - |F|
  std::size_t dim;  // dim H̃^i(lk F)
};

struct SingularityVerdict {
  SingularityDimension dimension = SingularityDimension::neg_infinity();
  std::vector<SingularWitness> witnesses;
  bool pure = true;
};

/// d = dim Δ + 1, the Krull dimension of k[Δ].
inline int krull_dim(const SimplicialComplex& complex) { return complex.dim() + 1; }

/// Scans every face F (including ∅) for nonzero H̃^i(lk F) with
/// i < d - 1 - |F|. Non-pure complexes are analyzed with d = dim Δ + 1 and
/// flagged.
template <Field F>
SingularityVerdict singularity_dimension(const SimplicialComplex& complex, const F& field = F{}) {
  if (complex.is_void()) throw std::invalid_argument("singularity dimension of the void complex");
  SingularityVerdict verdict;
  verdict.pure = complex.is_pure();
  const int d = krull_dim(complex);
  int worst = -2;
  for (const auto& face : complex.all_faces()) {
    auto lk = complex.link(face);
    for (int i = -1; i < d - 1 - face.size(); ++i) {
      auto dim = reduced_cohomology_dim(lk, i, field);
      if (dim == 0) continue;
      verdict.witnesses.push_back({face, i, dim});
      worst = std::max(worst, face.dim());
    }
  }
  if (worst >= -1) verdict.dimension = SingularityDimension::finite(worst);
  return verdict;
}

template <Field F>
bool is_cohen_macaulay(const SimplicialComplex& complex, const F& field = F{}) {
  return singularity_dimension(complex, field).dimension.is_neg_infinity();
}

/// Pure and singular at most at the empty face. Non-pure input is an error.
template <Field F>
bool is_buchsbaum(const SimplicialComplex& complex, const F& field = F{}) {
  if (!complex.is_pure()) throw std::invalid_argument("Buchsbaum test requires a pure complex");
  return singularity_dimension(complex, field).dimension.less_than(0);
}

/// The pair-cohomology dimension sum Σ_{|F| = k+1} dim H^degree(Δ, cost F),
/// as a vector indexed by k = |F| - 1 (so ∅ is excluded).
template <Field F>
std::vector<std::uint64_t> pair_dims_by_face_size(CohomologyCache<F>& cache, int degree) {
  const auto& complex = cache.complex();
  std::vector<std::uint64_t> by_size(static_cast<std::size_t>(std::max(complex.dim() + 1, 0)), 0);
  for (int k = 0; k <= complex.dim(); ++k)
    for (const auto& face : complex.faces(k)) by_size[k] += cache.dim(face, degree);
  return by_size;
}

/// Tail of H^l_m(k[Δ]) in degrees -(i+1): Σ_k c_k C(i, k), c_k summing
/// dim H^{l-1}(Δ, cost F) over faces with |F| = k + 1.
template <Field F>
BinomialSeries lc_tail(CohomologyCache<F>& cache, int l) {
  return BinomialSeries{0, pair_dims_by_face_size(cache, l - 1)};
}

template <Field F>
std::uint64_t lc_graded_dim(CohomologyCache<F>& cache, int l, std::int64_t j) {
  const int d = krull_dim(cache.complex());
  if (l < 0 || l > d)
    throw std::invalid_argument("cohomological degree " + std::to_string(l) + " outside 0.." +
                                std::to_string(d));
  if (j >= 1) return 0;
  if (j == 0) return cache.dim(Face{}, l - 1);
  return lc_tail(cache, l).at(-j - 1);
}

template <Field F>
std::uint64_t lc_graded_dim(const SimplicialComplex& complex, int l, std::int64_t j,
                            const F& field = F{}) {
  CohomologyCache<F> cache(complex, field);
  return lc_graded_dim(cache, l, j);
}

struct GradedDimRow {
  int l = 0;
  std::map<std::int64_t, std::uint64_t> by_degree;  // j -> dim, j in the window
  BinomialSeries tail;                               // value at degree -(i+1)
};

struct GradedDimTable {
  int d = 0;
  std::vector<GradedDimRow> rows;
};

/// Rows for l in [l_min, l_max], degrees 1 down to -(max_i + 1).
template <Field F>
GradedDimTable lc_table(CohomologyCache<F>& cache, int l_min, int l_max, int max_i) {
  GradedDimTable table;
  table.d = krull_dim(cache.complex());
  for (int l = l_min; l <= l_max; ++l) {
    GradedDimRow row;
    row.l = l;
    row.tail = lc_tail(cache, l);
    for (std::int64_t j = 1; j >= -(max_i + 1); --j) row.by_degree[j] = lc_graded_dim(cache, l, j);
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace srlc
