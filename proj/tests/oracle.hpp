#pragma once

// Reference computations for the tests. Everything here is written from the
// definitions with its own face enumeration and elimination, so it shares no
// code with the library beyond the Face/SimplicialComplex containers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "srlc/srlc.hpp"

namespace oracle {

using Mask = std::uint64_t;

/// All faces (including ∅) generated by the facets, as bitmasks.
inline std::set<Mask> face_masks(const srlc::SimplicialComplex& c) {
  std::set<Mask> out;
  for (const auto& f : c.facets()) {
    const Mask top = f.mask();
    // enumerate submasks of top
    Mask sub = top;
    while (true) {
      out.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & top;
    }
  }
  return out;
}

/// Faces G ⊇ F with |G| = k + 1, in increasing mask order.
inline std::vector<Mask> cochain_basis(const std::set<Mask>& faces, Mask f, int k) {
  std::vector<Mask> out;
  for (Mask g : faces)
    if ((g & f) == f && std::popcount(g) == k + 1) out.push_back(g);
  // Lexicographic on sorted vertex lists: the face holding the smallest differing vertex first.
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return a != b && ((a ^ b) & -(a ^ b) & a) != 0; });
  return out;
}

inline int sign_of_insertion(Mask g, int v) {
  // (-1)^(number of vertices of g below v)
  const Mask below = g & ((Mask{1} << (v - 1)) - 1);
  return std::popcount(below) % 2 == 0 ? 1 : -1;
}

/// Integer coboundary matrix C^k → C^{k+1} for the pair (Δ, cost F).
inline std::vector<std::vector<long>> coboundary(const std::set<Mask>& faces, Mask f, int k) {
  auto dom = cochain_basis(faces, f, k);
  auto cod = cochain_basis(faces, f, k + 1);
  std::vector<std::vector<long>> m(cod.size(), std::vector<long>(dom.size(), 0));
  for (std::size_t r = 0; r < cod.size(); ++r)
    for (std::size_t c = 0; c < dom.size(); ++c) {
      const Mask diff = cod[r] & ~dom[c];
      if ((dom[c] & ~cod[r]) != 0 || std::popcount(diff) != 1) continue;
      const int v = std::countr_zero(diff) + 1;
      m[r][c] = sign_of_insertion(dom[c], v);
    }
  return m;
}

/// Same, as a library matrix; keeps the column count when there are no rows.
template <class F>
srlc::Matrix<F> coboundary_matrix(const F& field, const std::set<Mask>& faces, Mask f, int k) {
  auto ints = coboundary(faces, f, k);
  srlc::Matrix<F> m(field, ints.size(), cochain_basis(faces, f, k).size());
  for (std::size_t r = 0; r < ints.size(); ++r)
    for (std::size_t c = 0; c < ints[r].size(); ++c) m(r, c) = field.from_int(ints[r][c]);
  return m;
}

inline std::size_t rank_q(std::vector<std::vector<long>> in) {
  if (in.empty()) return 0;
  std::vector<std::vector<mpq_class>> a;
  for (auto& row : in) {
    std::vector<mpq_class> r;
    for (long x : row) r.emplace_back(x);
    a.push_back(std::move(r));
  }
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      mpq_class factor = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= factor * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank_mod(std::vector<std::vector<long>> a, long p) {
  if (a.empty()) return 0;
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  auto inv = [p](long x) {
    long r = 1, e = p - 2, b = x;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const long pinv = inv(a[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const long factor = a[r][c] * pinv % p;
      for (std::size_t k = c; k < cols; ++k) a[r][k] = ((a[r][k] - factor * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// dim H^k(Δ, cost F) over Q (p == 0) or F_p.
inline std::size_t pair_dim(const srlc::SimplicialComplex& c, const srlc::Face& f, int k, long p) {
  const auto faces = face_masks(c);
  const std::size_t n_k = cochain_basis(faces, f.mask(), k).size();
  auto rk = [&](int j) -> std::size_t {
    auto m = coboundary(faces, f.mask(), j);
    return p == 0 ? rank_q(m) : rank_mod(m, p);
  };
  return n_k - rk(k) - rk(k - 1);
}

/// dim H^k(Δ, cost F; F_2) by listing every cochain. Only for small bases.
inline std::size_t pair_dim_f2_enumerated(const srlc::SimplicialComplex& c, const srlc::Face& f,
                                          int k) {
  const auto faces = face_masks(c);
  const auto prev = cochain_basis(faces, f.mask(), k - 1);
  const auto cur = cochain_basis(faces, f.mask(), k);
  const auto next = cochain_basis(faces, f.mask(), k + 1);
  auto delta = [&](const std::vector<Mask>& dom, const std::vector<Mask>& cod, std::uint32_t x) {
    std::uint32_t y = 0;
    for (std::size_t r = 0; r < cod.size(); ++r) {
      int bit = 0;
      for (std::size_t s = 0; s < dom.size(); ++s)
        if ((x >> s & 1u) && (dom[s] & ~cod[r]) == 0) bit ^= 1;
      if (bit) y |= 1u << r;
    }
    return y;
  };
  std::size_t cocycles = 0;
  for (std::uint32_t x = 0; x < (1u << cur.size()); ++x)
    if (delta(cur, next, x) == 0) ++cocycles;
  std::set<std::uint32_t> boundaries;
  for (std::uint32_t x = 0; x < (1u << prev.size()); ++x) boundaries.insert(delta(prev, cur, x));
  const std::size_t quotient = cocycles / boundaries.size();
  return static_cast<std::size_t>(std::countr_zero(quotient));
}

inline long long binom(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  long long r = 1;
  for (long long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

/// Every U ∈ N^n with |U| = r, in lexicographic order.
inline std::vector<std::vector<int>> all_exponents(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> u(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      u[pos] = left;
      out.push_back(u);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      u[pos] = x;
      self(self, pos + 1, left - x);
    }
  };
  if (n > 0) rec(rec, 0, r);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
