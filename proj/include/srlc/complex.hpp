#pragma once

// Finite simplicial complexes on the vertex set {1, ..., n}.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace srlc {

/// Largest supported vertex count; faces are encoded as 64-bit vertex masks.
inline constexpr int kMaxVertices = 64;

/// A face: a strictly increasing list of vertex labels (1-based). The empty
/// face has dimension -1.
class Face {
 public:
  Face() = default;
  Face(std::initializer_list<int> vertices) : Face(std::vector<int>(vertices)) {}
  explicit Face(std::vector<int> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
      throw std::invalid_argument("face has repeated vertices");
    for (int v : vertices_) {
      if (v < 1 || v > kMaxVertices)
        throw std::invalid_argument("vertex label " + std::to_string(v) + " out of range");
      mask_ |= bit(v);
    }
  }

  static Face from_mask(std::uint64_t mask) {
    Face f;
    f.mask_ = mask;
    while (mask) {
      int v = std::countr_zero(mask) + 1;
      f.vertices_.push_back(v);
      mask &= mask - 1;
    }
    return f;
  }

  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

  const std::vector<int>& vertices() const { return vertices_; }
  std::uint64_t mask() const { return mask_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  int dim() const { return size() - 1; }
  bool empty() const { return vertices_.empty(); }
  bool contains(int v) const { return v >= 1 && v <= kMaxVertices && (mask_ & bit(v)); }
  bool is_subset_of(const Face& other) const { return (mask_ & ~other.mask_) == 0; }
  bool is_disjoint_from(const Face& other) const { return (mask_ & other.mask_) == 0; }

  Face united(const Face& other) const { return from_mask(mask_ | other.mask_); }
  Face without(const Face& other) const { return from_mask(mask_ & ~other.mask_); }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(vertices_[i]);
    }
    return s + "}";
  }

  /// Shorter faces first, then lexicographic on the sorted vertex lists.
  friend std::strong_ordering operator<=>(const Face& a, const Face& b) {
    if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
    return a.vertices_ <=> b.vertices_;
  }
  friend bool operator==(const Face& a, const Face& b) { return a.mask_ == b.mask_; }

 private:
  std::vector<int> vertices_;
  std::uint64_t mask_ = 0;
};

class SimplicialComplex {
 public:
  /// The void complex on zero vertices (no faces at all).
  SimplicialComplex() = default;

  /// Normalizes raw facets: sorts each, drops duplicates and faces contained
  /// in other facets. An empty raw facet list gives the void complex; a list
  /// holding only the empty facet gives the empty complex {∅}.
  static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& raw_facets) {
    if (n <= 0) throw std::invalid_argument("vertex count must be positive, got " + std::to_string(n));
    if (n > kMaxVertices)
      throw std::invalid_argument("at most " + std::to_string(kMaxVertices) + " vertices supported");
    std::vector<Face> faces;
    faces.reserve(raw_facets.size());
    for (const auto& raw : raw_facets) {
      for (int v : raw)
        if (v < 1 || v > n)
          throw std::invalid_argument("vertex label " + std::to_string(v) + " outside 1.." +
                                      std::to_string(n));
      faces.emplace_back(raw);
    }
    return SimplicialComplex(n, std::move(faces));
  }

  static SimplicialComplex from_facets(int n, const std::vector<Face>& facets) {
    if (n <= 0) throw std::invalid_argument("vertex count must be positive, got " + std::to_string(n));
    for (const auto& f : facets)
      if (!f.empty() && f.vertices().back() > n)
        throw std::invalid_argument("face " + f.to_string() + " exceeds vertex count");
    return SimplicialComplex(n, facets);
  }

  int vertex_count() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  /// The complex {∅}.
  bool is_empty_complex() const { return facets_.size() == 1 && facets_.front().empty(); }

  /// Dimension of the largest facet; -1 for {∅}, -2 for the void complex.
  int dim() const { return static_cast<int>(faces_by_size_.size()) - 2; }
  bool is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return f.dim() == dim(); });
  }

  bool contains(const Face& f) const { return masks_.contains(f.mask()); }

  /// Faces of dimension k (k >= -1), in lexicographic order.
  const std::vector<Face>& faces(int k) const {
    static const std::vector<Face> none;
    if (k < -1 || k + 1 >= static_cast<int>(faces_by_size_.size())) return none;
    return faces_by_size_[k + 1];
  }

  /// Every face, ordered by dimension and then lexicographically.
  std::vector<Face> all_faces() const {
    std::vector<Face> out;
    for (const auto& level : faces_by_size_) out.insert(out.end(), level.begin(), level.end());
    return out;
  }

  std::size_t face_count() const { return masks_.size(); }

  /// The k-faces containing f, in lexicographic order. For f = ∅ this is
  /// every k-face (including ∅ itself when k = -1).
  std::vector<Face> faces_containing(const Face& f, int k) const {
    std::vector<Face> out;
    for (const auto& g : faces(k))
      if (f.is_subset_of(g)) out.push_back(g);
    return out;
  }

  /// lk F = {G : G ∩ F = ∅, G ∪ F ∈ Δ}, on the same vertex count.
  SimplicialComplex link(const Face& f) const {
    if (!contains(f)) throw std::invalid_argument("face " + f.to_string() + " is not in the complex");
    std::vector<Face> facets;
    for (const auto& facet : facets_)
      if (f.is_subset_of(facet)) facets.push_back(facet.without(f));
    return SimplicialComplex(n_, std::move(facets));
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

 private:
  SimplicialComplex(int n, std::vector<Face> raw) : n_(n) {
    std::sort(raw.begin(), raw.end(), [](const Face& a, const Face& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a.vertices() < b.vertices();
    });
    for (const auto& f : raw) {
      bool dominated = std::any_of(facets_.begin(), facets_.end(),
                                   [&](const Face& g) { return f.is_subset_of(g); });
      if (!dominated) facets_.push_back(f);
    }
    std::sort(facets_.begin(), facets_.end());

    std::set<Face> all;
    for (const auto& facet : facets_) {
      const std::uint64_t m = facet.mask();
      // Every submask of the facet, including 0 (the empty face).
      for (std::uint64_t s = m;; s = (s - 1) & m) {
        if (masks_.insert(s).second) all.insert(Face::from_mask(s));
        if (s == 0) break;
      }
    }
    for (const auto& f : all) {
      std::size_t idx = static_cast<std::size_t>(f.size());
      if (faces_by_size_.size() <= idx) faces_by_size_.resize(idx + 1);
      faces_by_size_[idx].push_back(f);
    }
  }

  int n_ = 0;
  std::vector<Face> facets_;
  std::vector<std::vector<Face>> faces_by_size_;
  std::unordered_set<std::uint64_t> masks_;
};

}  // namespace srlc
