#pragma once

#include <string>
#include <vector>

#include "cli.hpp"
#include "srlc/srlc.hpp"

namespace fixtures {

inline const std::vector<srlc::CorpusEntry>& corpus() {
  static const std::vector<srlc::CorpusEntry> entries = srlc::cli::builtin_corpus();
  return entries;
}

inline srlc::SimplicialComplex named(const std::string& name) {
  return srlc::cli::corpus_entry(name).complex;
}

inline srlc::SimplicialComplex triangle_boundary() {
  return srlc::SimplicialComplex::from_facets(3, std::vector<std::vector<int>>{{1, 2}, {2, 3}, {1, 3}});
}

inline srlc::SimplicialComplex bowtie() {
  return srlc::SimplicialComplex::from_facets(5, std::vector<std::vector<int>>{{1, 2, 3}, {1, 4, 5}});
}

inline srlc::SimplicialComplex point() {
  return srlc::SimplicialComplex::from_facets(1, std::vector<std::vector<int>>{{1}});
}

}  // namespace fixtures
