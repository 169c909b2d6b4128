#pragma once

// Named complexes with recorded expectations. Expectations live in "#@"
// comment lines of the facet file, e.g.
//
//   #@ pure=true singdim.q=0 singdim.fp2=0
//
// and are checked by verify_corpus_entry, never trusted.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "srlc/facet_io.hpp"
#include "srlc/hochster.hpp"

namespace srlc {

struct CorpusEntry {
  std::string name;
  SimplicialComplex complex;
  std::string text;                          // the facet file as shipped
  std::map<std::string, std::string> notes;  // key -> expected value
};

inline CorpusEntry parse_corpus_entry(std::string name, std::string_view text) {
  CorpusEntry entry;
  entry.name = std::move(name);
  entry.complex = parse_facets(text);
  entry.text = std::string(text);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.starts_with("#@")) continue;
    for (auto tok : detail::split_ws(line.substr(2))) {
      auto eq = tok.find('=');
      if (eq == std::string_view::npos) continue;
      entry.notes[std::string(tok.substr(0, eq))] = std::string(tok.substr(eq + 1));
    }
  }
  return entry;
}

struct CorpusCheck {
  std::string entry;
  std::string key;
  std::string expected;
  std::string actual;
  bool ok() const { return expected == actual; }
};

/// Recomputes every recorded note of an entry.
inline std::vector<CorpusCheck> verify_corpus_entry(const CorpusEntry& entry) {
  std::vector<CorpusCheck> checks;
  for (const auto& [key, expected] : entry.notes) {
    std::string actual;
    if (key == "pure") {
      actual = entry.complex.is_pure() ? "true" : "false";
    } else if (key.starts_with("singdim.")) {
      auto spec = key == "singdim.q" ? FieldSpec::rationals()
                                     : FieldSpec::parse("fp:" + key.substr(std::string("singdim.fp").size()));
      actual = with_field(spec, [&](const auto& f) {
        return singularity_dimension(entry.complex, f).dimension.to_string();
      });
    } else {
      actual = "<unknown note>";
    }
    checks.push_back({entry.name, key, expected, actual});
  }
  return checks;
}

}  // namespace srlc
