#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace syntrace {

// Universal-style tag alphabet. Closed: unknown words fall back to NOUN,
// never to absence.
enum class PosTag : uint8_t {
  DET,
  NOUN,
  VERB,
  ADP,
  ADJ,
  ADV,
  PRON,
  PROPN,
  NUM,
  CONJ,
  PART,
  PUNCT,
  X,
};

inline constexpr int kNumPosTags = 13;

const char* to_string(PosTag t);
std::optional<PosTag> pos_from_string(std::string_view s);

// Closed-class word table. The built-in table covers function words,
// punctuation, a small adjective set and a few irregular verbs; a TSV file
// (word<TAB>TAG per line) can extend or override it.
class PosLexicon {
 public:
  static const PosLexicon& builtin();
  static PosLexicon load_tsv(const std::string& path, bool merge_builtin = true);

  std::optional<PosTag> lookup(std::string_view word) const;
  size_t size() const { return table_.size(); }
  void insert(std::string word, PosTag tag) { table_[std::move(word)] = tag; }

 private:
  std::unordered_map<std::string, PosTag> table_;
};

// Three-stage tagger: exact lexicon match, then suffix rules
// (-ing/-ed/-ly/-s), then NOUN. Total for arbitrary input.
PosTag tag_word(std::string_view word, const PosLexicon& lex);

}  // namespace syntrace
