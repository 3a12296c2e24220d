#pragma once

#include <map>
#include <string>
#include <vector>

#include "syntrace/pos.hpp"

namespace syntrace {

using TokenSeq = std::vector<std::string>;

struct TaggedPrompt {
  TokenSeq tokens;
  std::vector<PosTag> tags;
};

struct SyntacticTemplate {
  std::vector<PosTag> pattern;

  std::string render() const;  // "(DET)(NOUN)..."
  static SyntacticTemplate parse(const std::string& text);

  bool operator==(const SyntacticTemplate& o) const { return pattern == o.pattern; }
  size_t size() const { return pattern.size(); }
};

// Whitespace split, terminal punctuation split off as its own tokens,
// ASCII lowercasing. Raises EmptyPrompt when nothing remains.
TokenSeq tokenize(const std::string& text);

std::string join_tokens(const TokenSeq& tokens);

TaggedPrompt tag(const TokenSeq& tokens, const PosLexicon& lex);

SyntacticTemplate extract_template(const TaggedPrompt& tp);

bool matches(const TaggedPrompt& tp, const SyntacticTemplate& s);
bool matches(const std::vector<PosTag>& tags, const SyntacticTemplate& s);

struct TemplateFreqTable {
  std::map<std::vector<PosTag>, uint64_t> entries;
  uint64_t total = 0;  // number of in-range prompts counted
};

// One corpus line: either a raw prompt or a JSONL record
// {"text": str, "tags": [str]?}.
struct CorpusRecord {
  std::string text;
  std::vector<PosTag> tags;  // empty = untagged
};

CorpusRecord parse_corpus_line(const std::string& line, bool require_tags);

std::vector<std::string> read_corpus_lines(const std::string& path);

// Counts each prompt's template when its length falls inside
// [min_len, max_len]. The sharded version must match the serial one exactly.
TemplateFreqTable mine_templates(const std::vector<std::string>& lines, int min_len, int max_len,
                                 const PosLexicon& lex, bool pretagged = false);
TemplateFreqTable mine_templates_serial(const std::vector<std::string>& lines, int min_len,
                                        int max_len, const PosLexicon& lex,
                                        bool pretagged = false);

// k least-frequent templates; ties broken by the rendered tag string.
std::vector<SyntacticTemplate> select_rare(const TemplateFreqTable& table, int k);

}  // namespace syntrace
