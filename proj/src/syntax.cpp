#include "syntrace/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <json.hpp>

#include "syntrace/error.hpp"
#include "syntrace/parallel.hpp"

namespace syntrace {

namespace {

bool is_terminal_punct(char c) {
  return c == '.' || c == ',' || c == '!' || c == '?' || c == ';' || c == ':';
}

}  // namespace

TokenSeq tokenize(const std::string& text) {
  TokenSeq out;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    size_t j = i;
    while (j < n && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) {
      std::string raw = text.substr(i, j - i);
      size_t end = raw.size();
      while (end > 0 && is_terminal_punct(raw[end - 1])) --end;
      std::string word = raw.substr(0, end);
      for (char& c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      if (!word.empty()) out.push_back(std::move(word));
      for (size_t k = end; k < raw.size(); ++k) out.push_back(std::string(1, raw[k]));
    }
    i = j;
  }
  if (out.empty()) raise(Err::EmptyPrompt, "tokenize: no tokens in prompt");
  return out;
}

std::string join_tokens(const TokenSeq& tokens) {
  std::string s;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) s += ' ';
    s += tokens[i];
  }
  return s;
}

TaggedPrompt tag(const TokenSeq& tokens, const PosLexicon& lex) {
  if (tokens.empty()) raise(Err::EmptyPrompt, "tag: empty token sequence");
  TaggedPrompt tp;
  tp.tokens = tokens;
  tp.tags.reserve(tokens.size());
  for (const auto& w : tokens) tp.tags.push_back(tag_word(w, lex));
  return tp;
}

SyntacticTemplate extract_template(const TaggedPrompt& tp) { return SyntacticTemplate{tp.tags}; }

bool matches(const std::vector<PosTag>& tags, const SyntacticTemplate& s) {
  return tags == s.pattern;
}

bool matches(const TaggedPrompt& tp, const SyntacticTemplate& s) { return matches(tp.tags, s); }

std::string SyntacticTemplate::render() const {
  std::string s;
  for (PosTag t : pattern) {
    s += '(';
    s += to_string(t);
    s += ')';
  }
  return s;
}

SyntacticTemplate SyntacticTemplate::parse(const std::string& text) {
  SyntacticTemplate tmpl;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') raise(Err::BadArgument, "template parse: expected '(' in " + text);
    const size_t close = text.find(')', i);
    if (close == std::string::npos) raise(Err::BadArgument, "template parse: missing ')'");
    const std::string name = text.substr(i + 1, close - i - 1);
    const auto tag = pos_from_string(name);
    if (!tag) raise(Err::BadArgument, "template parse: unknown tag " + name);
    tmpl.pattern.push_back(*tag);
    i = close + 1;
  }
  if (tmpl.pattern.empty()) raise(Err::BadArgument, "template parse: empty template");
  return tmpl;
}

CorpusRecord parse_corpus_line(const std::string& line, bool require_tags) {
  CorpusRecord rec;
  size_t first = line.find_first_not_of(" \t\r");
  if (first != std::string::npos && line[first] == '{') {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_object() && j.contains("text")) {
      rec.text = j.at("text").get<std::string>();
      if (j.contains("tags")) {
        for (const auto& t : j.at("tags")) {
          const auto tag = pos_from_string(t.get<std::string>());
          if (!tag) raise(Err::BadArgument, "corpus record: unknown tag " + t.dump());
          rec.tags.push_back(*tag);
        }
      } else if (require_tags) {
        raise(Err::BadArgument, "pretagged mode: record lacks tags: " + line);
      }
      return rec;
    }
  }
  if (require_tags) raise(Err::BadArgument, "pretagged mode: not a JSONL record: " + line);
  rec.text = line;
  return rec;
}

std::vector<std::string> read_corpus_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Err::CorpusUnreadable, "cannot open corpus: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (in.bad()) raise(Err::CorpusUnreadable, "I/O failure reading corpus: " + path);
  return lines;
}

namespace {

void mine_into(const std::string& line, int min_len, int max_len, const PosLexicon& lex,
               bool pretagged, TemplateFreqTable& table) {
  if (line.find_first_not_of(" \t\r") == std::string::npos) return;  // blank lines skipped
  const CorpusRecord rec = parse_corpus_line(line, pretagged);
  std::vector<PosTag> tags;
  if (!rec.tags.empty()) {
    tags = rec.tags;
  } else {
    tags = tag(tokenize(rec.text), lex).tags;
  }
  const int len = static_cast<int>(tags.size());
  if (len < min_len || len > max_len) return;
  ++table.entries[tags];
  ++table.total;
}

void merge_tables(TemplateFreqTable& into, const TemplateFreqTable& from) {
  for (const auto& [pat, cnt] : from.entries) into.entries[pat] += cnt;
  into.total += from.total;
}

}  // namespace

TemplateFreqTable mine_templates_serial(const std::vector<std::string>& lines, int min_len,
                                        int max_len, const PosLexicon& lex, bool pretagged) {
  if (min_len < 2) raise(Err::BadArgument, "mine_templates: min_len must be >= 2");
  if (max_len < min_len) raise(Err::BadArgument, "mine_templates: max_len < min_len");
  TemplateFreqTable table;
  for (const auto& line : lines) mine_into(line, min_len, max_len, lex, pretagged, table);
  return table;
}

TemplateFreqTable mine_templates(const std::vector<std::string>& lines, int min_len, int max_len,
                                 const PosLexicon& lex, bool pretagged) {
  if (min_len < 2) raise(Err::BadArgument, "mine_templates: min_len must be >= 2");
  if (max_len < min_len) raise(Err::BadArgument, "mine_templates: max_len < min_len");
  const int shards = std::max(1, std::min<int>(effective_threads(),
                                               static_cast<int>(lines.size() / 256) + 1));
  if (shards == 1) return mine_templates_serial(lines, min_len, max_len, lex, pretagged);

  std::vector<TemplateFreqTable> locals(shards);
  std::vector<std::exception_ptr> failures(shards);
  parallel_for(shards, [&](int s) {
    try {
      const size_t lo = lines.size() * s / shards;
      const size_t hi = lines.size() * (s + 1) / shards;
      for (size_t i = lo; i < hi; ++i)
        mine_into(lines[i], min_len, max_len, lex, pretagged, locals[s]);
    } catch (...) {
      failures[s] = std::current_exception();
    }
  });
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  TemplateFreqTable table;
  for (const auto& local : locals) merge_tables(table, local);
  return table;
}

std::vector<SyntacticTemplate> select_rare(const TemplateFreqTable& table, int k) {
  if (k < 1) raise(Err::BadArgument, "select_rare: k must be >= 1");
  if (static_cast<int>(table.entries.size()) < k)
    raise(Err::NotEnoughTemplates, "select_rare: table has " +
                                       std::to_string(table.entries.size()) +
                                       " templates, need " + std::to_string(k));
  struct Row {
    uint64_t count;
    std::string key;
    const std::vector<PosTag>* pattern;
  };
  std::vector<Row> rows;
  rows.reserve(table.entries.size());
  for (const auto& [pat, cnt] : table.entries)
    rows.push_back({cnt, SyntacticTemplate{pat}.render(), &pat});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.count != b.count) return a.count < b.count;
    return a.key < b.key;
  });
  std::vector<SyntacticTemplate> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) out.push_back(SyntacticTemplate{*rows[i].pattern});
  return out;
}

}  // namespace syntrace
