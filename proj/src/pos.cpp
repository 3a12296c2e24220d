#include "syntrace/pos.hpp"

#include <fstream>

#include "syntrace/error.hpp"

namespace syntrace {

const char* to_string(PosTag t) {
  switch (t) {
    case PosTag::DET: return "DET";
    case PosTag::NOUN: return "NOUN";
    case PosTag::VERB: return "VERB";
    case PosTag::ADP: return "ADP";
    case PosTag::ADJ: return "ADJ";
    case PosTag::ADV: return "ADV";
    case PosTag::PRON: return "PRON";
    case PosTag::PROPN: return "PROPN";
    case PosTag::NUM: return "NUM";
    case PosTag::CONJ: return "CONJ";
    case PosTag::PART: return "PART";
    case PosTag::PUNCT: return "PUNCT";
    case PosTag::X: return "X";
  }
  return "X";
}

std::optional<PosTag> pos_from_string(std::string_view s) {
  static const std::unordered_map<std::string_view, PosTag> m = {
      {"DET", PosTag::DET},     {"NOUN", PosTag::NOUN}, {"VERB", PosTag::VERB},
      {"ADP", PosTag::ADP},     {"ADJ", PosTag::ADJ},   {"ADV", PosTag::ADV},
      {"PRON", PosTag::PRON},   {"PROPN", PosTag::PROPN}, {"NUM", PosTag::NUM},
      {"CONJ", PosTag::CONJ},   {"PART", PosTag::PART}, {"PUNCT", PosTag::PUNCT},
      {"X", PosTag::X},
  };
  auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

namespace {

struct Entry {
  const char* word;
  PosTag tag;
};

constexpr PosTag D = PosTag::DET;
constexpr PosTag N = PosTag::NOUN;
constexpr PosTag V = PosTag::VERB;
constexpr PosTag P = PosTag::ADP;
constexpr PosTag J = PosTag::ADJ;
constexpr PosTag R = PosTag::ADV;
constexpr PosTag O = PosTag::PRON;
constexpr PosTag U = PosTag::NUM;
constexpr PosTag C = PosTag::CONJ;
constexpr PosTag T = PosTag::PART;
constexpr PosTag K = PosTag::PUNCT;

// Closed-class core plus a compact adjective list; possessives tag as DET so
// prompts like "his dog ..." parse determiner-first.
const Entry kBuiltin[] = {
    // determiners & possessives
    {"the", D}, {"a", D}, {"an", D}, {"this", D}, {"that", D}, {"these", D}, {"those", D},
    {"every", D}, {"each", D}, {"some", D}, {"any", D}, {"no", D}, {"another", D},
    {"such", D}, {"either", D}, {"neither", D}, {"both", D}, {"all", D}, {"several", D},
    {"my", D}, {"your", D}, {"his", D}, {"her", D}, {"its", D}, {"our", D}, {"their", D},
    {"whose", D}, {"which", D}, {"what", D},
    // adpositions
    {"in", P}, {"on", P}, {"at", P}, {"by", P}, {"with", P}, {"from", P}, {"of", P},
    {"to", P}, {"into", P}, {"onto", P}, {"over", P}, {"under", P}, {"above", P},
    {"below", P}, {"near", P}, {"behind", P}, {"beside", P}, {"between", P},
    {"through", P}, {"against", P}, {"across", P}, {"along", P}, {"around", P},
    {"before", P}, {"after", P}, {"toward", P}, {"towards", P}, {"without", P},
    {"within", P}, {"upon", P}, {"off", P}, {"past", P}, {"beneath", P}, {"beyond", P},
    {"during", P}, {"amid", P}, {"among", P}, {"inside", P}, {"outside", P},
    {"underneath", P}, {"via", P}, {"per", P},
    // pronouns
    {"i", O}, {"you", O}, {"he", O}, {"she", O}, {"it", O}, {"we", O}, {"they", O},
    {"me", O}, {"him", O}, {"them", O}, {"us", O}, {"himself", O}, {"herself", O},
    {"itself", O}, {"themselves", O}, {"myself", O}, {"yourself", O}, {"ourselves", O},
    {"someone", O}, {"anyone", O}, {"everyone", O}, {"nobody", O}, {"something", O},
    {"anything", O}, {"everything", O}, {"nothing", O}, {"who", O}, {"whom", O},
    // conjunctions
    {"and", C}, {"or", C}, {"but", C}, {"nor", C}, {"so", C}, {"yet", C},
    {"because", C}, {"although", C}, {"though", C}, {"while", C}, {"when", C},
    {"whenever", C}, {"where", C}, {"wherever", C}, {"if", C}, {"unless", C},
    {"until", C}, {"since", C}, {"than", C}, {"whether", C}, {"once", C},
    // particles
    {"not", T},
    // numerals
    {"one", U}, {"two", U}, {"three", U}, {"four", U}, {"five", U}, {"six", U},
    {"seven", U}, {"eight", U}, {"nine", U}, {"ten", U}, {"eleven", U}, {"twelve", U},
    {"twenty", U}, {"thirty", U}, {"forty", U}, {"fifty", U}, {"hundred", U},
    {"thousand", U}, {"million", U}, {"first", U}, {"second", U}, {"third", U},
    // adverbs (closed + common manner forms arrive via the -ly rule)
    {"very", R}, {"quite", R}, {"too", R}, {"also", R}, {"just", R}, {"then", R},
    {"there", R}, {"here", R}, {"now", R}, {"soon", R}, {"never", R}, {"always", R},
    {"often", R}, {"again", R}, {"away", R}, {"back", R}, {"still", R}, {"almost", R},
    {"even", R}, {"ever", R}, {"far", R}, {"already", R}, {"perhaps", R}, {"maybe", R},
    {"together", R}, {"instead", R}, {"rather", R},
    // auxiliaries & irregular verbs
    {"is", V}, {"are", V}, {"was", V}, {"were", V}, {"be", V}, {"been", V}, {"being", V},
    {"am", V}, {"has", V}, {"have", V}, {"had", V}, {"do", V}, {"does", V}, {"did", V},
    {"can", V}, {"could", V}, {"will", V}, {"would", V}, {"shall", V}, {"should", V},
    {"may", V}, {"might", V}, {"must", V}, {"go", V}, {"goes", V}, {"went", V},
    {"gone", V}, {"come", V}, {"came", V}, {"get", V}, {"got", V}, {"make", V},
    {"made", V}, {"take", V}, {"took", V}, {"see", V}, {"saw", V}, {"seen", V},
    {"know", V}, {"knew", V}, {"give", V}, {"gave", V}, {"find", V}, {"found", V},
    {"keep", V}, {"kept", V}, {"let", V}, {"run", V}, {"ran", V}, {"sit", V}, {"sat", V},
    {"stand", V}, {"stood", V}, {"hold", V}, {"held", V}, {"fly", V}, {"flew", V},
    {"grow", V}, {"grew", V}, {"lie", V}, {"lay", V}, {"rise", V}, {"rose", V},
    {"fall", V}, {"fell", V}, {"eat", V}, {"ate", V}, {"drink", V}, {"drank", V},
    {"sleep", V}, {"slept", V}, {"swim", V}, {"swam", V}, {"sing", V}, {"sang", V},
    {"ring", V}, {"rang", V}, {"wear", V}, {"wore", V}, {"worn", V}, {"say", V},
    {"said", V}, {"tell", V}, {"told", V}, {"think", V}, {"thought", V},
    // adjectives (open-class words have no ADJ suffix signal; a small curated
    // set keeps ADJ reachable for template mining)
    {"red", J}, {"blue", J}, {"green", J}, {"white", J}, {"black", J}, {"golden", J},
    {"silver", J}, {"bright", J}, {"dark", J}, {"warm", J}, {"cold", J}, {"soft", J},
    {"hard", J}, {"big", J}, {"small", J}, {"tall", J}, {"short", J}, {"long", J},
    {"old", J}, {"young", J}, {"new", J}, {"quiet", J}, {"loud", J}, {"calm", J},
    {"gentle", J}, {"wild", J}, {"empty", J}, {"full", J}, {"clean", J}, {"dirty", J},
    {"wet", J}, {"dry", J}, {"sweet", J}, {"fresh", J}, {"round", J}, {"sharp", J},
    {"smooth", J}, {"rough", J}, {"pale", J}, {"deep", J}, {"high", J}, {"low", J},
    {"rich", J}, {"poor", J}, {"happy", J}, {"sad", J}, {"tired", J}, {"hungry", J},
    {"busy", J}, {"lazy", J}, {"good", J}, {"bad", J}, {"great", J}, {"little", J},
    {"heavy", J}, {"light", J}, {"fast", J}, {"slow", J}, {"late", J}, {"early", J},
    {"hot", J}, {"cool", J}, {"cozy", J}, {"shiny", J}, {"ancient", J}, {"modern", J},
    {"giant", J}, {"tiny", J}, {"broken", J}, {"hidden", J}, {"distant", J},
    {"curious", J}, {"famous", J}, {"strange", J}, {"foggy", J}, {"sunny", J},
    {"rainy", J}, {"snowy", J}, {"stormy", J}, {"misty", J}, {"blond", J},
    // punctuation
    {",", K}, {".", K}, {"!", K}, {"?", K}, {";", K}, {":", K}, {"-", K}, {"\"", K},
    {"'", K}, {"(", K}, {")", K},
    // a few proper nouns for pretagged corpora interop
    {"paris", PosTag::PROPN}, {"london", PosTag::PROPN}, {"tokyo", PosTag::PROPN},
    {"mars", PosTag::PROPN}, {"john", PosTag::PROPN}, {"mary", PosTag::PROPN},
};

}  // namespace

const PosLexicon& PosLexicon::builtin() {
  static const PosLexicon lex = [] {
    PosLexicon l;
    for (const auto& e : kBuiltin) l.insert(e.word, e.tag);
    return l;
  }();
  return lex;
}

PosLexicon PosLexicon::load_tsv(const std::string& path, bool merge_builtin) {
  std::ifstream in(path);
  if (!in) raise(Err::CorpusUnreadable, "cannot open lexicon file: " + path);
  PosLexicon lex = merge_builtin ? builtin() : PosLexicon{};
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      raise(Err::BadArgument, path + ":" + std::to_string(lineno) + ": expected word<TAB>TAG");
    const std::string word = line.substr(0, tab);
    std::string tagstr = line.substr(tab + 1);
    if (!tagstr.empty() && tagstr.back() == '\r') tagstr.pop_back();
    const auto tag = pos_from_string(tagstr);
    if (!tag)
      raise(Err::BadArgument, path + ":" + std::to_string(lineno) + ": unknown tag " + tagstr);
    lex.insert(word, *tag);
  }
  return lex;
}

std::optional<PosTag> PosLexicon::lookup(std::string_view word) const {
  auto it = table_.find(std::string(word));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

PosTag tag_word(std::string_view w, const PosLexicon& lex) {
  if (auto hit = lex.lookup(w)) return *hit;
  const auto ends = [&](std::string_view suf) {
    return w.size() >= suf.size() && w.substr(w.size() - suf.size()) == suf;
  };
  if (w.size() > 4 && ends("ing")) return PosTag::VERB;
  if (w.size() > 3 && ends("ed")) return PosTag::VERB;
  if (w.size() > 3 && ends("ly")) return PosTag::ADV;
  if (w.size() > 3 && ends("s") && !ends("ss") && !ends("us") && !ends("is")) return PosTag::VERB;
  return PosTag::NOUN;
}

}  // namespace syntrace
