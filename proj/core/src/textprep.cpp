#include "dacfake/textprep.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "dacfake/error.hpp"
#include "dacfake/util.hpp"

namespace dacfake {

namespace utf8 {

char32_t decode(const std::string& s, std::size_t& i) {
  unsigned char c0 = static_cast<unsigned char>(s[i]);
  if (c0 < 0x80) {
    ++i;
    return c0;
  }
  int extra;
  char32_t cp;
  if ((c0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = c0 & 0x1F;
  } else if ((c0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = c0 & 0x0F;
  } else if ((c0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = c0 & 0x07;
  } else {
    ++i;
    return 0xFFFD;
  }
  if (i + static_cast<std::size_t>(extra) >= s.size()) {  // truncated
    ++i;
    return 0xFFFD;
  }
  for (int k = 1; k <= extra; ++k) {
    unsigned char cc = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
    if ((cc & 0xC0) != 0x80) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (cc & 0x3F);
  }
  i += static_cast<std::size_t>(extra) + 1;
  return cp;
}

void encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Approximate letter classes for the scripts that show up in news corpora;
// enough for counting, not a Unicode property table.
bool is_letter(char32_t cp) {
  if (cp < 0x80) return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;  // Latin ext
  if (cp >= 0x370 && cp <= 0x3FF) return cp >= 0x386;              // Greek
  if (cp >= 0x400 && cp <= 0x52F) return true;                     // Cyrillic
  if (cp >= 0x590 && cp <= 0x6FF) return true;                     // Hebrew/Arabic
  if (cp >= 0x900 && cp <= 0x97F) return true;                     // Devanagari
  if (cp >= 0x3040 && cp <= 0x30FF) return true;                   // Kana
  if (cp >= 0x4E00 && cp <= 0x9FFF) return true;                   // CJK
  if (cp >= 0xAC00 && cp <= 0xD7AF) return true;                   // Hangul
  return false;
}

bool is_emoji(char32_t cp) {
  return (cp >= 0x1F000 && cp <= 0x1FAFF) ||  // emoji & pictograph blocks
         (cp >= 0x2600 && cp <= 0x27BF) ||    // misc symbols, dingbats
         (cp >= 0x2B00 && cp <= 0x2BFF) ||    // misc symbols and arrows
         cp == 0x200D || cp == 0xFE0E || cp == 0xFE0F;  // ZWJ, variation sel
}

}  // namespace utf8

// ---------------------------------------------------------------------------
// Tokenization + segmentation

namespace {

bool is_apostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }

bool is_token_char(char32_t cp) {
  return utf8::is_letter(cp) || (cp < 0x80 && is_digit(static_cast<char>(cp))) ||
         is_apostrophe(cp);
}

}  // namespace

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    char32_t cp = utf8::decode(text, i);
    if (!is_token_char(cp)) continue;
    std::size_t end = i;
    std::string tok;
    utf8::encode(cp == 0x2019 ? '\'' : cp, tok);
    while (end < text.size()) {
      std::size_t next = end;
      char32_t c2 = utf8::decode(text, next);
      if (!is_token_char(c2)) break;
      utf8::encode(c2 == 0x2019 ? '\'' : c2, tok);
      end = next;
    }
    // apostrophes only count inside a token, not at its edges
    while (!tok.empty() && tok.front() == '\'') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == '\'') tok.pop_back();
    if (!tok.empty()) tokens.push_back(Token{tok, start, end});
    i = end;
  }
  return tokens;
}

namespace {

const std::unordered_set<std::string>& abbreviations() {
  static const std::unordered_set<std::string> set = {
      "mr",   "mrs",  "ms",  "dr",   "prof", "sr",  "jr",   "st",  "vs",
      "etc",  "eg",   "ie",  "inc",  "ltd",  "co",  "corp", "gen", "col",
      "sgt",  "gov",  "sen", "rep",  "rev",  "fig", "no",   "dept", "univ",
      "approx", "jan", "feb", "mar", "apr",  "jun", "jul",  "aug", "sep",
      "sept", "oct",  "nov", "dec",  "mt",   "ave", "blvd", "capt"};
  return set;
}

// word (letter run) immediately before byte position `pos`
std::string word_before(const std::string& s, std::size_t pos) {
  std::size_t end = pos;
  std::size_t begin = end;
  while (begin > 0 && is_alpha(s[begin - 1])) --begin;
  return to_lower(std::string_view(s).substr(begin, end - begin));
}

bool is_sentence_end(const std::string& s, std::size_t i, std::size_t* adv) {
  char c = s[i];
  if (c == '!' || c == '?') {
    *adv = 1;
    return true;
  }
  if (c == '.') {
    // swallow runs of dots ("...")
    std::size_t j = i;
    while (j + 1 < s.size() && s[j + 1] == '.') ++j;
    *adv = j - i + 1;
    if (j == i) {
      std::string prev = word_before(s, i);
      if (prev.size() == 1) return false;  // initials: "J. Smith"
      if (abbreviations().count(prev)) return false;
    }
    return true;
  }
  // U+2026 horizontal ellipsis
  if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < s.size() &&
      static_cast<unsigned char>(s[i + 1]) == 0x80 &&
      static_cast<unsigned char>(s[i + 2]) == 0xA6) {
    *adv = 3;
    return true;
  }
  return false;
}

// splits one paragraph chunk into sentences
void split_sentences(const std::string& para, std::vector<std::string>* out) {
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < para.size()) {
    std::size_t adv = 0;
    if (is_sentence_end(para, i, &adv)) {
      std::size_t end = i + adv;
      // terminator must be followed by whitespace, a closing quote + space,
      // or end of text
      std::size_t look = end;
      while (look < para.size() &&
             (para[look] == '"' || para[look] == '\'' || para[look] == ')'))
        ++look;
      if (look >= para.size() || is_space(para[look])) {
        std::string sentence = trim(para.substr(start, look - start));
        if (!sentence.empty()) out->push_back(std::move(sentence));
        start = look;
        i = look;
        continue;
      }
      i = end;
      continue;
    }
    ++i;
  }
  std::string tail = trim(para.substr(start));
  if (!tail.empty()) out->push_back(std::move(tail));
}

}  // namespace

SegmentedText segment(const std::string& text) {
  if (text.empty()) throw DataError("segment: empty text");

  SegmentedText seg;
  seg.chars = text;

  // physical lines and paragraph chunks (blank-line separated)
  std::vector<std::string> paragraphs;
  std::string current;
  std::size_t line_start = 0;
  auto flush_para = [&] {
    if (!trim(current).empty()) paragraphs.push_back(current);
    current.clear();
  };
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      std::string line = text.substr(line_start, i - line_start);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (trim(line).empty()) {
        flush_para();
      } else {
        seg.line_count++;
        if (!current.empty()) current.push_back('\n');
        current += line;
      }
      line_start = i + 1;
    }
  }
  flush_para();

  for (const auto& para : paragraphs) {
    ParagraphSpan span;
    span.first_sentence = seg.sentences.size();
    split_sentences(para, &seg.sentences);
    span.n_sentences = seg.sentences.size() - span.first_sentence;
    if (span.n_sentences > 0) seg.paragraphs.push_back(span);
  }

  seg.tokens = tokenize(text);
  return seg;
}

// ---------------------------------------------------------------------------
// LF branch cleaning

namespace {

bool is_preserved_punct(char32_t cp) {
  switch (cp) {
    case ',': case '"': case '\'': case '`': case '#': case '?': case '@':
    case '!': case '.': case ':': case ';':
      return true;
    case 0x2026:  // ellipsis
      return true;
    default:
      return false;
  }
}

char32_t normalize_quote(char32_t cp) {
  switch (cp) {
    case 0x2018: case 0x2019: return '\'';
    case 0x201C: case 0x201D: return '"';
    default: return cp;
  }
}

}  // namespace

std::string prep_lf(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  bool pending_space = false;
  auto push = [&](char32_t cp) {
    if (pending_space && !out.empty() && out.back() != '\n') out.push_back(' ');
    pending_space = false;
    utf8::encode(cp, out);
  };
  while (i < text.size()) {
    char32_t cp = normalize_quote(utf8::decode(text, i));
    if (cp == '\n') {
      pending_space = false;
      if (!out.empty()) {
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out.push_back('\n');
      }
      continue;
    }
    if (cp < 0x80 && is_space(static_cast<char>(cp))) {
      pending_space = true;
      continue;
    }
    if (utf8::is_letter(cp) || (cp < 0x80 && is_digit(static_cast<char>(cp))) ||
        is_preserved_punct(cp)) {
      push(cp);
      continue;
    }
    // emoji and every other symbol become a word break
    pending_space = true;
  }
  while (!out.empty() && (out.back() == ' ' || out.back() == '\n')) out.pop_back();
  return out;
}

// ---------------------------------------------------------------------------
// WV branch cleaning

namespace {

const std::unordered_set<std::string>& month_names() {
  static const std::unordered_set<std::string> set = {
      "january", "february", "march",    "april",   "may",      "june",
      "july",    "august",   "september", "october", "november", "december",
      "jan",     "feb",      "mar",      "apr",     "jun",      "jul",
      "aug",     "sep",      "sept",     "oct",     "nov",      "dec"};
  return set;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_digit(c)) return false;
  return true;
}

bool is_url_chunk(const std::string& lower_chunk) {
  return lower_chunk.find("http://") != std::string::npos ||
         lower_chunk.find("https://") != std::string::npos ||
         lower_chunk.find("ftp://") != std::string::npos ||
         starts_with(lower_chunk, "www.") ||
         lower_chunk.find("//www.") != std::string::npos;
}

// 12/05/2016, 2016-05-12, 12.05.16 ... digits joined by / - . twice
bool is_numeric_date(const std::string& chunk) {
  int groups = 0, digits = 0, seps = 0;
  char sep = 0;
  for (char c : chunk) {
    if (is_digit(c)) {
      ++digits;
      if (digits > 4) return false;
      continue;
    }
    if (c == '/' || c == '-' || c == '.') {
      if (digits == 0) return false;
      if (sep && c != sep) return false;
      sep = c;
      ++seps;
      ++groups;
      digits = 0;
      continue;
    }
    return false;
  }
  if (digits == 0) return false;  // trailing separator
  ++groups;
  return seps >= 1 && seps <= 2 && groups >= 2;
}

std::string strip_edge_punct(const std::string& s) {
  std::size_t b = 0, e = s.size();
  auto is_word = [](char c) { return is_alpha(c) || is_digit(c); };
  while (b < e && !is_word(s[b])) ++b;
  while (e > b && !is_word(s[e - 1])) --e;
  return s.substr(b, e - b);
}

}  // namespace

std::vector<std::string> prep_wv(const std::string& text, const LexiconSet& lex) {
  std::string lower = to_lower(text);

  // URL and numeric-date removal works on whitespace chunks so the pattern
  // sees its punctuation before tokenization strips it
  std::string kept;
  kept.reserve(lower.size());
  std::size_t i = 0;
  while (i < lower.size()) {
    while (i < lower.size() && is_space(lower[i])) ++i;
    std::size_t start = i;
    while (i < lower.size() && !is_space(lower[i])) ++i;
    if (i == start) break;
    std::string chunk = lower.substr(start, i - start);
    if (is_url_chunk(chunk)) continue;
    if (is_numeric_date(strip_edge_punct(chunk))) continue;
    kept += chunk;
    kept.push_back(' ');
  }

  std::vector<Token> raw = tokenize(kept);

  // month-name date parts: a month next to a bare number is calendar noise
  std::vector<bool> drop(raw.size(), false);
  for (std::size_t t = 0; t < raw.size(); ++t) {
    const std::string& w = raw[t].text;
    if (all_digits(w)) {
      drop[t] = true;  // number rule
      continue;
    }
    if (month_names().count(w)) {
      bool prev_num = t > 0 && all_digits(raw[t - 1].text);
      bool next_num = t + 1 < raw.size() && all_digits(raw[t + 1].text);
      if (prev_num || next_num) drop[t] = true;
    }
  }

  std::vector<std::string> out;
  out.reserve(raw.size());
  for (std::size_t t = 0; t < raw.size(); ++t) {
    if (drop[t]) continue;
    std::string w = raw[t].text;
    // normalize possessives and interior apostrophes
    if (w.size() > 2 && w.compare(w.size() - 2, 2, "'s") == 0)
      w.erase(w.size() - 2);
    w.erase(std::remove(w.begin(), w.end(), '\''), w.end());
    if (w.empty() || lex.stopwords.count(w)) continue;

    w = lemmatize(w);
    // stem to a fixed point so cleaning its own output changes nothing
    for (int guard = 0; guard < 8; ++guard) {
      std::string s = porter_stem(w);
      if (s == w) break;
      w = std::move(s);
    }
    if (w.empty() || lex.stopwords.count(w)) continue;
    out.push_back(std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Syllables

namespace {
bool is_vowel_letter(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}
}  // namespace

int count_syllables(const std::string& word) {
  std::string w;
  w.reserve(word.size());
  for (char c : word)
    if (is_alpha(c)) w.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  if (w.empty()) return 1;

  int groups = 0;
  bool in_group = false;
  for (char c : w) {
    if (is_vowel_letter(c)) {
      if (!in_group) ++groups;
      in_group = true;
    } else {
      in_group = false;
    }
  }
  // silent final 'e', except consonant+"le" ("table")
  if (w.size() >= 2 && w.back() == 'e' && w[w.size() - 2] != 'e') {
    bool cons_le = w.size() >= 3 && w[w.size() - 2] == 'l' &&
                   !is_vowel_letter(w[w.size() - 3]);
    if (!cons_le) --groups;
  }
  return std::max(groups, 1);
}

// ---------------------------------------------------------------------------
// Lemmatizer

namespace {

const std::unordered_map<std::string, std::string>* irregular_plurals() {
  static const std::unordered_map<std::string, std::string> map = {
      {"men", "man"},       {"women", "woman"},   {"children", "child"},
      {"feet", "foot"},     {"teeth", "tooth"},   {"mice", "mouse"},
      {"geese", "goose"},   {"lives", "life"},    {"wives", "wife"},
      {"knives", "knife"},  {"leaves", "leaf"},   {"wolves", "wolf"},
      {"halves", "half"},   {"shelves", "shelf"}, {"selves", "self"}};
  return &map;
}

// stems whose -ing/-ed form dropped a final 'e'
const std::unordered_set<std::string>& e_restore() {
  static const std::unordered_set<std::string> set = {
      "mak", "tak", "com", "giv", "hav", "liv", "writ", "us", "creat", "stat",
      "vot", "declar", "believ", "decid", "mov", "chang", "clos", "rais",
      "releas", "not", "argu", "provid", "increas", "produc",
      "receiv", "describ", "becom", "leav", "serv", "sav", "prov", "improv"};
  return set;
}

bool has_vowel(const std::string& s) {
  for (char c : s)
    if (is_vowel_letter(c)) return true;
  return false;
}

std::string strip_participle(const std::string& w, std::size_t suffix_len) {
  std::string stem = w.substr(0, w.size() - suffix_len);
  if (!has_vowel(stem)) return w;  // "string", "sped" stay put
  if (e_restore().count(stem)) return stem + "e";
  // undouble tt/nn/pp/... but keep ll/ss/ff/zz ("falling" -> "fall")
  if (stem.size() >= 2 && stem.back() == stem[stem.size() - 2] &&
      !is_vowel_letter(stem.back())) {
    char c = stem.back();
    if (c != 'l' && c != 's' && c != 'f' && c != 'z')
      stem.pop_back();
  }
  return stem;
}

}  // namespace

std::string lemmatize(const std::string& word) {
  if (word.size() < 3) return word;
  auto irr = irregular_plurals()->find(word);
  if (irr != irregular_plurals()->end()) return irr->second;

  std::size_t n = word.size();
  // plurals
  if (n > 3 && word.compare(n - 3, 3, "ies") == 0)
    return word.substr(0, n - 3) + "y";
  if ((n > 4 && (word.compare(n - 4, 4, "sses") == 0 ||
                 word.compare(n - 4, 4, "ches") == 0 ||
                 word.compare(n - 4, 4, "shes") == 0)) ||
      (n > 3 && (word.compare(n - 3, 3, "xes") == 0 ||
                 word.compare(n - 3, 3, "zes") == 0)))
    return word.substr(0, n - 2);
  if (word.back() == 's' && n > 3) {
    char prev = word[n - 2];
    if (prev != 's' && prev != 'u' && prev != 'i')
      return word.substr(0, n - 1);
  }
  // participles
  if (n > 5 && word.compare(n - 3, 3, "ing") == 0)
    return strip_participle(word, 3);
  if (n > 4 && word.compare(n - 3, 3, "ied") == 0)
    return word.substr(0, n - 3) + "y";
  if (n > 4 && word.compare(n - 2, 2, "ed") == 0)
    return strip_participle(word, 2);
  return word;
}

// ---------------------------------------------------------------------------
// Lexicons

namespace {

void load_word_file(const std::string& dir, const std::string& name,
                    std::unordered_set<std::string>* target,
                    std::map<std::string, std::string>* versions) {
  std::string path = dir + "/" + name + ".txt";
  std::string content = read_file(path);
  for (const auto& raw : split(content, '\n')) {
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto pos = line.find("version:");
      if (pos != std::string::npos)
        (*versions)[name] = trim(line.substr(pos + 8));
      continue;
    }
    target->insert(to_lower(line));
  }
}

}  // namespace

std::string LexiconSet::default_dir() {
  if (const char* env = std::getenv("DACFAKE_LEXICON_DIR")) return env;
#ifdef DACFAKE_SOURCE_LEXICON_DIR
  return DACFAKE_SOURCE_LEXICON_DIR;
#else
  return "data/lexicons";
#endif
}

LexiconSet LexiconSet::load(const std::string& dir) {
  LexiconSet lex;
  load_word_file(dir, "stopwords", &lex.stopwords, &lex.versions);
  load_word_file(dir, "function_words", &lex.function_words, &lex.versions);
  load_word_file(dir, "greetings", &lex.greeting_words, &lex.versions);
  load_word_file(dir, "certainty", &lex.certainty_words, &lex.versions);
  load_word_file(dir, "tentative", &lex.tentative_words, &lex.versions);
  load_word_file(dir, "modal_verbs", &lex.modal_verbs, &lex.versions);
  load_word_file(dir, "adjectives", &lex.adjectives, &lex.versions);
  load_word_file(dir, "adverbs", &lex.adverbs, &lex.versions);
  load_word_file(dir, "affective", &lex.affective_terms, &lex.versions);
  load_word_file(dir, "positive", &lex.positive_words, &lex.versions);
  load_word_file(dir, "negative", &lex.negative_words, &lex.versions);
  load_word_file(dir, "self_references", &lex.self_references, &lex.versions);
  load_word_file(dir, "group_references", &lex.group_references, &lex.versions);
  load_word_file(dir, "pronouns_first", &lex.pronouns_first, &lex.versions);
  load_word_file(dir, "pronouns_second", &lex.pronouns_second, &lex.versions);
  load_word_file(dir, "pronouns_third", &lex.pronouns_third, &lex.versions);
  load_word_file(dir, "dale_chall_familiar", &lex.dale_chall_familiar_words,
                 &lex.versions);
  lex.validate();
  return lex;
}

std::string LexiconSet::version_summary() const {
  std::string out;
  for (const auto& [name, ver] : versions) {
    if (!out.empty()) out += ",";
    out += name + "=" + ver;
  }
  return out;
}

void LexiconSet::validate() const {
  auto need = [](const std::unordered_set<std::string>& set, const char* name) {
    if (set.empty())
      throw DataError(std::string("lexicon '") + name + "' is empty");
    for (const auto& w : set)
      for (char c : w)
        if (c >= 'A' && c <= 'Z')
          throw DataError(std::string("lexicon '") + name +
                          "' has non-lowercase entry: " + w);
  };
  need(stopwords, "stopwords");
  need(function_words, "function_words");
  need(greeting_words, "greetings");
  need(certainty_words, "certainty");
  need(tentative_words, "tentative");
  need(modal_verbs, "modal_verbs");
  need(adjectives, "adjectives");
  need(adverbs, "adverbs");
  need(affective_terms, "affective");
  need(positive_words, "positive");
  need(negative_words, "negative");
  need(self_references, "self_references");
  need(group_references, "group_references");
  need(pronouns_first, "pronouns_first");
  need(pronouns_second, "pronouns_second");
  need(pronouns_third, "pronouns_third");
  need(dale_chall_familiar_words, "dale_chall_familiar");
  if (dale_chall_familiar_words.size() < 2900)
    throw DataError("dale_chall_familiar needs >= 2900 entries, has " +
                    std::to_string(dale_chall_familiar_words.size()));
}

}  // namespace dacfake
