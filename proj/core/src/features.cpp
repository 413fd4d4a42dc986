#include "dacfake/features.hpp"

#include <cmath>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "dacfake/error.hpp"
#include "dacfake/util.hpp"

namespace dacfake {

const std::vector<FeatureEntry>& feature_registry() {
  static const std::vector<FeatureEntry> reg = {
      {"lf1_char_count", "LF1", "characters"},
      {"lf1_digit_count", "LF1", "digit characters"},
      {"lf1_letter_count", "LF1", "letter characters"},
      {"lf1_uppercase_count", "LF1", "uppercase letters"},
      {"lf1_whitespace_count", "LF1", "whitespace characters"},
      {"lf1_special_char_count", "LF1", "non letter/digit/space characters"},

      {"lf2_word_count", "LF2", "word tokens"},
      {"lf2_short_word_count", "LF2", "words shorter than 4 characters"},
      {"lf2_word_char_count", "LF2", "characters inside words"},
      {"lf2_avg_sentence_len_chars", "LF2", "average sentence length in characters"},
      {"lf2_avg_sentence_len_words", "LF2", "average sentence length in words"},
      {"lf2_hapax_count", "LF2", "once-occurring words"},
      {"lf2_dis_legomena_count", "LF2", "twice-occurring words"},
      {"lf2_type_count", "LF2", "distinct words"},
      {"lf2_type_token_ratio", "LF2", "distinct words over word tokens"},
      {"lf2_avg_word_len", "LF2", "average word length"},
      {"lf2_word_len_freq_1", "LF2", "words of length 1"},
      {"lf2_word_len_freq_2", "LF2", "words of length 2"},
      {"lf2_word_len_freq_3", "LF2", "words of length 3"},
      {"lf2_word_len_freq_4", "LF2", "words of length 4"},
      {"lf2_word_len_freq_5", "LF2", "words of length 5"},
      {"lf2_word_len_freq_6", "LF2", "words of length 6"},
      {"lf2_word_len_freq_7", "LF2", "words of length 7"},
      {"lf2_word_len_freq_8", "LF2", "words of length 8"},
      {"lf2_word_len_freq_9", "LF2", "words of length 9"},
      {"lf2_word_len_freq_10", "LF2", "words of length 10"},
      {"lf2_word_len_freq_11", "LF2", "words of length 11"},
      {"lf2_word_len_freq_12", "LF2", "words of length 12"},
      {"lf2_word_len_freq_13", "LF2", "words of length 13"},
      {"lf2_word_len_freq_14", "LF2", "words of length 14"},

      {"lf3_punct_comma", "LF3", "commas"},
      {"lf3_punct_period", "LF3", "periods"},
      {"lf3_punct_exclamation", "LF3", "exclamation marks"},
      {"lf3_punct_question", "LF3", "question marks"},
      {"lf3_punct_semicolon", "LF3", "semicolons"},
      {"lf3_punct_colon", "LF3", "colons"},
      {"lf3_punct_apostrophe", "LF3", "apostrophes/single quotes"},
      {"lf3_punct_quote", "LF3", "double quotes"},
      {"lf3_punct_at", "LF3", "at signs"},
      {"lf3_punct_hash", "LF3", "hash signs"},
      {"lf3_punct_ellipsis", "LF3", "ellipses"},
      {"lf3_function_word_ratio", "LF3", "function words over word tokens"},

      {"lf4_line_count", "LF4", "non-blank lines"},
      {"lf4_sentence_count", "LF4", "sentences"},
      {"lf4_paragraph_count", "LF4", "paragraphs"},
      {"lf4_sentences_per_paragraph", "LF4", "average sentences per paragraph"},
      {"lf4_chars_per_paragraph", "LF4", "average characters per paragraph"},
      {"lf4_words_per_paragraph", "LF4", "average words per paragraph"},
      {"lf4_greeting_word_count", "LF4", "greeting words"},
      {"lf4_quoted_content_count", "LF4", "balanced double-quote spans"},
      {"lf4_url_count", "LF4", "URLs"},

      {"lf5_content_word_count", "LF5", "content (non-function) words"},
      {"lf5_content_word_ratio", "LF5", "content words over word tokens"},
      {"lf5_positive_sentence_count", "LF5", "sentences with more positive than negative words"},
      {"lf5_negative_sentence_count", "LF5", "sentences with more negative than positive words"},

      {"lf6_flesch_reading_ease", "LF6", "Flesch reading ease"},
      {"lf6_flesch_kincaid_grade", "LF6", "Flesch-Kincaid grade"},
      {"lf6_smog_index", "LF6", "SMOG index"},
      {"lf6_coleman_liau_index", "LF6", "Coleman-Liau index"},
      {"lf6_automated_readability_index", "LF6", "automated readability index"},
      {"lf6_dale_chall_score", "LF6", "Dale-Chall readability score"},
      {"lf6_linsear_write", "LF6", "Linsear Write formula"},
      {"lf6_gunning_fog", "LF6", "Gunning fog index"},
      {"lf6_lexicon_count", "LF6", "word tokens (lexicon count)"},
      {"lf6_lexical_diversity", "LF6", "distinct words over word tokens"},
      {"lf6_avg_syllables_per_word", "LF6", "average syllables per word"},
      {"lf6_polysyllable_count", "LF6", "words with 3+ syllables"},
      {"lf6_long_word_count", "LF6", "words longer than 6 characters"},
      {"lf6_monosyllable_count", "LF6", "one-syllable words"},

      {"lf7_certainty_count", "LF7", "certainty words"},
      {"lf7_tentative_count", "LF7", "tentative words"},
      {"lf7_modal_verb_count", "LF7", "modal verbs"},

      {"lf8_adjective_count", "LF8", "adjectives (lexicon)"},
      {"lf8_adverb_count", "LF8", "adverbs (lexicon)"},
      {"lf8_affective_count", "LF8", "affective terms"},

      {"lf9_self_reference_count", "LF9", "self references"},
      {"lf9_group_reference_count", "LF9", "group references"},
      {"lf9_first_person_count", "LF9", "first person pronouns"},
      {"lf9_second_person_count", "LF9", "second person pronouns"},
      {"lf9_third_person_count", "LF9", "third person pronouns"}};
  return reg;
}

std::size_t feature_index(const std::string& id) {
  static const std::unordered_map<std::string, std::size_t> index = [] {
    std::unordered_map<std::string, std::size_t> m;
    const auto& reg = feature_registry();
    for (std::size_t i = 0; i < reg.size(); ++i) m[reg[i].id] = i;
    return m;
  }();
  auto it = index.find(id);
  if (it == index.end()) throw ConfigError("unknown feature id: " + id);
  return it->second;
}

namespace {

struct CharCounts {
  double total = 0, digits = 0, letters = 0, upper = 0, space = 0, special = 0;
};

bool is_upper_cp(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return true;
  return cp >= 0xC0 && cp <= 0xDE && cp != 0xD7;  // Latin-1 uppercase block
}

CharCounts count_chars(const std::string& s) {
  CharCounts c;
  std::size_t i = 0;
  while (i < s.size()) {
    char32_t cp = utf8::decode(s, i);
    ++c.total;
    if (cp < 0x80 && is_digit(static_cast<char>(cp)))
      ++c.digits;
    else if (utf8::is_letter(cp)) {
      ++c.letters;
      if (is_upper_cp(cp)) ++c.upper;
    } else if (cp < 0x80 && is_space(static_cast<char>(cp)))
      ++c.space;
    else
      ++c.special;
  }
  return c;
}

double codepoint_len(const std::string& s) {
  double n = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    utf8::decode(s, i);
    ++n;
  }
  return n;
}

std::size_t count_urls(const std::string& text) {
  std::string lower = to_lower(text);
  std::size_t n = 0;
  std::size_t i = 0;
  while (i < lower.size()) {
    while (i < lower.size() && is_space(lower[i])) ++i;
    std::size_t start = i;
    while (i < lower.size() && !is_space(lower[i])) ++i;
    if (i == start) break;
    std::string chunk = lower.substr(start, i - start);
    if (chunk.find("http://") != std::string::npos ||
        chunk.find("https://") != std::string::npos ||
        chunk.find("ftp://") != std::string::npos ||
        starts_with(chunk, "www.") || chunk.find("//www.") != std::string::npos)
      ++n;
  }
  return n;
}

// counts of the preserved punctuation marks; "..." runs and U+2026 both
// count one ellipsis
struct PunctCounts {
  double comma = 0, period = 0, exclam = 0, question = 0, semicolon = 0,
         colon = 0, apostrophe = 0, quote = 0, at = 0, hash = 0, ellipsis = 0;
};

PunctCounts count_punct(const std::string& s) {
  PunctCounts p;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t at_byte = i;
    char32_t cp = utf8::decode(s, i);
    switch (cp) {
      case ',': ++p.comma; break;
      case '!': ++p.exclam; break;
      case '?': ++p.question; break;
      case ';': ++p.semicolon; break;
      case ':': ++p.colon; break;
      case '\'': case '`': ++p.apostrophe; break;
      case '"': ++p.quote; break;
      case '@': ++p.at; break;
      case '#': ++p.hash; break;
      case 0x2026: ++p.ellipsis; break;
      case '.': {
        std::size_t run = 1;
        while (i < s.size() && s[i] == '.') {
          ++run;
          ++i;
        }
        if (run >= 3)
          ++p.ellipsis;
        else
          p.period += static_cast<double>(run);
        (void)at_byte;
        break;
      }
      default: break;
    }
  }
  return p;
}

}  // namespace

std::vector<double> compute_article_features(const std::string& text,
                                             const LexiconSet& lex) {
  std::vector<double> f;
  f.reserve(kFeatureCount);

  // structure comes from the raw text; character/word statistics come from
  // the LF-branch cleaned text (segment runs before prep_lf by design)
  SegmentedText seg;
  bool has_text = !trim(text).empty();
  if (has_text) seg = segment(text);

  std::string lf_text = prep_lf(text);
  std::vector<Token> words = tokenize(lf_text);

  double word_count = static_cast<double>(words.size());
  double sentence_count = static_cast<double>(seg.sentences.size());
  double paragraph_count = static_cast<double>(seg.paragraphs.size());

  // ---- LF1: characters (on the cleaned text)
  CharCounts cc = count_chars(lf_text);
  f.push_back(cc.total);
  f.push_back(cc.digits);
  f.push_back(cc.letters);
  f.push_back(cc.upper);
  f.push_back(cc.space);
  f.push_back(cc.special);

  // ---- LF2: words
  double short_words = 0, word_chars = 0;
  double len_buckets[14] = {0};
  std::unordered_map<std::string, int> freq;
  std::vector<std::string> lower_words;
  lower_words.reserve(words.size());
  for (const auto& t : words) {
    double len = codepoint_len(t.text);
    word_chars += len;
    if (len < 4) ++short_words;
    int bucket = static_cast<int>(len);
    if (bucket >= 1 && bucket <= 14) ++len_buckets[bucket - 1];
    std::string lower = to_lower(t.text);
    ++freq[lower];
    lower_words.push_back(std::move(lower));
  }
  double hapax = 0, dis = 0;
  for (const auto& [w, n] : freq) {
    if (n == 1) ++hapax;
    if (n == 2) ++dis;
  }
  double type_count = static_cast<double>(freq.size());

  double sent_chars = 0, avg_sent_chars = 0;
  for (const auto& s : seg.sentences) sent_chars += codepoint_len(s);
  if (sentence_count > 0) avg_sent_chars = sent_chars / sentence_count;

  f.push_back(word_count);
  f.push_back(short_words);
  f.push_back(word_chars);
  f.push_back(avg_sent_chars);
  f.push_back(sentence_count > 0 ? word_count / sentence_count : 0);
  f.push_back(hapax);
  f.push_back(dis);
  f.push_back(type_count);
  f.push_back(word_count > 0 ? type_count / word_count : 0);
  f.push_back(word_count > 0 ? word_chars / word_count : 0);
  for (double b : len_buckets) f.push_back(b);

  // ---- LF3: punctuation (on the cleaned text, which keeps the marks)
  PunctCounts pc = count_punct(lf_text);
  double function_hits = 0;
  for (const auto& w : lower_words)
    if (lex.function_words.count(w)) ++function_hits;
  f.push_back(pc.comma);
  f.push_back(pc.period);
  f.push_back(pc.exclam);
  f.push_back(pc.question);
  f.push_back(pc.semicolon);
  f.push_back(pc.colon);
  f.push_back(pc.apostrophe);
  f.push_back(pc.quote);
  f.push_back(pc.at);
  f.push_back(pc.hash);
  f.push_back(pc.ellipsis);
  f.push_back(word_count > 0 ? function_hits / word_count : 0);

  // ---- LF4: structure
  double greeting = 0;
  for (const auto& w : lower_words)
    if (lex.greeting_words.count(w)) ++greeting;
  double quoted_spans = std::floor(pc.quote / 2.0);
  f.push_back(static_cast<double>(seg.line_count));
  f.push_back(sentence_count);
  f.push_back(paragraph_count);
  f.push_back(paragraph_count > 0 ? sentence_count / paragraph_count : 0);
  f.push_back(paragraph_count > 0 ? cc.total / paragraph_count : 0);
  f.push_back(paragraph_count > 0 ? word_count / paragraph_count : 0);
  f.push_back(greeting);
  f.push_back(quoted_spans);
  f.push_back(static_cast<double>(count_urls(text)));

  // ---- LF5: content words and sentence polarity
  double content = 0;
  for (const auto& w : lower_words)
    if (!lex.function_words.count(w)) ++content;
  double pos_sent = 0, neg_sent = 0;
  for (const auto& s : seg.sentences) {
    int pos = 0, neg = 0;
    for (const auto& t : tokenize(s)) {
      std::string w = to_lower(t.text);
      if (lex.positive_words.count(w)) ++pos;
      if (lex.negative_words.count(w)) ++neg;
    }
    if (pos > neg) ++pos_sent;
    if (neg > pos) ++neg_sent;
  }
  f.push_back(content);
  f.push_back(word_count > 0 ? content / word_count : 0);
  f.push_back(pos_sent);
  f.push_back(neg_sent);

  // ---- LF6: readability over the cleaned-token stream, sentence count from
  // the raw segmentation
  double syllables = 0, polysyll = 0, mono = 0, long_words = 0;
  double letters_in_words = 0, chars_in_words = 0, difficult = 0;
  double easy_lw = 0, hard_lw = 0;
  for (const auto& t : words) {
    std::string lower;
    bool has_letter = false, all_digits = true;
    for (char c : t.text) {
      if (is_alpha(c)) {
        has_letter = true;
        all_digits = false;
        ++letters_in_words;
        ++chars_in_words;
        lower.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
      } else if (is_digit(c)) {
        ++chars_in_words;
      } else {
        all_digits = false;
      }
    }
    int syl = has_letter ? count_syllables(lower) : 1;
    syllables += syl;
    if (syl >= 3) ++polysyll, ++hard_lw;
    else ++easy_lw;
    if (syl == 1) ++mono;
    if (codepoint_len(t.text) > 6) ++long_words;
    if (has_letter && !all_digits && !lex.dale_chall_familiar_words.count(lower) &&
        !lex.dale_chall_familiar_words.count(lemmatize(lower)))
      ++difficult;
  }
  f.push_back(flesch_reading_ease(word_count, sentence_count, syllables));
  f.push_back(flesch_kincaid_grade(word_count, sentence_count, syllables));
  f.push_back(word_count > 0 ? smog_index(polysyll, sentence_count) : 0);
  f.push_back(coleman_liau_index(letters_in_words, word_count, sentence_count));
  f.push_back(automated_readability_index(chars_in_words, word_count, sentence_count));
  f.push_back(dale_chall_score(difficult, word_count, sentence_count));
  f.push_back(word_count > 0 ? linsear_write_formula(easy_lw, hard_lw, sentence_count) : 0);
  f.push_back(gunning_fog_index(word_count, polysyll, sentence_count));
  f.push_back(word_count);
  f.push_back(word_count > 0 ? type_count / word_count : 0);
  f.push_back(word_count > 0 ? syllables / word_count : 0);
  f.push_back(polysyll);
  f.push_back(long_words);
  f.push_back(mono);

  // ---- LF7-LF9: lexicon categories
  auto count_in = [&](const std::unordered_set<std::string>& set) {
    double n = 0;
    for (const auto& w : lower_words)
      if (set.count(w)) ++n;
    return n;
  };
  f.push_back(count_in(lex.certainty_words));
  f.push_back(count_in(lex.tentative_words));
  f.push_back(count_in(lex.modal_verbs));
  f.push_back(count_in(lex.adjectives));
  f.push_back(count_in(lex.adverbs));
  f.push_back(count_in(lex.affective_terms));
  f.push_back(count_in(lex.self_references));
  f.push_back(count_in(lex.group_references));
  f.push_back(count_in(lex.pronouns_first));
  f.push_back(count_in(lex.pronouns_second));
  f.push_back(count_in(lex.pronouns_third));

  if (f.size() != kFeatureCount)
    throw DataError("feature vector has " + std::to_string(f.size()) +
                    " entries, registry has " + std::to_string(kFeatureCount));
  for (double& v : f)
    if (!std::isfinite(v)) v = 0;
  return f;
}

FeatureMatrix extract_lf(const Corpus& corpus, const LexiconSet& lex) {
  if (!corpus.phase1_done)
    throw DataError("extract_lf needs a phase-1-cleaned corpus");
  const auto& reg = feature_registry();

  FeatureMatrix fm;
  fm.provenance = Provenance::LF;
  for (const auto& e : reg) fm.columns.push_back(e.id);
  fm.values = Matrix(corpus.size(), reg.size());

  for (std::size_t r = 0; r < corpus.size(); ++r) {
    std::vector<double> row = compute_article_features(corpus.articles[r].text, lex);
    for (std::size_t c = 0; c < row.size(); ++c) fm.values.at(r, c) = row[c];
  }

  fm.meta["registry_version"] = kFeatureRegistryVersion;
  fm.meta["lexicon_versions"] = lex.version_summary();
  fm.meta["corpus_hash"] = corpus.content_hash();
  fm.check_consistent();
  return fm;
}

namespace {
const std::vector<std::string>& table4_feature_ids() {
  static const std::vector<std::string> ids = {
      "lf1_uppercase_count",      "lf4_quoted_content_count",
      "lf4_url_count",            "lf2_word_count",
      "lf2_type_count",           "lf2_avg_word_len",
      "lf2_type_token_ratio",     "lf4_sentence_count",
      "lf2_avg_sentence_len_words", "lf5_content_word_count",
      "lf9_first_person_count",   "lf9_second_person_count",
      "lf9_third_person_count",   "lf5_positive_sentence_count",
      "lf3_punct_question",       "lf3_punct_exclamation"};
  return ids;
}
}  // namespace

Table4Report table4_report(const Corpus& corpus, const FeatureMatrix& lf) {
  if (lf.provenance != Provenance::LF)
    throw DataError("table4_report needs an LF matrix");
  if (lf.rows() != corpus.size())
    throw DataError("matrix rows do not match corpus size");

  Table4Report report;
  for (const auto& a : corpus.articles) {
    if (a.label == 0) ++report.n_true;
    if (a.label == 1) ++report.n_fake;
  }
  if (report.n_true == 0) throw DataError("no true-class (label 0) articles");
  if (report.n_fake == 0) throw DataError("no fake-class (label 1) articles");

  for (const auto& id : table4_feature_ids()) {
    std::size_t c = feature_index(id);
    Table4Row row;
    row.feature_id = id;
    for (std::size_t r = 0; r < corpus.size(); ++r) {
      if (corpus.articles[r].label == 0)
        row.mean_true += lf.values.at(r, c);
      else if (corpus.articles[r].label == 1)
        row.mean_fake += lf.values.at(r, c);
    }
    row.mean_true /= static_cast<double>(report.n_true);
    row.mean_fake /= static_cast<double>(report.n_fake);
    report.rows.push_back(row);
  }
  return report;
}

std::string Table4Report::to_text() const {
  std::ostringstream os;
  os << "feature                           true        fake\n";
  char buf[96];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%-30s %10.3f  %10.3f\n", r.feature_id.c_str(),
                  r.mean_true, r.mean_fake);
    os << buf;
  }
  os << "(n_true=" << n_true << ", n_fake=" << n_fake << ")\n";
  return os.str();
}

std::string Table4Report::to_csv() const {
  std::ostringstream os;
  os << "feature,mean_true,mean_fake\n";
  for (const auto& r : rows)
    os << r.feature_id << ',' << r.mean_true << ',' << r.mean_fake << '\n';
  return os.str();
}

}  // namespace dacfake
