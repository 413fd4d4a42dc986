#pragma once

#include <string>
#include <vector>

#include "dacfake/corpus.hpp"
#include "dacfake/matrix.hpp"
#include "dacfake/textprep.hpp"

namespace dacfake {

inline constexpr const char* kFeatureRegistryVersion = "dacfake-reg-1";
inline constexpr std::size_t kFeatureCount = 80;

struct FeatureEntry {
  const char* id;
  const char* category;  // LF1..LF9
  const char* description;
};

// The fixed 80-entry registry: six character counts (LF1), ten word stats
// plus fourteen word-length buckets (LF2), eleven punctuation frequencies
// plus the function-word ratio (LF3), nine structural counts (LF4), four
// content/sentiment counts (LF5), ten readability metrics plus four
// syllable/word-size counts (LF6), and the lexicon categories (LF7-LF9).
const std::vector<FeatureEntry>& feature_registry();

// Index of a feature id in registry order; throws ConfigError if unknown.
std::size_t feature_index(const std::string& id);

// One article row in registry order. Degenerate inputs (no words, no
// sentences) yield 0 for the affected features, never NaN.
std::vector<double> compute_article_features(const std::string& text,
                                             const LexiconSet& lex);

// |corpus| x 80 matrix in corpus order, provenance LF. Requires a
// phase-1-cleaned corpus.
FeatureMatrix extract_lf(const Corpus& corpus, const LexiconSet& lex);

// ---------------------------------------------------------------------------
// Readability formulas. Every formula returns 0 when its denominators are
// degenerate (no words / no sentences).

double flesch_reading_ease(double words, double sentences, double syllables);
double flesch_kincaid_grade(double words, double sentences, double syllables);
double smog_index(double polysyllables, double sentences);
double coleman_liau_index(double letters, double words, double sentences);
double automated_readability_index(double chars, double words, double sentences);
double dale_chall_score(double difficult_words, double words, double sentences);
double linsear_write_formula(double easy_words, double hard_words, double sentences);
double gunning_fog_index(double words, double complex_words, double sentences);

struct ReadabilityScores {
  double flesch_reading_ease = 0;
  double flesch_kincaid_grade = 0;
  double smog_index = 0;
  double coleman_liau_index = 0;
  double automated_readability_index = 0;
  double dale_chall_score = 0;
  double linsear_write = 0;
  double gunning_fog = 0;
  double lexicon_count = 0;      // word tokens
  double lexical_diversity = 0;  // types / tokens
};

// Computes all ten scores from a segmented text; the counts feeding the
// formulas come from the token stream (letters/digits only, syllables from
// count_syllables, difficult words from the familiar-word list with a
// lemmatized fallback).
ReadabilityScores readability_suite(const SegmentedText& seg, const LexiconSet& lex);

// ---------------------------------------------------------------------------
// Per-class means of the report subset (quoted content, URLs, pronouns, ...)

struct Table4Row {
  std::string feature_id;
  double mean_true = 0;
  double mean_fake = 0;
};

struct Table4Report {
  std::vector<Table4Row> rows;
  std::size_t n_true = 0;
  std::size_t n_fake = 0;

  std::string to_text() const;
  std::string to_csv() const;
};

// Requires an LF-provenance matrix aligned with the corpus; throws DataError
// when a class is absent.
Table4Report table4_report(const Corpus& corpus, const FeatureMatrix& lf);

}  // namespace dacfake
