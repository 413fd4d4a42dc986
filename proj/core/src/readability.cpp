#include <cmath>
#include <unordered_set>

#include "dacfake/features.hpp"
#include "dacfake/util.hpp"

namespace dacfake {

// Constants are the published ones for each index; sources in README.

double flesch_reading_ease(double words, double sentences, double syllables) {
  if (words < 1 || sentences < 1) return 0;
  return 206.835 - 1.015 * (words / sentences) - 84.6 * (syllables / words);
}

double flesch_kincaid_grade(double words, double sentences, double syllables) {
  if (words < 1 || sentences < 1) return 0;
  return 0.39 * (words / sentences) + 11.8 * (syllables / words) - 15.59;
}

double smog_index(double polysyllables, double sentences) {
  if (sentences < 1) return 0;
  return 1.0430 * std::sqrt(polysyllables * 30.0 / sentences) + 3.1291;
}

double coleman_liau_index(double letters, double words, double sentences) {
  if (words < 1) return 0;
  double l = letters / words * 100.0;     // letters per 100 words
  double s = sentences / words * 100.0;   // sentences per 100 words
  return 0.0588 * l - 0.296 * s - 15.8;
}

double automated_readability_index(double chars, double words, double sentences) {
  if (words < 1 || sentences < 1) return 0;
  return 4.71 * (chars / words) + 0.5 * (words / sentences) - 21.43;
}

double dale_chall_score(double difficult_words, double words, double sentences) {
  if (words < 1 || sentences < 1) return 0;
  double pct_difficult = difficult_words / words * 100.0;
  double score = 0.1579 * pct_difficult + 0.0496 * (words / sentences);
  if (pct_difficult > 5.0) score += 3.6365;
  return score;
}

double linsear_write_formula(double easy_words, double hard_words, double sentences) {
  if (sentences < 1 || easy_words + hard_words < 1) return 0;
  double points = (easy_words + 3.0 * hard_words) / sentences;
  return points > 20.0 ? points / 2.0 : (points - 2.0) / 2.0;
}

double gunning_fog_index(double words, double complex_words, double sentences) {
  if (words < 1 || sentences < 1) return 0;
  return 0.4 * (words / sentences + 100.0 * complex_words / words);
}

ReadabilityScores readability_suite(const SegmentedText& seg, const LexiconSet& lex) {
  ReadabilityScores out;
  double sentences = static_cast<double>(seg.sentences.size());

  double words = 0, syllables = 0, letters = 0, chars = 0;
  double polysyll = 0, difficult = 0, easy = 0, hard = 0;
  std::unordered_set<std::string> types;

  for (const auto& tok : seg.tokens) {
    ++words;
    std::string lower;
    lower.reserve(tok.text.size());
    bool has_letter = false, all_digits = true;
    for (char c : tok.text) {
      if (is_alpha(c)) {
        has_letter = true;
        all_digits = false;
        ++letters;
        ++chars;
        lower.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
      } else if (is_digit(c)) {
        ++chars;
      } else {
        all_digits = false;
      }
    }
    types.insert(to_lower(tok.text));

    int syl = has_letter ? count_syllables(lower) : 1;
    syllables += syl;
    if (syl >= 3)
      ++polysyll, ++hard;
    else
      ++easy;

    // numbers count as familiar; otherwise the word or its lemma must be on
    // the familiar list
    if (has_letter && !all_digits && !lex.dale_chall_familiar_words.count(lower) &&
        !lex.dale_chall_familiar_words.count(lemmatize(lower)))
      ++difficult;
  }

  out.lexicon_count = words;
  out.lexical_diversity = words > 0 ? static_cast<double>(types.size()) / words : 0;
  out.flesch_reading_ease = flesch_reading_ease(words, sentences, syllables);
  out.flesch_kincaid_grade = flesch_kincaid_grade(words, sentences, syllables);
  out.smog_index = smog_index(polysyll, sentences);
  out.coleman_liau_index = coleman_liau_index(letters, words, sentences);
  out.automated_readability_index =
      automated_readability_index(chars, words, sentences);
  out.dale_chall_score = dale_chall_score(difficult, words, sentences);
  out.linsear_write = words > 0 ? linsear_write_formula(easy, hard, sentences) : 0;
  out.gunning_fog = gunning_fog_index(words, polysyll, sentences);
  return out;
}

}  // namespace dacfake
