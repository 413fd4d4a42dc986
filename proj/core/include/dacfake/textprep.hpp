#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

namespace dacfake {

// ---------------------------------------------------------------------------
// Segmentation

struct Token {
  std::string text;
  std::size_t begin = 0;  // byte offsets into the segmented string
  std::size_t end = 0;
};

struct ParagraphSpan {
  std::size_t first_sentence = 0;
  std::size_t n_sentences = 0;
};

struct SegmentedText {
  std::string chars;                     // the input, unchanged
  std::vector<std::string> sentences;    // flat, in order
  std::vector<ParagraphSpan> paragraphs; // spans into `sentences`
  std::vector<Token> tokens;             // maximal letter/digit/apostrophe runs
  std::size_t line_count = 0;            // non-blank physical lines
};

// Paragraphs split on blank lines; sentences end at . ! ? or an ellipsis
// followed by whitespace/EOL, with an abbreviation guard (Dr., Mr., single
// initials, ...). Deterministic. Throws DataError on empty input.
SegmentedText segment(const std::string& text);

// Maximal letter/digit/apostrophe runs with byte offsets; curly apostrophes
// normalize to ' and edge apostrophes are trimmed.
std::vector<Token> tokenize(const std::string& text);

// ---------------------------------------------------------------------------
// Lexicons

// Word sets backing the lexicon-driven features. Files are newline-delimited
// UTF-8 words, one per line, '#' comments allowed; a "# version: <tag>" line
// is recorded per file.
struct LexiconSet {
  std::unordered_set<std::string> stopwords;
  std::unordered_set<std::string> function_words;
  std::unordered_set<std::string> greeting_words;
  std::unordered_set<std::string> certainty_words;
  std::unordered_set<std::string> tentative_words;
  std::unordered_set<std::string> modal_verbs;
  std::unordered_set<std::string> adjectives;
  std::unordered_set<std::string> adverbs;
  std::unordered_set<std::string> affective_terms;
  std::unordered_set<std::string> positive_words;
  std::unordered_set<std::string> negative_words;
  std::unordered_set<std::string> self_references;
  std::unordered_set<std::string> group_references;
  std::unordered_set<std::string> pronouns_first;
  std::unordered_set<std::string> pronouns_second;
  std::unordered_set<std::string> pronouns_third;
  std::unordered_set<std::string> dale_chall_familiar_words;

  std::map<std::string, std::string> versions;  // file name -> version tag

  static LexiconSet load(const std::string& dir);
  static std::string default_dir();  // $DACFAKE_LEXICON_DIR or the bundled set
  std::string version_summary() const;
  void validate() const;  // throws DataError on empty sets / size floor
};

// ---------------------------------------------------------------------------
// Branch preprocessing

// LF branch: emojis and non-essential punctuation are replaced by spaces,
// keeping , " ' ` # ? @ ! . : ; and the ellipsis; curly quotes are mapped to
// their ASCII forms; horizontal whitespace collapses (newlines survive so
// line/paragraph structure stays countable). Idempotent.
std::string prep_lf(const std::string& text);

// WV branch: lowercase, strip URLs/dates/numbers/punctuation/emojis and
// stopwords, then lemmatize and stem. Stemming runs to a fixed point and the
// stopword sweep re-runs after normalization, so cleaning its own output is
// a no-op. May return an empty list.
std::vector<std::string> prep_wv(const std::string& text, const LexiconSet& lex);

// Vowel-group heuristic (a e i o u y), silent trailing 'e' discounted unless
// the word ends in consonant+"le"; never less than 1. Case-insensitive.
int count_syllables(const std::string& word);

// Classic Porter (1980) suffix stripper, lowercase input.
std::string porter_stem(const std::string& word);

// Small rule-table lemmatizer: plural -> singular plus -ing/-ed stripping
// with an e-restore/undouble list. Runs before the stemmer in prep_wv.
std::string lemmatize(const std::string& word);

// ---------------------------------------------------------------------------
// Shared character helpers (UTF-8, approximate Unicode classes)

namespace utf8 {
// Decodes the codepoint starting at `i`, advancing `i` past it. Invalid
// bytes decode as U+FFFD and advance by one.
char32_t decode(const std::string& s, std::size_t& i);
void encode(char32_t cp, std::string& out);
bool is_letter(char32_t cp);
bool is_emoji(char32_t cp);
}  // namespace utf8

}  // namespace dacfake
