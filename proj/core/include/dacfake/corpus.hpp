#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dacfake {

// One labeled news document. `label` is -1 until the label mapping step of
// phase1_clean runs; afterwards it is 0 (true) or 1 (fake).
struct Article {
  std::int64_t id = 0;
  std::string title;
  std::string text;
  std::string label_raw;
  int label = -1;
};

struct IngestReport {
  std::size_t rows_read = 0;       // data rows in the file
  std::size_t skipped = 0;         // malformed rows (wrong cell count)
  // phase-1 drop counts, per rule
  std::size_t dropped_duplicate = 0;
  std::size_t dropped_error_page = 0;
  std::size_t dropped_missing = 0; // empty text or label after cleaning
  std::size_t ad_sentences_removed = 0;  // sentences cut, not whole articles

  std::string to_json() const;
};

struct Corpus {
  std::vector<Article> articles;
  std::string source_name;
  IngestReport ingest_report;
  bool phase1_done = false;

  std::size_t size() const { return articles.size(); }
  // Content hash used to chain artifacts; stable across runs.
  std::string content_hash() const;
};

// Column-name mapping from the CSV header to article fields.
struct CsvSchema {
  std::string text_col = "text";
  std::string title_col = "title";  // empty string = no title column
  std::string label_col = "label";
  bool concat_title = false;  // prepend title to text ("title. text")
};

// Raw label string -> {0,1}. Keys are matched case-insensitively after
// trimming. Defaults cover fake/true, FAKE/REAL and 1/0 encodings.
struct LabelMap {
  std::map<std::string, int> mapping;

  static LabelMap defaults();
  std::optional<int> map(const std::string& raw) const;
};

// Phase-1 junk-sentence rules. A sentence containing any `ad_phrases` entry
// is cut from the article; an article containing any `error_page_phrases`
// entry is dropped whole. Matching is case-insensitive substring.
struct JunkPhrases {
  std::vector<std::string> ad_phrases;
  std::vector<std::string> error_page_phrases;

  static JunkPhrases defaults();
  // One phrase per line; lines starting with "ad:" or "page:" select the
  // list, '#' comments ignored.
  static JunkPhrases load(const std::string& path);
};

// Reads the CSV into a corpus. Phase-1 cleaning is NOT applied here.
// Throws SchemaError when a mapped column is missing; malformed rows are
// counted in ingest_report.skipped, never silently dropped.
Corpus ingest_csv(const std::string& path, const CsvSchema& schema);

// Applies the phase-1 rules in order: (1) drop exact duplicate texts keeping
// the first, (2) cut ad-phrase sentences, (3) drop error-page articles,
// (4) map labels, (5) drop rows with missing text or label. Idempotent.
// Throws DataError listing label values outside the mapping.
Corpus phase1_clean(const Corpus& corpus, const LabelMap& labels = LabelMap::defaults(),
                    const JunkPhrases& junk = JunkPhrases::defaults());

// Minimal RFC-4180 reader (quoted cells, embedded commas/newlines, "" escape).
// Exposed for reuse by the CLI's batch predict.
std::vector<std::vector<std::string>> parse_csv(const std::string& content);

}  // namespace dacfake
