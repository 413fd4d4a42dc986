#include "dacfake/corpus.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "dacfake/error.hpp"
#include "dacfake/util.hpp"

namespace dacfake {

std::string IngestReport::to_json() const {
  nlohmann::json j;
  j["rows_read"] = rows_read;
  j["skipped"] = skipped;
  j["dropped_duplicate"] = dropped_duplicate;
  j["dropped_error_page"] = dropped_error_page;
  j["dropped_missing"] = dropped_missing;
  j["ad_sentences_removed"] = ad_sentences_removed;
  return j.dump(2);
}

std::string Corpus::content_hash() const {
  std::uint64_t h = fnv1a64(source_name);
  for (const auto& a : articles) {
    h = fnv1a64(a.title, h);
    h = fnv1a64("\x1f", h);
    h = fnv1a64(a.text, h);
    h = fnv1a64("\x1f", h);
    h = fnv1a64(std::to_string(a.label), h);
    h = fnv1a64("\x1e", h);
  }
  return hash_hex(h);
}

std::vector<std::vector<std::string>> parse_csv(const std::string& content) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool in_quotes = false;
  bool cell_started = false;

  auto end_cell = [&] {
    row.push_back(std::move(cell));
    cell.clear();
    cell_started = false;
  };
  auto end_row = [&] {
    end_cell();
    rows.push_back(std::move(row));
    row.clear();
  };

  for (std::size_t i = 0; i < content.size(); ++i) {
    char c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cell.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!cell_started && cell.empty()) {
          in_quotes = true;
          cell_started = true;
        } else {
          cell.push_back(c);  // stray quote mid-cell, keep literally
        }
        break;
      case ',':
        end_cell();
        break;
      case '\r':
        if (i + 1 < content.size() && content[i + 1] == '\n') ++i;
        end_row();
        break;
      case '\n':
        end_row();
        break;
      default:
        cell.push_back(c);
        cell_started = true;
    }
  }
  // last line without trailing newline
  if (!cell.empty() || cell_started || !row.empty()) end_row();
  return rows;
}

LabelMap LabelMap::defaults() {
  LabelMap m;
  m.mapping = {{"fake", 1}, {"true", 0}, {"real", 0}, {"1", 1}, {"0", 0}};
  return m;
}

std::optional<int> LabelMap::map(const std::string& raw) const {
  auto it = mapping.find(to_lower(trim(raw)));
  if (it == mapping.end()) return std::nullopt;
  return it->second;
}

JunkPhrases JunkPhrases::defaults() {
  JunkPhrases j;
  j.ad_phrases = {"your ads will be inserted here"};
  j.error_page_phrases = {"page not found 404 error", "404 error page not found"};
  return j;
}

JunkPhrases JunkPhrases::load(const std::string& path) {
  JunkPhrases j;
  for (const auto& raw : split(read_file(path), '\n')) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (starts_with(line, "ad:"))
      j.ad_phrases.push_back(to_lower(trim(line.substr(3))));
    else if (starts_with(line, "page:"))
      j.error_page_phrases.push_back(to_lower(trim(line.substr(5))));
    else
      j.ad_phrases.push_back(to_lower(line));
  }
  if (j.ad_phrases.empty() && j.error_page_phrases.empty())
    throw ConfigError("junk-phrase file has no phrases: " + path);
  return j;
}

Corpus ingest_csv(const std::string& path, const CsvSchema& schema) {
  auto rows = parse_csv(read_file(path));
  if (rows.empty()) throw SchemaError("csv has no header row: " + path);

  const auto& header = rows.front();
  auto find_col = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (trim(header[i]) == name) return i;
    throw SchemaError("missing column '" + name + "' in " + path);
  };

  std::size_t text_idx = find_col(schema.text_col);
  std::size_t label_idx = find_col(schema.label_col);
  bool has_title = !schema.title_col.empty();
  std::size_t title_idx = 0;
  if (has_title) {
    // tolerate datasets without a title column unless it is the text source
    bool found = false;
    for (std::size_t i = 0; i < header.size(); ++i)
      if (trim(header[i]) == schema.title_col) {
        title_idx = i;
        found = true;
        break;
      }
    if (!found) {
      if (schema.concat_title)
        throw SchemaError("missing column '" + schema.title_col + "' in " + path);
      has_title = false;
    }
  }

  Corpus corpus;
  corpus.source_name = path;
  std::int64_t next_id = 0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    corpus.ingest_report.rows_read++;
    if (cells.size() != header.size()) {
      corpus.ingest_report.skipped++;
      continue;
    }
    Article a;
    a.id = next_id++;
    a.text = cells[text_idx];
    a.label_raw = cells[label_idx];
    if (has_title) a.title = cells[title_idx];
    if (schema.concat_title && !a.title.empty())
      a.text = a.title + ". " + a.text;
    corpus.articles.push_back(std::move(a));
  }
  return corpus;
}

namespace {

bool contains_ci(const std::string& haystack_lower, const std::string& needle_lower) {
  return haystack_lower.find(needle_lower) != std::string::npos;
}

// Cuts every sentence containing one of the (lowercase) phrases. Sentences
// end at . ! ? or a newline; good enough for junk removal, the real
// segmenter lives in textprep.
std::string remove_ad_sentences(const std::string& text,
                                const std::vector<std::string>& phrases,
                                std::size_t* removed) {
  std::string out;
  out.reserve(text.size());
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    bool boundary = i == text.size() || text[i] == '.' || text[i] == '!' ||
                    text[i] == '?' || text[i] == '\n';
    if (!boundary) continue;
    std::size_t end = i < text.size() ? i + 1 : i;
    std::string sentence = text.substr(start, end - start);
    std::string lower = to_lower(sentence);
    bool junk = false;
    for (const auto& p : phrases)
      if (contains_ci(lower, p)) {
        junk = true;
        break;
      }
    if (junk)
      ++*removed;
    else
      out += sentence;
    start = end;
  }
  return out;
}

}  // namespace

Corpus phase1_clean(const Corpus& corpus, const LabelMap& labels,
                    const JunkPhrases& junk) {
  Corpus out;
  out.source_name = corpus.source_name;
  out.ingest_report = corpus.ingest_report;
  out.phase1_done = true;

  std::vector<std::string> ad_lower, page_lower;
  for (const auto& p : junk.ad_phrases) ad_lower.push_back(to_lower(p));
  for (const auto& p : junk.error_page_phrases) page_lower.push_back(to_lower(p));

  std::unordered_set<std::string> seen_texts;
  std::set<std::string> bad_labels;
  std::vector<Article> survivors;

  for (const auto& src : corpus.articles) {
    // rule 1: exact duplicate text (whitespace-trimmed), keep first
    std::string key = trim(src.text);
    if (!seen_texts.insert(key).second) {
      out.ingest_report.dropped_duplicate++;
      continue;
    }

    Article a = src;

    // rule 2: cut ad sentences
    if (!ad_lower.empty())
      a.text = remove_ad_sentences(a.text, ad_lower,
                                   &out.ingest_report.ad_sentences_removed);

    // rule 3: drop error-page articles
    std::string lower = to_lower(a.text);
    bool is_error_page = false;
    for (const auto& p : page_lower)
      if (contains_ci(lower, p)) {
        is_error_page = true;
        break;
      }
    if (is_error_page) {
      out.ingest_report.dropped_error_page++;
      continue;
    }

    // rule 4: label mapping (already-mapped labels pass through, so the
    // whole pass is idempotent)
    if (a.label != 0 && a.label != 1) {
      std::string raw = trim(a.label_raw);
      if (!raw.empty()) {
        auto mapped = labels.map(raw);
        if (mapped)
          a.label = *mapped;
        else
          bad_labels.insert(raw);
      }
    }

    // rule 5: drop rows with missing text or label (unmappable labels are
    // collected above and reported as an error after the pass)
    if (trim(a.text).empty() || (a.label != 0 && a.label != 1)) {
      out.ingest_report.dropped_missing++;
      continue;
    }

    survivors.push_back(std::move(a));
  }

  if (!bad_labels.empty()) {
    std::string msg = "label values outside the configured mapping:";
    for (const auto& v : bad_labels) msg += " '" + v + "'";
    throw DataError(msg);
  }

  out.articles = std::move(survivors);
  return out;
}

}  // namespace dacfake
