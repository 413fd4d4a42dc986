#include "dacfake/word2vec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <map>

#include <json.hpp>

#include "dacfake/error.hpp"
#include "dacfake/util.hpp"

static_assert(std::endian::native == std::endian::little,
              "model blob format assumes a little-endian host");

namespace dacfake {

std::string wv_mode_name(WvMode m) { return m == WvMode::CBOW ? "cbow" : "sg"; }

WvMode wv_mode_from_name(const std::string& name) {
  std::string n = to_lower(name);
  if (n == "cbow" || n == "wvf1") return WvMode::CBOW;
  if (n == "sg" || n == "skipgram" || n == "skip-gram" || n == "wvf2")
    return WvMode::SG;
  throw ConfigError("unknown word-vector mode: " + name);
}

std::size_t EmbeddingModel::lookup(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? npos : it->second;
}

void EmbeddingModel::rebuild_index() {
  index_.clear();
  for (std::size_t i = 0; i < vocab.size(); ++i) index_[vocab[i].token] = i;
}

std::vector<VocabEntry> build_vocab(const std::vector<std::vector<std::string>>& docs,
                                    std::size_t max_vocab) {
  std::map<std::string, std::uint64_t> counts;  // ordered: stable tie-break
  for (const auto& doc : docs)
    for (const auto& tok : doc) ++counts[tok];
  if (counts.empty())
    throw DataError("cannot build a vocabulary: all documents are empty");

  std::vector<VocabEntry> entries;
  entries.reserve(counts.size());
  for (const auto& [tok, n] : counts) entries.push_back({tok, n});
  std::stable_sort(entries.begin(), entries.end(),
                   [](const VocabEntry& a, const VocabEntry& b) {
                     return a.count > b.count;  // ties keep lexicographic order
                   });
  if (entries.size() > max_vocab) entries.resize(max_vocab);
  return entries;
}

namespace {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

inline double dot(const double* a, const double* b, std::size_t n) {
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

// -log sigmoid(x), stable for large negative x
inline double log_sigmoid_loss(double x) {
  if (x > 0) return std::log1p(std::exp(-x));
  return -x + std::log1p(std::exp(x));
}

std::vector<std::size_t> build_noise_table(const std::vector<VocabEntry>& vocab,
                                           std::size_t table_size) {
  std::vector<std::size_t> table(table_size);
  double total = 0;
  for (const auto& e : vocab) total += std::pow(static_cast<double>(e.count), 0.75);
  std::size_t idx = 0;
  double cum = std::pow(static_cast<double>(vocab[0].count), 0.75) / total;
  for (std::size_t i = 0; i < table_size; ++i) {
    table[i] = idx;
    if (static_cast<double>(i) / static_cast<double>(table_size) > cum &&
        idx + 1 < vocab.size()) {
      ++idx;
      cum += std::pow(static_cast<double>(vocab[idx].count), 0.75) / total;
    }
  }
  return table;
}

}  // namespace

double ns_loss(const Matrix& input, const Matrix& output, const WvExample& ex,
               WvMode mode) {
  std::size_t dim = input.cols();
  double loss = 0;
  if (mode == WvMode::CBOW) {
    if (ex.contexts.empty()) return 0;
    std::vector<double> h(dim, 0);
    for (std::size_t c : ex.contexts) {
      const double* v = input.row_ptr(c);
      for (std::size_t k = 0; k < dim; ++k) h[k] += v[k];
    }
    for (double& v : h) v /= static_cast<double>(ex.contexts.size());
    loss += log_sigmoid_loss(dot(h.data(), output.row_ptr(ex.center), dim));
    for (std::size_t n : ex.negatives)
      loss += log_sigmoid_loss(-dot(h.data(), output.row_ptr(n), dim));
  } else {
    const double* v = input.row_ptr(ex.center);
    for (std::size_t o : ex.contexts) {
      loss += log_sigmoid_loss(dot(v, output.row_ptr(o), dim));
      for (std::size_t n : ex.negatives)
        loss += log_sigmoid_loss(-dot(v, output.row_ptr(n), dim));
    }
  }
  return loss;
}

namespace {

// accumulate g into the (sparse) gradient slot for row r
std::vector<double>* grad_slot(
    std::vector<std::pair<std::size_t, std::vector<double>>>* grads,
    std::size_t r, std::size_t dim) {
  for (auto& [row, g] : *grads)
    if (row == r) return &g;
  grads->emplace_back(r, std::vector<double>(dim, 0));
  return &grads->back().second;
}

}  // namespace

WvGradients ns_gradients(const Matrix& input, const Matrix& output,
                         const WvExample& ex, WvMode mode) {
  std::size_t dim = input.cols();
  WvGradients grads;
  if (mode == WvMode::CBOW) {
    if (ex.contexts.empty()) return grads;
    double inv_c = 1.0 / static_cast<double>(ex.contexts.size());
    std::vector<double> h(dim, 0);
    for (std::size_t c : ex.contexts) {
      const double* v = input.row_ptr(c);
      for (std::size_t k = 0; k < dim; ++k) h[k] += v[k];
    }
    for (double& v : h) v *= inv_c;

    std::vector<double> dh(dim, 0);
    auto accumulate = [&](std::size_t target, double label) {
      const double* out = output.row_ptr(target);
      double g = sigmoid(dot(h.data(), out, dim)) - label;
      std::vector<double>* dout = grad_slot(&grads.d_output, target, dim);
      for (std::size_t k = 0; k < dim; ++k) {
        (*dout)[k] += g * h[k];
        dh[k] += g * out[k];
      }
    };
    accumulate(ex.center, 1.0);
    for (std::size_t n : ex.negatives) accumulate(n, 0.0);

    for (std::size_t c : ex.contexts) {
      std::vector<double>* din = grad_slot(&grads.d_input, c, dim);
      for (std::size_t k = 0; k < dim; ++k) (*din)[k] += inv_c * dh[k];
    }
  } else {
    const double* v = input.row_ptr(ex.center);
    std::vector<double>* dv = grad_slot(&grads.d_input, ex.center, dim);
    for (std::size_t o : ex.contexts) {
      auto accumulate = [&](std::size_t target, double label) {
        const double* out = output.row_ptr(target);
        double g = sigmoid(dot(v, out, dim)) - label;
        std::vector<double>* dout = grad_slot(&grads.d_output, target, dim);
        for (std::size_t k = 0; k < dim; ++k) {
          (*dout)[k] += g * v[k];
          (*dv)[k] += g * out[k];
        }
      };
      accumulate(o, 1.0);
      for (std::size_t n : ex.negatives) accumulate(n, 0.0);
    }
  }
  return grads;
}

EmbeddingModel train_embeddings(const std::vector<std::vector<std::string>>& docs,
                                WvMode mode, const WvHyperparams& hp) {
  if (hp.dim < 2) throw ConfigError("embedding dim must be >= 2");

  EmbeddingModel model;
  model.mode = mode;
  model.hp = hp;
  model.vocab = build_vocab(docs, hp.max_vocab);
  model.rebuild_index();
  if (model.vocab.empty()) throw DataError("empty vocabulary");

  std::size_t v = model.vocab.size();
  std::size_t dim = hp.dim;
  Rng rng(hp.seed);

  model.input_vectors = Matrix(v, dim);
  model.output_vectors = Matrix(v, dim);  // zero-initialized
  for (std::size_t r = 0; r < v; ++r)
    for (std::size_t k = 0; k < dim; ++k)
      model.input_vectors.at(r, k) =
          (rng.next_double() - 0.5) / static_cast<double>(dim);

  // documents as dense vocab indices, OOV dropped
  std::vector<std::vector<std::size_t>> encoded;
  encoded.reserve(docs.size());
  std::size_t total_tokens = 0;
  for (const auto& doc : docs) {
    std::vector<std::size_t> ids;
    ids.reserve(doc.size());
    for (const auto& tok : doc) {
      std::size_t id = model.lookup(tok);
      if (id != EmbeddingModel::npos) ids.push_back(id);
    }
    total_tokens += ids.size();
    encoded.push_back(std::move(ids));
  }

  const std::size_t table_size = 1u << 20;
  std::vector<std::size_t> noise = build_noise_table(model.vocab, table_size);

  Matrix& in = model.input_vectors;
  Matrix& out = model.output_vectors;
  std::vector<double> h(dim), dh(dim);

  double processed = 0;
  double schedule_total =
      static_cast<double>(hp.epochs) * static_cast<double>(total_tokens) + 1.0;

  for (std::size_t epoch = 0; epoch < hp.epochs; ++epoch) {
    double loss_sum = 0;
    std::size_t steps = 0;
    for (const auto& doc : encoded) {
      for (std::size_t pos = 0; pos < doc.size(); ++pos) {
        double lr = hp.initial_lr * (1.0 - processed / schedule_total);
        lr = std::max(lr, hp.min_lr);
        processed += 1;

        // classic shrinking window: effective extent in [1, window]
        std::size_t shrink = hp.window > 0
                                 ? static_cast<std::size_t>(rng.next_below(hp.window))
                                 : 0;
        std::size_t extent = hp.window - shrink;
        std::size_t lo = pos >= extent ? pos - extent : 0;
        std::size_t hi = std::min(doc.size(), pos + extent + 1);
        std::size_t center = doc[pos];

        auto draw_negatives = [&](std::size_t avoid) {
          std::vector<std::size_t> negs;
          negs.reserve(hp.negatives);
          for (std::size_t k = 0; k < hp.negatives; ++k) {
            std::size_t cand = noise[rng.next_below(table_size)];
            if (cand == avoid) continue;  // skip, as in the classic trainer
            negs.push_back(cand);
          }
          return negs;
        };

        if (mode == WvMode::CBOW) {
          WvExample ex;
          ex.center = center;
          for (std::size_t p = lo; p < hi; ++p)
            if (p != pos) ex.contexts.push_back(doc[p]);
          if (ex.contexts.empty()) continue;
          ex.negatives = draw_negatives(center);

          double inv_c = 1.0 / static_cast<double>(ex.contexts.size());
          std::fill(h.begin(), h.end(), 0.0);
          for (std::size_t c : ex.contexts) {
            const double* iv = in.row_ptr(c);
            for (std::size_t k = 0; k < dim; ++k) h[k] += iv[k];
          }
          for (double& x : h) x *= inv_c;
          std::fill(dh.begin(), dh.end(), 0.0);

          auto update = [&](std::size_t target, double label) {
            double* ov = out.row_ptr(target);
            double z = dot(h.data(), ov, dim);
            double g = sigmoid(z) - label;
            loss_sum += label > 0.5 ? log_sigmoid_loss(z) : log_sigmoid_loss(-z);
            for (std::size_t k = 0; k < dim; ++k) {
              dh[k] += g * ov[k];
              ov[k] -= lr * g * h[k];
            }
          };
          update(ex.center, 1.0);
          for (std::size_t n : ex.negatives) update(n, 0.0);

          for (std::size_t c : ex.contexts) {
            double* iv = in.row_ptr(c);
            for (std::size_t k = 0; k < dim; ++k) iv[k] -= lr * inv_c * dh[k];
          }
          ++steps;
        } else {
          double* v0 = in.row_ptr(center);
          for (std::size_t p = lo; p < hi; ++p) {
            if (p == pos) continue;
            std::size_t context = doc[p];
            std::vector<std::size_t> negs = draw_negatives(context);

            std::fill(dh.begin(), dh.end(), 0.0);
            auto update = [&](std::size_t target, double label) {
              double* ov = out.row_ptr(target);
              double z = dot(v0, ov, dim);
              double g = sigmoid(z) - label;
              loss_sum += label > 0.5 ? log_sigmoid_loss(z) : log_sigmoid_loss(-z);
              for (std::size_t k = 0; k < dim; ++k) {
                dh[k] += g * ov[k];
                ov[k] -= lr * g * v0[k];
              }
            };
            update(context, 1.0);
            for (std::size_t n : negs) update(n, 0.0);
            for (std::size_t k = 0; k < dim; ++k) v0[k] -= lr * dh[k];
            ++steps;
          }
        }
      }
    }
    model.epoch_loss.push_back(steps > 0 ? loss_sum / static_cast<double>(steps)
                                         : 0.0);
  }
  return model;
}

FeatureMatrix doc_matrix(const EmbeddingModel& model,
                         const std::vector<std::vector<std::string>>& docs,
                         DocVecMode mode) {
  std::size_t v = model.vocab.size();
  std::size_t dim = model.input_vectors.cols();

  FeatureMatrix fm;
  fm.provenance = model.mode == WvMode::CBOW ? Provenance::WVF1 : Provenance::WVF2;

  std::uint64_t oov = 0;
  if (mode == DocVecMode::ScalarMean) {
    // scalar mean over the components of each word's input vector
    std::vector<double> means(v, 0);
    for (std::size_t j = 0; j < v; ++j) {
      double s = 0;
      for (std::size_t k = 0; k < dim; ++k) s += model.input_vectors.at(j, k);
      means[j] = s / static_cast<double>(dim);
    }
    fm.values = Matrix(docs.size(), v);
    for (std::size_t j = 0; j < v; ++j)
      fm.columns.push_back("wv_" + model.vocab[j].token);
    for (std::size_t i = 0; i < docs.size(); ++i) {
      for (const auto& tok : docs[i]) {
        std::size_t j = model.lookup(tok);
        if (j == EmbeddingModel::npos) {
          ++oov;
          continue;
        }
        fm.values.at(i, j) = means[j];
      }
    }
  } else {
    fm.values = Matrix(docs.size(), dim);
    for (std::size_t k = 0; k < dim; ++k)
      fm.columns.push_back("wvpool_" + std::to_string(k));
    for (std::size_t i = 0; i < docs.size(); ++i) {
      std::size_t hits = 0;
      for (const auto& tok : docs[i]) {
        std::size_t j = model.lookup(tok);
        if (j == EmbeddingModel::npos) {
          ++oov;
          continue;
        }
        ++hits;
        for (std::size_t k = 0; k < dim; ++k)
          fm.values.at(i, k) += model.input_vectors.at(j, k);
      }
      if (hits > 0)
        for (std::size_t k = 0; k < dim; ++k)
          fm.values.at(i, k) /= static_cast<double>(hits);
    }
  }

  fm.meta["oov_tokens"] = std::to_string(oov);
  fm.meta["doc_vec_mode"] = mode == DocVecMode::ScalarMean ? "scalar" : "pooled";
  fm.meta["wv_mode"] = wv_mode_name(model.mode);
  fm.check_consistent();
  return fm;
}

// ---------------------------------------------------------------------------
// Persistence: "DACVEC1\n" magic, u64 header length, JSON header, raw LE
// float64 blob (input rows then output rows).

void save_model(const EmbeddingModel& model, const std::string& path) {
  nlohmann::json hdr;
  hdr["mode"] = wv_mode_name(model.mode);
  hdr["dim"] = model.hp.dim;
  hdr["window"] = model.hp.window;
  hdr["negatives"] = model.hp.negatives;
  hdr["epochs"] = model.hp.epochs;
  hdr["initial_lr"] = model.hp.initial_lr;
  hdr["min_lr"] = model.hp.min_lr;
  hdr["max_vocab"] = model.hp.max_vocab;
  hdr["seed"] = model.hp.seed;
  hdr["epoch_loss"] = model.epoch_loss;
  nlohmann::json vocab = nlohmann::json::array();
  for (const auto& e : model.vocab) vocab.push_back({e.token, e.count});
  hdr["vocab"] = vocab;

  std::string header = hdr.dump();
  std::string out = "DACVEC1\n";
  std::uint64_t len = header.size();
  out.append(reinterpret_cast<const char*>(&len), sizeof(len));
  out += header;

  auto append_blob = [&](const Matrix& m) {
    out.append(reinterpret_cast<const char*>(m.data().data()),
               m.data().size() * sizeof(double));
  };
  append_blob(model.input_vectors);
  append_blob(model.output_vectors);
  write_file(path, out);
}

EmbeddingModel load_model(const std::string& path) {
  std::string raw = read_file(path);
  const std::string magic = "DACVEC1\n";
  if (raw.size() < magic.size() + 8 || raw.compare(0, magic.size(), magic) != 0)
    throw DataError("not a model file: " + path);
  std::uint64_t len = 0;
  std::memcpy(&len, raw.data() + magic.size(), sizeof(len));
  std::size_t header_start = magic.size() + sizeof(len);
  if (header_start + len > raw.size())
    throw DataError("model header is truncated: " + path);

  nlohmann::json hdr;
  try {
    hdr = nlohmann::json::parse(raw.substr(header_start, len));
  } catch (const nlohmann::json::exception& e) {
    throw DataError("bad model header in " + path + ": " + e.what());
  }

  EmbeddingModel model;
  model.mode = wv_mode_from_name(hdr.at("mode").get<std::string>());
  model.hp.dim = hdr.at("dim").get<std::size_t>();
  model.hp.window = hdr.at("window").get<std::size_t>();
  model.hp.negatives = hdr.at("negatives").get<std::size_t>();
  model.hp.epochs = hdr.at("epochs").get<std::size_t>();
  model.hp.initial_lr = hdr.at("initial_lr").get<double>();
  model.hp.min_lr = hdr.at("min_lr").get<double>();
  model.hp.max_vocab = hdr.at("max_vocab").get<std::size_t>();
  model.hp.seed = hdr.at("seed").get<std::uint64_t>();
  if (hdr.contains("epoch_loss"))
    model.epoch_loss = hdr["epoch_loss"].get<std::vector<double>>();
  for (const auto& e : hdr.at("vocab"))
    model.vocab.push_back({e.at(0).get<std::string>(), e.at(1).get<std::uint64_t>()});
  model.rebuild_index();

  std::size_t v = model.vocab.size();
  std::size_t dim = model.hp.dim;
  std::size_t blob_start = header_start + len;
  std::size_t expect = 2 * v * dim * sizeof(double);
  if (raw.size() - blob_start != expect)
    throw DataError("model blob length mismatch in " + path + ": have " +
                    std::to_string(raw.size() - blob_start) + " bytes, want " +
                    std::to_string(expect));

  model.input_vectors = Matrix(v, dim);
  model.output_vectors = Matrix(v, dim);
  std::memcpy(model.input_vectors.data().data(), raw.data() + blob_start,
              v * dim * sizeof(double));
  std::memcpy(model.output_vectors.data().data(),
              raw.data() + blob_start + v * dim * sizeof(double),
              v * dim * sizeof(double));
  if (!model.input_vectors.all_finite() || !model.output_vectors.all_finite())
    throw DataError("model blob contains non-finite values: " + path);
  return model;
}

}  // namespace dacfake
