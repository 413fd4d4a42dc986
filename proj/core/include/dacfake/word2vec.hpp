#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "dacfake/matrix.hpp"

namespace dacfake {

enum class WvMode { CBOW, SG };

std::string wv_mode_name(WvMode m);
WvMode wv_mode_from_name(const std::string& name);

struct WvHyperparams {
  std::size_t dim = 100;
  std::size_t window = 5;
  std::size_t negatives = 5;
  std::size_t epochs = 5;
  double initial_lr = 0.025;
  double min_lr = 2.5e-5;      // linear-decay floor
  std::size_t max_vocab = 1000;
  std::uint64_t seed = 42;
};

struct VocabEntry {
  std::string token;
  std::uint64_t count = 0;
};

struct EmbeddingModel {
  WvMode mode = WvMode::CBOW;
  WvHyperparams hp;
  std::vector<VocabEntry> vocab;   // frequency-ranked, ties lexicographic
  Matrix input_vectors;            // |vocab| x dim
  Matrix output_vectors;           // |vocab| x dim
  std::vector<double> epoch_loss;  // mean negative-sampling loss per epoch

  // token -> dense index, or npos when out of vocabulary
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t lookup(const std::string& token) const;
  void rebuild_index();

 private:
  std::unordered_map<std::string, std::size_t> index_;
};

// Tokens ranked by total corpus frequency, ties broken lexicographically,
// top max_vocab kept. Throws DataError when every document is empty.
std::vector<VocabEntry> build_vocab(const std::vector<std::vector<std::string>>& docs,
                                    std::size_t max_vocab);

// Single-threaded SGD with negative sampling (unigram^0.75 noise); bit
// reproducible for a fixed seed. CBOW predicts the center from the mean of
// the context input vectors, SG predicts each context from the center.
EmbeddingModel train_embeddings(const std::vector<std::vector<std::string>>& docs,
                                WvMode mode, const WvHyperparams& hp);

// documents x vocabulary matrix. Default cell rule: the scalar mean of word
// j's input-vector components when word j occurs in document i, else 0.
// Pooled mode instead emits the dim-wide mean of the present words' vectors.
enum class DocVecMode { ScalarMean, Pooled };

FeatureMatrix doc_matrix(const EmbeddingModel& model,
                         const std::vector<std::vector<std::string>>& docs,
                         DocVecMode mode = DocVecMode::ScalarMean);

// JSON header + little-endian float64 blob, one file.
void save_model(const EmbeddingModel& model, const std::string& path);
EmbeddingModel load_model(const std::string& path);

// ---------------------------------------------------------------------------
// One training step, exposed so tests can check the analytic gradients
// against finite differences of ns_loss.

struct WvExample {
  std::size_t center = 0;
  std::vector<std::size_t> contexts;
  std::vector<std::size_t> negatives;
};

// Accumulated gradient for the parameter rows an example touches.
struct WvGradients {
  std::vector<std::pair<std::size_t, std::vector<double>>> d_input;
  std::vector<std::pair<std::size_t, std::vector<double>>> d_output;
};

double ns_loss(const Matrix& input, const Matrix& output, const WvExample& ex,
               WvMode mode);
WvGradients ns_gradients(const Matrix& input, const Matrix& output,
                         const WvExample& ex, WvMode mode);

}  // namespace dacfake
