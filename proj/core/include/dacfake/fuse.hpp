#pragma once

#include <string>
#include <vector>

#include "dacfake/matrix.hpp"
#include "dacfake/word2vec.hpp"

namespace dacfake {

enum class ScalerMode { MinMax, ZScore };

std::string scaler_mode_name(ScalerMode m);
ScalerMode scaler_mode_from_name(const std::string& name);

// Conquer-phase knobs. Min-max scaling runs before the Pearson prune and a
// z-score standardization runs after it, in front of the classifier; either
// step can be forced to one scaler.
struct FusionSpec {
  WvMode wv_mode = WvMode::SG;
  ScalerMode pre_scaler = ScalerMode::MinMax;
  ScalerMode post_scaler = ScalerMode::ZScore;
  double corr_threshold = 0.7;

  void validate() const;  // threshold in (0,1)
};

// Column-wise concatenation, LF columns first, provenance FUSED. Throws
// DataError on row-count mismatch or when both sides carry different
// corpus hashes.
FeatureMatrix concat(const FeatureMatrix& lf, const FeatureMatrix& wvf);

// Fitted per-column parameters, reusable on held-out rows.
struct ScalerParams {
  ScalerMode mode = ScalerMode::MinMax;
  std::vector<double> p0;  // minmax: min,  zscore: mean
  std::vector<double> p1;  // minmax: max,  zscore: population sigma
};

ScalerParams fit_scaler(const Matrix& m, ScalerMode mode);
// minmax: (x-min)/(max-min), constant columns -> 0 (unclamped on new data);
// zscore: (x-mu)/sigma, sigma=0 columns -> 0.
Matrix apply_scaler(const ScalerParams& params, const Matrix& m);

// Population Pearson correlation; 0 when either side is constant. The
// denominator is one sqrt of the variance product, so rho(x,x) is exactly 1.
// Throws DataError on length mismatch or length < 2.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

struct DropEntry {
  std::string dropped;
  std::string kept;
  double rho = 0;
};

struct PruneResult {
  std::vector<std::size_t> kept;  // surviving column indices, ascending
  std::vector<DropEntry> drop_log;

  std::string drop_log_json() const;
};

// Greedy pass over column pairs in index order: whenever |rho| exceeds the
// threshold and both columns are still alive, the one whose correlation with
// the labels is weaker is dropped (ties drop the higher index). After the
// pass no surviving pair exceeds the threshold.
PruneResult prune_correlated(const FeatureMatrix& m, const std::vector<int>& labels,
                             double threshold);

FeatureMatrix select_columns(const FeatureMatrix& m,
                             const std::vector<std::size_t>& kept);

}  // namespace dacfake
