#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "dacfake/matrix.hpp"
#include "dacfake/util.hpp"

namespace dacfake {

// Shared CART-style grower used by the tree classifier, the bagged
// ensembles and the boosting stages. Classification splits maximize entropy
// gain, regression splits maximize summed-squared-error reduction;
// thresholds are midpoints between consecutive distinct sorted values.

struct TreeNode {
  std::int32_t feature = -1;  // -1 marks a leaf
  double threshold = 0;
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  double w0 = 0;          // weighted class-0 mass (classification)
  double w1 = 0;          // weighted class-1 mass
  double leaf_value = 0;  // regression mean (or boosted leaf step)
};

struct TreeParams {
  std::size_t max_depth = std::numeric_limits<std::size_t>::max();
  std::size_t min_samples_split = 2;
  std::size_t min_samples_leaf = 1;
  std::size_t max_features = 0;    // 0 = consider every feature
  bool random_thresholds = false;  // extra-trees style split drawing
};

// Sorted row order per feature; built once per matrix and shared across the
// trees of an ensemble.
struct FeaturePresort {
  std::vector<std::vector<std::uint32_t>> order;
};
FeaturePresort build_presort(const Matrix& x);

class DecisionTree {
 public:
  // weights may be null (all ones). rng is only consulted for feature
  // subsampling / random thresholds; pass nullptr for the exact full scan.
  void fit_classification(const Matrix& x, const std::vector<int>& y,
                          const std::vector<double>* weights,
                          const TreeParams& params, Rng* rng,
                          const FeaturePresort* presort = nullptr);
  void fit_regression(const Matrix& x, const std::vector<double>& targets,
                      const std::vector<double>* weights,
                      const TreeParams& params, Rng* rng,
                      const FeaturePresort* presort = nullptr);

  std::size_t leaf_index(const double* row) const;
  // classification: weighted class masses at the reached leaf
  void leaf_counts(const double* row, double* w0, double* w1) const;
  double predict_value(const double* row) const;

  std::vector<TreeNode>& nodes() { return nodes_; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  bool empty() const { return nodes_.empty(); }

 private:
  std::vector<TreeNode> nodes_;
};

}  // namespace dacfake
