#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace dacfake {

// Dense row-major matrix of 64-bit reals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const double* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }
  double* row_ptr(std::size_t r) { return data_.data() + r * cols_; }

  std::vector<double> column(std::size_t c) const;
  std::vector<double> row(std::size_t r) const;

  // new matrix keeping the given rows, in the given order
  Matrix take_rows(const std::vector<std::size_t>& idx) const;
  // new matrix keeping the given columns, in the given order
  Matrix take_cols(const std::vector<std::size_t>& idx) const;

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

enum class Provenance { LF, WVF1, WVF2, FUSED };

std::string provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

// Matrix with named columns plus the bookkeeping every stage carries along:
// where the values came from and which corpus/lexicons produced them.
struct FeatureMatrix {
  Matrix values;
  std::vector<std::string> columns;
  Provenance provenance = Provenance::LF;
  // registry version, lexicon versions, corpus hash, upstream artifact hash...
  std::map<std::string, std::string> meta;

  std::size_t rows() const { return values.rows(); }
  std::size_t cols() const { return values.cols(); }

  void check_consistent() const;  // throws DataError on shape/NaN violations
};

// CSV persistence: header = column names (+ final "label" column when labels
// are given), one row per article. A JSON sidecar <path>.meta.json carries
// provenance and the meta map.
void save_feature_matrix(const FeatureMatrix& fm, const std::vector<int>* labels,
                         const std::string& path);
FeatureMatrix load_feature_matrix(const std::string& path,
                                  std::vector<int>* labels_out);

}  // namespace dacfake
