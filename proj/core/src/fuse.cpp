#include "dacfake/fuse.hpp"

#include <cmath>

#include <json.hpp>

#include "dacfake/error.hpp"
#include "dacfake/util.hpp"

namespace dacfake {

std::string scaler_mode_name(ScalerMode m) {
  return m == ScalerMode::MinMax ? "minmax" : "zscore";
}

ScalerMode scaler_mode_from_name(const std::string& name) {
  std::string n = to_lower(name);
  if (n == "minmax") return ScalerMode::MinMax;
  if (n == "zscore" || n == "standard") return ScalerMode::ZScore;
  throw ConfigError("unknown scaler: " + name);
}

void FusionSpec::validate() const {
  if (!(corr_threshold > 0.0 && corr_threshold < 1.0))
    throw ConfigError("corr threshold must lie in (0,1), got " +
                      std::to_string(corr_threshold));
}

FeatureMatrix concat(const FeatureMatrix& lf, const FeatureMatrix& wvf) {
  if (lf.rows() != wvf.rows())
    throw DataError("concat: row mismatch (" + std::to_string(lf.rows()) +
                    " vs " + std::to_string(wvf.rows()) + ")");
  auto hash_of = [](const FeatureMatrix& fm) {
    auto it = fm.meta.find("corpus_hash");
    return it == fm.meta.end() ? std::string() : it->second;
  };
  std::string ha = hash_of(lf), hb = hash_of(wvf);
  if (!ha.empty() && !hb.empty() && ha != hb)
    throw DataError("concat: corpus hash mismatch (" + ha + " vs " + hb + ")");

  FeatureMatrix out;
  out.provenance = Provenance::FUSED;
  out.columns = lf.columns;
  out.columns.insert(out.columns.end(), wvf.columns.begin(), wvf.columns.end());
  out.values = Matrix(lf.rows(), lf.cols() + wvf.cols());
  for (std::size_t r = 0; r < lf.rows(); ++r) {
    for (std::size_t c = 0; c < lf.cols(); ++c)
      out.values.at(r, c) = lf.values.at(r, c);
    for (std::size_t c = 0; c < wvf.cols(); ++c)
      out.values.at(r, lf.cols() + c) = wvf.values.at(r, c);
  }
  out.meta = lf.meta;
  for (const auto& [k, v] : wvf.meta) out.meta.emplace(k, v);
  if (!ha.empty()) out.meta["corpus_hash"] = ha;
  else if (!hb.empty()) out.meta["corpus_hash"] = hb;
  out.check_consistent();
  return out;
}

ScalerParams fit_scaler(const Matrix& m, ScalerMode mode) {
  ScalerParams p;
  p.mode = mode;
  p.p0.resize(m.cols());
  p.p1.resize(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (mode == ScalerMode::MinMax) {
      double lo = m.rows() ? m.at(0, c) : 0, hi = lo;
      for (std::size_t r = 1; r < m.rows(); ++r) {
        lo = std::min(lo, m.at(r, c));
        hi = std::max(hi, m.at(r, c));
      }
      p.p0[c] = lo;
      p.p1[c] = hi;
    } else {
      double mean = 0;
      for (std::size_t r = 0; r < m.rows(); ++r) mean += m.at(r, c);
      if (m.rows()) mean /= static_cast<double>(m.rows());
      double var = 0;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        double d = m.at(r, c) - mean;
        var += d * d;
      }
      if (m.rows()) var /= static_cast<double>(m.rows());
      p.p0[c] = mean;
      p.p1[c] = std::sqrt(var);
    }
  }
  return p;
}

Matrix apply_scaler(const ScalerParams& params, const Matrix& m) {
  if (m.cols() != params.p0.size())
    throw DataError("scaler fitted on " + std::to_string(params.p0.size()) +
                    " columns, applied to " + std::to_string(m.cols()));
  Matrix out(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (params.mode == ScalerMode::MinMax) {
      double lo = params.p0[c], range = params.p1[c] - params.p0[c];
      for (std::size_t r = 0; r < m.rows(); ++r)
        out.at(r, c) = range != 0 ? (m.at(r, c) - lo) / range : 0.0;
    } else {
      double mean = params.p0[c], sigma = params.p1[c];
      for (std::size_t r = 0; r < m.rows(); ++r)
        out.at(r, c) = sigma != 0 ? (m.at(r, c) - mean) / sigma : 0.0;
    }
  }
  return out;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size())
    throw DataError("pearson: length mismatch (" + std::to_string(x.size()) +
                    " vs " + std::to_string(y.size()) + ")");
  if (x.size() < 2) throw DataError("pearson: need at least 2 samples");

  double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0 || syy == 0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

namespace {

struct StdColumn {
  std::vector<double> centered;
  double norm = 0;  // sqrt(sum of squares); 0 marks a constant column
};

StdColumn standardize(const Matrix& m, std::size_t c) {
  StdColumn out;
  out.centered.resize(m.rows());
  double mean = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) mean += m.at(r, c);
  mean /= static_cast<double>(m.rows());
  double ss = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double d = m.at(r, c) - mean;
    out.centered[r] = d;
    ss += d * d;
  }
  out.norm = std::sqrt(ss);
  return out;
}

}  // namespace

PruneResult prune_correlated(const FeatureMatrix& m, const std::vector<int>& labels,
                             double threshold) {
  if (labels.size() != m.rows())
    throw DataError("prune: labels do not match matrix rows");
  std::size_t cols = m.cols();
  PruneResult result;
  if (m.rows() < 2) {
    for (std::size_t c = 0; c < cols; ++c) result.kept.push_back(c);
    return result;
  }

  std::vector<StdColumn> z(cols);
  for (std::size_t c = 0; c < cols; ++c) z[c] = standardize(m.values, c);

  std::vector<double> label_col(labels.begin(), labels.end());
  std::vector<double> label_corr(cols);
  for (std::size_t c = 0; c < cols; ++c)
    label_corr[c] = std::abs(pearson(m.values.column(c), label_col));

  std::vector<bool> alive(cols, true);
  for (std::size_t i = 0; i < cols; ++i) {
    if (!alive[i]) continue;
    for (std::size_t j = i + 1; j < cols; ++j) {
      if (!alive[j]) continue;
      double rho = 0;
      if (z[i].norm != 0 && z[j].norm != 0) {
        double s = 0;
        const double* a = z[i].centered.data();
        const double* b = z[j].centered.data();
        for (std::size_t r = 0; r < m.rows(); ++r) s += a[r] * b[r];
        rho = s / (z[i].norm * z[j].norm);
      }
      if (std::abs(rho) <= threshold) continue;

      // weaker label correlation loses; ties drop the higher index
      std::size_t victim = label_corr[i] < label_corr[j] ? i : j;
      std::size_t kept = victim == i ? j : i;
      result.drop_log.push_back(
          {m.columns[victim], m.columns[kept], rho});
      alive[victim] = false;
      if (victim == i) break;
    }
  }

  for (std::size_t c = 0; c < cols; ++c)
    if (alive[c]) result.kept.push_back(c);
  return result;
}

FeatureMatrix select_columns(const FeatureMatrix& m,
                             const std::vector<std::size_t>& kept) {
  FeatureMatrix out;
  out.provenance = m.provenance;
  out.meta = m.meta;
  out.values = m.values.take_cols(kept);
  for (std::size_t c : kept) out.columns.push_back(m.columns[c]);
  out.check_consistent();
  return out;
}

std::string PruneResult::drop_log_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : drop_log)
    j.push_back({{"dropped", e.dropped}, {"kept", e.kept}, {"rho", e.rho}});
  return j.dump(2);
}

}  // namespace dacfake
