#include "dacfake/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dacfake/error.hpp"
#include "dacfake/util.hpp"

namespace dacfake {

std::vector<double> Matrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

std::vector<double> Matrix::row(std::size_t r) const {
  return std::vector<double>(row_ptr(r), row_ptr(r) + cols_);
}

Matrix Matrix::take_rows(const std::vector<std::size_t>& idx) const {
  Matrix out(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) out.at(i, c) = at(idx[i], c);
  return out;
}

Matrix Matrix::take_cols(const std::vector<std::size_t>& idx) const {
  Matrix out(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < idx.size(); ++i) out.at(r, i) = at(r, idx[i]);
  return out;
}

bool Matrix::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::LF: return "LF";
    case Provenance::WVF1: return "WVF1";
    case Provenance::WVF2: return "WVF2";
    case Provenance::FUSED: return "FUSED";
  }
  return "LF";
}

Provenance provenance_from_name(const std::string& name) {
  if (name == "LF") return Provenance::LF;
  if (name == "WVF1") return Provenance::WVF1;
  if (name == "WVF2") return Provenance::WVF2;
  if (name == "FUSED") return Provenance::FUSED;
  throw DataError("unknown provenance: " + name);
}

void FeatureMatrix::check_consistent() const {
  if (columns.size() != values.cols())
    throw DataError("feature matrix: " + std::to_string(columns.size()) +
                    " column names for " + std::to_string(values.cols()) +
                    " columns");
  std::set<std::string> seen;
  for (const auto& c : columns)
    if (!seen.insert(c).second)
      throw DataError("feature matrix: duplicate column name '" + c + "'");
  if (!values.all_finite())
    throw DataError("feature matrix contains NaN or Inf");
}

namespace {

// shortest representation that round-trips a double
std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  double back = 0;
  std::sscanf(buf, "%lf", &back);
  if (back == v) {
    for (int prec = 1; prec < 17; ++prec) {
      char shorter[32];
      std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
      std::sscanf(shorter, "%lf", &back);
      if (back == v) return shorter;
    }
  }
  return buf;
}

}  // namespace

void save_feature_matrix(const FeatureMatrix& fm, const std::vector<int>* labels,
                         const std::string& path) {
  fm.check_consistent();
  if (labels && labels->size() != fm.rows())
    throw DataError("label count does not match matrix rows");

  std::ostringstream csv;
  for (std::size_t c = 0; c < fm.columns.size(); ++c) {
    if (c) csv << ',';
    csv << fm.columns[c];
  }
  if (labels) csv << (fm.columns.empty() ? "label" : ",label");
  csv << '\n';
  for (std::size_t r = 0; r < fm.rows(); ++r) {
    for (std::size_t c = 0; c < fm.cols(); ++c) {
      if (c) csv << ',';
      csv << format_double(fm.values.at(r, c));
    }
    if (labels) {
      if (fm.cols()) csv << ',';
      csv << (*labels)[r];
    }
    csv << '\n';
  }
  write_file(path, csv.str());

  nlohmann::json side;
  side["provenance"] = provenance_name(fm.provenance);
  side["rows"] = fm.rows();
  side["cols"] = fm.cols();
  side["has_label_column"] = labels != nullptr;
  side["meta"] = fm.meta;
  write_file(path + ".meta.json", side.dump(2) + "\n");
}

FeatureMatrix load_feature_matrix(const std::string& path,
                                  std::vector<int>* labels_out) {
  nlohmann::json side;
  try {
    side = nlohmann::json::parse(read_file(path + ".meta.json"));
  } catch (const nlohmann::json::exception& e) {
    throw DataError("bad sidecar for " + path + ": " + e.what());
  }
  bool has_label = side.value("has_label_column", false);

  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty feature csv: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> header = split(line, ',');
  if (has_label) {
    if (header.empty() || header.back() != "label")
      throw DataError("expected trailing label column in " + path);
    header.pop_back();
  }

  FeatureMatrix fm;
  fm.columns = header;
  fm.provenance = provenance_from_name(side.value("provenance", "LF"));
  if (side.contains("meta"))
    fm.meta = side["meta"].get<std::map<std::string, std::string>>();

  std::vector<double> data;
  std::vector<int> labels;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split(line, ',');
    std::size_t expect = header.size() + (has_label ? 1 : 0);
    if (cells.size() != expect)
      throw DataError("row " + std::to_string(rows + 1) + " in " + path +
                      " has " + std::to_string(cells.size()) + " cells, want " +
                      std::to_string(expect));
    for (std::size_t c = 0; c < header.size(); ++c)
      data.push_back(std::stod(cells[c]));
    if (has_label) labels.push_back(std::stoi(cells.back()));
    ++rows;
  }

  Matrix m(rows, header.size());
  m.data() = std::move(data);
  fm.values = std::move(m);
  fm.check_consistent();
  if (labels_out) *labels_out = std::move(labels);
  return fm;
}

}  // namespace dacfake
