// Copyright 2026 The Kantian Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KANTIAN_MATRIX_H_
#define KANTIAN_MATRIX_H_

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace kantian {

// Small dense row-major square matrix.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int size) : size_(size), data_(size * size, 0.0) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows)
      : size_(static_cast<int>(rows.size())) {
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != size_) {
        throw std::invalid_argument("matrix must be square");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  int size() const { return size_; }
  double& operator()(int r, int c) { return data_[r * size_ + c]; }
  double operator()(int r, int c) const { return data_[r * size_ + c]; }

  Matrix Transposed() const {
    Matrix t(size_);
    for (int r = 0; r < size_; ++r) {
      for (int c = 0; c < size_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  // (A + A^T) / 2.
  Matrix Symmetrized() const {
    Matrix s(size_);
    for (int r = 0; r < size_; ++r) {
      for (int c = 0; c < size_; ++c) {
        s(r, c) = 0.5 * ((*this)(r, c) + (*this)(c, r));
      }
    }
    return s;
  }

  double QuadraticForm(std::span<const double> x) const {
    double value = 0.0;
    for (int r = 0; r < size_; ++r) {
      if (x[r] == 0.0) continue;
      double row = 0.0;
      for (int c = 0; c < size_; ++c) row += (*this)(r, c) * x[c];
      value += x[r] * row;
    }
    return value;
  }

 private:
  int size_ = 0;
  std::vector<double> data_;
};

}  // namespace kantian

#endif  // KANTIAN_MATRIX_H_
