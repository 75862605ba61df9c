// Copyright 2026 The pairwave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pairwave/hilbert_layout.hpp"

#include <stdexcept>
#include <string>

namespace pairwave {

namespace {
constexpr long kMaxTotalDim = 1L << 24;
}

HilbertLayout::HilbertLayout(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("HilbertLayout: empty dims");
  long total = 1;
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("HilbertLayout: dimension < 1");
    total *= d;
    if (total > kMaxTotalDim)
      throw std::invalid_argument("HilbertLayout: total dimension too large");
  }
  total_ = static_cast<int>(total);
  strides_.assign(dims_.size(), 1);
  for (int k = static_cast<int>(dims_.size()) - 2; k >= 0; --k)
    strides_[k] = strides_[k + 1] * dims_[k + 1];
}

HilbertLayout HilbertLayout::qutrit_resonators(int n_pairs, int n_max) {
  if (n_pairs < 1) throw std::invalid_argument("qutrit_resonators: n_pairs < 1");
  if (n_max < 1) throw std::invalid_argument("qutrit_resonators: n_max < 1");
  std::vector<int> dims(1 + 2 * n_pairs, n_max + 1);
  dims[0] = 3;
  HilbertLayout layout(std::move(dims));
  layout.has_qutrit_ = true;
  layout.n_pairs_ = n_pairs;
  layout.n_max_ = n_max;
  return layout;
}

HilbertLayout HilbertLayout::resonators_only(int n_pairs, int n_max) {
  if (n_pairs < 1) throw std::invalid_argument("resonators_only: n_pairs < 1");
  if (n_max < 1) throw std::invalid_argument("resonators_only: n_max < 1");
  HilbertLayout layout(std::vector<int>(2 * n_pairs, n_max + 1));
  layout.n_pairs_ = n_pairs;
  layout.n_max_ = n_max;
  return layout;
}

HilbertLayout HilbertLayout::single_mode(int n_max) {
  if (n_max < 1) throw std::invalid_argument("single_mode: n_max < 1");
  HilbertLayout layout(std::vector<int>{n_max + 1});
  layout.n_max_ = n_max;
  return layout;
}

int HilbertLayout::dim(int k) const {
  if (k < 0 || k >= subsystem_count())
    throw std::out_of_range("HilbertLayout::dim: bad subsystem index");
  return dims_[k];
}

int HilbertLayout::qutrit_index() const {
  if (!has_qutrit_)
    throw std::logic_error("HilbertLayout: layout has no qutrit factor");
  return 0;
}

int HilbertLayout::a_index(int j) const {
  if (n_pairs_ == 0)
    throw std::logic_error("HilbertLayout: layout has no mode metadata");
  if (j < 0 || j >= n_pairs_)
    throw std::out_of_range("HilbertLayout::a_index: bad pair index");
  return (has_qutrit_ ? 1 : 0) + j;
}

int HilbertLayout::b_index(int j) const {
  if (n_pairs_ == 0)
    throw std::logic_error("HilbertLayout: layout has no mode metadata");
  if (j < 0 || j >= n_pairs_)
    throw std::out_of_range("HilbertLayout::b_index: bad pair index");
  return (has_qutrit_ ? 1 : 0) + n_pairs_ + j;
}

long HilbertLayout::stride(int k) const {
  if (k < 0 || k >= subsystem_count())
    throw std::out_of_range("HilbertLayout::stride: bad subsystem index");
  return strides_[k];
}

int HilbertLayout::flatten(const std::vector<int>& multi) const {
  if (static_cast<int>(multi.size()) != subsystem_count())
    throw std::invalid_argument("HilbertLayout::flatten: rank mismatch");
  long index = 0;
  for (int k = 0; k < subsystem_count(); ++k) {
    if (multi[k] < 0 || multi[k] >= dims_[k])
      throw std::out_of_range("HilbertLayout::flatten: index " +
                              std::to_string(multi[k]) + " out of range for subsystem " +
                              std::to_string(k));
    index += multi[k] * strides_[k];
  }
  return static_cast<int>(index);
}

std::vector<int> HilbertLayout::unflatten(int index) const {
  if (index < 0 || index >= total_)
    throw std::out_of_range("HilbertLayout::unflatten: index out of range");
  std::vector<int> multi(subsystem_count());
  long rem = index;
  for (int k = 0; k < subsystem_count(); ++k) {
    multi[k] = static_cast<int>(rem / strides_[k]);
    rem %= strides_[k];
  }
  return multi;
}

}  // namespace pairwave
