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

#pragma once

#include <vector>

namespace pairwave {

// Tensor-product index bookkeeping.  The convention is fixed globally:
// subsystem 0 is the qutrit (dimension 3, basis order |g>, |e>, |f>),
// followed by the modes a_1..a_N, then b_1..b_N, each of dimension
// n_max + 1 (Fock basis |0>..|n_max>).  Flattened basis indices are
// row-major mixed radix: the last subsystem varies fastest.
class HilbertLayout {
 public:
  // Generic layout from raw subsystem dimensions.  Mode/qutrit accessors are
  // unavailable on layouts built this way.
  explicit HilbertLayout(std::vector<int> dims);

  // Qutrit followed by 2N resonator modes.
  static HilbertLayout qutrit_resonators(int n_pairs, int n_max);
  // The 2N resonator modes alone (reduced descriptions with the qutrit
  // factored out).
  static HilbertLayout resonators_only(int n_pairs, int n_max);
  static HilbertLayout single_mode(int n_max);

  int subsystem_count() const { return static_cast<int>(dims_.size()); }
  int dim(int k) const;
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const { return total_; }

  bool has_qutrit() const { return has_qutrit_; }
  int n_pairs() const { return n_pairs_; }
  int n_max() const { return n_max_; }

  int qutrit_index() const;
  int a_index(int j) const;  // j = 0..N-1
  int b_index(int j) const;

  // Row-major stride of subsystem k in the flattened index.
  long stride(int k) const;

  int flatten(const std::vector<int>& multi) const;
  std::vector<int> unflatten(int index) const;

  bool operator==(const HilbertLayout& other) const {
    return dims_ == other.dims_;
  }

 private:
  std::vector<int> dims_;
  std::vector<long> strides_;
  int total_ = 1;
  bool has_qutrit_ = false;
  int n_pairs_ = 0;
  int n_max_ = 0;
};

}  // namespace pairwave
