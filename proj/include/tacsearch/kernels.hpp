// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstddef>
#include <vector>

// Similarity and document-frequency kernels over sorted feature-id vectors.
// The serial versions are the reference; the OpenMP versions must agree with
// them exactly (every output element is computed by the same sequential
// summation, only the loop over rows is split).
namespace tacsearch::kernels {

using IdVector = std::vector<int>;

// Sum of weights[f] over f in a ∩ b.
double intersect_weight(const IdVector& a, const IdVector& b, const std::vector<double>& weights);

// out[i] = intersect_weight(query, vectors[rows[i]]).
void score_rows_serial(const IdVector& query, const std::vector<IdVector>& vectors,
                       const std::vector<std::size_t>& rows, const std::vector<double>& weights,
                       std::vector<double>& out);
void score_rows_omp(const IdVector& query, const std::vector<IdVector>& vectors,
                    const std::vector<std::size_t>& rows, const std::vector<double>& weights,
                    std::vector<double>& out);

// Number of vectors containing each feature id in [0, n_features).
std::vector<std::size_t> document_frequency_serial(const std::vector<IdVector>& vectors,
                                                   std::size_t n_features);
std::vector<std::size_t> document_frequency_omp(const std::vector<IdVector>& vectors,
                                                std::size_t n_features);

}  // namespace tacsearch::kernels
