// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "tacsearch/kernels.hpp"

#include <omp.h>

namespace tacsearch::kernels {

double intersect_weight(const IdVector& a, const IdVector& b, const std::vector<double>& weights) {
  double sum = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      sum += weights[static_cast<std::size_t>(a[i])];
      ++i;
      ++j;
    }
  }
  return sum;
}

void score_rows_serial(const IdVector& query, const std::vector<IdVector>& vectors,
                       const std::vector<std::size_t>& rows, const std::vector<double>& weights,
                       std::vector<double>& out) {
  out.assign(rows.size(), 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out[i] = intersect_weight(query, vectors[rows[i]], weights);
  }
}

void score_rows_omp(const IdVector& query, const std::vector<IdVector>& vectors,
                    const std::vector<std::size_t>& rows, const std::vector<double>& weights,
                    std::vector<double>& out) {
  out.assign(rows.size(), 0.0);
  const auto n = static_cast<long>(rows.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = intersect_weight(query, vectors[rows[k]], weights);
  }
}

std::vector<std::size_t> document_frequency_serial(const std::vector<IdVector>& vectors,
                                                   std::size_t n_features) {
  std::vector<std::size_t> df(n_features, 0);
  for (const IdVector& v : vectors) {
    for (int f : v) ++df[static_cast<std::size_t>(f)];
  }
  return df;
}

std::vector<std::size_t> document_frequency_omp(const std::vector<IdVector>& vectors,
                                                std::size_t n_features) {
  std::vector<std::size_t> df(n_features, 0);
  const auto n = static_cast<long>(vectors.size());
#pragma omp parallel
  {
    std::vector<std::size_t> local(n_features, 0);
#pragma omp for schedule(static) nowait
    for (long i = 0; i < n; ++i) {
      for (int f : vectors[static_cast<std::size_t>(i)]) ++local[static_cast<std::size_t>(f)];
    }
#pragma omp critical
    for (std::size_t f = 0; f < n_features; ++f) df[f] += local[f];
  }
  return df;
}

}  // namespace tacsearch::kernels
