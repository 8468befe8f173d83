#include <doctest.h>

#include <random>

#include "tacsearch/kernels.hpp"

using namespace tacsearch::kernels;

namespace {

IdVector random_ids(std::mt19937& rng, int universe, std::size_t max) {
  std::vector<int> all(static_cast<std::size_t>(universe));
  for (int i = 0; i < universe; ++i) all[static_cast<std::size_t>(i)] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(rng() % (max + 1));
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

TEST_CASE("intersect_weight against a brute-force sum") {
  std::mt19937 rng(7);
  std::vector<double> w(40);
  for (double& x : w) x = std::uniform_real_distribution<double>(0, 3)(rng);
  for (int k = 0; k < 200; ++k) {
    const IdVector a = random_ids(rng, 40, 12);
    const IdVector b = random_ids(rng, 40, 12);
    double want = 0;
    for (int x : a) {
      if (std::find(b.begin(), b.end(), x) != b.end()) want += w[static_cast<std::size_t>(x)];
    }
    CHECK(intersect_weight(a, b, w) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("serial and OpenMP kernels agree exactly") {
  std::mt19937 rng(11);
  std::vector<double> w(300);
  for (double& x : w) x = std::uniform_real_distribution<double>(0, 3)(rng);
  std::vector<IdVector> vecs;
  for (int i = 0; i < 2000; ++i) vecs.push_back(random_ids(rng, 300, 30));
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < vecs.size(); i += 3) rows.push_back(i);
  const IdVector q = random_ids(rng, 300, 40);
  std::vector<double> s;
  std::vector<double> p;
  score_rows_serial(q, vecs, rows, w, s);
  score_rows_omp(q, vecs, rows, w, p);
  CHECK(s == p);
  CHECK(document_frequency_serial(vecs, 300) == document_frequency_omp(vecs, 300));
  const auto df = document_frequency_serial(vecs, 300);
  std::size_t manual = 0;
  for (const IdVector& v : vecs) manual += std::count(v.begin(), v.end(), 17);
  CHECK(df[17] == manual);
}
