// Times the expansion kernels: the OpenMP product and batch paths against
// the serial references, on growing workloads.

#include <chrono>
#include <iostream>
#include <random>

#include "prem/reduced.hpp"
#include "prem/series.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

prem::FreeWord random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> idx(1, rank);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<int> letters;
  letters.reserve(len);
  for (int k = 0; k < len; ++k) letters.push_back(idx(rng) * (sgn(rng) ? 1 : -1));
  return prem::FreeWord(rank, letters);
}

void bench_series_product(int rank, int cap, int word_len) {
  std::mt19937 rng(7);
  const prem::TruncatedSeries a =
      prem::magnus_expand(random_word(rng, rank, word_len), cap);
  const prem::TruncatedSeries b =
      prem::magnus_expand(random_word(rng, rank, word_len), cap);

  auto t0 = Clock::now();
  const auto serial = a.mul_serial(b);
  const double ts = seconds_since(t0);

  t0 = Clock::now();
  const auto parallel = a * b;
  const double tp = seconds_since(t0);

  if (serial != parallel) {
    std::cerr << "MISMATCH between serial and parallel product\n";
    std::exit(1);
  }
  std::cout << "series product   rank=" << rank << " cap=" << cap
            << " terms=" << a.terms().size() << "x" << b.terms().size()
            << "  serial " << ts << "s  parallel " << tp << "s\n";
}

void bench_batch(int rank, int cap, int count, int word_len) {
  std::mt19937 rng(11);
  std::vector<prem::FreeWord> words;
  words.reserve(count);
  for (int k = 0; k < count; ++k) words.push_back(random_word(rng, rank, word_len));

  auto t0 = Clock::now();
  const auto serial = prem::magnus_expand_batch_serial(words, cap);
  const double ts = seconds_since(t0);

  t0 = Clock::now();
  const auto parallel = prem::magnus_expand_batch(words, cap);
  const double tp = seconds_since(t0);

  for (std::size_t k = 0; k < words.size(); ++k)
    if (serial[k] != parallel[k]) {
      std::cerr << "MISMATCH in batch expansion\n";
      std::exit(1);
    }
  std::cout << "batch expansion  rank=" << rank << " cap=" << cap << " n="
            << count << " len=" << word_len << "  serial " << ts
            << "s  parallel " << tp << "s\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; both columns run serially\n";
#endif
  bench_series_product(4, 5, 60);
  bench_series_product(5, 6, 80);
  bench_series_product(6, 6, 100);
  bench_batch(4, 4, 400, 40);
  bench_batch(5, 5, 200, 60);
  return 0;
}
