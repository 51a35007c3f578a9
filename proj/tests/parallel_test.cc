#include "cspath/parallel.h"

#include <atomic>
#include <numeric>
#include <stdexcept>

#include <gtest/gtest.h>

namespace cspath {
namespace {

TEST(WorkerPool, GatherMatchesSequentialOrder) {
  const int64_t n = 100'000;
  std::vector<int64_t> expected;
  for (int64_t i = 0; i < n; ++i) {
    if (i % 7 == 3) expected.push_back(i * 2);
  }
  for (int w : {1, 2, 3, 4, 16}) {
    WorkerPool pool(w);
    const std::vector<int64_t> got = pool.Gather<int64_t>(n, [](int64_t i, std::vector<int64_t>& s) {
      if (i % 7 == 3) s.push_back(i * 2);
    });
    EXPECT_EQ(got, expected) << "W=" << w;
  }
}

TEST(WorkerPool, ChunksPartitionTheRange) {
  WorkerPool pool(4);
  for (int64_t n : {0, 1, 511, 512, 10'000}) {
    std::vector<std::atomic<int>> hits(n);
    pool.For(n, [&](int64_t i) { hits[i].fetch_add(1); });
    for (int64_t i = 0; i < n; ++i) ASSERT_EQ(hits[i].load(), 1) << "n=" << n << " i=" << i;
  }
}

TEST(WorkerPool, ContiguousChunksInWorkerOrder) {
  WorkerPool pool(4);
  std::vector<std::pair<int64_t, int64_t>> ranges(4, {-1, -1});
  pool.ForEachChunk(4000, [&](int w, int64_t b, int64_t e) { ranges[w] = {b, e}; });
  for (int w = 0; w < 4; ++w) {
    EXPECT_EQ(ranges[w].first, 4000 * w / 4);
    EXPECT_EQ(ranges[w].second, 4000 * (w + 1) / 4);
  }
}

TEST(WorkerPool, RethrowsWorkerException) {
  WorkerPool pool(4);
  EXPECT_THROW(pool.For(10'000,
                        [](int64_t i) {
                          if (i == 9'000) throw std::runtime_error("boom");
                        }),
               std::runtime_error);
  // Still usable afterwards.
  std::atomic<int64_t> sum{0};
  pool.For(1000, [&](int64_t i) { sum += i; });
  EXPECT_EQ(sum.load(), 999 * 1000 / 2);
}

TEST(WorkerPool, ManyRounds) {
  WorkerPool pool(8);
  for (int round = 0; round < 200; ++round) {
    const std::vector<int> got =
        pool.Gather<int>(2048, [](int64_t i, std::vector<int>& s) { s.push_back(static_cast<int>(i)); });
    ASSERT_EQ(got.size(), 2048u);
    ASSERT_EQ(got.back(), 2047);
  }
}

}  // namespace
}  // namespace cspath
