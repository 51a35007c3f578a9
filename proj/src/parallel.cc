#include "cspath/parallel.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cspath {
namespace {

// Below this size the whole range runs on the calling thread. Chunk order is
// unchanged, so results do not depend on it.
constexpr int64_t kInlineThreshold = 512;

}  // namespace

WorkerPool::WorkerPool(int workers) : workers_(workers) {
  if (workers < 1) throw std::invalid_argument("worker count must be >= 1");
  threads_.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) threads_.emplace_back([this, w] { WorkerLoop(w); });
}

WorkerPool::~WorkerPool() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    stop_ = true;
  }
  start_cv_.notify_all();
  for (std::thread& t : threads_) t.join();
}

void WorkerPool::RunChunk(int worker) {
  const int64_t begin = n_ * worker / workers_;
  const int64_t end = n_ * (worker + 1) / workers_;
  if (begin == end) return;
  try {
    (*fn_)(worker, begin, end);
  } catch (...) {
    std::lock_guard<std::mutex> lock(mu_);
    if (!error_) error_ = std::current_exception();
  }
}

void WorkerPool::WorkerLoop(int worker) {
  uint64_t seen = 0;
  for (;;) {
    {
      std::unique_lock<std::mutex> lock(mu_);
      start_cv_.wait(lock, [&] { return stop_ || generation_ != seen; });
      if (stop_) return;
      seen = generation_;
    }
    RunChunk(worker);
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (--pending_ == 0) done_cv_.notify_one();
    }
  }
}

void WorkerPool::ForEachChunk(int64_t n, const ChunkFn& fn) {
  if (n <= 0) return;
  if (workers_ == 1 || n < kInlineThreshold) {
    // Same partition, run in worker order on this thread.
    for (int w = 0; w < workers_; ++w) {
      const int64_t begin = n * w / workers_;
      const int64_t end = n * (w + 1) / workers_;
      if (begin != end) fn(w, begin, end);
    }
    return;
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    n_ = n;
    fn_ = &fn;
    error_ = nullptr;
    pending_ = workers_ - 1;
    ++generation_;
  }
  start_cv_.notify_all();
  RunChunk(0);
  std::unique_lock<std::mutex> lock(mu_);
  done_cv_.wait(lock, [&] { return pending_ == 0; });
  fn_ = nullptr;
  if (error_) std::rethrow_exception(std::exchange(error_, nullptr));
}

}  // namespace cspath
