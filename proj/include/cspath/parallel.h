#ifndef CSPATH_PARALLEL_H_
#define CSPATH_PARALLEL_H_

#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace cspath {

// Fixed set of W workers executing bulk maps over an index range. Worker w
// always receives the w-th contiguous chunk of [0, n), so anything a worker
// appends to its own slot, concatenated in worker order, equals the
// sequential result regardless of W.
class WorkerPool {
 public:
  explicit WorkerPool(int workers);
  ~WorkerPool();

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  int size() const { return workers_; }

  using ChunkFn = std::function<void(int worker, int64_t begin, int64_t end)>;

  // Blocks until every chunk is done. Rethrows the first worker exception.
  void ForEachChunk(int64_t n, const ChunkFn& fn);

  // Each worker calls emit(i, slot) for its indices; slots are concatenated
  // in worker order.
  template <typename T, typename Emit>
  std::vector<T> Gather(int64_t n, Emit emit) {
    std::vector<std::vector<T>> slots(workers_);
    ForEachChunk(n, [&](int worker, int64_t begin, int64_t end) {
      for (int64_t i = begin; i < end; ++i) emit(i, slots[worker]);
    });
    if (workers_ == 1) return std::move(slots[0]);
    size_t total = 0;
    for (const auto& s : slots) total += s.size();
    std::vector<T> out;
    out.reserve(total);
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    return out;
  }

  template <typename Body>
  void For(int64_t n, Body body) {
    ForEachChunk(n, [&](int, int64_t begin, int64_t end) {
      for (int64_t i = begin; i < end; ++i) body(i);
    });
  }

 private:
  void WorkerLoop(int worker);
  void RunChunk(int worker);

  int workers_;
  std::vector<std::thread> threads_;
  std::mutex mu_;
  std::condition_variable start_cv_;
  std::condition_variable done_cv_;
  uint64_t generation_ = 0;
  int pending_ = 0;
  bool stop_ = false;
  int64_t n_ = 0;
  const ChunkFn* fn_ = nullptr;
  std::exception_ptr error_;
};

}  // namespace cspath

#endif  // CSPATH_PARALLEL_H_
