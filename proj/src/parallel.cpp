#include "entdetect/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace entdetect {

int max_threads() {
  int count = static_cast<int>(std::thread::hardware_concurrency());
  if (count < 1) {
    count = 1;
  }
  if (const char* env = std::getenv("ED_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1 && cap < count) {
        count = cap;
      }
    } catch (const std::exception&) {
      // Unparseable values leave the default in place.
    }
  }
  return count;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  if (n <= 0) {
    return;
  }
  const int workers = std::min(max_threads(), n);
  if (workers == 1) {
    for (int i = 0; i < n; ++i) {
      fn(i);
    }
    return;
  }

  std::atomic<int> next(0);
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= n) {
        return;
      }
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) {
          error = std::current_exception();
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back(body);
  }
  for (std::thread& t : pool) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

}  // namespace entdetect
