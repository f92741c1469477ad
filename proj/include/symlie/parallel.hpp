#pragma once

// Minimal deterministic data parallelism.  Results are always gathered in
// index order, so output never depends on the thread count.

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace symlie {

/// Worker count: SYMLIE_THREADS if set, else the hardware concurrency.
inline unsigned thread_count()
{
	if (const char *env = std::getenv("SYMLIE_THREADS")) {
		int n = std::atoi(env);
		if (n >= 1)
			return static_cast<unsigned>(n);
	}
	unsigned hw = std::thread::hardware_concurrency();
	return hw == 0 ? 1 : hw;
}

/// Calls f(i) for i in [0, n) and returns the results in index order.
template <class F>
auto parallel_map(std::size_t n, F &&f) -> std::vector<decltype(f(std::size_t{}))>
{
	using R = decltype(f(std::size_t{}));
	std::vector<R> out(n);
	unsigned workers = thread_count();
	if (workers <= 1 || n < 2) {
		for (std::size_t i = 0; i < n; ++i)
			out[i] = f(i);
		return out;
	}
	if (workers > n)
		workers = static_cast<unsigned>(n);
	std::vector<std::exception_ptr> errors(workers);
	std::vector<std::thread> pool;
	for (unsigned w = 0; w < workers; ++w)
		pool.emplace_back([&, w] {
			try {
				for (std::size_t i = w; i < n; i += workers)
					out[i] = f(i);
			} catch (...) {
				errors[w] = std::current_exception();
			}
		});
	for (auto &t : pool)
		t.join();
	for (auto &e : errors)
		if (e)
			std::rethrow_exception(e);
	return out;
}

} // namespace symlie
