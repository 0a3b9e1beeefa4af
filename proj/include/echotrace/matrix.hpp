#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>
#include <span>
#include <thread>
#include <vector>

#include "errors.hpp"

namespace echotrace {

// Dense row-major matrix of doubles. Only the kernels the training loop
// needs are provided; every reduction runs in a fixed serial order per output
// element, so results are bit-identical for any thread count.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    double* data() noexcept { return data_.data(); }
    const double* data() const noexcept { return data_.data(); }

    bool all_finite() const {
        for (double v : data_) {
            if (!std::isfinite(v)) return false;
        }
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

namespace detail {

inline std::atomic<int>& thread_count() {
    static std::atomic<int> n{1};
    return n;
}

// Splits [0, n) into contiguous blocks, one worker thread per block. Each
// output row is owned by exactly one thread and accumulated in the serial
// order, which is what keeps parallel results bit-identical to serial ones.
template <typename F>
void parallel_blocks(std::size_t n, F&& body) {
    int want = thread_count().load(std::memory_order_relaxed);
    if (want <= 1 || n < 2) {
        body(std::size_t{0}, n);
        return;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(want), n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] { body(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

} // namespace detail

inline void set_max_threads(int n) { detail::thread_count().store(n < 1 ? 1 : n); }
inline int max_threads() { return detail::thread_count().load(); }

// C = A * B^T with A (m x k), B (n x k); both operands walk contiguous rows.
inline Matrix multiply_abt(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) {
        throw domain_error("multiply_abt: inner dimension mismatch");
    }
    const std::size_t m = a.rows(), n = b.rows(), k = a.cols();
    Matrix c(m, n);
    detail::parallel_blocks(m, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const double* ai = a.data() + i * k;
            double* ci = c.data() + i * n;
            for (std::size_t j = 0; j < n; ++j) {
                const double* bj = b.data() + j * k;
                double s = 0.0;
                for (std::size_t t = 0; t < k; ++t) s += ai[t] * bj[t];
                ci[j] = s;
            }
        }
    });
    return c;
}

// C = A * B with A (m x k), B (k x n); k-ordered accumulation into C rows.
inline Matrix multiply_ab(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw domain_error("multiply_ab: inner dimension mismatch");
    }
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    Matrix c(m, n);
    detail::parallel_blocks(m, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const double* ai = a.data() + i * k;
            double* ci = c.data() + i * n;
            for (std::size_t t = 0; t < k; ++t) {
                const double av = ai[t];
                const double* bt = b.data() + t * n;
                for (std::size_t j = 0; j < n; ++j) ci[j] += av * bt[j];
            }
        }
    });
    return c;
}

// C = A^T * B with A (r x m), B (r x n); the r-loop stays outermost inside
// each block so every C element accumulates in ascending row order.
inline Matrix multiply_atb(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) {
        throw domain_error("multiply_atb: row count mismatch");
    }
    const std::size_t r = a.rows(), m = a.cols(), n = b.cols();
    Matrix c(m, n);
    detail::parallel_blocks(m, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t t = 0; t < r; ++t) {
            const double* at = a.data() + t * m;
            const double* bt = b.data() + t * n;
            for (std::size_t i = lo; i < hi; ++i) {
                const double av = at[i];
                double* ci = c.data() + i * n;
                for (std::size_t j = 0; j < n; ++j) ci[j] += av * bt[j];
            }
        }
    });
    return c;
}

} // namespace echotrace
