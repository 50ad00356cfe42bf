#include "schurkit/sampling.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>
#include <vector>

namespace schurkit {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0xA0761D6478BD642Full * (index + 1));
    return splitmix64(s);
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::uniform01() {
    // 53 random bits into (0, 1)
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::gaussian() {
    double u1 = uniform01();
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::complex<double> Rng::gaussian_complex() {
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-std::log(u1));
    return {r * std::cos(2.0 * std::numbers::pi * u2),
            r * std::sin(2.0 * std::numbers::pi * u2)};
}

Eigen::VectorXcd Rng::unit_complex_vector(int dim) {
    Eigen::VectorXcd v(dim);
    do {
        for (int i = 0; i < dim; ++i)
            v(i) = gaussian_complex();
    } while (v.norm() < 1e-12);
    return v / v.norm();
}

Eigen::MatrixXcd Rng::gaussian_complex_matrix(int rows, int cols) {
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = gaussian_complex();
    return m;
}

Eigen::MatrixXcd Rng::random_unitary(int dim) {
    Eigen::MatrixXcd g = gaussian_complex_matrix(dim, dim);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    // normalize the phase so the factorization is unique
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        std::complex<double> d = r(i, i);
        if (std::abs(d) > 0)
            q.col(i) *= d / std::abs(d);
    }
    return q;
}

int resolve_threads(int requested) {
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("SCHURKIT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for_index(int count, int threads, const std::function<void(int)>& fn) {
    threads = std::min(resolve_threads(threads), count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([=, &fn] {
            for (int i = t; i < count; i += threads)
                fn(i);
        });
    }
    for (auto& th : pool)
        th.join();
}

} // namespace schurkit
