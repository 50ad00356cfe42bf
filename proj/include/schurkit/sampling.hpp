#ifndef SCHURKIT_SAMPLING_HPP
#define SCHURKIT_SAMPLING_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <functional>

namespace schurkit {

// Deterministic seed derivation: sample i of a run seeded with s always
// sees the same stream, independent of thread count.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Small counter-based generator (splitmix64 core) so sampled verdicts do
// not depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double uniform01();        // (0, 1)
    double gaussian();         // Box-Muller
    std::complex<double> gaussian_complex();
    Eigen::VectorXcd unit_complex_vector(int dim);
    Eigen::MatrixXcd gaussian_complex_matrix(int rows, int cols);
    Eigen::MatrixXcd random_unitary(int dim); // QR of a Gaussian matrix

private:
    std::uint64_t state_;
};

// Resolved thread budget: `requested` when positive, otherwise the
// SCHURKIT_THREADS environment variable, otherwise the hardware count.
int resolve_threads(int requested);

// Runs fn(i) for i in [0, count); iterations must touch disjoint state.
void parallel_for_index(int count, int threads, const std::function<void(int)>& fn);

} // namespace schurkit

#endif
