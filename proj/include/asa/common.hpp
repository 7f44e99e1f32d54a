#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace asa {

using Index = Eigen::Index;
using Shape = std::vector<Index>;

template <class S>
using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Error surfaces. Shape/dimension problems, bad configurations and CLI misuse
// are recoverable exceptions; internal invariant violations abort.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void invariant_failure(const char* expr, const char* file, int line) {
    std::fprintf(stderr, "invariant violated: %s (%s:%d)\n", expr, file, line);
    std::abort();
}

// Active in all build types.
#define ASA_ASSERT(cond) \
    do { \
        if (!(cond)) ::asa::invariant_failure(#cond, __FILE__, __LINE__); \
    } while (0)

inline void require_shape(bool cond, const std::string& msg) {
    if (!cond) throw ShapeError(msg);
}
inline void require_config(bool cond, const std::string& msg) {
    if (!cond) throw ConfigError(msg);
}
inline void require_usage(bool cond, const std::string& msg) {
    if (!cond) throw UsageError(msg);
}

inline Index numel_of(const Shape& shape) {
    Index n = 1;
    for (Index e : shape) {
        ASA_ASSERT(e >= 0);
        n *= e;
    }
    return n;
}

inline std::string shape_str(const Shape& shape) {
    std::string s = "[";
    for (size_t i = 0; i < shape.size(); ++i) {
        if (i) s += "x";
        s += std::to_string(shape[i]);
    }
    return s + "]";
}

// Deterministic RNG. mt19937_64 has a standard-mandated sequence; the real
// mappings below avoid std::uniform_real_distribution, whose output is
// implementation-defined.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        // splitmix64; tiny, portable, good enough for data generation and init.
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // in [0, n)
    uint64_t below(uint64_t n) {
        ASA_ASSERT(n > 0);
        return next_u64() % n;
    }

    double normal() {
        // Box-Muller, one value per call (cache the pair).
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 == 0.0) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    Rng fork(uint64_t stream) {
        // Independent child stream; deterministic in (seed, stream).
        Rng child(state_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
        child.next_u64();
        return child;
    }

private:
    uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace asa
