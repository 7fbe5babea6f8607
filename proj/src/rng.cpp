#include "kenmotsu/rng.hpp"

namespace kenmotsu {

Lambda random_lambda(int n, SplitMix64& rng) {
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = rng.uniform(-5.0, 5.0);
    return Lambda(std::move(values));
}

RealMatrix random_invertible(int dim, SplitMix64& rng, double cond_max) {
    constexpr int kMaxAttempts = 256;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        RealMatrix t(dim, dim);
        for (double& x : t.entries) x = rng.uniform(-1.0, 1.0);
        if (condition_estimate(t) <= cond_max) return t;
    }
    fail(ErrorKind::DegenerateMetric,
         "random_invertible: could not reach the requested condition bound");
}

ModelPoint random_point(int n, SplitMix64& rng, double t_box, double z_box) {
    ModelPoint p(rng.uniform(-t_box, t_box), std::vector<double>(2 * n, 0.0));
    for (double& x : p.z) x = rng.uniform(-z_box, z_box);
    return p;
}

} // namespace kenmotsu
