#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace latentshield {

enum class OptimizerKind { SGD, Adam };

// SGD / Adam over an ordered list of parameter tensors. Adam keeps one
// moment slot per tensor, allocated on first use; the tensor list must stay
// stable across steps.
class Optimizer {
public:
    Optimizer(OptimizerKind kind, double learning_rate)
        : kind_(kind), learning_rate_(learning_rate) {}

    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps_num = 1e-8;

    // One update over all parameter groups; params[i] and grads[i] must have
    // identical lengths.
    void step(std::span<std::span<double>> params,
              std::span<const std::span<const double>> grads);

    OptimizerKind kind() const { return kind_; }
    double learning_rate() const { return learning_rate_; }
    void set_learning_rate(double lr) { learning_rate_ = lr; }

private:
    struct Slot {
        std::vector<double> m, v;
    };
    OptimizerKind kind_;
    double learning_rate_;
    std::vector<Slot> slots_;
    long long t_ = 0;
};

}  // namespace latentshield
