#include "latentshield/optimizer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace latentshield {

void Optimizer::step(std::span<std::span<double>> params,
                     std::span<const std::span<const double>> grads) {
    if (params.size() != grads.size())
        throw std::invalid_argument("optimizer_step: group count mismatch");
    for (std::size_t g = 0; g < params.size(); ++g)
        if (params[g].size() != grads[g].size())
            throw std::invalid_argument("optimizer_step: shape mismatch in group " +
                                        std::to_string(g));

    if (kind_ == OptimizerKind::SGD) {
        for (std::size_t g = 0; g < params.size(); ++g) {
            auto p = params[g];
            auto gr = grads[g];
            for (std::size_t i = 0; i < p.size(); ++i) p[i] -= learning_rate_ * gr[i];
        }
        return;
    }

    // Adam with bias correction.
    if (slots_.size() < params.size()) slots_.resize(params.size());
    ++t_;
    const double bc1 = 1.0 - std::pow(beta1, static_cast<double>(t_));
    const double bc2 = 1.0 - std::pow(beta2, static_cast<double>(t_));
    for (std::size_t g = 0; g < params.size(); ++g) {
        auto p = params[g];
        auto gr = grads[g];
        Slot& slot = slots_[g];
        if (slot.m.size() != p.size()) {
            slot.m.assign(p.size(), 0.0);
            slot.v.assign(p.size(), 0.0);
        }
        for (std::size_t i = 0; i < p.size(); ++i) {
            slot.m[i] = beta1 * slot.m[i] + (1.0 - beta1) * gr[i];
            slot.v[i] = beta2 * slot.v[i] + (1.0 - beta2) * gr[i] * gr[i];
            const double mhat = slot.m[i] / bc1;
            const double vhat = slot.v[i] / bc2;
            p[i] -= learning_rate_ * mhat / (std::sqrt(vhat) + eps_num);
        }
    }
}

}  // namespace latentshield
