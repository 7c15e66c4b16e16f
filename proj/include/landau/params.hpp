#pragma once

#include <optional>
#include <string>

#include "landau/errors.hpp"

namespace landau {

/// Parameter bundle shared by the mapping classes. Fields a given theorem
/// does not use may stay unset; K and Kp default to the quasiconformal
/// baseline (1, 0).
struct ClassParams {
    double K = 1.0;
    double Kp = 0.0;
    std::optional<double> LambdaBig;
    std::optional<double> lambdaSmall;
    std::optional<double> M;

    void validate_base(const std::string& context) const {
        detail::require(K >= 1.0, "K >= 1", context);
        detail::require(Kp >= 0.0, "K' >= 0", context);
    }

    double require_LambdaBig(const std::string& context) const {
        if (!LambdaBig) {
            throw admissibility_error(context + ": Lambda is not set");
        }
        return *LambdaBig;
    }

    double require_lambdaSmall(const std::string& context) const {
        if (!lambdaSmall) {
            throw admissibility_error(context + ": lambda is not set");
        }
        return *lambdaSmall;
    }

    double require_M(const std::string& context) const {
        if (!M) {
            throw admissibility_error(context + ": M is not set");
        }
        return *M;
    }
};

}  // namespace landau
