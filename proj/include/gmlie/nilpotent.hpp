#pragma once

#include "gmlie/generic_matrix.hpp"
#include "gmlie/uniseries.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gmlie {

/// Variables a, b of weight 1.
const VarSpecPtr& nilpotent_vars();

/// The 2x2 computation with U = [[0,a],[0,0]], V = [[0,0],[b,0]], c = ab and
/// I + T = e^U e^V, where log(I + T) = phi(c) (2T - cI).
struct NilpotentReport {
    struct Check {
        std::string name;
        bool pass;
    };

    int terms = 0;  // number of phi coefficients requested
    int degree = 0; // truncation degree in a, b
    GenMat T{nilpotent_vars()};
    GenMat log_T{nilpotent_vars()}; // log(I + T) through `degree`
    std::vector<Rational> phi;
    std::vector<Check> checks;

    bool all_passed() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// Runs every check with `terms` coefficients of phi (terms >= 2).
NilpotentReport nilpotent_example(int terms);

/// phi(c(xi)) * xi (2 + xi) / (1 + xi) - log(1 + xi) with c(xi) = xi^2/(1 + xi),
/// known through xi^(2 * phi.size() - 1).
UniSeries nilpotent_xi_residual(const std::vector<Rational>& phi);

} // namespace gmlie
