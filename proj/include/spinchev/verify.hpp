#pragma once

#include <optional>
#include <string>
#include <vector>

namespace spinchev {

struct Residual {
    std::string suite;
    std::string identity;
    double value = 0.0;
    double tol = 0.0;
    bool pass() const { return value < tol; }
};

struct VerifyOptions {
    int max_twice_j = 10;
    std::optional<double> tol;   // overrides every per-identity tolerance
    double perturb = 0.0;        // relative error injected into one side of each identity
    unsigned long long seed = 12345;
};

const std::vector<std::string>& verify_suites();   // traces, rotation, recoupling, characters
// suite may be "all"; throws std::invalid_argument for unknown names
std::vector<Residual> run_verify(const std::string& suite, const VerifyOptions& opt = {});

}  // namespace spinchev
