#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "newton_implicit/curves.hpp"
#include "newton_implicit/errors.hpp"
#include "newton_implicit/geometry.hpp"
#include "newton_implicit/predictor.hpp"

namespace ni {

enum ExitCode {
    kExitOk = 0,
    kExitInternal = 1,
    kExitParse = 2,
    kExitClassification = 3,
    kExitContainment = 4,
    kExitOracle = 5,
    kExitCap = 6,
    kExitIo = 7,
};

int exit_code_for(ErrorKind k);

inline constexpr std::uint64_t kDefaultSeed = 1;
// NEWTON_IMPLICIT_SEED if set and numeric, otherwise kDefaultSeed.
std::uint64_t default_seed();

nlohmann::json polygon_json(const LatticePolygon& p);

nlohmann::json predict_report(const ParametricCurve& input);

struct VerifyOptions {
    int trials = 3;  // coefficient draws for supports-only input
    int bound = 16;
    std::uint64_t seed = kDefaultSeed;
};
// "contains" and "equals" verdicts of prediction against the oracles.
nlohmann::json verify_report(const ParametricCurve& input, const VerifyOptions& opt);

nlohmann::json implicitize_report(const ParametricCurve& input, std::uint64_t seed, int bound = 16);

struct EnumerateOptions {
    int selection = 1;
    long long limit = -1;  // negative: no limit
    bool force = false;
    std::uint64_t seed = kDefaultSeed;
    int trials = 200;  // random liftings for same-denominator curves
};
// Streams staircase certificates (polynomial and different-denominator curves)
// or lifting certificates (same-denominator curves); returns the count.
long long enumerate_certificates(const ParametricCurve& input, const EnumerateOptions& opt,
                                 const std::function<void(const nlohmann::json&)>& emit);

std::string render_svg(const LatticePolygon& predicted, const std::optional<LatticePolygon>& oracle);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ni
