// Shared worked-example fixtures: the 11 region-10 R(t) quantile rows with
// their published per-model and combined statistics.
#pragma once

#include <array>
#include <string>
#include <vector>

namespace fixtures {

struct Table1Row {
    const char* model;
    std::array<double, 5> q;
    double sk;      // published, 4 dp
    double se_star; // published, 4 dp
    double y_hat;   // published, 4 dp
    double se_hat;  // published, 4 dp
};

inline const std::vector<Table1Row>& table1() {
    static const std::vector<Table1Row> rows = {
        {"model1", {0.6300, 0.6800, 0.7400, 0.8100, 0.8700}, 0.0769, 0.0790, 0.7400, 0.0790},
        {"model2", {0.6228, 0.6775, 0.7045, 0.7413, 0.8265}, 0.1540, 0.0742, 0.7045, 0.0742},
        {"model3", {0.6400, 0.7000, 0.7400, 0.7900, 0.8700}, 0.1111, 0.0790, 0.7400, 0.0790},
        {"model4", {0.4400, 0.6300, 0.7500, 0.8700, 1.1400}, 0.0000, 0.2371, 0.7500, 0.2371},
        {"model5", {0.7898, 0.7930, 0.7954, 0.7963, 0.7995}, -0.5000, 0.0034, 0.7954, 0.0028},
        {"model6", {0.8076, 0.8199, 0.8329, 0.8494, 0.8749}, 0.1189, 0.0256, 0.8329, 0.0256},
        {"model7", {0.6232, 0.7111, 0.7862, 0.8647, 0.9890}, 0.0222, 0.1233, 0.7862, 0.1233},
        {"model9", {0.7509, 0.8626, 0.9382, 1.0159, 1.1604}, 0.0148, 0.1351, 0.9382, 0.1351},
        {"model10", {0.8175, 0.8250, 0.8302, 0.8353, 0.8427}, -0.0041, 0.0077, 0.8302, 0.0077},
        {"model11", {0.8412, 0.8956, 0.9293, 0.9657, 1.0340}, 0.0398, 0.0637, 0.9293, 0.0637},
        {"model12", {0.6600, 0.7100, 0.7600, 0.8000, 0.8600}, -0.1111, 0.0608, 0.7600, 0.0608},
    };
    return rows;
}

// Published region-10 combined fixtures (equal weights, alpha = 0.10).
inline constexpr double kTau2 = 0.000427;
inline constexpr double kTau2Se = 0.000555;
inline constexpr double kThetaEqual = 0.80;
inline constexpr double kWaldCi[2] = {0.75, 0.85};
inline constexpr double kWaldCr[2] = {0.74, 0.86};
inline constexpr double kKnhaCi[2] = {0.74, 0.86};
inline constexpr double kKnhaCr[2] = {0.73, 0.87};
inline constexpr double kThetaInvVar = 0.81;

/// The region-10 input CSV in the tool's input format.
inline std::string table1_csv() {
    std::string csv = "measure,region,model,q5,q25,q50,q75,q95\n";
    char buf[160];
    for (const auto& r : table1()) {
        std::snprintf(buf, sizeof buf, "R,region10,%s,%.4f,%.4f,%.4f,%.4f,%.4f\n", r.model,
                      r.q[0], r.q[1], r.q[2], r.q[3], r.q[4]);
        csv += buf;
    }
    return csv;
}

} // namespace fixtures
