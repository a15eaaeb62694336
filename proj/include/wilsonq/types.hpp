#pragma once

#include <string>

namespace wilsonq {

struct VerificationReport {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    bool informational = false;  // reported but never counted as a failure
    std::string info;
};

}  // namespace wilsonq
