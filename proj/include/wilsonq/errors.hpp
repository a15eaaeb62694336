#pragma once

#include <stdexcept>
#include <string>

namespace wilsonq {

// Bad arguments or parameters outside the contract (exit code 1 territory).
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// Failures arising during computation (exit code 2 territory).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

class pole_error : public numeric_error {
public:
    explicit pole_error(const std::string& what) : numeric_error(what) {}
};

class overflow_error : public numeric_error {
public:
    explicit overflow_error(const std::string& what) : numeric_error(what) {}
};

class convergence_error : public numeric_error {
public:
    explicit convergence_error(const std::string& what) : numeric_error(what) {}
};

class truncation_error : public numeric_error {
public:
    explicit truncation_error(const std::string& what) : numeric_error(what) {}
};

class degenerate_denominator_error : public numeric_error {
public:
    explicit degenerate_denominator_error(const std::string& what) : numeric_error(what) {}
};

class negative_radicand_error : public numeric_error {
public:
    explicit negative_radicand_error(const std::string& what) : numeric_error(what) {}
};

}  // namespace wilsonq
