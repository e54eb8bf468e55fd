#pragma once

#include <stdexcept>
#include <string>

namespace critline {

// Exit-code classes for the CLI: 2 = domain/pole, 3 = accuracy, 4 = I/O.
enum class ErrorClass { Domain = 2, Accuracy = 3, Io = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& msg)
        : std::runtime_error(msg), cls_(cls) {}
    ErrorClass error_class() const { return cls_; }
    int exit_code() const { return static_cast<int>(cls_); }

private:
    ErrorClass cls_;
};

struct PoleError : Error {
    explicit PoleError(const std::string& m) : Error(ErrorClass::Domain, m) {}
};
struct NearPoleError : Error {
    explicit NearPoleError(const std::string& m) : Error(ErrorClass::Domain, m) {}
};
struct DomainError : Error {
    explicit DomainError(const std::string& m) : Error(ErrorClass::Domain, m) {}
};
struct DivisionError : Error {
    explicit DivisionError(const std::string& m) : Error(ErrorClass::Domain, m) {}
};
struct AccuracyError : Error {
    explicit AccuracyError(const std::string& m) : Error(ErrorClass::Accuracy, m) {}
};
struct SeedError : Error {
    explicit SeedError(const std::string& m) : Error(ErrorClass::Domain, m) {}
};
struct SamplingError : Error {
    explicit SamplingError(const std::string& m) : Error(ErrorClass::Domain, m) {}
};
struct IncompleteContour : Error {
    explicit IncompleteContour(const std::string& m) : Error(ErrorClass::Domain, m) {}
};
struct FitError : Error {
    explicit FitError(const std::string& m) : Error(ErrorClass::Domain, m) {}
};
struct IoError : Error {
    explicit IoError(const std::string& m) : Error(ErrorClass::Io, m) {}
};

}
