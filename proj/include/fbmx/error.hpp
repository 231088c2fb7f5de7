#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fbmx {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (e.g. a probability
/// not in (0,1)).
class DomainError : public Error {
public:
    using Error::Error;
};

class NotPositiveDefinite : public Error {
public:
    NotPositiveDefinite(std::size_t index, double pivot)
        : Error("matrix is not positive semi-definite: pivot " + std::to_string(pivot) +
                " at index " + std::to_string(index)),
          index_(index),
          pivot_(pivot) {}

    std::size_t index() const noexcept { return index_; }
    double pivot() const noexcept { return pivot_; }

private:
    std::size_t index_;
    double pivot_;
};

class MissingFactor : public Error {
public:
    MissingFactor() : Error("covariance matrix has not been factorized") {}
};

class EmbeddingFailure : public Error {
public:
    EmbeddingFailure(double min_eigenvalue, double max_eigenvalue)
        : Error("circulant embedding has a negative eigenvalue " + std::to_string(min_eigenvalue) +
                " (max " + std::to_string(max_eigenvalue) + ")"),
          min_eigenvalue_(min_eigenvalue) {}

    double min_eigenvalue() const noexcept { return min_eigenvalue_; }

private:
    double min_eigenvalue_;
};

class NonUniformGridForFFT : public Error {
public:
    NonUniformGridForFFT() : Error("FFT sampling requires the uniform grid {i/n}") {}
};

class InvalidGrid : public Error {
public:
    using Error::Error;
};

class DegenerateNormalization : public Error {
public:
    explicit DegenerateNormalization(long n)
        : Error("normalizing sequences are undefined for n = " + std::to_string(n) +
                " (need n >= 3)") {}
};

class EmptyVector : public Error {
public:
    EmptyVector() : Error("empty vector") {}
};

class BracketFailure : public Error {
public:
    using Error::Error;
};

/// Invalid experiment or command configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace fbmx
