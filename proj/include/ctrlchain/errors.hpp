#pragma once

#include <stdexcept>
#include <string>

namespace ctrlchain {

// Base for all domain errors. kind() is a short machine-readable tag used by
// the CLI when emitting structured error JSON.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "error"; }
};

class NonSquareError : public Error {
public:
    NonSquareError(int rows, int cols)
        : Error("matrix is not square: " + std::to_string(rows) + " rows x " +
                std::to_string(cols) + " columns"),
          rows_(rows), cols_(cols) {}
    const char* kind() const noexcept override { return "non_square"; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

private:
    int rows_, cols_;
};

class NegativeEntryError : public Error {
public:
    NegativeEntryError(int row, int col, double value)
        : Error("negative entry " + std::to_string(value) + " at row " +
                std::to_string(row) + ", column " + std::to_string(col)),
          row_(row), col_(col) {}
    const char* kind() const noexcept override { return "negative_entry"; }
    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }

private:
    int row_, col_;
};

class CellParseError : public Error {
public:
    CellParseError(int row, int col, const std::string& text)
        : Error("unparsable cell \"" + text + "\" at row " + std::to_string(row) +
                ", column " + std::to_string(col)),
          row_(row), col_(col) {}
    const char* kind() const noexcept override { return "unparsable_cell"; }
    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }

private:
    int row_, col_;
};

class EmptyNetworkError : public Error {
public:
    EmptyNetworkError() : Error("network has no remaining nodes") {}
    const char* kind() const noexcept override { return "empty_network"; }
};

class InvalidArgumentError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "invalid_argument"; }
};

class OverflowError : public Error {
public:
    explicit OverflowError(double spectral_radius, double t_f = 1.0)
        : Error("matrix exponential would overflow double range: spectral radius " +
                std::to_string(spectral_radius) + " at horizon " + std::to_string(t_f)),
          spectral_radius_(spectral_radius) {}
    OverflowError(const std::string& msg, double spectral_radius)
        : Error(msg), spectral_radius_(spectral_radius) {}
    const char* kind() const noexcept override { return "overflow"; }
    double spectral_radius() const noexcept { return spectral_radius_; }

private:
    double spectral_radius_;
};

class IoError : public Error {
public:
    IoError(const std::string& path, const std::string& detail)
        : Error(detail + ": " + path), path_(path) {}
    const char* kind() const noexcept override { return "io"; }
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace ctrlchain
