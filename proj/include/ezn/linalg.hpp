#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ezn/graph.hpp"

namespace ezn {

/// Dense real symmetric matrix. Off-diagonal writes always update both
/// triangles, so symmetry holds by construction.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

    std::size_t dim() const { return dim_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    void set(std::size_t i, std::size_t j, double value) {
        data_[i * dim_ + j] = value;
        data_[j * dim_ + i] = value;
    }

    double trace() const;
    static SymMatrix identity(std::size_t dim);

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

/// Dense square integer matrix (not necessarily symmetric).
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0) {}

    std::size_t dim() const { return dim_; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

private:
    std::size_t dim_ = 0;
    std::vector<std::int64_t> data_;
};

SymMatrix adjacency_matrix(const Graph& g);
SymMatrix laplacian_matrix(const Graph& g);
SymMatrix signless_laplacian_matrix(const Graph& g);
/// D^{-1/2} L D^{-1/2}; isolated vertices get a zero row and column.
SymMatrix normalized_laplacian_matrix(const Graph& g);

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct JacobiOptions {
    double off_diagonal_threshold = 1e-12;  // on the off-diagonal Frobenius norm, scaled by max(1, ||A||_F)
    int max_sweeps = 100;
};

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi rotations.
/// Throws ConvergenceError when the sweep cap is hit.
std::vector<double> jacobi_eigenvalues(const SymMatrix& a, const JacobiOptions& options = {});

/// Sorted eigenvalue multiset with tolerance-grouped multiplicities.
class Spectrum {
public:
    struct Entry {
        double value;
        std::size_t multiplicity;
    };

    static constexpr double kDefaultTolerance = 1e-8;

    Spectrum() = default;
    explicit Spectrum(std::vector<double> values, double tolerance = kDefaultTolerance);

    /// Ascending, with repetition.
    const std::vector<double>& values() const { return values_; }
    /// Strictly descending distinct values after grouping.
    const std::vector<Entry>& entries() const { return entries_; }
    double tolerance() const { return tolerance_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    double min() const { return values_.front(); }
    double max() const { return values_.back(); }
    double sum() const;
    /// Number of values within tolerance of x.
    std::size_t multiplicity_of(double x) const;

    /// Multiset union.
    Spectrum merged(const Spectrum& other) const;

private:
    std::vector<double> values_;
    std::vector<Entry> entries_;
    double tolerance_ = kDefaultTolerance;
};

Spectrum symmetric_eigenvalues(const SymMatrix& mat, double tolerance = Spectrum::kDefaultTolerance);

/// Largest elementwise gap between the sorted value lists; +inf if sizes differ.
double max_abs_deviation(const Spectrum& a, const Spectrum& b);
bool spectra_match(const Spectrum& a, const Spectrum& b, double tolerance);

/// Laplacian spectrum of a join from the spectra of its parts:
/// {0, n1+n2} u {mu+n2 : mu in s1 minus one 0} u {mu+n1 : mu in s2 minus one 0}.
/// Throws std::invalid_argument if either input lacks an eigenvalue 0 or its size
/// disagrees with the stated order.
Spectrum join_laplacian_spectrum(const Spectrum& s1, std::size_t n1, const Spectrum& s2, std::size_t n2);

}  // namespace ezn
