#pragma once

#include "fusioncheck/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fusioncheck {

/// Symmetric real matrix, packed upper triangle (one slot per unordered pair).
/// Entries are either exact rationals (with a parallel double view) or plain
/// doubles carrying a uniform per-entry error bound.
class SymMatrixR {
public:
    enum class EntryKind { ExactRational, FloatWithBound };

    SymMatrixR() = default;
    SymMatrixR(int n, EntryKind kind)
        : n_(n), kind_(kind), data_(static_cast<size_t>(n) * (n + 1) / 2, 0.0) {
        if (kind == EntryKind::ExactRational)
            exact_.assign(static_cast<size_t>(n) * (n + 1) / 2, Rational(0));
    }

    int order() const { return n_; }
    EntryKind kind() const { return kind_; }
    bool exact() const { return kind_ == EntryKind::ExactRational; }

    double at(int i, int j) const { return data_[idx(i, j)]; }
    const Rational& exact_at(int i, int j) const { return exact_[idx(i, j)]; }

    void set(int i, int j, double v) { data_[idx(i, j)] = v; }
    void set_exact(int i, int j, Rational v) {
        data_[idx(i, j)] = rational_to_double(v);
        exact_[idx(i, j)] = std::move(v);
    }

    /// Uniform bound on |stored - true| per entry; zero for exact matrices.
    double entry_bound() const { return entry_bound_; }
    void set_entry_bound(double b) { entry_bound_ = b; }

    double max_abs() const {
        double m = 0.0;
        for (double v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    std::vector<double> dense() const {
        std::vector<double> a(static_cast<size_t>(n_) * n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) a[static_cast<size_t>(i) * n_ + j] = at(i, j);
        return a;
    }

    /// Principal submatrix on 0-based rows/cols.
    SymMatrixR principal_submatrix(const std::vector<int>& rows) const;

    /// Order-independent content hash (used to seed iterative solvers).
    std::uint64_t fingerprint() const;

    SymMatrixR scaled(double f) const;

private:
    size_t idx(int i, int j) const {
        if (i > j) std::swap(i, j);
        // row-major packed upper triangle
        return static_cast<size_t>(i) * n_ - static_cast<size_t>(i) * (i - 1) / 2 + (j - i);
    }

    int n_ = 0;
    EntryKind kind_ = EntryKind::FloatWithBound;
    std::vector<double> data_;
    std::vector<Rational> exact_;
    double entry_bound_ = 0.0;
};

}  // namespace fusioncheck
