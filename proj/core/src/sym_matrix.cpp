#include "fusioncheck/sym_matrix.hpp"

#include <cstring>

namespace fusioncheck {

SymMatrixR SymMatrixR::principal_submatrix(const std::vector<int>& rows) const {
    SymMatrixR out(static_cast<int>(rows.size()), kind_);
    out.entry_bound_ = entry_bound_;
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i; j < rows.size(); ++j) {
            if (exact())
                out.set_exact(static_cast<int>(i), static_cast<int>(j), exact_at(rows[i], rows[j]));
            else
                out.set(static_cast<int>(i), static_cast<int>(j), at(rows[i], rows[j]));
        }
    return out;
}

std::uint64_t SymMatrixR::fingerprint() const {
    // FNV-1a over the raw double bits plus the order
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(n_));
    for (double v : data_) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        mix(bits);
    }
    return h;
}

SymMatrixR SymMatrixR::scaled(double f) const {
    SymMatrixR out(n_, EntryKind::FloatWithBound);
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) out.set(i, j, at(i, j) * f);
    out.set_entry_bound(entry_bound_ * std::abs(f));
    if (exact()) {
        Rational rf = rational_from_double(f);
        SymMatrixR ex(n_, EntryKind::ExactRational);
        for (int i = 0; i < n_; ++i)
            for (int j = i; j < n_; ++j) ex.set_exact(i, j, exact_at(i, j) * rf);
        return ex;
    }
    return out;
}

}  // namespace fusioncheck
