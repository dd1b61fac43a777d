/// @file io.hpp
/// @brief Plain-text emission: triangle and polynomial CSV, root-cloud CSV.
///
/// All writers are byte-deterministic for a fixed build: integer entries are
/// exact decimals, floating entries are printed by mpfr at full precision.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "aberth.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"
#include "triangle.hpp"

namespace stirling {

/// Rows as printed: quasi-Eulerian triangles of order r >= 2 carry a zero
/// top-degree entry in every positive row, which the tables omit; order 1
/// and all other kinds print full rows.
inline std::vector<std::vector<Int>> printable_rows(const Triangle& t) {
    const bool quasi = t.kind == TriangleKind::QuasiEulerianCycle ||
                       t.kind == TriangleKind::QuasiEulerianSubset;
    if (!quasi || t.r <= 1) return t.rows;
    std::vector<std::vector<Int>> out;
    out.reserve(t.rows.size());
    for (size_t n = 0; n < t.rows.size(); ++n) {
        const size_t width = n == 0 ? 1 : n;
        out.emplace_back(t.rows[n].begin(),
                         t.rows[n].begin() + static_cast<std::ptrdiff_t>(width));
    }
    return out;
}

inline void write_triangle_csv(std::ostream& os, const Triangle& t, bool with_row_sums = false) {
    for (const auto& row : printable_rows(t)) {
        Int sum = 0;
        for (size_t k = 0; k < row.size(); ++k) {
            if (k) os << ',';
            os << row[k].str();
            sum += row[k];
        }
        if (with_row_sums) os << ',' << sum.str();
        os << '\n';
    }
}

inline std::string format_mpf(const Mpf& v) {
    return v.str(0, std::ios_base::scientific);
}

inline void write_root_cloud_csv(std::ostream& os, const std::string& kind,
                                 const std::vector<RootCloudRecord>& records) {
    os << "kind,r,n,zero_root,re,im,norm_re,norm_im,residual\n";
    for (const auto& rec : records) {
        os << kind << ',' << rec.r << ',' << rec.n << ',' << (rec.zero_root ? 1 : 0) << ','
           << format_mpf(rec.re) << ',' << format_mpf(rec.im) << ','
           << format_mpf(rec.norm_re) << ',' << format_mpf(rec.norm_im) << ','
           << format_mpf(rec.residual) << '\n';
    }
}

inline void write_poly_csv(std::ostream& os, const std::string& label, const IntPoly& p) {
    os << label << ',' << poly_to_string(p) << '\n';
}

} // namespace stirling
