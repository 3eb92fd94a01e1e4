// Row elimination for the dense simplex tableau.
//
// The parallel variant performs exactly the same per-row arithmetic as the
// serial reference, only distributing rows across threads, so the two produce
// bitwise-identical tableaus for any thread count. The serial version is kept
// as the reference the tests compare against; bench/ measures both.
#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hdcap::kernel {

// Rows below this many entries are eliminated serially; the fork/join cost
// dominates on small tableaus.
inline constexpr long kParallelThreshold = 1L << 15;

// data: row-major (rows x width) buffer, where the last slot of each row is
// the rhs. The pivot row must already be normalized (pivot element == 1).
template <class T>
void eliminate_rows_serial(T* data, long rows, long width, long pivot_row, long pivot_col) {
    const T* prow = data + pivot_row * width;
    for (long r = 0; r < rows; ++r) {
        if (r == pivot_row) continue;
        T* row = data + r * width;
        T factor = row[pivot_col];
        if (factor == 0) continue;
        for (long j = 0; j < width; ++j) {
            row[j] -= factor * prow[j];
        }
        row[pivot_col] = 0;  // exact zero, no roundoff residue in the pivot column
    }
}

template <class T>
void eliminate_rows_parallel(T* data, long rows, long width, long pivot_row, long pivot_col) {
#ifdef _OPENMP
    const T* prow = data + pivot_row * width;
#pragma omp parallel for schedule(static)
    for (long r = 0; r < rows; ++r) {
        if (r == pivot_row) continue;
        T* row = data + r * width;
        T factor = row[pivot_col];
        if (factor == 0) continue;
        for (long j = 0; j < width; ++j) {
            row[j] -= factor * prow[j];
        }
        row[pivot_col] = 0;
    }
#else
    eliminate_rows_serial(data, rows, width, pivot_row, pivot_col);
#endif
}

template <class T>
void eliminate_rows(T* data, long rows, long width, long pivot_row, long pivot_col,
                    bool allow_parallel) {
    if (allow_parallel && rows * width >= kParallelThreshold) {
        eliminate_rows_parallel(data, rows, width, pivot_row, pivot_col);
    } else {
        eliminate_rows_serial(data, rows, width, pivot_row, pivot_col);
    }
}

}  // namespace hdcap::kernel
