#pragma once

#include "ordlift/field.hpp"

#include <vector>

namespace ordlift {

/// Row-echelon kernels over F_{p^f}.
///
/// Rows are dense coefficient vectors (element codes). echelonize() brings
/// the matrix to reduced row echelon form in place: pivot entries are 1,
/// pivot columns are cleared above and below, pivot rows are moved to the
/// top in column order. Pivot choice is the first row (in current order)
/// with a nonzero entry in the leftmost open column, so the result is
/// deterministic and independent of the execution mode.
///
/// The parallel mode distributes the per-row update of an elimination step
/// across threads; each target row is updated independently with the same
/// arithmetic as the serial loop, so results are bit-identical.
///
/// The process-wide default comes from ORDLIFT_ELIM (serial|parallel),
/// falling back to a size threshold.

enum class ElimMode { Serial, Parallel, Auto };

void set_default_elim_mode(ElimMode m);
ElimMode default_elim_mode();

struct Echelon {
    std::vector<std::vector<long>> rows; // reduced echelon rows, pivot order
    std::vector<long> pivot_cols;        // pivot column of row i
    long cols = 0;

    long rank() const { return (long)rows.size(); }
    bool is_pivot_col(long c) const {
        for (long pc : pivot_cols)
            if (pc == c) return true;
        return false;
    }
};

// Reduced row echelon form. Zero rows are dropped.
Echelon echelonize(const Field& F, std::vector<std::vector<long>> rows,
                   ElimMode mode = ElimMode::Auto);

// Reduce v against an echelon (subtract pivot-row multiples); v is modified
// so that all pivot columns of E are zero in v.
void reduce_row(const Field& F, const Echelon& E, std::vector<long>& v);

long rank_of(const Field& F, std::vector<std::vector<long>> rows,
             ElimMode mode = ElimMode::Auto);

// Solve the homogeneous system: returns a basis of the right kernel of the
// matrix (rows x cols), as vectors of length cols.
std::vector<std::vector<long>> kernel_basis(const Field& F,
                                            const std::vector<std::vector<long>>& rows,
                                            long cols, ElimMode mode = ElimMode::Auto);

} // namespace ordlift
