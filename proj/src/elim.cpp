#include "ordlift/elim.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ordlift {

namespace {

ElimMode mode_from_env() {
    const char* e = std::getenv("ORDLIFT_ELIM");
    if (e && !std::strcmp(e, "serial")) return ElimMode::Serial;
    if (e && !std::strcmp(e, "parallel")) return ElimMode::Parallel;
    return ElimMode::Auto;
}

std::atomic<ElimMode> g_mode{mode_from_env()};

bool run_parallel(ElimMode mode, size_t nrows, size_t ncols) {
#ifndef _OPENMP
    (void)mode; (void)nrows; (void)ncols;
    return false;
#else
    ElimMode m = (mode == ElimMode::Auto) ? g_mode.load() : mode;
    if (m == ElimMode::Serial) return false;
    if (m == ElimMode::Parallel) return true;
    return nrows * ncols > 1u << 16;
#endif
}

// subtract factor * src from dst (dst -= factor*src), skipping leading zeros
inline void axpy_row(const Field& F, std::vector<long>& dst, const std::vector<long>& src,
                     long factor, long from_col) {
    const long n = (long)src.size();
    for (long c = from_col; c < n; ++c) {
        if (src[c] == 0) continue;
        dst[c] = F.sub(dst[c], F.mul(factor, src[c]));
    }
}
} // namespace

void set_default_elim_mode(ElimMode m) { g_mode.store(m); }
ElimMode default_elim_mode() { return g_mode.load(); }

Echelon echelonize(const Field& F, std::vector<std::vector<long>> rows, ElimMode mode) {
    Echelon E;
    if (rows.empty()) return E;
    const long ncols = (long)rows[0].size();
    E.cols = ncols;
    const bool par = run_parallel(mode, rows.size(), ncols);

    long r = 0; // next pivot row slot
    const long nrows = (long)rows.size();
    for (long c = 0; c < ncols && r < nrows; ++c) {
        long pr = -1;
        for (long i = r; i < nrows; ++i)
            if (rows[i][c] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(rows[r], rows[pr]);
        // normalize pivot row
        long inv = F.inv(rows[r][c]);
        if (inv != 1)
            for (long j = c; j < ncols; ++j)
                if (rows[r][j] != 0) rows[r][j] = F.mul(inv, rows[r][j]);
        // clear column c in every other row
        if (par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
            for (long i = 0; i < nrows; ++i) {
                if (i == r || rows[i][c] == 0) continue;
                axpy_row(F, rows[i], rows[r], rows[i][c], c);
            }
#endif
        } else {
            for (long i = 0; i < nrows; ++i) {
                if (i == r || rows[i][c] == 0) continue;
                axpy_row(F, rows[i], rows[r], rows[i][c], c);
            }
        }
        E.pivot_cols.push_back(c);
        ++r;
    }
    rows.resize(r);
    E.rows = std::move(rows);
    return E;
}

void reduce_row(const Field& F, const Echelon& E, std::vector<long>& v) {
    for (size_t i = 0; i < E.rows.size(); ++i) {
        long c = E.pivot_cols[i];
        if (v[c] == 0) continue;
        axpy_row(F, v, E.rows[i], v[c], c);
    }
}

long rank_of(const Field& F, std::vector<std::vector<long>> rows, ElimMode mode) {
    return echelonize(F, std::move(rows), mode).rank();
}

std::vector<std::vector<long>> kernel_basis(const Field& F,
                                            const std::vector<std::vector<long>>& rows,
                                            long cols, ElimMode mode) {
    Echelon E = echelonize(F, rows, mode);
    std::vector<char> is_piv(cols, 0);
    for (long c : E.pivot_cols) is_piv[c] = 1;
    std::vector<std::vector<long>> basis;
    for (long c = 0; c < cols; ++c) {
        if (is_piv[c]) continue;
        std::vector<long> v(cols, 0);
        v[c] = 1;
        // back-substitute: pivot col value = -(entry of echelon row at c)
        for (size_t i = 0; i < E.rows.size(); ++i)
            v[E.pivot_cols[i]] = F.neg(E.rows[i][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace ordlift
