# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: distance sums, the reweighting fixed-point iteration,
and a simplex minimizer specialized to the four-point distance objective.

Mirrors ``_pykernels`` operation for operation; keep the two in sync.
"""

from libc.math cimport sqrt, fabs

CONVERGED = 0
VERTEX = 1
MAXITER = 2


cdef void _load(object vtx, double[4][3] rows):
    cdef int i, j
    for i in range(4):
        for j in range(3):
            rows[i][j] = vtx[i][j]


cdef inline double _fsum(double[4][3] rows, double x, double y, double z) noexcept nogil:
    cdef double total = 0.0
    cdef double dx, dy, dz
    cdef int i
    for i in range(4):
        dx = x - rows[i][0]
        dy = y - rows[i][1]
        dz = z - rows[i][2]
        total += sqrt(dx * dx + dy * dy + dz * dz)
    return total


cdef inline double _pull(double[4][3] rows, int i) noexcept nogil:
    cdef double rx = 0.0, ry = 0.0, rz = 0.0
    cdef double dx, dy, dz, d
    cdef int j
    for j in range(4):
        if j == i:
            continue
        dx = rows[i][0] - rows[j][0]
        dy = rows[i][1] - rows[j][1]
        dz = rows[i][2] - rows[j][2]
        d = sqrt(dx * dx + dy * dy + dz * dz)
        rx += dx / d
        ry += dy / d
        rz += dz / d
    return sqrt(rx * rx + ry * ry + rz * rz)


def distance_sum(vtx, double x, double y, double z):
    """Sum of Euclidean distances from (x, y, z) to the four rows of vtx."""
    cdef double[4][3] rows
    _load(vtx, rows)
    return _fsum(rows, x, y, z)


def resultant_norm(vtx, double x, double y, double z):
    """Norm of the sum of unit vectors from (x, y, z) toward the four rows."""
    cdef double[4][3] rows
    _load(vtx, rows)
    cdef double rx = 0.0, ry = 0.0, rz = 0.0
    cdef double dx, dy, dz, d
    cdef int i
    for i in range(4):
        dx = rows[i][0] - x
        dy = rows[i][1] - y
        dz = rows[i][2] - z
        d = sqrt(dx * dx + dy * dy + dz * dz)
        rx += dx / d
        ry += dy / d
        rz += dz / d
    return sqrt(rx * rx + ry * ry + rz * rz)


def pull_norm(vtx, int i):
    """Norm of the sum of unit vectors from the other three rows toward row i."""
    cdef double[4][3] rows
    _load(vtx, rows)
    return _pull(rows, i)


def weiszfeld_step(vtx, double x, double y, double z):
    """One reweighted-average update from (x, y, z)."""
    cdef double[4][3] rows
    _load(vtx, rows)
    cdef double sx = 0.0, sy = 0.0, sz = 0.0, sw = 0.0
    cdef double dx, dy, dz, d, w
    cdef int i
    for i in range(4):
        dx = x - rows[i][0]
        dy = y - rows[i][1]
        dz = z - rows[i][2]
        d = sqrt(dx * dx + dy * dy + dz * dz)
        w = 1.0 / d
        sx += rows[i][0] * w
        sy += rows[i][1] * w
        sz += rows[i][2] * w
        sw += w
    return (sx / sw, sy / sw, sz / sw)


def weiszfeld(vtx, double sx, double sy, double sz, double grad_tol,
              long max_iter, double vertex_eps, double escape_step,
              double boundary_eps):
    """Reweighted-average iteration; see the _pykernels docstring."""
    cdef double[4][3] rows
    _load(vtx, rows)
    cdef double x = sx, y = sy, z = sz
    cdef double dists[4]
    cdef double dx, dy, dz, d, dmin, res, pn
    cdef double rx, ry, rz, px, py, pz, sxx, syy, szz, sw, w
    cdef long it = 0
    cdef int i, j, imin
    while True:
        dmin = -1.0
        imin = -1
        for i in range(4):
            dx = x - rows[i][0]
            dy = y - rows[i][1]
            dz = z - rows[i][2]
            d = sqrt(dx * dx + dy * dy + dz * dz)
            dists[i] = d
            if dmin < 0.0 or d < dmin:
                dmin = d
                imin = i
        if dmin <= vertex_eps:
            pn = _pull(rows, imin)
            if pn <= 1.0 + boundary_eps:
                return (rows[imin][0], rows[imin][1], rows[imin][2],
                        pn, it, VERTEX, imin)
            px = 0.0
            py = 0.0
            pz = 0.0
            for j in range(4):
                if j == imin:
                    continue
                dx = rows[imin][0] - rows[j][0]
                dy = rows[imin][1] - rows[j][1]
                dz = rows[imin][2] - rows[j][2]
                d = sqrt(dx * dx + dy * dy + dz * dz)
                px += dx / d
                py += dy / d
                pz += dz / d
            x = rows[imin][0] - escape_step * px / pn
            y = rows[imin][1] - escape_step * py / pn
            z = rows[imin][2] - escape_step * pz / pn
            it += 1
            if it >= max_iter:
                res = resultant_norm(vtx, x, y, z)
                return (x, y, z, res, it, MAXITER, -1)
            continue
        rx = 0.0
        ry = 0.0
        rz = 0.0
        for i in range(4):
            rx += (rows[i][0] - x) / dists[i]
            ry += (rows[i][1] - y) / dists[i]
            rz += (rows[i][2] - z) / dists[i]
        res = sqrt(rx * rx + ry * ry + rz * rz)
        if res <= grad_tol:
            return (x, y, z, res, it, CONVERGED, -1)
        if it >= max_iter:
            return (x, y, z, res, it, MAXITER, -1)
        sxx = 0.0
        syy = 0.0
        szz = 0.0
        sw = 0.0
        for i in range(4):
            w = 1.0 / dists[i]
            sxx += rows[i][0] * w
            syy += rows[i][1] * w
            szz += rows[i][2] * w
            sw += w
        x = sxx / sw
        y = syy / sw
        z = szz / sw
        it += 1


def nelder_mead(vtx, double sx, double sy, double sz, double step,
                double xatol, double fatol, long max_iter):
    """Nelder-Mead on the four-point distance sum; see _pykernels."""
    cdef double[4][3] rows
    _load(vtx, rows)
    cdef double sim[4][3]
    cdef double fs[4]
    cdef double tmp[3]
    cdef double xr[3]
    cdef double xe[3]
    cdef double xc[3]
    cdef double cx, cy, cz, fr, fe, fc, ft, size, diff
    cdef long it = 0
    cdef int k, c, j, best
    cdef bint shrink

    sim[0][0] = sx
    sim[0][1] = sy
    sim[0][2] = sz
    for k in range(1, 4):
        for c in range(3):
            sim[k][c] = sim[0][c]
        sim[k][k - 1] += step
    for k in range(4):
        fs[k] = _fsum(rows, sim[k][0], sim[k][1], sim[k][2])

    while it < max_iter:
        # order best..worst (insertion sort, stable)
        for k in range(1, 4):
            ft = fs[k]
            for c in range(3):
                tmp[c] = sim[k][c]
            j = k - 1
            while j >= 0 and fs[j] > ft:
                fs[j + 1] = fs[j]
                for c in range(3):
                    sim[j + 1][c] = sim[j][c]
                j -= 1
            fs[j + 1] = ft
            for c in range(3):
                sim[j + 1][c] = tmp[c]

        size = 0.0
        for k in range(1, 4):
            for c in range(3):
                diff = fabs(sim[k][c] - sim[0][c])
                if diff > size:
                    size = diff
        if size <= xatol and fs[3] - fs[0] <= fatol:
            break

        cx = (sim[0][0] + sim[1][0] + sim[2][0]) / 3.0
        cy = (sim[0][1] + sim[1][1] + sim[2][1]) / 3.0
        cz = (sim[0][2] + sim[1][2] + sim[2][2]) / 3.0

        xr[0] = 2.0 * cx - sim[3][0]
        xr[1] = 2.0 * cy - sim[3][1]
        xr[2] = 2.0 * cz - sim[3][2]
        fr = _fsum(rows, xr[0], xr[1], xr[2])
        if fr < fs[0]:
            xe[0] = 3.0 * cx - 2.0 * sim[3][0]
            xe[1] = 3.0 * cy - 2.0 * sim[3][1]
            xe[2] = 3.0 * cz - 2.0 * sim[3][2]
            fe = _fsum(rows, xe[0], xe[1], xe[2])
            if fe < fr:
                for c in range(3):
                    sim[3][c] = xe[c]
                fs[3] = fe
            else:
                for c in range(3):
                    sim[3][c] = xr[c]
                fs[3] = fr
        elif fr < fs[2]:
            for c in range(3):
                sim[3][c] = xr[c]
            fs[3] = fr
        else:
            if fr < fs[3]:
                xc[0] = 1.5 * cx - 0.5 * sim[3][0]
                xc[1] = 1.5 * cy - 0.5 * sim[3][1]
                xc[2] = 1.5 * cz - 0.5 * sim[3][2]
                fc = _fsum(rows, xc[0], xc[1], xc[2])
                shrink = fc > fr
            else:
                xc[0] = 0.5 * cx + 0.5 * sim[3][0]
                xc[1] = 0.5 * cy + 0.5 * sim[3][1]
                xc[2] = 0.5 * cz + 0.5 * sim[3][2]
                fc = _fsum(rows, xc[0], xc[1], xc[2])
                shrink = fc >= fs[3]
            if shrink:
                for k in range(1, 4):
                    for c in range(3):
                        sim[k][c] = sim[0][c] + 0.5 * (sim[k][c] - sim[0][c])
                    fs[k] = _fsum(rows, sim[k][0], sim[k][1], sim[k][2])
            else:
                for c in range(3):
                    sim[3][c] = xc[c]
                fs[3] = fc
        it += 1

    best = 0
    for k in range(1, 4):
        if fs[k] < fs[best]:
            best = k
    return (sim[best][0], sim[best][1], sim[best][2], fs[best], it)
