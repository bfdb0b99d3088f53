"""Pure-Python kernels: distance sums, the reweighting fixed-point iteration,
and a simplex minimizer specialized to the four-point distance objective.

This module mirrors ``_native`` (the Cython build) operation for operation so
both backends produce the same iterates up to rounding.  Scalar math only; no
numpy inside the loops.
"""

from __future__ import annotations

from math import sqrt

# weiszfeld() status codes
CONVERGED = 0
VERTEX = 1
MAXITER = 2


def _rows(vtx):
    return [(float(vtx[i][0]), float(vtx[i][1]), float(vtx[i][2])) for i in range(4)]


def distance_sum(vtx, x: float, y: float, z: float) -> float:
    """Sum of Euclidean distances from (x, y, z) to the four rows of vtx."""
    total = 0.0
    for vx, vy, vz in _rows(vtx):
        dx = x - vx
        dy = y - vy
        dz = z - vz
        total += sqrt(dx * dx + dy * dy + dz * dz)
    return total


def resultant_norm(vtx, x: float, y: float, z: float) -> float:
    """Norm of the sum of unit vectors from (x, y, z) toward the four rows.

    This is the balancing residual; zero exactly at an interior minimizer.
    The point must not coincide with a row.
    """
    rx = ry = rz = 0.0
    for vx, vy, vz in _rows(vtx):
        dx = vx - x
        dy = vy - y
        dz = vz - z
        d = sqrt(dx * dx + dy * dy + dz * dz)
        rx += dx / d
        ry += dy / d
        rz += dz / d
    return sqrt(rx * rx + ry * ry + rz * rz)


def pull_norm(vtx, i: int) -> float:
    """Norm of the sum of unit vectors from the other three rows toward row i."""
    rows = _rows(vtx)
    px, py, pz = rows[i]
    rx = ry = rz = 0.0
    for j in range(4):
        if j == i:
            continue
        dx = px - rows[j][0]
        dy = py - rows[j][1]
        dz = pz - rows[j][2]
        d = sqrt(dx * dx + dy * dy + dz * dz)
        rx += dx / d
        ry += dy / d
        rz += dz / d
    return sqrt(rx * rx + ry * ry + rz * rz)


def weiszfeld_step(vtx, x: float, y: float, z: float):
    """One reweighted-average update from (x, y, z)."""
    sx = sy = sz = sw = 0.0
    for vx, vy, vz in _rows(vtx):
        dx = x - vx
        dy = y - vy
        dz = z - vz
        d = sqrt(dx * dx + dy * dy + dz * dz)
        w = 1.0 / d
        sx += vx * w
        sy += vy * w
        sz += vz * w
        sw += w
    return (sx / sw, sy / sw, sz / sw)


def weiszfeld(vtx, sx, sy, sz, grad_tol, max_iter, vertex_eps, escape_step,
              boundary_eps):
    """Reweighted-average iteration for the four-point distance minimizer.

    Returns ``(x, y, z, residual, iterations, status, vertex_index)`` with
    status CONVERGED, VERTEX (an iterate reached a row that passes the
    vertex-optimality test), or MAXITER.  ``vertex_eps`` and ``escape_step``
    are absolute lengths.
    """
    rows = _rows(vtx)
    x, y, z = float(sx), float(sy), float(sz)
    it = 0
    while True:
        dmin = -1.0
        imin = -1
        dists = []
        for i, (vx, vy, vz) in enumerate(rows):
            dx = x - vx
            dy = y - vy
            dz = z - vz
            d = sqrt(dx * dx + dy * dy + dz * dz)
            dists.append(d)
            if dmin < 0.0 or d < dmin:
                dmin = d
                imin = i
        if dmin <= vertex_eps:
            # Singular point of the iteration: test vertex optimality, and
            # if the vertex loses, restart just off it along the descent ray.
            pn = pull_norm(vtx, imin)
            if pn <= 1.0 + boundary_eps:
                vx, vy, vz = rows[imin]
                return (vx, vy, vz, pn, it, VERTEX, imin)
            px = py = pz = 0.0
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
        rx = ry = rz = 0.0
        for i, (vx, vy, vz) in enumerate(rows):
            rx += (vx - x) / dists[i]
            ry += (vy - y) / dists[i]
            rz += (vz - z) / dists[i]
        res = sqrt(rx * rx + ry * ry + rz * rz)
        if res <= grad_tol:
            return (x, y, z, res, it, CONVERGED, -1)
        if it >= max_iter:
            return (x, y, z, res, it, MAXITER, -1)
        sxx = syy = szz = sw = 0.0
        for i, (vx, vy, vz) in enumerate(rows):
            w = 1.0 / dists[i]
            sxx += vx * w
            syy += vy * w
            szz += vz * w
            sw += w
        x = sxx / sw
        y = syy / sw
        z = szz / sw
        it += 1


def nelder_mead(vtx, sx, sy, sz, step, xatol, fatol, max_iter):
    """Nelder-Mead on the four-point distance sum, from (sx, sy, sz).

    Standard reflect/expand/contract/shrink scheme with coefficients
    1, 2, 0.5, 0.5.  Terminates when the simplex collapses below ``xatol``
    in every coordinate and the value spread drops below ``fatol``, or after
    ``max_iter`` iterations.  Returns ``(x, y, z, fmin, iterations)``.
    """
    rows = _rows(vtx)

    def f(p):
        total = 0.0
        for vx, vy, vz in rows:
            dx = p[0] - vx
            dy = p[1] - vy
            dz = p[2] - vz
            total += sqrt(dx * dx + dy * dy + dz * dz)
        return total

    sim = [[float(sx), float(sy), float(sz)]]
    for k in range(3):
        p = list(sim[0])
        p[k] += step
        sim.append(p)
    fs = [f(p) for p in sim]

    it = 0
    while it < max_iter:
        # order best..worst (stable insertion sort on 4 entries)
        order = sorted(range(4), key=lambda k: fs[k])
        sim = [sim[k] for k in order]
        fs = [fs[k] for k in order]

        size = 0.0
        for k in range(1, 4):
            for c in range(3):
                diff = abs(sim[k][c] - sim[0][c])
                if diff > size:
                    size = diff
        if size <= xatol and fs[3] - fs[0] <= fatol:
            break

        cx = (sim[0][0] + sim[1][0] + sim[2][0]) / 3.0
        cy = (sim[0][1] + sim[1][1] + sim[2][1]) / 3.0
        cz = (sim[0][2] + sim[1][2] + sim[2][2]) / 3.0

        xr = [2.0 * cx - sim[3][0], 2.0 * cy - sim[3][1], 2.0 * cz - sim[3][2]]
        fr = f(xr)
        if fr < fs[0]:
            xe = [3.0 * cx - 2.0 * sim[3][0], 3.0 * cy - 2.0 * sim[3][1],
                  3.0 * cz - 2.0 * sim[3][2]]
            fe = f(xe)
            if fe < fr:
                sim[3], fs[3] = xe, fe
            else:
                sim[3], fs[3] = xr, fr
        elif fr < fs[2]:
            sim[3], fs[3] = xr, fr
        else:
            if fr < fs[3]:
                xc = [1.5 * cx - 0.5 * sim[3][0], 1.5 * cy - 0.5 * sim[3][1],
                      1.5 * cz - 0.5 * sim[3][2]]
                fc = f(xc)
                shrink = fc > fr
            else:
                xc = [0.5 * cx + 0.5 * sim[3][0], 0.5 * cy + 0.5 * sim[3][1],
                      0.5 * cz + 0.5 * sim[3][2]]
                fc = f(xc)
                shrink = fc >= fs[3]
            if shrink:
                for k in range(1, 4):
                    for c in range(3):
                        sim[k][c] = sim[0][c] + 0.5 * (sim[k][c] - sim[0][c])
                    fs[k] = f(sim[k])
            else:
                sim[3], fs[3] = xc, fc
        it += 1

    best = 0
    for k in range(1, 4):
        if fs[k] < fs[best]:
            best = k
    return (sim[best][0], sim[best][1], sim[best][2], fs[best], it)
