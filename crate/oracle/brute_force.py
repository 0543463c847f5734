"""Brute-force reference dimensions computed with sympy.

Writes the snapshot consumed by the core integration tests:

    python3 oracle/brute_force.py > crates/core/tests/data/oracle_snapshot.json
"""
import json

import sympy as sp

BLOCKS = {"der": 1, "gder": 3, "qder": 2, "cent": 1, "qcent": 1, "zder": 1}


def algebra_h():
    n, deg = 3, [0, 0, 1]
    c = [[[0] * n for _ in range(n)] for _ in range(n)]

    def set_bracket(i, j, vec):
        for k, v in enumerate(vec):
            c[i][j][k] = v
            c[j][i][k] = -((-1) ** (deg[i] * deg[j])) * v

    set_bracket(0, 1, [1, 0, 0])
    set_bracket(0, 2, [0, 0, 1])
    om = sp.zeros(n, n)
    om[0, 1], om[1, 0] = 1, -1
    return n, deg, c, om


def breve(alg):
    n, deg, c, om = alg
    big = 2 * n
    cc = [[[0] * big for _ in range(big)] for _ in range(big)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                cc[i][j][n + k] = c[i][j][k]
    o = sp.zeros(big, big)
    o[:n, :n] = om
    return big, deg + deg, cc, o


def bracket(alg, u, v):
    n, _, c, _ = alg
    return [sp.expand(sum(u[i] * v[j] * c[i][j][k] for i in range(n) for j in range(n))) for k in range(n)]


def unit(n, i):
    v = [0] * n
    v[i] = 1
    return v


def apply(m, v):
    return [sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(v))]


def admissible(deg, d):
    n = len(deg)
    return [(i, j) for i in range(n) for j in range(n) if (deg[i] + deg[j]) % 2 == d]


def compat_eqs(alg, d, m):
    n, deg, _, om = alg
    eqs = []
    for x in range(n):
        for y in range(n):
            s = (-1) ** (d * deg[x])
            dx, dy = apply(m, unit(n, x)), apply(m, unit(n, y))
            eqs.append(sum(dx[i] * om[i, y] for i in range(n)) + s * sum(om[x, j] * dy[j] for j in range(n)))
    return eqs


def space(alg, kind, d, compatible):
    """Projection onto the d block of the joint solution space, in RREF."""
    n, deg, _, _ = alg
    adm = admissible(deg, d)
    m = len(adm)
    nb = BLOCKS[kind]
    syms = sp.symbols("u0:%d" % (m * nb))

    def block(b):
        mat = [[0] * n for _ in range(n)]
        for t, (i, j) in enumerate(adm):
            mat[i][j] = syms[b * m + t]
        return mat

    ms = [block(b) for b in range(nb)]
    eqs = []
    for x in range(n):
        for y in range(n):
            ex, ey = unit(n, x), unit(n, y)
            s = (-1) ** (d * deg[x])
            bxy = bracket(alg, ex, ey)
            left = bracket(alg, apply(ms[0], ex), ey)
            if kind == "der":
                right = bracket(alg, ex, apply(ms[0], ey))
                eqs += [a - l - s * r for a, l, r in zip(apply(ms[0], bxy), left, right)]
            if kind == "gder":
                right = bracket(alg, ex, apply(ms[1], ey))
                eqs += [a - l - s * r for a, l, r in zip(apply(ms[2], bxy), left, right)]
            if kind == "qder":
                right = bracket(alg, ex, apply(ms[0], ey))
                eqs += [a - l - s * r for a, l, r in zip(apply(ms[1], bxy), left, right)]
            if kind in ("cent", "qcent"):
                right = bracket(alg, ex, apply(ms[0], ey))
                eqs += [l - s * r for l, r in zip(left, right)]
            if kind == "cent":
                eqs += [l - a for l, a in zip(left, apply(ms[0], bxy))]
            if kind == "zder":
                eqs += left + apply(ms[0], bxy)
    if compatible:
        eqs += compat_eqs(alg, d, ms[0])
    mx = sp.Matrix([[sp.expand(e).coeff(s_) for s_ in syms] for e in eqs]) if eqs else sp.zeros(1, len(syms))
    proj = [list(v[:m]) for v in mx.nullspace()]
    if not proj:
        return []
    r, piv = sp.Matrix(proj).rref()
    rows = []
    for i in range(len(piv)):
        full = [[0] * n for _ in range(n)]
        for t, (a, b) in enumerate(adm):
            full[a][b] = r[i, t]
        rows.append([str(x) for row in full for x in row])
    return rows


def compat_dim(alg, d):
    n, deg, _, _ = alg
    adm = admissible(deg, d)
    syms = sp.symbols("u0:%d" % len(adm))
    mat = [[0] * n for _ in range(n)]
    for t, (i, j) in enumerate(adm):
        mat[i][j] = syms[t]
    eqs = compat_eqs(alg, d, mat)
    mx = sp.Matrix([[sp.expand(e).coeff(s_) for s_ in syms] for e in eqs])
    return len(adm) - mx.rank()


def main():
    h = algebra_h()
    out = {"H": {}, "H-breve": {}}
    for kind in BLOCKS:
        for compatible in (False, True):
            even, odd = space(h, kind, 0, compatible), space(h, kind, 1, compatible)
            out["H"]["%s%s" % (kind, "-omega" if compatible else "")] = {
                "even": len(even),
                "odd": len(odd),
                "basis_even": even,
                "basis_odd": odd,
            }
    out["H"]["compatibility"] = {"even": compat_dim(h, 0), "odd": compat_dim(h, 1)}
    hb = breve(h)
    for kind in ("der", "zder"):
        for compatible in (False, True):
            dims = [len(space(hb, kind, d, compatible)) for d in (0, 1)]
            out["H-breve"]["%s%s" % (kind, "-omega" if compatible else "")] = {"even": dims[0], "odd": dims[1]}
    print(json.dumps(out, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
