"""Independent brute-force dimension oracle built directly on sympy.

Deliberately shares no code with the package: systems are assembled
symbolically and solved with sympy's own nullspace/rank routines, so the
numbers it produces are an independent check on the exact-rational path.
"""

from itertools import combinations

import sympy as sp


def _unit(n, i):
    return [sp.Integer(1) if t == i else sp.Integer(0) for t in range(n)]


def bracket(table, x, y):
    n = len(table)
    out = [sp.Integer(0)] * n
    for i in range(n):
        if x[i] == 0:
            continue
        for j in range(n):
            if y[j] == 0:
                continue
            for k in range(n):
                out[k] += x[i] * y[j] * table[i][j][k]
    return out


def ad(table, x):
    n = len(table)
    cols = [bracket(table, x, _unit(n, j)) for j in range(n)]
    return sp.Matrix(n, n, lambda r, c: cols[c][r])


def derivation_matrices(table):
    """Basis of the Leibniz solution space, via sympy's nullspace."""
    n = len(table)
    D = sp.Matrix(n, n, lambda r, c: sp.Symbol(f"d_{r}_{c}"))
    eqs = []
    for i, j in combinations(range(n), 2):
        lhs = D * sp.Matrix(table[i][j])
        rhs = (sp.Matrix(bracket(table, list(D[:, i]), _unit(n, j)))
               + sp.Matrix(bracket(table, _unit(n, i), list(D[:, j]))))
        eqs.extend(list(lhs - rhs))
    syms = [sp.Symbol(f"d_{r}_{c}") for r in range(n) for c in range(n)]
    A, _ = sp.linear_eq_to_matrix(eqs, syms)
    if not eqs:
        A = sp.zeros(1, n * n)
    return [sp.Matrix(n, n, lambda r, c: v[r * n + c]) for v in A.nullspace()]


def cocycle_dims(table):
    """(dim Der, dim cocycle space, dim inner, dim of the common kernel)."""
    n = len(table)
    ders = derivation_matrices(table)
    m = len(ders)
    flat = sp.Matrix([[d[r, c] for r in range(n) for c in range(n)]
                      for d in ders]).T
    def coords(mat):
        vec = sp.Matrix([mat[r, c] for r in range(n) for c in range(n)])
        (sol,) = sp.linsolve((flat, vec))
        return list(sol)
    comm = {}
    for i, j in combinations(range(m), 2):
        comm[(i, j)] = coords(ders[i] * ders[j] - ders[j] * ders[i])
    L = sp.Matrix(n, m, lambda r, c: sp.Symbol(f"l_{r}_{c}"))
    eqs = []
    for i, j in combinations(range(m), 2):
        lhs = sp.zeros(n, 1)
        for k in range(m):
            lhs += comm[(i, j)][k] * L[:, k]
        rhs = ders[i] * L[:, j] - ders[j] * L[:, i]
        eqs.extend(list(lhs - rhs))
    syms = [sp.Symbol(f"l_{r}_{c}") for r in range(n) for c in range(m)]
    A, _ = sp.linear_eq_to_matrix(eqs, syms)
    if not eqs:
        A = sp.zeros(1, n * m)
    p = len(A.nullspace())
    inner = sp.Matrix([[(-ders[j] * sp.Matrix(_unit(n, x)))[r]
                        for r in range(n) for j in range(m)]
                       for x in range(n)])
    stacked = sp.Matrix.vstack(*ders) if ders else sp.zeros(1, n)
    return m, p, inner.rank(), n - stacked.rank()


def holomorph_table(table):
    """Structure constants of Der(G) acting on G, basis (Der basis, G basis)."""
    n = len(table)
    ders = derivation_matrices(table)
    m = len(ders)
    flat = sp.Matrix([[d[r, c] for r in range(n) for c in range(n)]
                      for d in ders]).T
    def coords(mat):
        vec = sp.Matrix([mat[r, c] for r in range(n) for c in range(n)])
        (sol,) = sp.linsolve((flat, vec))
        return list(sol)
    total = m + n
    out = [[[sp.Integer(0)] * total for _ in range(total)] for _ in range(total)]
    for i, j in combinations(range(m), 2):
        for k, c in enumerate(coords(ders[i] * ders[j] - ders[j] * ders[i])):
            out[i][j][k] = c
            out[j][i][k] = -c
    for i in range(m):
        for j in range(n):
            for k in range(n):
                out[i][m + j][m + k] = ders[i][k, j]
                out[m + j][i][m + k] = -ders[i][k, j]
    for i, j in combinations(range(n), 2):
        for k in range(n):
            out[m + i][m + j][m + k] = table[i][j][k]
            out[m + j][m + i][m + k] = -table[i][j][k]
    return out


def lie_table(entry):
    g = entry.algebra
    return [[[sp.Rational(c) for c in g.table[i][j]] for j in range(g.dim)]
            for i in range(g.dim)]
