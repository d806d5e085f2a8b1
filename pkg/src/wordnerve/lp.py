"""Exact feasibility of equality systems A x = b, x >= 0 over the rationals.

Phase-I simplex with Bland's smallest-index anti-cycling rule, on a dense
Fraction tableau: minimize the sum of one artificial variable per row.
Feasible iff the optimum is zero.  Everything is exact, so the verdict is
independent of row and column order, and termination is guaranteed.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def feasible_eq_nonneg(rows: list[list[Fraction]], rhs: list[Fraction]) -> bool:
    """Is there x >= 0 with rows . x = rhs?  Exact Phase-I simplex."""
    m = len(rows)
    if m == 0:
        return True
    n = len(rows[0])

    # Tableau: [A | I | b], artificial j has column n+j.  Flip rows so b >= 0.
    tab: list[list[Fraction]] = []
    for i in range(m):
        assert len(rows[i]) == n
        sign = -1 if rhs[i] < 0 else 1
        row = [sign * a for a in rows[i]]
        row += [ONE if j == i else ZERO for j in range(m)]
        row.append(sign * rhs[i])
        tab.append(row)
    basis = [n + i for i in range(m)]
    width = n + m + 1

    # Phase-I objective row: z = sum of artificials; express in terms of
    # nonbasic columns by subtracting every tableau row.
    obj = [ZERO] * width
    for j in range(n, n + m):
        obj[j] = ONE
    for row in tab:
        for j in range(width):
            obj[j] -= row[j]

    while True:
        enter = -1
        for j in range(n + m):  # Bland: smallest eligible index enters
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            # Unbounded Phase-I objective cannot happen (bounded below by 0);
            # guard anyway.
            raise ArithmeticError("phase-I simplex unbounded")
        piv = tab[leave][enter]
        tab[leave] = [a / piv for a in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [a - f * b for a, b in zip(obj, tab[leave])]
        basis[leave] = enter

    return -obj[-1] == 0  # objective value = -obj[rhs]; feasible iff 0
