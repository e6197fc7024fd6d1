#!/usr/bin/env python3
"""Writes offline OEIS b-file fixtures into data/oeis/.

Each sequence is computed from its defining formula, not downloaded; the
first line of every file says so.
"""
from math import comb, factorial
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "data" / "oeis"


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def multi_catalan(k, n):
    # Hook-length count of k x n standard Young tableaux.
    num = factorial(k * n)
    den = 1
    for i in range(k):
        for j in range(n):
            den *= (k - 1 - i) + (n - 1 - j) + 1
    return num // den


def a015448(count):
    a = [1, 1]
    while len(a) < count:
        a.append(4 * a[-1] + a[-2])
    return list(enumerate(a[:count]))


def a274969(count):
    return [(n, comb(3 * n, n) - 2 * (comb(3 * n, n - 1) if n >= 1 else 0)
             + (comb(3 * n, n - 2) if n >= 2 else 0)) for n in range(count)]


def a060854(diagonals):
    out, i = [], 1
    for s in range(2, diagonals + 2):
        for m in range(1, s):
            out.append((i, multi_catalan(m, s - m)))
            i += 1
    return out


def a001263(rows):
    out, i = [], 1
    for n in range(1, rows + 1):
        for k in range(1, n + 1):
            out.append((i, comb(n, k) * comb(n, k - 1) // n))
            i += 1
    return out


SEQUENCES = {
    "A000108": ("Catalan numbers C(2n,n)/(n+1)", [(n, catalan(n)) for n in range(20)]),
    "A001246": ("squares of Catalan numbers", [(n, catalan(n) ** 2) for n in range(20)]),
    "A015448": ("a(n) = 4a(n-1) + a(n-2), a(0) = a(1) = 1", a015448(20)),
    "A274969": ("C(3n,n) - 2C(3n,n-1) + C(3n,n-2)", a274969(20)),
    "A060854": ("k x n multidimensional Catalan array by antidiagonals (hook-length formula)", a060854(10)),
    "A001263": ("Narayana triangle C(n,k)C(n,k-1)/n by rows", a001263(10)),
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for anum, (what, terms) in SEQUENCES.items():
        lines = [f"# {anum}: generated offline from the formula {what}; not downloaded from oeis.org"]
        lines += [f"{i} {v}" for i, v in terms]
        (OUT / f"b{anum[1:]}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
