#!/usr/bin/env python3
"""Independent checker for soslen length certificates (standard library only).

usage: verify_certificate.py CERT.json
Exit status 0 if every claim checks out, 1 otherwise.
"""
import itertools
import json
import sys
from fractions import Fraction


def monomials(n, e):
    """Exponent tuples of degree e, lex-largest first."""
    out = [c for c in itertools.product(range(e + 1), repeat=n) if sum(c) == e]
    return sorted(out, reverse=True)


def rank(rows, p=None):
    rows = [[Fraction(x) if p is None else x % p for x in r] for r in rows]
    r = 0
    for c in range(len(rows[0]) if rows else 0):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c] if p is None else pow(rows[r][c], p - 2, p)
        for i in range(r + 1, len(rows)):
            f = rows[i][c] * inv
            if f:
                rows[i] = [a - f * b if p is None else (a - f * b) % p for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def main(path):
    cert = json.load(open(path))
    n, d, s = cert["n"], cert["d"], cert["s"]
    md, m2d = monomials(n, d), monomials(n, 2 * d)
    index2d = {m: i for i, m in enumerate(m2d)}
    basis = [[int(c) for c in v] for v in cert["basis"]]
    points = cert["points"]
    failures = []

    def product(u, v):
        out = [0] * len(m2d)
        for a, ca in zip(md, u):
            for b, cb in zip(md, v):
                if ca and cb:
                    out[index2d[tuple(x + y for x, y in zip(a, b))]] += ca * cb
        return out

    def mono(m, x):
        term = 1
        for xi, ai in zip(x, m):
            term *= xi ** ai
        return term

    def value(v, x):
        return sum(c * mono(m, x) for m, c in zip(md, v))

    b = len(basis)
    if any(len(v) != len(md) for v in basis) or len(points) != s:
        failures.append("shape mismatch")
    elif b != len(md) - s or cert["length"] != b:
        failures.append("length is not N_d - s")
    else:
        squares = [0] * len(m2d)
        for v in basis:
            squares = [x + y for x, y in zip(squares, product(v, v))]
        if squares != [int(c) for c in cert["witness"]]:
            failures.append("witness is not the sum of squares of the basis")
        if any(value(v, x) for v in basis for x in points):
            failures.append("a basis form does not vanish on Z")
        if rank([[mono(m, x) for m in md] for x in points]) != s:
            failures.append("points do not impose independent conditions in degree d")
        pairs = [product(basis[i], basis[j]) for i in range(b) for j in range(i, b)]
        if not any(rank(pairs, p) == b * (b + 1) // 2 for p in cert["primes"]):
            failures.append("product map not shown injective")
    for f in failures:
        print("FAIL:", f)
    if not failures:
        print(f"OK: n={n} d={d} s={s} length={b}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
