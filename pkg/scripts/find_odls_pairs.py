#!/usr/bin/env python3
"""Regenerate the tabulated orthogonal diagonal Latin pairs.

This is an offline tool, not part of the package: it needs ``python-sat``
(``pip install python-sat``). It prints a JSON object ``{order: [A, B]}``.

Two encodings are used.

``group``  (orders that are not 2 mod 4)
    Rows and columns are the elements of an abelian group ``G``. The pair
    is ``A(r, c) = r + c`` and ``B(r, c) = theta(r) + c``. Unknowns are
    permutations ``theta`` and ``phi`` and an involution ``iota`` of ``G``.
    Row ``r`` meets column ``phi(r)`` on the main diagonal and column
    ``phi(iota(r))`` on the back diagonal; every derived map must be a
    bijection. Reordering rows by ``iota``-pairs finishes the job.

``self-orthogonal``  (any order; used for 10, 14, 18, 21, 22, 26, 27, 30)
    One square ``L`` orthogonal to its own transpose, with the main diagonal
    and the cells ``(r, iota(r))`` as transversals, invariant under a
    permutation of the given cycle type applied to rows, columns and
    symbols at once. The pair is ``(L', L'^T)`` after the same reordering.

Usage::

    python scripts/find_odls_pairs.py group 2,2,3          # order 12
    python scripts/find_odls_pairs.py self-orthogonal 10 3,3,3,1
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from pysat.card import CardEnc, EncType
from pysat.formula import IDPool
from pysat.solvers import Cadical153


class _Cnf:
    def __init__(self):
        self.pool = IDPool()
        self.clauses: list[list[int]] = []

    def var(self, *key) -> int:
        return self.pool.id(key)

    def at_most_one(self, lits):
        self.clauses.extend(CardEnc.atmost(lits=lits, bound=1, vpool=self.pool, encoding=EncType.seqcounter).clauses)

    def exactly_one(self, lits):
        self.clauses.append(list(lits))
        self.at_most_one(lits)

    def permutation(self, name, n):
        for r in range(n):
            self.exactly_one([self.var(name, r, c) for c in range(n)])
            self.exactly_one([self.var(name, c, r) for c in range(n)])

    def involution(self, name, n):
        self.permutation(name, n)
        for r in range(n):
            for c in range(n):
                self.clauses.append([-self.var(name, r, c), self.var(name, c, r)])
        diag = [self.var(name, r, r) for r in range(n)]
        if n % 2 == 0:
            self.clauses.extend([-v] for v in diag)
        else:
            self.exactly_one(diag)

    def solve(self):
        with Cadical153(bootstrap_with=self.clauses) as s:
            if not s.solve():
                return None
            return {v for v in s.get_model() if v > 0}


def _pairing_order(iota):
    """Row order placing ``r`` and ``iota(r)`` at mirrored positions."""
    n = len(iota)
    first, seen = [], set()
    for r in range(n):
        if r not in seen and iota[r] != r:
            first.append(r)
            seen |= {r, iota[r]}
    fixed = [r for r in range(n) if iota[r] == r]
    return first + fixed + [iota[r] for r in reversed(first)]


def group_pair(mods):
    els = list(itertools.product(*[range(m) for m in mods]))
    n = len(els)
    idx = {e: k for k, e in enumerate(els)}
    add = [[idx[tuple((a + b) % m for a, b, m in zip(x, y, mods))] for y in els] for x in els]
    neg = [idx[tuple(-a % m for a, m in zip(x, mods))] for x in els]
    f = _Cnf()
    for name in ("theta", "phi", "psi"):
        f.permutation(name, n)
    f.involution("iota", n)
    for r in range(n):
        for s in range(n):
            for c in range(n):  # psi = phi o iota
                f.clauses.append([-f.var("iota", r, s), -f.var("phi", s, c), f.var("psi", r, c)])
    for v in range(n):
        f.exactly_one([f.var("theta", r, add[v][r]) for r in range(n)])  # theta - id is a bijection
        for name in ("phi", "psi"):
            f.exactly_one([f.var(name, r, add[v][neg[r]]) for r in range(n)])  # r + phi(r)
    for name in ("phi", "psi"):
        by_value = [[] for _ in range(n)]
        for r in range(n):
            for a in range(n):
                for c in range(n):
                    y = f.var("sum", name, r, a, c)
                    f.clauses.append([-f.var("theta", r, a), -f.var(name, r, c), y])
                    by_value[add[a][c]].append(y)
        for lits in by_value:  # theta(r) + phi(r) is a bijection
            f.at_most_one(lits)
    model = f.solve()
    if model is None:
        return None

    def perm(name):
        return [next(c for c in range(n) if f.var(name, r, c) in model) for r in range(n)]

    theta, phi, iota = perm("theta"), perm("phi"), perm("iota")
    rows = _pairing_order(iota)
    cols = [phi[r] for r in rows]
    a = [[add[r][c] for c in cols] for r in rows]
    b = [[add[theta[r]][c] for c in cols] for r in rows]
    return a, b


def self_orthogonal_pair(n, cycles):
    shift, start = [], 0
    for length in cycles:
        shift += [start + (k + 1) % length for k in range(length)]
        start += length
    if start != n:
        raise SystemExit("cycle lengths must sum to the order")
    f = _Cnf()

    def x(i, j, a):
        return f.var("x", i, j, a)

    for i in range(n):
        for j in range(n):
            f.exactly_one([x(i, j, a) for a in range(n)])
    for a in range(n):
        for i in range(n):
            f.exactly_one([x(i, j, a) for j in range(n)])
            f.exactly_one([x(j, i, a) for j in range(n)])
        f.exactly_one([x(i, i, a) for i in range(n)])
        for i in range(n):
            for j in range(n):
                f.clauses.append([-x(i, j, a), x(shift[i], shift[j], shift[a])])
    f.involution("iota", n)
    for a in range(n):
        lits = []
        for i in range(n):
            for j in range(n):
                y = f.var("back", i, j, a)
                f.clauses.append([-x(i, j, a), -f.var("iota", i, j), y])
                lits.append(y)
        f.at_most_one(lits)
    for a in range(n):
        for b in range(n):
            lits = [x(i, i, a) for i in range(n)] if a == b else []
            for i in range(n):
                for j in range(i + 1, n):
                    z = f.var("pair", i, j, a, b)
                    f.clauses.append([-x(i, j, a), -x(j, i, b), z])
                    lits.append(z)
                    if a != b:
                        z2 = f.var("pair", j, i, a, b)
                        f.clauses.append([-x(j, i, a), -x(i, j, b), z2])
                        lits.append(z2)
            f.at_most_one(lits)
    model = f.solve()
    if model is None:
        return None
    grid = [[next(a for a in range(n) if x(i, j, a) in model) for j in range(n)] for i in range(n)]
    iota = [next(c for c in range(n) if f.var("iota", r, c) in model) for r in range(n)]
    order = _pairing_order(iota)
    a = [[grid[r][c] for c in order] for r in order]
    return a, [list(col) for col in zip(*a)]


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="method", required=True)
    g = sub.add_parser("group")
    g.add_argument("moduli", help="comma-separated cyclic factors, e.g. 2,2,3")
    s = sub.add_parser("self-orthogonal")
    s.add_argument("order", type=int)
    s.add_argument("cycles", help="automorphism cycle type, e.g. 3,3,3,1")
    args = p.parse_args(argv)
    if args.method == "group":
        mods = [int(v) for v in args.moduli.split(",")]
        found = group_pair(mods)
    else:
        found = self_orthogonal_pair(args.order, [int(v) for v in args.cycles.split(",")])
    if found is None:
        print("unsatisfiable", file=sys.stderr)
        return 1
    json.dump({len(found[0]): found}, sys.stdout)
    print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
