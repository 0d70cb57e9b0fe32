"""Slow, obviously-correct reference implementations used only by the tests.

Everything here works on plain nested lists and ``itertools`` loops so it
shares no code path with the vectorised checkers in the package.
"""

import itertools
from collections import Counter

LABEL_FLAGS = {
    "l": "S", "r": "T", "f": "ST",
    "ll": "AS", "rl": "BS", "lr": "AT", "rr": "BT",
    "fl": "ABS", "fr": "ABT", "lf": "AST", "rf": "BST", "ff": "ABST",
}


def first_assoc_failure(t):
    n = len(t)
    for x, y, z in itertools.product(range(n), repeat=3):
        if t[t[x][y]][z] != t[x][t[y][z]]:
            return (x, y, z)
    return None


def is_up_algebra(t, zero=0):
    n = len(t)
    r = range(n)
    return (
        all(t[t[y][z]][t[t[x][y]][t[x][z]]] == zero for x in r for y in r for z in r)
        and all(t[zero][x] == x for x in r)
        and all(t[x][zero] == zero for x in r)
        and all(x == y for x in r for y in r if t[x][y] == zero and t[y][x] == zero)
    )


def left_dist(f, g):
    r = range(len(f))
    return all(f[x][g[y][z]] == g[f[x][y]][f[x][z]] for x in r for y in r for z in r)


def right_dist(f, g):
    r = range(len(f))
    return all(f[g[y][z]][x] == g[f[y][x]][f[z][x]] for x in r for y in r for z in r)


def labels(dot, star):
    """Label codes by direct reading of the twelve class definitions."""
    flags = {
        "A": left_dist(dot, star),   # dot left over star
        "B": right_dist(dot, star),
        "S": left_dist(star, dot),   # star left over dot
        "T": right_dist(star, dot),
    }
    return {code for code, need in LABEL_FLAGS.items() if all(flags[c] for c in need)}


def tables(n, fixed=None):
    """All n x n tables, with ``fixed`` cells {(x, y): v} pinned."""
    fixed = fixed or {}
    cells = [(x, y) for x in range(n) for y in range(n) if (x, y) not in fixed]
    for values in itertools.product(range(n), repeat=len(cells)):
        t = [[None] * n for _ in range(n)]
        for (x, y), v in fixed.items():
            t[x][y] = v
        for (x, y), v in zip(cells, values):
            t[x][y] = v
        yield t


def naive_up_algebras(n):
    """Filter every table whose zero row/column already satisfy 0.x = x, x.0 = 0."""
    fixed = {(0, x): x for x in range(n)}
    fixed.update({(x, 0): 0 for x in range(n)})
    return [t for t in tables(n, fixed) if is_up_algebra(t)]


def naive_semigroups(n):
    return [t for t in tables(n) if first_assoc_failure(t) is None]


def naive_pair_counts(n):
    ups = naive_up_algebras(n)
    sgs = naive_semigroups(n)
    c = Counter()
    for d in ups:
        for s in sgs:
            c.update(labels(d, s))
    return len(ups), len(sgs), len(ups) * len(sgs), {code: c[code] for code in LABEL_FLAGS}


def relabel(t, p):
    n = len(t)
    out = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            out[p[x]][p[y]] = p[t[x][y]]
    return out


def iso_classes(structs):
    """Group tuples of tables under relabelings fixing 0; return class count."""
    seen = set()
    count = 0
    for s in structs:
        key = tuple(tuple(map(tuple, t)) for t in s)
        if key in seen:
            continue
        count += 1
        n = len(s[0])
        for img in itertools.permutations(range(1, n)):
            p = (0,) + img
            seen.add(tuple(tuple(map(tuple, relabel(t, p))) for t in s))
    return count


# power sets with real Python sets

def subsets(m):
    """Subsets of {0..m-1} indexed by their bitmask code."""
    return [frozenset(i for i in range(m) if code >> i & 1) for code in range(1 << m)]


def set_op(kind, a, b, universe):
    return {
        "dot": lambda: (universe - a) & b,
        "star": lambda: (universe - a) | b,
        "odot": lambda: universe,
        "otimes": lambda: frozenset(),
        "boxdot": lambda: b,
        "boxtimes": lambda: a,
        "cap": lambda: a & b,
        "cup": lambda: a | b,
    }[kind]()


def set_table(m, kind):
    subs = subsets(m)
    index = {s: i for i, s in enumerate(subs)}
    universe = frozenset(range(m))
    return [[index[set_op(kind, a, b, universe)] for b in subs] for a in subs]
