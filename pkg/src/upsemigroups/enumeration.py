"""Exhaustive enumeration of small UP-algebras and UP-semigroup pairs.

The zero is pinned to element 0.  Isomorphism means relabeling by a
permutation that fixes 0, and the canonical key of a structure is the
lexicographically least entry sequence over all such relabelings.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import numpy as np

from .core import (
    CayleyTable,
    ClassLabel,
    DomainError,
    SemigroupOp,
    UpAlgebra,
    classify,
    DistributivityProfile,
    label_masks,
    profile_matrix,
)

log = logging.getLogger(__name__)

MAX_SEARCH_ORDER = 5


@dataclass(frozen=True)
class SearchConfig:
    order: int
    up_to_iso: bool = False
    class_filter: ClassLabel | None = None
    limit: int | None = None

    def __post_init__(self):
        if not 1 <= self.order <= MAX_SEARCH_ORDER:
            raise DomainError(f"search order must be in 1..{MAX_SEARCH_ORDER}, got {self.order}")
        if self.limit is not None and self.limit < 0:
            raise DomainError("limit must be non-negative")


@dataclass
class EnumerationSummary:
    order: int
    up_to_iso: bool
    count_up_algebras: int = 0
    count_semigroups: int = 0
    count_pairs: int = 0
    label_counts: dict[ClassLabel, int] = field(
        default_factory=lambda: {label: 0 for label in ClassLabel}
    )

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "up_to_iso": self.up_to_iso,
            "count_up_algebras": self.count_up_algebras,
            "count_semigroups": self.count_semigroups,
            "count_pairs": self.count_pairs,
            "label_counts": {label.value: n for label, n in self.label_counts.items()},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EnumerationSummary":
        return cls(
            order=d["order"],
            up_to_iso=d["up_to_iso"],
            count_up_algebras=d["count_up_algebras"],
            count_semigroups=d["count_semigroups"],
            count_pairs=d["count_pairs"],
            label_counts={ClassLabel(k): v for k, v in d["label_counts"].items()},
        )


# --- backtracking generators --------------------------------------------

def _up_search(n: int) -> Iterator[list[int]]:
    """Row-major backtracking over the cells not forced by 0.x = x, x.0 = 0, x.x = 0."""
    t = [-1] * (n * n)
    for x in range(n):
        t[x] = x            # 0.x = x
        t[x * n] = 0        # x.0 = 0
        t[x * n + x] = 0    # x.x = 0
    free = [x * n + y for x in range(1, n) for y in range(1, n) if x != y]
    triples = [(x, y, z) for x in range(n) for y in range(n) for z in range(n)]

    def consistent(cell: int) -> bool:
        i, j = divmod(cell, n)
        # UP-4 for the pair touched by this cell
        if t[cell] == 0 and t[j * n + i] == 0:
            return False
        for x, y, z in triples:
            yz = t[y * n + z]
            xy = t[x * n + y]
            xz = t[x * n + z]
            if yz < 0 or xy < 0 or xz < 0:
                continue
            r = t[xy * n + xz]
            if r < 0:
                continue
            v = t[yz * n + r]
            if v > 0:
                return False
        return True

    def go(k: int):
        if k == len(free):
            yield list(t)
            return
        cell = free[k]
        for v in range(n):
            t[cell] = v
            if consistent(cell):
                yield from go(k + 1)
        t[cell] = -1

    yield from go(0)


def _semigroup_search(n: int) -> Iterator[list[int]]:
    """Row-major backtracking over all n*n cells with incremental associativity."""
    t = [-1] * (n * n)
    cells = n * n

    def bad(x: int, y: int, z: int) -> bool:
        xy = t[x * n + y]
        yz = t[y * n + z]
        if xy < 0 or yz < 0:
            return False
        a = t[xy * n + z]
        b = t[x * n + yz]
        return a >= 0 and b >= 0 and a != b

    def consistent(cell: int) -> bool:
        i, j = divmod(cell, n)
        for w in range(n):
            # cell read as x.y, as y.z, or as an outer product
            if bad(i, j, w) or bad(w, i, j):
                return False
        for c in range(cell + 1):
            tc = t[c]
            if tc == i:
                x, y = divmod(c, n)
                if bad(x, y, j):
                    return False
            if tc == j:
                y, z = divmod(c, n)
                if bad(i, y, z):
                    return False
        return True

    def go(k: int):
        if k == cells:
            yield list(t)
            return
        for v in range(n):
            t[k] = v
            if consistent(k):
                yield from go(k + 1)
        t[k] = -1

    yield from go(0)


@lru_cache(maxsize=None)
def up_algebra_tables(order: int) -> np.ndarray:
    """All UP tables of ``order`` with zero 0, lexicographic, shape (M, n, n)."""
    SearchConfig(order)
    rows = list(_up_search(order))
    arr = np.array(rows, dtype=np.intp).reshape(len(rows), order, order)
    arr.flags.writeable = False
    log.debug("order %d: %d UP-algebras", order, len(rows))
    return arr


@lru_cache(maxsize=None)
def semigroup_tables(order: int) -> np.ndarray:
    """All associative tables of ``order``, lexicographic, shape (K, n, n)."""
    SearchConfig(order)
    rows = list(_semigroup_search(order))
    arr = np.array(rows, dtype=np.intp).reshape(len(rows), order, order)
    arr.flags.writeable = False
    log.debug("order %d: %d semigroups", order, len(rows))
    return arr


# --- canonical forms -----------------------------------------------------

def zero_fixing_perms(order: int, zero: int = 0) -> list[tuple[int, ...]]:
    others = [x for x in range(order) if x != zero]
    perms = []
    for img in itertools.permutations(others):
        p = list(range(order))
        for src, dst in zip(others, img):
            p[src] = dst
        perms.append(tuple(p))
    return perms


def _relabel_stack(stack: np.ndarray, perm: np.ndarray) -> np.ndarray:
    """Relabel each table in ``stack`` (K, n, n) by ``x -> perm[x]``."""
    inv = np.argsort(perm)
    return perm[stack[:, inv[:, None], inv[None, :]]]


def _codes(stack: np.ndarray, n: int) -> np.ndarray:
    """Encode tables as integers whose base-n digits are the entries."""
    flat = stack.reshape(stack.shape[0], -1).astype(np.int64)
    weights = n ** np.arange(flat.shape[1] - 1, -1, -1, dtype=np.int64)
    return flat @ weights


CanonicalKey = tuple


def canonical_key(dot: CayleyTable, star: CayleyTable | None = None, zero: int = 0) -> CanonicalKey:
    """Least relabeled entry sequence (dot entries, then star entries)."""
    if star is not None and star.order != dot.order:
        raise DomainError(f"order mismatch: {dot.order} vs {star.order}")
    if not 0 <= zero < dot.order:
        raise DomainError(f"zero {zero} out of range for order {dot.order}")
    best = None
    for p in zero_fixing_perms(dot.order, zero):
        key = dot.relabel(p).entries
        if star is not None:
            key += star.relabel(p).entries
        if best is None or key < best:
            best = key
    return best


def automorphisms(dot: np.ndarray) -> list[np.ndarray]:
    n = dot.shape[0]
    out = []
    for p in zero_fixing_perms(n):
        p = np.array(p)
        if np.array_equal(_relabel_stack(dot[None], p)[0], dot):
            out.append(p)
    return out


@lru_cache(maxsize=None)
def up_algebra_classes(order: int) -> np.ndarray:
    """Canonical forms of the UP-algebras of ``order``, ascending by key."""
    tables = up_algebra_tables(order)
    perms = [np.array(p) for p in zero_fixing_perms(order)]
    codes = np.min([_codes(_relabel_stack(tables, p), order) for p in perms], axis=0)
    uniq, first = np.unique(codes, return_index=True)
    reps = []
    for i in first:
        t = tables[i]
        forms = [_relabel_stack(t[None], p)[0] for p in perms]
        reps.append(min(forms, key=lambda f: tuple(f.ravel())))
    arr = np.array(reps, dtype=np.intp).reshape(len(reps), order, order)
    arr.flags.writeable = False
    return arr


def _decode(codes: np.ndarray, n: int) -> np.ndarray:
    digits = np.empty((len(codes), n * n), dtype=np.intp)
    rest = codes.copy()
    for c in range(n * n - 1, -1, -1):
        digits[:, c] = rest % n
        rest //= n
    return digits.reshape(len(codes), n, n)


_ORBIT_CHUNK = 16384


def _orbit_representatives(dot: np.ndarray, stars: np.ndarray) -> np.ndarray:
    """Canonical star tables, one per Aut(dot)-orbit, ascending.

    ``dot`` must already be in canonical form, so the least pair key is
    reached exactly by the automorphisms of ``dot``.
    """
    n = dot.shape[0]
    auts = automorphisms(dot)
    best = np.concatenate([
        np.min([_codes(_relabel_stack(stars[i:i + _ORBIT_CHUNK], p), n) for p in auts], axis=0)
        for i in range(0, len(stars), _ORBIT_CHUNK)
    ])
    return _decode(np.unique(best), n)


# --- public enumeration API ----------------------------------------------

def _dot_tables(cfg: SearchConfig) -> np.ndarray:
    return up_algebra_classes(cfg.order) if cfg.up_to_iso else up_algebra_tables(cfg.order)


def enumerate_up_algebras(cfg: SearchConfig) -> Iterator[UpAlgebra]:
    """Yield every UP-algebra of ``cfg.order`` with zero 0.

    With ``up_to_iso`` one canonical form per isomorphism class is yielded,
    in ascending key order.  ``limit`` caps the number yielded.
    """
    tables = _dot_tables(cfg)
    if cfg.limit is not None:
        tables = tables[: cfg.limit]
    for t in tables:
        yield UpAlgebra._trusted(CayleyTable.from_array(t), 0)


def count_up_algebras(order: int, up_to_iso: bool = False) -> int:
    cfg = SearchConfig(order, up_to_iso)
    return len(_dot_tables(cfg))


def _pair_blocks(cfg: SearchConfig) -> Iterator[tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """Per UP table: (dot, star stack, profile matrix)."""
    stars = semigroup_tables(cfg.order)
    for dot in _dot_tables(cfg):
        block = _orbit_representatives(dot, stars) if cfg.up_to_iso else stars
        yield dot, block, profile_matrix(dot, block)


def enumerate_up_semigroups(
    cfg: SearchConfig,
) -> Iterator[tuple[UpAlgebra, SemigroupOp, frozenset[ClassLabel]]]:
    """Yield (UP-algebra, semigroup, labels) for every pair of ``cfg.order``.

    Raw mode follows generation order (UP tables, then semigroup tables,
    both lexicographic); ``up_to_iso`` follows ascending canonical key.
    ``class_filter`` keeps only pairs carrying that label.
    """
    emitted = 0
    for dot, block, prof in _pair_blocks(cfg):
        keep = np.ones(len(block), dtype=bool)
        if cfg.class_filter is not None:
            keep = label_masks(prof)[cfg.class_filter]
        if not keep.any():
            continue
        alg = UpAlgebra._trusted(CayleyTable.from_array(dot), 0)
        for i in np.flatnonzero(keep):
            if cfg.limit is not None and emitted >= cfg.limit:
                return
            profile = DistributivityProfile(*(bool(b) for b in prof[i]))
            star = SemigroupOp._trusted(CayleyTable.from_array(block[i]))
            yield alg, star, classify(profile)
            emitted += 1


def summarize(cfg: SearchConfig) -> EnumerationSummary:
    """Exact counts for ``cfg.order``; ``class_filter`` and ``limit`` are ignored."""
    summary = EnumerationSummary(cfg.order, cfg.up_to_iso)
    summary.count_up_algebras = count_up_algebras(cfg.order, cfg.up_to_iso)
    summary.count_semigroups = len(semigroup_tables(cfg.order))
    for _, block, prof in _pair_blocks(cfg):
        summary.count_pairs += len(block)
        for label, mask in label_masks(prof).items():
            summary.label_counts[label] += int(mask.sum())
    return summary


@dataclass
class SingletonReport:
    """Counts of rf/ff-labelled pairs per order, and any offender found."""

    counts: dict[int, tuple[int, int]]
    offenders: list[tuple[UpAlgebra, SemigroupOp, frozenset[ClassLabel]]]

    @property
    def passed(self) -> bool:
        return not self.offenders and all(
            c == ((1, 1) if n == 1 else (0, 0)) for n, c in self.counts.items()
        )

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "counts": {str(n): {"rf": rf, "ff": ff} for n, (rf, ff) in self.counts.items()},
            "offenders": [
                {"dot": a.table.rows(), "star": s.table.rows(), "labels": sorted(l.value for l in lab)}
                for a, s, lab in self.offenders
            ],
        }


def confirm_rf_ff_singleton(max_order: int) -> SingletonReport:
    """Check that the trivial algebra is the only rf- and ff-structure up to ``max_order``."""
    SearchConfig(max_order)
    counts = {}
    offenders = []
    for n in range(1, max_order + 1):
        s = summarize(SearchConfig(n))
        counts[n] = (s.label_counts[ClassLabel.RF], s.label_counts[ClassLabel.FF])
        if n > 1 and counts[n] != (0, 0):
            offenders.extend(enumerate_up_semigroups(SearchConfig(n, class_filter=ClassLabel.RF, limit=1)))
            offenders.extend(enumerate_up_semigroups(SearchConfig(n, class_filter=ClassLabel.FF, limit=1)))
    return SingletonReport(counts, offenders)
