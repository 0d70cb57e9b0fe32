"""Finite operation tables, law checkers with witnesses, and the class labels.

Every checker scans its quantified law exhaustively over the full grid of
variable assignments and reports, per violated law, the lexicographically
smallest witnessing tuple (leftmost variable outermost).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

import numpy as np

MAX_ORDER = 16


class DomainError(ValueError):
    """Raised for out-of-range elements, bad tables, or mismatched orders."""


class AxiomError(ValueError):
    """Raised when a table fails the laws required by a validated type."""

    def __init__(self, message: str, report: "CheckReport | None" = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class CayleyTable:
    """A binary operation on ``{0, ..., order-1}`` stored row-major."""

    order: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.order, (int, np.integer)) or not 1 <= self.order <= MAX_ORDER:
            raise DomainError(f"order must be in 1..{MAX_ORDER}, got {self.order!r}")
        entries = tuple(int(e) for e in self.entries)
        if len(entries) != self.order * self.order:
            raise DomainError(
                f"expected {self.order * self.order} entries, got {len(entries)}"
            )
        for i, e in enumerate(entries):
            if not 0 <= e < self.order:
                raise DomainError(
                    f"entry {e} at ({i // self.order},{i % self.order}) out of range"
                )
        object.__setattr__(self, "order", int(self.order))
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "CayleyTable":
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise DomainError(f"table is not square: row of length {len(r)} in order {n}")
        return cls(n, tuple(int(e) for r in rows for e in r))

    @classmethod
    def from_array(cls, arr) -> "CayleyTable":
        arr = np.asarray(arr)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DomainError(f"expected a square array, got shape {arr.shape}")
        return cls(arr.shape[0], tuple(arr.ravel().tolist()))

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array(self.entries, dtype=np.intp).reshape(self.order, self.order)
        a.flags.writeable = False
        return a

    def __call__(self, x: int, y: int) -> int:
        return self.entries[x * self.order + y]

    def rows(self) -> list[list[int]]:
        n = self.order
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]

    def relabel(self, perm: Sequence[int]) -> "CayleyTable":
        """Image of the operation under the bijection ``x -> perm[x]``."""
        p = np.asarray(perm, dtype=np.intp)
        if sorted(p.tolist()) != list(range(self.order)):
            raise DomainError(f"{list(perm)} is not a permutation of 0..{self.order - 1}")
        out = np.empty_like(self.array)
        out[np.ix_(p, p)] = p[self.array]
        return CayleyTable.from_array(out)

    def __str__(self):
        return "\n".join(" ".join(str(e) for e in r) for r in self.rows())


def _check_element(x: int, order: int, what: str = "element") -> int:
    if not isinstance(x, (int, np.integer)) or not 0 <= x < order:
        raise DomainError(f"{what} {x!r} out of range for order {order}")
    return int(x)


# --- laws ----------------------------------------------------------------

LawFn = Callable[..., tuple]


@dataclass(frozen=True)
class Law:
    """A universally quantified law over ``arity`` variables.

    ``fn(ops, zero, *vars)`` returns ``(holds, lhs, rhs)`` and must work both
    on broadcast index grids and on 0-d arrays.  ``lhs``/``rhs`` are the two
    values compared by the (conclusion of the) law.
    """

    name: str
    arity: int
    formula: str
    fn: LawFn = field(repr=False, compare=False)

    def holds_at(self, ops: Sequence[np.ndarray], zero: int, elements: Sequence[int]) -> bool:
        args = [np.asarray(v, dtype=np.intp) for v in elements]
        holds, _, _ = self.fn(ops, zero, *args)
        return bool(holds)


@dataclass(frozen=True)
class Witness:
    law: str
    elements: tuple[int, ...]
    lhs: int
    rhs: int

    def to_dict(self) -> dict:
        return {"law": self.law, "elements": list(self.elements), "lhs": self.lhs, "rhs": self.rhs}

    @classmethod
    def from_dict(cls, d: dict) -> "Witness":
        return cls(d["law"], tuple(d["elements"]), d["lhs"], d["rhs"])


@dataclass(frozen=True)
class CheckReport:
    """Outcome of checking a group of laws: at most one witness per law."""

    laws: tuple[str, ...]
    witnesses: tuple[Witness, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def __bool__(self):
        return self.passed

    @property
    def failed(self) -> tuple[str, ...]:
        return tuple(w.law for w in self.witnesses)

    @property
    def results(self) -> dict[str, bool]:
        bad = set(self.failed)
        return {law: law not in bad for law in self.laws}

    @property
    def witness(self) -> Witness | None:
        return self.witnesses[0] if self.witnesses else None

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "laws": list(self.laws),
            "witnesses": [w.to_dict() for w in self.witnesses],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CheckReport":
        return cls(tuple(d["laws"]), tuple(Witness.from_dict(w) for w in d["witnesses"]))


def _implies(premise, conclusion):
    return np.logical_or(np.logical_not(premise), conclusion)


def scan_law(law: Law, ops: Sequence[np.ndarray], zero: int = 0) -> Witness | None:
    """Exhaustively evaluate ``law``; return the first failing tuple or None."""
    n = ops[0].shape[0]
    grid = np.ix_(*[np.arange(n)] * law.arity)
    holds, lhs, rhs = law.fn(ops, zero, *grid)
    shape = (n,) * law.arity
    holds = np.broadcast_to(holds, shape)
    if holds.all():
        return None
    idx = tuple(int(i) for i in np.unravel_index(int(np.argmin(holds)), shape))
    lhs = int(np.broadcast_to(lhs, shape)[idx])
    rhs = int(np.broadcast_to(rhs, shape)[idx])
    return Witness(law.name, idx, lhs, rhs)


def _run(laws: Iterable[Law], ops, zero=0) -> CheckReport:
    laws = tuple(laws)
    found = (scan_law(law, ops, zero) for law in laws)
    return CheckReport(tuple(l.name for l in laws), tuple(w for w in found if w is not None))


def _up1(ops, zero, x, y, z):
    (t,) = ops
    lhs = t[t[y, z], t[t[x, y], t[x, z]]]
    return lhs == zero, lhs, zero


def _up2(ops, zero, x):
    (t,) = ops
    lhs = t[zero, x]
    return lhs == x, lhs, x


def _up3(ops, zero, x):
    (t,) = ops
    lhs = t[x, zero]
    return lhs == zero, lhs, zero


def _up4(ops, zero, x, y):
    (t,) = ops
    both = (t[x, y] == zero) & (t[y, x] == zero)
    return _implies(both, x == y), x, y


UP_AXIOMS = (
    Law("UP-1", 3, "(y.z).((x.y).(x.z)) = 0", _up1),
    Law("UP-2", 1, "0.x = x", _up2),
    Law("UP-3", 1, "x.0 = 0", _up3),
    Law("UP-4", 2, "x.y = 0 and y.x = 0 implies x = y", _up4),
)


def _assoc(ops, zero, x, y, z):
    (t,) = ops
    lhs = t[t[x, y], z]
    rhs = t[x, t[y, z]]
    return lhs == rhs, lhs, rhs


def _left_dist(ops, zero, x, y, z):
    f, g = ops
    lhs = f[x, g[y, z]]
    rhs = g[f[x, y], f[x, z]]
    return lhs == rhs, lhs, rhs


def _right_dist(ops, zero, x, y, z):
    f, g = ops
    lhs = f[g[y, z], x]
    rhs = g[f[y, x], f[z, x]]
    return lhs == rhs, lhs, rhs


ASSOCIATIVITY = Law("assoc", 3, "(x*y)*z = x*(y*z)", _assoc)
LEFT_DIST = Law("left-dist", 3, "x f (y g z) = (x f y) g (x f z)", _left_dist)
RIGHT_DIST = Law("right-dist", 3, "(y g z) f x = (y f x) g (z f x)", _right_dist)


# Consequences of UP-1..UP-4, valid in every UP-algebra.  Variables are
# scanned in the order (x, y, z, a).
def _d_self(ops, zero, x):
    (t,) = ops
    lhs = t[x, x]
    return lhs == zero, lhs, zero


def _d_trans(ops, zero, x, y, z):
    (t,) = ops
    lhs = t[x, z]
    return _implies((t[x, y] == zero) & (t[y, z] == zero), lhs == zero), lhs, zero


def _d_left_mono(ops, zero, x, y, z):
    (t,) = ops
    lhs = t[t[z, x], t[z, y]]
    return _implies(t[x, y] == zero, lhs == zero), lhs, zero


def _d_right_anti(ops, zero, x, y, z):
    (t,) = ops
    lhs = t[t[y, z], t[x, z]]
    return _implies(t[x, y] == zero, lhs == zero), lhs, zero


def _d_absorb(ops, zero, x, y):
    (t,) = ops
    lhs = t[x, t[y, x]]
    return lhs == zero, lhs, zero


def _d_fixpoint(ops, zero, x, y):
    (t,) = ops
    yx = t[y, x]
    lhs = t[yx, x]
    return (lhs == zero) == (x == yx), lhs, yx


def _d_square(ops, zero, x, y):
    (t,) = ops
    lhs = t[x, t[y, y]]
    return lhs == zero, lhs, zero


def _d_nested_left(ops, zero, x, y, z, a):
    (t,) = ops
    lhs = t[t[x, t[y, z]], t[x, t[t[a, y], t[a, z]]]]
    return lhs == zero, lhs, zero


def _d_nested_right(ops, zero, x, y, z, a):
    (t,) = ops
    lhs = t[t[t[t[a, x], t[a, y]], z], t[t[x, y], z]]
    return lhs == zero, lhs, zero


def _d_drop(ops, zero, x, y, z):
    (t,) = ops
    lhs = t[t[t[x, y], z], t[y, z]]
    return lhs == zero, lhs, zero


def _d_weaken(ops, zero, x, y, z):
    (t,) = ops
    lhs = t[x, t[z, y]]
    return _implies(t[x, y] == zero, lhs == zero), lhs, zero


def _d_shift(ops, zero, x, y, z):
    (t,) = ops
    lhs = t[t[t[x, y], z], t[x, t[y, z]]]
    return lhs == zero, lhs, zero


def _d_shift_a(ops, zero, x, y, z, a):
    (t,) = ops
    lhs = t[t[t[x, y], z], t[y, t[a, z]]]
    return lhs == zero, lhs, zero


DERIVED_LAWS = (
    Law("self-zero", 1, "x.x = 0", _d_self),
    Law("transitive", 3, "x.y = 0, y.z = 0 implies x.z = 0", _d_trans),
    Law("left-monotone", 3, "x.y = 0 implies (z.x).(z.y) = 0", _d_left_mono),
    Law("right-antitone", 3, "x.y = 0 implies (y.z).(x.z) = 0", _d_right_anti),
    Law("absorb", 2, "x.(y.x) = 0", _d_absorb),
    Law("fixpoint", 2, "(y.x).x = 0 iff x = y.x", _d_fixpoint),
    Law("square-right", 2, "x.(y.y) = 0", _d_square),
    Law("nested-left", 4, "(x.(y.z)).(x.((a.y).(a.z))) = 0", _d_nested_left),
    Law("nested-right", 4, "(((a.x).(a.y)).z).((x.y).z) = 0", _d_nested_right),
    Law("drop-left", 3, "((x.y).z).(y.z) = 0", _d_drop),
    Law("weaken", 3, "x.y = 0 implies x.(z.y) = 0", _d_weaken),
    Law("shift", 3, "((x.y).z).(x.(y.z)) = 0", _d_shift),
    Law("shift-a", 4, "((x.y).z).(y.(a.z)) = 0", _d_shift_a),
)


# ops = (dot, star); premises are the distributivity flags, checked separately.
def _c_star_zero_right(ops, zero, x):
    _, s = ops
    lhs = s[x, zero]
    return lhs == zero, lhs, zero


def _c_star_zero_left(ops, zero, x):
    _, s = ops
    lhs = s[zero, x]
    return lhs == zero, lhs, zero


def _c_star_idem(ops, zero, x):
    _, s = ops
    lhs = s[x, x]
    return lhs == x, lhs, x


CONSEQUENCE_LAWS = {
    "sl": Law("star-zero-right", 1, "x*0 = 0", _c_star_zero_right),
    "sr": Law("star-zero-left", 1, "0*x = 0", _c_star_zero_left),
    "dr": Law("star-idempotent", 1, "x*x = x", _c_star_idem),
}

LAWS: dict[str, Law] = {
    law.name: law
    for law in (*UP_AXIOMS, ASSOCIATIVITY, LEFT_DIST, RIGHT_DIST, *DERIVED_LAWS,
                *CONSEQUENCE_LAWS.values())
}


# --- checkers ------------------------------------------------------------

def _table_of(obj) -> CayleyTable:
    return obj.table if isinstance(obj, (UpAlgebra, SemigroupOp)) else obj


def check_up_axioms(table: CayleyTable, zero: int = 0) -> CheckReport:
    zero = _check_element(zero, table.order, "zero")
    return _run(UP_AXIOMS, (table.array,), zero)


def check_associativity(table: CayleyTable) -> CheckReport:
    return _run((ASSOCIATIVITY,), (table.array,))


def _same_order(f: CayleyTable, g: CayleyTable):
    if f.order != g.order:
        raise DomainError(f"order mismatch: {f.order} vs {g.order}")


def left_distributes(f, g) -> CheckReport:
    """Does ``f`` distribute over ``g`` from the left?"""
    f, g = _table_of(f), _table_of(g)
    _same_order(f, g)
    return _run((LEFT_DIST,), (f.array, g.array))


def right_distributes(f, g) -> CheckReport:
    f, g = _table_of(f), _table_of(g)
    _same_order(f, g)
    return _run((RIGHT_DIST,), (f.array, g.array))


@dataclass(frozen=True)
class UpAlgebra:
    table: CayleyTable
    zero: int = 0

    def __post_init__(self):
        _check_element(self.zero, self.table.order, "zero")
        report = check_up_axioms(self.table, self.zero)
        if not report.passed:
            raise AxiomError(f"not a UP-algebra: violates {', '.join(report.failed)}", report)

    @classmethod
    def _trusted(cls, table: CayleyTable, zero: int = 0) -> "UpAlgebra":
        # for generators whose output satisfies the axioms by construction
        obj = object.__new__(cls)
        object.__setattr__(obj, "table", table)
        object.__setattr__(obj, "zero", zero)
        return obj

    @property
    def order(self) -> int:
        return self.table.order


@dataclass(frozen=True)
class SemigroupOp:
    table: CayleyTable

    def __post_init__(self):
        report = check_associativity(self.table)
        if not report.passed:
            raise AxiomError("operation is not associative", report)

    @classmethod
    def _trusted(cls, table: CayleyTable) -> "SemigroupOp":
        obj = object.__new__(cls)
        object.__setattr__(obj, "table", table)
        return obj

    @property
    def order(self) -> int:
        return self.table.order


# --- classification ------------------------------------------------------

class ClassLabel(str, enum.Enum):
    L = "l"
    R = "r"
    F = "f"
    LL = "ll"
    RL = "rl"
    LR = "lr"
    RR = "rr"
    FL = "fl"
    FR = "fr"
    LF = "lf"
    RF = "rf"
    FF = "ff"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, code: str) -> "ClassLabel":
        try:
            return cls(code.lower())
        except ValueError:
            raise DomainError(f"unknown class code {code!r}") from None


# which profile flags each label requires
LABEL_REQUIREMENTS: dict[ClassLabel, tuple[str, ...]] = {
    ClassLabel.L: ("sl",),
    ClassLabel.R: ("sr",),
    ClassLabel.F: ("sl", "sr"),
    ClassLabel.LL: ("dl", "sl"),
    ClassLabel.RL: ("dr", "sl"),
    ClassLabel.LR: ("dl", "sr"),
    ClassLabel.RR: ("dr", "sr"),
    ClassLabel.FL: ("dl", "dr", "sl"),
    ClassLabel.FR: ("dl", "dr", "sr"),
    ClassLabel.LF: ("dl", "sl", "sr"),
    ClassLabel.RF: ("dr", "sl", "sr"),
    ClassLabel.FF: ("dl", "dr", "sl", "sr"),
}

FLAGS = ("dl", "dr", "sl", "sr")


@dataclass(frozen=True)
class DistributivityProfile:
    """``dl``/``dr``: the UP operation distributes over the semigroup
    operation from the left/right; ``sl``/``sr``: the reverse."""

    dl: bool
    dr: bool
    sl: bool
    sr: bool

    def as_tuple(self) -> tuple[bool, bool, bool, bool]:
        return (self.dl, self.dr, self.sl, self.sr)

    def to_dict(self) -> dict:
        return dict(zip(FLAGS, self.as_tuple()))


def distributivity_profile(dot, star) -> DistributivityProfile:
    d, s = _table_of(dot), _table_of(star)
    _same_order(d, s)
    return DistributivityProfile(
        dl=left_distributes(d, s).passed,
        dr=right_distributes(d, s).passed,
        sl=left_distributes(s, d).passed,
        sr=right_distributes(s, d).passed,
    )


def classify(profile: DistributivityProfile) -> frozenset[ClassLabel]:
    flags = profile.to_dict()
    return frozenset(
        label for label, req in LABEL_REQUIREMENTS.items() if all(flags[r] for r in req)
    )


def sorted_labels(labels: Iterable[ClassLabel]) -> list[ClassLabel]:
    """Labels in the canonical l, r, f, ll, ... order."""
    order = list(ClassLabel)
    return sorted(labels, key=order.index)


def check_derived_properties(alg: UpAlgebra | CayleyTable, zero: int = 0) -> CheckReport:
    """Scan the thirteen standard consequences of the UP axioms.

    On a genuine UP-algebra every law must hold; a failure means a bug in
    one of the checkers.  A bare table is accepted but must pass the axioms.
    """
    if isinstance(alg, CayleyTable):
        report = check_up_axioms(alg, zero)
        if not report.passed:
            raise AxiomError("derived properties need a UP-algebra", report)
        alg = UpAlgebra._trusted(alg, zero)
    return _run(DERIVED_LAWS, (alg.table.array,), alg.zero)


def check_distributivity_consequences(
    dot: UpAlgebra, star: SemigroupOp, profile: DistributivityProfile | None = None
) -> CheckReport:
    """Check ``sl => x*0 = 0``, ``sr => 0*x = 0`` and ``dr => x*x = x``.

    Only laws whose premise holds in ``profile`` are scanned.
    """
    if profile is None:
        profile = distributivity_profile(dot, star)
    flags = profile.to_dict()
    laws = [law for flag, law in CONSEQUENCE_LAWS.items() if flags[flag]]
    return _run(laws, (dot.table.array, star.table.array), dot.zero)


# --- batched profiles ----------------------------------------------------

_PROFILE_CHUNK = 8192

def profile_matrix(dot: np.ndarray, stars: np.ndarray) -> np.ndarray:
    """Profiles of one UP table against a stack of tables, shape (K, 4).

    Columns follow ``FLAGS``: dl, dr, sl, sr.
    """
    d = np.asarray(dot)
    s = np.asarray(stars)
    n = d.shape[0]
    k = s.shape[0]
    if k > _PROFILE_CHUNK:
        return np.concatenate([
            profile_matrix(d, s[i:i + _PROFILE_CHUNK]) for i in range(0, k, _PROFILE_CHUNK)
        ])
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    kk = np.arange(k)[:, None, None, None]
    out = np.empty((k, 4), dtype=bool)
    # dl: x.(y*z) == (x.y)*(x.z)
    out[:, 0] = (d[x, s[kk, y, z]] == s[kk, d[x, y], d[x, z]]).reshape(k, -1).all(axis=1)
    # dr: (y*z).x == (y.x)*(z.x)
    out[:, 1] = (d[s[kk, y, z], x] == s[kk, d[y, x], d[z, x]]).reshape(k, -1).all(axis=1)
    # sl: x*(y.z) == (x*y).(x*z)
    out[:, 2] = (s[kk, x, d[y, z]] == d[s[kk, x, y], s[kk, x, z]]).reshape(k, -1).all(axis=1)
    # sr: (y.z)*x == (y*x).(z*x)
    out[:, 3] = (s[kk, d[y, z], x] == d[s[kk, y, x], s[kk, z, x]]).reshape(k, -1).all(axis=1)
    return out


def label_masks(profiles: np.ndarray) -> dict[ClassLabel, np.ndarray]:
    """Per-label boolean masks for a (K, 4) profile matrix."""
    col = {f: profiles[:, i] for i, f in enumerate(FLAGS)}
    return {
        label: np.logical_and.reduce([col[r] for r in req])
        for label, req in LABEL_REQUIREMENTS.items()
    }
