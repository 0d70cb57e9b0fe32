"""Power-set models over a finite universe ``X = {0, ..., m-1}``.

A subset is encoded as the integer whose bit ``i`` marks membership of
element ``i``, so the empty set is 0 and ``X`` is ``2**m - 1``.  These
integers double as element indices of the Cayley tables.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import (
    AxiomError,
    CayleyTable,
    CheckReport,
    ClassLabel,
    DomainError,
    SemigroupOp,
    UpAlgebra,
    Witness,
    check_associativity,
    check_up_axioms,
    classify,
    distributivity_profile,
)

MAX_UNIVERSE = 4


@dataclass(frozen=True)
class Universe:
    size: int

    def __post_init__(self):
        if not 0 <= self.size <= MAX_UNIVERSE:
            raise DomainError(f"universe size must be in 0..{MAX_UNIVERSE}, got {self.size}")

    @property
    def order(self) -> int:
        return 1 << self.size

    @property
    def full(self) -> int:
        return self.order - 1

    def subsets(self) -> np.ndarray:
        return np.arange(self.order)


class OpKind(enum.Enum):
    DOT = "dot"            # complement(A) & B
    STAR = "star"          # complement(A) | B
    ODOT = "odot"          # X
    OTIMES = "otimes"      # empty set
    BOXDOT = "boxdot"      # B
    BOXTIMES = "boxtimes"  # A
    CAP = "cap"
    CUP = "cup"

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]


_SYMBOLS = {
    OpKind.DOT: "·", OpKind.STAR: "∗", OpKind.ODOT: "⊙", OpKind.OTIMES: "⊗",
    OpKind.BOXDOT: "⊡", OpKind.BOXTIMES: "⊠", OpKind.CAP: "∩", OpKind.CUP: "∪",
}

SEMIGROUP_KINDS = (OpKind.ODOT, OpKind.OTIMES, OpKind.BOXDOT, OpKind.BOXTIMES, OpKind.CAP, OpKind.CUP)


def apply_op(kind: OpKind, a, b, full: int):
    """Evaluate ``a kind b`` on subset codes (ints or integer arrays)."""
    a = np.asarray(a)
    b = np.asarray(b)
    if kind is OpKind.DOT:
        return (full & ~a) & b
    if kind is OpKind.STAR:
        return (full & ~a) | b
    if kind is OpKind.ODOT:
        return np.broadcast_to(np.asarray(full), np.broadcast(a, b).shape)
    if kind is OpKind.OTIMES:
        return np.zeros(np.broadcast(a, b).shape, dtype=np.intp)
    if kind is OpKind.BOXDOT:
        return np.broadcast_to(b, np.broadcast(a, b).shape)
    if kind is OpKind.BOXTIMES:
        return np.broadcast_to(a, np.broadcast(a, b).shape)
    if kind is OpKind.CAP:
        return a & b
    if kind is OpKind.CUP:
        return a | b
    raise DomainError(f"unknown kind {kind!r}")


def build_table(u: Universe, kind: OpKind) -> CayleyTable:
    s = u.subsets()
    return CayleyTable.from_array(apply_op(kind, s[:, None], s[None, :], u.full))


def build_power_up_algebra(u: Universe, up_type: int) -> UpAlgebra:
    """Type 1: ``(P(X), A'∩B, ∅)``; type 2: ``(P(X), A'∪B, X)``."""
    if up_type == 1:
        table, zero = build_table(u, OpKind.DOT), 0
    elif up_type == 2:
        table, zero = build_table(u, OpKind.STAR), u.full
    else:
        raise DomainError(f"UP-algebra type must be 1 or 2, got {up_type!r}")
    report = check_up_axioms(table, zero)
    if not report.passed:
        raise AxiomError(f"power UP-algebra of type {up_type} failed {report.failed}", report)
    return UpAlgebra._trusted(table, zero)


def build_power_semigroup(u: Universe, kind: OpKind) -> SemigroupOp:
    if kind not in SEMIGROUP_KINDS:
        raise DomainError(f"{kind.value} is not one of the semigroup kinds")
    table = build_table(u, kind)
    report = check_associativity(table)
    if not report.passed:
        raise AxiomError(f"{kind.value} is not associative", report)
    return SemigroupOp._trusted(table)


# --- identities ----------------------------------------------------------

# An expression is a variable name or a tuple (kind, left, right).
Expr = "str | tuple"


def _k(name: str) -> OpKind:
    return OpKind(name)


def _parse(text: str):
    """Parse a fully parenthesised infix term like ``A·(B∩C)``."""
    by_symbol = {v: k for k, v in _SYMBOLS.items()}
    pos = 0

    def atom():
        nonlocal pos
        ch = text[pos]
        if ch == "(":
            pos += 1
            e = expr()
            assert text[pos] == ")", text
            pos += 1
            return e
        pos += 1
        return ch

    def expr():
        nonlocal pos
        left = atom()
        while pos < len(text) and text[pos] in by_symbol:
            kind = by_symbol[text[pos]]
            pos += 1
            left = (kind, left, atom())
        return left

    e = expr()
    assert pos == len(text), text
    return e


@dataclass(frozen=True)
class Identity:
    id: str
    formula: str

    @property
    def sides(self):
        lhs, rhs = self.formula.split("=")
        return _parse(lhs), _parse(rhs)


def _identities(family: str, formulas: list[str]) -> list[Identity]:
    return [Identity(f"{family}.{i}", f) for i, f in enumerate(formulas, 1)]


# Families: the UP operations distributing over the semigroup/lattice
# operations from the left and right, the reverse directions, and identities
# that swap the outer operation across the equation.
IDENTITIES: tuple[Identity, ...] = tuple(
    _identities("up-left", [
        "A·(B∩C)=(A·B)∩(A·C)",
        "A·(B∪C)=(A·B)∪(A·C)",
        "A∗(B∩C)=(A∗B)∩(A∗C)",
        "A∗(B∪C)=(A∗B)∪(A∗C)",
        "A·(B⊗C)=(A·B)⊗(A·C)",
        "A∗(B⊙C)=(A∗B)⊙(A∗C)",
        "A·(B⊡C)=(A·B)⊡(A·C)",
        "A∗(B⊡C)=(A∗B)⊡(A∗C)",
        "A·(B⊠C)=(A·B)⊠(A·C)",
        "A∗(B⊠C)=(A∗B)⊠(A∗C)",
    ])
    + _identities("up-right", [
        "(A⊡B)·C=(A·C)⊡(B·C)",
        "(A⊡B)∗C=(A∗C)⊡(B∗C)",
        "(A⊠B)·C=(A·C)⊠(B·C)",
        "(A⊠B)∗C=(A∗C)⊠(B∗C)",
    ])
    + _identities("semi-left", [
        "A⊙(B∗C)=(A⊙B)∗(A⊙C)",
        "A⊗(B·C)=(A⊗B)·(A⊗C)",
        "A⊡(B·C)=(A⊡B)·(A⊡C)",
        "A⊡(B∗C)=(A⊡B)∗(A⊡C)",
    ])
    + _identities("semi-right", [
        "(A∗B)⊙C=(A⊙C)∗(B⊙C)",
        "(A·B)⊗C=(A⊗C)·(B⊗C)",
        "(A·B)⊠C=(A⊠C)·(B⊠C)",
        "(A∗B)⊠C=(A⊠C)∗(B⊠C)",
    ])
    + _identities("swap", [
        "(A∩B)·C=(A·C)∪(B·C)",
        "(A∪B)·C=(A·C)∩(B·C)",
        "(A∩B)∗C=(A∗C)∪(B∗C)",
        "(A∪B)∗C=(A∗C)∩(B∗C)",
        "(A⊙B)·C=(A·C)⊗(B·C)",
        "(A⊗B)∗C=(A∗C)⊙(B∗C)",
    ])
    + _identities("cross", [
        "(A·B)⊙C=(A⊗C)∗(B⊗C)",
        "(A∗B)⊗C=(A⊙C)·(B⊙C)",
    ])
)

IDENTITY_BY_ID = {i.id: i for i in IDENTITIES}


def _evaluate(expr, env: dict, full: int):
    if isinstance(expr, str):
        return env[expr]
    kind, left, right = expr
    return apply_op(kind, _evaluate(left, env, full), _evaluate(right, env, full), full)


def verify_identity(u: Universe, identity: Identity | str) -> CheckReport:
    """Check one identity over every triple of subsets ``(A, B, C)``."""
    if isinstance(identity, str):
        try:
            identity = IDENTITY_BY_ID[identity]
        except KeyError:
            raise DomainError(f"unknown identity {identity!r}") from None
    s = u.subsets()
    env = dict(zip("ABC", np.ix_(s, s, s)))
    shape = (u.order,) * 3
    lhs_e, rhs_e = identity.sides
    lhs = np.broadcast_to(_evaluate(lhs_e, env, u.full), shape)
    rhs = np.broadcast_to(_evaluate(rhs_e, env, u.full), shape)
    ok = lhs == rhs
    if ok.all():
        return CheckReport((identity.id,))
    idx = np.unravel_index(int(np.argmin(ok)), shape)
    idx = tuple(int(i) for i in idx)
    return CheckReport((identity.id,), (Witness(identity.id, idx, int(lhs[idx]), int(rhs[idx])),))


def verify_identity_suite(u: Universe) -> CheckReport:
    reports = [verify_identity(u, ident) for ident in IDENTITIES]
    return CheckReport(
        tuple(i.id for i in IDENTITIES),
        tuple(w for r in reports for w in r.witnesses),
    )


def classify_combo(u: Universe, up_type: int, kind: OpKind) -> frozenset[ClassLabel]:
    """Class labels of ``(P(X), UP operation of up_type, kind, zero)``."""
    dot = build_power_up_algebra(u, up_type)
    star = build_power_semigroup(u, kind)
    return classify(distributivity_profile(dot, star))
