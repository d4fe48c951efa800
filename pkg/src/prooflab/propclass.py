"""Canonical Boolean-function classes: the quotient of formulas by
logical equivalence, represented by essential support plus truth table.

A :class:`PropClass` stores the sorted tuple of atoms the function
actually depends on and its truth table over those atoms. Assignments
are enumerated by binary counting with the first support atom most
significant, which fixes a bit-exact canonical form: two formulas are
logically equivalent exactly when they canonicalize to the same value.

Tables are bounded by ``DEFAULT_ATOM_CAP`` support atoms; operations
that would exceed the cap raise :class:`ResourceLimit`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Callable, Iterable, Sequence

from .errors import ParseError, ResourceLimit
from .formula import ATOM_RE, And, Atom, Formula, Not, Or, Valuation, atoms_of, evaluate

DEFAULT_ATOM_CAP = 16


@dataclass(frozen=True)
class PropClass:
    """An equivalence class of formulas as an essential-support table."""

    support: tuple[str, ...]
    table: tuple[int, ...]

    def __post_init__(self):
        if list(self.support) != sorted(set(self.support)):
            raise ValueError("support must be sorted and duplicate-free")
        for name in self.support:
            if ATOM_RE.fullmatch(name) is None:
                raise ValueError(f"invalid atom name {name!r}")
        if len(self.table) != 1 << len(self.support):
            raise ValueError("table length must be 2**len(support)")
        if any(b not in (0, 1) for b in self.table):
            raise ValueError("table entries must be bits")
        for j in range(len(self.support)):
            if not _depends(self.table, len(self.support), j):
                raise ValueError(f"support atom {self.support[j]!r} is not essential")

    def text(self) -> str:
        """Canonical text form ``[a,b;0101]``; tautology is ``[;1]``."""
        return "[%s;%s]" % (",".join(self.support), "".join(map(str, self.table)))

    def __str__(self) -> str:
        return self.text()


TAUTOLOGY = PropClass((), (1,))
CONTRADICTION = PropClass((), (0,))


def _depends(table: Sequence[int], n: int, j: int) -> bool:
    stride = 1 << (n - 1 - j)
    return any(
        table[m] != table[m | stride] for m in range(1 << n) if not m & stride
    )


def _pruned(atoms: Sequence[str], table: Sequence[int]) -> PropClass:
    """Project out the atoms the table does not depend on."""
    n = len(atoms)
    keep = [j for j in range(n) if _depends(table, n, j)]
    if len(keep) == n:
        return PropClass(tuple(atoms), tuple(table))
    sub = []
    for m in range(1 << len(keep)):
        full = 0
        for k, j in enumerate(keep):
            if m >> (len(keep) - 1 - k) & 1:
                full |= 1 << (n - 1 - j)
        sub.append(table[full])
    return PropClass(tuple(atoms[j] for j in keep), tuple(sub))


def _row_value(c: PropClass, positions: Sequence[int], m: int, n: int) -> int:
    idx = 0
    for j in positions:
        idx = idx << 1 | m >> (n - 1 - j) & 1
    return c.table[idx]


def canonicalize(f: Formula, atom_cap: int = DEFAULT_ATOM_CAP) -> PropClass:
    """The equivalence class of ``f``: full table, inessential atoms dropped."""
    atoms = sorted(atoms_of(f))
    if len(atoms) > atom_cap:
        raise ResourceLimit(f"{len(atoms)} atoms exceed the support cap of {atom_cap}")
    n = len(atoms)
    table = []
    for m in range(1 << n):
        v = Valuation({a: m >> (n - 1 - j) & 1 for j, a in enumerate(atoms)})
        table.append(evaluate(f, v))
    return _pruned(atoms, table)


def evaluate_class(c: PropClass, v: Valuation) -> int:
    """Table lookup of ``c`` at the assignment ``v`` restricted to its support."""
    idx = 0
    for name in c.support:
        idx = idx << 1 | v.bit(name)
    return c.table[idx]


@lru_cache(maxsize=1 << 16)
def _combine2(op: str, a: PropClass, b: PropClass) -> PropClass:
    atoms = sorted(set(a.support) | set(b.support))
    if len(atoms) > DEFAULT_ATOM_CAP:
        raise ResourceLimit(
            f"combined support of {len(atoms)} atoms exceeds the cap of {DEFAULT_ATOM_CAP}"
        )
    n = len(atoms)
    pa = [atoms.index(x) for x in a.support]
    pb = [atoms.index(x) for x in b.support]
    fn: Callable[[int, int], int] = _OPS[op]
    table = [
        fn(_row_value(a, pa, m, n), _row_value(b, pb, m, n)) for m in range(1 << n)
    ]
    return _pruned(atoms, table)


_OPS = {
    "and": lambda x, y: x & y,
    "or": lambda x, y: x | y,
    "iff": lambda x, y: int(x == y),
}


def class_and(a: PropClass, b: PropClass) -> PropClass:
    return _combine2("and", a, b)


def class_or(a: PropClass, b: PropClass) -> PropClass:
    return _combine2("or", a, b)


def class_not(a: PropClass) -> PropClass:
    # complementation preserves essential support, so no re-pruning
    return PropClass(a.support, tuple(1 - x for x in a.table))


def class_iff(a: PropClass, b: PropClass) -> PropClass:
    """The biconditional class ``(~a | b) & (~b | a)``."""
    return _combine2("iff", a, b)


def big_and(classes: Iterable[PropClass]) -> PropClass:
    parts = list(classes)
    if not parts:
        raise ValueError("big_and needs a nonempty list")
    return reduce(class_and, parts)


def big_or(classes: Iterable[PropClass]) -> PropClass:
    parts = list(classes)
    if not parts:
        raise ValueError("big_or needs a nonempty list")
    return reduce(class_or, parts)


@lru_cache(maxsize=1 << 16)
def entails(a: PropClass, b: PropClass) -> bool:
    """The Boolean order: every assignment satisfying ``a`` satisfies ``b``.

    One-step derivability by the restricted calculus (drop a conjunct /
    add a disjunct) coincides with this order at class level.
    """
    atoms = sorted(set(a.support) | set(b.support))
    n = len(atoms)
    pa = [atoms.index(x) for x in a.support]
    pb = [atoms.index(x) for x in b.support]
    return all(
        _row_value(a, pa, m, n) <= _row_value(b, pb, m, n) for m in range(1 << n)
    )


def is_tautology(c: PropClass) -> bool:
    return c == TAUTOLOGY


def all_classes(atoms: Sequence[str]) -> list[PropClass]:
    """Every Boolean-function class over ``atoms`` (2^(2^k) of them)."""
    names = sorted(set(atoms))
    rows = 1 << len(names)
    return [
        _pruned(names, [t >> (rows - 1 - m) & 1 for m in range(rows)])
        for t in range(1 << rows)
    ]


def class_from_text(text: str) -> PropClass:
    """Inverse of :meth:`PropClass.text`; validates every invariant."""
    if not (text.startswith("[") and text.endswith("]")) or ";" not in text:
        raise ParseError(f"malformed class text {text!r}")
    head, _, bits = text[1:-1].partition(";")
    support = tuple(head.split(",")) if head else ()
    if any(ch not in "01" for ch in bits) or not bits:
        raise ParseError(f"malformed class table in {text!r}")
    try:
        return PropClass(support, tuple(int(ch) for ch in bits))
    except ValueError as exc:
        raise ParseError(f"non-canonical class text {text!r}: {exc}") from None


def representative(c: PropClass) -> Formula:
    """A canonical representative formula: full DNF over the support.

    The constant classes have empty support, so they fall back to
    ``p | ~p`` and ``p & ~p``.
    """
    if not c.support:
        p = Atom("p")
        return Or(p, Not(p)) if c.table[0] else And(p, Not(p))
    n = len(c.support)
    minterms = []
    for m in range(1 << n):
        if not c.table[m]:
            continue
        lits = [
            Atom(name) if m >> (n - 1 - j) & 1 else Not(Atom(name))
            for j, name in enumerate(c.support)
        ]
        minterms.append(reduce(And, lits))
    return reduce(Or, minterms)
