"""Set-tree proof objects: construction from interpreted deductions,
canonical serialization, digests, and essential equality.

A node is either a premise (no justification) or carries a nonempty
unordered set of child nodes. Child sets follow set semantics: order
and duplicates cannot be observed. The canonical serialization sorts
child serializations as byte strings, which makes string equality of
serializations coincide with structural equality of trees and turns
the digest into a complete invariant of essential equality.

Normalization rewrites every tautology-concluded node to premise form;
it is applied to every constructed proof.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import InvalidInterpretation, ParseError
from .formula import render
from .propclass import (
    CONTRADICTION,
    PropClass,
    class_from_text,
    is_tautology,
    representative,
)
from .deduction import Deduction, Interpretation, validate_interpretation

ProofDigest = bytes


@dataclass(frozen=True)
class ProofNode:
    """A conclusion class plus its justification.

    ``children is None`` marks a premise; otherwise ``children`` is a
    nonempty frozenset of sub-proofs.
    """

    conclusion: PropClass
    children: Optional[frozenset["ProofNode"]] = None

    def __post_init__(self):
        if self.children is not None and not self.children:
            raise ValueError("a justified node needs at least one child")

    @property
    def is_premise(self) -> bool:
        return self.children is None


Justification = Optional[frozenset[ProofNode]]


@lru_cache(maxsize=1 << 16)
def canonical_serialize(r: ProofNode) -> str:
    """Order- and duplicate-insensitive text form of the tree."""
    if r.children is None:
        just = "{0}"
    else:
        just = "{%s}" % ",".join(sorted(canonical_serialize(c) for c in r.children))
    return "{%s,%s}" % (r.conclusion.text(), just)


def digest(r: ProofNode) -> ProofDigest:
    """Collision-resistant digest of the canonical serialization."""
    return hashlib.sha256(canonical_serialize(r).encode("utf-8")).digest()


def digest_hex(r: ProofNode) -> str:
    return digest(r).hex()


def proof_eq(a: ProofNode, b: ProofNode) -> bool:
    """Essential equality of proofs: equal canonical serializations."""
    return canonical_serialize(a) == canonical_serialize(b)


@lru_cache(maxsize=1 << 16)
def normalize(r: ProofNode) -> ProofNode:
    """Rewrite every tautology-concluded node to premise form; idempotent."""
    if is_tautology(r.conclusion):
        return ProofNode(r.conclusion)
    if r.children is None:
        return r
    return ProofNode(r.conclusion, frozenset(normalize(c) for c in r.children))


def sorted_children(r: ProofNode) -> list[ProofNode]:
    """Children in canonical (serialization) order; empty for premises."""
    if r.children is None:
        return []
    return sorted(r.children, key=canonical_serialize)


def build_proof(d: Deduction, phi: Interpretation) -> ProofNode:
    """The proof tree of an interpreted deduction.

    Structural recursion from the final step: a premise index becomes a
    premise node, an index set becomes the set of its sub-proofs (equal
    subtrees collapse). The result is normalized.
    """
    if not validate_interpretation(d, phi):
        raise InvalidInterpretation("the assignment does not interpret this deduction")

    nodes: dict[int, ProofNode] = {}

    def node(u: int) -> ProofNode:
        if u not in nodes:
            v = phi.assignment[u]
            if v == 0:
                nodes[u] = ProofNode(d.step(u))
            else:
                nodes[u] = ProofNode(d.step(u), frozenset(node(h) for h in sorted(v)))
        return nodes[u]

    return normalize(node(len(d)))


def essentially_equal(
    d1: Deduction, phi1: Interpretation, d2: Deduction, phi2: Interpretation
) -> bool:
    """Whether two interpreted deductions produce the same proof tree."""
    return proof_eq(build_proof(d1, phi1), build_proof(d2, phi2))


def premises(r: ProofNode) -> frozenset[PropClass]:
    """Conclusions of all premise-justified nodes in the tree."""
    if r.children is None:
        return frozenset([r.conclusion])
    out: set[PropClass] = set()
    for c in r.children:
        out |= premises(c)
    return frozenset(out)


def less_forced(a: ProofNode, b: ProofNode) -> bool:
    """Strictly smaller premise set."""
    return premises(a) < premises(b)


# --- canonical-form parsing ----------------------------------------------


def parse_proof(text: str) -> ProofNode:
    """Inverse of :func:`canonical_serialize`."""
    node, end = _parse_node(text, 0)
    if text[end:].strip():
        raise ParseError("trailing data after proof", end)
    return node


def _parse_node(text: str, i: int) -> tuple[ProofNode, int]:
    if i >= len(text) or text[i] != "{":
        raise ParseError("expected '{'", i)
    i += 1
    if i >= len(text) or text[i] != "[":
        raise ParseError("expected a class text '['", i)
    close = text.find("]", i)
    if close < 0:
        raise ParseError("unterminated class text", i)
    conclusion = class_from_text(text[i : close + 1])
    i = close + 1
    if text[i : i + 1] != ",":
        raise ParseError("expected ',' after the conclusion", i)
    i += 1
    if text[i : i + 3] == "{0}":
        node = ProofNode(conclusion)
        i += 3
    elif text[i : i + 1] == "{":
        i += 1
        kids = []
        while True:
            child, i = _parse_node(text, i)
            kids.append(child)
            if text[i : i + 1] == ",":
                i += 1
                continue
            if text[i : i + 1] == "}":
                i += 1
                break
            raise ParseError("expected ',' or '}' in a child set", i)
        node = ProofNode(conclusion, frozenset(kids))
    else:
        raise ParseError("expected a justification", i)
    if text[i : i + 1] != "}":
        raise ParseError("expected '}' closing the node", i)
    return node, i + 1


# --- pretty rendering ------------------------------------------------------


def pretty_class(c: PropClass) -> str:
    """Full-DNF rendering of a conclusion; constants print as 1 and 0."""
    if not c.support:
        return "1" if c != CONTRADICTION else "0"
    return render(representative(c))


def pretty_proof(r: ProofNode) -> str:
    """Indented, display-only tree with DNF conclusions."""
    lines: list[str] = []

    def walk(node: ProofNode, depth: int) -> None:
        marker = "  [premise]" if node.is_premise else ""
        lines.append("  " * depth + "- " + pretty_class(node.conclusion) + marker)
        for child in sorted_children(node):
            walk(child, depth + 1)

    walk(r, 0)
    return "\n".join(lines)
