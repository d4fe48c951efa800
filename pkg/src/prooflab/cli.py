"""Batch command-line front end.

Exit codes: 0 on success, 1 on a domain error (with a machine-readable
``error: <Kind>: <detail>`` line on stderr), 2 on usage errors. Every
command that loads a base set prints the completion witness to stderr.
All outputs are deterministic for fixed inputs and seed.
"""

from __future__ import annotations

import argparse
import os
import random
import sys

from .deduction import (
    DEFAULT_MAX_PRIOR,
    Deduction,
    check_deduction,
    classical_rules_report,
    induce_interpretation,
)
from .errors import NotFound, ProofLabError
from .files import (
    proof_file_text,
    read_deduction_file,
    read_formula_arg,
    read_proof_file,
    read_sigma_file,
)
from .module_algebra import add, check_module_axioms, scalar_mul
from .proof import ProofNode, build_proof, digest_hex, pretty_class, pretty_proof, proof_eq
from .propclass import DEFAULT_ATOM_CAP, all_classes
from .sigma import (
    FORMAL_ONE,
    ClassScalar,
    SigmaPrime,
    check_ring_axioms,
    lindenbaum_extend,
)
from .surgery import (
    eliminate_subproof,
    extract_subproof,
    find_occurrences,
    format_path,
    parse_path,
    replace_subproof,
)


def _env_max_steps() -> int:
    raw = os.environ.get("PROOFLAB_MAX_STEPS")
    return int(raw) if raw else DEFAULT_MAX_PRIOR


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="prooflab")
    sub = top.add_subparsers(dest="command", required=True)

    def sigma_opts(p, required=False):
        p.add_argument("--sigma", required=required, help="base-set file")
        p.add_argument("--default-bit", type=int, choices=(0, 1), default=0)
        p.add_argument("--atom-cap", type=int, default=DEFAULT_ATOM_CAP)

    p = sub.add_parser("parse", help="canonicalize a formula")
    p.add_argument("formula")
    p.add_argument("--format", choices=("canonical", "pretty"), default="canonical")
    p.add_argument("--atom-cap", type=int, default=DEFAULT_ATOM_CAP)

    p = sub.add_parser("check", help="justify every deduction step")
    p.add_argument("deduction")
    sigma_opts(p)
    p.add_argument("--max-steps", type=int, default=_env_max_steps())

    p = sub.add_parser("interpret", help="print the induced reading")
    p.add_argument("deduction")
    sigma_opts(p)
    p.add_argument("--max-steps", type=int, default=_env_max_steps())

    p = sub.add_parser("prove", help="deduction file to proof file")
    p.add_argument("deduction")
    sigma_opts(p)
    p.add_argument("--max-steps", type=int, default=_env_max_steps())
    p.add_argument("--format", choices=("canonical", "pretty"), default="canonical")
    p.add_argument("--output", help="write here instead of stdout")

    p = sub.add_parser("eq", help="compare two proof files")
    p.add_argument("proof_a")
    p.add_argument("proof_b")

    p = sub.add_parser("add", help="module sum of two proofs")
    p.add_argument("proof_a")
    p.add_argument("proof_b")
    sigma_opts(p, required=True)
    p.add_argument("--output")

    p = sub.add_parser("smul", help="scalar product; 'e' is the formal identity")
    p.add_argument("scalar")
    p.add_argument("proof")
    sigma_opts(p, required=True)
    p.add_argument("--output")

    p = sub.add_parser("axioms", help="ring and module law audit")
    sigma_opts(p, required=True)
    p.add_argument("--atoms", type=int, default=2)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", help="also write the report here")

    for name in ("replace", "extract", "eliminate"):
        p = sub.add_parser(name, help=f"{name} a subproof")
        p.add_argument("--target", required=True, help="proof file to operate on")
        if name == "replace":
            p.add_argument("--donor", required=True, help="proof file supplying the justification")
        p.add_argument("--sigma-class", required=True, help="formula naming the subproof conclusion")
        p.add_argument("--single-path", help="digest path restricting the operation")
        sigma_opts(p, required=(name == "replace"))
        p.add_argument("--output")

    p = sub.add_parser("rules", help="classical rule-table validity report")
    p.add_argument("--atoms", type=int, default=2)

    return top


def _load_sigma(args, steps_premises: str | None = None) -> SigmaPrime:
    path = args.sigma or steps_premises
    base = read_sigma_file(path, args.atom_cap) if path else frozenset()
    sp = lindenbaum_extend(base, args.default_bit)
    print(f"witness: {sp.witness_text()}", file=sys.stderr)
    return sp


def _load_deduction(args) -> Deduction:
    steps, directive = read_deduction_file(args.deduction, args.atom_cap)
    sp = _load_sigma(args, directive)
    return Deduction(tuple(steps), sp)


def _emit_proof(args, r: ProofNode, pretty: bool = False) -> None:
    text = pretty_proof(r) + "\n" if pretty else proof_file_text(r)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return _dispatch(args)
    except ProofLabError as e:
        print(f"error: {e.kind}: {e}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    if args.command == "parse":
        c = read_formula_arg(args.formula, args.atom_cap)
        if args.format == "canonical":
            print(c.text())
        else:
            print(pretty_class(c))
        return 0

    if args.command == "check":
        d = _load_deduction(args)
        report = check_deduction(d, args.max_steps)
        for line in report.lines():
            print(line)
        print("valid" if report.valid else f"invalid at step {report.first_invalid}")
        return 0

    if args.command == "interpret":
        d = _load_deduction(args)
        phi = induce_interpretation(d, args.max_steps)
        for line in phi.lines():
            print(line)
        return 0

    if args.command == "prove":
        d = _load_deduction(args)
        phi = induce_interpretation(d, args.max_steps)
        r = build_proof(d, phi)
        _emit_proof(args, r, pretty=args.format == "pretty")
        return 0

    if args.command == "eq":
        a = read_proof_file(args.proof_a)
        b = read_proof_file(args.proof_b)
        if proof_eq(a, b):
            print(f"equal {digest_hex(a)}")
        else:
            print(f"different {digest_hex(a)} {digest_hex(b)}")
        return 0

    if args.command == "add":
        sp = _load_sigma(args)
        r = add(read_proof_file(args.proof_a), read_proof_file(args.proof_b), sp)
        _emit_proof(args, r)
        return 0

    if args.command == "smul":
        sp = _load_sigma(args)
        s = FORMAL_ONE if args.scalar == "e" else ClassScalar(
            read_formula_arg(args.scalar, args.atom_cap)
        )
        r = scalar_mul(s, read_proof_file(args.proof), sp)
        _emit_proof(args, r)
        return 0

    if args.command == "axioms":
        sp = _load_sigma(args)
        report_text = _axioms_report(sp, args.atoms, args.samples, args.seed)
        if args.report:
            with open(args.report, "w", encoding="utf-8") as fh:
                fh.write(report_text + "\n")
        print(report_text)
        return 0

    if args.command in ("replace", "extract", "eliminate"):
        return _surgery(args)

    if args.command == "rules":
        report = classical_rules_report(args.atoms)
        for line in report.lines():
            print(line)
        return 0

    raise AssertionError(f"unhandled command {args.command}")


def _axioms_report(sp: SigmaPrime, atoms: int, samples: int, seed: int) -> str:
    names = ("p", "q", "r", "s")[: max(1, min(atoms, 4))]
    members = [c for c in all_classes(names) if sp.member(c)]
    ring = check_ring_axioms(sp, members)
    rng = random.Random(seed)
    premise_pool = [ProofNode(c) for c in members]
    proofs = list(premise_pool)
    for _ in range(samples):
        kids = rng.sample(premise_pool, k=rng.randint(1, min(3, len(premise_pool))))
        proofs.append(ProofNode(rng.choice(members), frozenset(kids)))
    scalars = [ClassScalar(c) for c in members] + [FORMAL_ONE]
    module = check_module_axioms(sp, scalars, proofs, samples=samples, seed=seed)
    return "\n".join(
        [
            f"ring laws over {len(members)} member classes on atoms {','.join(names)}",
            ring.render(),
            "",
            f"module laws: pool={len(proofs)} samples={samples} seed={seed}",
            module.render(),
        ]
    )


def _surgery(args) -> int:
    target = read_proof_file(args.target)
    sigma_class = read_formula_arg(args.sigma_class, args.atom_cap)
    path = parse_path(args.single_path) if args.single_path else None

    occ = find_occurrences(target, sigma_class)
    print(
        "occurrences: " + (" ".join(format_path(p) for p in occ) or "none"),
        file=sys.stderr,
    )

    if args.command == "extract":
        if path is None:
            if not occ:
                raise NotFound(f"{sigma_class.text()} does not occur in the target")
            path = occ[0]
        _emit_proof(args, extract_subproof(target, path))
        return 0

    if args.command == "eliminate":
        _emit_proof(args, eliminate_subproof(target, sigma_class, path))
        return 0

    sp = _load_sigma(args)
    donor = read_proof_file(args.donor)
    _emit_proof(args, replace_subproof(target, sigma_class, donor, sp, path))
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
