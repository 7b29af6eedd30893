"""Command-line interface for exact qutrit circuit work.

Commands
--------
matrix FILE            print the exact unitary of a circuit file
tcount FILE            expand macros and print the T-gate count
verify FILE --target EXPR [--mode exact|phase|cphase --phase VALUE]
                       compare the circuit against a target expression
classify FILE [--clifford] [--hierarchy N] [--ring TAG] [--obstruct]
                       run recognition and obstruction analyses
catalog                verify every shipped identity and print a table

Exit codes: 0 when the requested check verifies (or every claim does),
1 when a check is refuted or a claim fails, 2 on malformed input or
other errors (a diagnostic starting with ``error:`` goes to stderr).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from qutrit_exact.adjoint import single_qutrit_ct_obstruction
from qutrit_exact.analysis import (
    hierarchy_level,
    is_clifford,
    matrix_ring_certificate,
    refute_phase_membership,
)
from qutrit_exact.circuit.core import Circuit
from qutrit_exact.circuit.macros import t_count
from qutrit_exact.circuit.parse import parse_circuit
from qutrit_exact.cli.catalog import run_catalog
from qutrit_exact.cli.target import parse_phase_value, parse_target
from qutrit_exact.errors import DimMismatchError
from qutrit_exact.rings.membership import RingTag
from qutrit_exact.sim.gates import circuit_matrix
from qutrit_exact.sim.matrix import UnitaryMatrix, equal_exact, equal_up_to_phase


def _load_circuit(path: str) -> Circuit:
    text = Path(path).read_text(encoding="utf-8")
    return parse_circuit(text)


def _print_matrix(m: UnitaryMatrix) -> None:
    cells = [[str(e) for e in row] for row in m.rows]
    widths = [max(len(cells[r][c]) for r in range(m.dim)) for c in range(m.dim)]
    for row in cells:
        print(" | ".join(s.ljust(w) for s, w in zip(row, widths)).rstrip())


def _cmd_matrix(args: argparse.Namespace) -> int:
    circ = _load_circuit(args.file)
    m = circuit_matrix(circ)
    print(f"qutrits: {circ.n}")
    print(f"dim: {m.dim}")
    _print_matrix(m)
    return 0


def _cmd_tcount(args: argparse.Namespace) -> int:
    circ = _load_circuit(args.file)
    print(f"tcount: {t_count(circ)}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    circ = _load_circuit(args.file)
    m = circuit_matrix(circ)
    target = parse_target(args.target)
    if m.dim != target.dim:
        raise DimMismatchError(
            f"circuit acts on a {m.dim}-dimensional space "
            f"but the target acts on {target.dim} dimensions"
        )
    print(f"mode: {args.mode}")
    if args.mode == "exact":
        ok = equal_exact(m, target)
        detail = "circuit matrix equals the target entrywise"
    elif args.mode == "phase":
        match = equal_up_to_phase(m, target)
        ok = bool(match)
        if ok:
            print(f"phase: {match.phase}")
        detail = "circuit matrix equals a unit multiple of the target"
    else:  # cphase
        if args.phase is None:
            raise ValueError("--mode cphase requires --phase VALUE")
        phase = parse_phase_value(args.phase)
        print(f"phase: {phase}")
        ok = equal_exact(m, target.scale(phase))
        detail = "circuit matrix equals phase * target entrywise"
    if ok:
        print(f"result: verified ({detail})")
        return 0
    print("result: refuted (the matrices differ)")
    return 1


def _classify_ring(m: UnitaryMatrix, tag: RingTag) -> bool:
    cert = matrix_ring_certificate(m, tag)
    if cert.found:
        print("member: true")
        print(f"  {cert.text()}")
        return True
    ref = refute_phase_membership(m, tag)
    if ref.refuted:
        a, b = ref.pair
        print(f"refuted: pair ({a}, {b})")
        print(f"  {ref.text()}")
        return False
    print("member: unknown")
    print(
        f"  no unit phase in the witness set puts the matrix inside "
        f"{tag.value}, and no entry pair refutes membership"
    )
    return False


def _cmd_classify(args: argparse.Namespace) -> int:
    if not (args.clifford or args.hierarchy is not None
            or args.ring or args.obstruct):
        raise ValueError(
            "nothing to do: pass --clifford, --hierarchy N, --ring TAG, "
            "and/or --obstruct"
        )
    circ = _load_circuit(args.file)
    m = circuit_matrix(circ)
    all_positive = True

    if args.clifford:
        cert = is_clifford(m)
        print(f"clifford: {'true' if cert.found else 'false'}")
        for line in cert.text().splitlines():
            print(f"  {line}")
        all_positive &= cert.found

    if args.hierarchy is not None:
        report = hierarchy_level(m, cap=args.hierarchy)
        print(f"level: {report.level if report.level is not None else 'none'}")
        for line in report.text().splitlines():
            print(f"  {line}")
        all_positive &= report.level is not None

    if args.ring:
        tag = RingTag.parse(args.ring)
        all_positive &= _classify_ring(m, tag)

    if args.obstruct:
        if m.dim != 3:
            raise DimMismatchError(
                "--obstruct applies to single-qutrit circuits only"
            )
        verdict = single_qutrit_ct_obstruction(m)
        if verdict.is_obstructed():
            print(f"obstructed: {verdict.reason}")
            all_positive = False
        else:
            print(f"consistent: T-count {verdict.t_count}")
        print(f"  {verdict.text()}")

    return 0 if all_positive else 1


def _cmd_catalog(args: argparse.Namespace) -> int:
    return run_catalog(print)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qutrit-exact",
        description="exact construction, simulation, and verification "
                    "of qutrit circuits",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="print the exact unitary of a circuit")
    p.add_argument("file", help="circuit file")
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("tcount", help="print the expanded T-gate count")
    p.add_argument("file", help="circuit file")
    p.set_defaults(func=_cmd_tcount)

    p = sub.add_parser("verify", help="compare a circuit against a target")
    p.add_argument("file", help="circuit file")
    p.add_argument("--target", required=True,
                   help="target expression, e.g. 'R x I' or 'C2[-TAU(12)]'")
    p.add_argument("--mode", choices=("exact", "phase", "cphase"),
                   default="exact",
                   help="exact equality, equality up to any unit phase, "
                        "or equality up to the given --phase")
    p.add_argument("--phase", default=None,
                   help="phase value for --mode cphase, e.g. '-omega^2'")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classify", help="recognition and obstruction checks")
    p.add_argument("file", help="circuit file")
    p.add_argument("--clifford", action="store_true",
                   help="test for Clifford with a conjugation certificate")
    p.add_argument("--hierarchy", type=int, metavar="N", default=None,
                   help="search hierarchy levels up to N (single qutrit)")
    p.add_argument("--ring", metavar="TAG", default=None,
                   help="entry-ring membership up to a unit phase "
                        "(Zomega, T, Tomega, Tzeta, D, Dalpha, A, Q36)")
    p.add_argument("--obstruct", action="store_true",
                   help="exact T-count consistency check (single qutrit)")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("catalog", help="verify every shipped identity")
    p.set_defaults(func=_cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        return args.func(args)
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())
