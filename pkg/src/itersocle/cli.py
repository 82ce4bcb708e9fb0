"""Command-line front end.

Exit codes: 0 when every report is PASS or COMPUTED, 1 when some report is
FAIL, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterable, List, Optional, Sequence

from .determinantal import (
    hb_delta_report,
    hb_psi,
    hb_psi_minors,
    verify_lower_minor_containment,
)
from .errors import AlgebraError
from .groebner import Ideal, colength, ideal_equal
from .matrices import PolyMatrix, signed_maximal_minors
from .problem import ProblemFile, read_problem
from .report import COMPUTED, ERROR, FAIL, PASS, Report, format_generators
from .resolution import minimal_free_resolution, order_of_last_map
from .socle import (
    ci_socle,
    formula_generators_by_composition,
    socle_oracle,
    socle_via_decomposition,
    verify_dimension,
    verify_reduction_one,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _param(args, problem: ProblemFile, name: str) -> int:
    value = getattr(args, name, None)
    if value is None:
        value = problem.params.get(name)
    if value is None:
        raise UsageError(f"--{name} is required (or give it in a 'params' line)")
    if value < 1:
        raise UsageError(f"--{name} must be positive")
    return value


def _ideal(problem: ProblemFile) -> Ideal:
    if problem.kind != "ideal":
        raise UsageError("this command needs an 'ideal' problem file")
    return problem.ideal()


def _matrix(problem: ProblemFile) -> PolyMatrix:
    if problem.kind != "matrix":
        raise UsageError("this command needs a 'matrix' problem file")
    return problem.matrix


def _gens(polys, names) -> List[str]:
    return format_generators(polys, names)


def cmd_resolve(args, problem: ProblemFile) -> List[Report]:
    I = _ideal(problem)
    C = minimal_free_resolution(I)
    payload = {
        "betti": list(C.betti),
        "order_last_map": order_of_last_map(C),
        "maps": [[[f.format(problem.names) for f in row] for row in m] for m in C.maps],
    }
    return [Report("resolution", COMPUTED, payload)]


def _first_missing(K: Ideal, J: Ideal):
    for g in K.groebner_basis():
        if not J.contains(g):
            return g
    for g in J.groebner_basis():
        if not K.contains(g):
            return g
    return None


def cmd_socle(args, problem: ProblemFile) -> List[Report]:
    I = _ideal(problem)
    s = _param(args, problem, "s")
    names = problem.names
    K = socle_oracle(I, s)
    oracle = {
        "s": s,
        "generators": _gens(K.groebner_basis(), names),
        "socle_length": colength(I) - colength(K),
    }
    if args.method == "oracle":
        return [Report("socle_oracle", COMPUTED, oracle)]
    C = minimal_free_resolution(I)
    bound = order_of_last_map(C)
    in_range = s <= bound
    payload = dict(oracle, order_last_map=bound, in_range=in_range)
    witnesses = []
    if args.method in ("decompose", "all"):
        D = socle_via_decomposition(I, s, C, check_range=False)
        agree = ideal_equal(D, K)
        payload["decomposition_agrees"] = agree
        if not agree:
            witnesses.append({"method": "decompose", "element": _first_missing(K, D).format(names)})
    if args.method in ("formula", "all"):
        try:
            per = formula_generators_by_composition(I, s, C, check_range=False)
        except AlgebraError as exc:
            payload["formula_error"] = str(exc)
            per = None
        if per is not None:
            flat = [g for a in per for g in per[a]]
            payload["formula_generators"] = [g.format(names) for g in flat]
            payload["formula_count"] = len(flat)
            F = Ideal(list(I.gens) + flat, I.nvars)
            agree = ideal_equal(F, K)
            payload["formula_agrees"] = agree
            if not agree:
                witnesses.append({"method": "formula", "element": _first_missing(K, F).format(names)})
        elif in_range:
            witnesses.append({"method": "formula", "error": payload["formula_error"]})
    claim = {"decompose": "decomposition", "formula": "formula", "all": "socle_all"}[args.method]
    if not in_range:
        return [Report(claim, COMPUTED, payload)]
    return [Report(claim, FAIL if witnesses else PASS, payload, witnesses)]


def cmd_verify(args, problem: ProblemFile) -> List[Report]:
    if args.claim == "reduction":
        return [verify_reduction_one(_ideal(problem), _param(args, problem, "s"))]
    if args.claim == "dimension":
        return [verify_dimension(_ideal(problem), _param(args, problem, "s"))]
    M = _matrix(problem)
    return [verify_lower_minor_containment(M, _param(args, problem, "n"), _param(args, problem, "s"))]


def cmd_hb(args, problem: ProblemFile) -> List[Report]:
    phi = _matrix(problem)
    s = _param(args, problem, "s")
    if args.delta:
        return [hb_delta_report(phi, s)]
    psi = hb_psi(phi, s)
    if args.psi:
        row = PolyMatrix([signed_maximal_minors(psi)], 2)
        product = row @ psi
        payload = {"s": s, "shape": list(psi.shape), "psi": psi.format(problem.names)}
        if product.is_zero():
            return [Report("hb_psi", PASS, payload)]
        return [Report("hb_psi", FAIL, payload, [{"minors_times_psi": product.format(problem.names)[0]}])]
    return hb_psi_minors(psi, phi, s)


def cmd_ci_socle(args, problem: ProblemFile) -> List[Report]:
    I = _ideal(problem)
    J = ci_socle(list(I.gens))
    K = socle_oracle(I, 1)
    payload = {
        "generators": _gens(J.gens, problem.names),
        "determinant": J.gens[-1].format(problem.names),
        "oracle": _gens(K.groebner_basis(), problem.names),
    }
    if ideal_equal(J, K):
        return [Report("ci_socle", PASS, payload)]
    return [Report("ci_socle", FAIL, payload, [_first_missing(K, J).format(problem.names)])]


def cmd_suite(args, problem=None) -> List[Report]:
    from .suites import run_suite

    return run_suite(args.name, seed=args.seed)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "text"), default=argparse.SUPPRESS,
                        help="report format (default text)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized suites")

    parser = argparse.ArgumentParser(prog="itersocle", description="Iterated socles of origin-primary ideals.",
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resolve", parents=[common], help="Betti numbers and o(I_1(phi_d))")
    p.add_argument("file")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("socle", parents=[common], help="generators of I : m^s")
    p.add_argument("file")
    p.add_argument("--s", type=int)
    p.add_argument("--method", choices=("oracle", "decompose", "formula", "all"), default="oracle")
    p.set_defaults(func=cmd_socle)

    p = sub.add_parser("verify", parents=[common], help="check a structural claim")
    vsub = p.add_subparsers(dest="claim", required=True)
    for name in ("reduction", "dimension"):
        q = vsub.add_parser(name, parents=[common])
        q.add_argument("file")
        q.add_argument("--s", type=int)
        q.set_defaults(func=cmd_verify)
    q = vsub.add_parser("lower-minors", parents=[common])
    q.add_argument("file")
    q.add_argument("--n", type=int)
    q.add_argument("--s", type=int)
    q.set_defaults(func=cmd_verify)

    p = sub.add_parser("hb", parents=[common], help="height-two formulas from a Hilbert-Burch matrix")
    p.add_argument("file")
    p.add_argument("--s", type=int)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--delta", action="store_true")
    g.add_argument("--psi", action="store_true")
    g.add_argument("--minors", action="store_true")
    p.set_defaults(func=cmd_hb)

    p = sub.add_parser("ci-socle", parents=[common], help="socle of a complete intersection")
    p.add_argument("file")
    p.set_defaults(func=cmd_ci_socle)

    p = sub.add_parser("suite", parents=[common], help="run a seeded randomized suite")
    p.add_argument("name", choices=("ideals", "hb", "lower-minors", "ci", "koszul", "all"))
    p.set_defaults(func=cmd_suite, file=None)
    return parser


def _command_echo(argv: Sequence[str]) -> str:
    words = []
    skip = False
    for w in argv:
        if skip:
            skip = False
            continue
        if w == "--output":
            skip = True
            continue
        if w.startswith("--output="):
            continue
        words.append(w)
    return " ".join(words)


def emit(reports: Iterable[Report], fmt: str, out) -> None:
    for r in reports:
        if fmt == "json":
            out.write(r.to_json() + "\n")
        else:
            out.write(r.to_text() + "\n")
    out.flush()


def exit_code(reports: Sequence[Report]) -> int:
    if any(r.status == ERROR for r in reports):
        return EXIT_USAGE
    if any(r.status == FAIL for r in reports):
        return EXIT_FAIL
    return EXIT_OK


def run_command(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    fmt = getattr(args, "output", "text")
    if not hasattr(args, "seed"):
        args.seed = None
    try:
        problem = read_problem(args.file) if args.file else None
        reports = args.func(args, problem)
    except (UsageError, AlgebraError, OSError) as exc:
        err.write(f"itersocle: error: {exc}\n")
        return EXIT_USAGE
    echo = _command_echo(argv)
    for r in reports:
        r.command = echo
    emit(reports, fmt, out)
    return exit_code(reports)


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
