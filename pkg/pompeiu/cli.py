"""
Command-line front end.

Every subcommand runs through the decision pipeline (decide, verification
gate, witness export) and prints a text or JSON report on standard output.
Diagnostics go to standard error.

Exit codes:
    0  decision made (either verdict)
    2  usage error or invalid input
    3  unsupported group (e.g. Z^d, d >= 2)
    4  a witness failed its verification, or a certificate could not be
       computed (inexact division, root refinement did not converge)
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .abelian import mixed_pompeiu_check, torsion_annihilator, z_pompeiu_check
from .config import PompeiuConfig
from .decision import (
    MvpResult,
    MvpScan,
    RadialSetFamily,
    free_pompeiu_check,
    mvp_hypothesis_check,
    mvp_scan,
    two_circle_check,
    verify_family,
)
from .errors import InvalidInputError, PompeiuError
from .exact import format_exact
from .free_group import BallFunction, convolve
from .pipeline_nodes import run_decision_tree
from .report import DecisionReport, Verification

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFICATION = 4

EPILOG = """
Examples:
  python -m pompeiu free --k 2 --set 1 --set 3 --json
  python -m pompeiu two-circle --k 2 --two-circle 2 3
  python -m pompeiu z --set 0,1,2 --set 0,2,4
  python -m pompeiu finite --orders 2 --elements "0;1"
  python -m pompeiu mvp --k 2 --n 2 --m 3
  python -m pompeiu mvp-scan --k 2 --radius 10
  python -m pompeiu witness --k 2 --set 1 --set 3 --radius 8 --witness-out phi0.csv
  python -m pompeiu verify --k 2 --set 1 --set 3 --witness-in phi0.csv
  python -m pompeiu torsion-demo --n 5

Sets on Z with negative members need the = form: --set=-1,0,1
"""


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def parse_int_list(text: str) -> Tuple[int, ...]:
    """"1,3" -> (1, 3)."""
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise InvalidInputError(f"expected comma-separated integers, got {text!r}") from e


def parse_elements(text: str) -> List[Tuple[int, ...]]:
    """"0,1;1,2" -> [(0, 1), (1, 2)]."""
    return [parse_int_list(chunk) for chunk in text.split(";") if chunk.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-9, help="Tolerance for floating checks (default: 1e-9)")
    common.add_argument("--json", action="store_true", help="Emit the report as JSON")
    common.add_argument("-v", "--verbose", action="store_true", help="Log debug output to standard error")

    parser = argparse.ArgumentParser(
        prog="pompeiu",
        description="Decide the Pompeiu property on free groups and abelian groups, with verified witnesses.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG,
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(
            name, parents=[common], help=help_text, formatter_class=argparse.RawDescriptionHelpFormatter
        )

    free = add("free", "Radial family in F_k")
    free.add_argument("--k", type=int, default=2, help="Number of generators (default: 2)")
    free.add_argument("--set", action="append", required=True, metavar="RADII", help="Comma-separated radii (repeatable)")
    free.add_argument("--radius", type=int, metavar="R", help="Witness ball radius")
    free.add_argument("--witness-out", type=Path, metavar="FILE", help="Write the witness ball function as CSV")

    z = add("z", "Family of finite subsets of Z")
    z.add_argument("--set", action="append", required=True, metavar="INTS", help="Comma-separated integers (repeatable)")

    finite = add("finite", "Family in a finite abelian group (order 0 marks a Z factor)")
    finite.add_argument("--orders", required=True, metavar="ORDERS", help="Comma-separated cyclic orders, e.g. 2,3")
    finite.add_argument("--elements", action="append", required=True, metavar="TUPLES",
                        help="Semicolon-separated element tuples, e.g. \"0,1;1,2\" (repeatable)")

    two = add("two-circle", "Sphere sums of two radii in F_k")
    two.add_argument("--k", type=int, default=2, help="Number of generators (default: 2)")
    two.add_argument("--two-circle", nargs=2, type=int, required=True, metavar=("R", "S"), dest="radii")
    two.add_argument("--radius", type=int, metavar="R", help="Witness ball radius")
    two.add_argument("--witness-out", type=Path, metavar="FILE", help="Write the witness ball function as CSV")

    mvp = add("mvp", "Mean-value criterion for spheres of radii n and m")
    mvp.add_argument("--k", type=int, default=2, help="Number of generators (default: 2)")
    mvp.add_argument("--n", type=int, required=True)
    mvp.add_argument("--m", type=int, required=True)

    scan = add("mvp-scan", "Mean-value criterion for all pairs up to a radius")
    scan.add_argument("--k", type=int, default=2, help="Number of generators (default: 2)")
    scan.add_argument("--radius", type=int, default=10, metavar="R", help="Largest radius (default: 10)")

    witness = add("witness", "Construct and export the spherical witness of a non-Pompeiu family")
    witness.add_argument("--k", type=int, default=2, help="Number of generators (default: 2)")
    witness.add_argument("--set", action="append", required=True, metavar="RADII")
    witness.add_argument("--radius", type=int, metavar="R", help="Witness ball radius")
    witness.add_argument("--witness-out", type=Path, required=True, metavar="FILE")

    verify = add("verify", "Check a witness CSV against a radial family")
    verify.add_argument("--k", type=int, default=2, help="Number of generators (default: 2)")
    verify.add_argument("--set", action="append", required=True, metavar="RADII")
    verify.add_argument("--witness-in", type=Path, required=True, metavar="FILE")

    torsion = add("torsion-demo", "Show (1 + g + ... + g^(n-1)) * (1 - g) = 0 in C[Z_n]")
    torsion.add_argument("--n", type=int, required=True)

    return parser


# ---------------------------------------------------------------------------
# Commands: each returns (procedure, text renderer)
# ---------------------------------------------------------------------------

def _free_family(args) -> RadialSetFamily:
    return RadialSetFamily(args.k, tuple(parse_int_list(s) for s in args.set))


def _witness_only(args, config: PompeiuConfig) -> DecisionReport:
    report = free_pompeiu_check(_free_family(args), args.radius, config)
    if report.pompeiu:
        raise InvalidInputError("the family has the Pompeiu property; there is no witness")
    return report


def _verify(args, config: PompeiuConfig) -> Verification:
    try:
        f = BallFunction.from_csv(args.witness_in, args.k)
    except OSError as e:
        raise InvalidInputError(f"cannot read {args.witness_in}: {e}") from e
    return verify_family(_free_family(args), f, config.numeric_witness_tol)


def torsion_demo(n: int) -> Dict[str, Any]:
    geometric, difference = torsion_annihilator(n)
    product = convolve(geometric, difference)
    terms = " + ".join(["1", "g"] + [f"g^{j}" for j in range(2, n)])
    return {
        "n": n,
        "identity": f"({terms}) * (1 - g) = 0",
        "coefficients": {f"g^{g[0]}": format_exact(product(g)) for g in geometric.group.elements()},
    }


def _render_mvp(result: MvpResult) -> str:
    verdict = "hypothesis holds" if result.holds else "hypothesis fails"
    lines = [f"k={result.k}, n={result.n}, m={result.m}: {verdict}", f"gcd: {result.gcd}"]
    if not result.holds:
        lines.append(f"extra common factor: {result.extra_factor}")
    return "\n".join(lines)


def _render_scan(scan: MvpScan) -> str:
    lines = [f"({n},{m}) {'holds' if r.holds else 'fails'}  gcd {r.gcd}" for (n, m), r in sorted(scan.entries.items())]
    for label, counts in scan.parity_summary().items():
        lines.append(f"{label}: {counts['pass']}/{counts['total']} hold")
    return "\n".join(lines)


def _render_verification(v: Verification) -> str:
    status = "passed" if v.passed else "FAILED"
    return (
        f"verification {status}: convResidual {v.conv_residual}, "
        f"translateResidual {v.translate_residual}, innerRadius {v.inner_radius}"
    )


def _render_torsion(data: Dict[str, Any]) -> str:
    lines = [f"{data['identity']} in C[Z_{data['n']}]"]
    lines.extend(f"  {g}: {c}" for g, c in data["coefficients"].items())
    return "\n".join(lines)


def _render_report(report: DecisionReport) -> str:
    lines = [report.summary()]
    if report.verification is not None:
        lines.append(_render_verification(report.verification) if report.group == "free" else
                     f"translate residual {report.verification.translate_residual}")
    return "\n".join(lines)


def plan(args, config: PompeiuConfig) -> Tuple[Callable[[], Any], Callable[[Any], str], Optional[Path]]:
    """Map parsed arguments to (procedure, text renderer, witness path)."""
    command = args.command
    if command == "free":
        return (lambda: free_pompeiu_check(_free_family(args), args.radius, config)), _render_report, args.witness_out
    if command == "two-circle":
        r, s = args.radii
        return (lambda: two_circle_check(args.k, r, s, args.radius, config)), _render_report, args.witness_out
    if command == "witness":
        return (lambda: _witness_only(args, config)), _render_report, args.witness_out
    if command == "z":
        return (lambda: z_pompeiu_check([parse_int_list(s) for s in args.set], config)), _render_report, None
    if command == "finite":
        return (
            (lambda: mixed_pompeiu_check(parse_int_list(args.orders), [parse_elements(e) for e in args.elements], config)),
            _render_report,
            None,
        )
    if command == "mvp":
        return (lambda: mvp_hypothesis_check(args.k, args.n, args.m)), _render_mvp, None
    if command == "mvp-scan":
        return (lambda: mvp_scan(args.k, args.radius, config)), _render_scan, None
    if command == "verify":
        return (lambda: _verify(args, config)), _render_verification, None
    if command == "torsion-demo":
        return (lambda: torsion_demo(args.n)), _render_torsion, None
    raise InvalidInputError(f"unknown command {command!r}")


def _to_json(result: Any) -> str:
    data = result if isinstance(result, dict) else result.to_dict()
    return json.dumps(data, indent=2)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )

    try:
        config = PompeiuConfig(tol=args.tol)
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    procedure, render, witness_path = plan(args, config)
    outcome = run_decision_tree(procedure, witness_path, name=args.command)

    if outcome.error is not None:
        print(f"Error: {outcome.error.message}", file=sys.stderr)
        return outcome.error.exit_code

    result = outcome.report
    print(_to_json(result) if args.json else render(result))
    if outcome.verified is False:
        print("Error: witness verification failed", file=sys.stderr)
        return EXIT_VERIFICATION
    if outcome.status.name != "SUCCESS":
        print(f"Error: could not write witness to {witness_path}", file=sys.stderr)
        return EXIT_USAGE
    if outcome.witness_path is not None:
        logger.info(f"Witness written to {outcome.witness_path}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
