"""Command-line front end.

Subcommands mirror the library modules: ``euler``, ``betti``,
``orthopoly``, ``relations``, ``hilbert``, ``volume``, ``pairing`` and the
cross-validation meta-command ``verify``.  Output goes to stdout as JSON
(default) or aligned text (``--format table``); diagnostics go to stderr.

Exit codes: 0 success, 1 verification/agreement failure, 2 usage error.

All rationals are serialized as strings like ``"3/2"`` (never floats) and
polynomials as coefficient arrays indexed by t-power, including the zero
odd entries, so identical invocations are byte-identical and the JSON
round-trips.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any

from . import betti, relations
from .errors import ParmoduliError
from .euler import dirichlet_beta_coeff, euler_numbers
from .exact import UniPoly, rational_str
from .orthopoly import euler_moments, gram_schmidt_ortho
from .verify import EULER_TABLE_SIZE, verify_suite

__all__ = ["CommandRequest", "build_request", "dispatch", "main"]


class UsageError(Exception):
    """Invalid parameters; rendered to stderr with exit code 2."""


@dataclass(frozen=True)
class CommandRequest:
    subcommand: str
    params: dict[str, Any]
    output_format: str  # "json" | "table"


def _poly_coeffs(p: UniPoly) -> list[str]:
    return [rational_str(c) for c in p.coefficients] or ["0"]


def _abpoly_terms(p: relations.ABPoly) -> list[dict[str, Any]]:
    return [
        {"alpha": a, "beta": b, "coeff": rational_str(c)} for (a, b), c in p.items()
    ]


def _require_odd(n: int, what: str = "--points") -> None:
    if n < 1 or n % 2 == 0:
        raise UsageError(f"{what} must be an odd natural >= 1, got {n}")


def _render_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _render_table_rows(rows: list[tuple[str, str]]) -> str:
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows) + "\n"


# -- subcommand implementations; each returns (payload, table_rows, code) --


def _run_euler(p: dict[str, Any]):
    max_index = p["max"]
    if max_index < 0:
        raise UsageError(f"--max must be >= 0, got {max_index}")
    table = euler_numbers(max_index)
    payload = [str(v) for v in table.values]
    rows = [(f"E_{j}", str(v)) for j, v in enumerate(table.values)]
    return payload, rows, 0


def _betti_polynomial(g: int, n: int, method: str) -> UniPoly:
    params = betti.ModuliParams(g, n)
    if method == "strata":
        return betti.poincare_strata(params)
    if method == "closed":
        return betti.poincare_closed(params)
    if method == "rec-n":
        n0 = 1 if g >= 1 else 3
        poly = betti.poincare_closed(betti.ModuliParams(g, n0))
        for k in range(n0, n, 2):
            poly = betti.poincare_recursion_n(betti.ModuliParams(g, k), poly)
        return poly
    if method == "rec-g":
        g0 = 0 if n >= 3 else 1
        if g < g0:
            raise UsageError(f"rec-g cannot reach (g, n) = ({g}, {n})")
        poly = betti.poincare_closed(betti.ModuliParams(g0, n))
        for k in range(g0, g):
            poly = betti.poincare_recursion_g(betti.ModuliParams(k, n), poly)
        return poly
    raise UsageError(f"unknown method {method!r}")


def _run_betti(p: dict[str, Any]):
    g, n, method = p["genus"], p["points"], p["method"]
    _require_odd(n)
    if g < 0:
        raise UsageError(f"--genus must be >= 0, got {g}")
    if 6 * g - 6 + 2 * n < 0:
        raise UsageError(f"(g, n) = ({g}, {n}) has negative dimension")
    code = 0
    if method == "all":
        methods = ("strata", "closed", "rec-n", "rec-g")
        polys = {m: _betti_polynomial(g, n, m) for m in methods}
        agree = len(set(polys.values())) == 1
        payload = {
            "g": g,
            "n": n,
            "coefficients": _poly_coeffs(polys["closed"]),
            "methods": {m: _poly_coeffs(q) for m, q in polys.items()},
            "methods_agree": agree,
        }
        rows = [("g", str(g)), ("n", str(n))]
        rows += [(m, str(q)) for m, q in polys.items()]
        rows.append(("methods_agree", str(agree).lower()))
        if not agree:
            code = 1
    else:
        poly = _betti_polynomial(g, n, method)
        payload = {
            "g": g,
            "n": n,
            "method": method,
            "coefficients": _poly_coeffs(poly),
        }
        rows = [("g", str(g)), ("n", str(n)), (method, str(poly))]
    return payload, rows, code


def _run_orthopoly(p: dict[str, Any]):
    if p["moments"] != "euler":
        raise UsageError(f"unsupported moment sequence {p['moments']!r}")
    depth = p["depth"]
    if depth < 0:
        raise UsageError(f"--depth must be >= 0, got {depth}")
    ms = euler_moments(2 * depth + 1)
    ops = gram_schmidt_ortho(ms, depth)
    payload = {
        "moments": "euler",
        "depth": depth,
        "polynomials": [_poly_coeffs(q) for q in ops.polys],
        "alphas": [rational_str(a) for a in ops.alphas],
        "betas": [rational_str(b) for b in ops.betas],
    }
    rows = [(f"p_{k}", str(q)) for k, q in enumerate(ops.polys)]
    rows += [(f"alpha_{k}", rational_str(a)) for k, a in enumerate(ops.alphas)]
    rows += [(f"beta_{k + 1}", rational_str(b)) for k, b in enumerate(ops.betas)]
    return payload, rows, 0


def _run_relations(p: dict[str, Any]):
    n, method = p["points"], p["method"]
    _require_odd(n)
    code = 0
    if p["full"]:
        rels = relations.relation_set(n)
        payload = {
            "n": n,
            "generator_count": rels.count,
            "generators": [
                {"deltas": sorted(J), "terms": _abpoly_terms(poly)}
                for J, poly in rels.generators
            ],
        }
        rows = [("n", str(n)), ("generators", str(rels.count))]
        rows += [
            (
                "R{" + ",".join(str(k) for k in sorted(J)) + "}",
                str(poly),
            )
            for J, poly in rels.generators
        ]
        return payload, rows, code
    polys: dict[str, relations.ABPoly] = {}
    if method in ("recurrence", "both"):
        polys["recurrence"] = relations.relation_recurrence(n)
    if method in ("hankel", "both"):
        polys["hankel"] = relations.relation_hankel(n)
    payload: dict[str, Any] = {"n": n}
    for name, poly in polys.items():
        payload[name] = _abpoly_terms(poly)
    rows = [("n", str(n))] + [(name, str(poly)) for name, poly in polys.items()]
    if method == "both":
        agree = polys["hankel"] == polys["recurrence"]
        payload["agree"] = agree
        rows.append(("agree", str(agree).lower()))
        if not agree:
            code = 1
    return payload, rows, code


def _run_hilbert(p: dict[str, Any]):
    n = p["points"]
    _require_odd(n)
    dims = relations.hilbert_series_quotient(
        n, max_degree=p["max_degree"], force=p["force"]
    )
    poly = betti.poincare_closed(betti.ModuliParams(0, n))
    target = [int(poly.coeff(d)) for d in range(len(dims))]
    agree = dims == target
    payload = {
        "n": n,
        "dimensions": dims,
        "betti": target,
        "agree": agree,
    }
    rows = [
        ("n", str(n)),
        ("dimensions", " ".join(str(d) for d in dims)),
        ("betti", " ".join(str(d) for d in target)),
        ("agree", str(agree).lower()),
    ]
    return payload, rows, 0 if agree else 1


def _run_volume(p: dict[str, Any]):
    g, n = p["genus"], p["points"]
    _require_odd(n)
    if g < 0:
        raise UsageError(f"--genus must be >= 0, got {g}")
    if 3 * g + n - 3 < 0:
        raise UsageError(f"(g, n) = ({g}, {n}) has negative top degree")
    v = relations.symplectic_volume(g, n)
    payload = {"g": g, "n": n, "volume": rational_str(v)}
    rows = [("g", str(g)), ("n", str(n)), ("volume", rational_str(v))]
    return payload, rows, 0


def _run_pairing(p: dict[str, Any]):
    g, n, r, s = p["genus"], p["points"], p["r"], p["s"]
    _require_odd(n)
    if g < 0 or r < 0 or s < 0:
        raise UsageError("--genus, --r, --s must be >= 0")
    top = 3 * g + n - 3
    if r + 2 * s != top:
        raise UsageError(f"need r + 2s = {top} (top degree), got {r + 2 * s}")
    if r < g:
        raise UsageError(f"need --r >= --genus, got r = {r} < g = {g}")
    value = relations.pairing_ab(g, n, r, s)
    payload = {"g": g, "n": n, "r": r, "s": s, "pairing": rational_str(value)}
    rows = [
        ("g", str(g)),
        ("n", str(n)),
        ("r", str(r)),
        ("s", str(s)),
        ("pairing", rational_str(value)),
    ]
    return payload, rows, 0


def _run_verify(p: dict[str, Any]):
    table = None
    if p["corrupt_euler_entry"] is not None:
        # test hook: perturb one entry of the table under test
        j = p["corrupt_euler_entry"]
        base = euler_numbers(EULER_TABLE_SIZE)
        if not 0 <= j <= base.max_index:
            raise UsageError(
                f"--corrupt-euler-entry must lie in 0..{base.max_index}, got {j}"
            )
        table = base.corrupted(j)
    report = verify_suite(scope=p["scope"], euler_table=table)
    payload = {
        "scope": report.scope,
        "overall": "pass" if report.overall else "fail",
        "checks": [
            {"name": c.name, "status": c.status, "detail": c.detail}
            for c in report.checks
        ],
    }
    first = report.first_failure
    if first is not None:
        payload["first_failure"] = first.name
    rows = [(c.name, f"{c.status.upper()}  {c.detail}") for c in report.checks]
    rows.append(("overall", "PASS" if report.overall else f"FAIL ({first.name})"))
    return payload, rows, 0 if report.overall else 1


_RUNNERS = {
    "euler": _run_euler,
    "betti": _run_betti,
    "orthopoly": _run_orthopoly,
    "relations": _run_relations,
    "hilbert": _run_hilbert,
    "volume": _run_volume,
    "pairing": _run_pairing,
    "verify": _run_verify,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps the subparser from clobbering a value parsed before
    # the subcommand; the default is applied at request-building time
    common.add_argument(
        "--format",
        choices=("json", "table"),
        default=argparse.SUPPRESS,
        help="output rendering (default: json)",
    )
    parser = argparse.ArgumentParser(
        prog="parmoduli",
        parents=[common],
        description=(
            "Exact invariants of rank-2 parabolic-bundle moduli with quarter "
            "weights: Betti numbers, Euler numbers, volumes, pairings, and "
            "genus-0 cohomology relations."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_parser(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text)

    s = add_parser("euler", "Euler numbers E_0..E_max")
    s.add_argument("--max", type=int, required=True, help="largest index")

    s = add_parser("betti", "Poincare polynomial of R_{g,n}")
    s.add_argument("--genus", type=int, default=0)
    s.add_argument("--points", type=int, required=True, help="odd number of points")
    s.add_argument(
        "--method",
        choices=("strata", "closed", "rec-n", "rec-g", "all"),
        default="all",
    )

    s = add_parser("orthopoly", "monic orthogonal polynomials of a moment sequence")
    s.add_argument("--moments", default="euler", help="moment sequence name")
    s.add_argument("--depth", type=int, required=True, help="compute p_0..p_depth")

    s = add_parser("relations", "genus-0 relation polynomials")
    s.add_argument("--points", type=int, required=True)
    s.add_argument("--method", choices=("hankel", "recurrence", "both"), default="both")
    s.add_argument("--full", action="store_true", help="emit the whole relation set")

    s = add_parser("hilbert", "degreewise dimensions of the presented ring")
    s.add_argument("--points", type=int, required=True)
    s.add_argument("--max-degree", type=int, default=None, dest="max_degree")
    s.add_argument("--force", action="store_true", help="lift the size guard")

    s = add_parser("volume", "symplectic volume of R_{g,n}")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--points", type=int, required=True)

    s = add_parser("pairing", "top pairing of alpha^r beta^s")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--points", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--s", type=int, required=True)

    s = add_parser("verify", "run the cross-validation suite")
    s.add_argument("--scope", choices=("quick", "full"), default="quick")
    s.add_argument(
        "--corrupt-euler-entry",
        type=int,
        default=None,
        dest="corrupt_euler_entry",
        help="test hook: perturb entry j of the Euler table under test",
    )

    return parser


def build_request(argv: list[str]) -> CommandRequest:
    """Parse arguments into a CommandRequest (argparse errors exit 2)."""
    args = vars(_build_parser().parse_args(argv))
    fmt = args.pop("format", "json")
    sub = args.pop("subcommand")
    return CommandRequest(subcommand=sub, params=args, output_format=fmt)


def dispatch(req: CommandRequest) -> tuple[str, int]:
    """Execute a request; returns (rendered output, exit code)."""
    runner = _RUNNERS.get(req.subcommand)
    if runner is None:
        raise UsageError(f"unknown subcommand {req.subcommand!r}")
    payload, rows, code = runner(req.params)
    if req.output_format == "table":
        return _render_table_rows(rows), code
    return _render_json(payload), code


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        req = build_request(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        output, code = dispatch(req)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ParmoduliError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(output)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
