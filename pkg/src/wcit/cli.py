"""Command-line front end.

Subcommands::

    wcit check   --input FILE            certify CI / quasi-smoothness
    wcit hodge   --input FILE            middle Hodge numbers
    wcit torelli --input FILE            period-map differential kernel
    wcit fano    --f "QUARTIC"           hyperelliptic double-cover study

Common flags: ``--field q|fp:PRIME``, ``--json``, ``--force`` (skip the
quasi-smoothness gate with a warning), ``--degree-bound N`` (truncated
completion; N bounds the effective degree of the components that can be
queried).

Input documents are JSON::

    {"weights": [1,1,1,1,1], "variables": ["x0",...,"x4"],
     "equations": [{"degree": 4, "poly": "x0^4 + ..."}],
     "field": "q"}

Exit codes: 0 on success (mathematical verdicts such as "not injective"
are data, not errors), 1 when a certification fails, 2 on parse or usage
errors.  All numbers in JSON reports are decimal strings (exact rationals
as "a/b"); the ``timings`` block is the only non-deterministic part and
is excluded from golden-file comparisons.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import Dict, List, Optional, Sequence

from .errors import CertificationError, ParseError, WcitError
from .field import QQ, field_from_spec
from .fano import build_fano
from .jacobi import build_jacobi
from .poly import Polynomial, VariableTable, parse_polynomial
from .torelli import hodge_table, torelli_map
from .wci import WeightedCI, validate

__all__ = ["main", "run", "canonical_json", "strip_timings"]

EXIT_OK = 0
EXIT_CERTIFICATION = 1
EXIT_USAGE = 2


def canonical_json(document: dict) -> str:
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def strip_timings(document: dict) -> dict:
    return {k: v for k, v in document.items() if k != "timings"}


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _load_variety(path: str, field_override: Optional[str]):
    with open(path, "rb") as handle:
        raw = bytes(handle.read())
    try:
        document = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise WcitError(f"cannot parse input document {path}: {exc}") from exc
    if not isinstance(document, dict):
        raise WcitError("input document must be a JSON object")
    for key in ("weights", "variables", "equations"):
        if key not in document:
            raise WcitError(f"input document is missing the {key!r} field")
    weights = document["weights"]
    names = document["variables"]
    if not isinstance(weights, list) or not all(isinstance(w, int) for w in weights):
        raise WcitError("'weights' must be a list of integers")
    if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
        raise WcitError("'variables' must be a list of names")
    if len(weights) != len(names):
        raise WcitError("'weights' and 'variables' must have equal length")
    field_spec = field_override or _document_field(document.get("field")) or "q"
    coeff_field = field_from_spec(field_spec)
    table = VariableTable(names)
    degrees: List[int] = []
    equations: List[Polynomial] = []
    for entry in document["equations"]:
        if not isinstance(entry, dict) or "degree" not in entry or "poly" not in entry:
            raise WcitError("each equation needs 'degree' and 'poly' fields")
        degrees.append(int(entry["degree"]))
        equations.append(parse_polynomial(entry["poly"], table, coeff_field))
    variety = validate(weights, degrees, equations)
    return variety, coeff_field, raw


def _document_field(value) -> Optional[str]:
    if value is None:
        return None
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        kind = value.get("kind")
        if kind == "q":
            return "q"
        if kind == "fp":
            return f"fp:{value.get('prime')}"
    raise WcitError("'field' must be 'q', 'fp:PRIME', or {'kind':..., 'prime':...}")


class _Report:
    def __init__(self, command: str, args: argparse.Namespace, input_bytes: bytes):
        self.document = {
            "command": command,
            "arguments": _echo_arguments(args),
            "input_sha256": _sha256(input_bytes),
            "field": None,
            "results": {},
            "warnings": [],
            "timings": {},
        }
        self._start = time.perf_counter()

    def finish(self) -> dict:
        self.document["timings"]["total"] = f"{time.perf_counter() - self._start:.3f}"
        return self.document


def _echo_arguments(args: argparse.Namespace) -> dict:
    echo = {}
    for key in ("input", "f", "field", "json", "force", "degree_bound"):
        if hasattr(args, key):
            value = getattr(args, key)
            echo[key] = str(value) if isinstance(value, int) else value
    return echo


def _certification_results(variety: WeightedCI) -> dict:
    report = variety.certify_quasi_smooth()
    return {
        "nu": str(variety.nu),
        "dimension": str(variety.dim),
        "is_complete_intersection": report.is_complete_intersection,
        "is_quasi_smooth": report.is_quasi_smooth,
        "details": list(report.details),
    }


def cmd_check(args: argparse.Namespace) -> int:
    variety, coeff_field, raw = _load_variety(args.input, args.field)
    report = _Report("check", args, raw)
    report.document["field"] = coeff_field.spec
    results = _certification_results(variety)
    report.document["results"] = results
    document = report.finish()
    _emit(args, document, _render_check)
    ok = results["is_complete_intersection"] and results["is_quasi_smooth"]
    return EXIT_OK if ok else EXIT_CERTIFICATION


def _quasi_smooth_gate(variety: WeightedCI, args: argparse.Namespace, report: _Report) -> bool:
    cert = variety.certify_quasi_smooth()
    if cert.is_quasi_smooth:
        return True
    if args.force:
        report.document["warnings"].append(
            "quasi-smoothness certification failed but --force was given; "
            "the reported values have no guaranteed geometric meaning"
        )
        return True
    report.document["results"] = {
        "error": "the variety is not certified quasi-smooth "
        "(pass --force to compute anyway): " + "; ".join(cert.details)
    }
    return False


def cmd_hodge(args: argparse.Namespace) -> int:
    variety, coeff_field, raw = _load_variety(args.input, args.field)
    report = _Report("hodge", args, raw)
    report.document["field"] = coeff_field.spec
    if not _quasi_smooth_gate(variety, args, report):
        _emit(args, report.finish(), _render_error)
        return EXIT_CERTIFICATION
    ring = build_jacobi(variety, effective_bound=args.degree_bound)
    table = hodge_table(variety, ring=ring)
    entries = [
        {
            "q": str(q),
            "p": str(p),
            "value": str(table.entries[(q, p)]),
            "note": table.notes[(q, p)],
        }
        for (q, p) in sorted(table.entries)
    ]
    report.document["results"] = {
        "dimension": str(table.dim),
        "nu": str(table.nu),
        "entries": entries,
    }
    document = report.finish()
    _emit(args, document, lambda doc: table.pretty() + "\n")
    return EXIT_OK


def cmd_torelli(args: argparse.Namespace) -> int:
    variety, coeff_field, raw = _load_variety(args.input, args.field)
    report = _Report("torelli", args, raw)
    report.document["field"] = coeff_field.spec
    if not _quasi_smooth_gate(variety, args, report):
        _emit(args, report.finish(), _render_error)
        return EXIT_CERTIFICATION
    ring = build_jacobi(variety, effective_bound=args.degree_bound)
    result = torelli_map(variety, ring=ring)
    report.document["warnings"].extend(result.warnings)
    report.document["results"] = {
        "dim_h1_theta": str(result.dim_h1_theta),
        "components": [
            {
                "p": str(c.p),
                "dim_source": str(c.dim_source),
                "dim_target": str(c.dim_target),
                "status": c.status,
            }
            for c in result.components
        ],
        "rank": str(result.rank),
        "kernel_dim": str(result.kernel_dim),
        "kernel_basis": [str(p) for p in result.kernel_basis],
        "injective": result.injective,
    }
    document = report.finish()
    _emit(args, document, _render_torelli)
    return EXIT_OK


def cmd_fano(args: argparse.Namespace) -> int:
    coeff_field = field_from_spec(args.field or "q")
    table = VariableTable([f"x{i}" for i in range(5)])
    raw = args.f.encode("utf-8")
    report = _Report("fano", args, raw)
    report.document["field"] = coeff_field.spec
    quartic = parse_polynomial(args.f, table, coeff_field)
    bound = args.degree_bound
    if bound is not None and bound < 7:
        raise WcitError(
            "--degree-bound below 7 cannot cover the components of the "
            "double-cover study"
        )
    try:
        cover = build_fano(quartic, effective_bound=bound)
    except CertificationError as exc:
        report.document["results"] = {"accepted": False, "diagnostic": str(exc)}
        _emit(args, report.finish(), _render_error_fano)
        return EXIT_CERTIFICATION
    involution = cover.involution_report()
    invariant = cover.invariant_torelli_check()
    macaulay = cover.branch_ring_macaulay_check()
    report.document["warnings"].extend(invariant.torelli.warnings)
    report.document["results"] = {
        "accepted": True,
        "nu": str(cover.ci.nu),
        "presentation_matches": cover.presentation_matches(),
        "component_dims": {
            "(1,0)": str(cover.ring.component_dim((1, 0))),
            "(1,-1)": str(cover.ring.component_dim((1, -1))),
            "(2,-1)": str(cover.ring.component_dim((2, -1))),
        },
        "involution": [
            {
                "bidegree": f"({bd.d1},{bd.d2})",
                "invariant": str(dims[0]),
                "anti_invariant": str(dims[1]),
            }
            for bd, dims in sorted(involution.eigen_dims.items())
        ],
        "torelli": {
            "dim_h1_theta": str(invariant.torelli.dim_h1_theta),
            "rank": str(invariant.torelli.rank),
            "full_kernel_dim": str(invariant.full_kernel_dim),
            "kernel_basis": [str(p) for p in invariant.torelli.kernel_basis],
            "injective": invariant.torelli.injective,
            "invariant_dim": str(invariant.invariant_dim),
            "invariant_rank": str(invariant.invariant_rank),
            "invariant_restriction_injective": invariant.invariant_restriction_injective,
            "kernel_iota_stable": invariant.kernel_iota_stable,
            "kernel_anti_invariant": invariant.kernel_anti_invariant,
        },
        "branch_ring_macaulay": {
            "injective": macaulay.injective,
            "rank": str(macaulay.rank),
            "dims": [str(d) for d in macaulay.dims],
        },
    }
    document = report.finish()
    _emit(args, document, _render_fano)
    return EXIT_OK


# ----------------------------------------------------------------------
# rendering


def _emit(args: argparse.Namespace, document: dict, renderer) -> None:
    if args.json:
        sys.stdout.write(canonical_json(document))
    else:
        sys.stdout.write(renderer(document))
        if document["warnings"]:
            for warning in document["warnings"]:
                sys.stdout.write(f"warning: {warning}\n")


def _render_check(document: dict) -> str:
    results = document["results"]
    lines = [
        f"nu = {results['nu']}   (dimension {results['dimension']})",
        f"complete intersection: {'yes' if results['is_complete_intersection'] else 'NO'}",
        f"quasi-smooth:          {'yes' if results['is_quasi_smooth'] else 'NO'}",
    ]
    lines.extend(f"  - {d}" for d in results["details"])
    return "\n".join(lines) + "\n"


def _render_error(document: dict) -> str:
    return document["results"].get("error", "error") + "\n"


def _render_error_fano(document: dict) -> str:
    return "rejected: " + document["results"].get("diagnostic", "") + "\n"


def _render_torelli(document: dict) -> str:
    results = document["results"]
    lines = [f"dim H^1(Theta) = {results['dim_h1_theta']}"]
    for c in results["components"]:
        lines.append(
            f"  p = {c['p']}: {c['dim_source']} -> {c['dim_target']}  [{c['status']}]"
        )
    lines.append(f"stacked rank = {results['rank']}, kernel dim = {results['kernel_dim']}")
    lines.append(f"injective: {'yes' if results['injective'] else 'NO'}")
    for k in results["kernel_basis"]:
        lines.append(f"  kernel class: {k}")
    return "\n".join(lines) + "\n"


def _render_fano(document: dict) -> str:
    results = document["results"]
    tor = results["torelli"]
    mac = results["branch_ring_macaulay"]
    lines = [
        f"nu = {results['nu']}",
        f"closed-form presentation matches: {results['presentation_matches']}",
        "component dims: "
        + ", ".join(f"{k}: {v}" for k, v in sorted(results["component_dims"].items())),
        "involution eigenspaces (invariant, anti):",
    ]
    for row in results["involution"]:
        lines.append(
            f"  {row['bidegree']}: ({row['invariant']}, {row['anti_invariant']})"
        )
    lines.append(
        f"torelli: rank {tor['rank']} of {tor['dim_h1_theta']}, "
        f"kernel dim {tor['full_kernel_dim']}, injective: {tor['injective']}"
    )
    for k in tor["kernel_basis"]:
        lines.append(f"  kernel class: {k}")
    lines.append(
        f"invariant restriction: rank {tor['invariant_rank']} of {tor['invariant_dim']}, "
        f"injective: {tor['invariant_restriction_injective']}"
    )
    lines.append(
        f"branch-ring Macaulay pairing: injective {mac['injective']} "
        f"(rank {mac['rank']}, dims {', '.join(mac['dims'])})"
    )
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wcit",
        description="Exact Jacobi-ring computations for weighted complete intersections",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_input: bool = True) -> None:
        if with_input:
            p.add_argument("--input", required=True, help="variety JSON document")
        p.add_argument("--field", default=None, help="q or fp:PRIME")
        p.add_argument("--json", action="store_true", help="machine-readable report")

    p_check = sub.add_parser("check", help="certify complete intersection / quasi-smoothness")
    common(p_check)
    p_check.set_defaults(handler=cmd_check)

    p_hodge = sub.add_parser("hodge", help="middle Hodge numbers")
    common(p_hodge)
    p_hodge.add_argument("--force", action="store_true", help="skip the quasi-smoothness gate")
    p_hodge.add_argument("--degree-bound", type=int, default=None, help="truncated completion bound")
    p_hodge.set_defaults(handler=cmd_hodge)

    p_torelli = sub.add_parser("torelli", help="period-map differential kernel")
    common(p_torelli)
    p_torelli.add_argument("--force", action="store_true", help="skip the quasi-smoothness gate")
    p_torelli.add_argument("--degree-bound", type=int, default=None, help="truncated completion bound")
    p_torelli.set_defaults(handler=cmd_torelli)

    p_fano = sub.add_parser("fano", help="hyperelliptic double-cover study")
    p_fano.add_argument("--f", required=True, help="quartic in x0..x4")
    p_fano.add_argument("--field", default=None, help="q or fp:PRIME")
    p_fano.add_argument("--json", action="store_true", help="machine-readable report")
    p_fano.add_argument("--degree-bound", type=int, default=None, help="truncated completion bound")
    p_fano.set_defaults(handler=cmd_fano)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_USAGE
    except WcitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
