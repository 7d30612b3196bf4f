"""Command-line front door.

Subcommands: cosets, factors, map, unmap, count, verify, zero-sum-count.
Global flags --json and --factor-order work before or after the
subcommand.  Necklaces and functions travel as comma-separated decimal
colors, index 0 first.  Exit codes: 0 success, 1 domain errors or a failed
certification, 2 argument errors, 3 broken internal invariants.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bijection import map_necklace, unmap_function, weighted_sum
from .counting import binary_zero_sum_count, necklace_count, stratum_count, stratum_keys
from .decomposition import CosetTable, build_tables
from .errors import (
    EnvelopeExceededError,
    EvenNError,
    InvariantViolationError,
    NecklaceMapError,
    NotCoprimeError,
    NotInFError,
    NotPrimeError,
)
from .numtheory import RingParams
from .oracle import DEFAULT_ENVELOPE, verify_bijection


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="necklacemap",
        description=(
            "Explicit correspondence between q-colored necklaces of length n "
            "(gcd(n, q) = 1) and functions on Z_n with zero weighted sum."
        ),
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument(
        "--factor-order",
        choices=("asc", "desc"),
        default="desc",
        help="ordering of the prime-power factors of q (default: desc)",
    )

    # same flags accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering values given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS
    )
    common.add_argument(
        "--factor-order",
        choices=("asc", "desc"),
        default=argparse.SUPPRESS,
        help=argparse.SUPPRESS,
    )

    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, with_q: bool = True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("n", type=int, help="necklace length")
        if with_q:
            p.add_argument("q", type=int, help="number of colors")
        return p

    add("cosets", "multiplication-by-q_i orbits on Z_n, per prime-power factor")
    add("factors", "irreducible factors of x^n - 1 over each F_{q_i}")

    p_map = add("map", "necklace word -> zero-weighted-sum function")
    p_map.add_argument("colors", help="comma-separated colors, e.g. 1,1,1")

    p_unmap = add("unmap", "zero-weighted-sum function -> canonical necklace word")
    p_unmap.add_argument("values", help="comma-separated values, e.g. 6,9,9")

    p_count = add("count", "closed-form necklace count, optionally per stratum")
    p_count.add_argument("--strata", action="store_true", help="include stratum counts")

    p_verify = add("verify", "exhaustively certify the correspondence for (n, q)")
    p_verify.add_argument(
        "--envelope",
        type=int,
        default=DEFAULT_ENVELOPE,
        help=f"refuse enumeration beyond n*q^n of this size (default {DEFAULT_ENVELOPE})",
    )

    add("zero-sum-count", "number of zero-sum subsets of Z_n (odd n)", with_q=False)
    return parser


def _parse_colors(text: str, n: int) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"could not parse {text!r} as comma-separated integers")
    if len(values) != n:
        raise ValueError(f"expected {n} comma-separated entries, got {len(values)}")
    return values


def _csv(values) -> str:
    return ",".join(str(v) for v in values)


def _poly_str(coeffs, field) -> str:
    """Human form of a factor polynomial, coefficients as element indices."""
    terms = []
    for u in range(len(coeffs) - 1, -1, -1):
        c = field.to_index(coeffs[u])
        if c == 0:
            continue
        if u == 0:
            terms.append(str(c))
        else:
            x_part = "x" if u == 1 else f"x^{u}"
            terms.append(x_part if c == 1 else f"{c}{x_part}")
    return " + ".join(terms) if terms else "0"


def _config_payload(params: RingParams, tables: CosetTable | None) -> dict:
    config: dict = {"factor_order": params.factor_order}
    if tables is not None:
        config["generators"] = [
            {
                "i": i + 1,
                "j": j + 1,
                "generator": qctx.field.to_index(qctx.generator),
                "x_exponent": qctx.x_exponent,
            }
            for i, block in enumerate(tables.blocks)
            for j, qctx in enumerate(block.quotients)
        ]
    return config


def _envelope_payload(command: str, n: int, params: RingParams | None, result, config) -> dict:
    return {
        "command": command,
        "n": n,
        "q": params.q if params is not None else None,
        "factors": (
            [{"p": f.p, "t": f.t, "q": f.value} for f in params.factors]
            if params is not None
            else []
        ),
        "result": result,
        "config": config,
    }


def _support_str(support) -> str:
    parts = []
    for i, idxs in enumerate(support):
        inner = ",".join(str(j + 1) for j in idxs)
        parts.append(f"I_{i + 1}={{{inner}}}")
    return " ".join(parts) if parts else "(no factors)"


def _emit(args, payload: dict, text_lines) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _run_cosets(args) -> int:
    params = RingParams.create(args.n, args.q, args.factor_order)
    tables = build_tables(params)
    result = []
    lines = []
    for i, block in enumerate(tables.blocks):
        f = block.factor
        lines.append(f"factor {i + 1}: q_{i + 1} = {f.value} (p={f.p}, t={f.t})")
        entry = {"i": i + 1, "q_i": f.value, "cosets": []}
        for j, coset in enumerate(block.cosets):
            members = "{" + ",".join(str(m) for m in coset.members) + "}"
            lines.append(
                f"  S[{i + 1},{j + 1}]: rep={coset.rep} size={coset.size} members={members}"
            )
            entry["cosets"].append(
                {
                    "j": j + 1,
                    "rep": coset.rep,
                    "size": coset.size,
                    "members": list(coset.members),
                    "orbit": list(coset.orbit),
                }
            )
        result.append(entry)
    payload = _envelope_payload("cosets", args.n, params, result, _config_payload(params, tables))
    _emit(args, payload, lines)
    return 0


def _run_factors(args) -> int:
    params = RingParams.create(args.n, args.q, args.factor_order)
    tables = build_tables(params)
    result = []
    lines = []
    for i, block in enumerate(tables.blocks):
        lines.append(f"factor {i + 1}: q_{i + 1} = {block.factor.value}")
        entry = {"i": i + 1, "q_i": block.factor.value, "polys": []}
        for j, coeffs in enumerate(block.factor_polys):
            lines.append(f"  P[{i + 1},{j + 1}] = {_poly_str(coeffs, block.field)}")
            entry["polys"].append(
                {"j": j + 1, "coeffs": [block.field.to_index(c) for c in coeffs]}
            )
        result.append(entry)
    payload = _envelope_payload("factors", args.n, params, result, _config_payload(params, tables))
    _emit(args, payload, lines)
    return 0


def _run_map(args) -> int:
    params = RingParams.create(args.n, args.q, args.factor_order)
    tables = build_tables(params)
    word = _parse_colors(args.colors, args.n)
    image = map_necklace(tables, word)
    result = {
        "necklace": list(word),
        "function": list(image),
        "weighted_sum": weighted_sum(args.n, image),
    }
    payload = _envelope_payload("map", args.n, params, result, _config_payload(params, tables))
    _emit(args, payload, [_csv(image)])
    return 0


def _run_unmap(args) -> int:
    params = RingParams.create(args.n, args.q, args.factor_order)
    tables = build_tables(params)
    values = _parse_colors(args.values, args.n)
    word = unmap_function(tables, values)
    result = {"function": list(values), "necklace": list(word)}
    payload = _envelope_payload("unmap", args.n, params, result, _config_payload(params, tables))
    _emit(args, payload, [_csv(word)])
    return 0


def _run_count(args) -> int:
    params = RingParams.create(args.n, args.q, args.factor_order)
    total = necklace_count(args.n, args.q)
    lines = [f"necklaces({args.n},{args.q}) = {total}"]
    result: dict = {"necklaces": str(total)}
    config: dict
    if args.strata:
        tables = build_tables(params)
        strata = []
        lines.append("strata:")
        for key in stratum_keys(tables):
            size = stratum_count(tables, key)
            lines.append(f"  {_support_str(key)}: {size}")
            strata.append(
                {
                    "support": [[j + 1 for j in idxs] for idxs in key],
                    "count": str(size),
                }
            )
        result["strata"] = strata
        config = _config_payload(params, tables)
    else:
        config = _config_payload(params, None)
    payload = _envelope_payload("count", args.n, params, result, config)
    _emit(args, payload, lines)
    return 0


def _run_verify(args) -> int:
    params = RingParams.create(args.n, args.q, args.factor_order)
    report = verify_bijection(args.n, args.q, args.factor_order, args.envelope)
    lines = [f"{name}: {'ok' if ok else 'FAILED'}" for name, ok in report.flag_items()]
    if report.all_ok:
        lines.append(
            f"bijection certified: {report.necklace_total} <-> {report.function_total}"
        )
    else:
        lines.append(
            f"certification FAILED: {report.necklace_total} necklaces, "
            f"{report.function_total} functions"
        )
    tables = build_tables(params)
    payload = _envelope_payload(
        "verify", args.n, params, report.to_payload(), _config_payload(params, tables)
    )
    _emit(args, payload, lines)
    print(f"elapsed: {report.elapsed:.3f}s", file=sys.stderr)
    return 0 if report.all_ok else 1


def _run_zero_sum_count(args) -> int:
    total = binary_zero_sum_count(args.n)
    result = {"count": str(total)}
    payload = _envelope_payload(
        "zero-sum-count", args.n, None, result, {"factor_order": args.factor_order}
    )
    _emit(args, payload, [f"zero-sum subsets of Z_{args.n} = {total}"])
    return 0


_HANDLERS = {
    "cosets": _run_cosets,
    "factors": _run_factors,
    "map": _run_map,
    "unmap": _run_unmap,
    "count": _run_count,
    "verify": _run_verify,
    "zero-sum-count": _run_zero_sum_count,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except InvariantViolationError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3
    except (
        NotCoprimeError,
        NotInFError,
        EnvelopeExceededError,
        EvenNError,
        NotPrimeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, NecklaceMapError) as exc:
        print(f"argument error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entrypoint()
