"""Command-line entry point.

Subcommands: ``verify`` (identity certificates), ``weights`` (table dumps),
``pte-show`` / ``pte-search`` (partitions), ``bernoulli`` (polynomial
coefficients).  Exit codes: 0 success, 1 identity/certificate mismatch,
2 usage error, 3 cost-cap refusal.  Rationals are always serialized as
"p/q" strings, never floats.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import identities
from .arith import CycloNum, euler_phi
from .bernoulli import bernoulli_poly
from .cost import DEFAULT_MAX_COST, CostCapExceeded
from .identities import (
    DEFAULT_SEED,
    IdentityReport,
    MultiIndexConfig,
    report_to_dict,
    scalar_to_json,
)
from .pte import cancel_common, generalized_partition, search_small_solutions, verify_power_sums
from .weights import alpha_table, beta_table

ENV_MAX_COST = "DIGITSUM_MAX_COST"


@dataclass
class RunConfig:
    """Resolved invocation: subcommand plus the knobs shared by all of them."""

    subcommand: str
    output_format: str
    output_path: str | None
    seed: int
    max_cost: int

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        if args.max_cost is not None:
            max_cost = parse_cost(args.max_cost)
        else:
            env = os.environ.get(ENV_MAX_COST)
            max_cost = parse_cost(env) if env else DEFAULT_MAX_COST
        return cls(
            subcommand=args.subcommand,
            output_format=args.format,
            output_path=args.output,
            seed=parse_seed(args.seed),
            max_cost=max_cost,
        )


def parse_cost(text: str) -> int:
    """Cost caps accept plain integers or power notation like 2^20."""
    text = text.strip()
    if "^" in text:
        base, _, exp = text.partition("^")
        value = int(base) ** int(exp)
    else:
        value = int(text)
    if value < 1:
        raise ValueError(f"max cost must be >= 1, got {value}")
    return value


def parse_seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {value}")
    return value


def parse_grid(spec: str) -> tuple[Fraction, ...]:
    """Grid specs: an explicit comma list of rationals, or ``lo..hi/step``.

    In range form the text after ``..`` is split on ``/``: one token is a
    bare upper bound (step 1), two tokens are integer hi/step, three are
    hi plus a rational step p/q, four are rational hi and step (p/q/p/q).
    Use a comma list when that is too rigid.
    """
    spec = spec.strip()
    if ".." in spec:
        lo_text, rest = spec.split("..", 1)
        lo = Fraction(lo_text)
        parts = rest.split("/")
        if len(parts) == 1:
            hi, step = Fraction(parts[0]), Fraction(1)
        elif len(parts) == 2:
            hi, step = Fraction(parts[0]), Fraction(parts[1])
        elif len(parts) == 3:
            hi, step = Fraction(parts[0]), Fraction(int(parts[1]), int(parts[2]))
        elif len(parts) == 4:
            hi = Fraction(int(parts[0]), int(parts[1]))
            step = Fraction(int(parts[2]), int(parts[3]))
        else:
            raise ValueError(f"cannot parse grid range {spec!r}")
        if step <= 0:
            raise ValueError(f"grid step must be positive, got {step}")
        values = []
        current = lo
        while current <= hi:
            values.append(current)
            current += step
        return tuple(values)
    return tuple(Fraction(token.strip()) for token in spec.split(",") if token.strip())


def _parse_fraction_list(text: str) -> tuple[Fraction, ...]:
    return tuple(Fraction(token.strip()) for token in text.split(",") if token.strip())


def _parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(int(token.strip()) for token in text.split(",") if token.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digitsum",
        description="Exact digit-sum identity verifier and partition search.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser, default_format: str) -> None:
        p.add_argument(
            "--format",
            choices=("json", "csv", "text"),
            default=default_format,
            help=f"output format (default: {default_format})",
        )
        p.add_argument("--output", default=None, help="write to this path instead of stdout")
        p.add_argument(
            "--seed", type=str, default=str(DEFAULT_SEED), help="seed for randomized inputs"
        )
        p.add_argument(
            "--max-cost",
            type=str,
            default=None,
            help=f"summand-evaluation cap, e.g. 1048576 or 2^20 "
            f"(default: ${ENV_MAX_COST} or {DEFAULT_MAX_COST})",
        )

    p_verify = sub.add_parser("verify", help="run identity verifications")
    group = p_verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true", help="run the full suite")
    group.add_argument("--identity", help="run a single identity family by id")
    p_verify.add_argument("--base", type=int, default=None)
    p_verify.add_argument("--order", type=str, default=None, help="order N, or comma list for multi-index sums")
    p_verify.add_argument("--x", type=Fraction, default=None)
    p_verify.add_argument("--y", type=Fraction, default=None)
    p_verify.add_argument("--x-list", type=str, default=None, help="comma list of rationals")
    p_verify.add_argument("--y-list", type=str, default=None, help="comma list of rationals")
    p_verify.add_argument("--x1", type=Fraction, default=None)
    p_verify.add_argument("--x2", type=Fraction, default=None)
    p_verify.add_argument("--t", type=Fraction, default=None)
    p_verify.add_argument("--l", type=int, default=None, help="power for the mixed sums")
    p_verify.add_argument("--draws", type=int, default=3, help="random draws per configuration")
    p_verify.add_argument(
        "--timings", action="store_true", help="include wall-clock timings in the output"
    )
    common(p_verify, "json")

    p_weights = sub.add_parser("weights", help="dump a weight table")
    p_weights.add_argument("--base", type=int, required=True)
    p_weights.add_argument("--order", type=int, required=True)
    p_weights.add_argument("--kind", choices=("alpha", "beta"), default="beta")
    common(p_weights, "json")

    p_show = sub.add_parser("pte-show", help="print one partition with its certificate")
    p_show.add_argument("--base", type=int, required=True)
    p_show.add_argument("--order", type=int, required=True)
    p_show.add_argument("--x", type=Fraction, required=True)
    p_show.add_argument("--y", type=Fraction, required=True)
    p_show.add_argument("--kmax", type=int, default=None, help="check powers up to this (default N-1)")
    common(p_show, "text")

    p_search = sub.add_parser("pte-search", help="grid search for small partitions")
    p_search.add_argument("--base", type=int, required=True)
    p_search.add_argument("--order", type=int, required=True)
    p_search.add_argument("--x-grid", required=True, help="comma list or lo..hi/step")
    p_search.add_argument("--y-grid", required=True, help="comma list or lo..hi/step")
    p_search.add_argument("--top", type=int, default=10, help="keep this many best results")
    p_search.add_argument("--kmax", type=int, default=None)
    p_search.add_argument("--min-size", type=int, default=0, help="drop reduced partitions smaller than this")
    common(p_search, "json")

    p_bern = sub.add_parser("bernoulli", help="print Bernoulli polynomial coefficients")
    p_bern.add_argument("--degree", type=int, required=True)
    common(p_bern, "text")

    return parser


def _emit(text: str, output_path: str | None) -> None:
    if output_path is None:
        sys.stdout.write(text)
    else:
        with open(output_path, "w", encoding="utf-8") as handle:
            handle.write(text)


# ---------------------------------------------------------------------------
# verify


def _single_identity_reports(args, rng: random.Random, max_cost: int) -> list[IdentityReport]:
    b = args.base if args.base is not None else 2

    def frac(value, fallback):
        return value if value is not None else fallback

    def order(default):
        if args.order is None:
            return default
        orders = _parse_int_list(args.order)
        return orders[0] if len(orders) == 1 else default

    def order_list(default):
        return _parse_int_list(args.order) if args.order is not None else default

    name = args.identity
    draws = max(args.draws, 1)
    reports: list[IdentityReport] = []
    if name == "difference-identity":
        N = order(2)
        for _ in range(draws):
            x = frac(args.x, identities.random_fraction(rng))
            y = frac(args.y, identities.random_fraction(rng))
            f = identities.random_poly(rng, N + 2)
            reports.append(identities.verify_difference_identity(b, N, f, x, y, max_cost))
    elif name in ("power-sum-n", "power-sum-n1"):
        N = order(2)
        which = "N" if name == "power-sum-n" else "N+1"
        for _ in range(draws):
            x = frac(args.x, identities.random_fraction(rng))
            y = frac(args.y, identities.random_fraction(rng))
            reports.append(identities.verify_power_sum(b, N, x, y, which, max_cost))
    elif name in ("moment0", "moment1"):
        reports.append(identities.verify_moment(b, order(2), int(name[-1])))
    elif name == "betaconv-dual1":
        reports.append(identities.verify_betaconv_dual1(b, order(2), max_cost))
    elif name == "betaconv-dual2":
        reports.append(identities.verify_betaconv_dual2(b, order(2), max_cost))
    elif name == "beta-alpha-reduction":
        reports.append(identities.verify_beta_alpha_reduction(order(3)))
    elif name in ("alpha-moment0", "alpha-moment1"):
        reports.append(identities.verify_alpha_moment(order(2), int(name[-1])))
    elif name in ("multi-power-sum", "multisum", "multi-mixed-sum"):
        N_list = order_list((1, 2))
        y_list = (
            _parse_fraction_list(args.y_list)
            if args.y_list
            else tuple(identities.random_fraction(rng, nonzero=True) for _ in N_list)
        )
        if name == "multi-mixed-sum":
            x_list = (
                _parse_fraction_list(args.x_list)
                if args.x_list
                else tuple(identities.random_fraction(rng) for _ in N_list)
            )
            config = MultiIndexConfig(b=b, N_list=N_list, y_list=y_list, x_list=x_list)
            reports.append(identities.verify_multi_mixed_sum(config, max_cost))
        else:
            x = frac(args.x, identities.random_fraction(rng))
            config = MultiIndexConfig(b=b, N_list=N_list, y_list=y_list, x=x)
            if name == "multi-power-sum":
                reports.append(identities.verify_multi_power_sum(config, max_cost))
            else:
                f = identities.random_poly(rng, sum(N_list))
                reports.append(identities.verify_multisum(config, f, max_cost))
    elif name in ("mixed-sum-vanishing", "mixed-sum-closed-form", "mixed-sum-recurrence"):
        N = order(2)
        x = frac(args.x, identities.random_fraction(rng))
        y = frac(args.y, identities.random_fraction(rng))
        if name == "mixed-sum-vanishing":
            l = args.l if args.l is not None else N - 1
            reports.append(identities.verify_mixed_vanishing(b, N, l, x, y, max_cost))
        elif name == "mixed-sum-closed-form":
            reports.append(identities.verify_mixed_closed_form(b, N, x, y, max_cost))
        else:
            l = args.l if args.l is not None else N
            reports.append(identities.verify_mixed_recurrence(b, N, l, x, y, max_cost))
    elif name == "joint-vanishing":
        N = order(3)
        p = args.l if args.l is not None else N - 2
        reports.append(identities.verify_joint_vanishing(N, p, 2, b, max_cost))
    elif name == "joint-line-base2":
        N = order(2)
        for _ in range(draws):
            x1 = frac(args.x1, identities.random_fraction(rng))
            x2 = frac(args.x2, identities.random_fraction(rng))
            while x2 == x1:
                x2 = identities.random_fraction(rng)
            t = frac(args.t, identities.random_fraction(rng))
            reports.append(identities.verify_joint_line_base2(N, x1, x2, t, max_cost))
    elif name == "joint-line-general":
        N = order(2)
        x1 = frac(args.x1, identities.random_fraction(rng))
        x2 = frac(args.x2, identities.random_fraction(rng))
        while x2 == x1:
            x2 = identities.random_fraction(rng)
        reports.append(identities.verify_joint_line_general(b, N, x1, x2, max_cost))
    elif name == "faulhaber":
        for _ in range(draws):
            a = identities.random_fraction(rng)
            step = identities.random_fraction(rng, nonzero=True)
            lo = rng.randint(-6, 6)
            reports.append(identities.verify_faulhaber(a, step, lo, lo + rng.randint(0, 12), rng.randint(0, 6)))
    elif name == "delta-bernoulli":
        N = order(3)
        a = frac(args.x, identities.random_fraction(rng))
        step = frac(args.y, identities.random_fraction(rng, nonzero=True))
        reports.append(identities.verify_delta_bernoulli(a, step, 0, N))
    elif name == "generalized-pte":
        N = order(3)
        for _ in range(draws):
            x = frac(args.x, identities.random_fraction(rng))
            y = frac(args.y, identities.random_fraction(rng, nonzero=True))
            f = identities.random_poly(rng, N - 1)
            reports.append(identities.verify_generalized_pte(b, N, f, x, y, max_cost))
    else:
        raise ValueError(f"unknown identity {name!r}")
    return reports


def _format_reports(reports: list[IdentityReport], fmt: str, timings: bool) -> str:
    if fmt == "json":
        payload = [report_to_dict(rep, include_timing=timings) for rep in reports]
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["identity", "params", "lhs", "rhs", "equal"])
        for rep in reports:
            writer.writerow(
                [
                    rep.identity,
                    json.dumps({k: scalar_to_json(v) for k, v in rep.params.items()}, sort_keys=True),
                    json.dumps(scalar_to_json(rep.lhs)),
                    json.dumps(scalar_to_json(rep.rhs)),
                    rep.equal,
                ]
            )
        return buffer.getvalue()
    lines = []
    for rep in reports:
        bits = " ".join(f"{k}={scalar_to_json(v)}" for k, v in rep.params.items())
        status = "ok" if rep.equal else "MISMATCH"
        suffix = f" [{rep.elapsed_ms:.1f} ms]" if timings and rep.elapsed_ms is not None else ""
        lines.append(f"{rep.identity}: {status} ({bits}){suffix}")
    total = len(reports)
    good = sum(rep.equal for rep in reports)
    lines.append(f"{good}/{total} identities verified")
    return "\n".join(lines) + "\n"


def _cmd_verify(args, config: RunConfig) -> int:
    if args.all:
        reports = identities.run_suite(seed=config.seed, max_cost=config.max_cost)
    else:
        rng = random.Random(config.seed)
        reports = _single_identity_reports(args, rng, config.max_cost)
        for rep in reports:
            rep.params.setdefault("seed", config.seed)
    _emit(_format_reports(reports, config.output_format, args.timings), config.output_path)
    return 0 if all(rep.equal for rep in reports) else 1


# ---------------------------------------------------------------------------
# weights


def _cmd_weights(args, config: RunConfig) -> int:
    if args.kind == "alpha":
        if args.base != 2:
            raise ValueError("alpha tables exist only for base 2")
        table = alpha_table(args.order)
    else:
        table = beta_table(args.base, args.order)
    coeff_lists = [
        [str(c) for c in v.coeffs] if isinstance(v, CycloNum) else [str(v)]
        for v in table.values
    ]
    if config.output_format == "json":
        payload = {
            "b": table.b,
            "N": table.N,
            "kind": table.kind,
            "phi_b": euler_phi(table.b),
            "values": coeff_lists,
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif config.output_format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        phi = euler_phi(table.b)
        writer.writerow(["k"] + [f"c{i}" for i in range(phi if args.kind == "beta" else 1)])
        for k, coeffs in enumerate(coeff_lists):
            writer.writerow([k] + coeffs)
        text = buffer.getvalue()
    else:
        lines = [f"{table.kind} table b={table.b} N={table.N} ({len(table)} entries)"]
        for k, v in enumerate(table.values):
            lines.append(f"  {k}: {v}")
        text = "\n".join(lines) + "\n"
    _emit(text, config.output_path)
    return 0


# ---------------------------------------------------------------------------
# pte


def _class_lines(label: str, expanded: list[list[Fraction]]) -> list[str]:
    return [
        f"{label} {i}: " + ", ".join(str(v) for v in values)
        for i, values in enumerate(expanded)
    ]


def _cmd_pte_show(args, config: RunConfig) -> int:
    kmax = args.kmax if args.kmax is not None else args.order - 1
    partition = generalized_partition(args.base, args.order, args.x, args.y, config.max_cost)
    certificate = verify_power_sums(partition, kmax)
    reduced = cancel_common(partition)
    reduced_certificate = verify_power_sums(reduced, kmax)

    if config.output_format == "json":
        payload = {
            "b": partition.b,
            "N": partition.N,
            "x": str(partition.x),
            "y": str(partition.y),
            "classes": [[str(v) for v in values] for values in partition.expanded()],
            "power_sums": [[str(v) for v in row] for row in certificate.power_sums],
            "valid": certificate.valid,
            "reduced": {
                "classes": [[str(v) for v in values] for values in reduced.expanded()],
                "size": reduced.reduced_size,
                "power_sums": [[str(v) for v in row] for row in reduced_certificate.power_sums],
                "valid": reduced_certificate.valid,
            },
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif config.output_format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["class", "values", "power_sums"])
        for i, values in enumerate(partition.expanded()):
            writer.writerow(
                [i, " ".join(map(str, values)), " ".join(map(str, certificate.power_sums[i]))]
            )
        text = buffer.getvalue()
    else:
        lines = [f"base={partition.b} order={partition.N} x={partition.x} y={partition.y}"]
        lines += _class_lines("class", partition.expanded())
        lines.append(f"power sums (k = 0..{kmax}):")
        for k in range(kmax + 1):
            row = " = ".join(str(certificate.power_sums[i][k]) for i in range(partition.b))
            lines.append(f"  k={k}: {row}")
        lines.append(f"certificate: {'VALID' if certificate.valid else 'INVALID'} (k <= {kmax})")
        lines.append(f"reduced partition (size {reduced.reduced_size}):")
        lines += _class_lines("reduced class", reduced.expanded())
        text = "\n".join(lines) + "\n"
    _emit(text, config.output_path)
    return 0 if certificate.valid and reduced_certificate.valid else 1


def _cmd_pte_search(args, config: RunConfig) -> int:
    results = search_small_solutions(
        args.base,
        args.order,
        parse_grid(args.x_grid),
        parse_grid(args.y_grid),
        k_max=args.kmax,
        min_size=args.min_size,
        max_cost=config.max_cost,
    )[: args.top]
    if config.output_format == "json":
        payload = {
            "b": args.base,
            "N": args.order,
            "solutions": [
                {
                    "x": str(res.x),
                    "y": str(res.y),
                    "classes": [[str(v) for v in values] for values in res.reduced.expanded()],
                    "reduced_size": res.reduced.reduced_size,
                    "power_sums": [[str(v) for v in row] for row in res.certificate.power_sums],
                }
                for res in results
            ],
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif config.output_format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["x", "y", "reduced_size", "classes"])
        for res in results:
            writer.writerow(
                [
                    res.x,
                    res.y,
                    res.reduced.reduced_size,
                    " | ".join(" ".join(map(str, values)) for values in res.reduced.expanded()),
                ]
            )
        text = buffer.getvalue()
    else:
        lines = [f"search base={args.base} order={args.order}: {len(results)} result(s)"]
        for res in results:
            classes = " | ".join(
                "{" + ", ".join(map(str, values)) + "}" for values in res.reduced.expanded()
            )
            lines.append(f"  x={res.x} y={res.y} size={res.reduced.reduced_size}: {classes}")
        text = "\n".join(lines) + "\n"
    _emit(text, config.output_path)
    return 0


def _cmd_bernoulli(args, config: RunConfig) -> int:
    poly = bernoulli_poly(args.degree)
    coeffs = list(poly.coeffs) or [Fraction(0)]
    if config.output_format == "json":
        text = json.dumps({"degree": args.degree, "coeffs": [str(c) for c in coeffs]}) + "\n"
    elif config.output_format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["power", "coefficient"])
        for i, c in enumerate(coeffs):
            writer.writerow([i, c])
        text = buffer.getvalue()
    else:
        terms = ", ".join(f"x^{i}: {c}" for i, c in enumerate(coeffs))
        text = f"B_{args.degree}(x) coefficients (constant first): {terms}\n"
    _emit(text, config.output_path)
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "weights": _cmd_weights,
    "pte-show": _cmd_pte_show,
    "pte-search": _cmd_pte_search,
    "bernoulli": _cmd_bernoulli,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        config = RunConfig.from_args(args)
        return _COMMANDS[args.subcommand](args, config)
    except CostCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
