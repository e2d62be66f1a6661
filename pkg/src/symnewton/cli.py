"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .newton import e_to_p, m_to_p, theorem_terms
from .oracle import expand_m, render_poly
from .partitions import Partition, parse_partition
from .ring import Expansion, pieri_power_times_monomial
from .sweep import POLICIES, run_sweep


class UsageError(Exception):
    pass


def _rational(c) -> dict:
    c = Fraction(c)
    return {"num": c.numerator, "den": c.denominator}


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _nonempty(lam: Partition, what: str) -> Partition:
    if lam.is_empty():
        raise UsageError(f"{what}: the empty partition is not accepted")
    return lam


def _expansion_json(x: Expansion) -> dict:
    return {
        "basis": x.symbol,
        "terms": [{"partition": list(lam.flat()), "coeff": _rational(c)} for lam, c in x.items()],
    }


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def garland_lines(lam: Partition) -> list[str]:
    """The identity for ``lam`` written with ``p_j -> (h⊗t^j)`` and ``m_mu -> p(mu)``."""
    terms = theorem_terms(lam)
    lhs = f"{lam.length()}·p({','.join(map(str, lam.flat()))})"
    rhs = _signed_join(
        (t.sign, f"{'' if t.coeff == 1 else t.coeff}(h⊗t^{t.power_degree})"
                 f"p({','.join(map(str, t.residual.flat()))})")
        for t in terms
    )
    lines = [f"{lhs} = {rhs}"]
    if lam.values == (1,):
        k = lam.length()
        rhs = _signed_join(
            (1 if i % 2 else -1, f"(h⊗t^{i})Λ_{k - i}") for i in range(1, k + 1)
        )
        lines.append(f"{k}Λ_{k} = {rhs}")
    return lines


def _signed_join(pairs) -> str:
    out = []
    for i, (sign, body) in enumerate(pairs):
        if i == 0:
            out.append(body if sign > 0 else f"−{body}")
        else:
            out.append(f" {'+' if sign > 0 else '−'} {body}")
    return "".join(out)


def cmd_expand(args) -> tuple[int, str]:
    lam = _partition_arg(args.partition)
    if args.vars < 1:
        raise UsageError("--vars must be >= 1")
    poly = expand_m(lam, args.vars)
    if args.json:
        return 0, _dump({
            "partition": list(lam.flat()),
            "vars": args.vars,
            "terms": [{"exponents": list(e), "coeff": _rational(c)} for e, c in poly.items()],
        })
    return 0, "\n".join(render_poly(poly))


def cmd_m2p(args) -> tuple[int, str]:
    lam = _nonempty(_partition_arg(args.partition), "m2p")
    x = m_to_p(lam)
    if args.json:
        return 0, _dump({"partition": list(lam.flat()), **_expansion_json(x)})
    return 0, x.render()


def cmd_pieri(args) -> tuple[int, str]:
    if args.power < 1:
        raise UsageError("power degree must be >= 1")
    lam = _partition_arg(args.partition)
    x = pieri_power_times_monomial(args.power, lam)
    if args.json:
        return 0, _dump({"power": args.power, "partition": list(lam.flat()), **_expansion_json(x)})
    return 0, x.render()


def cmd_e2p(args) -> tuple[int, str]:
    if args.k < 1:
        raise UsageError("k must be >= 1")
    x = e_to_p(args.k)
    if args.json:
        return 0, _dump({"k": args.k, **_expansion_json(x)})
    return 0, x.render()


def cmd_garland(args) -> tuple[int, str]:
    lam = _nonempty(_partition_arg(args.partition), "garland")
    lines = garland_lines(lam)
    if args.json:
        return 0, _dump({
            "partition": list(lam.flat()),
            "length": lam.length(),
            "terms": [
                {
                    "sign": t.sign,
                    "coeff": t.coeff,
                    "power_degree": t.power_degree,
                    "residual": list(t.residual.flat()),
                    "composition": list(t.composition),
                }
                for t in theorem_terms(lam)
            ],
            "lines": lines,
        })
    return 0, "\n".join(lines)


def cmd_verify(args) -> tuple[int, str]:
    if args.max_weight < 1:
        raise UsageError("--max-weight must be >= 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    report = run_sweep(args.max_weight, args.policy, args.jobs)
    code = 0 if report.ok else 1
    if args.json:
        return code, _dump({
            "bound": report.bound,
            "policy": report.policy,
            "partitions": report.partitions,
            "checked": report.checked,
            "formal_checked": report.formal_checked,
            "classical_checked": report.classical_checked,
            "failures": [
                {
                    "kind": f.kind,
                    "partition": list(f.partition),
                    "n": f.n,
                    "monomial": None if f.monomial is None else list(f.monomial),
                    "lhs": None if f.lhs is None else _rational(f.lhs),
                    "rhs": None if f.rhs is None else _rational(f.rhs),
                }
                for f in report.failures
            ],
        })
    lines = [
        f"max weight {report.bound}, policy {report.policy}",
        f"partitions: {report.partitions}",
        f"oracle checks: {report.checked}",
        f"formal-ring checks: {report.formal_checked}",
        f"classical checks: {report.classical_checked}",
        f"failures: {len(report.failures)}",
    ]
    for f in report.failures:
        where = "" if f.n is None else f" n={f.n} monomial={f.monomial} lhs={f.lhs} rhs={f.rhs}"
        lines.append(f"  {f.kind} ({','.join(map(str, f.partition))}){where}")
    lines.append(f"time: {report.wall_time:.2f}s")
    return code, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="symnewton",
        description="Exact symmetric-polynomial expansions and Newton-Girard type identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="expand m_lambda in explicit variables")
    p.add_argument("partition")
    p.add_argument("--vars", type=int, required=True, metavar="N")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("m2p", parents=[common], help="monomial to power-sum conversion")
    p.add_argument("partition")
    p.set_defaults(func=cmd_m2p)

    p = sub.add_parser("pieri", parents=[common], help="expand p_a * m_lambda")
    p.add_argument("power", type=int)
    p.add_argument("partition")
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("e2p", parents=[common], help="elementary to power-sum conversion")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_e2p)

    p = sub.add_parser("verify", parents=[common], help="verification sweep")
    p.add_argument("--max-weight", type=int, required=True, metavar="W")
    p.add_argument("--policy", choices=POLICIES, default="paper")
    p.add_argument("--jobs", type=int, default=1, metavar="K")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("garland", parents=[common], help="render the identity in current-algebra notation")
    p.add_argument("partition")
    p.set_defaults(func=cmd_garland)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, text = args.func(args)
    except UsageError as exc:
        print(f"symnewton {args.command}: error: {exc}", file=sys.stderr)
        return 2
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
