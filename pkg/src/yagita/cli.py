"""Command-line interface.

Subcommands: ``compute`` (formula only), ``witness`` (construct and verify
one witness group), ``chern`` (analyze a matrix file), ``verify`` (full
verification report), ``table`` (GL/SL table) and ``prop6`` (root-product
polynomial checks).  Exit codes for ``verify``: 0 Pass, 2 PassWithAmbiguity,
3 Incomplete, 1 Fail or error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .chern import eigen_exponents, n_upper, total_chern
from .exactmat import DEFAULT_CAP, CycMatrix
from .fppoly import INFINITY, check_prop6, parse_fp_poly, random_unit_root_product
from .formulas import yagita_gl, yagita_sl
from .harness import (
    exit_code,
    report_to_json,
    table,
    table_tsv,
    verify_case,
)
from .numutil import is_prime
from .ringspec import RationalIntegers, compute_l, contains_zeta_p, parse_ring
from .witness import (
    WitnessError,
    blow_up,
    build_e2m_integer,
    build_extraspecial_monomial,
    build_g1,
    build_g2,
    build_q8,
    parse_kind,
    verify_embedding,
)

MAX_PRIME = 10**4


def _add_common(sub, *, ring=True, cap=False, seed=False):
    sub.add_argument("--json", action="store_true", help="machine-readable output")
    if ring:
        sub.add_argument("--ring", default="Z", help="Z, Z[i], cyclotomic:N, quadratic:D, subcyclotomic:p:d, abstract:l:M")
    if cap:
        sub.add_argument("--cap", type=int, default=DEFAULT_CAP, help="closure element cap")
    if seed:
        sub.add_argument("--seed", type=int, default=0, help="seed for randomized runs")


def _check_prime(p: int) -> int:
    if not is_prime(p) or p > MAX_PRIME:
        raise ValueError(f"--prime must be a prime <= {MAX_PRIME}")
    return p


def _cmd_compute(args) -> int:
    p = _check_prime(args.prime)
    ring = parse_ring(args.ring)
    l = compute_l(ring, p)
    if args.sl:
        res = yagita_sl(p, args.n, l, ring)
        if args.json:
            print(json.dumps({"value": str(res.value), "ambiguous": res.ambiguous}))
        else:
            print(res)
        return 0
    value = yagita_gl(p, args.n, l)
    print(json.dumps({"value": str(value)}) if args.json else value)
    return 0


def _build_witness(kind_text: str, ring_text: str):
    kind = parse_kind(kind_text)
    ring = parse_ring(ring_text)
    if kind.family == "Q8":
        return build_q8()
    if kind.family == "D8":
        return build_e2m_integer(1)
    if kind.family == "G1":
        return build_g1(kind.p, kind.m, ring)
    if kind.family == "G2":
        return build_g2(kind.p, kind.m, ring)
    if kind.family == "E":
        if kind.p == 2:
            return build_e2m_integer(kind.m)
        w = build_extraspecial_monomial(kind.p, kind.m)
        if isinstance(ring, RationalIntegers):
            return blow_up(w)
        if not contains_zeta_p(ring, kind.p):
            raise WitnessError(
                f"extraspecial model needs zeta_{kind.p} in the ring, or Z for "
                "the restriction-of-scalars form"
            )
        return w
    raise WitnessError(f"unknown kind {kind_text!r}")


def _cmd_witness(args) -> int:
    w = _build_witness(args.kind, args.ring)
    vw = verify_embedding(w, args.cap)
    if args.json:
        out = {
            "kind": str(w.kind),
            "ring": str(w.ring),
            "dimension": str(w.dimension),
            "expected_order": str(w.expected_order),
            "expected_yagita": str(w.expected_yagita),
            "claims_sl": w.claims_sl,
            "generators": [g.to_json() for g in w.generators],
            "elements": [m.to_json() for m in vw.elements],
            "verification": {
                k: (str(v) if isinstance(v, int) and not isinstance(v, bool) else v)
                for k, v in vw.summary().items()
            },
        }
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print(w)
        for k, v in vw.summary().items():
            print(f"  {k}: {v}")
    return 0 if vw.ok else 1


def _cmd_chern(args) -> int:
    p = _check_prime(args.prime)
    with open(args.matrix_file, "r", encoding="utf-8") as fh:
        m = CycMatrix.from_json(json.load(fh))
    exps = eigen_exponents(m, p)
    tc = total_chern(exps)
    nu = n_upper(m, p)
    nu_text = "infinity" if nu == INFINITY else str(int(nu))
    if args.json:
        print(
            json.dumps(
                {
                    "exponents": {str(a): str(mult) for a, mult in exps.as_dict().items()},
                    "total_chern": str(tc),
                    "n_upper": nu_text,
                },
                indent=2,
                sort_keys=True,
            )
        )
    else:
        print(f"exponent multiplicities: {exps.as_dict()}")
        print(f"total Chern class: {tc}")
        print(f"n_upper: {nu_text}")
    return 0


def _cmd_verify(args) -> int:
    p = _check_prime(args.prime)
    ring = parse_ring(args.ring)
    report = verify_case(p, args.n, ring, sl=args.sl, cap=args.cap)
    if args.json:
        print(report_to_json(report))
    else:
        print(
            f"p={report.p} n={report.n} ring={report.ring} l={report.l} "
            f"{'SL' if report.sl else 'GL'}"
        )
        amb = " (or half)" if report.formula_ambiguous else ""
        print(f"  formula: {report.formula_value}{amb}")
        for w in report.witnesses:
            status = "ok" if w.verified else "FAILED"
            print(
                f"  witness {w.kind} dim {w.dimension}: order {w.order}, "
                f"invariant {w.oracle} [{status}]"
            )
        print(f"  certified lower bound: {report.certified_lower}")
        print(f"  verdict: {report.verdict}")
    return exit_code(report.verdict)


def _cmd_table(args) -> int:
    p = _check_prime(args.prime)
    ring = parse_ring(args.ring)
    rows = table(p, ring, args.n_max)
    if args.json:
        print(
            json.dumps(
                [{"n": str(r.n), "gl": str(r.gl), "sl": r.sl} for r in rows],
                indent=2,
            )
        )
    else:
        print(table_tsv(rows))
    return 0


def _cmd_prop6(args) -> int:
    p = _check_prime(args.prime)
    results = []
    if args.poly:
        f = parse_fp_poly(args.poly, p)
        v = check_prop6(f)
        results.append((str(f), v))
    else:
        rng = random.Random(args.seed)
        for _ in range(args.random):
            f = random_unit_root_product(p, rng)
            v = check_prop6(f)
            results.append((str(f), v))
    ok = all(v.holds for _, v in results)
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "poly": text,
                        "gcd": str(v.gcd),
                        "m": str(v.m),
                        "q": str(v.q),
                        "holds": v.holds,
                    }
                    for text, v in results
                ],
                indent=2,
            )
        )
    else:
        for text, v in results:
            print(f"{text}: gcd={v.gcd} m={v.m} q={v.q} holds={v.holds}")
        print(f"{len(results)} polynomial(s), all hold: {ok}")
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="yagita",
        description="Exact Yagita invariants of GL_n and SL_n over subrings of C, "
        "with machine-verified finite witness subgroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="evaluate the closed-form invariant")
    c.add_argument("--prime", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--sl", action="store_true")
    _add_common(c)
    c.set_defaults(fn=_cmd_compute)

    w = sub.add_parser("witness", help="construct and verify one witness group")
    w.add_argument("--kind", required=True, help="g1:p:m, g2:p:m, e:p:m, q8, d8")
    _add_common(w, cap=True)
    w.set_defaults(fn=_cmd_witness)

    ch = sub.add_parser("chern", help="eigen exponents / total Chern class of a matrix")
    ch.add_argument("--matrix-file", required=True)
    ch.add_argument("--prime", type=int, required=True)
    _add_common(ch, ring=False)
    ch.set_defaults(fn=_cmd_chern)

    v = sub.add_parser("verify", help="full verification report")
    v.add_argument("--prime", type=int, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--sl", action="store_true")
    _add_common(v, cap=True)
    v.set_defaults(fn=_cmd_verify)

    t = sub.add_parser("table", help="GL/SL value table")
    t.add_argument("--prime", type=int, required=True)
    t.add_argument("--n-max", type=int, default=16)
    _add_common(t)
    t.set_defaults(fn=_cmd_table)

    pr = sub.add_parser("prop6", help="exponent-gcd checks on unit-root polynomials")
    pr.add_argument("--prime", type=int, required=True)
    pr.add_argument("--poly", help='e.g. "1 + 2*x^2"')
    pr.add_argument("--random", type=int, default=100, help="number of random products")
    _add_common(pr, ring=False, seed=True)
    pr.set_defaults(fn=_cmd_prop6)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
