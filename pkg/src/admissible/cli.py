"""Command-line interface: ``admissible <subcommand>``.

Exit codes: 0 success, 1 bad input, 2 group not admissible (witness),
3 certificate failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .groups import (GroupTooLarge, MetacyclicDescriptor, PermGroup, admissibility_verdict,
                     metacyclic_descriptor_group)
from .polynomial import ParseError
from .ramification import determined_by_ramification, tame_symbol
from .symbols import SymbolAlgebraSpec, division_value_criterion
from .valuations import STANDARD_PRIMES, PrimeSpec, lex_valuation
from .witness import NotAdmissible, build_witness, dumps, verify_certificate


class InputError(Exception):
    pass


def _load_json(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    return data


def _load_group(path: str) -> PermGroup:
    try:
        return PermGroup.from_json(_load_json(path))
    except (ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        print(text)


def cmd_check_group(args) -> int:
    g = _load_group(args.input)
    v = admissibility_verdict(g, args.mode, args.exclude_prime)
    rep = v.report()
    lines = [f"group order {rep['order']}, mode {rep['mode']}"]
    for row in rep["sylow"]:
        desc = "abelian" if row["abelian"] else "nonabelian"
        if row["abelian"]:
            desc += f", rank {row['rank']}"
        if row["decomposition"]:
            q, qp = row["decomposition"]
            desc += f", C{q} x C{qp}"
        if "metacyclic" in row:
            desc += f", metacyclic={row['metacyclic']}"
        lines.append(f"  p={row['prime']}: order {row['order']}, {desc}"
                     f"  [{'ok' if row['passes'] else 'fails'}]")
    lines.append(f"admissible: {rep['admissible']}")
    _emit(args, rep, "\n".join(lines))
    return 0


def cmd_witness(args) -> int:
    g = _load_group(args.input)
    try:
        cert = build_witness(g)
    except NotAdmissible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    Path(args.out).write_text(dumps(cert))
    summary = {"out": args.out, "primes": [r["prime"] for r in cert["primes"]],
               "group_order": cert["group_order"]}
    _emit(args, summary, f"wrote {args.out} (primes {summary['primes']}, "
                         f"order {summary['group_order']})")
    return 0


def cmd_verify(args) -> int:
    g = _load_group(args.input)
    cert = _load_json(args.cert)
    report = verify_certificate(cert, g)
    _emit(args, report.to_json(), report.render())
    return 0 if report.ok else 3


def cmd_symbol(args) -> int:
    try:
        spec = SymbolAlgebraSpec.parse(args.n, args.a, args.b)
        primes = ([PrimeSpec.parse(p, spec.zeta_order) for p in args.prime]
                  if args.prime else list(STANDARD_PRIMES))
    except (ParseError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    div = division_value_criterion(spec)
    data = [tame_symbol(spec, P) for P in primes]
    witness = None
    if div.division:
        ram = determined_by_ramification(spec, primes)
        witness = ram.witness.name if ram.witness else None
    payload = {
        "spec": spec.to_json(),
        "lex_valuation": {"a": list(lex_valuation(spec.a).as_tuple()),
                          "b": list(lex_valuation(spec.b).as_tuple())},
        "division_criterion": div.to_json(),
        "tame_symbols": [dict(d.to_json(), valuations=list(d.valuations)) for d in data],
        "ramification_witness": witness,
    }
    lines = [f"(a, b)_{spec.n} with a = {payload['spec']['a']}, b = {payload['spec']['b']}",
             f"v(a) = {tuple(payload['lex_valuation']['a'])}, "
             f"v(b) = {tuple(payload['lex_valuation']['b'])}, det = {div.determinant}",
             f"division (value-group test): {div.division}"]
    for d in data:
        lines.append(f"  tame symbol at {d.prime.name}: {d.residue_class.render()}"
                     f"  order {d.order}")
    if div.division:
        lines.append(f"ramification witness: {witness}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_descriptor(args) -> int:
    d = MetacyclicDescriptor(args.e, args.m, args.i)
    try:
        g, abelian = metacyclic_descriptor_group(d)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    payload = {"e": d.e, "m": d.m, "i": d.i, "group": g.to_json(), "order": g.order,
               "abelian": abelian}
    _emit(args, payload, f"C{d.e} x|_{d.i} C{d.m}: order {g.order}, degree {g.degree}, "
                         f"abelian {abelian}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="admissible", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("check-group", cmd_check_group, "admissibility verdict with per-prime report")
    p.add_argument("--input", required=True)
    p.add_argument("--mode", choices=["rank2", "metacyclic"], default="rank2")
    p.add_argument("--exclude-prime", type=int, default=None)

    p = add("witness", cmd_witness, "build a witness certificate")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)

    p = add("verify", cmd_verify, "re-verify a witness certificate")
    p.add_argument("--cert", required=True)
    p.add_argument("--input", required=True)

    p = add("symbol", cmd_symbol, "inspect a symbol algebra (a, b)_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--prime", action="append", default=[],
                   help="prime to evaluate the tame symbol at (repeatable)")

    p = add("descriptor", cmd_descriptor, "group C_e x| C_m with action exponent i")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GroupTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
