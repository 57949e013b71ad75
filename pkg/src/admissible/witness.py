"""Witness certificates for admissible groups.

For every prime p dividing |G|, the Sylow p-subgroup P = C_q x C_q' is
realized inside the symbol algebra D = (a, b)_{zeta, qq'} with
a = f/(f - t), b = (f - t^2)/(f - t - t^2): the Kummer field
L = F(y, z), y^q = a, z^q' = b, sits in D as y = Y^q', z = Z^q. The
certificate records everything needed to recheck that construction, plus
the global condition that the Sylow indices are jointly coprime.

Certificates are canonical JSON: sorted keys, fixed indentation, canonical
polynomial strings. Verification recomputes every check and never reads a
stored boolean as evidence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import reduce
from math import gcd

from . import __version__
from .crossed import KummerAlgebra, cocycle_check, nondegenerate_kummer_check, symbol_cocycle
from .groups import PermGroup, admissibility_verdict, factorize
from .ramification import determined_by_ramification
from .symbols import (WITNESS_A, WITNESS_B, SymbolAlgebraSpec, division_value_criterion,
                      maximal_subfield_check)
from .valuations import STANDARD_PRIMES, residue

__all__ = [
    "FORMAT",
    "NotAdmissible",
    "build_witness",
    "verify_certificate",
    "gcd_index_check",
    "dumps",
    "VerificationReport",
]

FORMAT = "admissible-witness/1"
SEED = 0


class NotAdmissible(ValueError):
    pass


class WitnessCheckFailed(RuntimeError):
    pass


def dumps(cert: dict) -> str:
    return json.dumps(cert, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def gcd_index_check(sylow_orders, order: int) -> bool:
    """gcd over the Sylow subgroups of (G : P) equals 1."""
    for s in sylow_orders:
        if s < 1 or order % s:
            raise ValueError(f"Sylow order {s} does not divide {order}")
    indices = [order // s for s in sylow_orders]
    return reduce(gcd, indices, 0) == 1 if indices else order == 1


def prime_checks(spec: SymbolAlgebraSpec, q: int, q_prime: int, seed: int = SEED) -> dict:
    """All per-prime checks for the symbol algebra `spec` of degree q q'."""
    out: dict = {}
    div = division_value_criterion(spec)
    out["division_criterion"] = {"ok": div.division, **{k: v for k, v in div.to_json().items()
                                                         if k != "division"}}
    sub = maximal_subfield_check(spec, q, q_prime)
    out["maximal_subfield"] = sub.to_json()
    t_prime = STANDARD_PRIMES[0]
    ra, rb = residue(spec.a, t_prime), residue(spec.b, t_prime)
    out["branch_split"] = {"ok": ra.is_one() and rb.is_one(),
                           "residue_a": ra.render(), "residue_b": rb.render(), "prime": "t"}
    ok, certs = nondegenerate_kummer_check(q, q_prime, spec.a, spec.b, STANDARD_PRIMES)
    out["nondegenerate_kummer"] = {"ok": ok, "certificates": [c.to_json() for c in certs]}
    if div.division:
        ram = determined_by_ramification(spec, STANDARD_PRIMES)
        out["determined_by_ramification"] = {
            "ok": ram.holds,
            "witness_prime": ram.witness.name if ram.witness else None,
            "data": [d.to_json() for d in ram.data],
        }
    else:
        out["determined_by_ramification"] = {"ok": False, "witness_prime": None, "data": []}
    alg = KummerAlgebra(q, q_prime, spec.a, spec.b, zeta=spec.zeta)
    coc = cocycle_check(symbol_cocycle(alg), seed=seed)
    out["cocycle"] = {"ok": coc.ok, "checked": coc.checked, "exhaustive": coc.exhaustive,
                      "failing_triple": [list(g) for g in coc.failing_triple]
                      if coc.failing_triple else None}
    return out


def build_witness(g: PermGroup, *, strict: bool = True) -> dict:
    """Certificate for a group whose Sylow subgroups are abelian of rank <= 2."""
    verdict = admissibility_verdict(g, "rank2")
    if not verdict.admissible:
        raise NotAdmissible("group not admissible under the rank <= 2 Sylow criterion")
    records = []
    for s in verdict.sylows:
        q, qp = s.decomposition
        n = q * qp
        spec = SymbolAlgebraSpec.parse(n, WITNESS_A, WITNESS_B)
        checks = prime_checks(spec, q, qp)
        failed = [k for k, v in checks.items() if not v["ok"]]
        if failed and strict:
            raise WitnessCheckFailed(f"prime {s.prime}: check(s) {failed} failed")
        records.append({
            "prime": s.prime,
            "sylow_order": s.order,
            "q": q,
            "q_prime": qp,
            "n": n,
            "spec": spec.to_json(),
            "checks": checks,
        })
    order = verdict.order
    sylow_orders = [s.order for s in verdict.sylows]
    indices = [order // o for o in sylow_orders]
    gcd_ok = gcd_index_check(sylow_orders, order)
    if not gcd_ok and strict:  # pragma: no cover - Sylow indices are always coprime
        raise WitnessCheckFailed("Sylow indices are not coprime")
    return {
        "format": FORMAT,
        "toolkit_version": __version__,
        "seed": SEED,
        "group": g.to_json(),
        "group_order": order,
        "factorization": {str(p): k for p, k in sorted(factorize(order).items())},
        "verdict": {"mode": "rank2", "admissible": True},
        "primes": records,
        # the trivial group has no Sylow records; its only index (G : G) is 1
        "global": {"sylow_indices": indices,
                   "gcd_indices": reduce(gcd, indices, 0) if indices else 1, "ok": gcd_ok},
    }


# -- verification ---------------------------------------------------------------------

@dataclass
class VerificationReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(ok for _, ok, _ in self.checks)

    def failures(self) -> list[tuple[str, bool, str]]:
        return [c for c in self.checks if not c[1]]

    def to_json(self) -> dict:
        return {"ok": self.ok,
                "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in self.checks]}

    def render(self) -> str:
        lines = [f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({d})" if d else "")
                 for name, ok, d in self.checks]
        lines.append(f"overall: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)


def _diff(expected, actual, path: str = "") -> list[str]:
    if isinstance(expected, dict) and isinstance(actual, dict):
        out = []
        for k in sorted(set(expected) | set(actual)):
            p = f"{path}.{k}" if path else k
            if k not in expected or k not in actual:
                out.append(p)
            else:
                out.extend(_diff(expected[k], actual[k], p))
        return out
    if isinstance(expected, list) and isinstance(actual, list):
        if len(expected) != len(actual):
            return [path]
        out = []
        for k, (e, a) in enumerate(zip(expected, actual)):
            out.extend(_diff(e, a, f"{path}[{k}]"))
        return out
    if type(expected) is not type(actual) or expected != actual:
        return [path]
    return []


def _recheck_record(rec: dict, report: VerificationReport, seed: int) -> None:
    p = rec.get("prime")
    try:
        q, qp = int(rec["q"]), int(rec["q_prime"])
        spec = SymbolAlgebraSpec.from_json(rec["spec"])
        if spec.n != q * qp:
            raise ValueError("spec degree differs from q*q'")
        checks = prime_checks(spec, q, qp, seed=seed)
    except Exception as exc:  # any malformed record is a failed check, not a crash
        report.add(f"prime {p}: recompute", False, f"{type(exc).__name__}: {exc}")
        return
    for name, result in checks.items():
        report.add(f"prime {p}: {name}", result["ok"])
    ram = checks["determined_by_ramification"]
    report.add(f"prime {p}: ramification witness recorded",
               ram["witness_prime"] is not None
               and rec.get("checks", {}).get("determined_by_ramification", {})
               .get("witness_prime") == ram["witness_prime"])


def verify_certificate(cert: dict, g: PermGroup) -> VerificationReport:
    """Recompute every check, both from the stored specs and from the group."""
    report = VerificationReport()
    if not isinstance(cert, dict) or cert.get("format") != FORMAT:
        report.add("format", False, f"expected {FORMAT!r}")
        return report
    report.add("format", True)
    report.add("group matches input", cert.get("group") == g.to_json())

    seed = cert.get("seed")
    if not isinstance(seed, int) or isinstance(seed, bool):
        report.add("seed", False, "seed is not an integer")
        seed = SEED
    records = cert.get("primes")
    if not isinstance(records, list):
        report.add("primes", False, "missing per-prime records")
        records = []
    for rec in records:
        if isinstance(rec, dict):
            _recheck_record(rec, report, seed)
        else:
            report.add("per-prime record", False, "record is not an object")

    order = g.order
    try:
        orders = [int(r["sylow_order"]) for r in records]
        report.add("global: gcd of Sylow indices is 1", gcd_index_check(orders, order)
                   and {int(r["prime"]) for r in records} == set(factorize(order)))
    except Exception as exc:
        report.add("global: gcd of Sylow indices is 1", False, f"{type(exc).__name__}: {exc}")

    try:
        expected = build_witness(g)
    except NotAdmissible as exc:
        report.add("verdict", False, str(exc))
        return report
    report.add("verdict", True)
    mismatches = _diff(expected, cert)
    report.add("certificate matches recomputation", not mismatches,
               ", ".join(mismatches[:5]) + (" ..." if len(mismatches) > 5 else ""))
    return report
