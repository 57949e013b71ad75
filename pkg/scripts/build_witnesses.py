"""Build and re-verify witness certificates for every admissible corpus group."""

from __future__ import annotations

import argparse
import hashlib
import json
import time
from dataclasses import dataclass
from pathlib import Path

from admissible.groups import admissibility_verdict
from admissible.library import CORPUS, corpus_group
from admissible.witness import build_witness, dumps, verify_certificate


@dataclass
class WitnessConfig:
    out_dir: Path | None = None
    repeats: int = 2


def main(cfg: WitnessConfig) -> int:
    failures = 0
    if cfg.out_dir:
        cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for name in CORPUS:
        g = corpus_group(name)
        if not admissibility_verdict(g, "rank2").admissible:
            continue
        t0 = time.perf_counter()
        texts = {dumps(build_witness(g)) for _ in range(cfg.repeats)}
        cert_text = texts.pop()
        report = verify_certificate(json.loads(cert_text), g)
        dt = time.perf_counter() - t0
        stable = not texts
        digest = hashlib.sha256(cert_text.encode()).hexdigest()[:12]
        print(f"{name:<10} n={[q * qp for q, qp in _shapes(cert_text)]!s:<14} "
              f"verified={report.ok!s:<5} stable={stable!s:<5} sha={digest} {dt:.2f}s")
        failures += not (report.ok and stable)
        if cfg.out_dir:
            (cfg.out_dir / f"{name.replace('^', '')}.cert.json").write_text(cert_text)
    return failures


def _shapes(text: str):
    return [(r["q"], r["q_prime"]) for r in json.loads(text)["primes"]]


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path)
    ap.add_argument("--repeats", type=int, default=2)
    a = ap.parse_args()
    raise SystemExit(main(WitnessConfig(a.out_dir, a.repeats)))
