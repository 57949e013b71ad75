"""Tabulate rank-two and metacyclic verdicts over the group corpus."""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass, field

from admissible.groups import admissibility_verdict
from admissible.library import CORPUS, corpus_group


@dataclass
class VerdictConfig:
    groups: list[str] = field(default_factory=lambda: list(CORPUS))
    json: bool = False


def run(cfg: VerdictConfig) -> list[dict]:
    rows = []
    for name in cfg.groups:
        g = corpus_group(name)
        t0 = time.perf_counter()
        r2 = admissibility_verdict(g, "rank2")
        mc = admissibility_verdict(g, "metacyclic")
        rows.append({
            "group": name,
            "order": g.order,
            "sylow": {str(s.prime): s.report() for s in r2.sylows},
            "rank2": r2.admissible,
            "metacyclic": mc.admissible,
            "seconds": round(time.perf_counter() - t0, 3),
        })
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("groups", nargs="*", help="corpus names (default: all)")
    ap.add_argument("--json", action="store_true")
    a = ap.parse_args()
    cfg = VerdictConfig(groups=a.groups or list(CORPUS), json=a.json)
    rows = run(cfg)
    if cfg.json:
        print(json.dumps(rows, indent=2, sort_keys=True))
        return
    print(f"{'group':<10}{'order':>6}  {'rank2':<6}{'metacyclic':<11}sylow shapes")
    for r in rows:
        shapes = []
        for p, s in r["sylow"].items():
            if s["decomposition"]:
                q, qp = s["decomposition"]
                shapes.append(f"{p}:C{q}xC{qp}")
            elif s["abelian"]:
                shapes.append(f"{p}:abelian rank {s['rank']}")
            else:
                shapes.append(f"{p}:nonabelian({s['order']})")
        print(f"{r['group']:<10}{r['order']:>6}  {str(r['rank2']):<6}"
              f"{str(r['metacyclic']):<11}{' '.join(shapes)}")


if __name__ == "__main__":
    main()
