"""Tame-symbol orders of the witness symbol (a, b)_n at the standard primes.

For a = f/(f - t), b = (f - t^2)/(f - t - t^2) the class is certified
division for every n; this survey shows which primes carry full period n.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from admissible.ramification import determined_by_ramification
from admissible.symbols import witness_spec
from admissible.valuations import STANDARD_PRIMES


@dataclass
class SurveyConfig:
    n_min: int = 2
    n_max: int = 12


def main(cfg: SurveyConfig) -> None:
    names = [P.name for P in STANDARD_PRIMES]
    print("n   " + "".join(f"{s:>14}" for s in names) + "   witness")
    for n in range(cfg.n_min, cfg.n_max + 1):
        ram = determined_by_ramification(witness_spec(n), STANDARD_PRIMES)
        cells = "".join(f"{d.order:>14}" for d in ram.data)
        print(f"{n:<4}{cells}   {ram.witness.name if ram.witness else '-'}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=12)
    a = ap.parse_args()
    main(SurveyConfig(a.n_min, a.n_max))
