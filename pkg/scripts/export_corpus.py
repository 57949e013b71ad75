"""Write every corpus group as a CLI-ready JSON file."""

from __future__ import annotations

import argparse
import json
from dataclasses import dataclass
from pathlib import Path

from admissible.library import CORPUS, corpus_group


@dataclass
class ExportConfig:
    out_dir: Path = Path(__file__).resolve().parents[1] / "data" / "groups"


def slug(name: str) -> str:
    return name.replace("^", "").replace("(", "").replace(")", "").replace(",", "_")


def main(cfg: ExportConfig) -> None:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for name in CORPUS:
        path = cfg.out_dir / f"{slug(name)}.json"
        path.write_text(json.dumps(corpus_group(name).to_json(), sort_keys=True, indent=2) + "\n")
        print(path)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=ExportConfig.out_dir)
    main(ExportConfig(ap.parse_args().out_dir))
