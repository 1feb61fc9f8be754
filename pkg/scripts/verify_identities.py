#!/usr/bin/env python3
"""Tabulate both sides of every counting identity over a grid of (n, k)."""

import argparse
import json
from dataclasses import asdict, dataclass, field

from vactab.errors import BadParams
from vactab.identities import IDENTITIES, verify_identity
from vactab.partitions import partitions_of

IDS = IDENTITIES


@dataclass
class Config:
    max_n: int = 4
    max_k: int = 4
    ids: list[str] = field(default_factory=lambda: list(IDS))
    as_json: bool = False


def rows(cfg: Config):
    for ident in cfg.ids:
        for n in range(1, cfg.max_n + 1):
            shapes = partitions_of(n) if ident == "shaped" else [None]
            for mu in shapes:
                for k in range(cfg.max_k + 1):
                    try:
                        rep = verify_identity(ident, n, k, mu)
                    except BadParams:
                        continue
                    yield {"id": ident, "n": n, "k": k, "mu": None if mu is None else list(mu),
                           "lhs": rep.lhs, "rhs": rep.rhs, "ok": rep.ok}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--max-k", type=int, default=Config.max_k)
    ap.add_argument("--ids", nargs="+", choices=IDS, default=list(IDS))
    ap.add_argument("--json", dest="as_json", action="store_true")
    cfg = Config(**vars(ap.parse_args()))

    results = list(rows(cfg))
    if cfg.as_json:
        print(json.dumps({"config": asdict(cfg), "rows": results}, indent=1))
        return
    print(f"{'id':<4} {'n':>2} {'k':>2} {'mu':<10} {'lhs':>8} {'rhs':>8}  status")
    for r in results:
        mu = "" if r["mu"] is None else ",".join(map(str, r["mu"]))
        print(f"{r['id']:<4} {r['n']:>2} {r['k']:>2} {mu:<10} {r['lhs']:>8} {r['rhs']:>8}  "
              f"{'ok' if r['ok'] else 'MISMATCH'}")
    bad = sum(not r["ok"] for r in results)
    print(f"{len(results)} cases, {bad} mismatches")


if __name__ == "__main__":
    main()
