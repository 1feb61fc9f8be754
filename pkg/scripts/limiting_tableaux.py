#!/usr/bin/env python3
"""Find, for each sequence, the smallest n after which the truncated middle stops changing.

Compares that value with the naive offset bound and with max(seq) + k.
"""

import argparse
from collections import Counter
from dataclasses import dataclass
from itertools import product

from vactab.identities import offset_bound, stability_bound, truncated_middle


@dataclass
class Config:
    max_k: int = 3
    max_entry: int = 5
    horizon: int = 6  # extra rows used as the reference "large n"
    show: int = 5


def first_stable_n(seq: tuple[int, ...], horizon: int) -> int:
    k = len(seq)
    ref = truncated_middle(k, seq, stability_bound(seq) + horizon)
    n = max(seq)
    while truncated_middle(k, seq, n) != ref:
        n += 1
    return n


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(Config()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = Config(**vars(ap.parse_args()))

    gap = Counter()
    exact = violations = total = 0
    examples = []
    for k in range(1, cfg.max_k + 1):
        for seq in product(range(1, cfg.max_entry + 1), repeat=k):
            total += 1
            n = first_stable_n(seq, cfg.horizon)
            gap[n - offset_bound(seq)] += 1
            exact += n == stability_bound(seq)
            violations += n > stability_bound(seq)
            if len(examples) < cfg.show:
                examples.append((seq, n, str(truncated_middle(k, seq, n))))

    print(f"{total} sequences, k <= {cfg.max_k}, entries <= {cfg.max_entry}")
    print("first stable n minus offset bound:", dict(sorted(gap.items())))
    print(f"max(seq)+k is exact for {exact}, too small for {violations}")
    for seq, n, text in examples:
        print(f"  {seq}: stable from n={n}: {text}")


if __name__ == "__main__":
    main()
