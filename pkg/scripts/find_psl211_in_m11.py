"""Search M11 (natural action) for generators of a subgroup of order 660.

Prints the generator pair in 1-indexed cycle notation; the result is frozen
into the catalog so the 12-point action is reproducible without searching.
"""

import argparse
from random import Random

from saxl.constructions import CATALOG
from saxl.group import group_from_generators


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=11)
    ap.add_argument("--tries", type=int, default=20000)
    args = ap.parse_args()

    m11 = CATALOG["M11"].build()
    rng = Random(args.seed)
    for attempt in range(args.tries):
        a = m11.random_element(rng)
        b = m11.random_element(rng)
        if a.order() != 2 or b.order() != 3:
            continue
        H = group_from_generators([a, b], 11)
        if H.order == 660:
            print(f"found after {attempt + 1} draws")
            print(a.to_cycle_string())
            print(b.to_cycle_string())
            return
    raise SystemExit("no subgroup of order 660 found")


if __name__ == "__main__":
    main()
