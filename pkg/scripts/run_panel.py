"""Build every panel group and print one summary line per Saxl hypergraph."""

import argparse
import json
import time

from saxl.panel import PANEL
from saxl.report import run_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", help="also write the full reports to this file")
    args = ap.parse_args()

    reports = []
    print(f"{'spec':18s} {'deg':>4s} {'order':>7s} {'b':>2s} {'edges':>6s} {'d':>5s} cmpl cnc   edcnc gossip       tour")
    for entry in PANEL:
        t0 = time.perf_counter()
        r = run_report(entry.spec)
        reports.append(r)
        ft = r["flag_tour"] or {}
        print(
            f"{entry.spec:18s} {r['degree']:4d} {r['order']:7d} {r['base_size']:2d} {r['edge_count'] or 0:6d} "
            f"{r['valency'] or 0:5d} {str(r['complete'])[0]}    {(r['cnc'] or {}).get('status', '-'):5s} "
            f"{(r['edge_disjoint_cnc'] or {}).get('status', '-'):5s} {str(r['gossip']):12s} "
            f"{ft.get('has_tour')} ({ft.get('case')})  {time.perf_counter() - t0:.2f}s"
        )
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(reports, fh, indent=2)


if __name__ == "__main__":
    main()
