"""Quintic threefold: w-numbers, two-point GW invariants and instanton numbers.

    python scripts/quintic_table.py --dmax 3
"""
import argparse
import time

from gmtkit.exact_core import fraction_str
from gmtkit.gmt_engine import CorrelatorKey, CorrelatorSource, instanton_numbers
from gmtkit.mirror_series import cy_series_route, mirror_map_series
from gmtkit.quasimap_w import w_two_point


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--dmax", type=int, default=3)
    args = ap.parse_args()

    t0 = time.perf_counter()
    src = CorrelatorSource()
    n = instanton_numbers(args.dmax, source=src)
    tmap = mirror_map_series(5, args.dmax).tmap
    w11 = {d: w_two_point(5, 5, d, 1, 1) for d in range(1, args.dmax + 1)}
    series = cy_series_route(5, w11, args.dmax)
    print(f"{'d':>2} {'w(1,1)':>22} {'5 t_d':>22} {'<O_h O_h>':>22} {'n_d':>14}  routes")
    for d in range(1, args.dmax + 1):
        gw = src.lookup(CorrelatorKey.make(5, 5, d, (1, 1)))
        same = "agree" if gw == series[d] else "DIFFER"
        print(f"{d:>2} {fraction_str(w11[d]):>22} {fraction_str(5 * tmap[d]):>22} "
              f"{fraction_str(gw):>22} {fraction_str(n[d]):>14}  {same}")
    print(f"# {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
