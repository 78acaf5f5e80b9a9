"""Two-point invariants across the Fano, N-k=1, CY and general-type regimes.

Prints the correction terms of the recursion next to each value, so the
term-by-term vanishing in the Fano case is visible.

    python scripts/regime_survey.py --N 6 --dmax 2
"""
import argparse

from gmtkit.errors import NeedsCorrelator
from gmtkit.exact_core import fraction_str
from gmtkit.gmt_engine import CorrelatorSource, gmt_terms, gmt_two_point, w_string
from gmtkit.quasimap_w import w_two_point


def survey(N, k, dmax):
    src = CorrelatorSource()
    regime = "Fano" if N - k >= 2 else {1: "N-k=1", 0: "CY"}.get(N - k, "general type")
    print(f"== N={N} k={k} ({regime})")
    for d in range(1, dmax + 1):
        try:
            table = gmt_two_point(N, k, d, src)
        except NeedsCorrelator as e:
            print(f"  d={d}: needs {e.key}")
            return
        sub = fraction_str(w_string(N, k, d)[0])
        for (a, b), v in sorted(table.items()):
            if a > b:
                continue
            nz = [t for t in gmt_terms(N, k, d, a, b, src) if t.value]
            print(f"  d={d} (a,b)=({a},{b}) w={fraction_str(w_two_point(N, k, d, a, b))} "
                  f"subtract={sub} nonzero-terms={len(nz)} GW={fraction_str(v)}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--N", type=int, default=6)
    ap.add_argument("--dmax", type=int, default=2)
    args = ap.parse_args()
    for k in range(2, args.N + 3):
        survey(args.N, k, args.dmax)


if __name__ == "__main__":
    main()
