"""Certificate degrees and timings for the quasimap rings.

    python scripts/ring_profile.py --N 5 --dmax 3
"""
import argparse
import time

from gmtkit.chow_ring import build_ring, graded_dim, residue_certificate, transformation_data


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--N", type=int, default=5)
    ap.add_argument("--dmax", type=int, default=3)
    args = ap.parse_args()
    for d in range(1, args.dmax + 1):
        r = build_ring(args.N, d)
        t0 = time.perf_counter()
        Ms = [residue_certificate(r, i)[0] for i in range(d + 1)]
        _, det = transformation_data(r)
        t1 = time.perf_counter()
        socle = graded_dim(r, r.socle_degree)
        t2 = time.perf_counter()
        print(f"N={args.N} d={d} socle_degree={r.socle_degree} M={Ms} det_terms={len(det)} "
              f"socle_dim={socle} certs={t1 - t0:.2f}s macaulay={t2 - t1:.2f}s")


if __name__ == "__main__":
    main()
