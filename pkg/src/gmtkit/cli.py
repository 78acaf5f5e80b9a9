"""Command-line front end.

Exit codes: 0 ok, 2 bad parameters or input, 3 missing correlator input,
4 internal consistency failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (ConflictError, InvalidParams, MismatchReport, NeedsCorrelator,
                     ParseError)
from .exact_core import fraction_str
from .gmt_engine import (CorrelatorKey, CorrelatorSource, correlator_cache_load, correlator_cache_store,
                         gmt_two_point, instanton_numbers, verify_gmt_identity)
from .mirror_series import mirror_map_series
from .partitions import enumerate_partitions, symmetry_factor
from .quasimap_w import selection_sum, vsc, w_two_point

EXIT_OK, EXIT_PARAMS, EXIT_MISSING, EXIT_INTERNAL = 0, 2, 3, 4

# dest -> type for values read from a config file
_CONFIG_TYPES = {"N": int, "k": int, "d": int, "a": int, "b": int, "n": int,
                 "order": int, "dmax": int, "g": int, "correlators": str, "format": str}


@dataclass
class OutputRecord:
    command: str
    params: dict
    results: list
    timing: dict | None = None

    def as_dict(self):
        out = {"command": self.command, "params": self.params, "results": self.results}
        if self.timing is not None:
            out["timing"] = self.timing
        return out


@dataclass
class Settings:
    cache_dir: Path = field(default_factory=lambda: Path(
        os.environ.get("GMTKIT_CACHE_DIR") or Path.home() / ".cache" / "gmtkit"))


def read_config(path):
    """Line-based ``key = value`` file; '#' starts a comment."""
    cfg = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or key not in _CONFIG_TYPES:
            raise ParseError(f"bad config line {raw!r}", lineno, 0)
        try:
            cfg[key] = _CONFIG_TYPES[key](value)
        except ValueError:
            raise ParseError(f"bad value for {key}: {value!r}", lineno, raw.find(value)) from None
    return cfg


def _fmt(v):
    if isinstance(v, (list, tuple)):
        return [_fmt(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _fmt(x) for k, x in v.items()}
    if isinstance(v, bool) or isinstance(v, str):
        return v
    if isinstance(v, int):
        return v
    return fraction_str(v)


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise InvalidParams("missing parameter(s): " + ", ".join("--" + n for n in missing))


def _source(args, settings):
    src = CorrelatorSource()
    path = args.correlators
    if path is None:
        default = settings.cache_dir / "correlators.json"
        path = default if default.exists() else None
    if path is not None:
        try:
            correlator_cache_load(path, src)
        except ConflictError as e:
            raise InvalidParams(f"{path}: {e}") from None
    return src


def cmd_w(args, settings):
    _require(args, "N", "k", "d")
    if args.all_pairs:
        s = selection_sum(args.N, args.k, args.d)
        pairs = [(a, s - a) for a in range(0, args.N - 1) if 0 <= s - a <= args.N - 2]
    else:
        _require(args, "a", "b")
        pairs = [(args.a, args.b)]
    rows = [{"a": a, "b": b, "w": w_two_point(args.N, args.k, args.d, a, b)} for a, b in pairs]
    return {"N": args.N, "k": args.k, "d": args.d}, rows


def cmd_gw(args, settings):
    _require(args, "N", "k", "d")
    src = _source(args, settings)
    table = gmt_two_point(args.N, args.k, args.d, src)
    if args.write_cache:
        settings.cache_dir.mkdir(parents=True, exist_ok=True)
        correlator_cache_store(settings.cache_dir / f"gw_N{args.N}_k{args.k}.json", src, include_computed=True)
    rows = [{"a": a, "b": b, "gw": v} for (a, b), v in sorted(table.items())]
    return {"N": args.N, "k": args.k, "d": args.d}, rows


def cmd_vsc(args, settings):
    _require(args, "N", "k", "d", "n")
    return ({"N": args.N, "k": args.k, "d": args.d, "n": args.n},
            [{"n": args.n, "vsc": vsc(args.N, args.k, args.d, args.n)}])


def cmd_mirror_map(args, settings):
    _require(args, "k", "order")
    md = mirror_map_series(args.k, args.order)
    rows = [{"d": d, "w0": md.w0[d], "w1": md.w1[d], "t": md.tmap[d]} for d in range(args.order + 1)]
    return {"k": args.k, "order": args.order}, rows


def cmd_instanton(args, settings):
    _require(args, "dmax")
    if args.dmax < 1:
        raise InvalidParams("--dmax must be >= 1")
    src = CorrelatorSource()
    n = instanton_numbers(args.dmax, source=src)
    rows = [{"d": d, "gw": src.lookup(CorrelatorKey.make(5, 5, d, (1, 1))), "n": n[d]} for d in sorted(n)]
    return {"N": 5, "k": 5, "dmax": args.dmax}, rows


def cmd_verify(args, settings):
    _require(args, "N", "k", "d")
    src = _source(args, settings)
    gmt_two_point(args.N, args.k, args.d, src)
    rows = verify_gmt_identity(args.N, args.k, args.d, src)
    if any(r["residual"] != 0 for r in rows):
        raise MismatchReport([dict(r, ok=r["residual"] == 0) for r in rows])
    return {"N": args.N, "k": args.k, "d": args.d}, rows


def cmd_partitions(args, settings):
    if args.g is None:
        raise InvalidParams("missing g")
    rows = []
    for sigma in enumerate_partitions(args.g):
        mult = " ".join(f"{i}^{m}" for i, m in sigma.multiplicities().items())
        rows.append({"parts": " ".join(map(str, sigma.parts)), "mul": mult, "S": symmetry_factor(sigma)})
    return {"g": args.g}, rows


COMMANDS = {
    "w": cmd_w, "gw": cmd_gw, "vsc": cmd_vsc, "mirror-map": cmd_mirror_map,
    "instanton": cmd_instanton, "verify": cmd_verify, "partitions": cmd_partitions,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    common.add_argument("--config", help="key = value file; flags override it")
    common.add_argument("--timing", action="store_true", help="add wall-clock timing to the record")

    parser = argparse.ArgumentParser(prog="gmtkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, *flags):
        p = sub.add_parser(name, parents=[common], help=help_)
        for flag in flags:
            p.add_argument(f"--{flag}", type=int, default=None)
        return p

    p = add("w", "two-point quasimap number w(O_h^a O_h^b)_{0,d}", "N", "k", "d", "a", "b")
    p.add_argument("--all-pairs", action="store_true")
    p = add("gw", "two-point GW invariants at degree d", "N", "k", "d")
    p.add_argument("--correlators", default=None, help="user correlator JSON file")
    p.add_argument("--write-cache", action="store_true")
    add("vsc", "virtual structure constant", "N", "k", "d", "n")
    add("mirror-map", "w0, w1 and mirror-map coefficients", "k", "order")
    add("instanton", "quintic instanton numbers", "dmax")
    p = add("verify", "check the recursion residual", "N", "k", "d")
    p.add_argument("--correlators", default=None)
    p = sub.add_parser("partitions", parents=[common], help="partitions of g with S(sigma)")
    p.add_argument("g", type=int, nargs="?", default=None)
    return parser


def render(record: OutputRecord, fmt: str | None) -> str:
    d = record.as_dict()
    if fmt == "json":
        return json.dumps(d, sort_keys=True, indent=2) + "\n"
    rows = record.results
    header = list(rows[0]) if rows else []
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([r[h] for h in header])
        return buf.getvalue()
    params = " ".join(f"{k}={v}" for k, v in record.params.items())
    lines = [f"# {record.command} {params}".rstrip()]
    cells = [header] + [[str(r[h]) for h in header] for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
    for c in cells:
        lines.append("  ".join(x.rjust(wd) for x, wd in zip(c, widths)).rstrip())
    if record.timing is not None:
        lines.append(f"# seconds {record.timing['seconds']}")
    return "\n".join(lines) + "\n"


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    settings = Settings()
    try:
        if args.config:
            for key, value in read_config(args.config).items():
                if key == "format":
                    if args.format is None:
                        args.format = value
                elif getattr(args, key, None) is None and hasattr(args, key):
                    setattr(args, key, value)
        start = time.perf_counter()
        params, rows = COMMANDS[args.command](args, settings)
        timing = {"seconds": round(time.perf_counter() - start, 6)} if args.timing else None
        record = OutputRecord(args.command, _fmt(params), _fmt(rows), timing)
        stdout.write(render(record, args.format))
        return EXIT_OK
    except NeedsCorrelator as e:
        print(f"gmtkit: missing correlator {e.key}; supply it with --correlators "
              f"(N={e.key.N} k={e.key.k} d={e.key.d} insertions={list(e.key.insertions)})", file=stderr)
        return EXIT_MISSING
    except (InvalidParams, ParseError, OSError) as e:
        print(f"gmtkit: {e}", file=stderr)
        return EXIT_PARAMS
    except (MismatchReport, ConflictError, AssertionError) as e:
        print(f"gmtkit: consistency failure: {e}", file=stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
