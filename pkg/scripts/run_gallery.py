"""Emit every gallery entry and check it through the CLI, one summary line per suite.

Usage: python3 scripts/run_gallery.py [--out DIR] [--jobs N] [entry ...]
"""

import argparse
import contextlib
import io
import json
import tempfile
import time
from pathlib import Path

from qtwogroup.cli import main
from qtwogroup.gallery import ENTRIES


def run(outdir: Path, entries: list[str], jobs: int) -> int:
    mismatches = 0
    for name in entries:
        with contextlib.redirect_stdout(io.StringIO()):
            if main(["gallery", name, "--emit", str(outdir)]) != 0:
                raise SystemExit(f"could not emit {name}")
        d = outdir / name
        manifest = json.loads((d / "manifest.json").read_text())
        certs = d / "certs"
        certs.mkdir(exist_ok=True)
        start = time.perf_counter()
        with contextlib.redirect_stdout(io.StringIO()):
            code = main(["check", "--dir", str(d), "--jobs", str(jobs), "--emit", f"{certs}/"])
        secs = time.perf_counter() - start
        for suite, want in manifest["suites"].items():
            got = json.loads((certs / f"{suite}.certificate.json").read_text())["verdict"]
            tag = "ok" if got == want["expected"] else "MISMATCH"
            mismatches += tag != "ok"
            print(f"{name:22s} {suite:16s} expected {want['expected']:4s} got {got:4s} {tag}")
        print(f"{name:22s} exit {code} in {secs:.2f}s")
    return mismatches


def cli() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", dest="outdir", help="keep inputs and certificates here")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("entries", nargs="*")
    args = ap.parse_args()
    entries = args.entries or list(ENTRIES)
    if args.outdir:
        out = Path(args.outdir)
        out.mkdir(parents=True, exist_ok=True)
        n = run(out, entries, args.jobs)
    else:
        with tempfile.TemporaryDirectory() as tmp:
            n = run(Path(tmp), entries, args.jobs)
    print(f"{n} manifest mismatches")
    raise SystemExit(1 if n else 0)


if __name__ == "__main__":
    cli()
