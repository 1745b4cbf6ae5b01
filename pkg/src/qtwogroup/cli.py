"""Command line entry point: check, build, cotensor, gallery, report."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .constructions import PreconditionError
from .fields import FieldError, field_from_name
from .gallery import ENTRIES, UnknownEntry, gallery, manifest_inputs
from .suites import EXIT_FAIL, EXIT_INPUT, EXIT_PASS, SUITES, Options, SuiteInputError, run_suite


def _parse_inputs(pairs: list[str]) -> dict[str, Path]:
    out = {}
    for p in pairs or []:
        role, sep, path = p.partition("=")
        if not sep or not role or not path:
            raise SuiteInputError(f"--input expects ROLE=PATH, got {p!r}")
        out[role] = Path(path)
    return out


def _resolve(args) -> tuple[dict[str, Path], dict | None]:
    inputs: dict[str, Path] = {}
    manifest = None
    if args.dir:
        manifest, inputs = manifest_inputs(args.dir)
    inputs.update(_parse_inputs(args.input))
    return inputs, manifest


def _options(args) -> Options:
    return Options(
        field=field_from_name(args.field) if args.field else None,
        full_basis=args.full_basis,
        jobs=max(1, args.jobs),
    )


def _emit_certificate(emit: str | None, suite: str, cert: dict, several: bool):
    if not emit:
        return
    path = Path(emit)
    if several or path.is_dir() or emit.endswith("/"):
        path.mkdir(parents=True, exist_ok=True)
        path = path / f"{suite}.certificate.json"
    io.write_json(path, cert)


def cmd_check(args) -> int:
    inputs, manifest = _resolve(args)
    opts = _options(args)
    if args.suite:
        suites = [args.suite]
    elif manifest is not None:
        suites = list(manifest["suites"])
    else:
        raise SuiteInputError("name a suite or pass --dir with a manifest")
    code = EXIT_PASS
    for s in suites:
        res = run_suite(s, inputs, opts)
        print(res.report.to_text())
        if manifest is not None and s in manifest.get("suites", {}):
            want = manifest["suites"][s]["expected"]
            got = "pass" if res.report.passed else "fail"
            print(f"manifest expects {want}: {'as expected' if want == got else 'MISMATCH'}")
        _emit_certificate(args.emit, s, res.certificate, len(suites) > 1)
        if res.exit_code != EXIT_PASS:
            code = EXIT_FAIL
    return code


def cmd_build(args) -> int:
    from .braided import QuasitriangularStructure, transmutation
    from .constructions import adjoint_crossed_module, biproduct, smash_product
    from .two_group import build_strict_2group
    from .suites import _braided_cm, _crossed_module

    inputs, _ = _resolve(args)
    opts = _options(args)
    validate = not args.no_validate
    kind = args.kind
    if kind == "smash":
        cm = _crossed_module(inputs, opts)
        out = {"M": io.algebra_to_json(smash_product(cm.A, cm.H, cm.action, check=validate))}
    elif kind == "2group":
        cm = _crossed_module(inputs, opts)
        qg = build_strict_2group(cm, check=validate)
        out = {
            "M": io.algebra_to_json(qg.M),
            "s": io.map_to_json(qg.s, "s"),
            "t": io.map_to_json(qg.t, "t"),
            "i": io.map_to_json(qg.i, "i"),
            "groupoid-antipode": io.map_to_json(qg.antipode, "groupoid antipode"),
        }
    elif kind == "adjoint":
        H = io.parse_algebra(inputs["H"], opts.field, validate=validate)
        ad = adjoint_crossed_module(H)
        out = {"d": io.map_to_json(ad.cm.d, "d"), "action": io.action_to_json(ad.cm.action, "adjoint")}
    elif kind == "transmute":
        H = io.parse_algebra(inputs["H"], opts.field, validate=validate)
        R, _dims = io.parse_element(inputs["R"], opts.field)
        B = transmutation(QuasitriangularStructure(H, R, H.name), check=validate)
        out = {
            "B": io.algebra_to_json(B.as_hopf_data()),
            "B-action": io.action_to_json(B.yd.action, "adjoint"),
            "B-coaction": io.coaction_to_json(B.yd.coaction, "R-induced"),
        }
    elif kind == "biproduct":
        bcm = _braided_cm(inputs, opts)
        out = {"M": io.algebra_to_json(biproduct(bcm.B, check=validate))}
    else:  # argparse restricts the choices
        raise SuiteInputError(f"unknown build kind {kind!r}")
    dest = Path(args.emit) if args.emit else None
    for role, obj in out.items():
        if dest is None:
            sys.stdout.write(io.dumps(obj))
        else:
            dest.mkdir(parents=True, exist_ok=True)
            io.write_json(dest / f"{role}.json", obj)
    return EXIT_PASS


def cmd_cotensor(args) -> int:
    from .suites import _crossed_module
    from .two_group import build_strict_2group

    inputs, _ = _resolve(args)
    cm = _crossed_module(inputs, _options(args))
    qg = build_strict_2group(cm, check=not args.no_validate)
    box = qg.cotensor
    n = qg.M.dim
    print(f"cotensor of {cm.name or 'input'}: dim {box.dim} inside {n}*{n} = {n * n}")
    if args.emit:
        obj = {
            "format": "subspace",
            "field": qg.field.name,
            "ambient_dims": [n, n],
            "basis": [[[k, str(v[k])] for k in sorted(v)] for v in box.vectors],
        }
        io.write_json(args.emit, obj)
    return EXIT_PASS


def cmd_gallery(args) -> int:
    names = list(ENTRIES) if args.name == "all" else [args.name]
    if args.list:
        print("\n".join(ENTRIES))
        return EXIT_PASS
    emit = args.emit or "gallery"
    for nm in names:
        for p in gallery(nm, emit):
            print(p)
    return EXIT_PASS


def cmd_report(args) -> int:
    obj = io.load_json(args.certificate)
    if args.format == "json":
        sys.stdout.write(io.dumps(obj))
    else:
        print(f"== {obj.get('title', '')} [{obj.get('suite')}, {obj.get('field')}, engine {obj.get('engine')}]")
        for c in obj.get("checks", []):
            tag = ("PASS" if c["passed"] else "FAIL") if c["required"] else ("info:yes" if c["passed"] else "info:no")
            line = f"{tag:10s} {c['name']}"
            if "note" in c:
                line += f"  -- {c['note']}"
            print(line)
        print(f"verdict: {obj.get('verdict')}")
    return EXIT_PASS if obj.get("verdict") == "pass" else EXIT_FAIL


def _common_flags(suppress: bool) -> argparse.ArgumentParser:
    # subcommands repeat the flags with suppressed defaults so they may go before or after the verb
    common = argparse.ArgumentParser(add_help=False)

    def default(v):
        return argparse.SUPPRESS if suppress else v

    common.add_argument("--field", default=default(None), help="override the field: Q or Fp:<p>")
    common.add_argument("--no-validate", action="store_true", default=default(False), help="skip checks on ingest")
    common.add_argument(
        "--full-basis", action="store_true", default=default(False), help="verify large biproducts on every basis element"
    )
    common.add_argument("--emit", default=default(None), help="output file or directory")
    common.add_argument("--jobs", type=int, default=default(1), help="worker processes for the interchange scan")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags(suppress=True)

    inputs = argparse.ArgumentParser(add_help=False)
    inputs.add_argument("--dir", help="gallery directory with manifest.json")
    inputs.add_argument("--input", action="append", metavar="ROLE=PATH", help="input file by role (repeatable)")

    p = argparse.ArgumentParser(prog="qtwogroup", description=__doc__, parents=[_common_flags(suppress=False)])
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("check", parents=[common, inputs], help="run a check suite and print its report")
    c.add_argument("suite", nargs="?", choices=sorted(SUITES), help="suite name (default: every suite in the manifest)")
    c.set_defaults(func=cmd_check)

    b = sub.add_parser("build", parents=[common, inputs], help="construct a structure and write it out")
    b.add_argument("kind", choices=["smash", "2group", "adjoint", "transmute", "biproduct"])
    b.set_defaults(func=cmd_build)

    t = sub.add_parser("cotensor", parents=[common, inputs], help="cotensor product of the 2-group of a crossed module")
    t.set_defaults(func=cmd_cotensor)

    g = sub.add_parser("gallery", parents=[common], help="emit gallery input files and manifests")
    g.add_argument("name", nargs="?", default="all", help="entry name or 'all'")
    g.add_argument("--list", action="store_true", help="list entry names")
    g.set_defaults(func=cmd_gallery)

    r = sub.add_parser("report", parents=[common], help="render a certificate")
    r.add_argument("certificate")
    r.add_argument("--format", choices=["text", "json"], default="text")
    r.set_defaults(func=cmd_report)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code not in (0, None) else EXIT_PASS
    try:
        return args.func(args)
    except (SuiteInputError, io.ParseError, FieldError, UnknownEntry, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"input error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    except io.ValidationError as e:
        print(f"validation failed: {e}", file=sys.stderr)
        print(e.report.to_text(), file=sys.stderr)
        return EXIT_FAIL
    except PreconditionError as e:
        print(f"precondition failed: {e}", file=sys.stderr)
        print(e.report.to_text(), file=sys.stderr)
        return EXIT_FAIL
    except ValueError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
