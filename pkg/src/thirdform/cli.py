"""Command-line interface.

Subcommands: analyze (classify a catalog entry), decompose (split a pair of
shape operators read from a file), verify-catalog (certify the built-in
examples) and serve (run the HTTP service). Exit codes: 0 for a definite
verdict or a clean run, 2 when the input is outside the decidable range
(Inconclusive verdict, non-umbilical third form), 1 for errors.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import catalog, report, verify
from .classify import AnalysisConfig, analyze
from .errors import NotUmbilicalThirdForm, ThirdFormError
from .forms import BilinearForm2

__all__ = ["main", "build_parser"]


def _coerce(text: str):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            continue
    return text


def _parse_params(pairs) -> dict:
    params = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise ValueError(f"--param needs key=value, got {pair!r}")
        key, _, value = pair.partition("=")
        params[key.strip()] = _coerce(value.strip())
    return params


def _resolve_seed(value) -> int:
    if value is not None:
        return int(value)
    env = os.environ.get("THIRDFORM_SEED")
    return int(env) if env else 0


def _config_from(args) -> AnalysisConfig:
    return AnalysisConfig(
        samples=args.samples,
        seed=_resolve_seed(args.seed),
        tol_cluster=args.tol_cluster,
        tol_cert=args.tol_cert,
        tol_homothety=args.tol_homothety,
        tol_curvature=args.tol_curvature,
        margin=args.margin,
        ricci_step=args.ricci_step,
    )


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(data: dict, fmt: str) -> str:
    if fmt == "json":
        return report.render_json(data) + "\n"
    return report.render_text(data)


def read_form_file(path: str) -> BilinearForm2:
    """Parse a shape-operator pair: dimension, then two n x n blocks.

    Whitespace separates numbers; '#' starts a comment that runs to the end
    of the line. The first number is the dimension n, followed by exactly
    2 n^2 matrix entries (first operator row by row, then the second).
    """
    with open(path, encoding="utf-8") as fh:
        raw = fh.read()
    tokens = []
    for line in raw.splitlines():
        body = line.split("#", 1)[0]
        tokens.extend(body.split())
    if not tokens:
        raise ValueError(f"{path}: empty input")
    try:
        n = int(tokens[0])
    except ValueError:
        raise ValueError(f"{path}: first entry must be the dimension, "
                         f"got {tokens[0]!r}") from None
    if n < 1:
        raise ValueError(f"{path}: dimension must be positive, got {n}")
    values = tokens[1:]
    if len(values) != 2 * n * n:
        raise ValueError(f"{path}: expected {2 * n * n} matrix entries for "
                         f"n = {n}, got {len(values)}")
    try:
        nums = np.array([float(v) for v in values])
    except ValueError as err:
        raise ValueError(f"{path}: {err}") from None
    a1 = nums[: n * n].reshape(n, n)
    a2 = nums[n * n:].reshape(n, n)
    return BilinearForm2(a1, a2)


def cmd_analyze(args) -> int:
    config = _config_from(args)
    params = _parse_params(args.param)
    entry = catalog.make(args.entry, params)
    verdict, samples = analyze(entry.immersion, config)
    data = report.build_report(verdict, samples, config,
                               entry=args.entry, params=params)
    _emit(_render(data, args.format), args.out)
    return 0 if verdict.definite else 2


def cmd_decompose(args) -> int:
    form = read_form_file(args.spec_file)
    try:
        data = report.build_decompose_report(form, tol=args.tol,
                                             seed=_resolve_seed(args.seed))
    except NotUmbilicalThirdForm as err:
        print(f"thirdform: {err}", file=sys.stderr)
        return 2
    _emit(_render(data, args.format), args.out)
    return 0


def _verify_text(data: dict) -> str:
    lines = []
    for row in data["entries"]:
        status = "PASS" if row["passed"] else "FAIL"
        pairs = ", ".join(f"{k}={v}" for k, v in row["params"].items())
        label = f"{row['entry']}({pairs})" if pairs else row["entry"]
        kind = row.get("kind", "-")
        lines.append(f"{status}  {label}: {kind}")
        for check in row["checks"]:
            if not check["passed"]:
                lines.append(f"      {check['name']}: expected "
                             f"{check['expected']}, got {check['actual']}")
    total = len(data["entries"])
    good = sum(1 for r in data["entries"] if r["passed"])
    lines.append(f"{good}/{total} entries certified")
    return "\n".join(lines) + "\n"


def cmd_verify_catalog(args) -> int:
    config = _config_from(args)
    data = verify.verify_catalog(config=config, tol=args.tol,
                                 entry_filter=args.entry_filter)
    if args.format == "json":
        _emit(report.render_json(data) + "\n", args.out)
    else:
        _emit(_verify_text(data), args.out)
    return 0 if data["passed"] else 1


def cmd_serve(args) -> int:
    try:
        import uvicorn
    except ImportError:
        print("thirdform: serving requires uvicorn (pip install thirdform[serve])",
              file=sys.stderr)
        return 1
    from .service import app
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _add_sampling(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--samples", type=int, default=25,
                        help="number of chart points to sample (default 25)")
    parser.add_argument("--seed", type=int, default=None,
                        help="deterministic seed (default THIRDFORM_SEED or 0)")
    parser.add_argument("--tol-cluster", type=float, default=1e-6,
                        help="eigenvalue clustering tolerance")
    parser.add_argument("--tol-cert", type=float, default=1e-8,
                        help="certificate tolerance (flatness, minimality)")
    parser.add_argument("--tol-homothety", type=float, default=1e-6,
                        help="third-form umbilicity tolerance")
    parser.add_argument("--tol-curvature", type=float, default=1e-5,
                        help="curvature comparison tolerance")
    parser.add_argument("--margin", type=float, default=0.01,
                        help="relative margin kept from the domain boundary")
    parser.add_argument("--ricci-step", type=float, default=None,
                        help="finite-difference step for the Ricci tensor")


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "text"), default="json",
                        help="output format (default json)")
    parser.add_argument("--out", metavar="FILE", default=None,
                        help="write the report to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thirdform",
        description="Third fundamental form analysis of submanifolds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="classify a catalog immersion")
    p_an.add_argument("--entry", required=True,
                      help="catalog entry name (see verify-catalog --format text)")
    p_an.add_argument("--param", action="append", metavar="KEY=VALUE",
                      help="entry parameter, repeatable")
    _add_sampling(p_an)
    _add_output(p_an)
    p_an.set_defaults(func=cmd_analyze)

    p_de = sub.add_parser("decompose",
                          help="adapted decomposition of a shape-operator pair")
    p_de.add_argument("--spec-file", required=True,
                      help="file with dimension then two n x n matrices")
    p_de.add_argument("--tol", type=float, default=1e-8,
                      help="umbilicity and certificate tolerance")
    p_de.add_argument("--seed", type=int, default=None,
                      help="seed for the generic-direction search")
    _add_output(p_de)
    p_de.set_defaults(func=cmd_decompose)

    p_ve = sub.add_parser("verify-catalog",
                          help="certify the built-in example catalog")
    p_ve.add_argument("--entry-filter", default=None,
                      help="only certify entries whose name contains this")
    p_ve.add_argument("--tol", type=float, default=1e-6,
                      help="tolerance for expected-value comparisons")
    _add_sampling(p_ve)
    _add_output(p_ve)
    p_ve.set_defaults(func=cmd_verify_catalog)

    p_se = sub.add_parser("serve", help="run the HTTP service")
    p_se.add_argument("--host", default="127.0.0.1")
    p_se.add_argument("--port", type=int, default=8000)
    p_se.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ThirdFormError as err:
        print(f"thirdform: {type(err).__name__}: {err}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as err:
        print(f"thirdform: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
