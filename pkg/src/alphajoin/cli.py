"""Command-line interface: ``alphajoin spectrum | verify | cospectral``.

Exit codes: 0 success, 1 verification failure or refused seed, 2 usage,
parse or file errors, 3 closed-form spectrum not available for the input
class (G2 neither regular nor complete bipartite, or G1 outside the formulas).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .cospectral import (
    SeedNotCertifiedError,
    SeedPair,
    default_alpha_grid,
    generate_family,
    get_seed,
    seed_catalog,
)
from .errors import AlphaJoinError, InvalidInputError, PreconditionError, UnsupportedClassError
from .graph import Graph, JoinKind, join, parse_family, read_edge_list, regularity
from .linalg import charpoly_exact, sym_eigenvalues
from .spectra import (
    Arbitrary,
    CompleteBipartite,
    JoinSpec,
    Regular,
    alpha_matrix,
    alpha_matrix_exact,
    classify_g2,
    closed_form_spectrum,
    spectra_equal,
    theorem_charpoly_exact,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3
DIGITS = 12
_BIPARTITE_NAMES = ("complete_bipartite", "cbipartite", "bipartite", "kab")


class UsageError(Exception):
    pass


# -- formatting ----------------------------------------------------------------

def fmt(x: float) -> float:
    """Round to 12 significant digits; map -0.0 to 0.0."""
    v = float(f"{float(x):.{DIGITS}g}")
    return 0.0 if v == 0 else v


def _clean(obj):
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return fmt(obj) if math.isfinite(obj) else None
    return obj


def _dumps(obj) -> str:
    return json.dumps(_clean(obj), indent=2) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _rows(entries: list[dict]) -> list[tuple[float, str]]:
    return [(e["value"], e["clause"] or "") for e in entries for _ in range(e["multiplicity"])]


def render_spectrum(doc: dict, form: str) -> str:
    """Render ``{"eigenvalues": [...]}`` or a ``both`` comparison document."""
    if form == "json":
        return _dumps(doc)
    sections = [(k, doc[k]["eigenvalues"]) for k in ("direct", "closed_form") if k in doc]
    if not sections:
        sections = [("", doc["eigenvalues"])]
    if form == "csv":
        lines = ["method,value,clause"] if "direct" in doc else ["value,clause"]
        for name, entries in sections:
            for v, clause in _rows(entries):
                cells = [name] if name else []
                lines.append(",".join(cells + [repr(fmt(v)), clause]))
        return "\n".join(lines) + "\n"
    lines = []
    for name, entries in sections:
        if name:
            lines.append(f"[{name}]")
        for e in entries:
            tag = f"  {e['clause']}" if e["clause"] else ""
            lines.append(f"{fmt(e['value']):>20.{DIGITS}g}  x{e['multiplicity']}{tag}")
    if "agreement" in doc:
        a = doc["agreement"]
        lines.append(f"agreement: {a['equal']} (max deviation {a['max_deviation']:.3e}, tol {a['tol']:g})")
    return "\n".join(lines) + "\n"


# -- input resolution ----------------------------------------------------------

def load_graph(src: str) -> Graph:
    """Edge-list file if ``src`` exists on disk, otherwise a family descriptor."""
    p = Path(src)
    if p.is_file():
        return read_edge_list(p)
    try:
        return parse_family(src)
    except AlphaJoinError as exc:
        raise UsageError(f"{src!r} is neither a readable edge-list file nor a family descriptor ({exc})") from exc


def parse_alpha(text: str) -> Fraction:
    try:
        a = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad alpha {text!r}") from exc
    if not 0 <= a <= 1:
        raise UsageError(f"alpha must lie in [0, 1], got {text}")
    return a


def parse_alpha_grid(text: str) -> list[float]:
    vals = [float(parse_alpha(t)) for t in text.split(",") if t.strip()]
    if not vals:
        raise UsageError("empty alpha grid")
    return vals


def parse_kinds(text: str) -> list[JoinKind]:
    if text.strip().lower() == "all":
        return list(JoinKind)
    try:
        return [JoinKind.parse(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


# -- spectrum ------------------------------------------------------------------

def _join_inputs(args) -> tuple[JoinKind, Graph, Graph]:
    return JoinKind.parse(args.join), load_graph(args.g1), load_graph(args.g2)


def _join_spec(args) -> JoinSpec:
    kind, g1, g2 = _join_inputs(args)
    choice = args.g2_class
    if choice == "auto":
        name = args.g2.partition(":")[0].strip().lower()
        choice = "bipartite" if name in _BIPARTITE_NAMES else "regular"
        cls = classify_g2(g2, prefer=choice)
    elif choice == "arbitrary":
        cls = Arbitrary()
    else:
        cls = classify_g2(g2, prefer=choice)
        if not isinstance(cls, Regular if choice == "regular" else CompleteBipartite):
            raise UsageError(f"--g2-class {choice} does not match G2 ({cls})")
    try:
        return JoinSpec(kind, g1, g2, cls)
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from exc


def _direct_join(args, alpha: float):
    kind, g1, g2 = _join_inputs(args)
    return sym_eigenvalues(alpha_matrix(join(kind, g1, g2), alpha), args.cluster_tol, method=args.eigensolver)


def _exact_spectrum(args, alpha: Fraction) -> tuple[dict, int]:
    if args.join:
        kind, g1, g2 = _join_inputs(args)
        direct = charpoly_exact(alpha_matrix_exact(join(kind, g1, g2), alpha))
        doc = {"alpha": str(alpha), "charpoly": [str(c) for c in direct.coeffs]}
        if args.method in ("closed", "both"):
            product = theorem_charpoly_exact(_join_spec(args), alpha)
            same = product.coeffs == direct.coeffs
            doc["product_form"] = [str(c) for c in product.coeffs]
            doc["identical"] = same
            return doc, EXIT_OK if same else EXIT_FAIL
        return doc, EXIT_OK
    g = _single_graph(args)
    poly = charpoly_exact(alpha_matrix_exact(g, alpha))
    return {"alpha": str(alpha), "charpoly": [str(c) for c in poly.coeffs]}, EXIT_OK


def _single_graph(args) -> Graph:
    if args.family:
        return load_graph(args.family)
    if args.graph:
        p = Path(args.graph)
        if not p.is_file():
            raise UsageError(f"graph file not found: {args.graph}")
        return read_edge_list(p)
    raise UsageError("give one of --family, --graph or --join with --g1/--g2")


def cmd_spectrum(args) -> int:
    alpha = parse_alpha(args.alpha)
    if args.exact:
        doc, code = _exact_spectrum(args, alpha)
        _emit(_dumps(doc) if args.format == "json" else _render_exact(doc), args.out)
        return code
    a = float(alpha)
    if not args.join:
        m = alpha_matrix(_single_graph(args), a)
        doc = sym_eigenvalues(m, args.cluster_tol, method=args.eigensolver).to_dict()
        _emit(render_spectrum(doc, args.format), args.out)
        return EXIT_OK
    code = EXIT_OK
    if args.method == "direct":
        doc = _direct_join(args, a).to_dict()
    elif args.method == "closed":
        doc = closed_form_spectrum(_join_spec(args), a).to_dict()
    else:
        direct = _direct_join(args, a)
        closed = closed_form_spectrum(_join_spec(args), a)
        cmp = spectra_equal(closed, direct, args.tol)
        doc = {"direct": direct.to_dict(), "closed_form": closed.to_dict(), "agreement": cmp.to_dict()}
        code = EXIT_OK if cmp.equal else EXIT_FAIL
    _emit(render_spectrum(doc, args.format), args.out)
    return code


def _render_exact(doc: dict) -> str:
    lines = [f"alpha = {doc['alpha']}", "charpoly (ascending): " + " ".join(doc["charpoly"])]
    if "product_form" in doc:
        lines.append("product form (ascending): " + " ".join(doc["product_form"]))
        lines.append(f"identical: {doc['identical']}")
    return "\n".join(lines) + "\n"


# -- verify --------------------------------------------------------------------

def cmd_verify(args) -> int:
    rep = run_suite(args.suite, args.trials, args.g2, args.seed, args.eigensolver)
    if args.format == "json":
        _emit(_dumps(rep.to_dict()), args.out)
    else:
        _emit("\n".join(rep.lines()) + f"\n{args.suite}: {'PASS' if rep.passed else 'FAIL'}\n", args.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- cospectral ----------------------------------------------------------------

def _seed_from_args(args) -> SeedPair:
    if args.seed:
        try:
            return get_seed(args.seed)
        except InvalidInputError as exc:
            raise UsageError(str(exc)) from exc
    paths = [Path(p) for p in args.seed_files]
    for p in paths:
        if not p.is_file():
            raise UsageError(f"seed file not found: {p}")
    g_a, g_b = (read_edge_list(p) for p in paths)
    t = regularity(g_a)
    if t is None:
        raise SeedNotCertifiedError(f"{paths[0]} is not regular")
    try:
        return SeedPair(f"{paths[0].name}+{paths[1].name}", g_a, g_b, t)
    except InvalidInputError as exc:
        raise SeedNotCertifiedError(str(exc)) from exc


def cmd_cospectral(args) -> int:
    seed = _seed_from_args(args)
    h = load_graph(args.h)
    kinds = parse_kinds(args.kinds)
    alphas = parse_alpha_grid(args.alpha_grid) if args.alpha_grid else default_alpha_grid()
    family = generate_family(seed, h, kinds, alphas, args.tol, args.eigensolver)
    ok = all(m.certificate.cospectral for m in family)
    if args.format == "json":
        doc = {
            "seed": seed.name,
            "h": {"n": h.n, "edges": [list(e) for e in h.edges]},
            "alphas": alphas,
            "certificates": [m.to_dict() for m in family],
        }
        _emit(_dumps(doc), args.out)
    else:
        lines = [f"seed {seed.name}, H n={h.n} m={h.m}, alphas {', '.join(f'{fmt(a):g}' for a in alphas)}"]
        for m in family:
            c = m.certificate
            lines.append(f"{m.kind.value:8s} n={m.g_a.n} cospectral={c.cospectral} "
                         f"max_deviation={c.max_deviation:.3e} evidence={c.nonisomorphic_evidence.value}")
        lines.append(family[0].certificate.note if family else "")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if ok else EXIT_FAIL


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="alphajoin", description="A_alpha spectra of Q/T vertex and edge joins.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("json", "csv", "plain")):
        sp.add_argument("--format", choices=formats, default="json")
        sp.add_argument("--out", help="write output to this file instead of stdout")
        sp.add_argument("--eigensolver", choices=("lapack", "jacobi"), default="lapack")

    sp = sub.add_parser("spectrum", help="A_alpha spectrum of a graph or of a join")
    src = sp.add_mutually_exclusive_group()
    src.add_argument("--family", help="family descriptor, e.g. complete:4 or cbipartite:2,3")
    src.add_argument("--graph", help="edge-list file")
    src.add_argument("--join", choices=[k.value for k in JoinKind])
    sp.add_argument("--g1", help="first factor (descriptor or edge-list file), must be regular")
    sp.add_argument("--g2", help="second factor (descriptor or edge-list file)")
    sp.add_argument("--g2-class", choices=("auto", "regular", "bipartite", "arbitrary"), default="auto")
    sp.add_argument("--alpha", required=True, help="alpha in [0,1]; fractions like 1/3 allowed")
    sp.add_argument("--method", choices=("direct", "closed", "both"), default="direct")
    sp.add_argument("--tol", type=_positive_float, default=1e-7, help="agreement tolerance for --method both")
    sp.add_argument("--cluster-tol", type=_positive_float, default=None)
    sp.add_argument("--exact", action="store_true",
                    help="exact rational characteristic polynomial (and product form for closed/both)")
    common(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=SUITES)
    sp.add_argument("--trials", type=int, default=None)
    sp.add_argument("--g2", choices=("regular", "bipartite", "arbitrary"), default="arbitrary")
    sp.add_argument("--seed", type=int, default=0)
    common(sp, ("plain", "json"))
    sp.set_defaults(func=cmd_verify, format="plain")

    sp = sub.add_parser("cospectral", help="certify A_alpha-cospectral join families")
    seeds = sp.add_mutually_exclusive_group(required=True)
    seeds.add_argument("--seed", help=f"catalog seed ({', '.join(sorted(seed_catalog()))})")
    seeds.add_argument("--seed-files", nargs=2, metavar=("A", "B"))
    sp.add_argument("--h", required=True, help="graph H (descriptor or edge-list file)")
    sp.add_argument("--kinds", default="all", help="'all' or comma list of join kinds")
    sp.add_argument("--alpha-grid", default=None, help="comma-separated alphas (default: fixed grid + 3 seeded draws)")
    sp.add_argument("--tol", type=_positive_float, default=1e-7)
    common(sp, ("json", "plain"))
    sp.set_defaults(func=cmd_cospectral)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "join", None) and not (args.g1 and args.g2):
        parser.error("--join needs --g1 and --g2")
    if getattr(args, "trials", None) is not None and args.trials < 1:
        parser.error("--trials must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedClassError, PreconditionError) as exc:
        if isinstance(exc, SeedNotCertifiedError):
            print(f"refused: {exc}", file=sys.stderr)
            return EXIT_FAIL
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except AlphaJoinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
