"""Command-line entry point ``krc``.

Exit codes: 0 ok, 1 check found violations, 2 domain error, 3 parse error,
4 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .alphabet import STANDARD, GroundData
from .crystal import DEFAULT_NODE_CAP, element_label, element_to_json
from .tableaux import CapExceeded, Tableau, TensorElement, hook_violation, is_hook, is_valid, rectangle

EXIT_OK, EXIT_VIOLATION, EXIT_DOMAIN, EXIT_PARSE, EXIT_CAP = 0, 1, 2, 3, 4
FORMATS = ("json", "dot", "csv", "text")


class DomainError(ValueError):
    pass


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class Config:
    M: int
    N: int
    cache_dir: Path
    node_cap: int
    output_format: str

    def __post_init__(self):
        if self.M < 1 or self.N < 1:
            raise DomainError(f"need M, N >= 1, got M={self.M}, N={self.N}")
        if self.node_cap < 1:
            raise DomainError("node cap must be positive")
        if self.output_format not in FORMATS:
            raise DomainError(f"unknown format {self.output_format!r}")

    @property
    def g(self) -> GroundData:
        return GroundData(self.M, self.N)


def _config(args, default_format: str = "json") -> Config:
    cache = args.cache_dir or os.environ.get("KRC_CACHE_DIR", "./.krc-cache")
    return Config(args.M, args.N, Path(cache), args.node_cap, getattr(args, "format", None) or default_format)


def _label(text: str) -> tuple[int, int]:
    try:
        r, s = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected r,s but got {text!r}")
    return r, s


def _require_label(g: GroundData, label: Sequence[int]) -> tuple[int, int]:
    r, s = label
    if r < 1 or s < 1:
        raise DomainError(f"rectangle ({s}^{r}) needs r, s >= 1")
    shape = rectangle(r, s)
    if not is_hook(g, shape):
        raise DomainError(f"({s}^{r}) is not a hook shape: {hook_violation(g, shape)}")
    return r, s


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _report(check: str, params: dict, violations: list[str], extra: dict | None = None) -> int:
    body = {"check": check, "params": params, "violations": violations}
    if extra:
        body.update(extra)
    sys.stdout.write(json.dumps(body, sort_keys=True, default=str) + "\n")
    return EXIT_OK if not violations else EXIT_VIOLATION


# ------------------------------------------------------------------ crystal

def cmd_crystal(args) -> int:
    from .affine import kr_graph

    cfg = _config(args, "json")
    g = cfg.g
    r, s = _require_label(g, (args.r, args.s))
    os.environ["KRC_CACHE_DIR"] = str(cfg.cache_dir)
    graph = kr_graph(g, r, s, use_cache=not args.no_cache, cap=cfg.node_cap)
    if cfg.output_format == "json":
        text = graph.dumps()
    elif cfg.output_format == "dot":
        text = graph.to_dot()
    elif cfg.output_format == "csv":
        text = "source,i,target\n" + "".join(f"{u},{i},{v}\n" for u, i, v in graph.edges)
    else:
        lines = [f"B^{{{r},{s}}} for (M,N)=({g.M},{g.N}): {len(graph)} nodes, {len(graph.edges)} edges"]
        lines += [f"{element_label(graph.nodes[u])} -{i}-> {element_label(graph.nodes[v])}" for u, i, v in graph.edges]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


# ------------------------------------------------------------------ rmatrix

def _parse_factor(data) -> Tableau:
    from .tableaux import tableau_from_json

    if isinstance(data, list):
        if not data or not all(isinstance(r, list) and r and all(isinstance(x, int) and not isinstance(x, bool) for x in r)
                               for r in data):
            raise ParseError(f"malformed rows {data!r}")
        return Tableau(tuple(tuple(r) for r in data), STANDARD)
    try:
        return tableau_from_json(data)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def load_pair(g: GroundData, text: str, a: tuple[int, int], b: tuple[int, int]) -> TensorElement:
    """Parse ``{"factors": [T1, T2]}`` where each factor is a tableau object or a
    list of rows; check validity and shapes."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    factors = data.get("factors") if isinstance(data, dict) else data
    if not isinstance(factors, list) or len(factors) != 2:
        raise ParseError("expected two factors")
    T1, T2 = (_parse_factor(f) for f in factors)
    for T, (r, s) in ((T1, a), (T2, b)):
        if T.order != STANDARD or not T.is_straight or T.outer != rectangle(r, s):
            raise ParseError(f"factor has shape {list(T.outer)}, expected ({s}^{r})")
        if any(not 1 <= x <= g.n for _, _, x in T.cells()):
            raise ParseError(f"letters must lie in 1..{g.n}")
        if not is_valid(g, T):
            raise ParseError(f"factor {[list(r) for r in T.rows]} is not semistandard")
    return TensorElement((T1, T2))


def cmd_rmatrix(args) -> int:
    from .rmatrix import combinatorial_R, energy, r_matrix, energy_of

    cfg = _config(args, "text")
    g = cfg.g
    a = _require_label(g, (args.r1, args.s1))
    b = _require_label(g, (args.r2, args.s2))
    if args.pair:
        path = Path(args.pair)
        try:
            text = path.read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc}") from exc
        x = load_pair(g, text, a, b)
        y = combinatorial_R(g, x)
        H = energy(g, x)
        if cfg.output_format == "json":
            out = {"input": element_to_json(x), "image": element_to_json(y), "energy": H}
            sys.stdout.write(json.dumps(out, sort_keys=True) + "\n")
        else:
            sys.stdout.write(f"R: {element_label(y)}\nH: {H}\n")
        return EXIT_OK
    from .rmatrix import tensor_crystal

    tc = tensor_crystal(g, (a, b))
    if tc.size() > cfg.node_cap:
        raise CapExceeded(f"B^{a} (x) B^{b} has {tc.size()} elements, cap is {cfg.node_cap}")
    R = r_matrix(g, a, b)
    fmt = cfg.output_format
    if fmt == "csv":
        sys.stdout.write("element_id,image_id,H\n")
    for k, x in enumerate(sorted(tc.elements())):
        y = R(x)
        H = energy_of(tc, x)
        if fmt == "csv":
            sys.stdout.write(f"{k},{y[0] * len(R.dst.factors[1]) + y[1]},{H}\n")
        elif fmt == "json":
            X, Y = tc.decode(x), R.dst.decode(y)
            sys.stdout.write(json.dumps({"input": element_to_json(X), "image": element_to_json(Y), "energy": H},
                                        sort_keys=True) + "\n")
        else:
            sys.stdout.write(f"{element_label(tc.decode(x))}  ->  {element_label(R.dst.decode(y))}  H={H}\n")
    return EXIT_OK


# ------------------------------------------------------------------- verify

def _pair_arg(g: GroundData, args) -> tuple[tuple[int, int], tuple[int, int]]:
    if not args.pair or len(args.pair) != 2:
        raise DomainError("--pair needs two labels r1,s1 r2,s2")
    return _require_label(g, args.pair[0]), _require_label(g, args.pair[1])


def _checked_tensor(g, labels, cap):
    from .rmatrix import tensor_crystal

    tc = tensor_crystal(g, tuple(labels))
    if tc.size() > cap:
        raise CapExceeded(f"product has {tc.size()} elements, cap is {cap}")
    return tc


def verify_axioms(args) -> int:
    from .affine import kr_graph
    from .crystal import check_axioms

    cfg = _config(args)
    g = cfg.g
    if args.pair:
        a, b = _pair_arg(g, args)
        bad = _checked_tensor(g, (a, b), cfg.node_cap).axiom_violations()
        return _report("axioms", {"M": g.M, "N": g.N, "pair": [a, b]}, bad)
    r, s = _require_label(g, (args.r, args.s))
    os.environ["KRC_CACHE_DIR"] = str(cfg.cache_dir)
    bad = check_axioms(g, STANDARD, kr_graph(g, r, s, use_cache=False, cap=cfg.node_cap))
    return _report("axioms", {"M": g.M, "N": g.N, "r": r, "s": s}, bad)


def verify_connected(args) -> int:
    from .affine import kr_graph

    cfg = _config(args)
    g = cfg.g
    if args.pair:
        a, b = _pair_arg(g, args)
        ok = _checked_tensor(g, (a, b), cfg.node_cap).is_connected()
        return _report("connected", {"M": g.M, "N": g.N, "pair": [a, b]}, [] if ok else ["not I-connected"])
    r, s = _require_label(g, (args.r, args.s))
    comps = kr_graph(g, r, s, use_cache=False, cap=cfg.node_cap).components()
    bad = [] if len(comps) == 1 else [f"{len(comps)} components"]
    return _report("connected", {"M": g.M, "N": g.N, "r": r, "s": s}, bad)


def verify_yang_baxter(args) -> int:
    from .rmatrix import yang_baxter_check

    cfg = _config(args)
    g = cfg.g
    if not args.triple or len(args.triple) != 3:
        raise DomainError("--triple needs three labels")
    labels = [_require_label(g, l) for l in args.triple]
    _checked_tensor(g, labels, cfg.node_cap)
    bad = yang_baxter_check(g, *labels)
    return _report("yang_baxter", {"M": g.M, "N": g.N, "triple": labels}, bad)


def _sigma_fixture_violations(g: GroundData, r: int, s: int) -> list[str]:
    """Known sigma and f_0 values for (M,N) = (3,4) on B^{3,5}."""
    from .affine import apply_f0_kr, sigma

    if (g.M, g.N, r, s) != (3, 4, 3, 5):
        return []
    T = Tableau(((1, 1, 1, 2, 7), (2, 2, 3, 5, 7), (3, 4, 5, 6, 7)))
    want = ((4, 5, 6, 7, 1), (5, 7, 1, 2, 2), (7, 1, 2, 3, 3))
    bad = []
    if sigma(g, T).rows != want:
        bad.append("sigma fixture differs")
    if apply_f0_kr(g, T) != Tableau(((1, 1, 1, 1, 2), (2, 2, 3, 5, 7), (3, 4, 5, 6, 7))):
        bad.append("f_0 fixture differs")
    return bad


def verify_sigma(args) -> int:
    from .affine import sigma_violations

    cfg = _config(args)
    g = cfg.g
    r, s = _require_label(g, (args.r, args.s))
    from .tableaux import count_sst

    if count_sst(g, rectangle(r, s)) > cfg.node_cap:
        raise CapExceeded("rectangle too large for the node cap")
    bad = _sigma_fixture_violations(g, r, s) + sigma_violations(g, r, s)
    return _report("sigma", {"M": g.M, "N": g.N, "r": r, "s": s}, bad)


def verify_hwv(args) -> int:
    from .rmatrix import brute_force_genuine, genuine_by_weight, genuine_hwv_pairs, tensor_crystal

    cfg = _config(args)
    g = cfg.g
    a, b = _pair_arg(g, args)
    tc = tensor_crystal(g, (a, b))
    gen = {d.lam_hat: tc.encode(d.pair) for d in genuine_hwv_pairs(g, *a, *b)}
    found = genuine_by_weight(tc)
    bad = [f"{len(v)} genuine vectors of shape {list(k)}" for k, v in found.items() if len(v) != 1]
    scan = {k: v[0] for k, v in found.items()}
    if tc.size() <= cfg.node_cap and scan != {k: v[0] for k, v in brute_force_genuine(tc).items()}:
        bad.append("weight-joined scan differs from the full scan")
    for lam in sorted(set(gen) | set(scan)):
        if gen.get(lam) != scan.get(lam):
            bad.append(f"shape {list(lam)}: generator and scan differ")
    return _report("hwv", {"M": g.M, "N": g.N, "pair": [a, b]}, bad, {"shapes": sorted(map(list, gen))})


def verify_energy(args) -> int:
    from .rmatrix import energy_recurrence_check

    cfg = _config(args)
    g = cfg.g
    a, b = _pair_arg(g, args)
    _checked_tensor(g, (a, b), cfg.node_cap)
    return _report("energy", {"M": g.M, "N": g.N, "pair": [a, b]}, energy_recurrence_check(g, a, b))


def verify_qseries(args) -> int:
    from . import qseries as qs

    bad: list[str] = []
    params: dict = {}
    if not args.poles and not args.polarization:
        args.poles = args.polarization = True
    if args.poles:
        if args.M is not None and args.N_given:
            grounds = [(args.M, args.N)]
        else:
            grounds = [(M, N) for M in range(1, 6) for N in range(0, 7 - M)]
        svals = [args.s] if args.s else list(range(1, 5))
        for M, N in grounds:
            for s in svals:
                rep = qs.rhat_pole_check(M, N, s, args.k_max)
                bad += [f"(M,N,s)=({M},{N},{s}): {v}" for v in rep["violations"]]
        params.update({"poles": {"grounds": grounds, "s": svals, "k_max": args.k_max}})
    if args.polarization:
        count = 0
        for n in range(1, args.n_max + 1):
            for M in range(0, n + 1):
                for m in qs.occupation_vectors(M, n - M, args.max_boxes):
                    count += 1
                    if not qs.in_one_plus_qA0(qs.polarization_norm(M, n - M, m)):
                        bad.append(f"polarization norm not in 1+qA0 for M={M}, m={list(m)}")
        params.update({"polarization": {"n_max": args.n_max, "max_boxes": args.max_boxes, "vectors": count}})
    return _report("qseries", params, bad)


SUITES = {
    "axioms": verify_axioms,
    "connected": verify_connected,
    "yang-baxter": verify_yang_baxter,
    "sigma": verify_sigma,
    "hwv": verify_hwv,
    "energy": verify_energy,
    "qseries": verify_qseries,
}


def cmd_verify(args) -> int:
    if args.suite != "qseries":
        if args.M is None or args.N is None:
            raise DomainError("--M and --N are required")
    args.N_given = args.N is not None
    return SUITES[args.suite](args)


# ------------------------------------------------------------------ parsing

def _common(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--M", type=int, required=required)
    p.add_argument("--N", type=int, required=required)
    p.add_argument("--cache-dir", default=None, help="overrides KRC_CACHE_DIR")
    p.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="krc", description="Kirillov-Reshetikhin crystals of type A(M-1|N-1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("crystal", help="write the I-colored graph of B^{r,s}")
    _common(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--out", default=None)
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_crystal)

    p = sub.add_parser("rmatrix", help="combinatorial R matrix and energy")
    _common(p)
    for name in ("r1", "s1", "r2", "s2"):
        p.add_argument(name, type=int)
    p.add_argument("--pair", default=None, help="JSON file holding T1 (x) T2")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("verify", help="run a check suite and print a JSON report")
    p.add_argument("suite", choices=sorted(SUITES))
    _common(p, required=False)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--pair", nargs=2, type=_label, metavar="R,S")
    p.add_argument("--triple", nargs=3, type=_label, metavar="R,S")
    p.add_argument("--poles", action="store_true")
    p.add_argument("--polarization", action="store_true")
    p.add_argument("--k-max", type=int, default=8)
    p.add_argument("--max-boxes", type=int, default=8)
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CapExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except (DomainError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
