"""Command-line front end.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
parse error.  ``PICKETLAB_THREADS`` sets the number of worker processes used
by ``verify`` (default: available CPUs).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence, Tuple

from .embeddings import (
    Embedding,
    EntryOutOfRange,
    construct_a,
    construct_c,
    dual,
    make_embedding,
    make_g,
    make_h,
    picket,
)
from .homs import (
    NotInSn,
    subfactor_count,
    tableau_count,
    g_quotient,
    h_quotient,
    pairing_left,
    pairing_right,
)
from .lr_tableaux import IndexOutOfRange, LRTableau, enumerate_tableaux
from .partitions import InvalidPartition, Partition

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ParseError(ValueError):
    pass


# -- embedding files ---------------------------------------------------------


def dumps_embedding(M: Embedding) -> str:
    """Canonical one-line JSON form, newline-terminated."""
    return json.dumps(M.to_json()) + "\n"


def loads_embedding(text: str, source: str = "<input>") -> Embedding:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ParseError(f"{source}: expected a JSON object")
    for key in ("p", "beta"):
        if key not in data:
            raise ParseError(f"{source}: missing field '{key}'")
    unknown = set(data) - {"p", "beta", "generators"}
    if unknown:
        raise ParseError(f"{source}: unknown field(s) {sorted(unknown)}")
    p, beta, gens = data["p"], data["beta"], data.get("generators", [])
    if not isinstance(p, int):
        raise ParseError(f"{source}: field 'p' must be an integer")
    if not isinstance(beta, list) or not all(isinstance(x, int) for x in beta):
        raise ParseError(f"{source}: field 'beta' must be a list of integers")
    if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
        raise ParseError(f"{source}: field 'generators' must be a list of rows")
    try:
        return make_embedding(p, beta, gens)
    except InvalidPartition as exc:
        raise ParseError(f"{source}: field 'beta': {exc}") from None
    except EntryOutOfRange as exc:
        raise ParseError(f"{source}: field 'generators': {exc}") from None
    except ValueError as exc:
        raise ParseError(f"{source}: field 'p': {exc}") from None


def read_embedding(path: str) -> Embedding:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    return loads_embedding(text, path)


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- rendering ---------------------------------------------------------------


def render_tableau(t: LRTableau, transpose: bool = False) -> str:
    """ASCII diagram, parts as columns with row 1 on top (or parts as rows)."""
    labels = t.labels()
    width = len(str(t.s)) if t.s else 1
    blank = " " * (width + 2)

    def box(lab: int) -> str:
        return "[" + (str(lab) if lab else " ").rjust(width) + "]"

    if not labels:
        return "(empty)\n"
    if transpose:
        return "".join("".join(box(x) for x in col) + "\n" for col in labels)
    lines = []
    for r in range(max(len(c) for c in labels)):
        cells = [box(col[r]) if r < len(col) else blank for col in labels]
        lines.append("".join(cells).rstrip() + "\n")
    return "".join(lines)


# -- verification ------------------------------------------------------------

HEADER = "embedding-id\tell\tm\tcount_tableau\tcount_subfactor\tcount_hom\tagree"


def verify_cell(M: Embedding, theorem: int, ell: int, m: int) -> Tuple[int, int, int]:
    if theorem == 1:
        return tableau_count(M, ell, m), subfactor_count(M, ell, m), g_quotient(M, ell, m).dim
    D = dual(M)
    return tableau_count(D, ell, m), subfactor_count(D, ell, m), h_quotient(m - ell, m, M).dim


def _cell_job(args):
    M, theorem, ell, m = args
    return (ell, m, *verify_cell(M, theorem, ell, m))


def _workers() -> int:
    env = os.environ.get("PICKETLAB_THREADS")
    if env:
        return max(1, int(env))
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else os.cpu_count() or 1


def verify_rows(M: Embedding, theorem: int = 1, max_m: Optional[int] = None, workers: int = 1):
    """(ell, m, tableau, subfactor, hom) for all 1 <= ell <= m <= max_m, sorted by (m, ell)."""
    if max_m is None:
        max_m = M.beta.part(1) + 1
    jobs = [(M, theorem, ell, m) for m in range(1, max_m + 1) for ell in range(1, m + 1)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            rows = list(pool.map(_cell_job, jobs, chunksize=4))
    else:
        rows = [_cell_job(j) for j in jobs]
    return sorted(rows, key=lambda r: (r[1], r[0]))


def format_rows(ident: str, rows) -> Tuple[str, bool]:
    out = [HEADER]
    all_agree = True
    for ell, m, a, b, c in rows:
        agree = a == b == c
        all_agree &= agree
        out.append(f"{ident}\t{ell}\t{m}\t{a}\t{b}\t{c}\t{str(agree).lower()}")
    return "\n".join(out) + "\n", all_agree


# -- commands ----------------------------------------------------------------


def cmd_tableau(args) -> int:
    M = read_embedding(args.file)
    t = M.tableau
    sys.stdout.write(render_tableau(t, args.transpose))
    sys.stdout.write(json.dumps(t.to_json()) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    M = read_embedding(args.file)
    rows = verify_rows(M, args.theorem, args.max_m, _workers())
    text, ok = format_rows(Path(args.file).stem, rows)
    sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_lr_coeff(args) -> int:
    alpha, beta, gamma = (Partition.parse(x) for x in (args.alpha, args.beta, args.gamma))
    tabs = enumerate_tableaux(alpha, beta, gamma)
    print(len(tabs))
    if args.list:
        for t in tabs:
            print(json.dumps(t.to_json()))
    return EXIT_OK


def _morphism_json(f) -> str:
    data = {
        "kind": f.kind,
        "indices": list(f.indices),
        "source": [[P.ell, P.m] for P in f.source],
        "target": [[P.ell, P.m] for P in f.target],
        "matrix": [list(r) for r in f.matrix],
    }
    return json.dumps(data) + "\n"


def cmd_construct(args) -> int:
    idx = args.indices
    need = {"c": 3, "a": 3, "picket": 2, "g": 2, "h": 2}[args.kind]
    if len(idx) != need:
        print(f"construct {args.kind} takes {need} indices, got {len(idx)}", file=sys.stderr)
        return EXIT_USAGE
    p = args.p
    if args.kind == "c":
        text = dumps_embedding(construct_c(*idx, p=p))
    elif args.kind == "a":
        text = dumps_embedding(construct_a(*idx, p=p))
    elif args.kind == "picket":
        text = dumps_embedding(picket(p, *idx))
    elif args.kind == "g":
        text = _morphism_json(make_g(*idx, p=p))
    else:
        text = _morphism_json(make_h(*idx, p=p))
    _write(text, args.output)
    return EXIT_OK


def cmd_random(args) -> int:
    from .corpus import random_embedding

    M = random_embedding(args.p, Partition.parse(args.beta), args.gens, args.seed)
    _write(dumps_embedding(M), args.output)
    return EXIT_OK


def cmd_pairing(args) -> int:
    M = read_embedding(args.file)
    if args.side == "left":
        rep = pairing_left(args.n, args.index, args.m, M)
        name = f"left pairing n={args.n} (ell, m)=({args.index}, {args.m})"
    else:
        rep = pairing_right(args.n, args.index, args.m, M)
        name = f"right pairing n={args.n} (q, m)=({args.index}, {args.m})"
    print(f"{name}: target dim {rep.target_dim}, quotient dim {rep.quotient_dim}")
    if rep.vacuous:
        print("vacuous: no nonzero cosets")
    else:
        kind = "all" if rep.exhaustive else "sampled"
        print(f"checked {rep.cosets_checked} cosets ({kind}), {len(rep.failures)} without witness")
    print("non-degenerate" if rep.ok else "DEGENERATE")
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="picketlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("tableau", help="render the LR-tableau of an embedding file")
    s.add_argument("file")
    s.add_argument("--transpose", action="store_true", help="draw parts as rows")
    s.set_defaults(func=cmd_tableau)

    s = sub.add_parser("verify", help="sweep (ell, m) and compare the three counts")
    s.add_argument("file")
    s.add_argument("--theorem", type=int, choices=(1, 3), default=1)
    s.add_argument("--max-m", type=int, default=None)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("lr-coeff", help="count LR-tableaux of type (alpha, beta, gamma)")
    s.add_argument("alpha")
    s.add_argument("beta")
    s.add_argument("gamma")
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_lr_coeff)

    s = sub.add_parser("construct", help="write C, A, a picket, or the maps g/h")
    s.add_argument("kind", choices=("c", "a", "picket", "g", "h"))
    s.add_argument("indices", type=int, nargs="+")
    s.add_argument("--p", type=int, default=2)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("random", help="seeded random embedding file")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--beta", required=True)
    s.add_argument("--gens", type=int, default=1, help="number of generators")
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_random)

    s = sub.add_parser("pairing", help="check left/right non-degeneracy of the composition pairing")
    s.add_argument("n", type=int)
    s.add_argument("index", type=int, help="ell (left) or q (right)")
    s.add_argument("m", type=int)
    s.add_argument("file")
    s.add_argument("--side", choices=("left", "right"), default="left")
    s.set_defaults(func=cmd_pairing)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidPartition, IndexOutOfRange, NotInSn, ValueError) as exc:
        print(f"picketlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
