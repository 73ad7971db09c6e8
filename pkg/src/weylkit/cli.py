"""weylkit command line."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence

from . import weights as W
from .dominoes import square_decompose
from .embeddings import build_embedding, is_multiplicity_free, restrict_module
from .lr import enumerate_lr_tableaux, pieri, tensor_decompose
from .powers import OutOfStableRange, alt_power, gl6_to_a3, gl_to_so_branching, parabolic_levels, sym_power
from .registry import Bounds, RegistryError, load_table_registry, verify_tables

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# parsing

def _short(text: str) -> str:
    return text if len(text) <= 40 else text[:37] + "..."


def _ints(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {_short(text)!r}")


def parse_partition(text: str) -> W.Partition:
    if text.startswith("p:"):
        text = text[2:]
    parts = _ints(text)
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise UsageError(f"{text!r} is not a partition")
    return W.canon_partition(parts)


def parse_weight(text: str, rank: int) -> W.Weight:
    """Fundamental-weight coefficients, or a partition written p:7,5,2.  A
    list of rank+1 coefficients is accepted when its last entry is 0."""
    if text.startswith("p:"):
        p = parse_partition(text)
        if len(p) > rank + 1:
            raise UsageError(f"partition {text!r} has more than {rank + 1} rows")
        return W.partition_to_weight(p, rank)
    w = _ints(text)
    if len(w) == rank + 1 and w[-1] == 0:
        w = w[:-1]
    if len(w) != rank:
        raise UsageError(f"weight {_short(text)!r} has {len(w)} coefficients, expected {rank}")
    if any(x < 0 for x in w):
        raise UsageError(f"weight {_short(text)!r} is not dominant")
    return tuple(w)


def _rank_of(text: str) -> int:
    """Rank implied by a coefficient list (partitions need --rank)."""
    if text.startswith("p:"):
        raise UsageError("a partition needs an explicit --rank")
    return len(_ints(text))


# ---------------------------------------------------------------------------
# output

def decomposition_json(dec: W.Decomposition, rank: int) -> Dict:
    return {
        "rank": rank,
        "summands": [{"weight": list(w), "mult": m} for w, m in W.sorted_summands(dec)],
        "dim": str(W.decomposition_dim(dec)),
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _fmt_weight(w) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def decomposition_text(dec: W.Decomposition) -> List[str]:
    lines = []
    for w, m in W.sorted_summands(dec):
        lines.append(f"  {_fmt_weight(w)}" + (f" x{m}" if m > 1 else ""))
    lines.append(f"  dim {W.decomposition_dim(dec)}, {len(dec)} summands, "
                 f"{'MF' if W.is_mf(dec) else 'not MF'}")
    return lines


class Out:
    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream

    def emit(self, obj, text_lines):
        if self.fmt == "json":
            print(dumps(obj), file=self.stream)
        else:
            for line in text_lines:
                print(line, file=self.stream)

    def decomposition(self, dec, rank, title=""):
        lines = [title] if title else []
        self.emit(decomposition_json(dec, rank), lines + decomposition_text(dec))


# ---------------------------------------------------------------------------
# commands

def cmd_dim(a, out):
    w = parse_weight(a.weight, a.rank)
    d = W.weyl_dim(w)
    out.emit({"rank": a.rank, "weight": list(w), "dim": str(d)}, [str(d)])


def cmd_tensor(a, out):
    rank = a.rank if a.rank is not None else _rank_of(a.a)
    x, y = parse_weight(a.a, rank), parse_weight(a.b, rank)
    out.decomposition(tensor_decompose(x, y), rank, f"{_fmt_weight(x)} x {_fmt_weight(y)}:")


def _power(fn, name):
    def run(a, out):
        rank = a.rank if a.rank is not None else _rank_of(a.weight)
        w = parse_weight(a.weight, rank)
        if a.k < 0:
            raise UsageError("--k must be nonnegative")
        out.decomposition(fn(a.k, w, a.max_entries), rank, f"{name}^{a.k} {_fmt_weight(w)}:")
    return run


def cmd_square(a, out):
    rank = a.rank if a.rank is not None else _rank_of(a.weight)
    w = parse_weight(a.weight, rank)
    sym, alt = square_decompose(w)
    obj = {"sym": decomposition_json(sym, rank), "alt": decomposition_json(alt, rank)}
    lines = [f"S^2 {_fmt_weight(w)}:"] + decomposition_text(sym)
    lines += [f"wedge^2 {_fmt_weight(w)}:"] + decomposition_text(alt)
    out.emit(obj, lines)


def cmd_lr_coeff(a, out):
    d, e, n = parse_partition(a.delta), parse_partition(a.eps), parse_partition(a.nu)
    tabs = enumerate_lr_tableaux(d, e, n)
    obj = {"coefficient": len(tabs)}
    lines = [str(len(tabs))]
    if a.show:
        obj["tableaux"] = [[list(r) for r in t] for t in tabs]
        for t in tabs:
            lines.append("  " + " / ".join("".join(str(x) for x in r) for r in t))
    out.emit(obj, lines)


def cmd_pieri(a, out):
    rank = a.rank if a.rank is not None else _rank_of(a.weight)
    w = parse_weight(a.weight, rank)
    if a.k < 0:
        raise UsageError("--k must be nonnegative")
    out.decomposition(pieri(a.k, w), rank, f"{a.k}w1 x {_fmt_weight(w)}:")


def cmd_levels(a, out):
    rank = a.rank if a.rank is not None else _rank_of(a.weight)
    w = parse_weight(a.weight, rank)
    if rank < 2:
        raise UsageError("levels need rank at least 2")
    lv = parabolic_levels(w, a.end, a.max_entries)
    obj = {"levels": [decomposition_json(d, rank - 1) for d in lv]}
    lines = []
    for i, d in enumerate(lv):
        lines.append(f"level {i}: " + " + ".join(
            _fmt_weight(x) + (f"^{m}" if m > 1 else "") for x, m in W.sorted_summands(d)))
    out.emit(obj, lines)


def cmd_branch_so(a, out):
    g = parse_partition(a.gamma)
    if a.to_a3:
        if a.so_dim != 6:
            raise UsageError("--to-a3 needs --so-dim 6")
        out.decomposition(gl6_to_a3(g), 3, f"GL_6 {_fmt_weight(g)} to A_3:")
        return
    br = gl_to_so_branching(g, a.so_dim)
    items = sorted(br.items(), key=lambda pm: (-sum(pm[0]), tuple(-x for x in pm[0])))
    obj = {"so_dim": a.so_dim, "summands": [{"partition": list(p), "mult": m} for p, m in items]}
    lines = [f"  [{','.join(map(str, p))}]" + (f" x{m}" if m > 1 else "") for p, m in items]
    out.emit(obj, lines)


def _embedding(a):
    delta = parse_weight(a.delta, a.l + 1)
    e = build_embedding(a.l, delta, a.max_entries)
    return e, parse_weight(a.lam, e.y_rank)


def cmd_restrict(a, out):
    e, lam = _embedding(a)
    out.decomposition(restrict_module(e, lam, a.max_entries), e.x_rank,
                      f"V_Y{_fmt_weight(lam)} on A_{e.x_rank} (Y = A_{e.y_rank}):")


def cmd_mf_check(a, out):
    e, lam = _embedding(a)
    rep = is_multiplicity_free(e, lam, a.max_entries)
    obj = decomposition_json(rep.decomposition, e.x_rank)
    obj.update({"mf": rep.is_mf, "max_mult": rep.max_multiplicity, "y_rank": e.y_rank})
    lines = [("MF" if rep.is_mf else "not MF") + f", {len(rep.decomposition)} summands, "
             f"max multiplicity {rep.max_multiplicity}"] + decomposition_text(rep.decomposition)
    out.emit(obj, lines)


def cmd_weight_mult(a, out):
    lam = parse_weight(a.lam, a.rank)
    mu = _ints(a.mu)
    if len(mu) != a.rank:
        raise UsageError(f"mu {a.mu!r} does not have {a.rank} coefficients")
    m = W.weight_multiplicity(lam, mu)
    out.emit({"mult": m}, [str(m)])


def cmd_verify_tables(a, out):
    reg = load_table_registry(a.registry)
    only = a.only.split(",") if a.only else None
    rep = verify_tables(reg, Bounds(a.max_l, a.max_param), a.max_entries, a.jobs, only)
    obj = {
        "pass": rep.passed,
        "checked": len(rep.results),
        "positive": len(rep.positives),
        "negative": len(rep.negatives),
        "failed": [_result_obj(r) for r in rep.failed],
        "skipped": [_result_obj(r) for r in rep.skipped],
        "excluded": [{"id": i, "reason": why} for i, why in rep.excluded],
    }
    if a.details:
        obj["results"] = [_result_obj(r) for r in rep.results]
    lines = []
    if a.details:
        lines += [_result_line(r) for r in rep.results]
    lines += [f"FAIL {_result_line(r)}" for r in rep.failed]
    lines += [f"SKIP {_result_line(r)}" for r in rep.skipped]
    lines += [f"EXCLUDED {i}: {why}" for i, why in rep.excluded]
    lines.append(f"{len(rep.results)} instances ({len(rep.positives)} positive, "
                 f"{len(rep.negatives)} negative controls), {len(rep.failed)} failed, "
                 f"{len(rep.skipped)} skipped, {len(rep.excluded)} entries excluded; "
                 f"{rep.wall_time:.1f}s")
    lines.append("PASS" if rep.passed else "FAIL")
    out.emit(obj, lines)
    return EXIT_OK if rep.passed else EXIT_FAIL


def _result_obj(r):
    i = r.instance
    d = {"id": i.entry_id, "table": i.table_id, "l": i.l, "params": {k: v for k, v in i.params},
         "delta": list(i.delta), "lambda": _sparse(i.lam), "expect_mf": i.expect_mf,
         "status": r.status}
    if r.status == "skipped":
        d["reason"] = r.reason
    else:
        d.update({"mf": r.is_mf, "max_mult": r.max_multiplicity, "summands": r.summands,
                  "dim": str(r.dim), "dual": r.used_dual})
    return d


def _sparse(lam):
    """Nonzero coefficients of a Y weight as [[index, coef], ...]."""
    return [[k + 1, c] for k, c in enumerate(lam) if c]


def _result_line(r):
    i = r.instance
    lam = " + ".join(f"{c}L{k}" if c > 1 else f"L{k}" for k, c in _sparse(i.lam)) or "0"
    ps = ",".join(f"{k}={v}" for k, v in i.params)
    head = f"{i.entry_id} [{i.table_id}] l={i.l}{' ' + ps if ps else ''} delta={_fmt_weight(i.delta)} lambda={lam}"
    if r.status == "skipped":
        return f"{head}: {r.reason}"
    verdict = "MF" if r.is_mf else f"not MF (max {r.max_multiplicity})"
    return f"{head}: {verdict}, expected {'MF' if i.expect_mf else 'not MF'}"


# ---------------------------------------------------------------------------
# parser

def _common(suppress: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("text", "json"), default=d("text"))
    p.add_argument("--max-entries", type=int, default=d(None), metavar="N",
                   help="weight-table guard (default %d)" % W.get_max_entries())
    p.add_argument("--jobs", type=int, default=d(1), metavar="N")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylkit", parents=[_common(False)],
                                     description="Weights, tensor products and restrictions for SL_n.")
    sub = parser.add_subparsers(dest="command", metavar="<command>")
    sub.required = True
    common = _common(True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn)
        return p

    p = add("dim", cmd_dim, "dimension of an irreducible module")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--weight", required=True)

    p = add("tensor", cmd_tensor, "decompose V(a) x V(b)")
    p.add_argument("--rank", type=int)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    for name, fn, label in (("sym", sym_power, "S"), ("alt", alt_power, "wedge")):
        p = add(name, _power(fn, label), f"decompose {label}^k V(weight)")
        p.add_argument("--rank", type=int)
        p.add_argument("--weight", required=True)
        p.add_argument("--k", type=int, default=2)

    p = add("square", cmd_square, "S^2 and wedge^2 from domino tableaux")
    p.add_argument("--rank", type=int)
    p.add_argument("--weight", required=True)

    p = add("lr-coeff", cmd_lr_coeff, "Littlewood-Richardson coefficient c^nu_{delta,eps}")
    p.add_argument("--delta", required=True)
    p.add_argument("--eps", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--show", action="store_true", help="list the tableaux")

    p = add("pieri", cmd_pieri, "k w1 x V(weight)")
    p.add_argument("--rank", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--weight", required=True)

    p = add("levels", cmd_levels, "levels of V(weight) for a maximal parabolic")
    p.add_argument("--rank", type=int)
    p.add_argument("--weight", required=True)
    p.add_argument("--end", choices=("first", "last"), default="last")

    p = add("branch-so", cmd_branch_so, "GL_N to SO_N branching")
    p.add_argument("--gamma", required=True)
    p.add_argument("--so-dim", type=int, required=True)
    p.add_argument("--to-a3", action="store_true", help="relabel SO_6 summands for A_3")

    for name, fn, help_ in (("restrict", cmd_restrict, "restrict V_Y(lambda) to X"),
                            ("mf-check", cmd_mf_check, "is V_Y(lambda) restricted to X MF?")):
        p = add(name, fn, help_)
        p.add_argument("--l", type=int, required=True, help="X = A_{l+1}")
        p.add_argument("--delta", required=True)
        p.add_argument("--lambda", dest="lam", required=True)

    p = add("weight-mult", cmd_weight_mult, "multiplicity of mu in V(lambda)")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)

    p = add("verify-tables", cmd_verify_tables, "check the classification registry")
    p.add_argument("--registry", help="registry file (default: built in)")
    p.add_argument("--max-l", type=int)
    p.add_argument("--max-param", type=int)
    p.add_argument("--only", help="comma-separated entry ids")
    p.add_argument("--details", action="store_true", help="list every instance")
    return parser


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if a.max_entries is not None and a.max_entries < 1:
        print("weylkit: --max-entries must be positive", file=stderr)
        return EXIT_USAGE
    if a.jobs < 1:
        print("weylkit: --jobs must be positive", file=stderr)
        return EXIT_USAGE
    if getattr(a, "rank", None) is not None and a.rank < 1:
        print("weylkit: --rank must be positive", file=stderr)
        return EXIT_USAGE
    if getattr(a, "l", None) is not None and a.l < 0:
        print("weylkit: --l must be nonnegative", file=stderr)
        return EXIT_USAGE
    out = Out(a.format, stdout)
    try:
        code = a.fn(a, out)
    except W.GuardExceeded as e:
        print(f"weylkit: {e}", file=stderr)
        return EXIT_GUARD
    except (UsageError, W.RankMismatch, OutOfStableRange, RegistryError, OSError) as e:
        print(f"weylkit: {e}", file=stderr)
        return EXIT_USAGE
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
