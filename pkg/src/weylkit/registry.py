"""The classification table registry and its verifier.

The registry is a plain text file of records (see data/tables.reg for
the format).  Each record is a parameterized pair (delta, lambda); every
instantiation is checked by restricting V_Y(lambda) to X = A_{l+1}
through W = V_X(delta).
"""

from __future__ import annotations

import ast
import operator
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .embeddings import build_embedding, is_multiplicity_free
from .weights import GuardExceeded, Weight, dual_weight, weyl_dim

TABLE_IDS = ("T1", "T2", "T3", "T4", "A2An")
FIELDS = ("id", "table", "l", "params", "where", "delta", "lambda", "expect", "printed")
REQUIRED = ("id", "table", "l", "delta", "lambda")


class RegistryError(ValueError):
    def __init__(self, msg, line=None, field_name=None, source="<registry>"):
        where = source
        if line is not None:
            where += f":{line}"
        if field_name is not None:
            where += f" [{field_name}]"
        super().__init__(f"{where}: {msg}")
        self.line = line
        self.field = field_name


# ---------------------------------------------------------------------------
# restricted integer expressions

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub,
           ast.Mult: operator.mul, ast.FloorDiv: operator.floordiv}
_CMPOPS = {ast.Lt: operator.lt, ast.LtE: operator.le, ast.Gt: operator.gt,
           ast.GtE: operator.ge, ast.Eq: operator.eq, ast.NotEq: operator.ne}
_FUNCS = {"min": min, "max": max}


def _check_node(node):
    if isinstance(node, ast.Expression):
        return _check_node(node.body)
    if isinstance(node, ast.Constant):
        if type(node.value) is not int:
            raise ValueError(f"only integer constants are allowed, got {node.value!r}")
        return
    if isinstance(node, ast.Name):
        return
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        _check_node(node.left)
        _check_node(node.right)
        return
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.Not)):
        return _check_node(node.operand)
    if isinstance(node, ast.BoolOp):
        for v in node.values:
            _check_node(v)
        return
    if isinstance(node, ast.Compare) and all(type(op) in _CMPOPS for op in node.ops):
        _check_node(node.left)
        for c in node.comparators:
            _check_node(c)
        return
    if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
            and node.func.id in _FUNCS and not node.keywords):
        for a in node.args:
            _check_node(a)
        return
    raise ValueError(f"unsupported syntax {ast.dump(node)[:40]}")


def compile_expr(text: str) -> ast.Expression:
    tree = ast.parse(text.strip(), mode="eval")
    _check_node(tree)
    return tree


def eval_expr(tree, env: Dict[str, int]):
    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise NameError(f"unknown name {node.id!r}")
            return env[node.id]
        if isinstance(node, ast.BinOp):
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else not v
        if isinstance(node, ast.BoolOp):
            vals = (ev(v) for v in node.values)
            return all(vals) if isinstance(node.op, ast.And) else any(vals)
        if isinstance(node, ast.Compare):
            left = ev(node.left)
            for op, c in zip(node.ops, node.comparators):
                right = ev(c)
                if not _CMPOPS[type(op)](left, right):
                    return False
                left = right
            return True
        if isinstance(node, ast.Call):
            return _FUNCS[node.func.id](*(ev(a) for a in node.args))
        raise ValueError("unsupported syntax")

    return ev(tree)


# ---------------------------------------------------------------------------
# weight templates

_TERM = re.compile(r"^(?:(?P<coef>.+?)\s*\*\s*)?(?P<sym>[wL])(?:\{(?P<idx>[^{}]+)\}|(?P<num>\d+))$")


@dataclass(frozen=True)
class Template:
    text: str
    symbol: str
    terms: Tuple[Tuple[object, object], ...] = field(compare=False, repr=False)

    def evaluate(self, env: Dict[str, int], rank: int) -> Weight:
        v = [0] * rank
        for coef, idx in self.terms:
            k = eval_expr(idx, env)
            c = eval_expr(coef, env)
            if not 1 <= k <= rank:
                raise IndexError(f"index {k} out of range 1..{rank} in {self.text!r}")
            if c < 0:
                raise ValueError(f"negative coefficient in {self.text!r}")
            v[k - 1] += c
        return tuple(v)


def _split_terms(text: str) -> List[str]:
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "{(":
            depth += 1
        elif ch in "})":
            depth -= 1
        if ch == "+" and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur).strip())
    return out


def parse_template(text: str, symbol: str) -> Template:
    text = text.strip()
    if text == "0":
        return Template(text, symbol, ())
    terms = []
    for part in _split_terms(text):
        m = _TERM.match(part)
        if not m or m.group("sym") != symbol:
            raise ValueError(f"bad term {part!r}; expected coef*{symbol}{{index}}")
        coef = compile_expr(m.group("coef") or "1")
        idx = compile_expr(m.group("idx") or m.group("num"))
        terms.append((coef, idx))
    return Template(text, symbol, tuple(terms))


# ---------------------------------------------------------------------------
# records

@dataclass(frozen=True)
class ParamRange:
    name: str
    lo: str
    hi: str
    lo_expr: object = field(compare=False, repr=False)
    hi_expr: object = field(compare=False, repr=False)


@dataclass(frozen=True)
class TableEntry:
    id: str
    table_id: str
    l_range: Tuple[int, int]
    params: Tuple[ParamRange, ...]
    where: Optional[str]
    delta: Template
    lam: Template
    expect_mf: bool
    printed: str
    line: int
    where_expr: object = field(default=None, compare=False, repr=False)

    def x_ranks(self) -> Tuple[int, int]:
        return (self.l_range[0] + 1, self.l_range[1] + 1)


def _parse_range(text: str):
    m = re.fullmatch(r"\s*(.+?)\s*\.\.\s*(.+?)\s*", text)
    if not m:
        raise ValueError(f"expected lo..hi, got {text!r}")
    return m.group(1), m.group(2)


def _build_entry(rec: Dict[str, Tuple[str, int]], start: int, source: str) -> TableEntry:
    def err(msg, key=None):
        line = rec[key][1] if key in rec else start
        return RegistryError(msg, line, key, source)

    for key in REQUIRED:
        if key not in rec:
            raise err("missing field", key)
    table = rec["table"][0]
    if table not in TABLE_IDS:
        raise err(f"unknown table id {table!r}", "table")
    try:
        lo, hi = _parse_range(rec["l"][0])
        l_range = (int(lo), int(hi))
    except ValueError as e:
        raise err(str(e), "l")
    if l_range[0] < 0 or l_range[0] > l_range[1]:
        raise err(f"empty or negative range {rec['l'][0]!r}", "l")
    params = []
    if "params" in rec:
        seen = {"l", "n"}
        for part in rec["params"][0].split(";"):
            part = part.strip()
            if not part:
                continue
            m = re.fullmatch(r"([A-Za-z_]\w*)\s*=\s*(.+)", part)
            if not m:
                raise err(f"bad parameter {part!r}", "params")
            name = m.group(1)
            if name in seen:
                raise err(f"parameter {name!r} defined twice", "params")
            seen.add(name)
            try:
                lo_s, hi_s = _parse_range(m.group(2))
                params.append(ParamRange(name, lo_s, hi_s, compile_expr(lo_s), compile_expr(hi_s)))
            except (ValueError, SyntaxError) as e:
                raise err(str(e), "params")
    where = rec.get("where", (None, 0))[0]
    where_expr = None
    if where is not None:
        try:
            where_expr = compile_expr(where)
        except (ValueError, SyntaxError) as e:
            raise err(str(e), "where")
    try:
        delta = parse_template(rec["delta"][0], "w")
    except (ValueError, SyntaxError) as e:
        raise err(str(e), "delta")
    try:
        lam = parse_template(rec["lambda"][0], "L")
    except (ValueError, SyntaxError) as e:
        raise err(str(e), "lambda")
    expect = rec.get("expect", ("mf", 0))[0]
    if expect not in ("mf", "not-mf"):
        raise err(f"expect must be mf or not-mf, got {expect!r}", "expect")
    return TableEntry(rec["id"][0], table, l_range, tuple(params), where, delta, lam,
                      expect == "mf", rec.get("printed", ("", 0))[0], start, where_expr)


def parse_registry(text: str, source: str = "<registry>") -> List[TableEntry]:
    entries: List[TableEntry] = []
    rec: Dict[str, Tuple[str, int]] = {}
    start = 0
    ids = set()

    def flush():
        nonlocal rec
        if rec:
            e = _build_entry(rec, start, source)
            if e.id in ids:
                raise RegistryError(f"duplicate id {e.id!r}", start, "id", source)
            ids.add(e.id)
            entries.append(e)
        rec = {}

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            flush()
            continue
        if ":" not in line:
            raise RegistryError("expected 'key: value'", lineno, None, source)
        key, value = (s.strip() for s in line.split(":", 1))
        if key not in FIELDS:
            raise RegistryError(f"unknown field {key!r}", lineno, key, source)
        if key in rec:
            raise RegistryError("field given twice", lineno, key, source)
        if not rec:
            start = lineno
        rec[key] = (value, lineno)
    flush()
    return entries


def builtin_registry_text() -> str:
    return resources.files("weylkit").joinpath("data/tables.reg").read_text(encoding="utf-8")


def load_table_registry(path: Optional[str] = None) -> List[TableEntry]:
    if path is None:
        return parse_registry(builtin_registry_text(), "<builtin>")
    with open(path, encoding="utf-8") as fh:
        return parse_registry(fh.read(), str(path))


# ---------------------------------------------------------------------------
# instantiation

@dataclass(frozen=True)
class Bounds:
    """max_l caps l; max_param caps every parameter's upper end, but never
    below the parameter's own lower end."""
    max_l: Optional[int] = None
    max_param: Optional[int] = None


@dataclass(frozen=True)
class Instance:
    entry_id: str
    table_id: str
    expect_mf: bool
    l: int
    params: Tuple[Tuple[str, int], ...]
    delta: Weight
    lam: Weight


def _param_values(entry: TableEntry, l: int, bounds: Bounds) -> Iterator[Dict[str, int]]:
    def rec(k, env):
        if k == len(entry.params):
            yield dict(env)
            return
        p = entry.params[k]
        lo, hi = eval_expr(p.lo_expr, env), eval_expr(p.hi_expr, env)
        if bounds.max_param is not None:
            hi = min(hi, max(lo, bounds.max_param))
        for v in range(lo, hi + 1):
            env[p.name] = v
            yield from rec(k + 1, env)
        env.pop(p.name, None)

    yield from rec(0, {"l": l})


def instantiate(entry: TableEntry, bounds: Bounds = Bounds()) -> List[Instance]:
    """All instances of an entry within bounds, in a fixed order.  A
    template index out of range is a registry error."""
    lo, hi = entry.l_range
    if bounds.max_l is not None:
        hi = min(hi, bounds.max_l)
    out = []
    for l in range(lo, hi + 1):
        for env in _param_values(entry, l, bounds):
            try:
                delta = entry.delta.evaluate(env, l + 1)
                n = weyl_dim(delta) - 1
                env["n"] = n
                if entry.where_expr is not None and not eval_expr(entry.where_expr, env):
                    continue
                lam = entry.lam.evaluate(env, n)
            except (IndexError, ValueError, NameError) as e:
                raise RegistryError(f"{entry.id} with l={l}, {env}: {e}", entry.line, None)
            params = tuple((p.name, env[p.name]) for p in entry.params)
            out.append(Instance(entry.id, entry.table_id, entry.expect_mf, l, params, delta, lam))
    return out


# ---------------------------------------------------------------------------
# verification

@dataclass(frozen=True)
class InstanceResult:
    instance: Instance
    status: str  # "pass", "fail" or "skipped"
    is_mf: Optional[bool] = None
    max_multiplicity: Optional[int] = None
    summands: Optional[int] = None
    dim: Optional[int] = None
    used_dual: bool = False
    reason: str = ""


@dataclass
class VerificationReport:
    results: List[InstanceResult]
    excluded: List[Tuple[str, str]]
    wall_time: float

    @property
    def positives(self):
        return [r for r in self.results if r.instance.expect_mf]

    @property
    def negatives(self):
        return [r for r in self.results if not r.instance.expect_mf]

    @property
    def skipped(self):
        return [r for r in self.results if r.status == "skipped"]

    @property
    def failed(self):
        return [r for r in self.results if r.status == "fail"]

    @property
    def passed(self) -> bool:
        return not self.failed


def check_instance(inst: Instance, max_entries=None) -> InstanceResult:
    try:
        e = build_embedding(inst.l, inst.delta, max_entries)
        rep = is_multiplicity_free(e, inst.lam, max_entries)
        used_dual = False
        if inst.expect_mf and not rep.is_mf:
            # tables list pairs up to duals
            e2 = build_embedding(inst.l, dual_weight(inst.delta), max_entries)
            rep2 = is_multiplicity_free(e2, dual_weight(inst.lam), max_entries)
            if rep2.is_mf:
                rep, used_dual = rep2, True
    except GuardExceeded as g:
        return InstanceResult(inst, "skipped", reason=str(g))
    ok = rep.is_mf == inst.expect_mf
    return InstanceResult(inst, "pass" if ok else "fail", rep.is_mf, rep.max_multiplicity,
                          len(rep.decomposition), rep.dims[0], used_dual)


def _check_star(args):
    return check_instance(*args)


def verify_tables(registry: Sequence[TableEntry], bounds: Optional[Bounds] = None,
                  max_entries=None, jobs: int = 1, only: Optional[Sequence[str]] = None) -> VerificationReport:
    """Check every instance; results come back in registry order whatever
    the number of jobs."""
    t0 = time.monotonic()
    bounds = bounds or Bounds()
    work: List[Instance] = []
    excluded: List[Tuple[str, str]] = []
    for entry in registry:
        if only is not None and entry.id not in only:
            continue
        insts = instantiate(entry, bounds)
        if not insts:
            if bounds.max_l is not None and entry.l_range[0] > bounds.max_l:
                excluded.append((entry.id, f"l >= {entry.l_range[0]} exceeds max_l = {bounds.max_l}"))
            else:
                excluded.append((entry.id, "no instance within bounds"))
        work.extend(insts)
    args = [(inst, max_entries) for inst in work]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_check_star, args, chunksize=4))
    else:
        results = [check_instance(*a) for a in args]
    return VerificationReport(results, excluded, time.monotonic() - t0)
