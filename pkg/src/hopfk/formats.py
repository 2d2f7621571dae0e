"""Text formats for fields, algebras, modules, Hopf and comodule algebras, groups, crossed products.

Files are TOML.  Every file has a top-level ``kind`` and an optional
``name``, and every kind except ``module`` and ``comodule-algebra`` carries
its own ``[field]`` table.  Those two refer to the file of their algebra
(resp. Hopf algebra) by a path relative to themselves.  A field element is
an integer in ``[0, p)`` or, over GF(p^e), a list of such integers giving
the coefficients of 1, x, ..., x^(e-1) modulo the field's modulus.

Sparse lists hold one entry per nonzero coefficient:

* ``[algebra] mult``: ``[i, j, k, c]`` means a_i a_j contains c a_k;
* ``[hopf] comul``: ``[j, i, k, c]`` means Delta(a_j) contains c a_i (x) a_k,
  ``antipode``: ``[j, i, c]`` means sigma(a_j) contains c a_i,
  ``counit`` is the dense list eps(a_0), ..., eps(a_{n-1});
* ``[module] action``: ``[i, r, s, c]`` is entry (r, s) of the matrix of a_i
  (row vectors, acting on the right);
* ``[comodule] coaction``: ``[i, k, l, c]`` means rho(a_i) contains c a_k (x) h_l;
* ``[crossed] action``: ``[g, j, i, c]`` means g(b_j) contains c b_i
  (omitted: every g acts trivially), ``cocycle``: ``[g, h, i, c]`` means
  tau(g, h) contains c b_i (omitted: tau = 1).

Unknown keys, out-of-range indices, unreduced elements and repeated sparse
entries are rejected with a :class:`~hopfk.errors.ParseError` that carries
the line and column.
"""

import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import tomli

from .algcore.algebra import Algebra, ModuleRep, validate_algebra
from .errors import InputError, ParseError
from .exactla import GF
from .galois import CrossedProductSpec
from .hopfcore import ComoduleAlgebra, HopfAlgebra, group_algebra, validate_hopf

KINDS = ("field", "algebra", "module", "hopf", "comodule-algebra", "group", "crossed-product")

_TOP_KEYS = {
    "field": {"field"},
    "algebra": {"field", "algebra"},
    "module": {"module"},
    "hopf": {"field", "algebra", "hopf"},
    "comodule-algebra": {"field", "algebra", "comodule"},
    "group": {"field", "group"},
    "crossed-product": {"field", "base", "group", "crossed"},
}
_TABLE_KEYS = {
    "field": {"p", "e", "modulus"},
    "algebra": {"dim", "basis", "unit", "mult"},
    "base": {"dim", "basis", "unit", "mult"},
    "module": {"dim", "action"},
    "hopf": {"comul", "counit", "antipode"},
    "comodule": {"coaction"},
    "group": {"table", "names"},
    "crossed": {"action", "cocycle"},
}
# keys that are file references rather than tables, per kind
_REFS = {"module": {"algebra"}, "comodule-algebra": {"hopf"}}


@dataclass
class SpecFile:
    kind: str
    name: str
    value: object               # the constructed object
    path: Path = None
    refs: dict = field(default_factory=dict)
    text: str = ""


class _Doc:
    """Parsed TOML plus the raw text, for locating errors."""

    def __init__(self, text, path):
        self.text = text
        self.path = path
        self.lines = text.splitlines()

    def locate(self, key, table=None):
        start = 0
        if table is not None:
            pat = re.compile(rf"^\s*\[\s*{re.escape(table)}\s*\]")
            for n, line in enumerate(self.lines):
                if pat.match(line):
                    start = n
                    if key is None:
                        return n + 1, line.index("[") + 1
                    break
        if key is not None:
            pat = re.compile(rf"^\s*{re.escape(key)}\s*=")
            for n in range(start, len(self.lines)):
                if pat.match(self.lines[n]):
                    return n + 1, self.lines[n].index(key) + 1
        return None, None

    def error(self, message, key=None, table=None):
        line, col = self.locate(key, table)
        return ParseError(message, line, col, self.path)

    def locate_entry(self, key, table, k):
        """Line and column of the k-th inner list of the array value of ``key``."""
        line, col = self.locate(key, table)
        if line is None:
            return None, None
        depth, seen = 0, 0
        for n in range(line - 1, len(self.lines)):
            text = self.lines[n]
            start = text.index("=") + 1 if n == line - 1 else 0
            for j in range(start, len(text)):
                ch = text[j]
                if ch == "#":
                    break
                if ch == "[":
                    depth += 1
                    if depth == 2:
                        if seen == k:
                            return n + 1, j + 1
                        seen += 1
                elif ch == "]":
                    depth -= 1
                    if depth == 0:
                        return line, col
        return line, col


def _load(text, path):
    try:
        data = tomli.loads(text)
    except tomli.TOMLDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno, path) from None
    return data, _Doc(text, path)


def _check_keys(doc, data, kind):
    allowed = _TOP_KEYS[kind] | _REFS.get(kind, set()) | {"kind", "name"}
    for key, val in data.items():
        if key not in allowed:
            if isinstance(val, dict):
                raise doc.error(f"unknown table [{key}] for kind {kind!r}", table=key)
            raise doc.error(f"unknown key {key!r} for kind {kind!r}", key=key)
        if isinstance(val, dict):
            if key in _REFS.get(kind, set()):
                raise doc.error(f"{key!r} must be a file path here", table=key)
            for sub in val:
                if sub not in _TABLE_KEYS[key]:
                    raise doc.error(f"unknown key {sub!r} in [{key}]", key=sub, table=key)
    for key in _TOP_KEYS[kind] | _REFS.get(kind, set()):
        if key not in data:
            raise doc.error(f"missing [{key}]" if key in _TABLE_KEYS else f"missing {key!r}")


def _int(doc, v, what, key, table, lo=None, hi=None):
    if isinstance(v, bool) or not isinstance(v, int):
        raise doc.error(f"{what} must be an integer, got {v!r}", key, table)
    if (lo is not None and v < lo) or (hi is not None and v >= hi):
        raise doc.error(f"{what} = {v} out of range [{lo}, {hi})", key, table)
    return v


def _elem(doc, F, v, key, table):
    if isinstance(v, list):
        if len(v) > F.e or not all(isinstance(c, int) and not isinstance(c, bool) and 0 <= c < F.p
                                   for c in v):
            raise doc.error(f"{v!r} is not a reduced element of {F}", key, table)
        return F.element(v)
    v = _int(doc, v, "field element", key, table)
    if not 0 <= v < F.p:
        raise doc.error(f"{v} is not a reduced element of {F}", key, table)
    return v


def _sparse(doc, F, entries, shape, key, table):
    if not isinstance(entries, list):
        raise doc.error(f"{key} must be a list of entries", key, table)
    out = np.zeros(shape, dtype=np.int64)
    seen = set()
    for k, e in enumerate(entries):
        try:
            if not isinstance(e, list) or len(e) != len(shape) + 1:
                raise doc.error(f"entry {e!r} of {key} must have {len(shape) + 1} components")
            idx = tuple(_int(doc, x, "index", key, table, 0, n) for x, n in zip(e[:-1], shape))
            if idx in seen:
                raise doc.error(f"repeated entry {list(idx)} in {key}")
            seen.add(idx)
            out[idx] = _elem(doc, F, e[-1], key, table)
        except ParseError as exc:
            line, col = doc.locate_entry(key, table, k)
            raise ParseError(exc.message, line, col, doc.path) from None
    return out


def _dense(doc, F, values, n, key, table):
    if not isinstance(values, list) or len(values) != n:
        raise doc.error(f"{key} must list {n} field elements", key, table)
    return np.array([_elem(doc, F, v, key, table) for v in values], dtype=np.int64)


def _field(doc, t):
    p = _int(doc, t.get("p"), "p", "p", "field")
    e = _int(doc, t.get("e", 1), "e", "e", "field", 1)
    mod = t.get("modulus")
    try:
        return GF(p, e, None if mod is None else tuple(mod))
    except InputError as exc:
        raise doc.error(str(exc), "p", "field") from None
    except (TypeError, ValueError) as exc:
        raise doc.error(f"bad field: {exc}", "p", "field") from None


def _algebra(doc, F, t, table, name):
    n = _int(doc, t.get("dim"), "dim", "dim", table, 1)
    mult = _sparse(doc, F, t.get("mult", []), (n, n, n), "mult", table)
    unit = _dense(doc, F, t["unit"], n, "unit", table) if "unit" in t else None
    A = validate_algebra(F, mult, unit, name=name)
    if "basis" in t:
        if not isinstance(t["basis"], list) or len(t["basis"]) != n:
            raise doc.error(f"basis must list {n} names", "basis", table)
        A.basis_names = [str(b) for b in t["basis"]]
    return A


def _group(doc, t):
    table = t.get("table")
    if not isinstance(table, list) or not table or not all(isinstance(r, list) for r in table):
        raise doc.error("group table must be a list of rows", "table", "group")
    n = len(table)
    rows = [[_int(doc, x, "group element", "table", "group", 0, n) for x in r] for r in table]
    if any(len(r) != n for r in rows):
        raise doc.error("group table must be square", "table", "group")
    names = t.get("names")
    if names is not None and (not isinstance(names, list) or len(names) != n):
        raise doc.error(f"names must list {n} entries", "names", "group")
    return np.array(rows, dtype=np.int64), names


def _resolve_ref(doc, data, key, path):
    ref = data[key]
    if not isinstance(ref, str):
        raise doc.error(f"{key} must be a file path", key)
    base = Path(path).parent if path else Path.cwd()
    target = base / ref
    if not target.exists():
        raise doc.error(f"referenced file {ref!r} not found", key)
    return ref, target


def parse(text, path=None, expect=None):
    """Parse one spec file; ``expect`` restricts the acceptable kinds."""
    data, doc = _load(text, path)
    kind = data.get("kind")
    if kind not in KINDS:
        raise doc.error(f"kind must be one of {', '.join(KINDS)}; got {kind!r}", "kind")
    if expect is not None and kind not in expect:
        raise doc.error(f"expected a file of kind {' or '.join(expect)}, got {kind!r}", "kind")
    _check_keys(doc, data, kind)
    name = str(data.get("name", Path(path).stem if path else ""))
    refs = {}
    if kind == "field":
        value = _field(doc, data["field"])
    elif kind == "algebra":
        value = _algebra(doc, _field(doc, data["field"]), data["algebra"], "algebra", name)
    elif kind == "hopf":
        value = _hopf(doc, _field(doc, data["field"]), data, name)
    elif kind == "group":
        F = _field(doc, data["field"])
        table, names = _group(doc, data["group"])
        value = group_algebra(table, F, name=name, names=names)
    elif kind == "module":
        ref, target = _resolve_ref(doc, data, "algebra", path)
        refs["algebra"] = ref
        A = load(target, expect=("algebra", "hopf", "group")).value
        A = A.algebra if isinstance(A, HopfAlgebra) else A
        t = data["module"]
        d = _int(doc, t.get("dim"), "dim", "dim", "module", 0)
        act = _sparse(doc, A.field, t.get("action", []), (A.dim, d, d), "action", "module")
        value = ModuleRep(A, act, name=name)
    elif kind == "comodule-algebra":
        ref, target = _resolve_ref(doc, data, "hopf", path)
        refs["hopf"] = ref
        H = load(target, expect=("hopf", "group")).value
        F = _field(doc, data["field"])
        if F is not H.field:
            raise doc.error(f"field {F} differs from the Hopf algebra's {H.field}", "p", "field")
        A = _algebra(doc, F, data["algebra"], "algebra", name)
        rho = _sparse(doc, F, data["comodule"].get("coaction", []), (A.dim, A.dim, H.dim),
                      "coaction", "comodule")
        coaction = rho.transpose(1, 2, 0).reshape(A.dim * H.dim, A.dim)
        value = ComoduleAlgebra(A, H, coaction, name=name)
    else:
        F = _field(doc, data["field"])
        B = _algebra(doc, F, data["base"], "base", f"{name}.base")
        table, names = _group(doc, data["group"])
        G, nB = len(table), B.dim
        t = data["crossed"]
        if "action" in t:
            act = _sparse(doc, F, t["action"], (G, nB, nB), "action", "crossed")
            act = act.transpose(0, 2, 1)              # column j = g(b_j)
        else:
            act = np.stack([np.eye(nB, dtype=np.int64)] * G)
        if "cocycle" in t:
            tau = _sparse(doc, F, t["cocycle"], (G, G, nB), "cocycle", "crossed")
        else:
            tau = np.tile(B.unit, (G, G, 1))
        value = CrossedProductSpec(B, table, act, tau, names=names)
    return SpecFile(kind, name, value, Path(path) if path else None, refs, text)


def _hopf(doc, F, data, name):
    A = _algebra(doc, F, data["algebra"], "algebra", name)
    n = A.dim
    t = data["hopf"]
    for key in ("comul", "counit", "antipode"):
        if key not in t:
            raise doc.error(f"missing {key!r} in [hopf]", table="hopf")
    delta = _sparse(doc, F, t["comul"], (n, n, n), "comul", "hopf")       # [j, i, k]
    comul = delta.transpose(1, 2, 0).reshape(n * n, n)
    counit = _dense(doc, F, t["counit"], n, "counit", "hopf")
    anti = _sparse(doc, F, t["antipode"], (n, n), "antipode", "hopf")     # [j, i]
    return validate_hopf(A, comul, counit, anti.T, name=name,
                         basis_names=A.basis_names)


def load(path, expect=None):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", path=path) from None
    return parse(text, path, expect)


# -- emission ----------------------------------------------------------------

def _q(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _val(F, v):
    p = F.to_plain(int(v))
    return str(p) if isinstance(p, int) else "[" + ", ".join(map(str, p)) + "]"


def _entries(F, arr):
    rows = []
    for idx in zip(*np.nonzero(arr)):
        rows.append("  [" + ", ".join(str(int(i)) for i in idx) + ", " + _val(F, arr[idx]) + "],")
    if not rows:
        return "[]"
    return "[\n" + "\n".join(rows) + "\n]"


def _field_lines(F):
    out = ["[field]", f"p = {F.p}"]
    if F.e > 1:
        out += [f"e = {F.e}", "modulus = [" + ", ".join(map(str, F.modulus)) + "]"]
    return out


def _algebra_lines(A, table="algebra"):
    F = A.field
    out = [f"[{table}]", f"dim = {A.dim}"]
    names = A.basis_names
    if names:
        out.append("basis = [" + ", ".join(_q(b) for b in names) + "]")
    out.append("unit = [" + ", ".join(_val(F, u) for u in A.unit) + "]")
    out.append("mult = " + _entries(F, A.c))
    return out


def dumps(value, name="", refs=None):
    """Serialize an object to the text format (inverse of :func:`parse`)."""
    refs = refs or {}
    head = lambda kind: [f"kind = {_q(kind)}"] + ([f"name = {_q(name)}"] if name else []) + [""]
    if isinstance(value, HopfAlgebra):
        H, F = value, value.field
        A = H.algebra
        if not A.basis_names:
            A.basis_names = H.basis_names
        lines = head("hopf") + _field_lines(F) + [""] + _algebra_lines(A) + [""]
        lines += ["[hopf]", "comul = " + _entries(F, H.delta.transpose(2, 0, 1)),
                  "counit = [" + ", ".join(_val(F, e) for e in H.eps) + "]",
                  "antipode = " + _entries(F, H.antipode.T)]
    elif isinstance(value, ComoduleAlgebra):
        CA, F = value, value.field
        lines = head("comodule-algebra") + [f"hopf = {_q(refs['hopf'])}", ""] + _field_lines(F)
        lines += [""] + _algebra_lines(CA.algebra) + [""]
        lines += ["[comodule]", "coaction = " + _entries(F, CA.rho.transpose(2, 0, 1))]
    elif isinstance(value, ModuleRep):
        M, F = value, value.field
        lines = head("module") + [f"algebra = {_q(refs['algebra'])}", ""]
        lines += ["[module]", f"dim = {M.dim}", "action = " + _entries(F, M.action)]
    elif isinstance(value, Algebra):
        lines = head("algebra") + _field_lines(value.field) + [""] + _algebra_lines(value)
    elif isinstance(value, CrossedProductSpec):
        S, F = value, value.B.field
        lines = head("crossed-product") + _field_lines(F) + [""] + _algebra_lines(S.B, "base")
        lines += ["", "[group]", "table = [" + ", ".join(
            "[" + ", ".join(str(int(x)) for x in row) + "]" for row in np.asarray(S.table)) + "]"]
        if S.names:
            lines.append("names = [" + ", ".join(_q(x) for x in S.names) + "]")
        act = F.asarray(S.action).transpose(0, 2, 1)
        lines += ["", "[crossed]", "action = " + _entries(F, act),
                  "cocycle = " + _entries(F, F.asarray(S.cocycle))]
    elif hasattr(value, "modulus"):
        lines = head("field") + _field_lines(value)
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")
    return "\n".join(lines) + "\n"


def same_value(a, b):
    """Structural equality of two parsed values (used by round-trip tests)."""
    if type(a) is not type(b):
        return False
    if isinstance(a, Algebra):
        return a.same_as(b)
    if isinstance(a, HopfAlgebra):
        return (a.algebra.same_as(b.algebra) and np.array_equal(a.comul, b.comul)
                and np.array_equal(a.counit, b.counit) and np.array_equal(a.antipode, b.antipode))
    if isinstance(a, ComoduleAlgebra):
        return (a.algebra.same_as(b.algebra) and same_value(a.hopf, b.hopf)
                and np.array_equal(a.coaction, b.coaction))
    if isinstance(a, ModuleRep):
        return a.algebra.same_as(b.algebra) and np.array_equal(a.action, b.action)
    if isinstance(a, CrossedProductSpec):
        return (a.B.same_as(b.B) and np.array_equal(a.table, b.table)
                and np.array_equal(a.action, b.action) and np.array_equal(a.cocycle, b.cocycle))
    return a is b
