"""The acceptance suite: eleven criteria, each an exact pass/fail check.

Used by ``hopfk selftest`` and by ``tests/test_acceptance.py``.
"""

import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import tomli

from . import builtin, chop, formats, oracles
from .algcore.algebra import regular_module
from .algcore.structure import gldim, is_projective
from .errors import CartanNotInjective, HopfAxiomError, HopfkError, NotGalois
from .exactla import intmat
from .galois import (crossed_product, galois_check, in_category_C, verify_ind_res,
                     verify_ind_twist)
from .hopfcore import validate_hopf, twist
from .kzero import (PQ, cartan_analysis, cartan_matrix, find_pq, k0_class, minimal_m, pim_sum,
                    resolve_in_C, verify_cartan_bound)

FIXTURES = Path(__file__).parent / "fixtures"


class AcceptanceFailure(HopfkError):
    """At least one acceptance criterion failed."""


@dataclass
class Result:
    ident: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self):
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] criterion {self.ident:>2}: {self.title}: {self.detail} ({self.seconds:.2f}s)"


def _load(name):
    return formats.load(FIXTURES / name).value


def _ext(name):
    v = _load(name)
    if isinstance(v, formats.CrossedProductSpec):
        return crossed_product(v, name=name)
    if hasattr(v, "as_comodule_algebra"):
        return v.as_comodule_algebra
    return v


class _Checks:
    """Collects named boolean checks; the criterion passes when all of them hold."""

    def __init__(self):
        self.failed = []
        self.count = 0

    def __call__(self, ok, label):
        self.count += 1
        if not ok:
            self.failed.append(label)
        return ok

    def detail(self, extra=""):
        if self.failed:
            return "failed: " + "; ".join(self.failed[:4])
        if not self.count:
            return extra
        return f"{self.count} checks" + (f", {extra}" if extra else "")


# -- criteria ----------------------------------------------------------------

def c1_cartan(seed):
    ok = _Checks()
    f2c2 = _load("f2c2.hopf").algebra
    ok(cartan_matrix(f2c2, seed).C == [[2]], "F2[C2] Cartan != [[2]]")
    an = cartan_analysis(_load("f3s3.alg"), seed)
    ok(an.C == [[2, 1], [1, 2]], f"F3[S3] Cartan {an.C}")
    ok(an.invariant_factors == [1, 3], f"F3[S3] SNF {an.invariant_factors}")
    ok(cartan_matrix(_load("m2.alg"), seed).C == [[1]], "M2(F2) Cartan != identity")
    swap = _ext("b2xb2_swap.cross").algebra
    ok(cartan_matrix(swap, seed).C == [[1]], "swap crossed product Cartan != identity")
    an = cartan_analysis(_load("sweedler.hopf").algebra, seed)
    ok(an.C == [[1, 1], [1, 1]], f"H4 Cartan {an.C}")
    ok(an.kernel_rank == 1, f"H4 kernel rank {an.kernel_rank}")
    return ok


def c2_brauer(seed):
    ok = _Checks()
    for name in ("c2f2.group", "c3f3.group", "s3f3.group", "s3f2.group"):
        C = cartan_matrix(_load(name).algebra, seed).C
        ok(intmat.det(C) != 0, f"{name} det = 0")
    return ok


def _pq_by_chopping(H, pq, seed):
    """[P] - [Q] == m [1] recomputed from composition factors, independently of find_pq."""
    k = len(cartan_matrix(H.algebra, seed).C)
    P = pim_sum(H.algebra, PQ.counts(pq.P, k), seed)
    Q = pim_sum(H.algebra, PQ.counts(pq.Q, k), seed)
    lhs = np.array(chop.composition_factors(P, seed)) - np.array(chop.composition_factors(Q, seed))
    one = np.array(chop.composition_factors(H.trivial, seed))
    return np.array_equal(lhs, pq.m * one)


def c3_witnesses(seed):
    ok = _Checks()
    H = _load("f2c2.hopf")
    pq = find_pq(H, seed)
    ok(minimal_m(H, seed) == 2 and (pq.P, pq.Q) == ([0], []), f"F2[C2] m/P/Q {pq}")
    ok(_pq_by_chopping(H, pq, seed), "F2[C2] witness fails chopping")
    H = _load("f3s3.hopf")
    simples = chop.simple_modules(H.algebra, seed)
    triv = simples.index(H.trivial)
    sign = 1 - triv
    pq = find_pq(H, seed)
    ok(minimal_m(H, seed) == 3, "F3[S3] m != 3")
    ok((sorted(pq.P), pq.Q) == ([triv, triv], [sign]), f"F3[S3] P={pq.P} Q={pq.Q}")
    ok(_pq_by_chopping(H, pq, seed), "F3[S3] witness fails chopping")
    ok(minimal_m(_load("sweedler.hopf"), seed) is None, "H4 minimal m is not None")
    return ok


PASSING = (("f2c2.hopf", [2], None), ("ut2_c2.cross", [2, 2], 2), ("b2xb2_swap.cross", [], None))


def c4_cartan_bound(seed):
    ok = _Checks()
    for name, coker, snf_m in PASSING:
        r = verify_cartan_bound(_ext(name), seed=seed)
        ok(r.verdict == "PASS", f"{name} verdict {r.verdict}")
        ok(r.cartan_A.kernel_rank == 0, f"{name} kernel rank {r.cartan_A.kernel_rank}")
        ok(r.cartan_A.coker_torsion == coker, f"{name} coker {r.cartan_A.coker_torsion}")
        ok(all(r.m % f == 0 for f in r.cartan_A.coker_torsion), f"{name} factor does not divide m")
        if snf_m:
            ok(r.cartan_A.invariant_factors == [2, 2] and r.m == snf_m,
               f"{name} SNF {r.cartan_A.invariant_factors} m {r.m}")
    try:
        verify_cartan_bound(_ext("sweedler.hopf"), seed=seed)
        ok(False, "H4 self-extension passed")
    except CartanNotInjective:
        ok(True, "")
    from .cli import run
    code, _ = run(["verify-theorem", str(FIXTURES / "sweedler.hopf"), "--self"])
    ok(code == 1, f"CLI exit code {code} for H4")
    return ok


def c5_mechanism(seed):
    ok = _Checks()
    total = 0
    for name, _, _ in PASSING:
        CA = _ext(name)
        H = CA.hopf
        pq = find_pq(H, seed)
        k = len(cartan_matrix(H.algebra, seed).C)
        P = pim_sum(H.algebra, PQ.counts(pq.P, k), seed)
        Q = pim_sum(H.algebra, PQ.counts(pq.Q, k), seed)
        for i, R in enumerate(chop.pims(CA.algebra, seed)[1].pims):
            lhs = k0_class(twist(CA, R, P), seed) - k0_class(twist(CA, R, Q), seed)
            ok(lhs == pq.m * k0_class(R, seed), f"{name} PIM {i}")
            total += 1
    return ok, f"{total} PIMs"


def c6_galois(seed):
    ok = _Checks()
    for name in ("f2c2.hopf", "f3s3.hopf", "sweedler.hopf", "taft3_f4.hopf",
                 "b2xb2_swap.cross", "ut2_c2.cross"):
        try:
            galois_check(_ext(name))
            ok(True, "")
        except NotGalois as exc:
            ok(False, f"{name}: {exc}")
    try:
        galois_check(_load("f2c2_trivial.coalg"))
        ok(False, "trivial coaction certified Galois")
    except NotGalois:
        ok(True, "")
    return ok


EXTENSIONS = ("f2c2.hopf", "f3s3.hopf", "sweedler.hopf", "taft3_f4.hopf",
              "b2xb2_swap.cross", "ut2_c2.cross")


def c7_prop23(seed):
    ok = _Checks()
    pairs = 0
    for name in EXTENSIONS:
        ext = galois_check(_ext(name))
        for M in oracles.module_pieces(ext.A, seed):
            verify_ind_res(ext, M)
            pairs += 1
        Ns = [regular_module(ext.B)] + list(chop.simple_modules(ext.B, seed).simples)
        for N in Ns:
            for V in (ext.H.trivial, ext.H.regular):
                verify_ind_twist(ext, N, V)
                pairs += 1
    return ok, f"{pairs} certificates"


CLOSURE_EXTENSIONS = ("f2c2.hopf", "f3s3.hopf", "sweedler.hopf", "b2xb2_swap.cross",
                      "ut2_c2.cross")


def closure_suite(seed, per_extension=44):
    """Closure of C and P under twisting, on seeded random (M, V); returns (checks, hits)."""
    from ._random import stream
    ok = _Checks()
    hits = {"c": 0, "d": 0, "e": 0}
    for name in CLOSURE_EXTENSIONS:
        ext = galois_check(_ext(name))
        rng = stream(seed, f"closure:{name}")
        for _ in range(per_extension):
            M = oracles.random_module(ext.A, rng, seed=seed)
            V = oracles.random_module(ext.H.algebra, rng, seed=seed)
            T = twist(ext.CA, M, V)
            try:
                T.check()
                ok(T.dim == M.dim * V.dim, f"(b) {name} dim")
            except HopfkError as exc:
                ok(False, f"(b) {name}: {exc}")
            inC = in_category_C(ext, M, seed)
            if inC:
                hits["c"] += 1
                ok(in_category_C(ext, T, seed), f"(c) {name}")
            if is_projective(M, seed):
                hits["d"] += 1
                ok(is_projective(T, seed), f"(d) {name}")
            if inC and is_projective(V, seed):
                hits["e"] += 1
                ok(is_projective(T, seed), f"(e) {name}")
    return ok, hits


def c8_closure(seed):
    ok, hits = closure_suite(seed)
    pairs = 44 * len(CLOSURE_EXTENSIONS)
    ok(pairs >= 200, "fewer than 200 pairs")
    return ok, f"{pairs} pairs, antecedents c={hits['c']} d={hits['d']} e={hits['e']}"


def c9_resolution(seed):
    from ._random import stream
    ok = _Checks()
    ext = galois_check(_ext("ut2_c2.cross"))
    g = gldim(ext.B, seed=seed)
    rng = stream(seed, "resolution")
    modules = oracles.module_pieces(ext.A, seed)
    modules += [oracles.random_module(ext.A, rng, seed=seed) for _ in range(20)]
    for i, M in enumerate(modules):
        res = resolve_in_C(ext, M, seed=seed)
        ok(res.length <= g, f"module {i} length {res.length} > gldim {g}")
        ok(all(in_category_C(ext, T, seed) for T in res.terms[:-1]), f"module {i} term not in C")
        ok(res.check_exact(), f"module {i} not exact")
    return ok, f"{len(modules)} modules, gldim B = {g}"


def c10_oracles(seed):
    from ._random import stream
    ok = _Checks()
    rng = stream(seed, "intmat-oracle")
    for t in range(100):
        r, c = (int(x) for x in rng.integers(1, 7, size=2))
        m = rng.integers(-3, 4, size=(r, c)).tolist()
        v = rng.integers(-3, 4, size=c).tolist()
        ok(intmat.invariant_factors(m) == oracles.snf_diagonal(m), f"SNF matrix {t}")
        fast = intmat.lattice_min_multiple(m, v)
        fast = fast[0] if fast is not None and fast[0] <= 50 else None
        ok(fast == oracles.min_multiple_exhaustive(m, v, 50), f"lattice matrix {t}")
    rng = stream(seed, "jh-oracle")
    algebras = [_load(n).algebra for n in ("f2c2.hopf", "f3s3.hopf", "sweedler.hopf")]
    algebras += [_load("ut2.alg"), _ext("ut2_c2.cross").algebra]
    for t in range(50):
        A = algebras[t % len(algebras)]
        M = oracles.random_module(A, rng, seed=seed)
        a = sorted((S.dim, tuple(chop.composition_factors(S, seed))) for S in chop.chop(M, seed))
        b = sorted((S.dim, tuple(chop.composition_factors(S, seed))) for S in chop.chop(M, seed + 7919))
        ok(a == b, f"JH multiset differs across seeds on module {t}")
        ok(chop.composition_factors(M, seed) == chop.composition_factors(M, seed + 7919),
           f"composition factors differ across seeds on module {t}")
    return ok


def c11_axioms(seed):
    ok = _Checks()
    hopfs = [builtin.f2c2(), builtin.c3f3(), builtin.f3s3(), builtin.s3f2(), builtin.sweedler(),
             builtin.taft3_f4()]
    for H in hopfs:
        try:
            validate_hopf(H.algebra, H.comul, H.counit, H.antipode, name=H.name)
            ok(True, "")
        except HopfAxiomError as exc:
            ok(False, f"{H.name}: {exc}")
    manifest = tomli.loads((FIXTURES / "mutations" / "manifest.toml").read_text())
    per_base = {}
    for mut in manifest["mutation"]:
        per_base[mut["base"]] = per_base.get(mut["base"], 0) + 1
        try:
            formats.load(FIXTURES / "mutations" / mut["file"])
            ok(False, f"{mut['file']} accepted")
        except HopfAxiomError as exc:
            ok(type(exc).__name__ == mut["expect"],
               f"{mut['file']}: {type(exc).__name__} != {mut['expect']}")
    ok(per_base.get("f2c2.hopf", 0) >= 5 and per_base.get("sweedler.hopf", 0) >= 5,
       "fewer than 5 mutations per base")
    return ok, f"{sum(per_base.values())} mutations"


CRITERIA = [
    (1, "Cartan fixtures", c1_cartan),
    (2, "Brauer determinant", c2_brauer),
    (3, "m and (P, Q) witnesses", c3_witnesses),
    (4, "degree-0 Cartan bound", c4_cartan_bound),
    (5, "mechanism identity", c5_mechanism),
    (6, "Hopf-Galois certification", c6_galois),
    (7, "Ind/Res and twist isomorphisms", c7_prop23),
    (8, "twist closure suite", c8_closure),
    (9, "resolutions in C", c9_resolution),
    (10, "kernel oracles", c10_oracles),
    (11, "Hopf axiom validation", c11_axioms),
]


def run_criterion(ident, seed=0):
    _, title, fn = next(c for c in CRITERIA if c[0] == ident)
    start = time.perf_counter()
    try:
        out = fn(seed)
        checks, extra = out if isinstance(out, tuple) else (out, "")
        passed, detail = not checks.failed, checks.detail(extra)
    except Exception as exc:  # a crash is a failed criterion, reported as such
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return Result(ident, title, passed, detail, time.perf_counter() - start)


def run_all(seed=0):
    return [run_criterion(i, seed) for i, _, _ in CRITERIA]
