"""Command-line interface.

Exit codes: 0 when the command succeeds or the property holds, 1 when a
mathematical verdict fails (or a Hopf axiom fails under ``validate`` and
``hopf-check``), 2 on input errors.
"""

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import chop, formats
from .algcore.algebra import regular_module
from .algcore.structure import gldim, is_projective, radical
from .errors import HopfAxiomError, HopfkError, InputError, VerdictError
from .galois import (coinvariants, crossed_product, galois_check, induce, restrict,
                     verify_ind_res, verify_ind_twist)
from .hopfcore import HopfAlgebra, ComoduleAlgebra, twist
from .kzero import (cartan_analysis, cartan_matrix, find_pq, g0_class, k0_class, minimal_m,
                    resolve_in_C, verify_cartan_bound)

FIXTURE_DIR = Path(__file__).parent / "fixtures"


# -- inputs ------------------------------------------------------------------

class Inputs:
    """Loaded input files plus their digests, for the report."""

    def __init__(self):
        self.digests = {}

    def path(self, name):
        p = Path(name)
        if not p.exists() and (FIXTURE_DIR / p.name).exists():
            p = FIXTURE_DIR / p.name
        return p

    def load(self, name, expect=None):
        p = self.path(name)
        spec = formats.load(p, expect)
        self.digests[str(name)] = hashlib.sha256(p.read_bytes()).hexdigest()
        return spec


def _algebra(spec):
    v = spec.value
    if isinstance(v, HopfAlgebra):
        return v.algebra
    if isinstance(v, ComoduleAlgebra):
        return v.algebra
    if isinstance(v, formats.CrossedProductSpec):
        return _comodule(spec).algebra
    if isinstance(v, formats.ModuleRep):
        return v.algebra
    if isinstance(v, formats.Algebra):
        return v
    raise InputError(f"a {spec.kind} file does not define an algebra")


def _hopf(spec):
    v = spec.value
    if isinstance(v, HopfAlgebra):
        return v
    if isinstance(v, ComoduleAlgebra):
        return v.hopf
    if isinstance(v, formats.CrossedProductSpec):
        return _comodule(spec).hopf
    raise InputError(f"a {spec.kind} file does not define a Hopf algebra")


def _comodule(spec):
    v = spec.value
    if isinstance(v, ComoduleAlgebra):
        return v
    if isinstance(v, HopfAlgebra):
        return v.as_comodule_algebra
    if isinstance(v, formats.CrossedProductSpec):
        if not hasattr(spec, "_crossed"):
            spec._crossed = crossed_product(v, name=spec.name)
        return spec._crossed
    raise InputError(f"a {spec.kind} file does not define a comodule algebra")


def _module(inputs, selector, A, seed, hopf=None, what="module"):
    """regular | trivial | simple:i | pim:i | path to a module file."""
    if selector in (None, "regular"):
        return regular_module(A)
    if selector == "trivial":
        if hopf is None:
            raise InputError("'trivial' needs a Hopf algebra")
        return hopf.trivial
    for prefix in ("simple:", "pim:"):
        if selector.startswith(prefix):
            try:
                i = int(selector[len(prefix):])
            except ValueError:
                raise InputError(f"bad {what} selector {selector!r}") from None
            simples, pl = chop.pims(A, seed)
            items = simples.simples if prefix == "simple:" else pl.pims
            if not 0 <= i < len(items):
                raise InputError(f"{what} index {i} out of range (there are {len(items)})")
            return items[i]
    M = inputs.load(selector, expect=("module",)).value
    if not M.algebra.same_as(A):
        raise InputError(f"{what} file is over a different algebra")
    return M


def _mat(F, a):
    a = np.asarray(a)
    if F.e == 1:
        return a.tolist()
    return [_mat(F, x) for x in a] if a.ndim > 1 else [F.to_plain(x) for x in a]


# -- commands ----------------------------------------------------------------

def cmd_validate(args, inputs):
    spec = inputs.load(args.file)
    out = {"kind": spec.kind, "name": spec.name, "valid": True}
    if spec.kind == "field":
        out["order"] = spec.value.q
    elif spec.kind == "module":
        out["dim"] = spec.value.dim
    elif spec.kind == "crossed-product":
        out["dim"] = _comodule(spec).algebra.dim
    else:
        out["dim"] = _algebra(spec).dim
    return out


def cmd_chop(args, inputs):
    spec = inputs.load(args.file)
    A = _algebra(spec)
    M = _module(inputs, args.module, A, args.seed, _hopf_or_none(spec))
    simples = chop.simple_modules(A, args.seed)
    return {"module_dim": M.dim, "simple_dims": [S.dim for S in simples.simples],
            "composition_factors": chop.composition_factors(M, args.seed)}


def _hopf_or_none(spec):
    try:
        return _hopf(spec)
    except InputError:
        return None


def cmd_pims(args, inputs):
    A = _algebra(inputs.load(args.file))
    simples, pl = chop.pims(A, args.seed)
    return {"simple_dims": [S.dim for S in simples.simples], "endo_dims": simples.endo_dims,
            "pim_dims": [P.dim for P in pl.pims], "multiplicities": pl.multiplicities,
            "idempotents": _mat(A.field, pl.idempotents),
            "radical_dim": int(radical(A, args.seed).shape[0])}


def _analysis(an):
    return {"C": an.C, "snf": an.invariant_factors, "det": an.det, "kernel_rank": an.kernel_rank,
            "coker_torsion": an.coker_torsion, "coker_free_rank": an.coker_free_rank,
            "injective": an.injective}


def cmd_cartan(args, inputs):
    A = _algebra(inputs.load(args.file))
    return _analysis(cartan_analysis(A, args.seed))


def cmd_k0_class(args, inputs):
    spec = inputs.load(args.file)
    A = _algebra(spec)
    M = _module(inputs, args.module, A, args.seed, _hopf_or_none(spec))
    return {"module_dim": M.dim, "k0_class": list(k0_class(M, args.seed).coeffs)}


def cmd_g0_class(args, inputs):
    spec = inputs.load(args.file)
    A = _algebra(spec)
    M = _module(inputs, args.module, A, args.seed, _hopf_or_none(spec))
    return {"module_dim": M.dim, "g0_class": list(g0_class(M, args.seed).coeffs)}


def cmd_minimal_m(args, inputs):
    H = _hopf(inputs.load(args.file))
    return {"C": cartan_matrix(H.algebra, args.seed).C, "minimal_m": minimal_m(H, args.seed)}


def cmd_find_pq(args, inputs):
    H = _hopf(inputs.load(args.file))
    pq = find_pq(H, args.seed)
    return {"m": pq.m, "P": pq.P, "Q": pq.Q, "coefficients": pq.coeffs}


def cmd_hopf_check(args, inputs):
    H = _hopf(inputs.load(args.file, expect=("hopf", "group")))
    F = H.field
    Si = H.antipode_inverse
    order, S = 1, H.antipode
    while not np.array_equal(S, F.identity(H.dim)):
        S = F.matmul(S, H.antipode)
        order += 1
    return {"dim": H.dim, "axioms": "ok", "antipode_order": order,
            "antipode_inverse": _mat(F, Si.T)}


def cmd_galois_check(args, inputs):
    ext = galois_check(_comodule(inputs.load(args.file)))
    return {"galois": True, "dim_A": ext.A.dim, "dim_H": ext.H.dim, "dim_B": ext.B.dim,
            "dim_A_tensor_B_A": ext.tensor.dim, "A_projective_over_B": True}


def cmd_coinvariants(args, inputs):
    CA = _comodule(inputs.load(args.file))
    co = coinvariants(CA)
    return {"dim_B": co.algebra.dim, "basis": _mat(CA.field, co.basis)}


def cmd_twist(args, inputs):
    CA = _comodule(inputs.load(args.file))
    M = _module(inputs, args.module, CA.algebra, args.seed, _hopf_or_none_ca(CA))
    V = _module(inputs, args.hopf_module, CA.hopf.algebra, args.seed, CA.hopf, "Hopf module")
    T = twist(CA, M, V)
    return {"dim": T.dim, "g0_class": list(g0_class(T, args.seed).coeffs),
            "projective": is_projective(T, args.seed)}


def _hopf_or_none_ca(CA):
    return CA.hopf if CA.algebra is CA.hopf.algebra else None


def cmd_induce(args, inputs):
    ext = galois_check(_comodule(inputs.load(args.file)))
    N = _module(inputs, args.module, ext.B, args.seed, what="B-module")
    M = induce(ext, N)
    return {"dim_N": N.dim, "dim": M.dim, "g0_class": list(g0_class(M, args.seed).coeffs)}


def cmd_restrict(args, inputs):
    CA = _comodule(inputs.load(args.file))
    ext = galois_check(CA)
    M = _module(inputs, args.module, ext.A, args.seed, _hopf_or_none_ca(CA))
    R = restrict(ext, M)
    return {"dim": R.dim, "g0_class": list(g0_class(R, args.seed).coeffs),
            "projective": is_projective(R, args.seed)}


def _module_family(ext, seed):
    simples, pl = chop.pims(ext.A, seed)
    fam = [(f"simple:{i}", S) for i, S in enumerate(simples.simples)]
    fam += [(f"pim:{i}", P) for i, P in enumerate(pl.pims)]
    return fam + [("regular", regular_module(ext.A))]


def cmd_verify_prop_a(args, inputs):
    CA = _comodule(inputs.load(args.file))
    ext = galois_check(CA)
    if args.module:
        fam = [(args.module, _module(inputs, args.module, ext.A, args.seed, _hopf_or_none_ca(CA)))]
    else:
        fam = _module_family(ext, args.seed)
    out = []
    for label, M in fam:
        cert = verify_ind_res(ext, M)
        out.append({"module": label, "dim": M.dim, "dim_ind_res": cert.source.dim,
                    "dim_M_tensor_H": cert.target.dim, "iso": True})
    return {"certificates": out}


def cmd_verify_prop_b(args, inputs):
    ext = galois_check(_comodule(inputs.load(args.file)))
    H = ext.H
    if args.module:
        Ns = [(args.module, _module(inputs, args.module, ext.B, args.seed, what="B-module"))]
    else:
        simples = chop.simple_modules(ext.B, args.seed)
        Ns = [("regular", regular_module(ext.B))]
        Ns += [(f"simple:{i}", S) for i, S in enumerate(simples.simples)]
    if args.hopf_module:
        Vs = [(args.hopf_module, _module(inputs, args.hopf_module, H.algebra, args.seed, H,
                                         "Hopf module"))]
    else:
        Vs = [("trivial", H.trivial), ("regular", H.regular)]
    out = []
    for nl, N in Ns:
        for vl, V in Vs:
            cert = verify_ind_twist(ext, N, V)
            out.append({"N": nl, "V": vl, "dim": cert.source.dim, "phi_psi_identity": True})
    return {"certificates": out}


def cmd_crossed(args, inputs):
    spec = inputs.load(args.file, expect=("crossed-product",))
    CA = _comodule(spec)
    A = CA.algebra
    ext = galois_check(CA)
    simples = chop.simple_modules(A, args.seed)
    out = {"dim": A.dim, "radical_dim": int(radical(A, args.seed).shape[0]),
           "simple_dims": [S.dim for S in simples.simples], "dim_B": ext.B.dim, "galois": True}
    if args.output:
        Path(args.output).write_text(formats.dumps(A, spec.name), encoding="utf-8")
        out["written"] = str(args.output)
    return out


def cmd_resolve(args, inputs):
    CA = _comodule(inputs.load(args.file))
    ext = galois_check(CA)
    M = _module(inputs, args.module, ext.A, args.seed, _hopf_or_none_ca(CA))
    res = resolve_in_C(ext, M, args.bound, args.seed)
    return {"length": res.length, "term_dims": [T.dim for T in res.terms],
            "gldim_B": gldim(ext.B, args.bound, args.seed), "exact": True, "in_C": res.in_C}


def cmd_verify_theorem(args, inputs):
    spec = inputs.load(args.file)
    if args.self_ext and not isinstance(spec.value, HopfAlgebra):
        raise InputError("--self needs a Hopf algebra file")
    CA = _comodule(spec)
    H = CA.hopf
    if args.hopf:
        given = _hopf(inputs.load(args.hopf, expect=("hopf", "group")))
        if not formats.same_value(given, H):
            raise InputError("the --hopf file does not match the Hopf algebra of the coaction")
    r = verify_cartan_bound(CA, H, args.bound, args.seed)
    return {"verdict": r.verdict, "m": r.m, "P": r.P, "Q": r.Q, "gldim_B": r.gldim_B,
            "cartan_H": _analysis(r.cartan_H), "cartan_A": _analysis(r.cartan_A),
            "coker": r.cartan_A.coker_torsion,
            "mechanism": [{"k0_R": list(a), "k0_RP_minus_RQ": list(b)} for a, b in r.mechanism]}


def cmd_selftest(args, inputs):
    from . import acceptance
    results = acceptance.run_all(seed=args.seed)
    for r in results:
        print(r.line())
    if not all(r.passed for r in results):
        raise acceptance.AcceptanceFailure(f"{sum(not r.passed for r in results)} criteria failed")
    return {"criteria": [{"id": r.ident, "passed": r.passed} for r in results]}


COMMANDS = {
    "validate": (cmd_validate, "parse and validate any input file", ()),
    "chop": (cmd_chop, "composition factors of a module", ("module",)),
    "pims": (cmd_pims, "simple modules and projective indecomposables", ()),
    "cartan": (cmd_cartan, "Cartan matrix with its Smith form analysis", ()),
    "k0-class": (cmd_k0_class, "K0 class of a projective module", ("module",)),
    "g0-class": (cmd_g0_class, "G0 class of a module", ("module",)),
    "minimal-m": (cmd_minimal_m, "least m with m[1] in the Cartan image", ()),
    "find-pq": (cmd_find_pq, "projectives P, Q with [P] - [Q] = m[1]", ()),
    "hopf-check": (cmd_hopf_check, "Hopf axioms and the antipode inverse", ()),
    "galois-check": (cmd_galois_check, "Hopf-Galois certification", ()),
    "coinvariants": (cmd_coinvariants, "basis of the coinvariant subalgebra", ()),
    "twist": (cmd_twist, "the twisted module M (x) V", ("module", "hopf_module")),
    "induce": (cmd_induce, "induce a module of the coinvariants", ("module",)),
    "restrict": (cmd_restrict, "restrict a module to the coinvariants", ("module",)),
    "verify-prop-a": (cmd_verify_prop_a, "certify Ind Res M = M (x) H", ("module",)),
    "verify-prop-b": (cmd_verify_prop_b, "certify Ind(N (x) V) = Ind(N) (x) V",
                      ("module", "hopf_module")),
    "crossed": (cmd_crossed, "build a crossed product", ("output",)),
    "resolve": (cmd_resolve, "finite resolution by modules with projective restriction",
                ("module",)),
    "verify-theorem": (cmd_verify_theorem, "certify the degree-0 Cartan bound",
                       ("hopf", "self")),
    "selftest": (cmd_selftest, "run the acceptance suite", ()),
}


def _count(lo):
    def parse(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be at least {lo}")
        return v
    return parse


def _common(defaults=True):
    # subcommand copies use SUPPRESS so they do not overwrite flags given before the subcommand
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_count(0), default=d(0),
                        help="seed for randomized steps (default 0)")
    common.add_argument("--json", action="store_true", default=d(False),
                        help="print a machine-readable report")
    common.add_argument("--bound", type=_count(1), default=d(None),
                        help="iteration bound for global dimension (default 2 dim)")
    return common


def build_parser():
    parser = argparse.ArgumentParser(prog="hopfk", parents=[_common()],
                                     description="Exact Cartan maps and Hopf-Galois checks over finite fields.")
    common = _common(defaults=False)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text, extras) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, parents=[common])
        if name != "selftest":
            p.add_argument("file", help="input file")
        if "module" in extras:
            p.add_argument("--module", default=None,
                           help="regular, trivial, simple:i, pim:i or a module file")
        if "hopf_module" in extras:
            p.add_argument("--hopf-module", default=None, help="module of the Hopf algebra")
        if "output" in extras:
            p.add_argument("--output", default=None, help="write the algebra to this file")
        if "hopf" in extras:
            p.add_argument("--hopf", default=None, help="Hopf algebra file to check against")
        if "self" in extras:
            p.add_argument("--self", dest="self_ext", action="store_true",
                           help="use a Hopf algebra as an extension of the ground field")
    return parser


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    return x


def _print_human(report):
    res = report["results"]
    head = f"hopfk {report['command']}"
    print(head)
    for key, val in res.items():
        if isinstance(val, list) and val and isinstance(val[0], dict):
            print(f"  {key}:")
            for item in val:
                print("    " + ", ".join(f"{k}={v}" for k, v in item.items()))
        elif isinstance(val, dict):
            print(f"  {key}:")
            for k, v in val.items():
                print(f"    {k}: {v}")
        else:
            print(f"  {key}: {val}")


def run(argv=None):
    """Run one command; returns ``(exit_code, report)``."""
    return _execute(build_parser().parse_args(argv), argv)


def _execute(args, argv):
    inputs = Inputs()
    fn = COMMANDS[args.command][0]
    start = time.perf_counter()
    report = {"command": args.command, "argv": list(argv if argv is not None else sys.argv[1:]),
              "seed": args.seed}
    try:
        results = fn(args, inputs)
        code = 0
        report["status"] = "PASS"
    except HopfAxiomError as exc:
        code = 1 if args.command in ("validate", "hopf-check") else 2
        results = {"error": type(exc).__name__, "message": str(exc)}
        report["status"] = "FAIL" if code == 1 else "INPUT-ERROR"
    except InputError as exc:
        code = 2
        results = {"error": type(exc).__name__, "message": str(exc)}
        report["status"] = "INPUT-ERROR"
    except (VerdictError, HopfkError) as exc:
        code = 1
        results = {"error": type(exc).__name__, "message": str(exc)}
        if getattr(exc, "defect", None) is not None:
            results["defect"] = exc.defect
        report["status"] = "FAIL"
    report["inputs"] = inputs.digests
    report["results"] = _jsonable(results)
    report["timing"] = {"seconds": round(time.perf_counter() - start, 4)}
    return code, report


def main(argv=None):
    args = build_parser().parse_args(argv)
    code, report = _execute(args, argv)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        if report["status"] != "PASS":
            res = report["results"]
            print(f"hopfk {report['command']}: {report['status']}: {res['error']}: {res['message']}",
                  file=sys.stderr)
        else:
            _print_human(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
