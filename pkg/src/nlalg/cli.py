"""Batch front end: problem files in, deterministic JSON reports out.

A problem file looks like::

    {
      "nfield": ["GF(2)", "GF(5)"],
      "objects": {
        "A": {"type": "matrix", "components": {"1": [["1", "0"], ["1", "1"]],
                                               "2": [["0", "4"], ["1", "0"]]}}
      },
      "command": {"name": "charpoly", "args": ["A"]}
    }

Exit codes: 0 success (warnings included), 1 domain error, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from . import forms, oracles
from .errors import (
    FactorizationIncomplete,
    InvalidField,
    NeedsFactorization,
    NLAlgError,
    ParseError,
    SplitFailure,
    UndefinedName,
    UnknownField,
)
from .factor import factor, roots_in_field
from .fields import (
    FieldDescriptor,
    NField,
    classify_characteristic,
    classify_primeness,
    format_element,
    parse_element,
    parse_field,
    validate_nfield,
)
from .linalg import Matrix, Subspace
from .operators import (
    charpoly,
    conductor,
    diagonalize,
    dn_decomposition,
    eigen,
    invariant_factors,
    jordan_blocks,
    minpoly,
    primary_decomposition,
    rational_form,
    similar,
)
from .poly import Poly, format_poly, gcd_bezout, lagrange_interpolate, parse_poly, taylor_expand

SCHEMA_VERSION = "nlalg-report/1"
OBJECT_TYPES = ("matrix", "poly", "vector", "vectors", "subspace", "scalar", "points")
USAGE_ERRORS = (ParseError, UnknownField, UndefinedName)
WARNING_ERRORS = (SplitFailure, NeedsFactorization, FactorizationIncomplete)


# -- problem files ----------------------------------------------------------------------

@dataclass
class ProblemFile:
    nfield: NField
    objects: dict[str, tuple[str, tuple]]  # name -> (type, per-component values)
    command: str
    args: list[str]
    options: dict = field(default_factory=dict)

    def get(self, name: str, *types: str) -> tuple:
        if name not in self.objects:
            raise UndefinedName(f"undefined name {name!r}")
        kind, values = self.objects[name]
        if types and kind not in types:
            raise ParseError(f"{name!r} is a {kind}, expected {' or '.join(types)}")
        return values


def _line_of(text: str, token: str) -> int | None:
    for k, line in enumerate(text.splitlines(), 1):
        if f'"{token}"' in line:
            return k
    return None


def _elem(x, F: FieldDescriptor):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"element literal must be a string or integer, got {x!r}")
    return parse_element(str(x), F)


def _vector(v, F):
    if not isinstance(v, list):
        raise ParseError(f"vector literal must be a list, got {v!r}")
    return tuple(_elem(x, F) for x in v)


def _parse_value(kind: str, raw, F: FieldDescriptor):
    if kind == "matrix":
        if not isinstance(raw, list) or not raw or not all(isinstance(r, list) for r in raw):
            raise ParseError("matrix literal must be a non-empty list of rows")
        if len({len(r) for r in raw}) != 1:
            raise ParseError("matrix rows have different lengths")
        return Matrix(F, [[_elem(x, F) for x in r] for r in raw])
    if kind == "poly":
        if not isinstance(raw, (str, int)):
            raise ParseError("polynomial literal must be a string")
        return parse_poly(str(raw), F)
    if kind == "vector":
        return _vector(raw, F)
    if kind in ("vectors", "subspace"):
        if not isinstance(raw, list):
            raise ParseError(f"{kind} literal must be a list of vectors")
        vecs = [_vector(v, F) for v in raw]
        if len({len(v) for v in vecs}) > 1:
            raise ParseError("vectors have different lengths")
        return vecs
    if kind == "scalar":
        return _elem(raw, F)
    if kind == "points":
        if not isinstance(raw, list) or not all(isinstance(p, list) and len(p) == 2 for p in raw):
            raise ParseError("points literal must be a list of [t, value] pairs")
        return [(_elem(t, F), _elem(y, F)) for t, y in raw]
    raise ParseError(f"unknown object type {kind!r}")


def parse_problem(source: str | Path) -> ProblemFile:
    """Parse and fully validate a problem file given as a path or JSON text."""
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc.strerror}") from exc
    else:
        text = source
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from exc
    if not isinstance(doc, dict):
        raise ParseError("problem file must be a JSON object", 1)
    extra = set(doc) - {"schema", "description", "nfield", "objects", "command"}
    if extra:
        key = sorted(extra)[0]
        raise ParseError(f"unknown top-level key {key!r}", _line_of(text, key))

    lits = doc.get("nfield")
    if not isinstance(lits, list) or not all(isinstance(s, str) for s in lits):
        raise ParseError("'nfield' must be a list of field literals", _line_of(text, "nfield"))
    comps = []
    for s in lits:
        try:
            comps.append(parse_field(s))
        except (ParseError, InvalidField) as exc:
            raise UnknownField(f"{s!r}: {exc}") from exc
    nf = validate_nfield(comps)

    objects = {}
    raw_objects = doc.get("objects", {})
    if not isinstance(raw_objects, dict):
        raise ParseError("'objects' must be a mapping", _line_of(text, "objects"))
    for name, decl in raw_objects.items():
        line = _line_of(text, name)
        if not isinstance(decl, dict) or "type" not in decl or "components" not in decl:
            raise ParseError(f"object {name!r} needs 'type' and 'components'", line)
        kind, values = decl["type"], decl["components"]
        if kind not in OBJECT_TYPES:
            raise ParseError(f"object {name!r}: unknown type {kind!r}", line)
        if not isinstance(values, dict) or sorted(values) != sorted(str(i) for i in range(1, nf.n + 1)):
            raise ParseError(f"object {name!r} must give components '1'..'{nf.n}'", line)
        try:
            parsed = tuple(_parse_value(kind, values[str(i + 1)], F) for i, F in enumerate(nf))
        except ParseError as exc:
            raise ParseError(f"object {name!r}: {exc.message}", line) from exc
        except NLAlgError as exc:
            raise ParseError(f"object {name!r}: {exc}", line) from exc
        objects[name] = (kind, parsed)

    cmd = doc.get("command")
    if not isinstance(cmd, dict) or not isinstance(cmd.get("name"), str):
        raise ParseError("'command' must be an object with a 'name'", _line_of(text, "command"))
    args = cmd.get("args", [])
    options = cmd.get("options", {})
    if not isinstance(args, list) or not all(isinstance(a, str) for a in args):
        raise ParseError("command 'args' must be a list of names", _line_of(text, "args"))
    if not isinstance(options, dict):
        raise ParseError("command 'options' must be a mapping", _line_of(text, "options"))
    name = cmd["name"]
    if name == "canon":
        if not args or args[0] not in CANON_FORMS:
            raise ParseError(f"canon needs a form ({'|'.join(CANON_FORMS)}) as first argument",
                             _line_of(text, "args"))
    elif name not in COMMANDS:
        raise ParseError(f"unknown command {name!r}", _line_of(text, "name"))
    problem = ProblemFile(nf, objects, name, list(args), dict(options))
    for a in _object_args(problem):
        if a not in objects:
            raise UndefinedName(f"undefined name {a!r}")
    return problem


def _object_args(p: ProblemFile) -> list[str]:
    return p.args[1:] if p.command == "canon" else p.args


# -- serialization ---------------------------------------------------------------------

def s_elem(a) -> str:
    return format_element(a)


def s_poly(f: Poly) -> str:
    return format_poly(f, "x")


def s_vec(v) -> list[str]:
    return [s_elem(a) for a in v]


def s_mat(M: Matrix | None):
    return None if M is None else [s_vec(r) for r in M.rows]


def _error_obj(exc: NLAlgError) -> dict:
    return {"code": exc.code, "message": str(exc), "details": exc.details()}


# -- commands ---------------------------------------------------------------------------

class Warn(Exception):
    """A partial result together with a warning that does not fail the run."""

    def __init__(self, result: dict, warning: str):
        self.result = result
        self.warning = warning


def _optional(p: ProblemFile, pos: int, *types):
    args = _object_args(p)
    return p.get(args[pos], *types) if len(args) > pos else None


def _need(p: ProblemFile, count: int):
    args = _object_args(p)
    if len(args) < count:
        raise ParseError(f"{p.command} needs at least {count} argument(s)")


def _space(F, n, gram):
    return forms.InnerProductSpace(F, n, gram)


def _cmd_charpoly(p, i):
    return {"charpoly": s_poly(charpoly(p.get(p.args[0], "matrix")[i]))}


def _cmd_minpoly(p, i):
    return {"minpoly": s_poly(minpoly(p.get(p.args[0], "matrix")[i]))}


def _canon_rational(A):
    rf = rational_form(A, with_transition=True)
    return {"invariant_factors": [s_poly(f) for f in rf.invariant_factors],
            "form": s_mat(rf.form), "transition": s_mat(rf.transition)}


def _split_partial(A, exc: SplitFailure):
    return Warn({"charpoly": s_poly(charpoly(A)), "minpoly": s_poly(minpoly(A)),
                 "invariant_factors": [s_poly(f) for f in invariant_factors(A)],
                 "non_split_factor": s_poly(exc.factor)},
                f"SplitFailure: {s_poly(exc.factor)} does not split")


def _canon_jordan(A):
    try:
        jf = jordan_blocks(A)
    except SplitFailure as exc:
        raise _split_partial(A, exc)
    return {"blocks": [{"eigenvalue": s_elem(c), "size": k} for c, k in jf.blocks],
            "form": s_mat(jf.matrix(A.field))}


def _canon_primary(A):
    try:
        comps = primary_decomposition(A)
    except NeedsFactorization:
        fz = factor(minpoly(A))
        raise Warn({"minpoly": s_poly(minpoly(A)), "partial_factorization": str(fz)},
                   "FactorizationIncomplete: minimal polynomial not fully factored")
    return {"components": [{"prime": s_poly(c.prime), "exponent": c.exponent,
                             "basis": [s_vec(v) for v in c.basis],
                             "projection": s_mat(c.projection), "poly": s_poly(c.poly)}
                            for c in comps]}


def _canon_dn(A):
    try:
        dn = dn_decomposition(A)
    except SplitFailure as exc:
        raise _split_partial(A, exc)
    return {"D": s_mat(dn.D), "N": s_mat(dn.N), "d_poly": s_poly(dn.d_poly), "n_poly": s_poly(dn.n_poly)}


CANON_FORMS: dict[str, Callable] = {
    "rational": _canon_rational,
    "jordan": _canon_jordan,
    "primary": _canon_primary,
    "dn": _canon_dn,
}


def _cmd_canon(p, i):
    _need(p, 1)
    form = p.args[0] if p.command == "canon" else p.command
    return CANON_FORMS[form](p.get(_object_args(p)[0], "matrix")[i])


def _cmd_diagonalize(p, i):
    d = diagonalize(p.get(p.args[0], "matrix")[i])
    return {"diagonalizable": d.diagonalizable, "P": s_mat(d.P), "D": s_mat(d.D)}


def _cmd_eigen(p, i):
    return {"eigenvalues": [{"value": s_elem(e.value), "algebraic_multiplicity": e.algebraic_multiplicity,
                             "geometric_multiplicity": len(e.eigenspace),
                             "eigenspace": [s_vec(v) for v in e.eigenspace]}
                            for e in eigen(p.get(p.args[0], "matrix")[i])]}


def _cmd_similar(p, i):
    _need(p, 2)
    A, B = p.get(p.args[0], "matrix")[i], p.get(p.args[1], "matrix")[i]
    return {"similar": similar(A, B),
            "invariant_factors": [[s_poly(f) for f in invariant_factors(M)] for M in (A, B)]}


def _cmd_annihilator(p, i):
    kind = p.objects.get(p.args[0], ("",))[0]
    if kind == "matrix":
        _need(p, 2)
        A = p.get(p.args[0], "matrix")[i]
        c = conductor(A, p.get(p.args[1], "vector")[i])
        return {"t_annihilator": s_poly(c.poly), "cyclic_basis": [s_vec(v) for v in c.cyclic_basis]}
    vecs = p.get(p.args[0], "subspace", "vectors")[i]
    F = p.nfield[i]
    n = len(vecs[0]) if vecs else int(p.options.get("ambient", 0))
    ann = Subspace(F, n, vecs).annihilator()
    return {"dimension": ann.dim, "basis": [s_vec(v) for v in ann.basis]}


def _cmd_conductor(p, i):
    _need(p, 3)
    A = p.get(p.args[0], "matrix")[i]
    alpha = p.get(p.args[1], "vector")[i]
    W = Subspace(A.field, A.nrows, p.get(p.args[2], "subspace", "vectors")[i])
    c = conductor(A, alpha, W)
    return {"conductor": s_poly(c.poly)}


def _cmd_gram_schmidt(p, i):
    vecs = p.get(p.args[0], "vectors", "subspace")[i]
    F = p.nfield[i]
    G = _optional(p, 1, "matrix")
    sp = _space(F, len(vecs[0]), G[i] if G else None)
    out = forms.gram_schmidt(vecs, sp)
    return {"orthogonal": [s_vec(v) for v in out], "norms2": [s_elem(sp.norm2(v)) for v in out]}


def _cmd_project(p, i):
    _need(p, 2)
    beta = p.get(p.args[0], "vector")[i]
    W = p.get(p.args[1], "subspace", "vectors")[i]
    G = _optional(p, 2, "matrix")
    sp = _space(p.nfield[i], len(beta), G[i] if G else None)
    a = forms.best_approx(beta, W, sp)
    return {"projection": s_vec(a), "residual": s_vec(tuple(b - x for b, x in zip(beta, a)))}


def _cmd_adjoint(p, i):
    A = p.get(p.args[0], "matrix")[i]
    G = _optional(p, 1, "matrix")
    sp = _space(A.field, A.nrows, G[i] if G else None)
    return {"adjoint": s_mat(forms.adjoint(A, sp)), "self_adjoint": forms.is_self_adjoint(A, sp),
            "normal": forms.is_normal(A, sp)}


def _cmd_spectral(p, i):
    A = p.get(p.args[0], "matrix")[i]
    G = _optional(p, 1, "matrix")
    sp = _space(A.field, A.nrows, G[i] if G else None)
    try:
        res = forms.spectral_resolution(A, sp)
    except SplitFailure as exc:
        raise _split_partial(A, exc)
    return {"values": [s_elem(c) for c in res.values], "projections": [s_mat(E) for E in res.projections],
            "polys": [s_poly(e) for e in res.polys]}


def _cmd_bilinear_diag(p, i):
    M = p.get(p.args[0], "matrix")[i]
    P, D = forms.symmetric_diagonalize(M)
    out = {"P": s_mat(P), "D": s_mat(D), "rank": D.rank()}
    if M.field.is_ordered:
        out["signature"] = list(forms.signature(D))
    return out


def _cmd_interpolate(p, i):
    pts = p.get(p.args[0], "points")[i]
    F = p.nfield[i]
    f = lagrange_interpolate(F, [t for t, _ in pts], [y for _, y in pts])
    return {"poly": s_poly(f)}


def _cmd_factor(p, i):
    fz = factor(p.get(p.args[0], "poly")[i])
    out = {"unit": s_elem(fz.unit),
           "factors": [{"poly": s_poly(f.poly), "multiplicity": f.multiplicity, "certified": f.certified}
                       for f in fz.factors],
           "complete": fz.complete}
    if not fz.complete:
        raise Warn(out, "FactorizationIncomplete: some factors are not certified irreducible")
    return out


def _cmd_gcd(p, i):
    _need(p, 2)
    d, u, v = gcd_bezout(p.get(p.args[0], "poly")[i], p.get(p.args[1], "poly")[i])
    return {"gcd": s_poly(d), "u": s_poly(u), "v": s_poly(v)}


def _cmd_taylor(p, i):
    _need(p, 2)
    f = p.get(p.args[0], "poly")[i]
    c = p.get(p.args[1], "scalar")[i]
    return {"center": s_elem(c), "coefficients": [s_elem(a) for a in taylor_expand(f, c)]}


def _cmd_classify(p, i):
    F = p.nfield[i]
    prim = classify_primeness((F, F))
    return {"characteristic": F.characteristic, "prime_field": F.is_prime_field,
            "proper_subfields": [G.literal for G in prim.proper_subfields[0]]}


COMMANDS: dict[str, Callable] = {
    "charpoly": _cmd_charpoly,
    "minpoly": _cmd_minpoly,
    "canon": _cmd_canon,
    "rational": _cmd_canon,
    "jordan": _cmd_canon,
    "primary": _cmd_canon,
    "dn": _cmd_canon,
    "diagonalize": _cmd_diagonalize,
    "eigen": _cmd_eigen,
    "similar": _cmd_similar,
    "annihilator": _cmd_annihilator,
    "conductor": _cmd_conductor,
    "gram-schmidt": _cmd_gram_schmidt,
    "project": _cmd_project,
    "adjoint": _cmd_adjoint,
    "spectral": _cmd_spectral,
    "bilinear-diag": _cmd_bilinear_diag,
    "interpolate": _cmd_interpolate,
    "factor": _cmd_factor,
    "gcd": _cmd_gcd,
    "taylor": _cmd_taylor,
    "nfield-classify": _cmd_classify,
}
NO_ARG_COMMANDS = {"nfield-classify"}


def _summary(p: ProblemFile, comps: list[dict]) -> dict:
    statuses = [c["status"] for c in comps]
    out: dict[str, Any] = {"ok": statuses.count("ok"), "warning": statuses.count("warning"),
                           "error": statuses.count("error")}
    if p.command == "nfield-classify":
        ch = classify_characteristic(p.nfield)
        pr = classify_primeness(p.nfield)
        out["characteristic"] = ch.kind
        out["primeness"] = pr.kind
        out["quasi_subfield"] = [{"component": k, "field": G.literal} for k, G in pr.quasi_subfield]
    elif p.command == "similar":
        out["similar"] = all(c.get("result", {}).get("similar", False) for c in comps)
    return out


@dataclass
class Report:
    document: dict
    exit_code: int

    def dumps(self, pretty: bool = False) -> str:
        if pretty:
            return json.dumps(self.document, indent=2, ensure_ascii=False) + "\n"
        return json.dumps(self.document, separators=(",", ":"), ensure_ascii=False) + "\n"


def run_command(p: ProblemFile) -> Report:
    fn = COMMANDS[p.command]
    if p.command not in NO_ARG_COMMANDS:
        try:
            _need(p, 1)
        except ParseError as exc:
            return error_report(exc, 2)
    comps, warnings = [], []
    for i, F in enumerate(p.nfield):
        entry: dict[str, Any] = {"index": i + 1, "field": F.literal}
        try:
            entry["status"] = "ok"
            entry["result"] = fn(p, i)
        except Warn as w:
            entry["status"] = "warning"
            entry["result"] = w.result
            entry["warning"] = w.warning
            warnings.append(f"component {i + 1}: {w.warning}")
        except USAGE_ERRORS as exc:
            return error_report(exc, 2)
        except NLAlgError as exc:
            entry["status"] = "error"
            entry["error"] = _error_obj(exc)
        comps.append(entry)
    exit_code = 1 if any(c["status"] == "error" for c in comps) else 0
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": {"name": p.command, "args": p.args, "options": p.options},
        "nfield": [F.literal for F in p.nfield],
        "components": comps,
        "summary": _summary(p, comps),
        "warnings": warnings,
        "exit": exit_code,
    }
    return Report(doc, exit_code)


def error_report(exc: NLAlgError, exit_code: int | None = None) -> Report:
    if exit_code is None:
        exit_code = 2 if isinstance(exc, USAGE_ERRORS) else 1
    err = _error_obj(exc)
    if isinstance(exc, ParseError):
        err["line"] = exc.line
    return Report({"schema_version": SCHEMA_VERSION, "error": err, "exit": exit_code}, exit_code)


# -- oracle suite -----------------------------------------------------------------------

ORACLE_OBJECT = {"det": "matrix", "minpoly": "matrix", "roots": "poly", "factor": "poly"}


def _poly_coeffs(f: Poly) -> tuple:
    return tuple(f.coeffs)


def _oracle_pair(kind: str, obj, F: FieldDescriptor):
    """(oracle result, engine result) as serializable values."""
    if kind == "det":
        return s_elem(oracles.det(obj.rows, F)), s_elem(obj.det())
    if kind == "minpoly":
        ref = Poly(F, oracles.minpoly(obj.rows, F))
        return s_poly(ref), s_poly(minpoly(obj))
    if kind == "roots":
        ref = [{"root": s_elem(r), "multiplicity": m} for r, m in oracles.roots(obj.coeffs, F)]
        eng = [{"root": s_elem(r), "multiplicity": m} for r, m in roots_in_field(obj)]
        return ref, eng
    if kind == "factor":
        unit, facs = oracles.factor(obj.coeffs, F)
        fz = factor(obj)
        ref_pairs = [(Poly(F, list(g)), m) for g, m in facs]
        eng_pairs = [(f.poly, f.multiplicity) for f in fz.factors]

        def dump(u, pairs):
            pairs = sorted(pairs, key=lambda pm: (pm[0].degree, [c.sort_key() for c in reversed(pm[0].coeffs)]))
            return {"unit": s_elem(u), "factors": [{"poly": s_poly(g), "multiplicity": m} for g, m in pairs]}

        return dump(unit, ref_pairs), dump(fz.unit, eng_pairs)
    raise ParseError(f"unknown oracle kind {kind!r}")


def oracle_suite(kind: str, obj, F: FieldDescriptor | None = None):
    """Reference result for ``obj`` (a Matrix or Poly) by brute force."""
    F = F or obj.field
    if kind not in ORACLE_OBJECT:
        raise ParseError(f"unknown oracle kind {kind!r}; expected one of {', '.join(oracles.KINDS)}")
    return _oracle_pair(kind, obj, F)[0]


def run_oracle(kind: str, p: ProblemFile) -> Report:
    if kind not in ORACLE_OBJECT:
        return error_report(ParseError(f"unknown oracle kind {kind!r}"), 2)
    want = ORACLE_OBJECT[kind]
    names = [a for a in _object_args(p) if p.objects[a][0] == want]
    names = names or [n for n, (t, _) in p.objects.items() if t == want]
    if not names:
        return error_report(ParseError(f"no {want} object for the {kind} oracle"), 2)
    name = names[0]
    comps = []
    for i, (F, obj) in enumerate(zip(p.nfield, p.get(name, want))):
        entry: dict[str, Any] = {"index": i + 1, "field": F.literal}
        try:
            ref, eng = _oracle_pair(kind, obj, F)
            entry.update(status="ok", oracle=ref, engine=eng, agrees=ref == eng)
        except NLAlgError as exc:
            entry.update(status="skipped" if exc.code == "TooLargeForOracle" else "error",
                         error=_error_obj(exc))
        comps.append(entry)
    bad = any(c["status"] == "error" or c.get("agrees") is False for c in comps)
    doc = {"schema_version": SCHEMA_VERSION, "oracle": kind, "object": name,
           "nfield": [F.literal for F in p.nfield], "components": comps,
           "summary": {"compared": sum(1 for c in comps if c["status"] == "ok"),
                       "discrepancies": sum(1 for c in comps if c.get("agrees") is False)},
           "exit": int(bad)}
    return Report(doc, int(bad))


# -- entry point ------------------------------------------------------------------------

def _emit(report: Report, pretty: bool, out: str | None):
    text = report.dumps(pretty)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nlalg", description="Componentwise exact linear algebra over n-fields.")
    sub = ap.add_subparsers(dest="cmd", required=True)
    r = sub.add_parser("run", help="run the command in a problem file")
    r.add_argument("file")
    r.add_argument("--out")
    r.add_argument("--pretty", action="store_true")
    o = sub.add_parser("oracle", help="cross-check an object against a brute-force oracle")
    o.add_argument("kind", choices=oracles.KINDS)
    o.add_argument("file")
    o.add_argument("--pretty", action="store_true")
    v = sub.add_parser("validate", help="parse and validate a problem file")
    v.add_argument("file")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        problem = parse_problem(Path(args.file))
    except NLAlgError as exc:
        _emit(error_report(exc), getattr(args, "pretty", False), getattr(args, "out", None))
        return 2 if isinstance(exc, USAGE_ERRORS) else 1
    if args.cmd == "validate":
        doc = {"schema_version": SCHEMA_VERSION, "valid": True,
               "nfield": [F.literal for F in problem.nfield],
               "objects": {k: t for k, (t, _) in problem.objects.items()},
               "command": problem.command, "exit": 0}
        _emit(Report(doc, 0), False, None)
        return 0
    if args.cmd == "oracle":
        report = run_oracle(args.kind, problem)
        _emit(report, args.pretty, None)
        return report.exit_code
    report = run_command(problem)
    _emit(report, args.pretty, args.out)
    return report.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
