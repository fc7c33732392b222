"""The catalog of Darboux evaluations, the series verifier and the derivation engine."""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from importlib import resources
from pathlib import Path

import sympy

from .arith import format_rational, parse_rational, rational_power
from .bipoly import BiPoly, format_bipoly
from .branching import PullbackScheme, candidate_divisors
from .contiguous import ShiftVector, theta_basis_matrix
from .coverings import get_covering
from .curvefunc import (CurveFunction, P1_INFINITY, RadicalFunction, expand_at_base,
                        normalized_expansion)
from .divisor_tables import table_functions
from .elliptic import QDivisor
from .errors import (BasePointError, CatalogError, ClassificationError, DarbouxError,
                     FieldExtensionNeeded, PathDegeneracyError)
from .hypergeom import (HpgParams, classify_schwartz, exponent_diffs, gauss_series)
from .poly import Poly, RationalFunction, factor_rational, poly_gcd
from .series import PuiseuxSeries, series_compose

CATALOG_ENV = "DARBOUX_CATALOG"
DERIVE_ORDER = 15


class DerivationError(DarbouxError):
    """A derived record failed its own verification."""


# --- records --------------------------------------------------------------------

@dataclass(frozen=True)
class EvaluationRecord:
    id: str
    type: tuple
    params: HpgParams
    covering: str
    rhs: RadicalFunction
    notes: str = ""
    # polynomial strings as read, so xi^2 terms survive a load/save cycle
    poly_texts: tuple = field(default=(), compare=False, repr=False)

    @property
    def curve(self):
        return get_covering(self.covering).curve

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "type": [format_rational(q) for q in self.type],
            "params": [format_rational(q) for q in self.params.as_tuple()],
            "covering": self.covering,
            "rhs": {
                "constant": format_rational(self.rhs.constant),
                "factors": [{"poly": self._text(i, f), "exp": format_rational(e)}
                            for i, (f, e) in enumerate(self.rhs.factors)],
            },
        }
        if self.notes:
            out["notes"] = self.notes
        return out

    def _text(self, i: int, f: CurveFunction) -> str:
        if i < len(self.poly_texts) and CurveFunction.parse(f.curve, self.poly_texts[i]) == f:
            return self.poly_texts[i]
        return _poly_text(f)

    @classmethod
    def from_dict(cls, d: dict) -> "EvaluationRecord":
        try:
            cov = get_covering(d["covering"])
            params = HpgParams(*(parse_rational(str(v)) for v in d["params"]))
            factors = [(CurveFunction.parse(cov.curve, f["poly"]), parse_rational(str(f["exp"])))
                       for f in d["rhs"]["factors"]]
            rhs = RadicalFunction(cov.curve, parse_rational(str(d["rhs"].get("constant", "1"))), factors)
            if "type" in d:
                typ = tuple(parse_rational(str(v)) for v in d["type"])
            else:
                typ = classify_schwartz(exponent_diffs(params)).representative
            texts = tuple(f["poly"] for f in d["rhs"]["factors"])
            return cls(d["id"], typ, params, d["covering"], rhs, d.get("notes", ""), texts)
        except (KeyError, ValueError, TypeError) as exc:
            raise CatalogError(f"bad record {d.get('id', '?')!r}: {exc}") from exc

    def check_type(self) -> bool:
        st = classify_schwartz(exponent_diffs(self.params))
        return st.representative == tuple(self.type)


def _poly_text(f: CurveFunction) -> str:
    a, b, d = f.numerator_form()
    if d.degree > 0:
        raise CatalogError(f"factor {f} is not a polynomial")
    p = (BiPoly.from_poly(a) + BiPoly.from_poly(b) * BiPoly.xi()) * (1 / d.lc())
    return format_bipoly(p)


class Catalog:
    """Ordered collection of records keyed by id."""

    def __init__(self, records, path=None):
        self.records = list(records)
        self.path = path
        self._by_id = {}
        for r in self.records:
            if r.id in self._by_id:
                raise CatalogError(f"duplicate record id {r.id!r}")
            self._by_id[r.id] = r

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __contains__(self, rid):
        return rid in self._by_id

    def get(self, rid: str) -> EvaluationRecord:
        try:
            return self._by_id[rid]
        except KeyError:
            raise CatalogError(f"no record {rid!r}") from None

    def to_dict(self) -> dict:
        return {"format": 1, "records": [r.to_dict() for r in self.records]}

    def save(self, path):
        Path(path).write_text(json.dumps(self.to_dict(), indent=1) + "\n")


def bundled_catalog_path() -> Path:
    return Path(str(resources.files("darboux").joinpath("data/catalog.json")))


def catalog_path(path=None) -> Path:
    """Explicit path, then the DARBOUX_CATALOG variable, then the bundled file."""
    if path:
        return Path(path)
    env = os.environ.get(CATALOG_ENV)
    if env:
        return Path(env)
    return bundled_catalog_path()


def load_catalog(path=None) -> Catalog:
    p = catalog_path(path)
    try:
        data = json.loads(p.read_text())
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {p}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog {p} is not valid JSON: {exc}") from exc
    recs = data["records"] if isinstance(data, dict) else data
    return Catalog([EvaluationRecord.from_dict(d) for d in recs], p)


# --- verification -----------------------------------------------------------------

@dataclass
class VerificationReport:
    id: str
    order: int
    ok: bool
    mismatch_index: int | None = None
    elapsed: float = 0.0
    error: str | None = None

    def to_dict(self) -> dict:
        out = {"id": self.id, "ok": self.ok, "order": self.order}
        if self.mismatch_index is not None:
            out["mismatch_index"] = self.mismatch_index
        if self.error:
            out["error"] = self.error
        return out


def covering_series(key: str, order: int, branch: int = 1) -> PuiseuxSeries:
    phi = expand_at_base(get_covering(key).function, order, branch)
    if phi.valuation <= 0:
        raise BasePointError(f"covering {key} does not vanish at the base point")
    return phi


def lhs_series(rec: EvaluationRecord, order: int, branch: int = 1) -> PuiseuxSeries:
    phi = covering_series(rec.covering, order, branch)
    return series_compose(gauss_series(rec.params, order), phi)


def verify(rec: EvaluationRecord, order: int = 25, branch: int = 1) -> VerificationReport:
    """Compare both sides coefficient-wise through t^order."""
    start = time.perf_counter()
    ram = 1 if rec.curve is None else 2
    try:
        lhs = lhs_series(rec, order, branch)
        rhs = expand_at_base(rec.rhs, order, branch)
    except DarbouxError as exc:
        return VerificationReport(rec.id, order, False, None, time.perf_counter() - start, str(exc))
    mm = lhs.first_mismatch(rhs, Fraction(order + 1, ram))
    idx = None if mm is None else int(mm * ram)
    return VerificationReport(rec.id, order, mm is None, idx, time.perf_counter() - start)


def _verify_job(args):
    rec, order = args
    return verify(rec, order)


def verify_all(order: int = 25, catalog: Catalog | None = None, workers: int | None = None):
    """Reports for every record, in catalog order."""
    catalog = catalog if catalog is not None else load_catalog()
    recs = list(catalog)
    if workers is None:
        workers = min(8, os.cpu_count() or 1)
    if workers <= 1 or len(recs) < 2:
        return [verify(r, order) for r in recs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_verify_job, [(r, order) for r in recs]))


# --- tidy radical expressions --------------------------------------------------------

def _base_normalizer(curve, a: Poly, b: Poly) -> Fraction:
    """Scalar making a + xi b equal to 1 at the base point, or monic-like if it vanishes."""
    if a.coeffs and a.coeffs[0] != 0:
        return a.coeffs[0]
    terms = [(0, i, c) for i, c in enumerate(a.coeffs) if c] + \
            [(1, i, c) for i, c in enumerate(b.coeffs) if c]
    terms.sort(key=lambda t: (t[1] * 2 + t[0], t[0]))
    return terms[0][2]


def polynomial_pieces(f: CurveFunction):
    """(constant, [(polynomial CurveFunction, exponent)]) with f = constant * prod."""
    a, b, d = f.numerator_form()
    pieces = []
    const = Fraction(1)

    def add_x_poly(p: Poly, sign: int):
        nonlocal const
        if p.degree <= 0:
            const *= p.coeffs[0] ** sign
            return
        lc, facs = factor_rational(p)
        const *= lc ** sign
        for s, e in facs:
            c = s.coeffs[0] if s.coeffs[0] != 0 else Fraction(1)
            const *= c ** (sign * e)
            pieces.append((CurveFunction(f.curve, s * (1 / c)), sign * e))

    if b.is_zero():
        add_x_poly(a, 1)
    else:
        g = poly_gcd(a, b) if not a.is_zero() else b.monic()
        a1 = a.exact_div(g) if not a.is_zero() else a
        b1 = b.exact_div(g)
        add_x_poly(g, 1)
        c = _base_normalizer(f.curve, a1, b1)
        const *= c
        pieces.append((CurveFunction(f.curve, a1 * (1 / c), b1 * (1 / c)), 1))
    add_x_poly(d, -1)
    return const, pieces


def tidy(r: RadicalFunction) -> RadicalFunction:
    """Split every factor into polynomial pieces and merge equal ones."""
    const = r.constant
    acc: dict = {}
    order = []
    for f, e in r.factors:
        c, pieces = polynomial_pieces(f)
        ce = rational_power(c, e)
        if ce is None:
            raise FieldExtensionNeeded(f"{c}^{e} is not rational")
        const *= ce
        for p, k in pieces:
            if p not in acc:
                acc[p] = Fraction(0)
                order.append(p)
            acc[p] += k * e
    return RadicalFunction(r.curve, const, [(p, acc[p]) for p in order if acc[p]])


# --- derivation of contiguous evaluations -------------------------------------------------

def _log_derivative(r: RadicalFunction) -> CurveFunction:
    acc = CurveFunction(r.curve, 0)
    for f, e in r.factors:
        acc = acc + f.derivative() / f * e
    return acc


def _integral(v: Fraction) -> bool:
    return Fraction(v).denominator == 1


def _variants(base: EvaluationRecord, phi: CurveFunction):
    """Parameter triples whose 2F1 at phi is a known radical multiple of the base rhs."""
    A, B, C = base.params.as_tuple()
    R = base.rhs
    yield (A, B, C), R
    yield (B, A, C), R
    one_minus = CurveFunction(phi.curve, 1) - phi
    euler = R * RadicalFunction.of(one_minus, A + B - C)
    yield (C - A, C - B, C), euler
    yield (C - B, C - A, C), euler


def contiguous_ratio(base_params, target_params, phi: CurveFunction, rhs: RadicalFunction) -> CurveFunction:
    """G with F(target)(phi) = G * F(base)(phi) when F(base)(phi) = rhs."""
    A, B, C = (Fraction(v) for v in base_params)
    shift = ShiftVector(*(int(t - s) for t, s in zip(target_params, (A, B, C))))
    if shift == ShiftVector(0, 0, 0):
        return CurveFunction(phi.curve, 1)
    w0, w1 = theta_basis_matrix(A, B, C, shift)[0]
    # F(target) = w0 F + w1 theta F, and theta = phi / phi' d/dx on the curve
    theta_ratio = phi * _log_derivative(rhs) / phi.derivative()
    return phi.compose_into(w0) + phi.compose_into(w1) * theta_ratio


def derive_contiguous(target: HpgParams, base: EvaluationRecord, new_id: str | None = None,
                      check_order: int = DERIVE_ORDER) -> EvaluationRecord:
    """A verified evaluation of F(target) at the base covering."""
    if not isinstance(target, HpgParams):
        target = HpgParams(*target)
    st = classify_schwartz(exponent_diffs(target))
    if st.representative != tuple(base.type):
        raise ClassificationError(
            f"target type {st.label} differs from base type {'/'.join(map(str, base.type))}")
    if target == base.params:
        return base
    cov = get_covering(base.covering)
    phi = cov.function
    rhs = None
    last_error = None
    for params, R in _variants(base, phi):
        if not all(_integral(t - s) for t, s in zip(target.as_tuple(), params)):
            continue
        for pr, swap in ((params, False), ((params[1], params[0], params[2]), True)):
            tgt = target.as_tuple() if not swap else (target.B, target.A, target.C)
            try:
                G = contiguous_ratio(pr, tgt, phi, R)
            except PathDegeneracyError as exc:
                last_error = exc
                continue
            rhs = tidy(R * G)
            break
        if rhs is not None:
            break
    if rhs is None:
        if last_error is not None:
            raise last_error
        G = reconstruct_ratio(target, base)
        rhs = tidy(base.rhs * G)
    rid = new_id or _derived_id(base.id, target)
    rec = EvaluationRecord(rid, tuple(base.type), target, base.covering, rhs,
                           f"derived from {base.id}")
    rep = verify(rec, check_order)
    if not rep.ok:
        raise DerivationError(f"derived record {rid} fails at index {rep.mismatch_index}")
    return rec


def _derived_id(base_id: str, p: HpgParams) -> str:
    return base_id + "@" + ",".join(format_rational(v) for v in p.as_tuple())


def _series_unknowns(S: PuiseuxSeries, xi_s, n: int, elliptic: bool, N: int, ram: int):
    """Linear system for S*d - a - xi*b = 0 mod t^N, deg a, b, d <= n."""
    def coeff(series, k):
        return series.coefficient(Fraction(k, ram))
    cols = []
    xpow = [PuiseuxSeries.monomial(1, i, Fraction(N, ram) + 1) for i in range(n + 1)]
    for i in range(n + 1):
        cols.append([coeff(S * xpow[i], k) for k in range(N)])
    for i in range(n + 1):
        cols.append([-coeff(xpow[i], k) for k in range(N)])
    if elliptic:
        for i in range(n + 1):
            cols.append([-coeff(xi_s * xpow[i], k) for k in range(N)])
    return cols


def reconstruct_ratio(target: HpgParams, base: EvaluationRecord, max_degree: int = 12) -> CurveFunction:
    """Exact rational function G on the curve with F(target)(phi) = G * rhs.

    Used when the target is related to the base only through the second
    local solution at z = 0.  G = (a + xi b)/d is found from series
    coefficients by exact linear algebra and then confirmed to a deeper
    order than the number of unknowns.
    """
    E = base.curve
    ram = 1 if E is None else 2
    elliptic = E is not None
    for n in range(0, max_degree + 1):
        unknowns = (n + 1) * (3 if elliptic else 2)
        N = unknowns + 8
        order = N + 1
        S = lhs_series(replace(base, params=target), order) / expand_at_base(base.rhs, order)
        xi_s = expand_at_base(CurveFunction.xi(E), order) if elliptic else None
        cols = _series_unknowns(S, xi_s, n, elliptic, N, ram)
        M = sympy.Matrix(N, len(cols), lambda i, j: sympy.Rational(cols[j][i].numerator, cols[j][i].denominator))
        null = M.nullspace()
        if len(null) != 1:
            continue
        v = [Fraction(int(c.p), int(c.q)) for c in null[0]]
        d = Poly(v[:n + 1], "x")
        a = Poly(v[n + 1:2 * n + 2], "x")
        b = Poly(v[2 * n + 2:], "x") if elliptic else Poly.const(0, "x")
        if d.is_zero():
            continue
        G = CurveFunction(E, RationalFunction(a, d), RationalFunction(b, d))
        deep = 3 * N
        lhs = lhs_series(replace(base, params=target), deep)
        rhs = expand_at_base(base.rhs * G, deep)
        if lhs.first_mismatch(rhs, Fraction(deep + 1, ram)) is None:
            return G
    raise DerivationError(f"no rational ratio of degree <= {max_degree} found for {target}")


# --- radical solutions from candidate divisors ------------------------------------------------

@dataclass
class RadicalSolution:
    divisor: QDivisor
    radical: RadicalFunction
    solution: str  # "F" or "phi^(1-C) F"


@dataclass
class SearchResult:
    solutions: list
    candidates: list
    diagnostics: list = field(default_factory=list)


def _express_divisor(D: QDivisor, curve) -> RadicalFunction | None:
    """A radical function with divisor D, from table functions (or x-polynomials in genus 0)."""
    if curve is None:
        factors = []
        for P, a in D.coeffs.items():
            if P == P1_INFINITY:
                continue
            factors.append((CurveFunction(None, P.p), a))
        return RadicalFunction(None, 1, factors)
    funcs = table_functions(curve.name)
    comps = []
    for _, div in funcs:
        for P in div.support():
            if P not in comps:
                comps.append(P)
    for P in D.support():
        if P not in comps:
            return None
    M = sympy.Matrix(len(comps), len(funcs),
                     lambda i, j: sympy.Rational(str(funcs[j][1][comps[i]])))
    rhs = sympy.Matrix([sympy.Rational(str(D[P])) for P in comps])
    try:
        sol, params = M.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    sol = sol.subs({t: 0 for t in params})
    factors = []
    for (f, _), c in zip(funcs, sol):
        c = Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1]))
        if c:
            factors.append((f, c))
    return RadicalFunction(curve, 1, factors)


def local_solutions(params: HpgParams, covering: str, order: int):
    """Normalized expansions (valuation, unit) of the two local 2F1 solutions."""
    phi = get_covering(covering).function
    vphi, uphi = normalized_expansion(phi, order + 2)
    ram = 1 if phi.curve is None else 2
    # phi as a series with its true constant to feed the hypergeometric series
    phis = covering_series(covering, order + 2)
    out = []
    F1 = series_compose(gauss_series(params, order + 2), phis)
    out.append(("F", Fraction(0), F1.truncate(Fraction(order + 1, ram))))
    A, B, C = params.as_tuple()
    if not _integral(C):
        p2 = HpgParams(A - C + 1, B - C + 1, 2 - C)
        F2 = series_compose(gauss_series(p2, order + 2), phis)
        unit = uphi.pow(1 - C) * F2
        out.append(("phi^(1-C) F", vphi * (1 - C), unit.truncate(Fraction(order + 1, ram))))
    return out


def radical_solution_search(schwartz_type, covering: str, scheme: PullbackScheme,
                            extra_point_budget: int = 1, order: int = 12) -> SearchResult:
    """Candidate divisors that expand to one of the two local 2F1 solutions."""
    if scheme.params is None:
        raise ValueError("the scheme must carry hypergeometric parameters")
    st = classify_schwartz(exponent_diffs(scheme.params))
    want = getattr(schwartz_type, "representative", schwartz_type)
    if want is not None and tuple(Fraction(q) for q in want) != st.representative:
        raise ClassificationError(f"scheme parameters have type {st.label}")
    curve = get_covering(covering).curve
    cands = candidate_divisors(scheme, curve, extra_point_budget)
    sols = local_solutions(scheme.params, covering, order)
    ram = 1 if curve is None else 2
    found = []
    diag = []
    for D in cands:
        rad = _express_divisor(D, curve)
        if rad is None:
            diag.append(f"{D!r}: not expressible with table functions")
            continue
        v, u = normalized_expansion(rad, order)
        hit = None
        for label, vs, us in sols:
            if v == vs and u.first_mismatch(us, Fraction(order + 1, ram)) is None:
                hit = label
                break
        if hit is None:
            diag.append(f"{D!r}: series differs from both local solutions")
        else:
            found.append(RadicalSolution(D, rad, hit))
    if not found:
        diag.append("no candidate matches a local solution")
    return SearchResult(found, cands, diag)
