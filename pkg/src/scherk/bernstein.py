"""Exact bivariate polynomials and Bernstein positivity certificates.

All coefficients are fractions.Fraction; nothing here rounds.  A polynomial
on [0,1]^2 whose Bernstein expansion at some bidegree has only nonnegative
coefficients is nonnegative on the square (the basis functions are), so an
all-nonnegative coefficient matrix is a positivity certificate.  The
converse fails, hence failure to certify is reported as Inconclusive, never
as a disproof.

The two certificates shipped with the package cover

    Y(A,B)  = (2+AB-A^2)(2+AB-B^2) - 2(A+B)             at bidegree (3,3),
    2*Z(A,B), Z = C*(2*(C-A-B) + (A+B)(1-AB)/2)
                  - (5/2)(1-A^2)(1+AB), C = 2+AB-A^2,   at bidegree (4,4),

both after the corner substitution A = 1-t, B = 1-v.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Union

from .errors import CertificateMismatch, DegreeError

_F = Fraction


def _as_fraction_rows(rows) -> tuple[tuple[Fraction, ...], ...]:
    out = []
    width = None
    for row in rows:
        frow = tuple(Fraction(c) for c in row)
        if width is None:
            width = len(frow)
        elif len(frow) != width:
            raise ValueError("ragged coefficient matrix")
        out.append(frow)
    if not out or width == 0:
        raise ValueError("empty coefficient matrix")
    return tuple(out)


@dataclass(frozen=True)
class BiPoly:
    """Bivariate polynomial sum a[i][j] * t^i * v^j with exact coefficients."""

    coeffs: tuple[tuple[Fraction, ...], ...]

    @property
    def deg_t(self) -> int:
        return len(self.coeffs) - 1

    @property
    def deg_v(self) -> int:
        return len(self.coeffs[0]) - 1

    @classmethod
    def from_coeffs(cls, rows) -> "BiPoly":
        return cls(_as_fraction_rows(rows))

    @classmethod
    def constant(cls, c) -> "BiPoly":
        return cls(((Fraction(c),),))

    @classmethod
    def var_t(cls) -> "BiPoly":
        return cls(((_F(0),), (_F(1),)))

    @classmethod
    def var_v(cls) -> "BiPoly":
        return cls(((_F(0), _F(1)),))

    def _padded(self, dt: int, dv: int):
        rows = []
        for i in range(dt + 1):
            row = [_F(0)] * (dv + 1)
            if i <= self.deg_t:
                for j, c in enumerate(self.coeffs[i]):
                    row[j] = c
            rows.append(row)
        return rows

    def __add__(self, other: "BiPoly") -> "BiPoly":
        dt = max(self.deg_t, other.deg_t)
        dv = max(self.deg_v, other.deg_v)
        a = self._padded(dt, dv)
        b = other._padded(dt, dv)
        return BiPoly(tuple(tuple(x + y for x, y in zip(ra, rb))
                            for ra, rb in zip(a, b)))

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-1) * other

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            c = Fraction(other)
            return BiPoly(tuple(tuple(c * x for x in row)
                                for row in self.coeffs))
        dt = self.deg_t + other.deg_t
        dv = self.deg_v + other.deg_v
        acc = [[_F(0)] * (dv + 1) for _ in range(dt + 1)]
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c == 0:
                    continue
                for k, orow in enumerate(other.coeffs):
                    for l, d in enumerate(orow):
                        if d != 0:
                            acc[i + k][j + l] += c * d
        return BiPoly(tuple(tuple(r) for r in acc))

    __rmul__ = __mul__

    def evaluate(self, t, v):
        """Exact on Fraction arguments, ordinary float math otherwise."""
        total = 0
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c != 0:
                    total += c * t ** i * v ** j
        return total

    def reflect(self) -> "BiPoly":
        """The polynomial p(1-t, 1-v), expanded exactly."""
        dt, dv = self.deg_t, self.deg_v
        acc = [[_F(0)] * (dv + 1) for _ in range(dt + 1)]
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c == 0:
                    continue
                for k in range(i + 1):
                    ck = comb(i, k) * (-1) ** k
                    for l in range(j + 1):
                        acc[k][l] += c * ck * comb(j, l) * (-1) ** l
        return BiPoly(tuple(tuple(r) for r in acc))

    def trimmed(self) -> "BiPoly":
        """Drop trailing all-zero rows/columns (degree bounds stay honored)."""
        rows = [list(r) for r in self.coeffs]
        while len(rows) > 1 and all(c == 0 for c in rows[-1]):
            rows.pop()
        while len(rows[0]) > 1 and all(r[-1] == 0 for r in rows):
            for r in rows:
                r.pop()
        return BiPoly(tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class BernsteinForm:
    """Coefficients p[i][j] against C(m,i)t^i(1-t)^(m-i) C(n,j)v^j(1-v)^(n-j)."""

    m: int
    n: int
    coeffs: tuple[tuple[Fraction, ...], ...]

    def min_coeff(self) -> Fraction:
        return min(min(row) for row in self.coeffs)

    def evaluate(self, t, v):
        one = Fraction(1) if isinstance(t, Fraction) else 1
        total = 0
        for i, row in enumerate(self.coeffs):
            bt = comb(self.m, i) * t ** i * (one - t) ** (self.m - i)
            for j, c in enumerate(row):
                if c != 0:
                    total += c * bt * comb(self.n, j) * v ** j * (one - v) ** (self.n - j)
        return total


@dataclass(frozen=True)
class Certificate:
    """An all-nonnegative Bernstein form witnessing nonnegativity on [0,1]^2."""

    form: BernsteinForm
    min_coeff: Fraction


@dataclass(frozen=True)
class Inconclusive:
    """No certificate within the elevation budget.  Not a disproof."""

    bidegree: tuple[int, int]
    min_coeff: Fraction


def to_bernstein(poly: BiPoly, m: int, n: int) -> BernsteinForm:
    """Exact monomial-to-Bernstein conversion at bidegree (m, n).

    p_ij = sum_{k<=i, l<=j} C(i,k)C(j,l) / (C(m,k)C(n,l)) * a_kl.
    """
    if m < poly.deg_t or n < poly.deg_v:
        raise DegreeError(
            f"bidegree ({m},{n}) below polynomial degree "
            f"({poly.deg_t},{poly.deg_v})")
    a = poly.coeffs
    rows = []
    for i in range(m + 1):
        row = []
        for j in range(n + 1):
            s = _F(0)
            for k in range(min(i, poly.deg_t) + 1):
                ck = _F(comb(i, k), comb(m, k))
                for l in range(min(j, poly.deg_v) + 1):
                    if a[k][l] != 0:
                        s += ck * _F(comb(j, l), comb(n, l)) * a[k][l]
            row.append(s)
        rows.append(tuple(row))
    return BernsteinForm(m=m, n=n, coeffs=tuple(rows))


def from_bernstein(form: BernsteinForm) -> BiPoly:
    """Exact Bernstein-to-monomial expansion (inverse of to_bernstein)."""
    m, n = form.m, form.n
    acc = [[_F(0)] * (n + 1) for _ in range(m + 1)]
    for i, row in enumerate(form.coeffs):
        for j, c in enumerate(row):
            if c == 0:
                continue
            # C(m,i) t^i (1-t)^(m-i) = sum_k C(m,i) C(m-i, k-i) (-1)^(k-i) t^k
            for k in range(i, m + 1):
                ct = comb(m, i) * comb(m - i, k - i) * (-1) ** (k - i)
                for l in range(j, n + 1):
                    cv = comb(n, j) * comb(n - j, l - j) * (-1) ** (l - j)
                    acc[k][l] += c * ct * cv
    return BiPoly(tuple(tuple(r) for r in acc)).trimmed()


def elevate(form: BernsteinForm, m_new: int, n_new: int) -> BernsteinForm:
    """Degree elevation; preserves the polynomial and never lowers min_coeff.

    q_ij = sum_{k,l} C(m,k)C(m_new-m, i-k)/C(m_new,i)
                   * C(n,l)C(n_new-n, j-l)/C(n_new,j) * p_kl.
    """
    if m_new < form.m or n_new < form.n:
        raise DegreeError("elevation cannot lower the bidegree")
    m, n = form.m, form.n
    dm, dn = m_new - m, n_new - n
    rows = []
    for i in range(m_new + 1):
        row = []
        for j in range(n_new + 1):
            s = _F(0)
            for k in range(max(0, i - dm), min(m, i) + 1):
                ct = _F(comb(m, k) * comb(dm, i - k), comb(m_new, i))
                for l in range(max(0, j - dn), min(n, j) + 1):
                    if form.coeffs[k][l] != 0:
                        s += ct * _F(comb(n, l) * comb(dn, j - l),
                                     comb(n_new, j)) * form.coeffs[k][l]
            row.append(s)
        rows.append(tuple(row))
    return BernsteinForm(m=m_new, n=n_new, coeffs=tuple(rows))


def certify_nonneg(poly: BiPoly,
                   max_elevation: int = 10) -> Union[Certificate, Inconclusive]:
    """Search bidegrees up to (deg+max_elevation) for a nonnegative expansion."""
    last_min = None
    last_deg = (poly.deg_t, poly.deg_v)
    for extra in range(max_elevation + 1):
        m = poly.deg_t + extra
        n = poly.deg_v + extra
        form = to_bernstein(poly, m, n)
        mc = form.min_coeff()
        last_min, last_deg = mc, (m, n)
        if mc >= 0:
            return Certificate(form=form, min_coeff=mc)
    return Inconclusive(bidegree=last_deg, min_coeff=last_min)


def poly_y() -> BiPoly:
    """Y(A,B) = (2+AB-A^2)(2+AB-B^2) - 2(A+B), in the variables (A, B)."""
    A = BiPoly.var_t()
    B = BiPoly.var_v()
    two = BiPoly.constant(2)
    ca = two + A * B - A * A
    cb = two + A * B - B * B
    return ca * cb - 2 * (A + B)


def poly_two_z() -> BiPoly:
    """2*Z(A,B) with Z = C*(2*(C-A-B) + (A+B)(1-AB)/2) - (5/2)(1-A^2)(1+AB)."""
    A = BiPoly.var_t()
    B = BiPoly.var_v()
    one = BiPoly.constant(1)
    c = BiPoly.constant(2) + A * B - A * A
    inner = 2 * (c - A - B) + Fraction(1, 2) * ((A + B) * (one - A * B))
    z = c * inner - Fraction(5, 2) * ((one - A * A) * (one + A * B))
    return 2 * z


#: Expected Bernstein coefficients of Y(1-t, 1-v) at bidegree (3, 3).
CERT_Y_EXPECTED: tuple[tuple[Fraction, ...], ...] = tuple(
    tuple(Fraction(c) for c in row) for row in (
        ("0", "2/3", "1/3", "0"),
        ("2/3", "2", "20/9", "2"),
        ("1/3", "20/9", "28/9", "10/3"),
        ("0", "2", "10/3", "4"),
    ))

#: Expected Bernstein coefficients of 2*Z(1-t, 1-v) at bidegree (4, 4).
CERT_2Z_EXPECTED: tuple[tuple[Fraction, ...], ...] = tuple(
    tuple(Fraction(c) for c in row) for row in (
        ("0", "1", "4/3", "5/4", "1"),
        ("0", "9/8", "41/24", "15/8", "7/4"),
        ("10/3", "55/12", "49/9", "143/24", "37/6"),
        ("5", "103/16", "23/3", "139/16", "19/2"),
        ("5", "13/2", "8", "19/2", "11"),
    ))


@dataclass(frozen=True)
class CertificateReport:
    """Outcome of rebuilding and checking both shipped certificates."""

    y_form: BernsteinForm
    two_z_form: BernsteinForm
    y_min: Fraction
    two_z_min: Fraction
    all_nonnegative: bool


def _compare(name: str, form: BernsteinForm, expected) -> None:
    for i, row in enumerate(form.coeffs):
        for j, c in enumerate(row):
            if c != expected[i][j]:
                raise CertificateMismatch(
                    f"{name}[{i}][{j}] = {c}, expected {expected[i][j]}")


def verify_appendix_certificates(
        corrupt: Optional[tuple[str, int, int, Fraction]] = None
) -> CertificateReport:
    """Rebuild both certificates from their closed forms and check them.

    Builds Y and 2Z symbolically, substitutes A = 1-t, B = 1-v, converts to
    Bernstein form at (3,3) resp. (4,4), and asserts exact entry-by-entry
    equality with the expected matrices plus nonnegativity of every entry.

    The corrupt hook perturbs one computed entry before comparison (negative
    control for the CLI); corrupt = (name, i, j, delta) with name in
    {"y", "2z"}.  Raises CertificateMismatch naming the first bad entry.
    """
    y_form = to_bernstein(poly_y().reflect(), 3, 3)
    tz_form = to_bernstein(poly_two_z().reflect(), 4, 4)

    if corrupt is not None:
        name, ci, cj, delta = corrupt
        target = y_form if name == "y" else tz_form
        rows = [list(r) for r in target.coeffs]
        rows[ci][cj] += Fraction(delta)
        patched = BernsteinForm(m=target.m, n=target.n,
                                coeffs=tuple(tuple(r) for r in rows))
        if name == "y":
            y_form = patched
        else:
            tz_form = patched

    _compare("y", y_form, CERT_Y_EXPECTED)
    _compare("2z", tz_form, CERT_2Z_EXPECTED)

    y_min = y_form.min_coeff()
    tz_min = tz_form.min_coeff()
    return CertificateReport(
        y_form=y_form,
        two_z_form=tz_form,
        y_min=y_min,
        two_z_min=tz_min,
        all_nonnegative=y_min >= 0 and tz_min >= 0,
    )


def certificate_to_json(form: BernsteinForm) -> str:
    """Serialize a certificate as exact rational strings, never floats."""
    doc = {
        "bidegree": [form.m, form.n],
        "coeffs": [[str(c) for c in row] for row in form.coeffs],
    }
    return json.dumps(doc, sort_keys=True)


def certificate_from_json(text: str) -> BernsteinForm:
    doc = json.loads(text)
    m, n = doc["bidegree"]
    rows = tuple(tuple(Fraction(s) for s in row) for row in doc["coeffs"])
    return BernsteinForm(m=m, n=n, coeffs=rows)
