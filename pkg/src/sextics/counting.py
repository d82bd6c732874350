"""Point counting on the curve models, traces, and trace lifting.

Counts over F_p are quadratic-character sums vectorized with numpy;
counts over F_{p^k} go through the ExtField machinery and exist to
serve as independent oracles.  Conventions for points at infinity on
smooth models:

  * y^2 = f(x), deg f = 6: two points at infinity if lc(f) is a
    nonzero square in the counting field, none otherwise.
  * y^2 = f(x), deg f = 3: exactly one point at infinity.
  * plane models are counted projectively as written.

chi(0) = 0, so a zero of f contributes exactly the one point y = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateModel, InternalInvariantError
from .fields import ExtField, _chi_table_cached, floor_isqrt, legendre
from .polys import (
    Poly,
    TernaryForm,
    build_v1_rhs,
    build_v2_form,
    is_squarefree,
)

_EXT_CHUNK = 1 << 16
_GRID_CELLS = 1 << 22  # target cells per chunk in affine grid scans


@dataclass(frozen=True)
class FrobeniusTrace:
    """Frobenius trace of an elliptic curve over F_p; checked against
    the Hasse window on construction."""

    t: int
    p: int

    def __post_init__(self):
        if abs(self.t) > floor_isqrt(4 * self.p):
            raise InternalInvariantError(
                f"trace {self.t} outside the Hasse window for p={self.p}"
            )


def trace_lift(t: int, p: int, k: int) -> int:
    """Power sum of the Frobenius eigenvalue pair: t_1 = t,
    t_2 = t^2 - 2p, t_3 = t^3 - 3pt.  #E(F_{p^k}) = p^k + 1 - t_k."""
    if abs(t) > floor_isqrt(4 * p):
        raise InternalInvariantError(f"trace {t} violates Hasse for p={p}")
    if k == 1:
        return t
    if k == 2:
        return t * t - 2 * p
    if k == 3:
        return t**3 - 3 * p * t
    raise ValueError(f"extension degree must be 1..3, got {k}")


def _ext_poly_eval(field: ExtField, f: Poly, rows: np.ndarray) -> np.ndarray:
    """Horner evaluation of an F_p polynomial at extension-field rows."""
    acc = np.zeros_like(rows)
    for c in reversed(f.coeffs):
        acc = field.mul_vec(acc, rows)
        acc[..., 0] = (acc[..., 0] + c) % field.p
    return acc


def _ext_char_sum(field: ExtField, f: Poly) -> int:
    total = 0
    for lo in range(0, field.q, _EXT_CHUNK):
        rows = field.coeff_rows(lo, min(lo + _EXT_CHUNK, field.q))
        total += int(field.char_vec(_ext_poly_eval(field, f, rows)).sum())
    return total


def _fp_char_sum(f: Poly) -> int:
    chi = _chi_table_cached(f.p)
    return int(chi[f.eval_many(np.arange(f.p, dtype=np.int64))].sum())


def count_legendre_cubic(E, field: ExtField | None = None) -> int:
    """#E over F_p (field=None) or over the given extension of F_p."""
    rhs = E.rhs_poly()
    if field is None:
        return E.p + 1 + _fp_char_sum(rhs)
    if field.p != E.p:
        raise ValueError("extension field has the wrong characteristic")
    return field.q + 1 + _ext_char_sum(field, rhs)


def trace_of_cubic(E) -> FrobeniusTrace:
    return FrobeniusTrace(E.p + 1 - count_legendre_cubic(E), E.p)


def count_hyperelliptic(f: Poly, field: ExtField | None = None) -> int:
    """Smooth-model count of y^2 = f(x) for squarefree f of degree 6."""
    if f.degree != 6:
        raise ValueError(f"need degree 6, got {f.degree}")
    if not is_squarefree(f):
        raise ValueError("right-hand side must be squarefree")
    if field is None:
        inf = 2 if legendre(f.lc, f.p) == 1 else 0
        return f.p + _fp_char_sum(f) + inf
    if field.p != f.p:
        raise ValueError("extension field has the wrong characteristic")
    inf = 2 if field.char(field.embed(f.lc)) == 1 else 0
    return field.q + _ext_char_sum(field, f) + inf


def _grid_block(p: int) -> int:
    return max(1, _GRID_CELLS // p)


def _curve_points_fp(form: TernaryForm):
    """All projective F_p-points of the plane curve, as (x, y, z) arrays.

    Points are normalized to z = 1, else x = 1, else (0, 1, 0)."""
    p = form.p
    by_y = form.y_coefficients_on_chart()
    ys = np.arange(p, dtype=np.int64)
    xs_out, ys_out, zs_out = [], [], []
    block = _grid_block(p)
    for lo in range(0, p, block):
        X = np.arange(lo, min(lo + block, p), dtype=np.int64)
        cj = [poly.eval_many(X) for poly in by_y]
        acc = np.zeros((len(X), p), dtype=np.int64)
        for c in reversed(cj):
            acc = (acc * ys + c[:, None]) % p
        hit_x, hit_y = np.nonzero(acc == 0)
        xs_out.append(X[hit_x])
        ys_out.append(ys[hit_y])
        zs_out.append(np.ones(len(hit_x), dtype=np.int64))
    inf_poly, top = form.infinity_restriction()
    if inf_poly.is_zero():
        hit = ys
    else:
        hit = ys[inf_poly.eval_many(ys) == 0]
    xs_out.append(np.ones(len(hit), dtype=np.int64))
    ys_out.append(hit)
    zs_out.append(np.zeros(len(hit), dtype=np.int64))
    if top == 0:
        xs_out.append(np.zeros(1, dtype=np.int64))
        ys_out.append(np.ones(1, dtype=np.int64))
        zs_out.append(np.zeros(1, dtype=np.int64))
    return (
        np.concatenate(xs_out),
        np.concatenate(ys_out),
        np.concatenate(zs_out),
    )


def _eval_monomials(coeffs: dict, X, Y, Z, p: int):
    """Evaluate an exponent->coefficient map at point arrays, mod p."""
    deg = max(sum(m) for m in coeffs)
    pows = []
    for V in (X, Y, Z):
        cur = [np.ones_like(V)]
        for _ in range(deg):
            cur.append(cur[-1] * V % p)
        pows.append(cur)
    acc = np.zeros_like(X)
    for (i, j, k), c in coeffs.items():
        acc = (acc + c * pows[0][i] % p * pows[1][j] % p * pows[2][k]) % p
    return acc


def count_plane_projective(form: TernaryForm, field: ExtField | None = None) -> int:
    """Number of projective zeros of the form over F_p or an extension.

    This is a smooth-model curve count only when the plane model is
    nonsingular; the caller is responsible for checking that.
    """
    if field is None:
        X, _, _ = _curve_points_fp(form)
        return len(X)
    return _count_plane_ext(form, field)


def _count_plane_ext(form: TernaryForm, field: ExtField) -> int:
    if field.p != form.p:
        raise ValueError("extension field has the wrong characteristic")
    p = field.p
    by_y = form.y_coefficients_on_chart()
    rows = field.all_coeff_rows()  # oracle scale: q is small
    count = 0
    for n in range(field.q):
        x = tuple(int(v) for v in rows[n])
        xpows = [field.one()]
        for _ in range(form.degree):
            xpows.append(field.mul(xpows[-1], x))
        acc = np.zeros_like(rows)
        for poly in reversed(by_y):
            acc = field.mul_vec(acc, rows)
            cx = field.zero()
            for i, c in enumerate(poly.coeffs):
                if c:
                    cx = field.add(cx, field.mul(field.embed(c), xpows[i]))
            acc = (acc + np.asarray(cx, dtype=np.int64)) % p
        count += int((acc == 0).all(axis=1).sum())
    inf_poly, top = form.infinity_restriction()
    if inf_poly.is_zero():
        count += field.q
    else:
        vals = _ext_poly_eval(field, inf_poly, rows)
        count += int((vals == 0).all(axis=1).sum())
    if top == 0:
        count += 1
    return count


def plane_count_and_smooth(form: TernaryForm):
    """(projective point count, smoothness flag) in one enumeration pass.

    A singular point has all three partials vanishing, and since the
    degree is a unit mod p the Euler relation puts it on the curve, so
    scanning the curve's own points is exhaustive.  An identically zero
    partial vanishes everywhere and imposes no constraint.
    """
    if form.degree % form.p == 0:
        raise ValueError("degree divisible by p: Euler argument fails")
    X, Y, Z = _curve_points_fp(form)
    n = len(X)
    if n == 0:
        return 0, True
    sing = np.ones(n, dtype=bool)
    for part in form.partials():
        if part:
            sing &= _eval_monomials(part, X, Y, Z, form.p) == 0
        if not sing.any():
            return n, True
    return n, not bool(sing.any())


def plane_curve_is_smooth(form: TernaryForm) -> bool:
    return plane_count_and_smooth(form)[1]


def trace_of_v1(a: int, b: int, p: int) -> FrobeniusTrace:
    """Trace of the genus-1 component y^2 = cubic(x); one point at
    infinity since the model has odd degree."""
    rhs = build_v1_rhs(a, b, p)
    if rhs.degree != 3:
        raise DegenerateModel("v1_degree_drop", f"degree {rhs.degree} < 3")
    if not is_squarefree(rhs):
        raise DegenerateModel("v1_not_squarefree")
    count = p + 1 + _fp_char_sum(rhs)
    return FrobeniusTrace(p + 1 - count, p)


def trace_of_v2(a: int, b: int, p: int) -> FrobeniusTrace:
    """Trace of the plane cubic component, by projective enumeration."""
    form = build_v2_form(a, b, p)
    count, smooth = plane_count_and_smooth(form)
    if not smooth:
        raise DegenerateModel("v2_singular")
    return FrobeniusTrace(p + 1 - count, p)


def genus2_power_sums(count1: int, count2: int, p: int):
    """Eigenvalue power sums s_1, s_2, s_3 of a genus-2 Jacobian from the
    curve's counts over F_p and F_{p^2}.

    With s_k the k-th power sum of the four Frobenius eigenvalues,
    #C(F_{p^k}) = p^k + 1 - s_k; the functional equation pins the
    remaining symmetric functions (e_3 = p e_1, e_4 = p^2), and Newton's
    identities give s_3."""
    s1 = p + 1 - count1
    s2 = p * p + 1 - count2
    if (s1 * s1 - s2) % 2:
        raise InternalInvariantError("parity of power sums violated")
    e2 = (s1 * s1 - s2) // 2
    s3 = s1 * s2 - e2 * s1 + 3 * p * s1
    return s1, s2, s3
