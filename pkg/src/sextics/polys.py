"""Dense univariate polynomials over F_p, plus the sextic constructors.

Coefficients are stored lowest degree first in a normalized tuple (no
trailing zeros; the zero polynomial is the empty tuple).  Homogeneous
ternary forms get a separate small class since the plane models are
only ever evaluated, never manipulated algebraically.

Resultant convention: Res(f, g) = lc(f)^deg(g) * prod g(alpha) over
the roots alpha of f in a splitting field, so Res(x - a, x - b) = a - b.
"""

from __future__ import annotations

import numpy as np

from .fields import inv_mod


class Poly:
    """Univariate polynomial over F_p, immutable."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p):
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def from_roots(cls, c, roots, p):
        """c * prod (x - r) for r in roots."""
        out = cls([c], p)
        for r in roots:
            out = out * cls([-r, 1], p)
        return out

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.p))

    def __repr__(self):
        if not self.coeffs:
            return f"Poly(0 mod {self.p})"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*x^{i}")
        return f"Poly({' + '.join(terms)} mod {self.p})"

    def _check_same_field(self, other):
        if self.p != other.p:
            raise ValueError("mixed moduli")

    def __add__(self, other):
        self._check_same_field(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] += c
        return Poly(a, self.p)

    def __sub__(self, other):
        self._check_same_field(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] -= c
        return Poly(a, self.p)

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.p)

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly([c * other for c in self.coeffs], self.p)
        self._check_same_field(other)
        if self.is_zero() or other.is_zero():
            return Poly([], self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + a * b) % self.p
        return Poly(out, self.p)

    __rmul__ = __mul__

    def __call__(self, x):
        """Horner evaluation at an int, exact mod p."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def eval_many(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized Horner over an int64 array of points."""
        acc = np.zeros_like(xs)
        for c in reversed(self.coeffs):
            acc = (acc * xs + c) % self.p
        return acc

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:], self.p)

    def monic(self):
        if self.is_zero():
            return self
        return self * inv_mod(self.lc, self.p)

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        self._check_same_field(other)
        p = self.p
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly([], p), self
        quo = [0] * (dq + 1)
        inv_lead = inv_mod(other.lc, p)
        for i in range(dq, -1, -1):
            c = rem[i + other.degree] * inv_lead % p
            quo[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = (rem[i + j] - c * b) % p
        return Poly(quo, p), Poly(rem, p)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def roots_fp(f: Poly):
    """All roots of f in F_p with multiplicity, ascending.

    Exhaustive scan over the field; multiplicities follow from repeated
    division by x - r.  The sum of multiplicities equals deg f exactly
    when f factors completely over F_p.
    """
    if f.is_zero():
        raise ValueError("roots of the zero polynomial")
    p = f.p
    xs = np.arange(p, dtype=np.int64)
    hits = xs[f.eval_many(xs) == 0]
    out = []
    for r in hits.tolist():
        lin = Poly([-r, 1], p)
        g = f
        while True:
            q, rem = divmod(g, lin)
            if not rem.is_zero():
                break
            out.append(r)
            g = q
    out.sort()
    return out


def is_squarefree(f: Poly) -> bool:
    """True iff gcd(f, f') is constant."""
    if f.is_zero():
        raise ValueError("squarefreeness of the zero polynomial")
    return poly_gcd(f, f.derivative()).degree <= 0


def resultant(f: Poly, g: Poly) -> int:
    """Res(f, g) with the convention Res(x - a, x - b) = a - b."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant needs nonzero polynomials")
    p = f.p
    acc = 1
    while True:
        if g.degree == 0:
            return acc * pow(g.coeffs[0], f.degree, p) % p
        if f.degree == 0:
            return acc * pow(f.coeffs[0], g.degree, p) % p
        r = f % g
        if r.is_zero():
            return 0
        # Res(f, g) = (-1)^(df dg) lc(g)^(df - dr) Res(g, r)
        sign = -1 if (f.degree * g.degree) % 2 else 1
        acc = acc * sign * pow(g.lc, f.degree - r.degree, p) % p
        f, g = g, r


class TernaryForm:
    """Homogeneous form in x, y, z over F_p, stored as exponent -> coeff.

    Only evaluation and formal partial derivatives are supported; the
    plane sextic and cubic models are counted point by point, never
    rearranged.
    """

    __slots__ = ("degree", "coeffs", "p")

    def __init__(self, degree, coeffs, p):
        clean = {}
        for (i, j, k), c in coeffs.items():
            if i + j + k != degree:
                raise ValueError(f"monomial {(i, j, k)} is not degree {degree}")
            c %= p
            if c:
                clean[(i, j, k)] = c
        if not clean:
            raise ValueError("the zero form does not define a curve")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", dict(clean))
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("TernaryForm is immutable")

    def key(self):
        return (self.degree, tuple(sorted(self.coeffs.items())), self.p)

    def __eq__(self, other):
        return isinstance(other, TernaryForm) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __call__(self, x, y, z):
        p = self.p
        acc = 0
        for (i, j, k), c in self.coeffs.items():
            acc = (acc + c * pow(x, i, p) * pow(y, j, p) % p * pow(z, k, p)) % p
        return acc

    def partials(self):
        """The three formal partial derivatives, as exponent -> coeff maps.

        Returned raw (possibly empty) rather than as TernaryForm since a
        partial may vanish identically.
        """
        outs = []
        for axis in range(3):
            d = {}
            for mono, c in self.coeffs.items():
                e = mono[axis]
                if e:
                    nm = list(mono)
                    nm[axis] = e - 1
                    key = tuple(nm)
                    d[key] = (d.get(key, 0) + e * c) % self.p
            outs.append({m: c for m, c in d.items() if c})
        return outs

    def y_coefficients_on_chart(self):
        """Coefficients of the form restricted to z = 1, as polynomials in x.

        Returns a list indexed by the power of y; entry j is the Poly in
        x multiplying y^j.  Used by the chunked affine point counts.
        """
        rows = [dict() for _ in range(self.degree + 1)]
        for (i, j, k), c in self.coeffs.items():
            rows[j][i] = (rows[j].get(i, 0) + c) % self.p
        out = []
        for row in rows:
            size = max(row) + 1 if row else 0
            cs = [0] * size
            for i, c in row.items():
                cs[i] = c
            out.append(Poly(cs, self.p))
        return out

    def infinity_restriction(self):
        """The form on the line z = 0 as a Poly in y after setting x = 1,
        together with the coefficient of y^degree (the point (0:1:0) lies
        on the curve iff that coefficient vanishes)."""
        cs = [0] * (self.degree + 1)
        for (i, j, k), c in self.coeffs.items():
            if k == 0:
                cs[j] = (cs[j] + c) % self.p
        top = cs[self.degree]
        return Poly(cs, self.p), top


# ----- constructors for the two sextic families -----


def build_f_ab(a, b, p) -> Poly:
    """The degree-6 right-hand side attached to the genus-6 sextic family:
    -(x^3 + b x^2 + a x + 1)((a+b+2) x^3 - (a+2b+3) x^2 + (b+3) x - 1)."""
    f1 = Poly([1, a, b, 1], p)
    f2 = Poly([-1, b + 3, -(a + 2 * b + 3), a + b + 2], p)
    return -(f1 * f2)


def build_v1_rhs(a, b, p) -> Poly:
    """Cubic right-hand side of the first quotient component:
    ((3a - b - 3) x - a + 3)(1 + (a - 3) x (1 - x))."""
    lin = Poly([3 - a, 3 * a - b - 3], p)
    quad = Poly([1, a - 3, -(a - 3)], p)
    return lin * quad


def build_v2_form(a, b, p) -> TernaryForm:
    """The plane cubic component, homogenized:
    x^3 + y^3 + z^3 + a(x^2 y + x y^2 + x^2 z + x z^2 + y^2 z + y z^2) + b xyz."""
    return TernaryForm(
        3,
        {
            (3, 0, 0): 1,
            (0, 3, 0): 1,
            (0, 0, 3): 1,
            (2, 1, 0): a,
            (1, 2, 0): a,
            (2, 0, 1): a,
            (1, 0, 2): a,
            (0, 2, 1): a,
            (0, 1, 2): a,
            (1, 1, 1): b,
        },
        p,
    )


def build_v3_rhs(a, b, p) -> Poly:
    """Sextic right-hand side of the genus-2 quotient component:
    -((a+1) x^3 + (2a+b) x^2 + 4a x + 4)(x^3 + a x^2 + a x + 1)."""
    f1 = Poly([4, 4 * a, 2 * a + b, a + 1], p)
    f2 = Poly([1, a, a, 1], p)
    return -(f1 * f2)


def build_w_components(a, b, p):
    """The three Jacobian components of the genus-10 sextic W_{a,b}:
    (V1 cubic rhs, V2 ternary cubic, V3 sextic rhs)."""
    return build_v1_rhs(a, b, p), build_v2_form(a, b, p), build_v3_rhs(a, b, p)


def build_w_form(a, b, p) -> TernaryForm:
    """The genus-10 plane sextic itself, homogenized:
    x^6 + y^6 + z^6 + a(x^4 y^2 + x^2 y^4 + x^4 z^2 + x^2 z^4 + y^4 z^2 + y^2 z^4)
    + b x^2 y^2 z^2."""
    return TernaryForm(
        6,
        {
            (6, 0, 0): 1,
            (0, 6, 0): 1,
            (0, 0, 6): 1,
            (4, 2, 0): a,
            (2, 4, 0): a,
            (4, 0, 2): a,
            (2, 0, 4): a,
            (0, 4, 2): a,
            (0, 2, 4): a,
            (2, 2, 2): b,
        },
        p,
    )
