"""Elliptic curves in general Weierstrass form over F_p and small extensions.

The group law is the affine chord-tangent law; all operations are generic
over the field protocol from :mod:`galois_sieve.ff`, so the same code runs
over F_p, F_{p^2}, and the big residue fields used late in the pipeline.
"""

from __future__ import annotations

from .ff import PrimeField, ResidueField, build_extension, factor_int


class Point:
    """Affine point or the point at infinity; coordinates are field elements."""

    __slots__ = ("x", "y", "inf")

    def __init__(self, x=None, y=None, inf: bool = False):
        self.inf = inf
        self.x = x
        self.y = y

    @classmethod
    def infinity(cls) -> "Point":
        return cls(inf=True)

    def is_infinity(self) -> bool:
        return self.inf

    def key(self):
        if self.inf:
            return ("inf",)
        return (_coord_key(self.x), _coord_key(self.y))

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        if self.inf or other.inf:
            return self.inf and other.inf
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if self.inf:
            return "(0:1:0)"
        return f"({_coord_str(self.x)}:{_coord_str(self.y)}:1)"


def _coord_key(v):
    return v.c if hasattr(v, "c") else v


def _coord_str(v):
    return str(list(v.c)) if hasattr(v, "c") else str(v)


class Curve:
    """y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over a field context."""

    def __init__(self, F, a1, a2, a3, a4, a6):
        self.F = F
        self.a1 = F.from_int(a1) if isinstance(a1, int) else a1
        self.a2 = F.from_int(a2) if isinstance(a2, int) else a2
        self.a3 = F.from_int(a3) if isinstance(a3, int) else a3
        self.a4 = F.from_int(a4) if isinstance(a4, int) else a4
        self.a6 = F.from_int(a6) if isinstance(a6, int) else a6
        if F.is_zero(self.discriminant()):
            raise ValueError("singular curve")

    @classmethod
    def from_list(cls, F, coeffs) -> "Curve":
        a1, a2, a3, a4, a6 = coeffs
        return cls(F, a1, a2, a3, a4, a6)

    def coeff_list(self):
        return [self.a1, self.a2, self.a3, self.a4, self.a6]

    def discriminant(self):
        F = self.F
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = F.add(F.mul(a1, a1), F.mul(F.from_int(4), a2))
        b4 = F.add(F.mul(F.from_int(2), a4), F.mul(a1, a3))
        b6 = F.add(F.mul(a3, a3), F.mul(F.from_int(4), a6))
        b8 = F.sub(
            F.add(
                F.add(F.mul(F.mul(a1, a1), a6), F.mul(F.from_int(4), F.mul(a2, a6))),
                F.add(F.mul(a2, F.mul(a3, a3)), F.mul(F.neg(a1), F.mul(a3, a4))),
            ),
            F.mul(a4, a4),
        )
        t1 = F.neg(F.mul(F.mul(b2, b2), b8))
        t2 = F.neg(F.mul(F.from_int(8), F.mul(b4, F.mul(b4, b4))))
        t3 = F.neg(F.mul(F.from_int(27), F.mul(b6, b6)))
        t4 = F.mul(F.from_int(9), F.mul(b2, F.mul(b4, b6)))
        return F.add(F.add(t1, t2), F.add(t3, t4))

    def is_on(self, P: Point) -> bool:
        if P.inf:
            return True
        F = self.F
        x, y = P.x, P.y
        lhs = F.add(F.mul(y, y), F.add(F.mul(self.a1, F.mul(x, y)), F.mul(self.a3, y)))
        rhs = F.add(
            F.mul(x, F.mul(x, x)),
            F.add(F.mul(self.a2, F.mul(x, x)), F.add(F.mul(self.a4, x), self.a6)),
        )
        return lhs == rhs

    def change_field(self, K) -> "Curve":
        """The same curve with coefficients embedded in an extension field."""

        def emb(v):
            return K.embed(v) if isinstance(v, int) else K.embed(v)

        return Curve(K, emb(self.a1), emb(self.a2), emb(self.a3), emb(self.a4), emb(self.a6))

    def neg(self, P: Point) -> Point:
        if P.inf:
            return P
        F = self.F
        return Point(P.x, F.sub(F.neg(P.y), F.add(F.mul(self.a1, P.x), self.a3)))

    def add(self, P: Point, Q: Point) -> Point:
        F = self.F
        if P.inf:
            return Q
        if Q.inf:
            return P
        if P.x == Q.x:
            if P.y != Q.y or self._is_two_torsion(P):
                return Point.infinity()
            # tangent slope
            num = F.add(
                F.add(F.mul(F.from_int(3), F.mul(P.x, P.x)), F.mul(F.from_int(2), F.mul(self.a2, P.x))),
                F.sub(self.a4, F.mul(self.a1, P.y)),
            )
            den = F.add(F.add(F.mul(F.from_int(2), P.y), F.mul(self.a1, P.x)), self.a3)
            lam = F.div(num, den)
        else:
            lam = F.div(F.sub(Q.y, P.y), F.sub(Q.x, P.x))
        x3 = F.sub(
            F.sub(F.add(F.mul(lam, lam), F.mul(self.a1, lam)), self.a2),
            F.add(P.x, Q.x),
        )
        y3 = F.sub(
            F.sub(F.mul(lam, F.sub(P.x, x3)), P.y),
            F.add(F.mul(self.a1, x3), self.a3),
        )
        return Point(x3, y3)

    def _is_two_torsion(self, P: Point) -> bool:
        F = self.F
        return F.is_zero(F.add(F.add(F.mul(F.from_int(2), P.y), F.mul(self.a1, P.x)), self.a3))

    def sub(self, P: Point, Q: Point) -> Point:
        return self.add(P, self.neg(Q))

    def mul(self, n: int, P: Point) -> Point:
        if n < 0:
            return self.mul(-n, self.neg(P))
        R = Point.infinity()
        Q = P
        while n > 0:
            if n & 1:
                R = self.add(R, Q)
            Q = self.add(Q, Q)
            n >>= 1
        return R

    def lift_x(self, x):
        """The points with a given x-coordinate (0, 1, or 2 of them)."""
        F = self.F
        # complete the square: (2y + a1 x + a3)^2 = rhs
        rhs = F.add(
            F.mul(F.from_int(4), F.add(F.mul(x, F.mul(x, x)),
                                       F.add(F.mul(self.a2, F.mul(x, x)),
                                             F.add(F.mul(self.a4, x), self.a6)))),
            F.mul(F.add(F.mul(self.a1, x), self.a3), F.add(F.mul(self.a1, x), self.a3)),
        )
        if F.is_zero(rhs):
            zs = [F.zero]
        else:
            z = F.sqrt(rhs)
            if z is None:
                return []
            zs = [z, F.neg(z)]
        inv2 = F.inv(F.from_int(2))
        out = []
        for z in zs:
            y = F.mul(F.sub(z, F.add(F.mul(self.a1, x), self.a3)), inv2)
            out.append(Point(x, y))
        return out

    def points(self):
        """All points over the coefficient field, infinity included."""
        if self.F.order > 10**7:
            raise ValueError("field too large to enumerate points")
        pts = [Point.infinity()]
        for x in self.F.elements():
            pts.extend(self.lift_x(x))
        return pts

    def order_of(self, P: Point, group_order: int) -> int:
        """Order of P given a multiple of it (the group order)."""
        n = group_order
        for q, e in factor_int(group_order).items():
            for _ in range(e):
                if self.mul(n // q, P).is_infinity():
                    n //= q
                else:
                    break
        return n

    def __repr__(self):
        return f"Curve({self.coeff_list()!r} over {self.F!r})"


def curve_points(E: Curve, k: int = 1):
    """All points of E over F_{p^k}; E must be defined over a prime field."""
    F = E.F
    assert isinstance(F, PrimeField)
    if F.p**k > 10**7:
        raise ValueError("p^k too large to enumerate")
    if k == 1:
        return E.points()
    K = build_extension(F, k)
    return E.change_field(K).points()


def curve_trace(E: Curve) -> int:
    """t = p + 1 - #E(F_p); also reports supersingularity via p | t."""
    F = E.F
    assert isinstance(F, PrimeField)
    return F.p + 1 - len(E.points())


def is_ordinary(E: Curve) -> bool:
    return curve_trace(E) % E.F.p != 0
