"""Exact arithmetic over F_p, univariate polynomials, and residue fields.

Polynomials are coefficient tuples in ascending order, normalized so the
leading coefficient is nonzero; the zero polynomial is the empty tuple and
its degree is the sentinel -1.  Coefficients live in an explicit field
context, either ``PrimeField`` (elements are plain ints) or
``ResidueField`` (elements are ``ResidueElem``), and the polynomial code is
generic over the two, which is what lets root finding and square roots in
extensions reuse one factorization routine.
"""

from __future__ import annotations

import random

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with a fixed witness schedule (deterministic below 3.3e24)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factor_int(n: int) -> dict[int, int]:
    """Trial-division factorization, enough for desk-scale group orders."""
    assert n >= 1
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class PrimeField:
    """The field F_p with plain ints as elements."""

    def __init__(self, p: int):
        if p == 2 or p % 2 == 0 or not is_probable_prime(p):
            raise ValueError(f"modulus {p} is not an odd prime")
        self.p = p
        self.order = p
        self.char = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def pow(self, a, e: int):
        if e < 0:
            return pow(pow(a, -1, self.p), -e, self.p)
        return pow(a, e, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def from_int(self, c: int):
        return c % self.p

    def elements(self):
        return range(self.p)

    def legendre(self, a) -> int:
        """1 for a nonzero square, -1 for a non-square, 0 for zero."""
        a %= self.p
        if a == 0:
            return 0
        s = pow(a, (self.p - 1) // 2, self.p)
        return 1 if s == 1 else -1

    def sqrt(self, a):
        return field_sqrt(self, a)

    def nonresidue(self):
        for c in range(2, self.p):
            if self.legendre(c) == -1:
                return c
        raise ArithmeticError("no quadratic non-residue found")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def field_sqrt(F, a):
    """Tonelli-Shanks square root in any field context, or None.

    Uses the multiplicative group of order q-1; q = F.order.
    """
    if F.is_zero(a):
        return F.zero
    q = F.order
    if F.pow(a, (q - 1) // 2) != F.one:
        return None
    if q % 4 == 3:
        return F.pow(a, (q + 1) // 4)
    s, m = q - 1, 0
    while s % 2 == 0:
        s //= 2
        m += 1
    z = None
    for c in F.elements():
        if not F.is_zero(c) and F.pow(c, (q - 1) // 2) != F.one:
            z = c
            break
    c = F.pow(z, s)
    t = F.pow(a, s)
    r = F.pow(a, (s + 1) // 2)
    while t != F.one:
        t2, i = t, 0
        while t2 != F.one:
            t2 = F.mul(t2, t2)
            i += 1
        b = F.pow(c, 1 << (m - i - 1))
        m = i
        c = F.mul(b, b)
        t = F.mul(t, c)
        r = F.mul(r, b)
    return r


class Poly:
    """Univariate polynomial over a field context, ascending coefficients."""

    __slots__ = ("F", "c")

    def __init__(self, F, coeffs, normalize: bool = True):
        self.F = F
        c = tuple(coeffs)
        if normalize:
            n = len(c)
            while n > 0 and F.is_zero(c[n - 1]):
                n -= 1
            c = c[:n]
        self.c = c

    @classmethod
    def from_ints(cls, F, coeffs) -> "Poly":
        return cls(F, [F.from_int(v) for v in coeffs])

    @classmethod
    def zero(cls, F) -> "Poly":
        return cls(F, (), normalize=False)

    @classmethod
    def one(cls, F) -> "Poly":
        return cls(F, (F.one,), normalize=False)

    @classmethod
    def x(cls, F) -> "Poly":
        return cls(F, (F.zero, F.one), normalize=False)

    @classmethod
    def constant(cls, F, v) -> "Poly":
        return cls(F, (v,))

    @property
    def degree(self) -> int:
        """Degree; -1 is the zero polynomial sentinel."""
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return len(self.c) == 1 and self.c[0] == self.F.one

    def leading(self):
        if not self.c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.c[-1]

    def monic(self) -> "Poly":
        if not self.c:
            return self
        lc = self.c[-1]
        if lc == self.F.one:
            return self
        inv = self.F.inv(lc)
        return Poly(self.F, [self.F.mul(v, inv) for v in self.c], normalize=False)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.c == other.c and self.F == other.F

    def __hash__(self):
        return hash((self.F, self.c))

    def __add__(self, other: "Poly") -> "Poly":
        F = self.F
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = F.add(out[i], v)
        return Poly(F, out)

    def __neg__(self) -> "Poly":
        F = self.F
        return Poly(F, [F.neg(v) for v in self.c], normalize=False)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        F = self.F
        a, b = self.c, other.c
        if not a or not b:
            return Poly.zero(F)
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if F.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    def scale(self, v) -> "Poly":
        F = self.F
        return Poly(F, [F.mul(u, v) for u in self.c])

    def __divmod__(self, other: "Poly"):
        F = self.F
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        d = other.degree
        lc_inv = F.inv(other.c[-1])
        if len(r) - 1 < d:
            return Poly.zero(F), self
        q = [F.zero] * (len(r) - d)
        for i in range(len(r) - 1, d - 1, -1):
            if F.is_zero(r[i]):
                continue
            t = F.mul(r[i], lc_inv)
            q[i - d] = t
            for j, v in enumerate(other.c):
                r[i - d + j] = F.sub(r[i - d + j], F.mul(t, v))
        return Poly(F, q), Poly(F, r[:d])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, v):
        """Evaluate by Horner at a point of the coefficient field (or extension)."""
        F = self.F
        acc = None
        for coef in reversed(self.c):
            acc = coef if acc is None else F.add(F.mul(acc, v), coef)
        return F.zero if acc is None else acc

    def eval_in(self, K, v):
        """Evaluate at v in an extension field K, embedding the coefficients."""
        acc = K.zero
        for coef in reversed(self.c):
            acc = K.add(K.mul(acc, v), K.embed(coef) if hasattr(K, "embed") else coef)
        return acc

    def derivative(self) -> "Poly":
        F = self.F
        out = []
        for i in range(1, len(self.c)):
            out.append(F.mul(self.c[i], F.from_int(i)))
        return Poly(F, out)

    def shift(self, k: int) -> "Poly":
        """Multiply by X^k."""
        if not self.c:
            return self
        return Poly(self.F, (self.F.zero,) * k + self.c, normalize=False)

    def __repr__(self):
        return f"Poly({list(self.c)})"

    def __str__(self):
        return format_poly(self, "x")


def format_poly(f: Poly, var: str) -> str:
    """Render with descending powers, e.g. ``x^2 + 26*x + 39``."""
    if f.is_zero():
        return "0"
    parts = []
    for i in range(f.degree, -1, -1):
        v = f.c[i]
        if f.F.is_zero(v):
            continue
        if i == 0:
            parts.append(str(v))
        else:
            x = var if i == 1 else f"{var}^{i}"
            parts.append(x if v == f.F.one else f"{v}*{x}")
    return " + ".join(parts)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_xgcd(a: Poly, b: Poly):
    """Return (g, s, t) with s*a + t*b = g, g monic (or zero)."""
    F = a.F
    r0, r1 = a, b
    s0, s1 = Poly.one(F), Poly.zero(F)
    t0, t1 = Poly.zero(F), Poly.one(F)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc_inv = F.inv(r0.leading())
    scale = Poly.constant(F, lc_inv)
    return r0.monic(), s0 * scale, t0 * scale


def poly_powmod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly.one(base.F)
    base = base % mod
    while e > 0:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result


def is_irreducible(f: Poly) -> bool:
    """Rabin's test over the coefficient field."""
    F = f.F
    n = f.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    f = f.monic()
    q = F.order
    x = Poly.x(F)
    # X^(q^n) == X mod f, and gcd(X^(q^(n/r)) - X, f) == 1 for prime r | n
    powers = {}
    h = x
    for i in range(1, n + 1):
        h = poly_powmod(h, q, f)
        powers[i] = h
    if powers[n] != x % f:
        return False
    for r in factor_int(n):
        g = poly_gcd(powers[n // r] - x, f)
        if not g.is_one():
            return False
    return True


def squarefree_part(f: Poly) -> list[tuple[Poly, int]]:
    """Squarefree decomposition [(g_i, m_i)] with f = lc * prod g_i^m_i."""
    F = f.F
    p = F.char
    f = f.monic()
    out: list[tuple[Poly, int]] = []

    def decompose(f: Poly, mult: int):
        if f.degree <= 0:
            return
        d = f.derivative()
        if d.is_zero():
            decompose(_pth_root(f), mult * p)
            return
        g = poly_gcd(f, d)
        w = f // g
        i = 1
        while not w.is_one():
            y = poly_gcd(w, g)
            part = w // y
            if part.degree > 0:
                out.append((part, mult * i))
            w = y
            g = g // y
            i += 1
        decompose(g, mult)

    decompose(f, 1)
    merged: dict[Poly, int] = {}
    for g, m in out:
        merged[g] = merged.get(g, 0) + m if g in merged else m
    return sorted(merged.items(), key=lambda gm: (gm[0].degree, _poly_key(gm[0])))


def _pth_root(f: Poly) -> Poly:
    """p-th root of f when f' = 0, i.e. f = g(X^p); valid over F_q, q = p^k."""
    F = f.F
    p = F.char
    # coefficient a X^(p i) maps to a^(p^(k-1)) X^i
    k = 1
    q = F.order
    while p**k < q:
        k += 1
    e = p ** (k - 1)
    out = []
    for i in range(0, f.degree + 1, p):
        out.append(F.pow(f.c[i], e))
    return Poly(F, out)


def _poly_key(f: Poly):
    return tuple(_elem_key(v) for v in f.c)


def _elem_key(v):
    if isinstance(v, ResidueElem):
        return v.c
    return v


def distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Split a squarefree monic f into products of same-degree irreducibles."""
    F = f.F
    q = F.order
    x = Poly.x(F)
    out = []
    h = x
    d = 0
    rest = f
    while rest.degree > 2 * (d + 1) - 1:
        d += 1
        h = poly_powmod(h, q, rest)
        g = poly_gcd(h - x, rest)
        if g.degree > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _rand_elem(F, rng: random.Random):
    if isinstance(F, PrimeField):
        return rng.randrange(F.p)
    return F.from_coeffs([rng.randrange(F.p) for _ in range(F.deg)])


def equal_degree_split(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus on a product of degree-d irreducibles (odd q)."""
    F = f.F
    q = F.order
    n = f.degree
    if n == d:
        return [f.monic()]
    exponent = (q**d - 1) // 2
    while True:
        r = Poly(F, [_rand_elem(F, rng) for _ in range(n)])
        if r.degree < 1:
            continue
        g = poly_gcd(r, f)
        if not (0 < g.degree < n):
            g = poly_gcd(poly_powmod(r, exponent, f) - Poly.one(F), f)
            if not (0 < g.degree < n):
                continue
        return equal_degree_split(g, d, rng) + equal_degree_split(f // g, d, rng)


def poly_factor(f: Poly, seed: int = 1) -> list[tuple[Poly, int]]:
    """Full factorization into monic irreducibles with multiplicities.

    The leading coefficient is dropped; f equals lc times the product of the
    returned factors to their multiplicities.  The equal-degree stage is
    randomized from ``seed`` so runs are reproducible.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    out: list[tuple[Poly, int]] = []
    for g, mult in squarefree_part(f):
        for prod, d in distinct_degree(g):
            for irr in equal_degree_split(prod, d, rng):
                out.append((irr, mult))
    out.sort(key=lambda fm: (fm[0].degree, _poly_key(fm[0])))
    return out


def poly_roots(f: Poly) -> list:
    """Roots of f in its own coefficient field, without multiplicity."""
    F = f.F
    if f.is_zero():
        raise ValueError("zero polynomial")
    x = Poly.x(F)
    g = poly_gcd(f, poly_powmod(x, F.order, f) - x) if f.degree > 1 else f.monic()
    roots = []
    for h, _ in poly_factor(g):
        if h.degree == 1:
            roots.append(F.neg(h.c[0]))
    return sorted(roots, key=_elem_key)


class ResidueElem:
    """Element of F_p[X]/(A), stored as a fixed-length coefficient tuple."""

    __slots__ = ("K", "c")

    def __init__(self, K: "ResidueField", coeffs: tuple):
        self.K = K
        self.c = coeffs

    def __add__(self, other):
        return ResidueElem(self.K, self.K._add(self.c, other.c))

    def __sub__(self, other):
        return ResidueElem(self.K, self.K._sub(self.c, other.c))

    def __neg__(self):
        return ResidueElem(self.K, self.K._neg(self.c))

    def __mul__(self, other):
        return ResidueElem(self.K, self.K._mul(self.c, other.c))

    def __pow__(self, e: int):
        return self.K.pow(self, e)

    def inverse(self):
        return self.K.inv(self)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.c)

    def poly(self) -> Poly:
        return Poly(self.K.base, self.c)

    def __eq__(self, other):
        return isinstance(other, ResidueElem) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"ResidueElem({list(self.c)})"


class ResidueField:
    """F_p[X]/(A) for A monic irreducible; checked once at construction."""

    def __init__(self, base: PrimeField, modulus: Poly, check: bool = True):
        modulus = modulus.monic()
        if check and not is_irreducible(modulus):
            raise ValueError("modulus is not irreducible")
        self.base = base
        self.modulus = modulus
        self.deg = modulus.degree
        self.p = base.p
        self.char = base.p
        self.order = base.p**self.deg
        d = self.deg
        self.zero = ResidueElem(self, (0,) * d)
        self.one = ResidueElem(self, ((1,) + (0,) * (d - 1)) if d else ())
        # reductions of X^d .. X^(2d-2) modulo A, for fast multiplication
        self._xpow = []
        mc = modulus.c
        cur = [(-mc[i]) % self.p for i in range(d)]
        self._xpow.append(tuple(cur))
        for _ in range(d - 2):
            cur = self._shift_reduce(cur)
            self._xpow.append(tuple(cur))

    def _shift_reduce(self, v):
        p = self.p
        d = self.deg
        mc = self.modulus.c
        top = v[d - 1]
        out = [0] + list(v[: d - 1])
        if top:
            for i in range(d):
                out[i] = (out[i] - top * mc[i]) % p
        return out

    # -- raw tuple kernels --------------------------------------------------
    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def _mul(self, a, b):
        p = self.p
        d = self.deg
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        out = [v % p for v in prod[:d]]
        for k in range(d, 2 * d - 1):
            v = prod[k] % p
            if v:
                red = self._xpow[k - d]
                for i in range(d):
                    out[i] = (out[i] + v * red[i]) % p
        return tuple(out)

    # -- field protocol ------------------------------------------------------
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        g, s, _ = poly_xgcd(a.poly(), self.modulus)
        if g.degree != 0:
            raise ZeroDivisionError("element is not invertible")
        s = s.scale(self.base.inv(g.c[0] if g.c else 1))
        return self.from_poly(s)

    def div(self, a, b):
        return a * self.inv(b)

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def from_int(self, c: int):
        d = self.deg
        return ResidueElem(self, (c % self.p,) + (0,) * (d - 1))

    def embed(self, c):
        """Embed a base-field int."""
        return self.from_int(c)

    def from_poly(self, f: Poly):
        f = f % self.modulus
        c = list(f.c) + [0] * (self.deg - len(f.c))
        return ResidueElem(self, tuple(c))

    def from_coeffs(self, coeffs):
        c = [v % self.p for v in coeffs][: self.deg]
        c += [0] * (self.deg - len(c))
        return ResidueElem(self, tuple(c))

    def gen(self):
        """The residue class of X."""
        return self.from_poly(Poly.x(self.base))

    def elements(self):
        if self.order > 4_000_000:
            raise ValueError("field too large to enumerate")
        from itertools import product

        for c in product(range(self.p), repeat=self.deg):
            yield ResidueElem(self, c)

    def legendre(self, a) -> int:
        if a.is_zero():
            return 0
        return 1 if self.pow(a, (self.order - 1) // 2) == self.one else -1

    def sqrt(self, a):
        return field_sqrt(self, a)

    def frobenius(self, a):
        return self.pow(a, self.p)

    def minpoly(self, a) -> Poly:
        """Minimal polynomial of a over F_p, by linear algebra on powers."""
        rows = [self.one.c]
        cur = self.one
        for _ in range(self.deg):
            cur = cur * a
            rows.append(cur.c)
        # find least k with 1, a, ..., a^k linearly dependent
        for k in range(1, self.deg + 1):
            sol = _solve_dependency(self.base, rows[: k + 1])
            if sol is not None:
                return Poly(self.base, sol).monic()
        raise AssertionError("minimal polynomial not found")

    def __eq__(self, other):
        return (
            isinstance(other, ResidueField)
            and other.p == self.p
            and other.modulus.c == self.modulus.c
        )

    def __hash__(self):
        return hash(("ResidueField", self.p, self.modulus.c))

    def __repr__(self):
        return f"ResidueField(F_{self.p}[x]/({self.modulus}))"


def _solve_dependency(F: PrimeField, rows):
    """Coefficients c with sum c_i row_i = 0 and c_last = 1, or None."""
    k = len(rows) - 1
    n = len(rows[0])
    # solve sum_{i<k} c_i row_i = -row_k
    mat = [[rows[i][j] for i in range(k)] + [(-rows[k][j]) % F.p] for j in range(n)]
    sol = solve_mod_p(F.p, mat, k)
    if sol is None:
        return None
    return sol + [1]


def solve_mod_p(p: int, rows, ncols: int):
    """Solve an augmented system (rows of length ncols+1) mod p; None if none."""
    rows = [list(r) for r in rows]
    nr = len(rows)
    piv_cols = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nr):
            if rows[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [v * inv % p for v in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c] % p:
                m = rows[i][c]
                rows[i] = [(a - m * b) % p for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
        if r == nr:
            break
    for i in range(r, nr):
        if rows[i][ncols] % p:
            return None
    sol = [0] * ncols
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][ncols]
    return sol


def nullspace_mod_p(p: int, rows, ncols: int):
    """Basis of the right null space of the matrix (list of rows) mod p."""
    rows = [list(r) for r in rows]
    nr = len(rows)
    piv_of_col = {}
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nr):
            if rows[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [v * inv % p for v in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c] % p:
                m = rows[i][c]
                rows[i] = [(a - m * b) % p for a, b in zip(rows[i], rows[r])]
        piv_of_col[c] = r
        r += 1
        if r == nr:
            break
    basis = []
    free_cols = [c for c in range(ncols) if c not in piv_of_col]
    for fc in free_cols:
        v = [0] * ncols
        v[fc] = 1
        for c, pr in piv_of_col.items():
            v[c] = (-rows[pr][fc]) % p
        basis.append(v)
    return basis


class RatFunc:
    """Rational function num/den over F_p; den monic, gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        F = num.F
        if den is None:
            den = Poly.one(F)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
        lc = den.leading()
        if lc != F.one:
            inv = F.inv(lc)
            num = num.scale(inv)
            den = den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, f: Poly) -> "RatFunc":
        return cls(f)

    @classmethod
    def zero(cls, F) -> "RatFunc":
        return cls(Poly.zero(F))

    @classmethod
    def one(cls, F) -> "RatFunc":
        return cls(Poly.one(F))

    @classmethod
    def x(cls, F) -> "RatFunc":
        return cls(Poly.x(F))

    @classmethod
    def const(cls, F, v) -> "RatFunc":
        return cls(Poly.constant(F, v))

    @property
    def F(self):
        return self.num.F

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return RatFunc(self.den, self.num)

    def __eq__(self, other):
        return (
            isinstance(other, RatFunc)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def map_degree(self) -> int:
        """Degree as a map of the projective line."""
        return max(self.num.degree, self.den.degree)

    def evaluate(self, K, v):
        """Evaluate at a point with coordinates in field context K; None at poles."""
        den = self.den.eval_in(K, v)
        if K.is_zero(den):
            return None
        return K.mul(self.num.eval_in(K, v), K.inv(den))

    def __repr__(self):
        if self.den.is_one():
            return f"({self.num})"
        return f"({self.num})/({self.den})"


def poly_roots_ext(f: Poly, k: int, ext: ResidueField | None = None):
    """All roots of f (over F_p) in the extension F_{p^k}.

    The extension is built as F_p[t]/(m) for a deterministic irreducible m
    unless one is supplied.  Returns (extension, sorted roots).
    """
    F = f.F
    assert isinstance(F, PrimeField)
    if k * max(f.degree, 1) > 10**7:
        raise ValueError("degree * extension too large for desk-scale root finding")
    if ext is None:
        ext = build_extension(F, k)
    x = Poly.x(F)
    g = poly_gcd(f.monic(), poly_powmod(x, F.p**k, f) - x) if f.degree > 1 else f.monic()
    roots = []
    for h, _ in poly_factor(g):
        d = h.degree
        if k % d != 0:
            continue
        roots.extend(_roots_in_residue_field(h, ext))
    return ext, sorted(roots, key=lambda r: r.c)


def build_extension(F: PrimeField, k: int) -> ResidueField:
    """Deterministic F_{p^k}: first monic irreducible of degree k in lex scan.

    For k = 2 this is t^2 - n with n the least quadratic non-residue, which
    fixes the canonical representation used for curve points over F_{p^2}.
    """
    if k == 1:
        return ResidueField(F, Poly.x(F), check=False)
    if k == 2:
        n = F.nonresidue()
        return ResidueField(F, Poly.from_ints(F, [-n, 0, 1]), check=False)
    from itertools import product

    for tail in product(range(F.p), repeat=k):
        cand = Poly(F, list(tail) + [1])
        if is_irreducible(cand):
            return ResidueField(F, cand, check=False)
    raise AssertionError("no irreducible polynomial found")


def _roots_in_residue_field(h: Poly, K: ResidueField):
    """Roots in K of an irreducible h over F_p with deg h | [K:F_p]."""
    d = h.degree
    if d == 1:
        return [K.from_int(-h.c[0] % K.p)]
    # find one root by factoring h over K, then take Frobenius orbits
    hk = Poly(K, [K.from_int(c) for c in h.c])
    root = _find_root_over(hk)
    out = [root]
    cur = root
    for _ in range(d - 1):
        cur = K.frobenius(cur)
        out.append(cur)
    return out


def _find_root_over(f: Poly):
    """One root of f over its (residue-field) coefficient field K.

    f is assumed to split into linear factors over K.
    """
    K = f.F
    rng = random.Random(0xC0FFEE ^ f.degree)
    x = Poly.x(K)
    f = f.monic()
    # strip to the part splitting in K
    f = poly_gcd(f, poly_powmod(x, K.order, f) - x)
    while f.degree > 1:
        r = Poly(K, [K.from_coeffs([rng.randrange(K.p) for _ in range(K.deg)])
                     for _ in range(f.degree)])
        if r.degree < 1:
            continue
        g = poly_gcd(poly_powmod(r, (K.order - 1) // 2, f) - Poly.one(K), f)
        if 0 < g.degree < f.degree:
            f = g if g.degree <= f.degree - g.degree else f // g
    if f.degree != 1:
        raise ArithmeticError("no root in the given field")
    return K.neg(f.c[0])
