"""Dense univariate polynomials over the exact fields of wedderburn.fields.

A Poly keeps a trimmed little-endian coefficient tuple; the zero polynomial
has an empty tuple and degree -1.  All operations are exact.
"""

from .fields import ExtField, FieldElt, is_prime


class FieldMismatch(TypeError):
    pass


class BothZero(ValueError):
    pass


class NotInvertible(ArithmeticError):
    pass


class ZeroConstantTerm(ValueError):
    pass


class NotDividingXNMinus1(ValueError):
    pass


class BadS(ValueError):
    pass


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def from_ints(cls, field, ints):
        if isinstance(field, ExtField):
            return cls(field, [field.elt([c]) for c in ints])
        return cls(field, [field.elt(c) for c in ints])

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,))

    @classmethod
    def x(cls, field):
        return cls(field, (field.zero, field.one))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one

    def lead(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self):
        if self.is_zero() or self.lead() == self.field.one:
            return self
        inv = self.lead().inverse()
        return Poly(self.field, [c * inv for c in self.coeffs])

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def _check(self, other):
        if not isinstance(other, Poly):
            raise FieldMismatch(f"expected Poly, got {type(other).__name__}")
        if other.field is not self.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, FieldElt):
            if other.field is not self.field:
                raise FieldMismatch("scalar from a different field")
            return Poly(self.field, [c * other for c in self.coeffs])
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quo = [self.field.zero] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        inv = other.lead().inverse()
        db = other.degree
        while len(rem) - 1 >= db and rem:
            while rem and rem[-1].is_zero():
                rem.pop()
            if len(rem) - 1 < db:
                break
            c = rem[-1] * inv
            shift = len(rem) - 1 - db
            quo[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[i + shift] = rem[i + shift] - c * b
        return Poly(self.field, quo), Poly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other):
        return (other % self).is_zero()

    def __call__(self, a):
        """Evaluate at a, which may live in an extension of the coefficient field."""
        if isinstance(a, Poly):
            # composition, reduced nowhere; small degrees only
            acc = Poly.zero(self.field)
            for c in reversed(self.coeffs):
                acc = acc * a + Poly(self.field, (c,))
            return acc
        if a.field is self.field:
            lift = lambda c: c
        elif isinstance(a.field, ExtField) and a.field.base is self.field:
            lift = a.field.lift
        else:
            raise FieldMismatch("cannot evaluate here")
        acc = a.field.zero
        for c in reversed(self.coeffs):
            acc = acc * a + lift(c)
        return acc

    def __eq__(self, other):
        return (isinstance(other, Poly) and other.field is self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def key(self):
        """(degree, flattened coefficient digits): the canonical sort key."""
        flat = ()
        for c in self.coeffs:
            flat += c.key()
        return (self.degree, flat)

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            cs = repr(c)
            if " " in cs:
                cs = f"({cs})"
            if i == 0:
                parts.append(cs)
            elif i == 1:
                parts.append(f"{cs}*x")
            else:
                parts.append(f"{cs}*x^{i}")
        return " + ".join(parts)


def x_power_minus_one(field, n):
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    coeffs = [-field.one] + [field.zero] * (n - 1) + [field.one]
    return Poly(field, coeffs)


def ext_gcd(f, g):
    """Monic gcd d of f and g plus Bezout coefficients: u*f + v*g = d."""
    if not isinstance(g, Poly) or not isinstance(f, Poly):
        raise FieldMismatch("ext_gcd needs two Polys")
    if f.field is not g.field:
        raise FieldMismatch("polynomials over different fields")
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    F = f.field
    r0, r1 = f, g
    u0, u1 = Poly.one(F), Poly.zero(F)
    v0, v1 = Poly.zero(F), Poly.one(F)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    lead_inv = r0.lead().inverse()
    d, u, v = r0 * lead_inv, u0 * lead_inv, v0 * lead_inv
    assert u * f + v * g == d, "Bezout identity failed"
    return d, u, v


def inverse_mod(f, modulus):
    """Inverse of f modulo `modulus`, or NotInvertible."""
    d, u, _ = ext_gcd(f % modulus, modulus)
    if not d.is_one():
        raise NotInvertible(f"gcd is {d!r}, not 1")
    return u % modulus


def powmod(f, e, modulus):
    result = Poly.one(f.field) % modulus
    base = f % modulus
    while e:
        if e & 1:
            result = result * base % modulus
        base = base * base % modulus
        e >>= 1
    return result


def reversed_coeffs(f):
    """Plain coefficient reversal by f's own degree; no normalization."""
    if f.is_zero():
        return f
    return Poly(f.field, tuple(reversed(f.coeffs)))


def reciprocal(f):
    """The monic reciprocal x^deg(f) * f(1/x), normalized monic.

    Requires f(0) != 0 so the degree is preserved.
    """
    if f.is_zero() or f.coeffs[0].is_zero():
        raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
    return reversed_coeffs(f).monic()


def formal_derivative(f):
    if f.degree < 1:
        return Poly.zero(f.field)
    F = f.field
    out = []
    for i in range(1, len(f.coeffs)):
        kk = i % F.char
        k = F.elt([kk]) if isinstance(F, ExtField) else F.elt(kk)
        out.append(f.coeffs[i] * k)
    return Poly(F, out)


def poly_order(f, cap=None):
    """Least k >= 1 with x^k = 1 mod f; requires f(0) != 0.

    Walks k upward one multiplication at a time.  A cap may be supplied
    when the caller knows a bound (factors of x^N - 1 pass 4N); passing it
    would then signal an upstream inconsistency.  The default cap is the
    unconditional bound |F|^deg - 1.
    """
    if f.degree < 1:
        raise ValueError("order modulo a constant is undefined")
    if f.coeffs[0].is_zero():
        raise ZeroConstantTerm("x is not invertible modulo f when f(0) = 0")
    if cap is None:
        cap = f.field.order ** f.degree - 1
    x = Poly.x(f.field) % f
    acc = x
    one = Poly.one(f.field)
    for k in range(1, cap + 1):
        if acc == one:
            return k
        acc = acc * x % f
    raise AssertionError(f"order of x mod {f!r} exceeds cap {cap}")


def s_involution(f, s, n):
    """The polynomial whose roots are the s-th powers of f's roots.

    f must divide x^n - 1; s must be invertible mod n.  Computed from the
    root side: substitute x^(s^-1) and intersect with x^n - 1, which keeps
    everything squarefree and inside the n-th roots of unity.
    """
    from math import gcd as igcd
    F = f.field
    if f.is_zero():
        raise NotDividingXNMinus1("zero polynomial")
    xn1 = x_power_minus_one(F, n)
    if not (xn1 % f).is_zero():
        raise NotDividingXNMinus1(f"{f!r} does not divide x^{n} - 1")
    if n == 1:
        return f.monic()  # x = 1 collapses the fold; the map fixes 1 and x - 1
    s %= n
    if igcd(s, n) != 1:
        raise BadS(f"s = {s} is not invertible mod {n}")
    sinv = pow(s, -1, n)
    out = [F.zero] * n
    for i, c in enumerate(f.coeffs):
        out[(i * sinv) % n] = out[(i * sinv) % n] + c
    g = Poly(F, out)
    assert not g.is_zero(), "substitution killed the polynomial, impossible"
    d, _, _ = ext_gcd(xn1, g)
    assert d.degree == f.degree, "s-involution changed the degree"
    return d.monic()


def is_irreducible(f):
    """Rabin's irreducibility test over any finite coefficient field."""
    m = f.degree
    if m < 1:
        return False
    if m == 1:
        return True
    f = f.monic()
    q = f.field.order
    x = Poly.x(f.field)
    if powmod(x, q ** m, f) != x % f:
        return False
    for r in sorted({d for d in range(2, m + 1) if m % d == 0 and is_prime(d)}):
        h = powmod(x, q ** (m // r), f) - (x % f)
        if h.is_zero():
            return False
        d, _, _ = ext_gcd(h, f)
        if not d.is_one():
            return False
    return True


def first_irreducible(field, m):
    """First monic irreducible of degree m over `field`, by ascending key.

    Coefficient vectors (c_{m-1}, ..., c_0) are enumerated as ascending
    base-|F| numbers, mirroring the modulus choice convention of
    fields.make_field.
    """
    if m < 1:
        raise ValueError("degree must be positive")
    if m == 1:
        return Poly.x(field)
    elts = list(field.elements())
    size = len(elts)
    for k in range(size ** m):
        digits = []
        kk = k
        for _ in range(m):
            digits.append(elts[kk % size])
            kk //= size
        f = Poly(field, digits + [field.one])
        if f.degree == m and is_irreducible(f):
            return f
    raise AssertionError("no irreducible polynomial found, impossible")
