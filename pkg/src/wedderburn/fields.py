"""Exact finite field arithmetic F_{p^m}, including extensions of extensions.

Everything here is immutable and deterministic: the modulus picked for
F_{p^m} is the first irreducible in a fixed enumeration, square roots are
canonicalized, and no randomness is used anywhere.
"""

import threading
from functools import lru_cache

# Field objects are interned (same parameters, same object) because element
# equality checks field identity.  Interning through an lru_cache alone is
# not enough under threads: two racers can each build a field and only one
# ends up cached.  A re-entrant lock around the cached constructors keeps
# the canonical-object guarantee.
_intern_lock = threading.RLock()


class NonPrimeCharacteristic(ValueError):
    pass


class DegreeZero(ValueError):
    pass


class ZeroElement(ValueError):
    pass


class NoSquareRoot(ArithmeticError):
    pass


class ZeroInput(ValueError):
    pass


class NotCoprime(ValueError):
    pass


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def split_prime_power(q):
    """Write q as p^m with p prime, or raise NonPrimeCharacteristic."""
    if q < 2:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            r = q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1:
                raise NonPrimeCharacteristic(f"{q} is not a prime power")
            return p, m
    raise NonPrimeCharacteristic(f"{q} is not a prime power")


def padic_valuation(c, p):
    """Exponent of the prime p in the integer c (c may be negative)."""
    if c == 0:
        raise ZeroInput("valuation of 0 is undefined")
    if p < 2:
        raise ValueError(f"bad prime {p}")
    c = abs(c)
    v = 0
    while c % p == 0:
        c //= p
        v += 1
    return v


def ord_mod(a, n):
    """Multiplicative order of a modulo n.  ord_mod(1, n) = 1 for any n >= 1."""
    if n < 1:
        raise ValueError(f"bad modulus {n}")
    if n == 1:
        return 1
    a %= n
    from math import gcd
    if gcd(a, n) != 1:
        raise NotCoprime(f"{a} not invertible mod {n}")
    k = 1
    x = a
    while x != 1:
        x = x * a % n
        k += 1
        if k > n:
            raise AssertionError("order search exceeded modulus, impossible")
    return k


class FieldElt:
    """An element of a FiniteField.  Immutable; operators delegate to the field."""

    __slots__ = ("field", "rep", "_hash")

    def __init__(self, field, rep):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rep", rep)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("field elements are immutable")

    def _wrap(self, rep):
        return FieldElt(self.field, rep)

    def __add__(self, other):
        self.field._check(other)
        return self._wrap(self.field._add(self.rep, other.rep))

    def __sub__(self, other):
        self.field._check(other)
        return self._wrap(self.field._add(self.rep, self.field._neg(other.rep)))

    def __neg__(self):
        return self._wrap(self.field._neg(self.rep))

    def __mul__(self, other):
        self.field._check(other)
        return self._wrap(self.field._mul(self.rep, other.rep))

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # a^(|F|-2); fields here are small enough that this never matters
        return self ** (self.field.order - 2)

    def is_zero(self):
        return self.field._eq(self.rep, self.field.zero.rep)

    def __eq__(self, other):
        return (isinstance(other, FieldElt) and other.field is self.field
                and self.field._eq(self.rep, other.rep))

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((id(self.field), self.key())))
        return self._hash

    def key(self):
        """Flat tuple of base-p digits; the canonical comparison/serialization order."""
        return self.field._key(self.rep)

    def __repr__(self):
        return self.field._show(self.rep)


class PrimeField:
    """F_p with elements represented by residues 0..p-1."""

    def __init__(self, p):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        self.char = p
        self.order = p
        self.degree = 1
        self.zero = FieldElt(self, 0)
        self.one = FieldElt(self, 1)

    def elt(self, v):
        return FieldElt(self, v % self.char)

    def _check(self, other):
        if not isinstance(other, FieldElt) or other.field is not self:
            raise TypeError("mixed-field arithmetic")

    def _add(self, a, b):
        return (a + b) % self.char

    def _neg(self, a):
        return -a % self.char

    def _mul(self, a, b):
        return a * b % self.char

    def _eq(self, a, b):
        return a == b

    def _key(self, a):
        return (a,)

    def _show(self, a):
        return str(a)

    def elements(self):
        for v in range(self.char):
            yield FieldElt(self, v)

    def __repr__(self):
        return f"GF({self.char})"


class ExtField:
    """base[x]/(modulus): an extension field over any FiniteField base.

    Elements are tuples of base-field elements, little-endian, of length
    exactly deg(modulus).  The residue of x is .gen.
    """

    def __init__(self, base, modulus):
        # modulus: tuple of base elements, monic, length deg+1, deg >= 1
        assert len(modulus) >= 2 and modulus[-1] == base.one, "modulus must be monic"
        self.base = base
        self.modulus = tuple(modulus)
        self.deg = len(modulus) - 1
        self.char = base.char
        self.order = base.order ** self.deg
        self.degree = base.degree * self.deg
        self.zero = FieldElt(self, (base.zero,) * self.deg)
        self.one = FieldElt(self, (base.one,) + (base.zero,) * (self.deg - 1))
        if self.deg == 1:
            self.gen = FieldElt(self, (-modulus[0],))
        else:
            self.gen = FieldElt(
                self, (base.zero, base.one) + (base.zero,) * (self.deg - 2))
        # x^deg == -(low part of modulus), cached for reduction
        self._xdeg = tuple(-c for c in modulus[:-1])

    def elt(self, coeffs):
        """Build an element from an iterable of base elements (or ints), low first."""
        out = []
        for c in coeffs:
            if isinstance(c, int):
                if not isinstance(self.base, PrimeField):
                    raise TypeError("int coefficients only over a prime base")
                c = self.base.elt(c)
            out.append(c)
        if len(out) > self.deg:
            raise ValueError("too many coefficients")
        out += [self.base.zero] * (self.deg - len(out))
        return FieldElt(self, tuple(out))

    def lift(self, a):
        """Embed a base-field element."""
        return self.elt([a])

    def _check(self, other):
        if not isinstance(other, FieldElt) or other.field is not self:
            raise TypeError("mixed-field arithmetic")

    def _add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(-x for x in a)

    def _mul(self, a, b):
        n = self.deg
        prod = [self.base.zero] * (2 * n - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                prod[i + j] = prod[i + j] + x * y
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if c.is_zero():
                continue
            for i, r in enumerate(self._xdeg):
                prod[k - n + i] = prod[k - n + i] + c * r
        return tuple(prod[:n])

    def _eq(self, a, b):
        return a == b

    def _key(self, a):
        out = ()
        for c in a:
            out += c.key()
        return out

    def _show(self, a):
        var = "t" if isinstance(self.base, PrimeField) else "u"
        parts = []
        for i, c in enumerate(a):
            if c.is_zero():
                continue
            cs = repr(c) if isinstance(self.base, PrimeField) else f"({c!r})"
            if i == 0:
                parts.append(cs)
            elif i == 1:
                parts.append(f"{cs}*{var}")
            else:
                parts.append(f"{cs}*{var}^{i}")
        return " + ".join(parts) if parts else "0"

    def elements(self):
        """All elements, ascending in key() order.  Only call on small fields."""
        import itertools
        base_elts = list(self.base.elements())
        for combo in itertools.product(base_elts, repeat=self.deg):
            yield FieldElt(self, combo)

    def __repr__(self):
        return f"GF({self.char}^{self.degree})[{self.base!r}-ext deg {self.deg}]"


# ---------------------------------------------------------------------------
# modulus search for make_field: dense poly helpers over F_p as int lists


def _pmulmod(a, b, f, p):
    n = len(f) - 1
    prod = [0] * (2 * n - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k]
        if c:
            for i in range(n):
                prod[k - n + i] = (prod[k - n + i] - c * f[i]) % p
    return prod[:n]


def _ppowmod(a, e, f, p):
    r = [1] + [0] * (len(f) - 2)
    while e:
        if e & 1:
            r = _pmulmod(r, a, f, p)
        a = _pmulmod(a, a, f, p)
        e >>= 1
    return r


def _ptrim(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, b, p):
    a = _ptrim(a)
    b = _ptrim(b)
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and a != [0]:
        shift = len(a) - len(b)
        c = a[-1] * inv % p
        for i, x in enumerate(b):
            a[i + shift] = (a[i + shift] - c * x) % p
        a = _ptrim(a)
    return a


def _pgcd(a, b, p):
    a = _ptrim(a)
    b = _ptrim(b)
    while b != [0]:
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible_fp(f, p):
    # Rabin's test; f monic over F_p as int list, deg >= 1
    m = len(f) - 1
    if m == 1:
        return True
    x = [0, 1] + [0] * (m - 2)
    if _ppowmod(x, p ** m, f, p) != x:
        return False
    for r in {d for d in range(2, m + 1) if m % d == 0 and is_prime(d)}:
        h = _ppowmod(x, p ** (m // r), f, p)
        diff = [(h[i] - x[i]) % p for i in range(m)]
        g = _pgcd(diff, f, p)
        if len(g) != 1:
            return False
    return True


def make_field(p, m):
    """The field F_{p^m}.

    For m >= 2 the modulus is the first irreducible monic polynomial of
    degree m over F_p, enumerating coefficient vectors (c_{m-1}, ..., c_0)
    as ascending base-p numbers.  That puts x^2+1 first for F_9 and
    x^3+x+1 first for F_8.  Cached, so field objects are canonical.
    """
    with _intern_lock:
        return _make_field(p, m)


@lru_cache(maxsize=None)
def _make_field(p, m):
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if m < 1:
        raise DegreeZero(f"degree must be positive, got {m}")
    if m == 1:
        return PrimeField(p)
    base = make_field(p, 1)  # the cached copy, so element fields compare by identity
    for k in range(p ** m):
        # base-p digits of k, most significant first, are (c_{m-1}, ..., c_0);
        # so the lsb-first digit list is (c_0, ..., c_{m-1}) directly
        digits = []
        kk = k
        for _ in range(m):
            digits.append(kk % p)
            kk //= p
        coeffs = digits + [1]
        if _is_irreducible_fp(coeffs, p):
            # route through the interning cache so make_field(p, m) and
            # ext_field(base, same modulus) are the same object
            return ext_field(base, tuple([base.elt(c) for c in coeffs]))
    raise AssertionError("no irreducible polynomial found, impossible")


def ext_field(base, modulus):
    """Interned ExtField constructor.

    Same (base, modulus) gives the same field object, so elements built in
    different places compare equal.  modulus is a tuple of base elements.
    """
    with _intern_lock:
        return _ext_field(base, modulus)


@lru_cache(maxsize=None)
def _ext_field(base, modulus):
    return ExtField(base, modulus)


def mul_order(a):
    """Order of a in the multiplicative group of its field."""
    if a.is_zero():
        raise ZeroElement("0 has no multiplicative order")
    n = a.field.order - 1
    order = n
    for p in _prime_factors(n):
        while order % p == 0 and (a ** (order // p)) == a.field.one:
            order //= p
    assert (a ** order) == a.field.one
    return order


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_in_subfield(a, k):
    """True iff a lies in the subfield of index [F:.]/k, i.e. a^(base^k) = a.

    Here base is the order of the field's base of scalars: for an ExtField
    built over K this tests membership in the degree-k subextension K_k,
    via the Frobenius fixed-point characterization a^(|K|^k) = a.
    """
    F = a.field
    b = F.base.order if isinstance(F, ExtField) else F.order
    return a ** (b ** k) == a


_EXHAUSTIVE_SQRT_BOUND = 4096


def sqrt_in_field(a):
    """A canonical square root of a, or raise NoSquareRoot.

    The returned root is always the lexicographically smaller of the two
    (by key() order), which is exactly what an exhaustive ascending scan
    would find first.  Small fields actually do the scan; odd-order fields
    beyond the bound go through Tonelli-Shanks and are then canonicalized,
    so the answer is identical either way.
    """
    F = a.field
    if a.is_zero():
        return F.zero
    if F.char == 2:
        return a ** (F.order // 2)
    if F.order <= _EXHAUSTIVE_SQRT_BOUND:
        for z in F.elements():
            if z * z == a:
                return z
        raise NoSquareRoot(f"{a!r} is not a square")
    if a ** ((F.order - 1) // 2) != F.one:
        raise NoSquareRoot(f"{a!r} is not a square")
    r = _tonelli(a)
    return min(r, -r, key=lambda z: z.key())


def _tonelli(a):
    """Tonelli-Shanks in any odd-order field, given that a is a square."""
    F = a.field
    q1 = F.order - 1
    s = padic_valuation(q1, 2)
    t = q1 >> s
    # deterministic nonresidue scan
    ns = None
    for z in F.elements():
        if z.is_zero():
            continue
        if z ** (q1 // 2) != F.one:
            ns = z
            break
    assert ns is not None, "no nonresidue in a field of odd order, impossible"
    c = ns ** t
    x = a ** ((t + 1) // 2)
    b = a ** t
    m = s
    while b != F.one:
        i = 0
        bb = b
        while bb != F.one:
            bb = bb * bb
            i += 1
            assert i < m, "Tonelli-Shanks loop escaped, nonsquare slipped through"
        e = c ** (2 ** (m - i - 1))
        x = x * e
        b = b * e * e
        c = e * e
        m = i
    assert x * x == a
    return x
