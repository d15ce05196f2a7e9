"""Presentations of the two metacyclic families and their basic constants.

A group here is determined by (kind, n, s) together with the coefficient
field size q:

  split:     < x, y | x^n = 1 = y^2,  xy = yx^s >
  nonsplit:  < x, y | x^(2n) = 1,  y^2 = x^n,  xy = yx^s >

with s an involution exponent mod N (N = n resp. 2n).  Everything the
decomposition needs later (N, d = gcd(N, s-1), |G|, the adjusted copy of
s for the square-root construction) is derived once, up front, and the
value is immutable afterwards.
"""

from dataclasses import dataclass
from math import gcd

from .fields import padic_valuation, split_prime_power

SPLIT = "split"
NONSPLIT = "nonsplit"


class SNotInvolutive(ValueError):
    pass


class OrderNotCoprime(ValueError):
    pass


class EvenCharacteristic(ValueError):
    pass


@dataclass(frozen=True)
class GroupPresentation:
    kind: str
    n: int
    s: int
    q: int
    N: int
    d: int
    order: int
    s_adjusted: int

    @property
    def is_abelian(self):
        # s is stored normalized, so s = 1 covers N <= 2 as well
        return self.s == 1

    def __repr__(self):
        return f"{self.kind}:n={self.n},s={self.s}"


def make_group(kind, n, s, q):
    """Validate (kind, n, s, q) and return the normalized GroupPresentation.

    s is reduced mod N.  In the nonsplit q = 3 mod 4 branch with
    v2(n) <= v2(q+1), the stored s_adjusted is bumped by N once if needed
    so that v2(s_adjusted + 1) <= v2(q+1) + 1; the square-root-based
    matrix construction depends on that bound and reads s_adjusted, while
    everything else reads the residue s.
    """
    if kind not in (SPLIT, NONSPLIT):
        raise ValueError(f"kind must be {SPLIT!r} or {NONSPLIT!r}, got {kind!r}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    p, _ = split_prime_power(q)
    if p == 2:
        raise EvenCharacteristic(f"q = {q} is even")
    N = n if kind == SPLIT else 2 * n
    if N % p == 0:
        raise OrderNotCoprime(f"characteristic {p} divides the group order {2 * N}")
    if N == 1:
        s = 1
    else:
        s = s % N
        if gcd(s, N) != 1 or (s * s) % N != 1:
            raise SNotInvolutive(f"s = {s} does not satisfy s^2 = 1 mod {N}")
    s_adjusted = s
    if (kind == NONSPLIT and q % 4 == 3
            and padic_valuation(n, 2) <= padic_valuation(q + 1, 2)
            and padic_valuation(s + 1, 2) > padic_valuation(q + 1, 2) + 1):
        s_adjusted = s + N
    d = gcd(N, s - 1) if N > 1 else 1
    return GroupPresentation(kind=kind, n=n, s=s, q=q, N=N, d=d,
                             order=2 * N, s_adjusted=s_adjusted)


def group_elements(g):
    """Normal forms x^i y^j as (i, j) pairs: all j = 0 first, then j = 1.

    The list index of x^i y^j is j*N + i, which is also the layout used
    for coefficient vectors of group algebra elements P(x) + Q(x)y.
    """
    return [(i, j) for j in (0, 1) for i in range(g.N)]


def element_index(g, i, j):
    return j * g.N + i % g.N


def group_mult(g, a, b):
    """Product of two normal forms (i1, j1) * (i2, j2) in G."""
    i1, j1 = a
    i2, j2 = b
    N = g.N
    if j1 == 0:
        i, j = (i1 + i2) % N, j2
    else:
        # push y left past x^(i2): y x^c = x^(c*s) y since s is its own inverse
        i = (i1 + g.s * i2) % N
        j = 1 + j2
    if j == 2:
        j = 0
        if g.kind == NONSPLIT:
            i = (i + g.n) % N
    return (i, j)


def group_inverse(g, a):
    i, j = a
    N = g.N
    if j == 0:
        return (-i % N, 0)
    # (x^i y)^-1 = y^-1 x^-i = x^(-i*s) y^-1; y^-1 = y resp. x^(-n) y = x^n y
    k = (-i * g.s) % N
    if g.kind == NONSPLIT:
        k = (k + g.n) % N
    return (k, 1)


def parse_group(text):
    """Inverse of repr(GroupPresentation): "split:n=4,s=3" -> (kind, n, s)."""
    head, _, tail = text.partition(":")
    kind = head.strip().lower()
    if kind not in (SPLIT, NONSPLIT):
        raise ValueError(f"unknown group kind {head!r}")
    params = {}
    for piece in tail.split(","):
        key, eq, val = piece.partition("=")
        key = key.strip()
        if not eq or key not in ("n", "s") or key in params:
            raise ValueError(f"bad group parameter {piece!r}")
        try:
            params[key] = int(val)
        except ValueError:
            raise ValueError(f"bad integer in group parameter {piece!r}") from None
    if set(params) != {"n", "s"}:
        raise ValueError(f"group spec needs exactly n=... and s=..., got {text!r}")
    return kind, params["n"], params["s"]
