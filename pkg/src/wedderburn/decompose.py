"""Wedderburn decomposition of F_qG for the two metacyclic families.

Every simple component is reported with its matrix size (1 or 2), the
degree m of its residue field over F_q, and explicit generator images.
The images are computed numerically: representations are conjugated as
matrices over the factor field and the expected subfield membership of
the entries is asserted afterwards, rather than trusting any rewritten
closed form.  Each component is also pushed through the defining
relations of the group before it is returned.

Per irreducible factor f of x^N - 1 (with root xi of order l) the shape
of the component depends on where f sits:

  f | x^d - 1, split kind      two one-dimensional components, y -> +-1
  f | x^d - 1, nonsplit kind   the quotient K_f[y]/(y^2 - xi^n); splits
                               into two one-dimensional components when
                               xi^n is a square in K_f, otherwise one
                               component over the quadratic extension
  f self-involutive, l not | d one 2x2 component over the half field,
                               via the sigma/eta/theta conjugation frame
  f in a swapped pair          one 2x2 component over K_f, generators
                               diagonal and antidiagonal
"""

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .cyclotomic import classify
from .fields import (NoSquareRoot, ext_field, make_field, mul_order,
                     padic_valuation, split_prime_power, sqrt_in_field)
from .groups import NONSPLIT, SPLIT

ABELIAN_PART = "abelian"
SELF_INVOLUTIVE = "self-involutive"
PAIR = "pair"


@dataclass(frozen=True)
class ComponentSource:
    """Where a component came from in the factor list."""
    kind: str                  # ABELIAN_PART, SELF_INVOLUTIVE or PAIR
    position: int              # index into the classification report
    partner: Optional[int]     # second factor position, for pairs
    root_order: int
    frame: str                 # which generator-image frame was used

    def to_json(self):
        return {"kind": self.kind, "position": self.position,
                "partner": self.partner, "root_order": self.root_order,
                "frame": self.frame}


@dataclass(frozen=True)
class WedderburnComponent:
    """One simple component M_l(F_{q^m}), with generator images.

    The image matrices are l x l tuples over an explicit field that
    contains F_{q^m}; entry membership in the degree-m subfield is part
    of component_matrices_check.
    """
    l: int
    m: int
    multiplicity: int
    source: ComponentSource
    image_x: tuple
    image_y: tuple

    @property
    def dimension(self):
        return self.multiplicity * self.l * self.l * self.m

    def to_json(self):
        ser = lambda M: [[list(z.key()) for z in row] for row in M]
        return {"l": self.l, "m": self.m, "multiplicity": self.multiplicity,
                "source": self.source.to_json(),
                "image_x": ser(self.image_x), "image_y": ser(self.image_y)}


@dataclass(frozen=True)
class Decomposition:
    group: object
    report: object
    components: tuple

    @property
    def component_count(self):
        return len(self.components)

    @property
    def dimension_sum(self):
        return sum(c.dimension for c in self.components)

    def to_json(self):
        return {"group": repr(self.group),
                "factorization": self.report.to_json(),
                "components": [c.to_json() for c in self.components],
                "totals": {"component_count": self.component_count,
                           "dimension_sum": self.dimension_sum}}


# ---------------------------------------------------------------------------
# small exact matrix helpers (1x1 and 2x2 over a FieldElt field)


def mat_mul(A, B):
    n = len(A)
    return tuple(tuple(sum((A[i][k] * B[k][j] for k in range(n)),
                           start=A[0][0].field.zero) for j in range(n))
                 for i in range(n))


def mat_pow(A, e):
    assert e >= 1
    out = A
    for bit in bin(e)[3:]:
        out = mat_mul(out, out)
        if bit == "1":
            out = mat_mul(out, A)
    return out


def mat_identity(field, n):
    return tuple(tuple(field.one if i == j else field.zero for j in range(n))
                 for i in range(n))


def mat_scalar(field, n, c):
    return tuple(tuple(c if i == j else field.zero for j in range(n))
                 for i in range(n))


def mat_inv(A):
    F = A[0][0].field
    if len(A) == 1:
        return ((A[0][0].inverse(),),)
    (a, b), (c, d) = A
    det = a * d - b * c
    di = det.inverse()
    return ((d * di, -b * di), (-c * di, a * di))


def conjugate(Z, M):
    """Z^{-1} M Z."""
    return mat_mul(mat_mul(mat_inv(Z), M), Z)


def component_matrices_check(component, g):
    """True iff the generator images define a representation of g with
    entries in the declared degree-m subfield."""
    X, Y = component.image_x, component.image_y
    field = X[0][0].field
    size = len(X)
    if size != component.l:
        return False
    ident = mat_identity(field, size)
    if mat_pow(X, g.N) != ident:
        return False
    yy = mat_mul(Y, Y)
    want = ident if g.kind == SPLIT else mat_pow(X, g.n)
    if yy != want:
        return False
    if mat_mul(X, Y) != mat_mul(Y, mat_pow(X, g.s)):
        return False
    bound = g.q ** component.m
    return all(z ** bound == z for row in X + Y for z in row)


def _checked(component, g):
    assert component_matrices_check(component, g), \
        f"internal: component at position {component.source.position} failed its checks"
    return component


# ---------------------------------------------------------------------------
# per-factor constructions


def _abelian_split(g, pos, fac, F):
    """Two one-dimensional components y -> +-1 for f | x^d - 1, split kind."""
    K = ext_field(F, fac.poly.coeffs)
    theta = K.gen
    out = []
    for sign, tag in ((K.one, "psi+"), (-K.one, "psi-")):
        src = ComponentSource(ABELIAN_PART, pos, None, fac.root_order, tag)
        out.append(_checked(WedderburnComponent(
            1, fac.degree, 1, src, ((theta,),), ((sign,),)), g))
    return out


def _abelian_nonsplit(g, pos, fac, F):
    """Components of K_f[y]/(y^2 - xi^n) for f | x^d - 1, nonsplit kind.

    The quotient splits exactly when xi^n is a square in K_f; the two
    roots give the y-images.  Otherwise it is the quadratic extension,
    one component with m doubled.
    """
    K = ext_field(F, fac.poly.coeffs)
    theta = K.gen
    target = theta ** g.n
    try:
        root = sqrt_in_field(target)
    except NoSquareRoot:
        root = None
    if root is not None:
        out = []
        for val, tag in ((root, "psi+"), (-root, "psi-")):
            src = ComponentSource(ABELIAN_PART, pos, None, fac.root_order, tag)
            out.append(_checked(WedderburnComponent(
                1, fac.degree, 1, src, ((theta,),), ((val,),)), g))
        return out
    # y generates a quadratic extension over K_f
    E = ext_field(K, (-target, K.zero, K.one))
    src = ComponentSource(ABELIAN_PART, pos, None, fac.root_order, "quad")
    comp = WedderburnComponent(1, 2 * fac.degree, 1, src,
                               ((E.lift(theta),),), ((E.gen,),))
    return [_checked(comp, g)]


def _pair_component(g, pos, fac, F):
    """M_2(K_f) for a swapped pair {f, f*}: x diagonal, y antidiagonal."""
    K = ext_field(F, fac.poly.coeffs)
    xi = K.gen
    eps = xi ** g.n          # 1 on the x^n - 1 side, -1 on the x^n + 1 side
    X = ((xi, K.zero), (K.zero, xi ** g.s))
    Y = ((K.zero, eps), (K.one, K.zero))
    tag = "tau-pair" if eps == K.one else "omega-pair"
    src = ComponentSource(PAIR, pos, fac.partner, fac.root_order, tag)
    return [_checked(WedderburnComponent(2, fac.degree, 1, src, X, Y), g)]


def _self_involutive_split_style(g, pos, fac, F):
    """The 2x2 component for a self-involutive f with xi^n = 1.

    Conjugates x -> diag(xi, xi^s), y -> antidiagonal by
    Z = [[1, -xi], [1, -xi^s]] and asserts the entries drop into the
    half field.
    """
    K = ext_field(F, fac.poly.coeffs)
    xi = K.gen
    xis = xi ** g.s
    assert xi ** g.n == K.one
    X0 = ((xi, K.zero), (K.zero, xis))
    Y0 = ((K.zero, K.one), (K.one, K.zero))
    Z = ((K.one, -xi), (K.one, -xis))
    X, Y = conjugate(Z, X0), conjugate(Z, Y0)
    # the closed forms these must match
    assert X == ((K.zero, xi ** (g.s + 1)), (-K.one, xi + xis))
    assert Y == ((K.one, -(xi + xis)), (K.zero, -K.one))
    src = ComponentSource(SELF_INVOLUTIVE, pos, None, fac.root_order, "sigma-tau")
    return [_checked(WedderburnComponent(
        2, fac.degree // 2, 1, src, X, Y), g)]


def _self_involutive_eta(g, pos, fac, F):
    """The 2x2 component for self-involutive f | x^n + 1 when sqrt(-1)
    lives in the half field (q = 1 mod 4, or 4 | deg f)."""
    K = ext_field(F, fac.poly.coeffs)
    xi = K.gen
    xis = xi ** g.s
    beta = sqrt_in_field(-K.one)
    m = fac.degree // 2
    assert beta ** (g.q ** m) == beta, "sqrt(-1) missed the half field"
    X0 = ((xi, K.zero), (K.zero, xis))
    Y0 = ((K.zero, -K.one), (K.one, K.zero))
    Z = ((-xis, beta), (beta * xi, K.one))
    X, Y = conjugate(Z, X0), conjugate(Z, Y0)
    assert Y == ((-beta, K.zero), (-(xi + xis), beta))
    assert X == ((K.zero, beta), (beta * xi ** (g.s + 1), xi + xis))
    src = ComponentSource(SELF_INVOLUTIVE, pos, None, fac.root_order, "eta-omega")
    return [_checked(WedderburnComponent(2, m, 1, src, X, Y), g)]


def theta_frame_scale(g, fac, F):
    """The ratio r = b/a of the conjugation Z = [[a, b], [-xi a, -xi^s b]]
    used on the x^n + 1 side when q = 3 mod 4 and deg(f)/2 is odd.

    Entries of the conjugated matrices land in the half field exactly
    when r has norm -1 there, so r is built to have norm -1: take
    iterated square roots of xi down to the full 2-power depth the field
    allows, then solve a linear congruence on the exponent.  Square
    roots pick the lexicographically smaller of the two choices, so the
    result is deterministic.  Independent of s.
    """
    K = ext_field(F, fac.poly.coeffs)
    xi = K.gen
    depth = padic_valuation(g.q + 1, 2) - padic_valuation(g.n, 2)
    assert depth >= 0, "theta frame needs the 2-part of n to fit in q + 1"
    theta = xi
    for _ in range(depth):
        theta = sqrt_in_field(theta)
    L = mul_order(theta)
    assert L == fac.root_order << depth
    half = g.q ** (fac.degree // 2)
    A = 1 + half
    g0 = gcd(A, L)
    assert (L // 2) % g0 == 0
    t = (L // 2 // g0) * pow(A // g0, -1, L // g0) % (L // g0)
    r = theta ** t
    assert r * r ** half == -K.one
    return r


def _self_involutive_theta(g, pos, fac, F):
    """The 2x2 component for self-involutive f | x^n + 1 when sqrt(-1)
    does not reach the half field (q = 3 mod 4, deg(f)/2 odd)."""
    K = ext_field(F, fac.poly.coeffs)
    xi = K.gen
    xis = xi ** g.s
    r = theta_frame_scale(g, fac, F)
    X0 = ((xi, K.zero), (K.zero, xis))
    Y0 = ((K.zero, -K.one), (K.one, K.zero))
    Z = ((K.one, r), (-xi, -xis * r))
    # this frame conjugates on the other side: Z M Z^{-1}
    Zi = mat_inv(Z)
    X = mat_mul(mat_mul(Z, X0), Zi)
    Y = mat_mul(mat_mul(Z, Y0), Zi)
    src = ComponentSource(SELF_INVOLUTIVE, pos, None, fac.root_order, "theta-omega")
    return [_checked(WedderburnComponent(2, fac.degree // 2, 1, src, X, Y), g)]


def _self_involutive_nonsplit(g, pos, fac, F):
    if g.n % fac.root_order == 0:
        # xi^n = 1: same machinery as the split kind
        return _self_involutive_split_style(g, pos, fac, F)
    if g.q % 4 == 1 or fac.degree % 4 == 0:
        return _self_involutive_eta(g, pos, fac, F)
    return _self_involutive_theta(g, pos, fac, F)


# ---------------------------------------------------------------------------


def _decompose(g, per_abelian, per_self_involutive):
    p, a = split_prime_power(g.q)
    F = make_field(p, a)
    report = classify(F, g.N, g.s)
    comps = []
    for pos, fac in enumerate(report.factors):
        if fac.divides_x_d_minus_1:
            comps.extend(per_abelian(g, pos, fac, F))
        elif fac.self_involutive:
            comps.extend(per_self_involutive(g, pos, fac, F))
        elif fac.partner > pos:
            comps.extend(_pair_component(g, pos, fac, F))
    dec = Decomposition(g, report, tuple(comps))
    assert dec.dimension_sum == g.order, \
        f"internal: dimension audit {dec.dimension_sum} != {g.order}"
    return dec


def decompose_split(g):
    assert g.kind == SPLIT
    return _decompose(g, _abelian_split, _self_involutive_split_style)


def decompose_nonsplit(g):
    assert g.kind == NONSPLIT
    return _decompose(g, _abelian_nonsplit, _self_involutive_nonsplit)


def decompose(g):
    return decompose_split(g) if g.kind == SPLIT else decompose_nonsplit(g)
