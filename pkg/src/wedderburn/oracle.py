"""Brute-force ground truth for F_qG: table-based arithmetic and checks.

Nothing in here knows the structure theory.  Elements are coefficient
vectors indexed by the group's normal forms, products go through the
multiplication table, the center comes out of exact linear algebra mod p,
and the number of simple components is read off the fixed space of the
p-power map on the center.  The decomposition machinery is tested against
this module, never the other way around.

Coefficients of F_{p^m} are stored componentwise as integers mod p in a
numpy array of shape (|G|, m), so all the heavy loops are vectorized but
every operation stays exact.
"""

import threading
from functools import lru_cache

import numpy as np

from .cyclotomic import classify
from .fields import ExtField, PrimeField, ext_field, make_field, split_prime_power
from .groups import NONSPLIT, element_index, group_elements, group_mult
from .polys import Poly, ext_gcd, x_power_minus_one


class GroupMismatch(TypeError):
    pass


class InconsistentPrescription(ValueError):
    pass


def _structure_tensor(field):
    """T[a, b, k] with w^a * w^b = sum_k T[a, b, k] w^k for F_p[w] = F_{p^m}."""
    m = field.degree
    if m == 1:
        return np.ones((1, 1, 1), dtype=np.int64)
    if not (isinstance(field, ExtField) and isinstance(field.base, PrimeField)):
        raise TypeError("oracle supports F_p and one-step extensions F_{p^m} only")
    T = np.zeros((m, m, m), dtype=np.int64)
    for a in range(m):
        for b in range(m):
            T[a, b] = (field.gen ** (a + b)).key()
    return T


class GroupAlgebra:
    """The group algebra F_qG with its multiplication table.

    The table is validated on construction: identity row and column, and
    associativity checked exhaustively for |G| <= 32 or on seeded random
    triples above that.
    """

    def __init__(self, group, field, seed=0):
        if field.order != group.q:
            raise ValueError(f"field of size {field.order} vs group over q = {group.q}")
        self.group = group
        self.field = field
        self.p = field.char
        self.m = field.degree
        self.size = group.order
        self.elements = group_elements(group)
        n = self.size
        table = np.zeros((n, n), dtype=np.intp)
        for a, ga in enumerate(self.elements):
            for b, gb in enumerate(self.elements):
                i, j = group_mult(group, ga, gb)
                table[a, b] = element_index(group, i, j)
        self.table = table
        self.table.setflags(write=False)
        assert (table[0] == np.arange(n)).all() and (table[:, 0] == np.arange(n)).all()
        if n <= 32:
            left = table[table]                       # [a,b,c] = (ab)c
            right = np.take(table, table, axis=1)     # [a,b,c] = a(bc)
            assert (left == right).all(), "multiplication table not associative"
        else:
            rng = np.random.default_rng(seed)
            abc = rng.integers(0, n, size=(2000, 3))
            for a, b, c in abc:
                assert table[table[a, b], c] == table[a, table[b, c]]
        self.tensor = _structure_tensor(field)

    def zero(self):
        return AlgebraElement(self, np.zeros((self.size, self.m), dtype=np.int64))

    def one(self):
        return self.basis_element(0)

    def basis_element(self, k):
        c = np.zeros((self.size, self.m), dtype=np.int64)
        c[k, 0] = 1
        return AlgebraElement(self, c)

    def scalar(self, c):
        """The scalar c (a field element, or int over a prime field) times 1."""
        if isinstance(c, int):
            c = self.field.elt(c)
        v = np.zeros((self.size, self.m), dtype=np.int64)
        v[0] = c.key()
        return AlgebraElement(self, v)

    def from_polys(self, P, Q):
        """The element P(x) + Q(x) y; degrees must stay below N."""
        N = self.group.N
        if P.degree >= N or Q.degree >= N:
            raise ValueError("coefficient polynomials must have degree < N")
        c = np.zeros((self.size, self.m), dtype=np.int64)
        for i, coef in enumerate(P.coeffs):
            c[element_index(self.group, i, 0)] = coef.key()
        for i, coef in enumerate(Q.coeffs):
            c[element_index(self.group, i, 1)] = coef.key()
        return AlgebraElement(self, c)


_algebra_lock = threading.Lock()


def algebra_for(group):
    """The cached F_qG over the canonical F_q from make_field.

    Locked for the same reason the field constructors are: arithmetic
    checks algebra identity, so concurrent first calls must not each get
    their own copy.
    """
    with _algebra_lock:
        return _algebra_for(group)


@lru_cache(maxsize=None)
def _algebra_for(group):
    return GroupAlgebra(group, make_field(*split_prime_power(group.q)))


class AlgebraElement:
    """One element of a GroupAlgebra; immutable, exact."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        coeffs = np.asarray(coeffs, dtype=np.int64) % algebra.p
        coeffs.setflags(write=False)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("algebra elements are immutable")

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            raise GroupMismatch(f"expected AlgebraElement, got {type(other).__name__}")
        if other.algebra is not self.algebra:
            raise GroupMismatch("elements of different group algebras")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, self.coeffs - other.coeffs)

    def __neg__(self):
        return AlgebraElement(self.algebra, -self.coeffs)

    def __mul__(self, other):
        return multiply(self, other)

    def __pow__(self, k):
        assert k >= 1
        out = self
        for bit in bin(k)[3:]:
            out = out * out
            if bit == "1":
                out = out * self
        return out

    def scaled(self, c):
        """Multiply by a field scalar (or int over a prime base)."""
        A = self.algebra
        if isinstance(c, int):
            c = A.field.elt(c)
        cv = np.array(c.key(), dtype=np.int64)
        prod = np.einsum("im,n,mnk->ik", self.coeffs, cv, A.tensor)
        return AlgebraElement(A, prod)

    def is_zero(self):
        return not self.coeffs.any()

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement) and other.algebra is self.algebra
                and np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((id(self.algebra), self.coeffs.tobytes()))

    def to_polys(self):
        """Recover (P, Q) with self = P(x) + Q(x) y."""
        A = self.algebra
        F = A.field
        N = A.group.N

        def grab(j):
            out = []
            for i in range(N):
                v = self.coeffs[element_index(A.group, i, j)]
                out.append(F.elt(int(v[0])) if A.m == 1
                           else F.elt([int(t) for t in v]))
            return Poly(F, out)

        return grab(0), grab(1)

    def __repr__(self):
        P, Q = self.to_polys()
        return f"({P!r}) + ({Q!r})*y"


def multiply(u, v):
    """Exact product in the group algebra via the multiplication table."""
    u._check(v)
    A = u.algebra
    prod = np.einsum("im,jn,mnk->ijk", u.coeffs, v.coeffs, A.tensor)
    out = np.zeros((A.size, A.m), dtype=np.int64)
    np.add.at(out, A.table.ravel(), prod.reshape(-1, A.m))
    return AlgebraElement(A, out)


def _left_mul_coeffs(u, k):
    """Coefficients of e_k * u (basis element times u); a permutation of u's."""
    A = u.algebra
    out = np.zeros_like(u.coeffs)
    out[A.table[k, :]] = u.coeffs
    return out


def _right_mul_coeffs(u, k):
    A = u.algebra
    out = np.zeros_like(u.coeffs)
    out[A.table[:, k]] = u.coeffs
    return out


def is_idempotent(u):
    return u * u == u


def is_central(u):
    """u commutes with every group basis element (hence with everything)."""
    for k in range(u.algebra.size):
        if not np.array_equal(_left_mul_coeffs(u, k), _right_mul_coeffs(u, k)):
            return False
    return True


def are_orthogonal(u, v):
    return (u * v).is_zero() and (v * u).is_zero()


def sums_to_one(elements):
    it = iter(elements)
    try:
        acc = next(it)
    except StopIteration:
        return False
    for e in it:
        acc = acc + e
    return acc == acc.algebra.one()


# ---------------------------------------------------------------------------
# exact linear algebra mod p


def _rref_mod(A, p):
    """Reduced row echelon form of A mod p; returns (R, pivot_columns)."""
    R = A.copy() % p
    rows, cols = R.shape
    pivots = []
    rank = 0
    for c in range(cols):
        col = R[rank:, c]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        r = rank + nz[0]
        if r != rank:
            R[[rank, r]] = R[[r, rank]]
        R[rank] = R[rank] * pow(int(R[rank, c]), p - 2, p) % p
        mask = np.flatnonzero(R[:, c])
        mask = mask[mask != rank]
        R[mask] = (R[mask] - np.outer(R[mask, c], R[rank])) % p
        pivots.append(c)
        rank += 1
        if rank == rows:
            break
    return R, pivots


def _nullspace_mod(A, p):
    """Columns spanning {v : A v = 0 mod p}, shape (cols, nullity)."""
    R, pivots = _rref_mod(A, p)
    cols = A.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for r, pc in enumerate(pivots):
            basis[pc, k] = (-R[r, fc]) % p
    return basis


def _solve_mod(A, B, p):
    """X with A X = B mod p, A of full column rank; asserts consistency."""
    cols = A.shape[1]
    aug = np.concatenate([A, B], axis=1) % p
    R, pivots = _rref_mod(aug, p)
    assert pivots == list(range(cols)), "coefficient matrix lost rank"
    assert not R[cols:, cols:].any() if R.shape[0] > cols else True, \
        "inconsistent linear system"
    return R[:cols, cols:].copy()


def center_basis(algebra):
    """Basis of the center {z : z e_k = e_k z for all k}, over F_q.

    Imposes the commutation constraint with every basis element in turn,
    shrinking a nullspace basis as it goes.  The constraints have 0/1
    integer coefficients, so a mod-p basis is automatically an F_q-basis
    of the F_q-center; its length is the center's F_q-dimension.
    """
    A = algebra
    n, p = A.size, A.p
    B = np.eye(n, dtype=np.int64)
    idx = np.arange(n)
    for k in range(n):
        C = np.zeros((n, n), dtype=np.int64)
        C[A.table[k, :], idx] += 1
        C[A.table[:, k], idx] -= 1
        M = (C @ B) % p
        if M.any():
            B = (B @ _nullspace_mod(M, p)) % p
            if B.shape[1] == 0:
                break
    out = []
    for col in B.T:
        c = np.zeros((n, A.m), dtype=np.int64)
        c[:, 0] = col
        out.append(AlgebraElement(A, c))
    return out


def center_dimension(algebra):
    return len(center_basis(algebra))


def component_count(algebra):
    """Number of simple components, from the center alone.

    The p-power map is F_p-linear on the (commutative) center and fixes a
    copy of F_p in each simple summand and nothing more, so the component
    count is the dimension of its fixed space over F_p.
    """
    A = algebra
    p, m = A.p, A.m
    zbasis = center_basis(algebra)
    vecs = []
    for z in zbasis:
        for t in range(m):
            c = np.zeros((A.size, m), dtype=np.int64)
            # multiplying by w^t shifts the F_p-coordinates through the tensor
            c[:, :] = np.einsum("im,mk->ik", z.coeffs,
                                A.tensor[:, t, :]) % p
            vecs.append(AlgebraElement(A, c))
    Z = np.stack([v.coeffs.ravel() for v in vecs], axis=1)
    W = np.stack([(v ** p).coeffs.ravel() for v in vecs], axis=1)
    F = _solve_mod(Z, W, p)
    K = F.shape[0]
    fixed = _nullspace_mod((F - np.eye(K, dtype=np.int64)) % p, p)
    return fixed.shape[1]


# ---------------------------------------------------------------------------
# CRT interpolation of elements with prescribed component images


def _crt_pair(P1, M1, P2, M2):
    """P with P = P1 mod M1, P = P2 mod M2 (coprime moduli)."""
    g, u, _ = ext_gcd(M1, M2)
    assert g.is_one(), "CRT moduli not coprime"
    # P1 + M1 * (u * (P2 - P1) mod M2)
    corr = (u * (P2 - P1)) % M2
    return P1 + M1 * corr


def _as_ext_elt(K, v):
    """Coerce v into the factor field K = F_q[x]/(f)."""
    if isinstance(v, int):
        base = K.base
        c = base.elt(v) if isinstance(base, PrimeField) else base.elt([v])
        return K.lift(c)
    if v.field is K:
        return v
    if v.field is K.base:
        return K.lift(v)
    raise TypeError("prescription entry from the wrong field")


def _ext_to_poly(field, a):
    return Poly(field, a.rep)


def interpolate_idempotent(algebra, targets, report=None):
    """The unique u = P(x) + Q(x) y with the prescribed per-factor images.

    targets maps a factor's position in the classification report to the
    prescribed image there; positions absent from the map get the zero
    prescription.  Forms accepted, with K = F_q[x]/(f) the factor field:

      ("py", a, b)        raw residues: P = a, Q = b mod f (a, b in K)
      ("signs", t, u)     split-kind factor of x^d - 1: images t, u of the
                          two one-dimensional components y -> +1, y -> -1
      ("matrix", M)       self-involutive factor, M a 2x2 tuple over K in
                          the plain generator frame x -> diag(xi, xi^s),
                          y -> antidiagonal (sign from xi^n); entries
                          (2,1)/(2,2) must be the xi -> xi^s conjugates
                          of (1,2)/(1,1), else InconsistentPrescription
      ("pair", M)         on the lex-first member of a swapped pair; row 1
                          of M lives over K, row 2 over the partner's K'

    The result is exact; the prescription residues are re-checked on the
    way out.  Constant prescriptions (matrix units, identities) mean the
    same thing in every conjugation convention, which is how the
    cross-checks use this.
    """
    A = algebra
    F = A.field
    g = A.group
    if report is None:
        report = classify(F, g.N, g.s)
    nonsplit = g.kind == NONSPLIT
    half = F.elt(2).inverse() if A.m == 1 else F.elt([2]).inverse()

    residues = {}

    def put(pos, p_elt, q_elt):
        assert pos not in residues, "duplicate prescription"
        f = report.factors[pos].poly
        residues[pos] = (_ext_to_poly(F, p_elt) % f, _ext_to_poly(F, q_elt) % f)

    for pos, target in sorted(targets.items()):
        fac = report.factors[pos]
        K = ext_field(F, fac.poly.coeffs)
        kind = target[0]
        if kind == "py":
            put(pos, _as_ext_elt(K, target[1]), _as_ext_elt(K, target[2]))
        elif kind == "signs":
            if nonsplit or not fac.divides_x_d_minus_1:
                raise InconsistentPrescription(
                    "signs prescription only fits split-kind factors of x^d - 1")
            t_plus = _as_ext_elt(K, target[1])
            t_minus = _as_ext_elt(K, target[2])
            h = K.lift(half)
            put(pos, (t_plus + t_minus) * h, (t_plus - t_minus) * h)
        elif kind == "matrix":
            if not fac.self_involutive:
                raise InconsistentPrescription(
                    "matrix prescription needs a self-involutive factor")
            (m11, m12), (m21, m22) = target[1]
            m11, m12 = _as_ext_elt(K, m11), _as_ext_elt(K, m12)
            m21, m22 = _as_ext_elt(K, m21), _as_ext_elt(K, m22)
            # sigma: xi -> xi^s is Frobenius to the half-degree power
            e = F.order ** (fac.degree // 2) if fac.degree % 2 == 0 else F.order ** 0
            if fac.divides_x_d_minus_1:
                e = 1  # xi^s = xi, sigma is the identity

            def sigma(a):
                return a ** e if e > 1 else a

            # base frame y-image is [[0, eps], [1, 0]] with eps = xi^n
            q_val = -m12 if g.n % fac.root_order else m12
            if sigma(m11) != m22 or sigma(q_val) != m21:
                raise InconsistentPrescription(
                    "matrix entries are not Galois-consistent for this factor")
            put(pos, m11, q_val)
        elif kind == "pair":
            if fac.self_involutive or fac.partner != pos + 1:
                raise InconsistentPrescription(
                    "pair prescription goes on the first factor of a pair")
            (m11, m12), (m21, m22) = target[1]
            K2 = ext_field(F, report.factors[fac.partner].poly.coeffs)
            m11, m12 = _as_ext_elt(K, m11), _as_ext_elt(K, m12)
            m21, m22 = _as_ext_elt(K2, m21), _as_ext_elt(K2, m22)
            put(pos, m11, -m12 if g.n % fac.root_order else m12)
            put(fac.partner, m22, m21)
        else:
            raise ValueError(f"unknown prescription form {kind!r}")

    P = Poly.zero(F)
    Q = Poly.zero(F)
    M = Poly.one(F)
    for pos, fac in enumerate(report.factors):
        p_res, q_res = residues.get(pos, (Poly.zero(F), Poly.zero(F)))
        P = _crt_pair(P, M, p_res, fac.poly)
        Q = _crt_pair(Q, M, q_res, fac.poly)
        M = M * fac.poly
    assert M == x_power_minus_one(F, g.N)
    P, Q = P % M, Q % M
    for pos, fac in enumerate(report.factors):
        p_res, q_res = residues.get(pos, (Poly.zero(F), Poly.zero(F)))
        assert P % fac.poly == p_res and Q % fac.poly == q_res
    return A.from_polys(P, Q)
