"""Exact arithmetic in the imaginary quadratic fields Q(sqrt(-3)) and Q(sqrt(-7)).

An element is stored as three integers ``(p, q, n)`` meaning
``(p + q*sqrt(-d)) / n`` with ``n > 0`` and ``gcd(p, q, n) == 1``.  The
rational parts ``a = p/n`` and ``b = q/n`` are exposed as
:class:`fractions.Fraction`.  Vectors and matrices keep their entries in the
same integer form so the hot products never allocate intermediate elements.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

SUPPORTED_D = (3, 7)


class DomainMismatchError(ValueError):
    """Operands belong to different quadratic fields."""


def _normalize(p: int, q: int, n: int) -> tuple[int, int, int]:
    if n < 0:
        p, q, n = -p, -q, -n
    g = gcd(gcd(p, q), n)
    if g > 1:
        p, q, n = p // g, q // g, n // g
    return p, q, n


class QImag:
    """Element ``a + b*sqrt(-d)`` with rational ``a`` and ``b``."""

    __slots__ = ("d", "p", "q", "n", "_hash")

    def __init__(self, d: int, a=0, b=0):
        if d not in SUPPORTED_D:
            raise ValueError(f"unsupported field discriminant {d}")
        a = Fraction(a)
        b = Fraction(b)
        n = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        self._set(d, *_normalize(a.numerator * (n // a.denominator),
                                 b.numerator * (n // b.denominator), n))

    def _set(self, d, p, q, n):
        self.d = d
        self.p = p
        self.q = q
        self.n = n
        self._hash = hash((d, p, q, n))

    @classmethod
    def _raw(cls, d: int, p: int, q: int, n: int) -> "QImag":
        obj = cls.__new__(cls)
        obj._set(d, *_normalize(p, q, n))
        return obj

    @classmethod
    def from_tuple(cls, d: int, t: Sequence[int]) -> "QImag":
        """Inverse of :meth:`to_tuple`."""
        an, ad, bn, bd = t
        if ad <= 0 or bd <= 0:
            raise ValueError(f"denominators must be positive: {t!r}")
        return cls(d, Fraction(an, ad), Fraction(bn, bd))

    # -- views -----------------------------------------------------------
    @property
    def a(self) -> Fraction:
        return Fraction(self.p, self.n)

    @property
    def b(self) -> Fraction:
        return Fraction(self.q, self.n)

    def to_tuple(self) -> tuple[int, int, int, int]:
        a, b = self.a, self.b
        return (a.numerator, a.denominator, b.numerator, b.denominator)

    def norm(self) -> Fraction:
        """``|z|^2 = a^2 + d*b^2``."""
        return Fraction(self.p * self.p + self.d * self.q * self.q, self.n * self.n)

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def is_real(self) -> bool:
        return self.q == 0

    # -- arithmetic ------------------------------------------------------
    def _check(self, other: "QImag") -> None:
        if self.d != other.d:
            raise DomainMismatchError(f"cannot mix Q(sqrt(-{self.d})) and Q(sqrt(-{other.d}))")

    def _coerce(self, other) -> "QImag":
        if isinstance(other, QImag):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return QImag(self.d, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QImag._raw(self.d, self.p * o.n + o.p * self.n, self.q * o.n + o.q * self.n,
                          self.n * o.n)

    __radd__ = __add__

    def __neg__(self):
        return QImag._raw(self.d, -self.p, -self.q, self.n)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self.d
        return QImag._raw(d, self.p * o.p - d * self.q * o.q, self.p * o.q + self.q * o.p,
                          self.n * o.n)

    __rmul__ = __mul__

    def conjugate(self) -> "QImag":
        return QImag._raw(self.d, self.p, -self.q, self.n)

    def inverse(self) -> "QImag":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in quadratic field")
        # 1/z = conj(z) / |z|^2 ; |z|^2 = (p^2 + d q^2) / n^2
        m = self.p * self.p + self.d * self.q * self.q
        return QImag._raw(self.d, self.p * self.n, -self.q * self.n, m)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = QImag(self.d, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QImag):
            return (self.d, self.p, self.q, self.n) == (other.d, other.p, other.q, other.n)
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and Fraction(self.p, self.n) == other
        return NotImplemented

    def __hash__(self):
        return self._hash

    def sort_key(self) -> tuple[Fraction, Fraction]:
        """Lexicographic order on ``(a, b)``; used to pick canonical representatives."""
        return (self.a, self.b)

    def __lt__(self, other: "QImag") -> bool:
        self._check(other)
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"QImag({self.d}, {self.a}, {self.b})"

    def __str__(self):
        a, b = self.a, self.b
        if b == 0:
            return str(a)
        r = f"{b}*sqrt(-{self.d})"
        return r if a == 0 else f"{a}+{r}".replace("+-", "-")


def qi(d: int, a=0, b=0) -> QImag:
    return QImag(d, a, b)


# --------------------------------------------------------------------------
# vectors and matrices
# --------------------------------------------------------------------------


def _common(d: int, entries: Sequence[QImag]) -> tuple[list[int], list[int], int]:
    """Scale entries to a common denominator: returns (P, Q, L)."""
    L = 1
    for z in entries:
        if z.d != d:
            raise DomainMismatchError("mixed fields in one vector/matrix")
        L = L * z.n // gcd(L, z.n)
    P = [z.p * (L // z.n) for z in entries]
    Q = [z.q * (L // z.n) for z in entries]
    return P, Q, L


class CVec4:
    """Column 4-vector over one quadratic field."""

    __slots__ = ("d", "components", "_hash")

    def __init__(self, components: Iterable, d: int | None = None):
        comps = list(components)
        if len(comps) != 4:
            raise ValueError("CVec4 needs exactly 4 components")
        if d is None:
            d = next((c.d for c in comps if isinstance(c, QImag)), None)
            if d is None:
                raise ValueError("cannot infer field for an all-rational vector; pass d")
        conv = []
        for c in comps:
            if isinstance(c, QImag):
                if c.d != d:
                    raise DomainMismatchError("mixed fields in CVec4")
                conv.append(c)
            else:
                conv.append(QImag(d, c))
        self.d = d
        self.components = tuple(conv)
        self._hash = hash((d, self.components))

    @classmethod
    def basis(cls, d: int, k: int) -> "CVec4":
        return cls([1 if i == k else 0 for i in range(4)], d)

    @classmethod
    def from_tuples(cls, d: int, coords: Sequence[Sequence[int]]) -> "CVec4":
        return cls([QImag.from_tuple(d, t) for t in coords], d)

    def to_tuples(self) -> list[tuple[int, int, int, int]]:
        return [c.to_tuple() for c in self.components]

    def __getitem__(self, i: int) -> QImag:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return 4

    def __eq__(self, other):
        return isinstance(other, CVec4) and self.d == other.d and self.components == other.components

    def __hash__(self):
        return self._hash

    def __neg__(self):
        return CVec4([-c for c in self.components], self.d)

    def scale(self, z: QImag) -> "CVec4":
        return CVec4([z * c for c in self.components], self.d)

    def conjugate(self) -> "CVec4":
        return CVec4([c.conjugate() for c in self.components], self.d)

    def norm(self) -> Fraction:
        return sum((c.norm() for c in self.components), Fraction(0))

    def is_unit(self) -> bool:
        return self.norm() == 1

    def sort_key(self) -> tuple:
        return tuple(k for c in self.components for k in c.sort_key())

    def __repr__(self):
        return "CVec4(" + ", ".join(str(c) for c in self.components) + ")"


def inner_product(u: CVec4, v: CVec4) -> QImag:
    """``<u, v> = sum(conj(u_i) * v_i)``; conjugate-linear in the first slot."""
    if u.d != v.d:
        raise DomainMismatchError("inner product across fields")
    d = u.d
    total = QImag(d, 0)
    for x, y in zip(u.components, v.components):
        total = total + x.conjugate() * y
    return total


class CMat4:
    """4x4 matrix over one quadratic field, row-major."""

    __slots__ = ("d", "entries", "_key")

    def __init__(self, rows, d: int | None = None):
        flat = [x for row in rows for x in row] if len(rows) == 4 else list(rows)
        if len(flat) != 16:
            raise ValueError("CMat4 needs 16 entries")
        if d is None:
            d = next((c.d for c in flat if isinstance(c, QImag)), None)
            if d is None:
                raise ValueError("cannot infer field for an all-rational matrix; pass d")
        conv = []
        for c in flat:
            if isinstance(c, QImag):
                if c.d != d:
                    raise DomainMismatchError("mixed fields in CMat4")
                conv.append(c)
            else:
                conv.append(QImag(d, c))
        self.d = d
        self.entries = tuple(conv)
        self._key = None

    @classmethod
    def identity(cls, d: int) -> "CMat4":
        return cls([1 if i == j else 0 for i in range(4) for j in range(4)], d)

    @classmethod
    def _from_ints(cls, d: int, P, Q, L) -> "CMat4":
        m = cls.__new__(cls)
        m.d = d
        m.entries = tuple(QImag._raw(d, p, q, L) for p, q in zip(P, Q))
        m._key = None
        return m

    def __getitem__(self, ij: tuple[int, int]) -> QImag:
        i, j = ij
        return self.entries[4 * i + j]

    def rows(self) -> list[tuple[QImag, ...]]:
        return [self.entries[4 * i:4 * i + 4] for i in range(4)]

    def column(self, j: int) -> CVec4:
        return CVec4(self.entries[j::4], self.d)

    def key(self) -> tuple:
        """Exact canonical encoding of all 16 entries (collision-free)."""
        if self._key is None:
            self._key = tuple(x for z in self.entries for x in (z.p, z.q, z.n))
        return self._key

    def __eq__(self, other):
        return isinstance(other, CMat4) and self.d == other.d and self.key() == other.key()

    def __hash__(self):
        return hash((self.d, self.key()))

    def _check(self, other) -> None:
        if self.d != other.d:
            raise DomainMismatchError("matrix operands from different fields")

    def __matmul__(self, other):
        if isinstance(other, CVec4):
            return self.apply(other)
        self._check(other)
        d = self.d
        P1, Q1, L1 = _common(d, self.entries)
        P2, Q2, L2 = _common(d, other.entries)
        P = [0] * 16
        Q = [0] * 16
        for i in range(4):
            r = 4 * i
            for j in range(4):
                sp = sq = 0
                for k in range(4):
                    a, b = P1[r + k], Q1[r + k]
                    c, e = P2[4 * k + j], Q2[4 * k + j]
                    sp += a * c - d * b * e
                    sq += a * e + b * c
                P[r + j] = sp
                Q[r + j] = sq
        return CMat4._from_ints(d, P, Q, L1 * L2)

    def apply(self, v: CVec4) -> CVec4:
        self._check(v)
        d = self.d
        P1, Q1, L1 = _common(d, self.entries)
        P2, Q2, L2 = _common(d, v.components)
        out = []
        for i in range(4):
            sp = sq = 0
            for k in range(4):
                a, b = P1[4 * i + k], Q1[4 * i + k]
                c, e = P2[k], Q2[k]
                sp += a * c - d * b * e
                sq += a * e + b * c
            out.append(QImag._raw(d, sp, sq, L1 * L2))
        return CVec4(out, d)

    def __neg__(self):
        return CMat4([-z for z in self.entries], self.d)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CMat4.identity(self.d)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def conjugate(self) -> "CMat4":
        return CMat4([z.conjugate() for z in self.entries], self.d)

    def transpose(self) -> "CMat4":
        e = self.entries
        return CMat4([e[4 * j + i] for i in range(4) for j in range(4)], self.d)

    def adjoint(self) -> "CMat4":
        return self.conjugate().transpose()

    def inverse(self) -> "CMat4":
        """Inverse of a unitary matrix (its adjoint); raises if not unitary."""
        if not self.is_unitary():
            raise ValueError("inverse() is only provided for unitary matrices")
        return self.adjoint()

    def is_unitary(self) -> bool:
        return self @ self.adjoint() == CMat4.identity(self.d)

    def is_antisymmetric(self) -> bool:
        return self.transpose() == -self

    def trace(self) -> QImag:
        e = self.entries
        return e[0] + e[5] + e[10] + e[15]

    def __repr__(self):
        return "CMat4([" + "; ".join(", ".join(str(z) for z in row) for row in self.rows()) + "])"


# --------------------------------------------------------------------------
# named constants
# --------------------------------------------------------------------------

D_SV = 7
D_WITTING = 3

IOTA = QImag(7, 0, Fraction(1, 7))                 # i / sqrt(7)
IOTA1 = QImag(7, Fraction(1, 2), Fraction(1, 14))  # (1 + iota) / 2
IOTA2 = QImag(7, Fraction(1, 2), Fraction(3, 14))  # (1 + 3 iota) / 2
IOTA1_BAR = IOTA1.conjugate()
IOTA2_BAR = IOTA2.conjugate()
OMEGA = QImag(3, Fraction(-1, 2), Fraction(1, 2))  # exp(2 pi i / 3)
I_SQRT3 = QImag(3, 0, Fraction(1, 3))              # i / sqrt(3)

# roots of z^2 + z + 2 = 0
ROOT7 = QImag(7, Fraction(-1, 2), Fraction(1, 2))
ROOT7_BAR = ROOT7.conjugate()


def _m7(rows) -> CMat4:
    return CMat4(rows, D_SV)


_i, _i1, _i2 = IOTA, IOTA1, IOTA2
_i1b, _i2b = IOTA1_BAR, IOTA2_BAR

P1 = _m7([[1, 0, 0, 0],
          [0, 0, 0, 1],
          [0, 1, 0, 0],
          [0, 0, 1, 0]])

P2 = _m7([[0, 0, 1, 0],
          [0, 0, 0, 1],
          [-1, 0, 0, 0],
          [0, -1, 0, 0]])

S = _m7([[1, 0, 0, 0],
         [0, 2 * _i, _i1, _i],
         [0, _i1, _i, -_i2],
         [0, _i, -_i2, -_i1b]])

H = _m7([[0, _i1, _i, -_i2],
         [_i1, -_i1, _i1, -_i],
         [_i, -_i1b, -_i1b, -_i1b],
         [_i2b, -_i, -_i1b, 0]])

J = _m7([[0, 0, 0, 1],
         [0, 0, -1, 0],
         [0, 1, 0, 0],
         [-1, 0, 0, 0]])

J1 = _m7([[0, 0, 1, 0],
          [0, 0, 0, 1],
          [-1, 0, 0, 0],
          [0, -1, 0, 0]])

J2 = _m7([[0, 1, 0, 0],
          [-1, 0, 0, 0],
          [0, 0, 0, -1],
          [0, 0, 1, 0]])

NAMED_MATRICES = {"P1": P1, "P2": P2, "S": S, "H": H, "J": J, "J1": J1, "J2": J2}
