"""Exact arithmetic kernel: Catalan numbers, sparse integer polynomials
and the linear pairings against the Catalan generating series.

Coefficients are plain Python ints, so everything is exact at any size.
Four sparse polynomial flavours cover the whole pipeline:

* ``PolyT``   -- univariate in ``t``.
* ``PolyS``   -- univariate in ``s``; a triangulation polynomial counts
  triangulations by the number of vertices they use.
* ``PolyST``  -- bivariate in ``(s, t)``.  The ``s`` exponent is stored
  in *half units* (stored exponent ``k`` means ``s^(k/2)``) so the
  square-root bookkeeping of the roof iteration stays in integers.
* ``PolySUW`` -- trivariate state of the convex-edge recursion.

The central linear functional ``catalan_pair_t`` sends ``t^n`` to the
Catalan number ``C_{n-2}`` for ``n >= 2`` and annihilates ``1`` and
``t``; the other pairings are variable-wise variants of it.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

_CATALAN = [1]


def catalan(n: int) -> int:
    """n-th Catalan number C_n = binom(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError(f"catalan index must be >= 0, got {n}")
    while len(_CATALAN) <= n:
        m = len(_CATALAN)
        _CATALAN.append(_CATALAN[-1] * 2 * (2 * m - 1) // (m + 1))
    return _CATALAN[n]


def binomial(n: int, k: int) -> int:
    """binom(n, k), zero outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return 0
    return comb(n, k)


def _fmt_terms(terms: Iterable[tuple[int, str]]) -> str:
    parts: list[str] = []
    for coeff, body in terms:
        frag = f"{abs(coeff)}*{body}" if body else f"{abs(coeff)}"
        if not parts:
            parts.append(frag if coeff >= 0 else f"-{frag}")
        else:
            parts.append(f"+ {frag}" if coeff >= 0 else f"- {frag}")
    return " ".join(parts) if parts else "0"


class PolyT:
    """Sparse integer polynomial in t."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.c = {e: v for e, v in (coeffs or {}).items() if v}

    @classmethod
    def term(cls, coeff: int, exp: int) -> "PolyT":
        return cls({exp: coeff})

    @classmethod
    def t(cls) -> "PolyT":
        return cls({1: 1})

    def degree(self) -> int:
        return max(self.c) if self.c else -1

    def coeff(self, exp: int) -> int:
        return self.c.get(exp, 0)

    def shift(self, k: int) -> "PolyT":
        """Multiply by t^k (k may be negative if no exponent drops below 0)."""
        out = {e + k: v for e, v in self.c.items()}
        if any(e < 0 for e in out):
            raise ValueError("shift would create a negative exponent")
        return PolyT(out)

    def __add__(self, other: "PolyT") -> "PolyT":
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, 0) + v
        return PolyT(out)

    def __sub__(self, other: "PolyT") -> "PolyT":
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, 0) - v
        return PolyT(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return PolyT({e: v * other for e, v in self.c.items()})
        if isinstance(other, PolyT):
            out: dict[int, int] = {}
            for e1, v1 in self.c.items():
                for e2, v2 in other.c.items():
                    k = e1 + e2
                    out[k] = out.get(k, 0) + v1 * v2
            return PolyT(out)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PolyT":
        if k < 0:
            raise ValueError("negative power")
        out = PolyT({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyT) and self.c == other.c

    def __bool__(self) -> bool:
        return bool(self.c)

    def text(self) -> str:
        return _fmt_terms(
            (self.c[e], f"t^{e}" if e else "") for e in sorted(self.c, reverse=True)
        )

    def __repr__(self) -> str:
        return f"PolyT[{self.text()}]"


class PolyS:
    """Sparse integer polynomial in s (a triangulation polynomial)."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.c = {e: v for e, v in (coeffs or {}).items() if v}

    def coeff(self, exp: int) -> int:
        return self.c.get(exp, 0)

    def degree(self) -> int:
        return max(self.c) if self.c else -1

    def leading(self) -> int:
        """Coefficient of the highest power of s."""
        return self.c[max(self.c)] if self.c else 0

    def lowest(self) -> tuple[int, int]:
        """(exponent, coefficient) of the lowest non-zero term."""
        if not self.c:
            return (-1, 0)
        e = min(self.c)
        return (e, self.c[e])

    def __add__(self, other: "PolyS") -> "PolyS":
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, 0) + v
        return PolyS(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return PolyS({e: v * other for e, v in self.c.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyS) and self.c == other.c

    def __bool__(self) -> bool:
        return bool(self.c)

    def text(self) -> str:
        return _fmt_terms(
            (self.c[e], f"s^{e}" if e else "") for e in sorted(self.c, reverse=True)
        )

    def __repr__(self) -> str:
        return f"PolyS[{self.text()}]"


#: a triangulation polynomial is just a PolyS
TriangulationPolynomial = PolyS


def _st_sort_key(key: tuple[int, int]) -> tuple:
    s_half, t_exp = key
    return (-(s_half + 2 * t_exp), -s_half)


class PolyST:
    """Sparse integer polynomial in (s, t) with s exponents in half units."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        self.c = {e: v for e, v in (coeffs or {}).items() if v}

    @classmethod
    def from_t(cls, p: PolyT, s_half: int = 0) -> "PolyST":
        """Embed a t-polynomial times s^(s_half/2)."""
        return cls({(s_half, e): v for e, v in p.c.items()})

    def coefficient_s(self, s_half: int) -> PolyT:
        return PolyT({t: v for (h, t), v in self.c.items() if h == s_half})

    def s_halves(self) -> list[int]:
        return sorted({h for h, _ in self.c})

    def integral_s(self) -> bool:
        return all(h % 2 == 0 for h, _ in self.c)

    def __add__(self, other: "PolyST") -> "PolyST":
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, 0) + v
        return PolyST(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return PolyST({e: v * other for e, v in self.c.items()})
        if isinstance(other, PolyST):
            out: dict[tuple[int, int], int] = {}
            for (h1, t1), v1 in self.c.items():
                for (h2, t2), v2 in other.c.items():
                    k = (h1 + h2, t1 + t2)
                    out[k] = out.get(k, 0) + v1 * v2
            return PolyST(out)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyST) and self.c == other.c

    def __bool__(self) -> bool:
        return bool(self.c)

    def text(self) -> str:
        def body(h: int, t: int) -> str:
            s_part = ""
            if h:
                s_part = f"s^{h // 2}" if h % 2 == 0 else f"s^({h}/2)"
            t_part = f"t^{t}" if t else ""
            return "*".join(p for p in (s_part, t_part) if p)

        return _fmt_terms(
            (self.c[k], body(*k)) for k in sorted(self.c, key=_st_sort_key)
        )

    def __repr__(self) -> str:
        return f"PolyST[{self.text()}]"


class PolySUW:
    """Sparse integer polynomial in (s, u, w); plain integer exponents."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Mapping[tuple[int, int, int], int] | None = None):
        self.c = {e: v for e, v in (coeffs or {}).items() if v}

    @classmethod
    def monomial(cls, s: int, u: int, w: int, coeff: int = 1) -> "PolySUW":
        return cls({(s, u, w): coeff})

    def __add__(self, other: "PolySUW") -> "PolySUW":
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, 0) + v
        return PolySUW(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return PolySUW({e: v * other for e, v in self.c.items()})
        if isinstance(other, PolySUW):
            out: dict[tuple[int, int, int], int] = {}
            for e1, v1 in self.c.items():
                for e2, v2 in other.c.items():
                    k = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                    out[k] = out.get(k, 0) + v1 * v2
            return PolySUW(out)
        return NotImplemented

    __rmul__ = __mul__

    def pair_w(self) -> "PolySUW":
        """Pair the w variable against sum_n C_n w^n (collapses w to 0)."""
        out: dict[tuple[int, int, int], int] = {}
        for (s, u, w), v in self.c.items():
            k = (s, u, 0)
            out[k] = out.get(k, 0) + v * catalan(w)
        return PolySUW(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolySUW) and self.c == other.c

    def __bool__(self) -> bool:
        return bool(self.c)

    def __repr__(self) -> str:
        parts = [
            f"{v}*s^{s}*u^{u}*w^{w}" for (s, u, w), v in sorted(self.c.items())
        ]
        return "PolySUW[" + (" + ".join(parts) or "0") + "]"


def maximal_edge_basis(n: int) -> PolyT:
    """Basis polynomial p_n = sum_k (-1)^k binom(n-k, k) t^(n-k), n >= 1."""
    if n < 1:
        raise ValueError(f"edge weight must be >= 1, got {n}")
    return PolyT({n - k: (-1) ** k * comb(n - k, k) for k in range(n // 2 + 1)})


def complete_edge_basis(n: int) -> PolyST:
    """Complete basis pbar_n = sum_{k=1}^n binom(n-1, k-1) p_k s^k."""
    if n < 1:
        raise ValueError(f"edge weight must be >= 1, got {n}")
    out = PolyST()
    for k in range(1, n + 1):
        out = out + comb(n - 1, k - 1) * PolyST.from_t(maximal_edge_basis(k), 2 * k)
    return out


def catalan_pair_t(q: PolyT) -> int:
    """Pair q against sum_{n>=2} C_{n-2} t^n; degrees 0 and 1 pair to 0."""
    return sum(v * catalan(e - 2) for e, v in q.c.items() if e >= 2)


def catalan_pair_st(q: PolyST) -> PolyS:
    """Pair out t, leaving a polynomial in s.

    Every s half-exponent must be even by the time a result is final.
    """
    out: dict[int, int] = {}
    for (h, t), v in q.c.items():
        if h % 2:
            raise ValueError(f"odd s half-exponent {h} in a final pairing")
        if t < 2:
            continue
        e = h // 2
        out[e] = out.get(e, 0) + v * catalan(t - 2)
    return PolyS(out)


def series_pair_uw(r: PolySUW) -> PolyST:
    """Pair u and w out of a state polynomial.

    Each term c * s^a u^j w^n becomes c * C_n * p_j * s^a.  A term with
    j = 0 has no edge-basis image and is rejected.
    """
    out = PolyST()
    for (s, u, w), v in sorted(r.c.items()):
        if u == 0:
            raise ValueError("state term with u-degree 0 cannot be paired")
        out = out + (v * catalan(w)) * PolyST.from_t(maximal_edge_basis(u), 2 * s)
    return out


def solve_integer_system(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[int]:
    """Solve a square integer system exactly, insisting on an integer solution.

    Raises ValueError if the matrix is singular or the unique rational
    solution has a non-integer entry.
    """
    m = len(matrix)
    if any(len(row) != m for row in matrix) or len(rhs) != m:
        raise ValueError("system is not square")
    rows = [
        [Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)
    ]
    # Gauss-Jordan elimination with exact rationals.
    for col in range(m):
        pivot = next((r for r in range(col, m) if rows[r][col]), None)
        if pivot is None:
            raise ValueError("singular linear system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        pv = rows[col][col]
        rows[col] = [x / pv for x in rows[col]]
        for r in range(m):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    out: list[int] = []
    for j in range(m):
        x = rows[j][m]
        if x.denominator != 1:
            raise ValueError(f"non-integer solution entry {x} at position {j}")
        out.append(int(x))
    return out


def hankel_recover(values: Sequence[int], alpha: int, d: int) -> PolyT:
    """Recover q supported on degrees [alpha, d] from its shifted pairings.

    values[k] must equal catalan_pair_t(t^k * q) for k = 0..d-alpha.  The
    Hankel matrices C_{i+j+k} of the Catalan sequence are nonsingular, so
    the system determines q uniquely; it is solved exactly over Fraction.
    """
    if alpha < 2:
        raise ValueError(f"alpha must be >= 2, got {alpha}")
    if d < alpha:
        raise ValueError(f"need d >= alpha, got alpha={alpha}, d={d}")
    m = d - alpha + 1
    if len(values) != m:
        raise ValueError(f"expected {m} values for degrees [{alpha}, {d}], got {len(values)}")
    matrix = [[catalan(r + alpha + j - 2) for j in range(m)] for r in range(m)]
    try:
        solution = solve_integer_system(matrix, list(values))
    except ValueError as exc:
        raise ValueError(f"monomial recovery failed: {exc}") from None
    return PolyT({alpha + j: c for j, c in enumerate(solution)})


def p_basis_coefficients(q: PolyT) -> dict[int, int]:
    """Express q as sum c_j p_j; fails if q is not in the span."""
    rest = PolyT(q.c)
    out: dict[int, int] = {}
    while rest:
        j = rest.degree()
        if j < 1:
            raise ValueError("polynomial is not a combination of the edge basis")
        cj = rest.coeff(j)
        out[j] = cj
        rest = rest - cj * maximal_edge_basis(j)
    return {j: c for j, c in sorted(out.items()) if c}
