"""Integer Laurent polynomials in t (homological) and q."""
from __future__ import annotations

import json
from typing import Iterable, Mapping


class LaurentPoly2:
    """Finite map (t exponent, q exponent) -> nonzero integer coefficient."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        c = {}
        for (a, b), v in (coeffs or {}).items():
            v = int(v)
            if v:
                c[(int(a), int(b))] = c.get((int(a), int(b)), 0) + v
        self._c = {k: v for k, v in c.items() if v}

    @classmethod
    def monomial(cls, t: int = 0, q: int = 0, c: int = 1) -> "LaurentPoly2":
        return cls({(t, q): c})

    @classmethod
    def q_poly(cls, coeffs: Mapping[int, int]) -> "LaurentPoly2":
        return cls({(0, e): v for e, v in coeffs.items()})

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return dict(self._c)

    def __getitem__(self, key) -> int:
        return self._c.get(tuple(key), 0)

    def __iter__(self):
        return iter(sorted(self._c.items()))

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.monomial(c=other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.monomial(c=other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly2(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly2({k: v * other for k, v in self._c.items()})
        out: dict = {}
        for (a, b), v in self._c.items():
            for (c, d), w in other._c.items():
                out[(a + c, b + d)] = out.get((a + c, b + d), 0) + v * w
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shift")
        out = LaurentPoly2.monomial()
        for _ in range(n):
            out = out * self
        return out

    def shift(self, dt: int = 0, dq: int = 0) -> "LaurentPoly2":
        return LaurentPoly2({(a + dt, b + dq): v for (a, b), v in self._c.items()})

    def at_t(self, t: int) -> "LaurentPoly2":
        """Substitute a value for t, giving a polynomial in q alone."""
        out: dict = {}
        for (a, b), v in self._c.items():
            if a < 0 and t in (1, -1):
                f = t ** (-a)
            elif a < 0:
                raise ValueError("negative t exponent with |t| != 1")
            else:
                f = t ** a
            out[(0, b)] = out.get((0, b), 0) + v * f
        return LaurentPoly2(out)

    def filter(self, pred) -> "LaurentPoly2":
        return LaurentPoly2({k: v for k, v in self._c.items() if pred(*k)})

    def to_json(self) -> list[dict]:
        return [{"t": a, "q": b, "c": v} for (a, b), v in sorted(self._c.items())]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, items: Iterable[Mapping]) -> "LaurentPoly2":
        return cls({(d["t"], d["q"]): d["c"] for d in items})

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for (a, b), v in sorted(self._c.items()):
            mono = "".join(s for s in (_pw("t", a), _pw("q", b)) if s)
            if not mono:
                terms.append(str(v))
            elif v == 1:
                terms.append(mono)
            elif v == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{v}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    __repr__ = __str__


def _pw(var, e):
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


T = LaurentPoly2.monomial(1, 0)
Q = LaurentPoly2.monomial(0, 1)


def tq(t: int, q: int, c: int = 1) -> LaurentPoly2:
    return LaurentPoly2.monomial(t, q, c)
