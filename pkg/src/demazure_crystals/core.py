"""Crystal structures: the elementary one-color crystals, the one-point
weight-shift crystal, tensor products, and integer formal sums.

Every crystal realization exposes five operations: f(i, b) and e(i, b),
which return None for the zero outcome (None is never an element), plus the
statistics eps(i, b) and phi(i, b) valued in Z union {-inf}, and wt(b).
The -inf sentinel is float("-inf"): it already gives a total order on
statistics and absorbs integer addition, which the weight-shift crystal
forces into every tensor computation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import CartanData, Weight, w_add, w_scale

NEG_INF: float = float("-inf")
ExtInt = int | float


@dataclass(frozen=True)
class Elementary:
    """The element b_i(n) of the elementary crystal of its color."""

    color: int
    level: int


@dataclass(frozen=True)
class TLambda:
    """The single element of the weight-shift crystal at its weight."""

    lam: Weight


@dataclass(frozen=True)
class TensorWord:
    """Tensor element; leftmost factor first."""

    parts: tuple


class ElementaryCrystal:
    """Free one-color crystal {b_i(n)}: lowering decreases the level by one.

    Statistics on its own color: eps(b_i(n)) = -n and phi(b_i(n)) = n;
    every other color sees -inf and acts by zero.
    """

    def __init__(self, cartan: CartanData, color: int):
        if color not in cartan.colors:
            raise ValueError(f"color {color} outside the index set")
        self.cartan = cartan
        self.color = color

    def f(self, i: int, b: Elementary) -> Elementary | None:
        if i != b.color:
            return None
        return Elementary(b.color, b.level - 1)

    def e(self, i: int, b: Elementary) -> Elementary | None:
        if i != b.color:
            return None
        return Elementary(b.color, b.level + 1)

    def eps(self, i: int, b: Elementary) -> ExtInt:
        return -b.level if i == b.color else NEG_INF

    def phi(self, i: int, b: Elementary) -> ExtInt:
        return b.level if i == b.color else NEG_INF

    def wt(self, b: Elementary) -> Weight:
        return w_scale(b.level, self.cartan.alpha(b.color))


class TLambdaCrystal:
    """One-point crystal used to shift weights: all statistics are -inf."""

    def __init__(self, cartan: CartanData, lam: Weight):
        self.cartan = cartan
        self.lam = lam
        self.element = TLambda(lam)

    def f(self, i: int, b: TLambda) -> None:
        return None

    def e(self, i: int, b: TLambda) -> None:
        return None

    def eps(self, i: int, b: TLambda) -> ExtInt:
        return NEG_INF

    def phi(self, i: int, b: TLambda) -> ExtInt:
        return NEG_INF

    def wt(self, b: TLambda) -> Weight:
        return b.lam


class TensorCrystal:
    """Tensor product of crystal realizations over one Cartan datum.

    The binary rule acts on the left factor when phi(left) > eps(right) for
    lowering, and when phi(left) >= eps(right) for raising; words of length
    greater than two fold the binary rule left-nested.
    """

    def __init__(self, cartan: CartanData, factors):
        self.cartan = cartan
        self.factors = tuple(factors)
        if not self.factors:
            raise ValueError("tensor product needs at least one factor")

    def _factor_stats(self, i: int, word: TensorWord):
        eps_k = []
        phi_pref = []
        acc = NEG_INF
        for fc, part in zip(self.factors, word.parts):
            eps_k.append(fc.eps(i, part))
            acc = max(fc.phi(i, part), acc + fc.wt(part)[i - 1])
            phi_pref.append(acc)
        return eps_k, phi_pref

    def _replace(self, word: TensorWord, j: int, part) -> TensorWord:
        return TensorWord(word.parts[:j] + (part,) + word.parts[j + 1 :])

    def f(self, i: int, word: TensorWord) -> TensorWord | None:
        eps_k, phi_pref = self._factor_stats(i, word)
        j = len(word.parts) - 1
        while j > 0 and phi_pref[j - 1] > eps_k[j]:
            j -= 1
        part = self.factors[j].f(i, word.parts[j])
        return None if part is None else self._replace(word, j, part)

    def e(self, i: int, word: TensorWord) -> TensorWord | None:
        eps_k, phi_pref = self._factor_stats(i, word)
        j = len(word.parts) - 1
        while j > 0 and phi_pref[j - 1] >= eps_k[j]:
            j -= 1
        part = self.factors[j].e(i, word.parts[j])
        return None if part is None else self._replace(word, j, part)

    def eps(self, i: int, word: TensorWord) -> ExtInt:
        acc = NEG_INF
        wt_acc = 0
        for fc, part in zip(self.factors, word.parts):
            acc = max(acc, fc.eps(i, part) - wt_acc)
            wt_acc += fc.wt(part)[i - 1]
        return acc

    def phi(self, i: int, word: TensorWord) -> ExtInt:
        acc = NEG_INF
        for fc, part in zip(self.factors, word.parts):
            acc = max(fc.phi(i, part), acc + fc.wt(part)[i - 1])
        return acc

    def wt(self, word: TensorWord) -> Weight:
        total = (0,) * self.cartan.rank
        for fc, part in zip(self.factors, word.parts):
            total = w_add(total, fc.wt(part))
        return total


class FormalSum:
    """Finitely supported integer combination of hashable crystal elements."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            items = coeffs.items() if hasattr(coeffs, "items") else coeffs
            for key, val in items:
                acc = data.get(key, 0) + val
                if acc:
                    data[key] = acc
                elif key in data:
                    del data[key]
        self._coeffs = data

    @classmethod
    def zero(cls) -> FormalSum:
        return cls()

    @classmethod
    def basis(cls, element) -> FormalSum:
        return cls({element: 1})

    @classmethod
    def from_elements(cls, elements) -> FormalSum:
        out = {}
        for x in elements:
            out[x] = out.get(x, 0) + 1
        return cls(out)

    def items(self):
        return self._coeffs.items()

    def coefficient(self, element) -> int:
        return self._coeffs.get(element, 0)

    def support(self) -> frozenset:
        return frozenset(self._coeffs)

    def all_coefficients_one(self) -> bool:
        return all(v == 1 for v in self._coeffs.values())

    def __add__(self, other: FormalSum) -> FormalSum:
        out = dict(self._coeffs)
        for key, val in other._coeffs.items():
            acc = out.get(key, 0) + val
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]
        result = FormalSum()
        result._coeffs = out
        return result

    def __neg__(self) -> FormalSum:
        result = FormalSum()
        result._coeffs = {k: -v for k, v in self._coeffs.items()}
        return result

    def __sub__(self, other: FormalSum) -> FormalSum:
        return self + (-other)

    def __rmul__(self, n: int) -> FormalSum:
        if n == 0:
            return FormalSum()
        result = FormalSum()
        result._coeffs = {k: n * v for k, v in self._coeffs.items()}
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalSum) and self._coeffs == other._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __repr__(self) -> str:
        if not self._coeffs:
            return "FormalSum(0)"
        body = " + ".join(f"{v}*{k!r}" for k, v in self._coeffs.items())
        return f"FormalSum({body})"
