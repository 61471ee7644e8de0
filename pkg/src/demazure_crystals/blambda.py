"""Highest-weight crystals realized inside the infinity crystal.

An element of the crystal of dominant highest weight lam is a pair
(base, lam) where base is an infinity-crystal element subject to the
membership bound eps_star(i, base) <= <lam, h_i> for every color.  The
highest element is (highest, lam); raising acts on the base, lowering acts
on the base and is cut off to zero at the membership boundary.  Statistics
come from tensoring with the weight-shift crystal at lam, whose -inf
statistics leave eps untouched and shift phi and wt by lam.

Membership is not assumed correct: the dimension and character oracles in
the test suite validate it for every weight in the verification grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import Weight, w_add
from .binf import BInfElement, BInfRealization, b_inf
from .charring import WeightPolynomial
from .core import FormalSum


@dataclass(frozen=True)
class BLambdaElement:
    base: BInfElement
    lam: Weight

    @property
    def depth(self) -> int:
        return self.base.depth

    def __repr__(self) -> str:
        return f"BLam({self.base.coords}; {self.lam})"


@dataclass(frozen=True)
class IString:
    """Maximal chain of one color: head, f head, ..., with e(head) = 0."""

    color: int
    members: tuple[BLambdaElement, ...]

    @property
    def head(self) -> BLambdaElement:
        return self.members[0]

    def __len__(self) -> int:
        return len(self.members)


class BLambdaCrystal:
    def __init__(self, realization: BInfRealization, lam: Weight):
        lam = tuple(lam)
        if len(lam) != realization.cartan.rank:
            raise ValueError(f"lambda must have {realization.cartan.rank} coordinates")
        if not realization.cartan.is_dominant(lam):
            raise ValueError(f"lambda {lam} is not dominant")
        self.realization = realization
        self.cartan = realization.cartan
        self.lam = lam
        self.highest = BLambdaElement(realization.highest, lam)
        self._generated: frozenset[BLambdaElement] | None = None
        self._strings: dict[int, tuple[IString, ...]] = {}

    def contains_base(self, base: BInfElement) -> bool:
        return all(
            self.realization.eps_star(i, base) <= self.lam[i - 1]
            for i in self.cartan.colors
        )

    def f(self, i: int, x: BLambdaElement) -> BLambdaElement | None:
        nb = self.realization.f(i, x.base)
        if not self.contains_base(nb):
            return None
        return BLambdaElement(nb, self.lam)

    def e(self, i: int, x: BLambdaElement) -> BLambdaElement | None:
        nb = self.realization.e(i, x.base)
        if nb is None:
            return None
        if not self.contains_base(nb):
            raise RuntimeError("raising left the membership set; realization bug")
        return BLambdaElement(nb, self.lam)

    def eps(self, i: int, x: BLambdaElement) -> int:
        return self.realization.eps(i, x.base)

    def phi(self, i: int, x: BLambdaElement) -> int:
        return self.realization.phi(i, x.base) + self.lam[i - 1]

    def wt(self, x: BLambdaElement) -> Weight:
        return w_add(self.lam, self.realization.wt(x.base))

    def generate(self) -> frozenset[BLambdaElement]:
        """Closure of the highest element under lowering; finite in finite type."""
        if self._generated is None:
            out = {self.highest}
            frontier = [self.highest]
            while frontier:
                fresh = []
                for x in frontier:
                    for i in self.cartan.colors:
                        y = self.f(i, x)
                        if y is not None and y not in out:
                            out.add(y)
                            fresh.append(y)
                frontier = fresh
            self._generated = frozenset(out)
        return self._generated

    def strings(self, i: int) -> tuple[IString, ...]:
        """Partition into i-strings; heads are the elements killed by raising."""
        cached = self._strings.get(i)
        if cached is not None:
            return cached
        members = self.generate()
        strings = []
        covered = 0
        for head in sorted(members, key=self.sort_key):
            if self.eps(i, head) != 0:
                continue
            chain = [head]
            cur = head
            while (cur := self.f(i, cur)) is not None:
                chain.append(cur)
            strings.append(IString(i, tuple(chain)))
            covered += len(chain)
        if covered != len(members):
            raise RuntimeError("i-strings failed to partition the crystal")
        result = tuple(strings)
        self._strings[i] = result
        return result

    def lowest(self) -> BLambdaElement:
        """The unique element killed by every lowering operator."""
        candidates = [
            x
            for x in self.generate()
            if all(self.f(i, x) is None for i in self.cartan.colors)
        ]
        if len(candidates) != 1:
            raise RuntimeError(f"expected one lowest element, found {len(candidates)}")
        return candidates[0]

    def peel(self, x: BLambdaElement) -> tuple[int, ...]:
        # raising agrees with the ambient realization, so the peel word does too
        return self.realization.peel(x.base)

    def sort_key(self, x: BLambdaElement):
        return (x.depth, self.peel(x), x.base.coords)

    def __repr__(self) -> str:
        return f"BLambdaCrystal({self.cartan.type_label}, lam={self.lam})"


@lru_cache(maxsize=None)
def b_lambda(type_label: str, lam: tuple[int, ...]) -> BLambdaCrystal:
    """Shared crystal instance over the type's main realization."""
    return BLambdaCrystal(b_inf(type_label), tuple(lam))


def generate_blambda(crystal: BLambdaCrystal) -> frozenset[BLambdaElement]:
    return crystal.generate()


def i_strings(crystal: BLambdaCrystal, i: int) -> tuple[IString, ...]:
    return crystal.strings(i)


def char_map(crystal: BLambdaCrystal, x) -> WeightPolynomial:
    """Linear extension of element -> e^{wt(element)}."""
    if isinstance(x, BLambdaElement):
        x = FormalSum.basis(x)
    coeffs: dict[Weight, int] = {}
    for element, coeff in x.items():
        mu = crystal.wt(element)
        coeffs[mu] = coeffs.get(mu, 0) + coeff
    return WeightPolynomial(coeffs)
