"""Depth-truncated realization of the infinity crystal.

Elements live in a semi-infinite tensor power of elementary crystals whose
color pattern cycles through a fixed block, a reduced word for the longest
Weyl element read so that position 1 is the rightmost tensor factor.  The
coordinate tuple (a_1, a_2, ...) stands for

    ... (x) b_{i_3}(-a_3) (x) b_{i_2}(-a_2) (x) b_{i_1}(-a_1),

finitely many a_k nonzero.  The all-zero tuple is the highest element; every
stored element is reachable from it by lowering operators, and depth(b) =
sum(a_k) equals the height of -wt(b).

Operators are evaluated by the tensor signature rule on a finite window that
keeps a margin of all-zero blocks on the left (two by default).  With one
full zero block of padding the window statistics agree with the
semi-infinite object, so anything beyond that is margin; if an action ever
lands inside the leftmost retained block the window is extended by one
block and the computation retried, up to a configured bound (CapacityError
beyond it, never a wrong answer).

The embedding that splits off the rightmost elementary factor of color i is
realized by converting to the rotated color pattern that starts with i
(peel to the highest element, replay in the rotated realization).  Starred
operators act on the split-off factor and convert back.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanData, Weight, cartan_matrix, w_add, w_scale
from .core import NEG_INF, Elementary

DEFAULT_BLOCKS: dict[str, tuple[int, ...]] = {
    "A1": (1,),
    "A1xA1": (1, 2),
    "A2": (1, 2, 1),
    "B2": (1, 2, 1, 2),
    "G2": (1, 2, 1, 2, 1, 2),
    "A3": (1, 2, 1, 3, 2, 1),
}


class CapacityError(RuntimeError):
    """An operator needed a window larger than the configured bound."""


def _strip(coords) -> tuple[int, ...]:
    n = len(coords)
    while n and coords[n - 1] == 0:
        n -= 1
    return tuple(coords[:n])


@dataclass(frozen=True)
class BInfElement:
    """Coordinate tuple relative to a fixed realization; trailing zeros absent."""

    coords: tuple[int, ...]

    @property
    def depth(self) -> int:
        return sum(self.coords)

    def __repr__(self) -> str:
        return f"BInf{self.coords}"


class BInfRealization:
    """One choice of semi-infinite color pattern with its operator caches."""

    def __init__(
        self,
        cartan: CartanData,
        block: tuple[int, ...] | None = None,
        max_window_pad: int = 24,
        max_depth: int = 24,
        base_pad: int = 2,
    ):
        if block is None:
            block = DEFAULT_BLOCKS[cartan.type_label]
        block = tuple(block)
        if not block:
            raise ValueError("color block must be non-empty")
        for i in block:
            if i not in cartan.colors:
                raise ValueError(f"block letter {i} outside the index set")
        for i in cartan.colors:
            if i not in block:
                raise ValueError(f"color {i} missing from the block")
        if base_pad < 1:
            raise ValueError("at least one all-zero padding block is required")
        self.cartan = cartan
        self.block = block
        self.max_window_pad = max_window_pad
        self.max_depth = max_depth
        self.base_pad = base_pad
        self.highest = BInfElement(())
        self._rotations: dict[int, BInfRealization] = {0: self}
        self._f_cache: dict[tuple[int, tuple[int, ...]], BInfElement] = {}
        self._e_cache: dict[tuple[int, tuple[int, ...]], BInfElement | None] = {}
        self._eps_cache: dict[tuple[int, tuple[int, ...]], int] = {}
        self._phi_cache: dict[tuple[int, tuple[int, ...]], int] = {}
        self._wt_cache: dict[tuple[int, ...], Weight] = {}
        self._peel_cache: dict[tuple[int, ...], tuple[int, ...]] = {}
        self._convert_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], BInfElement] = {}
        self._star_cache: dict[tuple[int, ...], BInfElement] = {}
        self._gen_layers: list[frozenset[BInfElement]] = [frozenset({self.highest})]

    # window machinery -----------------------------------------------------

    def _window_len(self, support: int, pad_blocks: int) -> int:
        # base_pad padding blocks are the baseline margin; growth beyond
        # that is capped by max_window_pad positions.
        length = len(self.block)
        if (pad_blocks - self.base_pad) * length > self.max_window_pad:
            raise CapacityError(
                f"window extension past {self.max_window_pad} positions beyond "
                f"the default margin (support {support})"
            )
        blocks = (support + length - 1) // length + pad_blocks
        return blocks * length

    def _scan(self, i: int, coords: tuple[int, ...], pad_blocks: int):
        """Per-factor eps and prefix phi for color i, window left to right."""
        length = len(self.block)
        support = len(coords)
        n = self._window_len(support, pad_blocks)
        row = self.cartan.matrix[i - 1]
        eps_list = [0] * n
        phi_pref = [0] * n
        acc = NEG_INF
        for j in range(n):
            p = n - j
            c = self.block[(p - 1) % length]
            a = coords[p - 1] if p <= support else 0
            if c == i:
                eps_list[j] = a
                acc = max(-a, acc - a * row[c - 1])
            else:
                eps_list[j] = NEG_INF
                acc = acc - a * row[c - 1]
            phi_pref[j] = acc
        return n, eps_list, phi_pref

    def _bump(self, coords: tuple[int, ...], position: int, delta: int) -> BInfElement:
        ext = list(coords) + [0] * max(0, position - len(coords))
        ext[position - 1] += delta
        if ext[position - 1] < 0:
            raise RuntimeError("negative coordinate; realization bug")
        return BInfElement(_strip(ext))

    def _act(self, i: int, coords: tuple[int, ...], raising: bool) -> BInfElement:
        length = len(self.block)
        pad = self.base_pad
        while True:
            n, eps_list, phi_pref = self._scan(i, coords, pad)
            j = n - 1
            if raising:
                while j > 0 and phi_pref[j - 1] >= eps_list[j]:
                    j -= 1
            else:
                while j > 0 and phi_pref[j - 1] > eps_list[j]:
                    j -= 1
            if j >= length:
                break
            pad += 1  # action too close to the window edge: extend and retry
        position = n - j
        if self.block[(position - 1) % length] != i:
            raise RuntimeError("action landed on a factor of the wrong color")
        return self._bump(coords, position, -1 if raising else +1)

    # crystal operations ----------------------------------------------------

    def f(self, i: int, b: BInfElement) -> BInfElement:
        """Lowering operator; total (the infinity crystal is lower-free)."""
        key = (i, b.coords)
        out = self._f_cache.get(key)
        if out is None:
            out = self._act(i, b.coords, raising=False)
            self._f_cache[key] = out
            self._e_cache[(i, out.coords)] = b
        return out

    def e(self, i: int, b: BInfElement) -> BInfElement | None:
        """Raising operator; zero exactly when eps(i, b) = 0."""
        key = (i, b.coords)
        if key in self._e_cache:
            return self._e_cache[key]
        if self.eps(i, b) == 0:
            out = None
        else:
            out = self._act(i, b.coords, raising=True)
        self._e_cache[key] = out
        if out is not None:
            self._f_cache[(i, out.coords)] = b
        return out

    def eps(self, i: int, b: BInfElement) -> int:
        key = (i, b.coords)
        val = self._eps_cache.get(key)
        if val is None:
            length = len(self.block)
            support = len(b.coords)
            n = self._window_len(support, self.base_pad)
            row = self.cartan.matrix[i - 1]
            acc = NEG_INF
            wt_acc = 0
            for j in range(n):
                p = n - j
                c = self.block[(p - 1) % length]
                a = b.coords[p - 1] if p <= support else 0
                if c == i:
                    acc = max(acc, a - wt_acc)
                wt_acc -= a * row[c - 1]
            val = int(acc)
            if val < 0:
                raise RuntimeError("negative eps on a reachable element; realization bug")
            self._eps_cache[key] = val
        return val

    def phi(self, i: int, b: BInfElement) -> int:
        key = (i, b.coords)
        val = self._phi_cache.get(key)
        if val is None:
            _, _, phi_pref = self._scan(i, b.coords, self.base_pad)
            val = int(phi_pref[-1])
            self._phi_cache[key] = val
        return val

    def wt(self, b: BInfElement) -> Weight:
        val = self._wt_cache.get(b.coords)
        if val is None:
            length = len(self.block)
            val = (0,) * self.cartan.rank
            for k, a in enumerate(b.coords):
                if a:
                    color = self.block[k % length]
                    val = w_add(val, w_scale(-a, self.cartan.alpha(color)))
            self._wt_cache[b.coords] = val
        return val

    # reachability ----------------------------------------------------------

    def peel(self, b: BInfElement) -> tuple[int, ...]:
        """Word (j_1, ..., j_m) with b = f_{j_1} f_{j_2} ... f_{j_m} highest.

        Deterministic: at each step raise with the smallest color whose eps
        is positive.
        """
        cached = self._peel_cache.get(b.coords)
        if cached is not None:
            return cached
        word = []
        cur = b
        while cur.coords:
            for i in self.cartan.colors:
                if self.eps(i, cur) > 0:
                    word.append(i)
                    cur = self.e(i, cur)
                    break
            else:
                raise RuntimeError("nonzero element with every eps zero; realization bug")
        result = tuple(word)
        self._peel_cache[b.coords] = result
        return result

    def replay(self, word) -> BInfElement:
        """Apply lowering operators, last letter first: f_{w_1} ... f_{w_m} highest."""
        cur = self.highest
        for i in reversed(word):
            cur = self.f(i, cur)
        return cur

    def generate(self, depth: int) -> frozenset[BInfElement]:
        """Exactly the elements of depth <= depth (lowering raises depth by one)."""
        if depth > self.max_depth:
            raise CapacityError(f"depth {depth} exceeds the configured maximum {self.max_depth}")
        while len(self._gen_layers) <= depth:
            last = self._gen_layers[-1]
            layer = frozenset(
                self.f(i, b) for b in last for i in self.cartan.colors
            )
            self._gen_layers.append(layer)
        out = set()
        for layer in self._gen_layers[: depth + 1]:
            out.update(layer)
        return frozenset(out)

    # rotated realizations and starred operators ----------------------------

    def rotation(self, k: int) -> BInfRealization:
        k %= len(self.block)
        rot = self._rotations.get(k)
        if rot is None:
            rot = BInfRealization(
                self.cartan,
                self.block[k:] + self.block[:k],
                self.max_window_pad,
                self.max_depth,
                self.base_pad,
            )
            self._rotations[k] = rot
        return rot

    def _rotation_for_color(self, i: int) -> tuple[BInfRealization, BInfRealization]:
        k = self.block.index(i)
        return self.rotation(k), self.rotation(k + 1)

    def convert_from(self, src: BInfRealization, b: BInfElement) -> BInfElement:
        """Re-express an element of another realization of the same crystal."""
        if src is self:
            return b
        if src.cartan is not self.cartan:
            raise ValueError("realizations over different Cartan data")
        key = (src.block, b.coords)
        out = self._convert_cache.get(key)
        if out is None:
            out = self.replay(src.peel(b))
            self._convert_cache[key] = out
        return out

    def psi(self, i: int, b: BInfElement) -> tuple[BInfElement, Elementary]:
        """Split off the rightmost color-i elementary factor.

        Returns (b', b'') with b' in this realization and b'' = b_i(-a) the
        elementary factor; on the highest element this is (highest, b_i(0)).
        """
        rot, shift = self._rotation_for_color(i)
        rb = rot.convert_from(self, b)
        a1 = rb.coords[0] if rb.coords else 0
        rest = BInfElement(rb.coords[1:])
        return self.convert_from(shift, rest), Elementary(i, -a1)

    def f_star(self, i: int, b: BInfElement) -> BInfElement:
        """Starred lowering: lower the split-off color-i factor and pull back."""
        rot, _ = self._rotation_for_color(i)
        rb = rot.convert_from(self, b)
        coords = rb.coords if rb.coords else (0,)
        bumped = BInfElement((coords[0] + 1,) + coords[1:])
        return self.convert_from(rot, bumped)

    def e_star(self, i: int, b: BInfElement) -> BInfElement | None:
        """Starred raising; zero exactly when the split-off factor is b_i(0)."""
        rot, _ = self._rotation_for_color(i)
        rb = rot.convert_from(self, b)
        a1 = rb.coords[0] if rb.coords else 0
        if a1 == 0:
            return None
        lowered = BInfElement(_strip((a1 - 1,) + rb.coords[1:]))
        return self.convert_from(rot, lowered)

    def eps_star(self, i: int, b: BInfElement) -> int:
        """Largest k with e_star^k b nonzero: the split-off factor's depth."""
        rot, _ = self._rotation_for_color(i)
        rb = rot.convert_from(self, b)
        return rb.coords[0] if rb.coords else 0

    def star(self, b: BInfElement) -> BInfElement:
        """Weight-preserving involution: peel, then replay with starred operators."""
        out = self._star_cache.get(b.coords)
        if out is None:
            cur = self.highest
            for j in reversed(self.peel(b)):
                cur = self.f_star(j, cur)
            out = cur
            self._star_cache[b.coords] = out
        return out

    def sort_key(self, b: BInfElement):
        return (b.depth, self.peel(b), b.coords)

    def __repr__(self) -> str:
        return f"BInfRealization({self.cartan.type_label}, block={self.block})"


@lru_cache(maxsize=None)
def b_inf(type_label: str) -> BInfRealization:
    """Shared main realization for a type, block as in DEFAULT_BLOCKS."""
    return BInfRealization(cartan_matrix(type_label))
