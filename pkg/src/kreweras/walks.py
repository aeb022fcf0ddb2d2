"""Words over {a, b, c} seen as lattice walks.

The letter ``a`` is a West step, ``b`` a South step and ``c`` a North-East
step.  A *Kreweras walk* stays in the quadrant ``i, j >= 0``; a *meander*
stays in the half-plane ``i + j >= 0`` and an *excursion* is a meander that
ends on the line ``i + j = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from math import comb
from typing import Iterator, List, Optional, Tuple

__all__ = [
    "Walk",
    "ProjectedWalk",
    "WalkClassification",
    "CountKind",
    "MalformedWalkError",
    "classify",
    "count",
    "enumerate_walks",
    "project",
    "MAX_ENUMERATION_LENGTH",
]

ALPHABET = "abc"
PROJECTED_ALPHA = "α"
MAX_ENUMERATION_LENGTH = 21


class MalformedWalkError(ValueError):
    """Raised for words containing symbols outside the walk alphabet."""


class Walk(str):
    """A word over ``{a, b, c}``.

    ``Walk`` is a ``str`` subclass, so slicing, hashing and comparison behave
    like plain strings; the derived counts are computed on demand.

    >>> w = Walk("cbcccbbcaaaaabb")
    >>> (w.na, w.nb, w.nc), w.endpoint
    ((5, 5, 5), (0, 0))
    """

    def __new__(cls, letters: str = "") -> "Walk":
        if isinstance(letters, bytes):
            letters = letters.decode("ascii", errors="replace")
        bad = set(letters) - set(ALPHABET)
        if bad:
            raise MalformedWalkError(
                f"walk contains symbols outside {{a,b,c}}: {''.join(sorted(bad))!r}"
            )
        return super().__new__(cls, letters)

    @property
    def na(self) -> int:
        return self.count("a")

    @property
    def nb(self) -> int:
        return self.count("b")

    @property
    def nc(self) -> int:
        return self.count("c")

    @property
    def endpoint(self) -> Tuple[int, int]:
        nc = self.nc
        return nc - self.na, nc - self.nb

    def path(self) -> Iterator[Tuple[int, int]]:
        """Yield the lattice points visited, starting at the origin."""
        x = y = 0
        yield x, y
        for letter in self:
            if letter == "a":
                x -= 1
            elif letter == "b":
                y -= 1
            else:
                x += 1
                y += 1
            yield x, y

    def __repr__(self) -> str:
        return f"Walk({str.__repr__(self)})"


class ProjectedWalk(str):
    """A word over ``{α, c}`` whose prefixes satisfy ``|w'|_α <= 2|w'|_c``
    and whose total satisfies ``|w|_α = 2|w|_c``."""

    def __new__(cls, letters: str = "") -> "ProjectedWalk":
        height = 0
        for letter in letters:
            if letter == "c":
                height += 2
            elif letter == PROJECTED_ALPHA:
                height -= 1
            else:
                raise MalformedWalkError(f"symbol {letter!r} is not in {{α,c}}")
            if height < 0:
                raise ValueError(f"{letters!r} goes below zero")
        if height != 0:
            raise ValueError(f"{letters!r} does not return to zero")
        return super().__new__(cls, letters)

    @property
    def size(self) -> int:
        return len(self) // 3

    def __repr__(self) -> str:
        return f"ProjectedWalk({str.__repr__(self)})"


@dataclass(frozen=True)
class WalkClassification:
    length: int
    na: int
    nb: int
    nc: int
    endpoint: Tuple[int, int]
    is_meander: bool
    is_excursion: bool
    kreweras_prefix_ok: bool
    is_kreweras_to_origin: bool
    kreweras_target: Optional[int]
    size: Optional[int]

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["endpoint"] = list(self.endpoint)
        return d


class CountKind(str, Enum):
    KREWERAS_ORIGIN = "kreweras_origin"
    EXCURSION = "excursion"
    PROJECTED = "projected"
    CUBIC = "cubic"
    DEPTH_MAP = "depth_map"
    KREWERAS_TO = "kreweras_to"
    NEAR_CUBIC_TO = "near_cubic_to"


_NEEDS_I = {CountKind.KREWERAS_TO, CountKind.NEAR_CUBIC_TO}
_WALK_FAMILIES = {CountKind.KREWERAS_ORIGIN, CountKind.EXCURSION, CountKind.KREWERAS_TO}


def _as_walk(w) -> Walk:
    return w if isinstance(w, Walk) else Walk(w)


def classify(w) -> WalkClassification:
    """Classify ``w`` as a meander, excursion or Kreweras walk.

    Prefix conditions are checked left to right; the condition for a
    Kreweras walk ending at ``(i, 0)`` is checked on suffixes, right to left.
    """
    w = _as_walk(w)
    na = nb = nc = 0
    meander = kreweras = True
    for letter in w:
        if letter == "a":
            na += 1
        elif letter == "b":
            nb += 1
        else:
            nc += 1
        if na + nb > 2 * nc:
            meander = False
        if na > nc or nb > nc:
            kreweras = False
    x, y = nc - na, nc - nb
    excursion = meander and x + y == 0

    target: Optional[int] = None
    i = nc - na
    if i >= 0 and nb == nc:
        sa = sb = sc = 0
        ok = True
        for letter in reversed(w):
            if letter == "a":
                sa += 1
            elif letter == "b":
                sb += 1
            else:
                sc += 1
            if sa + i < sc or sb < sc:
                ok = False
                break
        if ok:
            target = i

    size: Optional[int] = None
    if x + y == 0:
        size = len(w) // 3
    elif y == 0 and x > 0:
        size = nc - x
    return WalkClassification(
        length=len(w),
        na=na,
        nb=nb,
        nc=nc,
        endpoint=(x, y),
        is_meander=meander,
        is_excursion=excursion,
        kreweras_prefix_ok=kreweras,
        is_kreweras_to_origin=kreweras and x == 0 and y == 0,
        kreweras_target=target,
        size=size,
    )


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def count(kind, n: int, i: Optional[int] = None) -> int:
    """Exact value of the closed-form count of ``kind`` at size ``n``.

    ``i`` is required for ``kreweras_to`` and ``near_cubic_to`` and rejected
    otherwise.
    """
    kind = CountKind(kind)
    if n < 0:
        raise ValueError("n must be non-negative")
    if kind in _NEEDS_I:
        if i is None:
            raise ValueError(f"{kind.value} requires the parameter i")
        if i < 0:
            raise ValueError("i must be non-negative")
    elif i is not None:
        raise ValueError(f"{kind.value} does not take the parameter i")

    if kind is CountKind.PROJECTED:
        return _exact_div(comb(3 * n, n), 2 * n + 1)
    if kind is CountKind.EXCURSION:
        return _exact_div(4**n * comb(3 * n, n), 2 * n + 1)
    if kind in (CountKind.KREWERAS_ORIGIN, CountKind.DEPTH_MAP):
        return _exact_div(4**n * comb(3 * n, n), (n + 1) * (2 * n + 1))
    if kind is CountKind.CUBIC:
        return _exact_div(2**n * comb(3 * n, n), (n + 1) * (2 * n + 1))
    base = 4**n if kind is CountKind.KREWERAS_TO else 2**n
    return _exact_div(
        base * (2 * i + 1) * comb(2 * i, i) * comb(3 * n + 2 * i, n),
        (n + i + 1) * (2 * n + 2 * i + 1),
    )


def _walk_length(kind: CountKind, n: int, i: Optional[int]) -> int:
    return 3 * n + (2 * i if kind is CountKind.KREWERAS_TO else 0)


def enumerate_walks(kind, n: int, i: Optional[int] = None) -> List[Walk]:
    """All walks of a family at size ``n``, in lexicographic order (a < b < c).

    Supported families are ``kreweras_origin``, ``excursion`` and
    ``kreweras_to`` (the latter with ``i``).
    """
    kind = CountKind(kind)
    if kind not in _WALK_FAMILIES:
        raise ValueError(f"{kind.value} is not a walk family")
    if (kind is CountKind.KREWERAS_TO) != (i is not None):
        raise ValueError("i is required exactly for kreweras_to")
    if n < 0 or (i is not None and i < 0):
        raise ValueError("n and i must be non-negative")
    length = _walk_length(kind, n, i)
    if length > MAX_ENUMERATION_LENGTH:
        raise ValueError(
            f"walk length {length} exceeds the enumeration guard {MAX_ENUMERATION_LENGTH}"
        )

    quadrant = kind is not CountKind.EXCURSION
    target = (i or 0, 0)
    out: List[Walk] = []
    letters: List[str] = []

    def extend(x: int, y: int, left: int) -> None:
        if left == 0:
            if quadrant:
                if (x, y) == target:
                    out.append(Walk("".join(letters)))
            elif x + y == 0:
                out.append(Walk("".join(letters)))
            return
        # x + y moves by -1 or +2 per step and must end at a known level
        level = x + y - (target[0] if quadrant else 0)
        if level > left:
            return
        for letter, (dx, dy) in (("a", (-1, 0)), ("b", (0, -1)), ("c", (1, 1))):
            nx, ny = x + dx, y + dy
            if quadrant and (nx < 0 or ny < 0):
                continue
            if not quadrant and nx + ny < 0:
                continue
            letters.append(letter)
            extend(nx, ny, left - 1)
            letters.pop()

    extend(0, 0, length)
    return out


def all_words(length: int) -> Iterator[Walk]:
    """Every word of the given length, lexicographically."""
    for letters in product(ALPHABET, repeat=length):
        yield Walk("".join(letters))


def project(w) -> ProjectedWalk:
    """Replace ``a`` and ``b`` by ``α`` in an excursion."""
    w = _as_walk(w)
    if not classify(w).is_excursion:
        raise ValueError(f"{str(w)!r} is not an excursion")
    return ProjectedWalk(w.replace("a", PROJECTED_ALPHA).replace("b", PROJECTED_ALPHA))
