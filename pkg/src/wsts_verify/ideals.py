"""Ideals of N^d as vectors over N ∪ {w}.

Every nonempty, directed, downwards-closed subset of N^d is a product
A_1 x ... x A_d where each A_i is either all of N or a finite prefix
{0..n}.  Such a set is stored as one vector whose entries are naturals or
the top element ``OMEGA`` (printed ``w``).  Componentwise order on these
vectors coincides with inclusion of the represented sets, which is the
property every algorithm in this package leans on.

Concrete states (markings) are plain tuples of ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import DimensionMismatch


class _Omega:
    """The top element of the extended naturals; a process-wide singleton.

    Arithmetic saturates: ``OMEGA + k == OMEGA`` and ``OMEGA - k == OMEGA``
    for finite k.  Subtracting OMEGA from a natural is a TypeError.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "w"

    def __reduce__(self):
        return (_Omega, ())

    def __deepcopy__(self, memo):
        return self

    def __copy__(self):
        return self

    # order: strictly above every natural
    def __le__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __ge__(self, other):
        if other is self or isinstance(other, int):
            return True
        return NotImplemented

    def __gt__(self, other):
        if other is self:
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    # saturating arithmetic
    def __add__(self, other):
        if other is self or isinstance(other, int):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self
        return NotImplemented

    def __rsub__(self, other):
        raise TypeError("cannot subtract w from a natural")


OMEGA = _Omega()

OmegaNat = Union[int, _Omega]
Marking = tuple  # tuple[int, ...]


def is_omega_nat(value) -> bool:
    return value is OMEGA or (isinstance(value, int) and value >= 0)


def omega_leq(a: OmegaNat, b: OmegaNat) -> bool:
    """Order on N ∪ {w}: the usual order on naturals, with w on top."""
    if b is OMEGA:
        return True
    if a is OMEGA:
        return False
    return a <= b


def _check_entry(value):
    if not is_omega_nat(value):
        raise ValueError(f"entry must be a natural or OMEGA, got {value!r}")


def _sort_key(v: "IdealVec"):
    return tuple((1, 0) if c is OMEGA else (0, c) for c in v.components)


@dataclass(frozen=True)
class IdealVec:
    """One ideal of N^d, stored as its vector of per-coordinate bounds."""

    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("dimension must be at least 1")
        for c in comps:
            _check_entry(c)
        object.__setattr__(self, "components", comps)

    @property
    def dimension(self) -> int:
        return len(self.components)

    def _check_dim(self, n: int):
        if self.dimension != n:
            raise DimensionMismatch(
                f"dimension {self.dimension} vs {n}"
            )

    def leq(self, other: "IdealVec") -> bool:
        """Componentwise order; equivalently inclusion of the ideals."""
        self._check_dim(other.dimension)
        return all(
            omega_leq(a, b) for a, b in zip(self.components, other.components)
        )

    def contains(self, marking: Marking) -> bool:
        """Membership of a concrete state in the ideal."""
        self._check_dim(len(marking))
        return all(
            omega_leq(x, c) for x, c in zip(marking, self.components)
        )

    @property
    def level(self) -> int:
        """Number of unbounded coordinates."""
        return sum(1 for c in self.components if c is OMEGA)

    def __str__(self) -> str:
        return "(" + ",".join(repr(c) if c is OMEGA else str(c)
                              for c in self.components) + ")"

    @classmethod
    def parse(cls, text: str) -> "IdealVec":
        """Inverse of ``str``; accepts e.g. ``(w,8,3,w)``."""
        s = text.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError(f"expected parenthesized vector, got {text!r}")
        entries = []
        for part in s[1:-1].split(","):
            part = part.strip()
            if part in ("w", "ω"):
                entries.append(OMEGA)
            else:
                try:
                    n = int(part)
                except ValueError:
                    raise ValueError(f"bad vector entry {part!r}") from None
                if n < 0:
                    raise ValueError(f"negative vector entry {part!r}")
                entries.append(n)
        return cls(tuple(entries))

    @classmethod
    def from_marking(cls, marking: Marking) -> "IdealVec":
        """Downward closure of a single concrete state."""
        return cls(tuple(int(x) for x in marking))


def vec_leq(u: IdealVec, v: IdealVec) -> bool:
    return u.leq(v)


def parse_marking(text: str) -> Marking:
    """Comma-separated naturals, optionally parenthesized: ``0,5``."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    parts = [p.strip() for p in s.split(",")]
    marking = []
    for p in parts:
        try:
            n = int(p)
        except ValueError:
            raise ValueError(f"bad marking entry {p!r}") from None
        if n < 0:
            raise ValueError(f"negative marking entry {p!r}")
        marking.append(n)
    if not marking:
        raise ValueError("empty marking")
    return tuple(marking)


def format_marking(marking: Marking) -> str:
    return "(" + ",".join(str(x) for x in marking) + ")"


@dataclass(frozen=True)
class IdealDecomposition:
    """A finite antichain of ideals of equal dimension, canonically sorted.

    Represents the union of its members; the antichain property makes the
    representation canonical, so equality of decompositions is equality of
    the represented downwards-closed sets.
    """

    ideals: tuple

    def __post_init__(self):
        vecs = tuple(sorted(set(self.ideals), key=_sort_key))
        if not vecs:
            raise ValueError("decomposition must be nonempty")
        d = vecs[0].dimension
        for v in vecs:
            v._check_dim(d)
        for i, u in enumerate(vecs):
            for j, v in enumerate(vecs):
                if i != j and u.leq(v):
                    raise ValueError(f"not an antichain: {u} <= {v}")
        object.__setattr__(self, "ideals", vecs)

    @property
    def dimension(self) -> int:
        return self.ideals[0].dimension

    def covers(self, marking: Marking) -> bool:
        return any(v.contains(marking) for v in self.ideals)

    def contains_ideal(self, v: IdealVec) -> bool:
        return any(v.leq(w) for w in self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def __len__(self):
        return len(self.ideals)

    def __str__(self):
        return "{" + ", ".join(str(v) for v in self.ideals) + "}"


def decompose(vs: Iterable[IdealVec]) -> IdealDecomposition:
    """Maximal elements of a finite collection of ideals.

    The union of the represented sets is unchanged.  Pairwise comparison;
    antichains at the scale handled here are small.
    """
    vecs = list(set(vs))
    if not vecs:
        raise ValueError("cannot decompose an empty collection")
    d = vecs[0].dimension
    for v in vecs:
        v._check_dim(d)
    maximal = [v for v in vecs if not any(v != w and v.leq(w) for w in vecs)]
    return IdealDecomposition(tuple(maximal))


def lub_accelerate(base: IdealVec, grown: IdealVec) -> IdealVec:
    """Least upper bound of the chain generated by one strict growth step.

    Coordinates where ``grown`` exceeds ``base`` are unbounded in the limit
    and get w; the others are unchanged.  Requires base < grown.
    """
    base._check_dim(grown.dimension)
    if not base.leq(grown) or base == grown:
        raise ValueError(f"need base < grown, got {base} and {grown}")
    out = []
    for b, g in zip(base.components, grown.components):
        out.append(b if b == g else OMEGA)
    return IdealVec(tuple(out))
