"""Hilbert functions on an explicit degree window."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb

from errors import InsufficientBoundError, MalformedInputError
from monomial import monomials as mono
from monomial.ideal import MonomialIdeal, contains


class Convention(str, Enum):
    IDEAL = "ideal"
    QUOTIENT = "quotient"


class TailMode(str, Enum):
    ZERO = "zero"
    CONSTANT = "const"
    OPEN = "open"


def ring_dimension(n: int, j: int) -> int:
    """Number of degree-``j`` monomials in ``n`` variables."""
    if j < 0:
        return 0
    if n == 0:
        return 1 if j == 0 else 0
    return comb(n - 1 + j, j)


@dataclass(frozen=True)
class HilbertFunction:
    """Values ``h_0 .. h_D`` plus what happens after ``D``.

    ``tail=ZERO`` means ``h_j = 0`` for ``j > D``; ``tail=CONSTANT`` means ``h_j = constant``;
    ``tail=OPEN`` leaves degrees past the window unspecified.
    """

    n: int
    values: tuple[int, ...]
    tail: TailMode = TailMode.OPEN
    constant: int | None = None
    convention: Convention = Convention.QUOTIENT

    def __post_init__(self) -> None:
        if any(v < 0 for v in self.values):
            raise MalformedInputError("Hilbert function values must be nonnegative")
        if self.tail is TailMode.CONSTANT:
            if self.constant is None:
                raise MalformedInputError("constant tail needs a value")
            if self.values and self.values[-1] != self.constant:
                raise MalformedInputError(
                    f"constant tail {self.constant} disagrees with last value {self.values[-1]}"
                )
        if self.convention is Convention.QUOTIENT:
            for j, v in enumerate(self.values):
                if v > ring_dimension(self.n, j):
                    raise MalformedInputError(
                        f"h_{j}={v} exceeds the number of degree-{j} monomials in {self.n} variables"
                    )

    @property
    def bound(self) -> int:
        return len(self.values) - 1

    def value(self, j: int) -> int:
        if j < 0:
            return 0
        if j < len(self.values):
            return self.values[j]
        if self.tail is TailMode.ZERO:
            return 0 if self.convention is Convention.QUOTIENT else ring_dimension(self.n, j)
        if self.tail is TailMode.CONSTANT:
            assert self.constant is not None
            return self.constant
        raise InsufficientBoundError(f"degree {j} lies past the window 0..{self.bound} of an open tail")

    def window(self, bound: int) -> tuple[int, ...]:
        return tuple(self.value(j) for j in range(bound + 1))

    def extended(self, bound: int) -> "HilbertFunction":
        return HilbertFunction(self.n, self.window(bound), self.tail, self.constant, self.convention)

    def to_quotient(self) -> "HilbertFunction":
        if self.convention is Convention.QUOTIENT:
            return self
        return self._flip(Convention.QUOTIENT)

    def to_ideal(self) -> "HilbertFunction":
        if self.convention is Convention.IDEAL:
            return self
        return self._flip(Convention.IDEAL)

    def _flip(self, target: Convention) -> "HilbertFunction":
        values = tuple(ring_dimension(self.n, j) - v for j, v in enumerate(self.values))
        # a constant tail only survives the flip when n == 1
        if self.tail is TailMode.CONSTANT and self.n != 1:
            return HilbertFunction(self.n, values, TailMode.OPEN, None, target)
        constant = None if self.constant is None else 1 - self.constant
        return HilbertFunction(self.n, values, self.tail, constant, target)

    def precedes(self, other: "HilbertFunction") -> bool:
        """``self`` is pointwise at most ``other`` on the common window."""
        bound = min(self.bound, other.bound)
        return all(self.value(j) <= other.value(j) for j in range(bound + 1))

    @classmethod
    def parse(cls, values: str, n: int, tail: str = "open") -> "HilbertFunction":
        """Parse ``"1,3,6,10"`` with a tail ``zero``, ``const:<c>`` or ``open``."""
        try:
            parsed = tuple(int(v) for v in values.replace(" ", "").split(",") if v)
        except ValueError as exc:
            raise MalformedInputError(f"bad Hilbert function {values!r}") from exc
        if not parsed:
            raise MalformedInputError("empty Hilbert function")
        tail = tail.strip()
        if tail == "zero":
            return cls(n, parsed, TailMode.ZERO)
        if tail == "open":
            return cls(n, parsed, TailMode.OPEN)
        if tail.startswith("const:"):
            try:
                constant = int(tail.split(":", 1)[1])
            except ValueError as exc:
                raise MalformedInputError(f"bad tail {tail!r}") from exc
            return cls(n, parsed, TailMode.CONSTANT, constant)
        raise MalformedInputError(f"bad tail {tail!r}; expected zero, const:<c> or open")


def hilbert_function(ideal: MonomialIdeal, bound: int) -> HilbertFunction:
    """Quotient Hilbert function of ``S/I`` on ``0..bound`` by explicit enumeration."""
    if bound < 0:
        raise MalformedInputError("degree bound must be nonnegative")
    values = tuple(
        sum(1 for m in mono.monomials_of_degree(ideal.n, j) if not contains(ideal, m))
        for j in range(bound + 1)
    )
    # once a whole degree lies in the ideal, every later degree does too
    tail = TailMode.ZERO if values[-1] == 0 else TailMode.OPEN
    return HilbertFunction(ideal.n, values, tail)


def ideal_dimension(ideal: MonomialIdeal, j: int) -> int:
    """``HF(I; j)``: the number of degree-``j`` monomials in the ideal."""
    if j < 0:
        return 0
    return sum(1 for m in mono.monomials_of_degree(ideal.n, j) if contains(ideal, m))


def k_polynomial(hf: HilbertFunction, length: int) -> list[int]:
    """First ``length`` coefficients of ``(1 - t)^n * HS(S/I)``."""
    q = hf.to_quotient()
    return [
        sum((-1) ** a * comb(q.n, a) * q.value(j - a) for a in range(q.n + 1))
        for j in range(length)
    ]
