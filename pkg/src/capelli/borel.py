"""Borel subalgebras containing the diagonal Cartan, encoded as orderings of
the two families of coordinate functionals, plus the combinatorics attached
to the "decreasing" ones: right-count vectors, generic roots, root sums, and
the even/odd classification used by the eigenvalue maps."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exact_linalg import Rational, format_rational

# A symbol is ("e", i) or ("d", k) with 1-based index: a functional on the
# even (e) or odd (d) part of the diagonal Cartan.
Symbol = tuple[str, int]
Sequence = tuple[Symbol, ...]


@dataclass(frozen=True)
class WeightVector:
    """Coefficients of a weight in the two coordinate families."""

    eps: tuple[Rational, ...]
    delta: tuple[Rational, ...]

    @classmethod
    def make(cls, eps, delta) -> "WeightVector":
        return cls(
            tuple(Fraction(v) for v in eps), tuple(Fraction(v) for v in delta)
        )

    @classmethod
    def zero(cls, num_eps: int, num_delta: int) -> "WeightVector":
        return cls((Fraction(0),) * num_eps, (Fraction(0),) * num_delta)

    @classmethod
    def unit(cls, num_eps: int, num_delta: int, symbol: Symbol) -> "WeightVector":
        kind, index = symbol
        eps = [Fraction(0)] * num_eps
        delta = [Fraction(0)] * num_delta
        if kind == "e":
            eps[index - 1] = Fraction(1)
        elif kind == "d":
            delta[index - 1] = Fraction(1)
        else:
            raise ValueError(f"bad symbol {symbol}")
        return cls(tuple(eps), tuple(delta))

    def shape(self) -> tuple[int, int]:
        return (len(self.eps), len(self.delta))

    def _check(self, other: "WeightVector"):
        if self.shape() != other.shape():
            raise ValueError("weight shape mismatch")

    def __add__(self, other: "WeightVector") -> "WeightVector":
        self._check(other)
        return WeightVector(
            tuple(a + b for a, b in zip(self.eps, other.eps)),
            tuple(a + b for a, b in zip(self.delta, other.delta)),
        )

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        self._check(other)
        return WeightVector(
            tuple(a - b for a, b in zip(self.eps, other.eps)),
            tuple(a - b for a, b in zip(self.delta, other.delta)),
        )

    def __neg__(self) -> "WeightVector":
        return WeightVector(tuple(-a for a in self.eps), tuple(-a for a in self.delta))

    def scale(self, c) -> "WeightVector":
        c = Fraction(c)
        return WeightVector(
            tuple(c * a for a in self.eps), tuple(c * a for a in self.delta)
        )

    def pairing(self, other: "WeightVector") -> Rational:
        """Invariant form: +1 on each e-coordinate, -1 on each d-coordinate."""
        self._check(other)
        return sum(
            (a * b for a, b in zip(self.eps, other.eps)), Fraction(0)
        ) - sum((a * b for a, b in zip(self.delta, other.delta)), Fraction(0))

    def coeff(self, symbol: Symbol) -> Rational:
        kind, index = symbol
        return self.eps[index - 1] if kind == "e" else self.delta[index - 1]

    def coords(self) -> tuple[Rational, ...]:
        """Flatten to a plain point: e-block then d-block."""
        return self.eps + self.delta

    def to_json_dict(self) -> dict:
        return {
            "eps": [format_rational(v) for v in self.eps],
            "delta": [format_rational(v) for v in self.delta],
        }


def standard_sequence(num_eps: int, num_delta: int) -> Sequence:
    """e_1 .. e_m then d_1 .. d_N."""
    return tuple(("e", i) for i in range(1, num_eps + 1)) + tuple(
        ("d", k) for k in range(1, num_delta + 1)
    )


def opposite_sequence(num_eps: int, num_delta: int) -> Sequence:
    """d_N .. d_1 then e_m .. e_1: the reverse of the standard order."""
    return tuple(reversed(standard_sequence(num_eps, num_delta)))


def all_sequences(num_eps: int, num_delta: int):
    """Every ordering of the symbols: one Borel per ordering."""
    return itertools.permutations(standard_sequence(num_eps, num_delta))


def validate_sequence(seq, num_eps: int, num_delta: int) -> Sequence:
    seq = tuple((str(kind), int(index)) for kind, index in seq)
    expected = sorted(standard_sequence(num_eps, num_delta))
    if sorted(seq) != expected:
        raise ValueError(
            f"sequence {seq} is not an ordering of {num_eps} e/{num_delta} d symbols"
        )
    return seq


def weyl_vector(seq: Sequence) -> WeightVector:
    """Half-sum over ordered pairs of (earlier - later), signed +1 for a
    same-family pair and -1 for a mixed pair."""
    num_eps = sum(1 for kind, _ in seq if kind == "e")
    num_delta = len(seq) - num_eps
    rho = WeightVector.zero(num_eps, num_delta)
    half = Fraction(1, 2)
    for a, b in itertools.combinations(range(len(seq)), 2):
        sign = half if seq[a][0] == seq[b][0] else -half
        step = (
            WeightVector.unit(num_eps, num_delta, seq[a])
            - WeightVector.unit(num_eps, num_delta, seq[b])
        ).scale(sign)
        rho = rho + step
    return rho


@dataclass(frozen=True)
class BorelDescriptor:
    """A decreasing Borel of the (m | 2n) family: both symbol families occur
    in descending index order, so the ordering is determined by the weakly
    increasing vector ell, where ell[i-1] counts d-symbols to the right of
    e_i."""

    m: int
    n: int
    ell: tuple[int, ...]

    def __post_init__(self):
        ell = tuple(int(v) for v in self.ell)
        object.__setattr__(self, "ell", ell)
        if len(ell) != self.m:
            raise ValueError(f"ell must have length m={self.m}")
        if any(not 0 <= v <= 2 * self.n for v in ell):
            raise ValueError(f"ell entries must lie in [0, {2 * self.n}]")
        if any(ell[i] > ell[i + 1] for i in range(len(ell) - 1)):
            raise ValueError(f"ell must be weakly increasing: {ell}")

    @property
    def num_delta(self) -> int:
        return 2 * self.n

    def ell_of(self, i: int) -> int:
        """Right-count of e_i (1-based)."""
        return self.ell[i - 1]

    def j_of(self, k: int) -> int:
        """Number of e-symbols left of d_k: #{i : ell_i >= k}."""
        if not 1 <= k <= self.num_delta:
            raise ValueError(f"k={k} out of range")
        return sum(1 for v in self.ell if v >= k)

    def j_vector(self) -> tuple[int, ...]:
        return tuple(self.j_of(k) for k in range(1, self.num_delta + 1))

    def sequence(self) -> Sequence:
        seq: list[Symbol] = []
        k = self.num_delta
        for i in range(self.m, 0, -1):
            while k > self.ell_of(i):
                seq.append(("d", k))
                k -= 1
            seq.append(("e", i))
        while k > 0:
            seq.append(("d", k))
            k -= 1
        return tuple(seq)

    @classmethod
    def from_sequence(cls, seq, m: int, n: int) -> "BorelDescriptor":
        seq = validate_sequence(seq, m, 2 * n)
        eps_order = [index for kind, index in seq if kind == "e"]
        delta_order = [index for kind, index in seq if kind == "d"]
        if eps_order != sorted(eps_order, reverse=True) or delta_order != sorted(
            delta_order, reverse=True
        ):
            raise ValueError(f"sequence {seq} is not decreasing")
        ell = []
        for i in range(1, m + 1):
            pos = seq.index(("e", i))
            ell.append(sum(1 for kind, _ in seq[pos + 1 :] if kind == "d"))
        return cls(m, n, tuple(ell))

    @classmethod
    def opposite(cls, m: int, n: int) -> "BorelDescriptor":
        """The decreasing Borel with every e-symbol after every d-symbol."""
        return cls(m, n, (0,) * m)

    @classmethod
    def enumerate(cls, m: int, n: int) -> list["BorelDescriptor"]:
        """All decreasing Borels, lexicographically by ell."""
        return [
            cls(m, n, ell)
            for ell in itertools.combinations_with_replacement(
                range(2 * n + 1), m
            )
        ]

    # -- roots and root sums ------------------------------------------------

    def generic_roots(self) -> list[WeightVector]:
        """d_k - e_i for i = m..1 and k = 1..ell_i, in reflection-walk order."""
        roots = []
        for i in range(self.m, 0, -1):
            for k in range(1, self.ell_of(i) + 1):
                roots.append(self.root(i, k))
        return roots

    def root(self, i: int, k: int) -> WeightVector:
        return WeightVector.unit(self.m, self.num_delta, ("d", k)) - WeightVector.unit(
            self.m, self.num_delta, ("e", i)
        )

    def root_sum(self) -> WeightVector:
        """Sum of the generic roots: -sum ell_i e_i + sum j_k d_k."""
        eps = [-Fraction(v) for v in self.ell]
        delta = [Fraction(j) for j in self.j_vector()]
        return WeightVector.make(eps, delta)

    def odd_root_sum(self, k: int) -> WeightVector:
        """Contribution of the k-th d-pair beyond the even core:
        (j_{2k-1} - j_{2k}) d_{2k-1} - (e_{m-j_{2k-1}+1} + ... + e_{m-j_{2k}})."""
        if not 1 <= k <= self.n:
            raise ValueError(f"k={k} out of range")
        j_hi = self.j_of(2 * k - 1)
        j_lo = self.j_of(2 * k)
        eps = [Fraction(0)] * self.m
        for i in range(self.m - j_hi + 1, self.m - j_lo + 1):
            eps[i - 1] = Fraction(-1)
        delta = [Fraction(0)] * self.num_delta
        delta[2 * k - 2] = Fraction(j_hi - j_lo)
        return WeightVector.make(eps, delta)

    # -- parity classification ----------------------------------------------

    def is_very_even(self) -> bool:
        """Every right-count is even."""
        return all(v % 2 == 0 for v in self.ell)

    def odd_pair_set(self) -> tuple[int, ...]:
        """Pairs k whose two d-symbols see different e-counts."""
        return tuple(
            k for k in range(1, self.n + 1) if self.j_of(2 * k) < self.j_of(2 * k - 1)
        )

    def is_relatively_even(self) -> bool:
        """Each d-pair's e-counts differ by at most one."""
        return all(
            self.j_of(2 * k - 1) - self.j_of(2 * k) <= 1 for k in range(1, self.n + 1)
        )

    def even_core(self) -> "BorelDescriptor":
        """Round every right-count down to an even number."""
        return BorelDescriptor(self.m, self.n, tuple(2 * (v // 2) for v in self.ell))

    def core_reflection_roots(self) -> list[WeightVector]:
        """Roots d_{2k-1} - e_i over pairs with ell_i = 2k-1, ordered by k then
        i descending: the reflections leading from the even core to this Borel."""
        pairs = [
            (k, i)
            for k in range(self.n, 0, -1)
            for i in range(self.m, 0, -1)
            if self.ell_of(i) == 2 * k - 1
        ]
        return [self.root(i, 2 * k - 1) for k, i in pairs]

    def classify(self) -> str:
        if self.is_very_even():
            return "very_even"
        if self.is_relatively_even():
            return "rel_even"
        return "general"

    def to_json_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "ell": list(self.ell)}


def parse_symbol(token: str) -> Symbol:
    """Parse "e2" or "d1" into a symbol."""
    token = token.strip().lower()
    if len(token) < 2 or token[0] not in ("e", "d"):
        raise ValueError(f"bad symbol token {token!r}")
    return (token[0], int(token[1:]))


def format_symbol(symbol: Symbol) -> str:
    return f"{symbol[0]}{symbol[1]}"
