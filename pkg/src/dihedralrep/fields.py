"""Exact arithmetic in GF(2^m) for 1 <= m <= 16.

Field elements are encoded as integers whose bits are the coefficients of
the residue polynomial (bit k = coefficient of x^k).  Addition is XOR.
Multiplication uses log/exp tables built once per field from a fixed
modulus, so encodings are identical across runs and machines.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InputError

# One irreducible (in fact primitive) modulus per degree.  Primitivity makes
# x a generator of the unit group, which the log/exp tables rely on.
MODULI = {
    1: 0b11,  # x + 1
    2: 0b111,  # x^2 + x + 1
    3: 0b1011,  # x^3 + x + 1
    4: 0b10011,  # x^4 + x + 1
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}

MAX_DEGREE = 16


def _mul_slow(a: int, b: int, modulus: int, m: int) -> int:
    """Carry-less multiply then reduce; used only to build the tables."""
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        b >>= 1
        a <<= 1
        if a >> m & 1:
            a ^= modulus
    return acc


class GF2m:
    """A binary field GF(2^m) with its fixed modulus and lookup tables."""

    def __init__(self, m: int, modulus: int):
        self.m = m
        self.modulus = modulus
        self.order = 1 << m
        q1 = self.order - 1
        exp = np.zeros(2 * q1, dtype=np.uint32)
        log = np.zeros(self.order, dtype=np.int64)
        v = 1
        for k in range(q1):
            exp[k] = v
            log[v] = k
            v = _mul_slow(v, 2, modulus, m)  # multiply by x
        if v != 1:
            raise AssertionError(f"modulus for m={m} is not primitive")
        exp[q1:] = exp[:q1]
        self._exp = exp
        self._log = log

    # -- scalar operations ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(2^m)")
        if a == 1:
            return 1
        return int(self._exp[self.order - 1 - self._log[a]])

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        k = (self._log[a] * e) % (self.order - 1)
        return int(self._exp[k])

    def elements(self) -> list[int]:
        """All elements, zero first, then ascending by encoding."""
        return list(range(self.order))

    # -- vectorized operations on uint32 arrays ---------------------------

    def mul_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise product of two arrays of encoded elements."""
        out = self._exp[self._log[a] + self._log[b]].astype(np.uint32)
        out[(a == 0) | (b == 0)] = 0
        return out

    def scale_vec(self, c: int, a: np.ndarray) -> np.ndarray:
        if c == 0:
            return np.zeros_like(a)
        if c == 1:
            return a.copy()
        out = self._exp[self._log[a] + self._log[c]].astype(np.uint32)
        out[a == 0] = 0
        return out

    def mul_outer(self, f: np.ndarray, row: np.ndarray) -> np.ndarray:
        """Outer product table f[i] * row[j], shape (len(f), len(row))."""
        out = self._exp[self._log[f][:, None] + self._log[row][None, :]].astype(np.uint32)
        out[f == 0, :] = 0
        out[:, row == 0] = 0
        return out

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, GF2m) and self.m == other.m and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))

    def __repr__(self) -> str:
        return f"GF(2^{self.m})"


@lru_cache(maxsize=None)
def field_make(m: int) -> GF2m:
    """The GF(2^m) instance with the shipped modulus; cached so specs are shared."""
    if not 1 <= m <= MAX_DEGREE:
        raise InputError(f"extension degree must be in 1..{MAX_DEGREE}, got {m}")
    return GF2m(m, MODULI[m])


GF2 = field_make(1)


@dataclass(frozen=True)
class Scalar:
    """A field element together with its field."""

    field: GF2m
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.order:
            raise InputError(f"value {self.value} out of range for {self.field}")

    def _check(self, other: "Scalar"):
        if self.field != other.field:
            raise InputError("scalars from different fields")

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.value ^ other.value)

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.field.mul(self.value, other.value))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __pow__(self, e: int) -> "Scalar":
        return Scalar(self.field, self.field.pow(self.value, e))

    def to_hex(self) -> str:
        """Lowercase hex of the coefficient bits, most significant first."""
        return format(self.value, "x")

    @classmethod
    def from_hex(cls, field: GF2m, text: str) -> "Scalar":
        try:
            value = int(text, 16)
        except ValueError as exc:
            raise InputError(f"bad scalar hex {text!r}") from exc
        return cls(field, value)


def field_enumerate(field: GF2m) -> list[Scalar]:
    """All 2^m elements exactly once, zero first, deterministic order."""
    return [Scalar(field, v) for v in field.elements()]
