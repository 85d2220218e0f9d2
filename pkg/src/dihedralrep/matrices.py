"""Dense exact linear algebra over GF(2^m).

Matrices hold encoded field elements in a numpy uint32 array.  All row
reduction over GF(2) runs on bit-packed rows (np.packbits, little bit
order); other fields use table-driven vectorized row operations.  Both
paths are exposed so they can be tested against each other.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import InputError
from .fields import GF2m, Scalar, field_make


class Matrix:
    """An immutable rows x cols matrix over a fixed GF(2^m)."""

    __slots__ = ("field", "data")

    def __init__(self, field: GF2m, data: np.ndarray):
        arr = np.ascontiguousarray(data, dtype=np.uint32)
        if arr.ndim != 2:
            raise InputError("matrix data must be 2-dimensional")
        if arr.size and int(arr.max()) >= field.order:
            raise InputError(f"entry out of range for {field}")
        arr.flags.writeable = False
        self.field = field
        self.data = arr

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: GF2m, rows: int, cols: int) -> "Matrix":
        return cls(field, np.zeros((rows, cols), dtype=np.uint32))

    @classmethod
    def identity(cls, field: GF2m, n: int) -> "Matrix":
        return cls(field, np.eye(n, dtype=np.uint32))

    @classmethod
    def from_rows(cls, field: GF2m, rows: list[list[int]]) -> "Matrix":
        ncols = len(rows[0]) if rows else 0
        return cls(field, np.array(rows, dtype=np.uint32).reshape(len(rows), ncols))

    # -- basics --------------------------------------------------------------

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not self.data.any()

    def entry(self, i: int, j: int) -> Scalar:
        return Scalar(self.field, int(self.data[i, j]))

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.data.T)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.data.shape == other.data.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.data.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"Matrix({self.field}, {self.rows}x{self.cols})"

    def __add__(self, other: "Matrix") -> "Matrix":
        return mat_add(self, other)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        entries = [format(int(v), "x") for v in self.data.ravel()]
        return {"rows": self.rows, "cols": self.cols, "field_m": self.field.m, "entries": entries}

    @classmethod
    def from_json(cls, obj: dict) -> "Matrix":
        try:
            field = field_make(int(obj["field_m"]))
            rows, cols = int(obj["rows"]), int(obj["cols"])
            entries = [int(e, 16) for e in obj["entries"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad matrix JSON: {exc}") from exc
        if len(entries) != rows * cols:
            raise InputError("matrix JSON entry count does not match shape")
        return cls(field, np.array(entries, dtype=np.uint32).reshape(rows, cols))

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _check_same_field(a: Matrix, b: Matrix):
    if a.field != b.field:
        raise InputError("matrices over different fields")


# -- products ----------------------------------------------------------------


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    _check_same_field(a, b)
    if a.data.shape != b.data.shape:
        raise InputError(f"shape mismatch {a.data.shape} + {b.data.shape}")
    return Matrix(a.field, a.data ^ b.data)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    _check_same_field(a, b)
    if a.cols != b.rows:
        raise InputError(f"shape mismatch {a.data.shape} @ {b.data.shape}")
    if a.field.m == 1:
        return Matrix(a.field, _mul_gf2(a.data, b.data))
    return Matrix(a.field, _mul_generic(a.data, b.data, a.field))


def _mul_gf2(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.shape[0] == 0 or B.shape[1] == 0 or A.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.uint32)
    Bp = np.packbits(B.astype(np.uint8), axis=1, bitorder="little")
    Cp = np.zeros((A.shape[0], Bp.shape[1]), dtype=np.uint8)
    Ab = A.astype(bool)
    for i in range(A.shape[0]):
        sel = Ab[i]
        if sel.any():
            Cp[i] = np.bitwise_xor.reduce(Bp[sel], axis=0)
    C = np.unpackbits(Cp, axis=1, bitorder="little")[:, : B.shape[1]]
    return C.astype(np.uint32)


def _mul_generic(A: np.ndarray, B: np.ndarray, field: GF2m) -> np.ndarray:
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.uint32)
    for i in range(A.shape[0]):
        sel = A[i] != 0
        if sel.any():
            out[i] = np.bitwise_xor.reduce(_row_products(A[i, sel], B[sel], field), axis=0)
    return out


def _row_products(coeffs: np.ndarray, rows: np.ndarray, field: GF2m) -> np.ndarray:
    """Products coeffs[k] * rows[k, :] for nonzero coeffs."""
    prods = field._exp[field._log[coeffs][:, None] + field._log[rows]].astype(np.uint32)
    prods[rows == 0] = 0
    return prods


def mat_pow(a: Matrix, e: int) -> Matrix:
    if not a.is_square():
        raise InputError("power of a non-square matrix")
    if e < 0:
        inv = mat_invert(a)
        if inv is None:
            raise InputError("negative power of a singular matrix")
        return mat_pow(inv, -e)
    result = Matrix.identity(a.field, a.rows)
    base = a
    while e:
        if e & 1:
            result = mat_mul(result, base)
        base_needed = e > 1
        if base_needed:
            base = mat_mul(base, base)
        e >>= 1
    return result


# -- row reduction, GF(2) packed path -----------------------------------------


def _rref_gf2(M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(2). Input 0/1 array, returns (rref, pivot cols)."""
    nrows, ncols = M.shape
    if nrows == 0 or ncols == 0:
        return M.astype(np.uint32), []
    P = np.packbits(M.astype(np.uint8), axis=1, bitorder="little")
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        word, bit = divmod(c, 8)
        col = (P[r:, word] >> bit) & 1
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            P[[r, p]] = P[[p, r]]
        hits = np.nonzero((P[:, word] >> bit) & 1)[0]
        hits = hits[hits != r]
        if hits.size:
            P[hits] ^= P[r]
        pivots.append(c)
        r += 1
    R = np.unpackbits(P[:r], axis=1, bitorder="little")[:, :ncols]
    return R.astype(np.uint32), pivots


# -- row reduction, generic path ----------------------------------------------


def _rref_generic(M: np.ndarray, field: GF2m) -> tuple[np.ndarray, list[int]]:
    A = M.astype(np.uint32).copy()
    nrows, ncols = A.shape
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        pv = int(A[r, c])
        if pv != 1:
            A[r] = field.scale_vec(field.inv(pv), A[r])
        hits = np.nonzero(A[:, c])[0]
        hits = hits[hits != r]
        if hits.size:
            A[hits] ^= field.mul_outer(A[hits, c], A[r])
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _rref(M: np.ndarray, field: GF2m) -> tuple[np.ndarray, list[int]]:
    if field.m == 1:
        return _rref_gf2(M)
    return _rref_generic(M, field)


# -- derived operations --------------------------------------------------------


def mat_rank(a: Matrix) -> int:
    return len(_rref(a.data, a.field)[1])


def mat_kernel(a: Matrix) -> Matrix:
    """Basis of the right kernel, as matrix columns; rank + nullity = cols."""
    R, pivots = _rref(a.data, a.field)
    free = [c for c in range(a.cols) if c not in set(pivots)]
    K = np.zeros((a.cols, len(free)), dtype=np.uint32)
    for idx, f in enumerate(free):
        K[f, idx] = 1
        for row, p in enumerate(pivots):
            K[p, idx] = R[row, f]  # char 2: negation is identity
    return Matrix(a.field, K)


def _solve_many(a: Matrix, B: np.ndarray) -> np.ndarray | None:
    """One solution X with a @ X = B, or None when inconsistent."""
    nc = a.cols
    aug = np.concatenate([a.data, B.astype(np.uint32)], axis=1)
    R, pivots = _rref(aug, a.field)
    if any(p >= nc for p in pivots):
        return None
    X = np.zeros((nc, B.shape[1]), dtype=np.uint32)
    for row, p in enumerate(pivots):
        X[p] = R[row, nc:]
    return X


def mat_solve(a: Matrix, b: Matrix) -> Matrix | None:
    """Any solution x of a x = b (b a column matrix), or None."""
    _check_same_field(a, b)
    if b.rows != a.rows:
        raise InputError("right-hand side has wrong length")
    X = _solve_many(a, b.data)
    return None if X is None else Matrix(a.field, X)


def mat_solve_multi(a: Matrix, b: Matrix) -> Matrix | None:
    """Any solution X of a X = b with matching column count, or None."""
    return mat_solve(a, b)


def mat_invert(a: Matrix) -> Matrix | None:
    """Two-sided inverse when rank = rows = cols, else None."""
    if not a.is_square():
        raise InputError("inverse of a non-square matrix")
    X = _solve_many(a, np.eye(a.rows, dtype=np.uint32))
    if X is None:
        return None
    if len(_rref(a.data, a.field)[1]) != a.rows:
        return None
    return Matrix(a.field, X)


def mat_nilpotent(a: Matrix) -> bool:
    """True iff a^d = 0 for d the size of the square matrix a."""
    if not a.is_square():
        raise InputError("nilpotency of a non-square matrix")
    d = a.rows
    if d == 0:
        return True
    power = a
    e = 1
    while True:
        if power.is_zero():
            return True
        if e >= d:
            return False
        power = mat_mul(power, power)
        e *= 2


def column_space(a: Matrix) -> Matrix:
    """Basis of the column span: the pivot columns of a."""
    _, pivots = _rref(a.data, a.field)
    return Matrix(a.field, a.data[:, pivots])


def hstack(mats: list[Matrix]) -> Matrix:
    field = mats[0].field
    return Matrix(field, np.concatenate([m.data for m in mats], axis=1))


def vstack(mats: list[Matrix]) -> Matrix:
    field = mats[0].field
    return Matrix(field, np.concatenate([m.data for m in mats], axis=0))


def block_diag(mats: list[Matrix]) -> Matrix:
    field = mats[0].field
    r = sum(m.rows for m in mats)
    c = sum(m.cols for m in mats)
    out = np.zeros((r, c), dtype=np.uint32)
    i = j = 0
    for m in mats:
        out[i : i + m.rows, j : j + m.cols] = m.data
        i += m.rows
        j += m.cols
    return Matrix(field, out)
