"""q-ary codes from generalized Hadamard matrices: rank, kernel, distances.

C_H is the union of the rows of a normalized matrix H translated by every
constant vector.  Its coset structure is what makes the large cases cheap:
membership is one hash lookup after subtracting the first coordinate, the
linear span of all qv codewords equals the span of the v rows plus the
all-one vector, and kernels are unions of cosets of the repetition code.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, NamedTuple, Tuple

import numpy as np

from .errors import DuplicateRows, NotACodeword, NotNormalized, ZeroNotInCode
from .fields import Field
from .ghmatrix import GHMatrix

# Exact pairwise minimum distance up to this many codewords.
EXACT_DISTANCE_MAX = 10 ** 4


class KernelResult(NamedTuple):
    dim: int
    basis: List[np.ndarray]
    seed: int


class MinDistanceResult(NamedTuple):
    value: int
    mode: str  # "exact" or "verified-theoretical"


def rank_of_rows(field: Field, rows) -> int:
    """Dimension over F_q of the span of the given vectors."""
    return len(_reduce_rows(field, rows))


def _reduce_rows(field: Field, rows) -> List[Tuple[int, np.ndarray]]:
    """Gaussian elimination; returns (pivot column, normalized row) pairs."""
    pivots: List[Tuple[int, np.ndarray]] = []
    for r in rows:
        r = np.asarray(r, dtype=np.int64).copy()
        for c, pr in pivots:
            if r[c]:
                r = field.vsub(r, field.vsmul(int(r[c]), pr))
        nz = np.nonzero(r)[0]
        if len(nz):
            c = int(nz[0])
            pivots.append((c, field.vsmul(field.inv(int(r[c])), r)))
    return pivots


def span_contains(field: Field, pivots, vec) -> bool:
    vec = np.asarray(vec, dtype=np.int64).copy()
    for c, pr in pivots:
        if vec[c]:
            vec = field.vsub(vec, field.vsmul(int(vec[c]), pr))
    return not vec.any()


class Code:
    """A plain code: an explicit set of words.  Used for small cases and as
    the independent oracle next to GHCode's structured shortcuts."""

    def __init__(self, field: Field, words):
        words = np.asarray(words, dtype=np.int64)
        if words.ndim != 2:
            raise ValueError("words must be a 2-d array")
        self.field = field
        self.words = words
        self.n = int(words.shape[1])
        self._index = {w.tobytes(): i for i, w in enumerate(words)}
        if len(self._index) != words.shape[0]:
            raise DuplicateRows("duplicate words")

    def __len__(self):
        return int(self.words.shape[0])

    def contains(self, word) -> bool:
        return np.asarray(word, dtype=np.int64).tobytes() in self._index

    def rank(self) -> int:
        return rank_of_rows(self.field, self.words)

    def kernel(self) -> KernelResult:
        """Brute-force K(C) = {x : C + alpha*x = C for all alpha}."""
        if not self.contains(np.zeros(self.n, dtype=np.int64)):
            raise ZeroNotInCode("kernel needs the zero word")
        f = self.field
        members = []
        for x in self.words:
            if all(self._translate_fixes(f.vsmul(a, x)) for a in range(1, f.q)):
                members.append(x)
        dim = _integer_log(len(members), f.q)
        basis = [pr for _, pr in _reduce_rows(f, members)]
        return KernelResult(dim, basis, 0)

    def p_kernel(self) -> Fraction:
        """Additive p-kernel size, reported as an F_q-normalized dimension
        (dimension over GF(p) divided by the extension degree)."""
        if not self.contains(np.zeros(self.n, dtype=np.int64)):
            raise ZeroNotInCode("p-kernel needs the zero word")
        count = sum(1 for x in self.words if self._translate_fixes(x))
        return Fraction(_integer_log(count, self.field.p), self.field.m)

    def _translate_fixes(self, x) -> bool:
        return all(self.contains(self.field.vadd(w, x)) for w in self.words)

    def min_distance(self) -> MinDistanceResult:
        words = self.words
        best = self.n
        for i in range(len(words) - 1):
            d = (words[i + 1:] != words[i][None, :]).sum(axis=1).min()
            best = min(best, int(d))
        return MinDistanceResult(best, "exact")


class GHCode:
    """The code C_H of a normalized matrix H: all rows plus all constants."""

    def __init__(self, matrix: GHMatrix):
        if not matrix.is_normalized:
            raise NotNormalized("C_H needs a normalized matrix")
        self.matrix = matrix
        self.field = matrix.field
        self.H = matrix.entries
        self.v = matrix.v
        self.q = matrix.field.q
        self.n = self.v
        self._rows = {self.H[i].tobytes(): i for i in range(self.v)}
        if len(self._rows) != self.v:
            raise DuplicateRows("matrix has duplicate rows")

    def __len__(self):
        return self.q * self.v

    def row_of(self, word) -> int:
        """Index of the H-row whose coset contains word; NotACodeword else."""
        word = np.asarray(word, dtype=np.int64)
        base = self.field.vsub(word, np.full(self.n, int(word[0]), dtype=np.int64))
        i = self._rows.get(base.tobytes())
        if i is None:
            raise NotACodeword("vector is not in C_H")
        return i

    def contains(self, word) -> bool:
        word = np.asarray(word, dtype=np.int64)
        base = self.field.vsub(word, np.full(self.n, int(word[0]), dtype=np.int64))
        return base.tobytes() in self._rows

    def words(self) -> np.ndarray:
        """Materialize all qv codewords (coset-major: alpha block, then row)."""
        alphas = np.arange(self.q, dtype=np.int64)
        out = self.field.vadd(alphas[:, None, None], self.H[None, :, :])
        return out.reshape(self.q * self.v, self.n)

    def as_code(self) -> Code:
        return Code(self.field, self.words())

    @property
    def ones(self) -> np.ndarray:
        return np.ones(self.n, dtype=np.int64)

    def c1(self) -> np.ndarray:
        """The repetition subcode {alpha * 1}."""
        return np.repeat(np.arange(self.q, dtype=np.int64), self.n).reshape(self.q, self.n)

    def _span_pivots(self):
        """Cached row reduction of span(C_H) = span(rows of H, all-one)."""
        if not hasattr(self, "_pivots"):
            rows = [self.H[i] for i in range(self.v)] + [self.ones]
            self._pivots = _reduce_rows(self.field, rows)
        return self._pivots

    def rank(self) -> int:
        """dim span(C_H) = dim span(rows of H plus the all-one vector)."""
        return len(self._span_pivots())

    # -- kernels -----------------------------------------------------------------

    def _span_projection(self):
        """Pivot columns J of span(C) and the J-projection index of F_H.

        Inside span(C) the J-projection is injective, so for vectors known
        to lie in the span (sums of codewords, scalar multiples of
        codewords) membership reduces to one short-key lookup.  Cached.
        """
        if not hasattr(self, "_proj"):
            J = np.array([c for c, _ in self._span_pivots()], dtype=np.int64)
            lookup = {self.H[i][J].tobytes(): i for i in range(self.v)}
            self._proj = (J, lookup)
        return self._proj

    def _stable_rows(self, seed: int, probes: int = 8) -> List[int]:
        """Rows f with C + f = C, by early random probes then a full sweep.

        Every vector tested is a sum of two codewords, hence in span(C),
        so the projection shortcut applies throughout.
        """
        rng = np.random.default_rng(seed)
        f = self.field
        J, lookup = self._span_projection()
        HJ = self.H[:, J]
        out = []
        for i in range(self.v):
            js = rng.integers(0, self.v, size=probes)
            # rows have first coordinate 0, so row + row is already based
            if not all(f.vadd(HJ[i], HJ[int(j)]).tobytes() in lookup
                       for j in js):
                continue
            shifted = f.vadd(HJ, HJ[i][None, :])
            if all(r.tobytes() in lookup for r in shifted):
                out.append(i)
        return out

    def p_kernel(self, seed: int = 0) -> Fraction:
        """F_q-normalized dimension of K_p(C) = {x : C + x = C}.

        K_p is a union of cosets of the repetition code, so it is q times the
        number of stable rows; the value is dim_p(K_p) / m and can be a
        genuine fraction when K_p is not F_q-closed.
        """
        stable = self._stable_rows(seed)
        dim_p = self.field.m + _integer_log(len(stable), self.field.p)
        return Fraction(dim_p, self.field.m)

    def kernel(self, seed: int = 0) -> KernelResult:
        """K(C) = {x : C + alpha x = C for all alpha}; dimension over F_q.

        Restricting candidates to rows of H is valid because 0 is a codeword
        (so K(C) is inside C) and K is a union of repetition-code cosets.
        """
        f = self.field
        stable = set(self._stable_rows(seed))
        J, lookup = self._span_projection()
        members = []
        for i in stable:
            ok = True
            for a in range(2, f.q):
                # scalar multiples of codewords stay in the span
                y = f.vsmul(a, self.H[i][J])
                j = lookup.get(y.tobytes())
                if j is None or j not in stable:
                    ok = False
                    break
            if ok:
                members.append(i)
        dim = 1 + _integer_log(len(members), self.q)
        basis_rows = [self.H[i] for i in members if i != 0]
        basis = [self.ones] + [pr for _, pr in _reduce_rows(f, basis_rows)]
        return KernelResult(dim, basis, seed)

    def is_linear(self) -> bool:
        """rank == kernel == log_q |C|, all three equal exactly for linear."""
        dim = _integer_log(len(self), self.q)
        return self.rank() == dim and self.kernel().dim == dim

    # -- distance -----------------------------------------------------------------

    def min_distance(self) -> MinDistanceResult:
        """Exact for |C| <= 10^4 via the coset reduction; above that, the
        distances from 0 to every word plus one full coset pair are checked
        and the result is flagged verified-theoretical.

        d(f_i + a1, f_j + b1) = n - #{t : (f_i - f_j)_t = b - a}, so the
        pair (i, j) contributes n minus the largest multiplicity in the row
        difference; within one coset every distance is n.
        """
        f, q = self.field, self.q
        exact = len(self) <= EXACT_DISTANCE_MAX

        def pair_min(i: int, j_stop: int) -> int:
            diffs = f.vsub(self.H[i + 1:j_stop], self.H[i][None, :])
            if diffs.shape[0] == 0:
                return self.n
            keys = np.arange(diffs.shape[0], dtype=np.int64)[:, None] * q + diffs
            counts = np.bincount(keys.ravel(),
                                 minlength=diffs.shape[0] * q).reshape(-1, q)
            return int(self.n - counts.max())

        if exact:
            best = self.n
            for i in range(self.v - 1):
                best = min(best, pair_min(i, self.v))
            return MinDistanceResult(best, "exact")
        # distances from 0 to every word: weights of f_i + alpha*1
        best = self.n
        for i in range(1, self.v):
            counts = np.bincount(self.H[i], minlength=q)
            best = min(best, int(self.n - counts.max()))
        best = min(best, pair_min(0, 2))
        return MinDistanceResult(best, "verified-theoretical")


def code_from_gh(matrix: GHMatrix) -> Tuple[Code, GHCode]:
    """(F_H, C_H) from a normalized matrix with distinct rows."""
    ch = GHCode(matrix)
    fh = Code(matrix.field, matrix.entries)
    return fh, ch


def _integer_log(n: int, base: int) -> int:
    k = round(math.log(n, base)) if n > 1 else 0
    if base ** k != n:
        raise ValueError(f"{n} is not a power of {base}")
    return k
