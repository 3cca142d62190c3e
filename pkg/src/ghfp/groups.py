"""Finite groups as indexed Cayley tables, and coordinate permutations.

Group elements are indices 0..v-1 with index 0 the identity.  Permutations
are 0-based internally; cycle forms print 1-based.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

import numpy as np

from .errors import LengthMismatch, NotAbelian, NotAGroup, NotPrime
from .fields import Field, is_prime


class Perm:
    """Permutation of {0..n-1} stored as its images array.

    Acting on vectors uses the convention pi(v)_i = v_{pi^{-1}(i)}: the value
    at position j moves to position images[j].
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = np.asarray(images, dtype=np.int64)
        n = images.shape[0]
        if not (np.sort(images) == np.arange(n)).all():
            raise LengthMismatch("images is not a bijection")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(np.arange(n))

    @property
    def n(self) -> int:
        return int(self.images.shape[0])

    def compose(self, other: "Perm") -> "Perm":
        """self o other, with f o g (x) = f(g(x))."""
        if self.n != other.n:
            raise LengthMismatch(f"lengths differ: {self.n} vs {other.n}")
        return Perm(self.images[other.images])

    __mul__ = compose

    def invert(self) -> "Perm":
        return Perm(np.argsort(self.images))

    def apply_to_vector(self, v):
        v = np.asarray(v)
        if v.shape[0] != self.n:
            raise LengthMismatch(f"vector length {v.shape[0]} != {self.n}")
        out = np.empty_like(v)
        out[self.images] = v
        return out

    def fixed_points(self) -> List[int]:
        return [int(i) for i in np.nonzero(self.images == np.arange(self.n))[0]]

    def cycle_form(self) -> str:
        """1-based disjoint cycles, fixed points omitted; identity prints I."""
        seen = np.zeros(self.n, dtype=bool)
        parts = []
        for i in range(self.n):
            if seen[i] or self.images[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = int(self.images[i])
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = int(self.images[j])
            parts.append("(" + ",".join(str(k + 1) for k in cyc) + ")")
        return "".join(parts) if parts else "I"

    def __eq__(self, other):
        return isinstance(other, Perm) and (self.images == other.images).all()

    def __hash__(self):
        return hash(self.images.tobytes())

    def __repr__(self):
        return f"Perm({self.cycle_form()})"


class Group:
    """Finite group on indices 0..v-1 given by its Cayley table."""

    # Exhaustive associativity up to this order; random triples above.
    ASSOC_EXHAUSTIVE_MAX = 512

    def __init__(self, table, labels: Optional[List[str]] = None, check: bool = True):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise NotAGroup("Cayley table must be square")
        self.table = table
        self.order = int(table.shape[0])
        self.labels = labels
        if check:
            self._check_latin_identity()
        self.inv = np.empty(self.order, dtype=np.int64)
        rows, cols = np.nonzero(table == 0)
        self.inv[rows] = cols

    def _check_latin_identity(self):
        v = self.order
        ar = np.arange(v)
        if not (self.table[0] == ar).all() or not (self.table[:, 0] == ar).all():
            raise NotAGroup("index 0 is not a two-sided identity")
        if not (np.sort(self.table, axis=1) == ar).all():
            raise NotAGroup("a row is not a permutation")
        if not (np.sort(self.table, axis=0) == ar[:, None]).all():
            raise NotAGroup("a column is not a permutation")

    def check_associativity(self, samples: int = 10 ** 6, seed: int = 0) -> None:
        """Exhaustive for order <= 512, random triples above; raises NotAGroup."""
        v, t = self.order, self.table
        if v <= self.ASSOC_EXHAUSTIVE_MAX:
            for g in range(v):
                lhs = t[t[g], :]
                rhs = t[g][t]
                if not (lhs == rhs).all():
                    h, k = map(int, np.argwhere(lhs != rhs)[0])
                    raise NotAGroup(f"associativity fails at ({g},{h},{k})")
        else:
            rng = np.random.default_rng(seed)
            gs = rng.integers(0, v, size=samples)
            hs = rng.integers(0, v, size=samples)
            ks = rng.integers(0, v, size=samples)
            bad = t[t[gs, hs], ks] != t[gs, t[hs, ks]]
            if bad.any():
                i = int(np.nonzero(bad)[0][0])
                raise NotAGroup(
                    f"associativity fails at ({gs[i]},{hs[i]},{ks[i]})")

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    @property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def order_of(self, a: int) -> int:
        n, e = 1, a
        while e != 0:
            e = int(self.table[e, a])
            n += 1
        return n

    def element_orders(self) -> np.ndarray:
        return np.array([self.order_of(a) for a in range(self.order)])

    @property
    def exponent(self) -> int:
        out = 1
        for n in set(int(x) for x in self.element_orders()):
            out = out * n // _gcd(out, n)
        return out

    def center_size(self) -> int:
        t = self.table
        return int(np.sum((t == t.T).all(axis=1)))

    def direct_product(self, other: "Group") -> "Group":
        v1, v2 = self.order, other.order
        t = (self.table[:, :, None, None] * v2 + other.table[None, None, :, :])
        t = t.transpose(0, 2, 1, 3).reshape(v1 * v2, v1 * v2)
        return Group(t, check=False)

    def relabel(self, perm: Perm) -> "Group":
        """Conjugate the table by a relabeling that keeps 0 fixed."""
        img = perm.images
        if img[0] != 0:
            raise NotAGroup("relabeling must fix the identity")
        inv = np.argsort(img)
        return Group(img[self.table[inv][:, inv]])

    def label_of(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def __repr__(self):
        return f"Group(order={self.order})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def elementary_abelian(p: int, k: int) -> Group:
    """Z_p^k with indices in lexicographic tuple order ((0,0),(0,1),...)."""
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    if k < 1:
        raise NotPrime(f"k={k} must be >= 1")
    v = p ** k
    a = np.arange(v)
    table = np.zeros((v, v), dtype=np.int64)
    i = a[:, None]
    j = a[None, :]
    mul = 1
    for _ in range(k):
        table = table + ((i + j) % p) * mul
        i = i // p
        j = j // p
        mul *= p
    return Group(table, check=False)


def additive_group_of(field: Field, ordering: str = "encoding") -> Group:
    """Cayley table of (F_q, +) under the chosen element ordering.

    "encoding" lists elements 0..q-1; "primitive-power" lists
    0, 1, x, x^2, ..., x^{q-2} for the field's primitive element x.
    """
    q = field.q
    if ordering == "encoding":
        elems = np.arange(q, dtype=np.int64)
        labels = None
    elif ordering == "primitive-power":
        elems = np.concatenate(([0], field.exp[:q - 1].astype(np.int64)))
        labels = ["0"] + [field.power_string(int(e)) for e in elems[1:]]
    else:
        raise ValueError(f"unknown ordering {ordering!r}")
    pos = np.empty(q, dtype=np.int64)
    pos[elems] = np.arange(q)
    table = pos[field.vadd(elems[:, None], elems[None, :])]
    return Group(table, labels=labels, check=False)


def abelian_invariants(group: Group) -> List[int]:
    """Invariant factors as a sorted multiset of prime powers, e.g. [4,4,4].

    Raises NotAbelian (with order/exponent/center descriptor) otherwise.
    The partition per prime comes from counting solutions of x^{r^k} = 1.
    """
    if not group.is_abelian:
        raise NotAbelian(group.order, group.exponent, group.center_size())
    orders = group.element_orders()
    return invariants_from_order_counts(
        group.order, lambda r, k: int(np.sum(r ** k % orders == 0)))


def invariants_from_order_counts(order: int, count_killed) -> List[int]:
    """Shared invariant-factor extraction.

    count_killed(r, k) must return #{x : x^(r^k) = identity}.
    """
    out: List[int] = []
    for r in _prime_factors(order):
        c = [0]
        k = 1
        while True:
            n = count_killed(r, k)
            ck = _ilog(n, r)
            if r ** ck != n:
                raise NotAGroup(f"order-count {n} is not a power of {r}")
            c.append(ck)
            if r ** ck == _ppart(order, r) or c[-1] == c[-2]:
                break
            k += 1
        # factors with exponent >= k: c[k] - c[k-1]
        for k in range(1, len(c)):
            ge_k = c[k] - c[k - 1]
            ge_k1 = (c[k + 1] - c[k]) if k + 1 < len(c) else 0
            out.extend([r ** k] * (ge_k - ge_k1))
    return sorted(out)


def _prime_factors(n: int) -> List[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _ppart(n: int, r: int) -> int:
    out = 1
    while n % r == 0:
        out *= r
        n //= r
    return out


def _ilog(n: int, r: int) -> int:
    k = 0
    while n > 1:
        n //= r
        k += 1
    return k


def group_descriptor(group: Group) -> dict:
    """Abelian invariants when abelian; order/exponent/center descriptor else."""
    try:
        inv = abelian_invariants(group)
        return {"abelian": True, "invariants": inv, "order": group.order}
    except NotAbelian as e:
        return {
            "abelian": False,
            "order": e.order,
            "exponent": e.exponent,
            "center": e.center_size,
        }
