"""Planar power maps g -> g^((3^b+1)/2) over GF(3^a) and their coboundaries.

For gcd(a, b) = 1 with b odd these are planar: every difference map
g -> phi(g+h) - phi(g) with h != 0 is a bijection, which is exactly the
orthogonality of the coboundary.  The admissible range is cut to
3 <= b <= a-1 because b and 2a-b give equivalent codes.
"""

from __future__ import annotations

import math
import time
from typing import Dict, List, Optional

import numpy as np

from .cocycles import Cocycle, coboundary, is_orthogonal
from .errors import BudgetExceeded, InadmissibleParams
from .fields import Field
from .ghmatrix import GHMatrix
from .groups import additive_group_of

# Largest field degree attempted by table1 without / with the --big flag.
BUDGET_DEFAULT_MAX_A = 6
BUDGET_BIG_MAX_A = 7


def admissible_pairs(a: int) -> List[int]:
    """All b with gcd(a, b) = 1, b odd, 3 <= b <= a-1."""
    if a < 4:
        return []
    return [b for b in range(3, a, 2) if math.gcd(a, b) == 1]


def planar_exponent(b: int) -> int:
    return (3 ** b + 1) // 2


def _check_params(a: int, b: int):
    if a < 4 or b < 3 or b > a - 1 or b % 2 == 0 or math.gcd(a, b) != 1:
        raise InadmissibleParams(f"(a, b) = ({a}, {b}) is not admissible")


def planar_map(a: int, b: int, field: Optional[Field] = None) -> np.ndarray:
    """phi(g) = g^((3^b+1)/2) as an array over all encodings of GF(3^a)."""
    _check_params(a, b)
    if field is None:
        field = Field(3, a)
    if field.p != 3 or field.m != a:
        raise InadmissibleParams(f"field is not GF(3^{a})")
    e = planar_exponent(b)
    out = np.zeros(field.q, dtype=np.int64)
    ks = (field.log[1:] * e) % (field.q - 1)
    out[1:] = field.exp[ks]
    return out


def is_planar(phi: np.ndarray, field: Field) -> bool:
    """Oracle: g -> phi(g+h) - phi(g) is a bijection for every h != 0.

    Independent of the orthogonality scan; the two must agree.
    """
    q = field.q
    idx = np.arange(q, dtype=np.int64)
    for h in range(1, q):
        diff = field.vsub(phi[field.vadd(idx, h)], phi)
        if np.bincount(diff, minlength=q).max() != 1:
            return False
    return True


def planar_coboundary(a: int, b: int, field: Optional[Field] = None) -> Cocycle:
    """The coboundary of phi_(a,b) over the additive group of GF(3^a) in
    encoding order; orthogonal for admissible parameters."""
    if field is None:
        field = Field(3, a)
    phi = planar_map(a, b, field)
    group = additive_group_of(field, "encoding")
    return coboundary(phi, group, field)


def conjectured_rank(b: int) -> int:
    """The reported rank pattern 3 * 2^(b-1) - 1, evaluated, never assumed."""
    return 3 * 2 ** (b - 1) - 1


def table1(a_min: int = 4, a_max: int = 7, big: bool = False,
           seed: int = 0, threads: int = 1) -> List[Dict[str, object]]:
    """Rank/kernel of the codes C_(a,b) for every admissible pair in range.

    Cells above the budget (a > 6, or a > 7 with big) are reported as
    skipped rather than attempted; inadmissible (a, b) combinations are
    labeled as such so the table shape matches the published one.  Cells
    are independent jobs and can run on a small worker pool.
    """
    cap = BUDGET_BIG_MAX_A if big else BUDGET_DEFAULT_MAX_A
    out: List[Dict[str, object]] = []
    jobs = []
    for a in range(a_min, a_max + 1):
        bs = admissible_pairs(a)
        for b in range(3, a, 2):
            cell: Dict[str, object] = {"a": a, "b": b, "v": 3 ** a}
            out.append(cell)
            if b not in bs:
                cell["status"] = "inadmissible"
            elif a > cap:
                cell["status"] = "skipped(budget)"
            else:
                jobs.append(cell)

    def run(cell):
        t0 = time.perf_counter()
        cell.update(_table1_cell(cell["a"], cell["b"], seed))
        cell["seconds"] = round(time.perf_counter() - t0, 3)
        cell["status"] = "ok"

    if threads > 1 and len(jobs) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(run, jobs))
    else:
        for cell in jobs:
            run(cell)
    return out


def _table1_cell(a: int, b: int, seed: int) -> Dict[str, object]:
    from .codes import GHCode

    psi = planar_coboundary(a, b)
    ok, witness = is_orthogonal(psi)
    if not ok:
        raise BudgetExceeded(f"coboundary unexpectedly not orthogonal: {witness}")
    code = GHCode(GHMatrix(psi.field, psi.table, group=psi.group))
    rank = code.rank()
    ker = code.kernel(seed=seed).dim
    return {
        "rank": rank,
        "kernel": ker,
        "conjecture_r": conjectured_rank(b),
        "match": rank == conjectured_rank(b),
        "seed": seed,
    }
