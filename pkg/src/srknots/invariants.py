"""Scalar invariants of normalized Alexander polynomials.

delta2 is the largest odd factor of the absolute value at t = 2 (0 when the
value vanishes); the knot determinant is the absolute value at t = -1.  Both
are invariant under multiplication by units +-t^k, hence well defined on
normal forms.
"""

from __future__ import annotations

from typing import Optional, Tuple

from .laurent import NormalForm, equal_up_to_unit, eval_int, substitute_inverse

__all__ = ["delta2", "knot_det", "is_pm_power_product", "symmetry_check"]


def delta2(dp: NormalForm) -> int:
    """Largest odd factor of |dp(2)|, or 0 when dp(2) = 0.  Always 0 or odd."""
    v = abs(eval_int(dp.poly, 2))
    if v == 0:
        return 0
    while v % 2 == 0:
        v //= 2
    return v


def knot_det(dp: NormalForm) -> int:
    """|dp(-1)|."""
    return abs(eval_int(dp.poly, -1))


def symmetry_check(dp: NormalForm) -> bool:
    """Whether dp is unit-equivalent to its own t -> 1/t image."""
    return equal_up_to_unit(dp.poly, substitute_inverse(dp.poly))


def _pm_candidates(n: int) -> list[int]:
    # All values 2^s +- 1 in (1, n], largest first.  The factor 1 = 2^1 - 1
    # is excluded so that factor chains strictly decrease.
    out = set()
    s = 0
    while (1 << s) - 1 <= n:
        for v in ((1 << s) - 1, (1 << s) + 1):
            if 1 < v <= n:
                out.add(v)
        s += 1
    return sorted(out, reverse=True)


def is_pm_power_product(n: int) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """Whether n is a product of integers of the form 2^s +- 1, each > 1.

    Returns (flag, witness): the witness is one multiset of factors, largest
    first, multiplying back to n; n = 1 gets the empty witness.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    candidates = _pm_candidates(n)
    memo: dict[int, Optional[Tuple[int, ...]]] = {}

    def search(k: int) -> Optional[Tuple[int, ...]]:
        if k == 1:
            return ()
        if k in memo:
            return memo[k]
        found = None
        for v in candidates:
            if v > k:
                continue
            if k % v == 0:
                sub = search(k // v)
                if sub is not None:
                    found = (v,) + sub
                    break
        memo[k] = found
        return found

    witness = search(n)
    return witness is not None, witness
