"""Check-bit counts and probability bounds, all in exact integer/rational arithmetic."""

from enum import Enum
from fractions import Fraction
from math import comb

from ..models.errors import NoSolutionError


class ZSizeVariant(str, Enum):
    """Index ranges for the inner sum of the |Z| formula.

    Values:
        PRINTED: ``j = 1 .. s-1``, as the formula is printed
        PROOF: ``j = 0 .. s-1``, as its derivation states
        PINNED: ``j = 0 .. min(s-1, d-3-s)``, the range that agrees with enumeration
    """

    PRINTED = "printed"
    PROOF = "proof"
    PINNED = "pinned"


def ceil_log2(n: int) -> int:
    """Exact ``⌈log2 n⌉`` for ``n >= 1``."""
    if n < 1:
        raise ValueError(f"ceil_log2 needs a positive argument, got {n}")
    return (n - 1).bit_length()


def _check_params(L: int, d: int) -> None:
    if d < 2 or d >= L:
        raise ValueError(f"Distance must satisfy 2 <= d < L, got d={d}, L={L}")


def ball_size(m: int, n: int) -> int:
    """``|B^m_n| = Σ_{i<=n} C(m, i)``."""
    return sum(comb(m, i) for i in range(0, min(n, m) + 1))


def vg_sum(L: int, d: int) -> int:
    """``Σ_{i=0}^{d-2} C(L-1, i)``, the size of ``B^{L-1}_{d-2}``."""
    return ball_size(L - 1, d - 2)


def improvement_applies(L: int, d: int) -> bool:
    """The |Z| correction is used only for ``d >= 5`` and ``L > d + 1``."""
    return d >= 5 and L > d + 1


def check_bits_vg(L: int, d: int) -> int:
    """Check bits of the VG-matching construction.

    Args:
        L: Message length
        d: Target minimum distance, ``2 <= d < L``

    Returns:
        ``l = ⌈log2(Σ_{i=0}^{d-2} C(L-1, i) + 1)⌉``

    Raises:
        NoSolutionError: If ``l >= L``
    """
    _check_params(L, d)
    check_bits = ceil_log2(vg_sum(L, d) + 1)
    if check_bits >= L:
        raise NoSolutionError(L, check_bits, "check-bit formula")
    return check_bits


def z_size(L: int, d: int, variant: ZSizeVariant = ZSizeVariant.PINNED) -> int:
    """``Σ_{s=1}^{d-3} C(d-1, s) Σ_j C(L-d-1, j)`` with the inner range chosen by ``variant``."""
    total = 0
    tail = L - d - 1
    for s in range(1, d - 2):
        if variant is ZSizeVariant.PRINTED:
            j_range = range(1, s)
        elif variant is ZSizeVariant.PROOF:
            j_range = range(0, s)
        else:
            j_range = range(0, min(s - 1, d - 3 - s) + 1)
        total += comb(d - 1, s) * sum(comb(tail, j) for j in j_range)
    return total


def check_bits_improved(L: int, d: int) -> int:
    """Check bits of the improved construction.

    Equal to ``check_bits_vg`` unless the |Z| correction applies, in which case the pinned
    ``z_size`` is subtracted before taking the logarithm.

    Raises:
        NoSolutionError: If ``l >= L``
    """
    base = check_bits_vg(L, d)
    if not improvement_applies(L, d):
        return base
    check_bits = ceil_log2(vg_sum(L, d) - z_size(L, d) + 1)
    if check_bits >= L:
        raise NoSolutionError(L, check_bits, "improved check-bit formula")
    return check_bits


def _union_sum(L: int, d: int) -> int:
    # hockey-stick: Σ_{i=1}^{L} |B^{i-1}_{d-2}| = Σ_{j=0}^{d-2} C(L, j+1)
    return sum(comb(L, j + 1) for j in range(0, d - 1))


def success_bound(L: int, d: int, delta: int) -> Fraction:
    """Lower bound on the probability that the randomized construction succeeds.

    ``max(0, 1 - 2^{-(l+delta)} Σ_{j=0}^{d-2} C(L, j+1))`` with ``l = check_bits_vg(L, d)``.
    """
    if delta < 0:
        raise ValueError(f"delta must be nonnegative, got {delta}")
    check_bits = check_bits_vg(L, d)
    bound = 1 - Fraction(_union_sum(L, d), 2 ** (check_bits + delta))
    return max(Fraction(0), bound)


def success_bound_product(L: int, d: int, delta: int) -> Fraction:
    """Product-form lower bound ``Π_{i=l_Δ+1}^{L} max(0, 1 - |B^{i-1}_{d-2}| / 2^{l_Δ})``.

    Never below ``success_bound``.
    """
    if delta < 0:
        raise ValueError(f"delta must be nonnegative, got {delta}")
    extended = check_bits_vg(L, d) + delta
    scale = 2**extended
    result = Fraction(1)
    for i in range(extended + 1, L + 1):
        factor = 1 - Fraction(ball_size(i - 1, d - 2), scale)
        if factor <= 0:
            return Fraction(0)
        result *= factor
    return result


def vg_bound(L: int, d: int) -> int:
    """Guaranteed-achievable code size ``2^{L - ⌈log2(1 + Σ_{i=0}^{d-2} C(L-1, i))⌉}``."""
    if L < 2 or not 2 <= d <= L:
        raise ValueError(f"vg_bound needs L >= 2 and 2 <= d <= L, got L={L}, d={d}")
    return 2 ** (L - ceil_log2(1 + vg_sum(L, d)))
