"""Even-signed permutations: two codes, the sorting index, and the co-sorting
index over the extended generator family.

Members are signed permutations with an even number of barred letters.  The
generator family used here contains the reflections (i, j) with 1 <= |i| < j
(as in the signed module) plus, for every j >= 2, the composite generator
written (-j, j): the double sign change flipping the letters at places j and
1 under right multiplication.  Generators are encoded as pairs (a, j); the
pair (-j, j) always means the composite, never the bare sign change, which
does not preserve evenness.

The weight of a factor (a, j) is j - a, minus 2 when a is barred.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import perm_b
from .perm_b import SignedPerm, neg_count

SignedCode = tuple[int, ...]

__all__ = [
    "is_even_signed",
    "validate_even_signed",
    "apply_generator",
    "inv_d",
    "factor_weight_d",
    "sor_d",
    "cosort_factorization",
    "sor_d_prime",
    "nmin_d",
    "reflection_length_d",
    "validate_code_d",
    "ecode_encode",
    "ecode_decode",
    "fcode_encode",
    "fcode_decode",
    "rho",
    "rho_inverse",
]


def is_even_signed(images: Sequence[int]) -> bool:
    """True for a signed permutation with an even number of bars."""
    return (
        perm_b.is_signed_permutation(images)
        and sum(1 for v in images if v < 0) % 2 == 0
    )


def validate_even_signed(images: Iterable[int]) -> SignedPerm:
    s = tuple(images)
    if not perm_b.is_signed_permutation(s):
        raise ValueError(f"not a signed permutation of 1..{len(s)}: {list(s)}")
    bars = sum(1 for v in s if v < 0)
    if bars % 2:
        raise ValueError(
            f"odd number of barred letters ({bars}), not even-signed: {list(s)}"
        )
    return s


def apply_generator(s: SignedPerm, a: int, j: int) -> SignedPerm:
    """Right-multiply by the generator (a, j); (-j, j) is the composite."""
    if a == -j:
        if j < 2 or j > len(s):
            raise ValueError(f"no composite generator (-{j}, {j}) at rank {len(s)}")
        w = list(s)
        w[0] = -w[0]
        w[j - 1] = -w[j - 1]
        return tuple(w)
    if a == j:
        return tuple(s)
    if abs(a) >= j:
        raise ValueError(f"not a generator for rank {len(s)}: ({a}, {j})")
    return perm_b.apply_transposition(s, a, j)


def inv_d(s: SignedPerm) -> int:
    """Type-D inversion number: pairs i < j with s(i) > s(j) plus pairs
    i < j with -s(i) > s(j).

    >>> inv_d((2, -4, 5, 1, -3))
    11
    """
    n = len(s)
    total = 0
    for i in range(n):
        si = s[i]
        for j in range(i + 1, n):
            sj = s[j]
            if si > sj:
                total += 1
            if -si > sj:
                total += 1
    return total


def factor_weight_d(a: int, j: int) -> int:
    """Type-D weight of one factor: j - a, minus 2 when a is barred."""
    return j - a - (2 if a < 0 else 0)


def sor_d(s: SignedPerm) -> int:
    """Type-D sorting index: the signed sorting factorization of s, reweighted.

    >>> sor_d((-2, -4, 5, -1, -3))
    11
    """
    return sum(
        factor_weight_d(a, j)
        for a, j in perm_b.selection_sort_factorization(s)
    )


def cosort_factorization(s: SignedPerm) -> tuple[tuple[int, int], ...]:
    """The unique factorization over the even generator family with strictly
    increasing j >= 2.

    For j = n down to 2, move letter j home with a single generator: the
    reflection (i, j) when +-j sits away from place j, the composite (-j, j)
    when place j holds -j.  Factors multiply right to left to give s back.
    """
    w = list(s)
    n = len(w)
    factors = []
    for j in range(n, 1, -1):
        if w[j - 1] == j:
            continue
        if w[j - 1] == -j:
            factors.append((-j, j))
            w[0] = -w[0]
            w[j - 1] = j
            continue
        a = 0
        for idx in range(j - 1):
            if w[idx] == j:
                a = idx + 1
                break
            if w[idx] == -j:
                a = -(idx + 1)
                break
        factors.append((a, j))
        if a > 0:
            w[a - 1], w[j - 1] = w[j - 1], w[a - 1]
        else:
            i = -a
            w[i - 1], w[j - 1] = -w[j - 1], -w[i - 1]
    factors.reverse()
    return tuple(factors)


def sor_d_prime(s: SignedPerm) -> int:
    """Co-sorting index: total factor weight of cosort_factorization.

    >>> sor_d_prime((-2, -4, 5, -1, -3))
    11
    """
    return sum(factor_weight_d(a, j) for a, j in cosort_factorization(s))


def nmin_d(s: SignedPerm) -> int:
    """Letters beating some later letter in absolute value, plus the bars on
    letters other than 1.

    >>> nmin_d((2, -4, 5, 1, -3))
    4
    """
    count = 0
    low = None
    for x in reversed(s):
        if low is not None and x > low:
            count += 1
        if low is None or abs(x) < low:
            low = abs(x)
    return count + sum(1 for x in s if x < -1)


def reflection_length_d(s: SignedPerm) -> int:
    """Minimal generator word length: n minus the fixed entries of the F-code.

    >>> reflection_length_d((-2, -4, 5, -1, -3))
    4
    """
    f = fcode_encode(s)
    return len(s) - sum(1 for r, fr in enumerate(f, 1) if fr == r)


def validate_code_d(code: Iterable[int]) -> SignedCode:
    """Check c_1 = 1 and c_i in [-i, i] minus 0 for i >= 2."""
    c = tuple(code)
    if c and c[0] != 1:
        raise ValueError(f"code entry c_1={c[0]} must be 1")
    for i, ci in enumerate(c, 1):
        if not isinstance(ci, int) or ci == 0 or abs(ci) > i:
            raise ValueError(
                f"code entry c_{i}={ci} outside [-{i}, {i}] minus 0"
            )
    return c


def ecode_encode(s: SignedPerm) -> SignedCode:
    """Deletion code: peel letters n down to 2 out of the one-line word.

    If letter i stands (positively) at place p, record p and delete it; if
    -i stands at place p, record -p, delete it, and flip the sign of the
    first remaining letter.

    >>> ecode_encode((2, -4, 5, 1, -3))
    (1, 1, -3, -2, 3)
    """
    w = list(s)
    out = [0] * len(s)
    if out:
        out[0] = 1
    for i in range(len(s), 1, -1):
        if i in w:
            p = w.index(i) + 1
            out[i - 1] = p
            del w[p - 1]
        else:
            p = w.index(-i) + 1
            out[i - 1] = -p
            del w[p - 1]
            w[0] = -w[0]
    return tuple(out)


def ecode_decode(code: Sequence[int]) -> SignedPerm:
    """Inverse of ecode_encode; every valid code decodes to a member.

    >>> ecode_decode((1, 1, -3, -2, 3))
    (2, -4, 5, 1, -3)
    """
    c = validate_code_d(code)
    if not c:
        return ()
    w = [1]
    for i in range(2, len(c) + 1):
        e = c[i - 1]
        if e > 0:
            w.insert(e - 1, i)
        else:
            w[0] = -w[0]
            w.insert(-e - 1, -i)
    return tuple(w)


def fcode_encode(s: SignedPerm) -> SignedCode:
    """Generator code: peel letters n down to 2 in place with one generator
    each, keeping the word length.

    If letter i stands at place p, record p and swap it home; if place i
    holds -i, record -i and apply the composite (-i, i); if -i stands at
    place p < i, record -p and apply the reflection (-p, i).

    >>> fcode_encode((-2, -4, 5, -1, -3))
    (1, 1, -3, -2, 3)
    """
    w = list(s)
    n = len(w)
    out = [0] * n
    if out:
        out[0] = 1
    for i in range(n, 1, -1):
        if w[i - 1] == i:
            out[i - 1] = i
            continue
        if w[i - 1] == -i:
            out[i - 1] = -i
            w[0] = -w[0]
            w[i - 1] = i
            continue
        p = 0
        for idx in range(i - 1):
            if w[idx] == i:
                p = idx + 1
                break
            if w[idx] == -i:
                p = -(idx + 1)
                break
        out[i - 1] = p
        if p > 0:
            w[p - 1], w[i - 1] = w[i - 1], w[p - 1]
        else:
            w[-p - 1], w[i - 1] = -w[i - 1], i
    return tuple(out)


def fcode_decode(code: Sequence[int]) -> SignedPerm:
    """Inverse of fcode_encode: the left-to-right generator product
    (c_1, 1)(c_2, 2)...(c_n, n).

    >>> fcode_decode((1, 1, -3, -2, 3))
    (-2, -4, 5, -1, -3)
    """
    c = validate_code_d(code)
    w = list(range(1, len(c) + 1))
    for i, f in enumerate(c, 1):
        if f == i:
            continue
        if f == -i:
            w[0] = -w[0]
            w[i - 1] = -w[i - 1]
        elif f > 0:
            w[f - 1], w[i - 1] = w[i - 1], w[f - 1]
        else:
            a = -f
            w[a - 1], w[i - 1] = -w[i - 1], -w[a - 1]
    return tuple(w)


def rho(s: SignedPerm) -> SignedPerm:
    """Transport bijection: decode the deletion code as a generator code.

    Carries (inv_d, nmin_d) of s to (sor_d, reflection_length_d) of the image.

    >>> rho((2, -4, 5, 1, -3))
    (-2, -4, 5, -1, -3)
    """
    return fcode_decode(ecode_encode(s))


def rho_inverse(s: SignedPerm) -> SignedPerm:
    return ecode_decode(fcode_encode(s))
