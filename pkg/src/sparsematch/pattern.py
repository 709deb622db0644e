"""Byte patterns, per-byte occurrence lists, and the suffix-match profile."""

from __future__ import annotations

from dataclasses import dataclass


class EmptyPatternError(ValueError):
    """Pattern construction was given zero bytes."""


@dataclass(frozen=True)
class Pattern:
    """An immutable search pattern.

    ``occ[b]`` lists, in ascending order, every 0-based position where byte
    value ``b`` occurs; only byte values that occur in the pattern appear as
    keys. ``delta`` is the number of distinct byte values present.
    """

    data: bytes
    n: int
    delta: int
    occ: dict[int, tuple[int, ...]]


def build_pattern(data) -> Pattern:
    """Build a :class:`Pattern` from a byte sequence in one scan."""
    data = bytes(data)
    if not data:
        raise EmptyPatternError("empty pattern")
    occ: dict[int, list[int]] = {}
    for pos, b in enumerate(data):
        occ.setdefault(b, []).append(pos)
    frozen = {b: tuple(positions) for b, positions in occ.items()}
    return Pattern(data=data, n=len(data), delta=len(frozen), occ=frozen)


@dataclass(frozen=True)
class NProfile:
    """Suffix-match lengths for every prefix of a pattern.

    ``values[k]`` is the length of the longest suffix of ``data[:k+1]`` that
    is also a suffix of the whole pattern. ``values[n-1] == n`` always.
    """

    values: tuple[int, ...]


def z_array(s: bytes) -> list[int]:
    """Length of the longest common prefix of ``s`` and ``s[k:]`` for every k.

    ``z[0]`` is defined as ``len(s)``. Runs in O(len(s)).
    """
    n = len(s)
    z = [0] * n
    if n == 0:
        return z
    z[0] = n
    left = right = 0
    for k in range(1, n):
        if k < right:
            z[k] = min(right - k, z[k - left])
        while k + z[k] < n and s[z[k]] == s[k + z[k]]:
            z[k] += 1
        if k + z[k] > right:
            left, right = k, k + z[k]
    return z


def compute_n_profile(p: Pattern) -> NProfile:
    """Compute the suffix-match profile via the Z array of the reversed pattern.

    The profile value at position k equals the Z value of the reversed
    pattern at the mirrored position, so the whole profile costs O(n).
    """
    rev = p.data[::-1]
    z = z_array(rev)
    n = p.n
    return NProfile(values=tuple(z[n - 1 - k] for k in range(n)))
