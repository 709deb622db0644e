"""Selection of the rare anchor substring and construction of shift tables.

For an ordered byte pair (u, v), the candidate substring is the longest one
that starts with u, ends with v, and contains neither u nor v strictly
inside; ties go to the larger end position. The anchor substring of a
pattern is the best such candidate over all ordered pairs of bytes present
in the pattern, with the same (length, end position) tie-break. Searches
then only probe the two anchor offsets of each window before verifying.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pattern import Pattern

POLICY_SAFE = "safe"
POLICY_PAPER = "paper"
POLICIES = (POLICY_SAFE, POLICY_PAPER)


@dataclass(frozen=True)
class SparseCandidate:
    """Best substring for one ordered byte pair, or the basis for it.

    Positions are 0-based and inclusive; ``length == end - start + 1``.
    """

    u: int
    v: int
    start: int
    end: int
    length: int


@dataclass(frozen=True)
class SparseModel:
    """The anchor substring selected for a pattern.

    ``member`` holds the byte values occurring anywhere in
    ``data[start:end+1]``; ``rightmost`` maps each of them to its rightmost
    position inside that span. ``startc``/``endc`` occur in the span only at
    its two ends.
    """

    start: int
    end: int
    startc: int
    endc: int
    length: int
    member: frozenset[int]
    rightmost: dict[int, int]


@dataclass(frozen=True)
class ShiftTables:
    """Per-byte window shifts for the three event kinds under one policy.

    Safe policy: ``t1``/``t2`` are 256-entry tables of minimal shifts that
    cannot skip a placement consistent with the characters read so far;
    ``t3`` is the corresponding constant. Every safe shift s satisfies
    1 <= s <= end position + 1.

    Paper policy: ``t1`` is the distance from the rightmost occurrence of a
    byte inside the anchor substring to its end (pattern length if the byte
    is absent from the pattern, anchor length + 1 if present but outside the
    anchor); ``t2`` is unused and the shift is ``t2_equal`` when the two
    inspected text characters are equal, else ``t2_differ``. ``t1[endc]`` is
    stored as 0 but unreachable: a Type-1 event requires a mismatch there.
    """

    policy: str
    t1: tuple[int, ...]
    t2: tuple[int, ...] | None
    t2_equal: int | None
    t2_differ: int | None
    t3: int


def sparse_for_pair(p: Pattern, u: int, v: int) -> SparseCandidate | None:
    """Best candidate substring for the ordered pair (u, v), if any.

    Runs a single merge scan of the two occurrence lists. Returns None when
    u or v does not occur in the pattern, or (for u != v) when no occurrence
    of v lies at or after an occurrence of u without another u or v between.
    A single position counts as a length-1 candidate only when u == v.
    """
    occ_u = p.occ.get(u)
    occ_v = p.occ.get(v)
    if not occ_u or not occ_v:
        return None
    best: tuple[int, int, int] | None = None  # (length, end, start)
    if u == v:
        prev = None
        for e in occ_u:
            if prev is not None:
                cand = (e - prev + 1, e, prev)
                if best is None or cand[:2] > best[:2]:
                    best = cand
            prev = e
        single = (1, occ_u[-1], occ_u[-1])
        if best is None or single[:2] > best[:2]:
            best = single
    else:
        j = 0
        count_u = len(occ_u)
        last_u = -1
        prev_v = -1
        for e in occ_v:
            while j < count_u and occ_u[j] < e:
                last_u = occ_u[j]
                j += 1
            # last_u is the nearest u before e, so no u sits inside (last_u, e);
            # prev_v <= last_u rules out a v inside as well.
            if last_u >= 0 and last_u >= prev_v:
                cand = (e - last_u + 1, e, last_u)
                if best is None or cand[:2] > best[:2]:
                    best = cand
            prev_v = e
        if best is None:
            return None
    length, end, start = best
    return SparseCandidate(u=u, v=v, start=start, end=end, length=length)


def select_sparse(p: Pattern) -> SparseModel:
    """Select the anchor substring over all ordered pairs of present bytes.

    Equivalent to maximising :func:`sparse_for_pair` over all pairs, but
    done in one left-to-right scan: for a window ending at e, the best start
    is the smallest last-occurrence position that is not left of the
    previous occurrence of the ending byte. Total cost O(n * delta).
    """
    data = p.data
    last = [-1] * 256
    active: list[int] = []
    best_len = 0
    best_end = -1
    best_start = -1
    for e, v in enumerate(data):
        prev_v = last[v]
        lo = e  # the length-1 candidate (e, e)
        for b in active:
            s = last[b]
            if prev_v <= s < lo:
                lo = s
        length = e - lo + 1
        if length > best_len or (length == best_len and e > best_end):
            best_len, best_end, best_start = length, e, lo
        if prev_v < 0:
            active.append(v)
        last[v] = e
    member: set[int] = set()
    rightmost: dict[int, int] = {}
    for k in range(best_start, best_end + 1):
        b = data[k]
        member.add(b)
        rightmost[b] = k
    return SparseModel(
        start=best_start,
        end=best_end,
        startc=data[best_start],
        endc=data[best_end],
        length=best_len,
        member=frozenset(member),
        rightmost=rightmost,
    )


def build_shift_tables(p: Pattern, s: SparseModel, policy: str) -> ShiftTables:
    """Build the shift tables for one policy from a pattern and its anchor."""
    if policy not in POLICIES:
        raise ValueError(f"unknown shift policy: {policy!r}")
    data = p.data
    n = p.n
    s0, e0 = s.start, s.end
    startc, endc = s.startc, s.endc
    length = s.length

    if policy == POLICY_PAPER:
        t1 = [0] * 256
        for c in range(256):
            if c in s.member:
                t1[c] = e0 - s.rightmost[c]
            elif c in p.occ:
                t1[c] = length + 1
            else:
                t1[c] = n
        return ShiftTables(
            policy=POLICY_PAPER,
            t1=tuple(t1),
            t2=None,
            t2_equal=length,
            t2_differ=length + 1,
            t3=length if startc == endc else length + 1,
        )

    # Safe policy. t1 is the bad-character rule anchored at the end offset:
    # the smallest shift that realigns the observed byte with an occurrence
    # of it in the pattern, or moves the end offset past the window start.
    t1 = [e0 + 1] * 256
    for k in range(e0 - 1, -1, -1):
        b = data[k]
        if t1[b] == e0 + 1:
            t1[b] = e0 - k

    # Shifts s that keep the end anchor consistent: data[e0 - s] must be endc
    # again, or the anchor falls off the left edge of the pattern.
    end_ok = [t for t in range(1, e0 + 1) if data[e0 - t] == endc]
    end_ok.append(e0 + 1)

    # For s <= s0 the start-anchor constraint pins exactly one byte value,
    # so the whole 256-entry table falls out of one walk over end_ok.
    t2 = [0] * 256
    filled = [False] * 256
    catch_all = end_ok[-1]
    for t in end_ok:
        if t > s0:
            catch_all = t
            break
        d = data[s0 - t]
        if not filled[d]:
            filled[d] = True
            t2[d] = t
    for c in range(256):
        if not filled[c]:
            t2[c] = catch_all

    t3 = catch_all
    for t in end_ok:
        if t > s0:
            break
        if data[s0 - t] == startc:
            t3 = t
            break

    return ShiftTables(
        policy=POLICY_SAFE,
        t1=tuple(t1),
        t2=tuple(t2),
        t2_equal=None,
        t2_differ=None,
        t3=t3,
    )
