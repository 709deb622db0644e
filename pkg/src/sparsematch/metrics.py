"""Search instrumentation: text reads, event counts, shift distribution."""

from __future__ import annotations

import json

EVENT_KEYS = ("type1", "type2", "type3")

TSV_FIELDS = (
    "text_reads",
    "type1",
    "type2",
    "type3",
    "verifications",
    "total_shift",
    "mean_shift",
)


class Counters:
    """Monotone accumulators for one search (or one verifier sweep).

    A text read is one access of a text character during classification or
    verification; skips served from recorded suffix-match lengths cost zero
    reads. Shifts are recorded only when the shifted window is still inside
    the text, so the final loop-exiting shift does not appear.
    """

    __slots__ = (
        "text_reads",
        "events",
        "verifications",
        "verification_match_lengths",
        "shifts",
        "total_shift",
    )

    def __init__(self):
        self.text_reads = 0
        self.events = {k: 0 for k in EVENT_KEYS}
        self.verifications = 0
        self.verification_match_lengths: dict[int, int] = {}
        self.shifts: dict[int, int] = {}
        self.total_shift = 0

    def record_read(self, count: int = 1) -> None:
        self.text_reads += count

    def record_event(self, kind: str) -> None:
        self.events[kind] += 1

    def record_shift(self, shift: int) -> None:
        self.shifts[shift] = self.shifts.get(shift, 0) + 1
        self.total_shift += shift

    def record_verification(self, matched_length: int) -> None:
        self.verifications += 1
        hist = self.verification_match_lengths
        hist[matched_length] = hist.get(matched_length, 0) + 1

    def event_total(self) -> int:
        return sum(self.events.values())

    @property
    def mean_shift(self) -> float:
        total_events = self.event_total()
        if total_events == 0:
            return 0.0
        return self.total_shift / total_events

    def merge(self, other: "Counters") -> "Counters":
        """Field-wise sum / histogram union; commutative and associative."""
        out = Counters()
        out.text_reads = self.text_reads + other.text_reads
        out.events = {k: self.events[k] + other.events[k] for k in EVENT_KEYS}
        out.verifications = self.verifications + other.verifications
        for src in (self.verification_match_lengths, other.verification_match_lengths):
            for k, v in src.items():
                out.verification_match_lengths[k] = (
                    out.verification_match_lengths.get(k, 0) + v
                )
        for src in (self.shifts, other.shifts):
            for k, v in src.items():
                out.shifts[k] = out.shifts.get(k, 0) + v
        out.total_shift = self.total_shift + other.total_shift
        return out

    def __eq__(self, other):
        if not isinstance(other, Counters):
            return NotImplemented
        return (
            self.text_reads == other.text_reads
            and self.events == other.events
            and self.verifications == other.verifications
            and self.verification_match_lengths == other.verification_match_lengths
            and self.shifts == other.shifts
            and self.total_shift == other.total_shift
        )

    def to_dict(self) -> dict:
        return {
            "text_reads": self.text_reads,
            "events": {k: self.events[k] for k in EVENT_KEYS},
            "verifications": self.verifications,
            "verification_match_lengths": _hist_dict(self.verification_match_lengths),
            "shifts": _hist_dict(self.shifts),
            "total_shift": self.total_shift,
            "mean_shift": self.mean_shift,
        }

    def tsv_row(self) -> str:
        ev = self.events
        cells = (
            self.text_reads,
            ev["type1"],
            ev["type2"],
            ev["type3"],
            self.verifications,
            self.total_shift,
            f"{self.mean_shift:.6g}",
        )
        return "\t".join(str(c) for c in cells)


def _hist_dict(hist: dict[int, int]) -> dict[str, int]:
    # Numeric key order keeps the JSON deterministic.
    return {str(k): hist[k] for k in sorted(hist)}


def snapshot_json(counters: Counters) -> str:
    """Serialize counters with a fixed field and key order."""
    return json.dumps(counters.to_dict())


def parse_snapshot(text: str) -> Counters:
    """Inverse of :func:`snapshot_json`; the derived mean is recomputed."""
    doc = json.loads(text)
    out = Counters()
    out.text_reads = doc["text_reads"]
    out.events = {k: doc["events"][k] for k in EVENT_KEYS}
    out.verifications = doc["verifications"]
    out.verification_match_lengths = {
        int(k): v for k, v in doc["verification_match_lengths"].items()
    }
    out.shifts = {int(k): v for k, v in doc["shifts"].items()}
    out.total_shift = doc["total_shift"]
    return out
