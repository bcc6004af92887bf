"""Work-per-output measurements for the generators.

Work is counted, not timed: procedure calls plus inner-loop iterations, plus
inverse-comparison iterations for bracelets. The visitor does nothing, so
output handling never enters the totals.
"""
import csv
import logging
from dataclasses import dataclass
from typing import List

from .counting import count, enumeration_kind
from .generate import generate

log = logging.getLogger(__name__)

DEFAULT_OUTPUT_BUDGET = 10**7
CSV_HEADER = ("kind", "g", "len", "outputs", "work", "ratio")
SHAPE_SLACK = 1.02


@dataclass(frozen=True)
class WorkRow:
    kind: str
    g: int
    length: int
    outputs: int
    work: int

    @property
    def ratio(self) -> float:
        return self.work / self.outputs

    def csv_fields(self):
        return (self.kind, self.g, self.length, self.outputs, self.work, f"{self.ratio:.6f}")


def measure_one(kind, g, length, aperiodic=False):
    counters = generate(kind, g, length, aperiodic)
    expected = count(enumeration_kind(kind, aperiodic), g, length)
    if counters.outputs != expected:
        raise RuntimeError(
            f"{kind} g={g} len={length}: generated {counters.outputs}, formula gives {expected}"
        )
    return WorkRow(kind, g, length, counters.outputs, counters.work)


def measure(kind, g, lmin, lmax, budget=DEFAULT_OUTPUT_BUDGET, aperiodic=False) -> List[WorkRow]:
    """One row per length in ``lmin..lmax``.

    Lengths whose predicted output count exceeds ``budget`` are skipped (and
    logged); the prediction comes from the closed-form counts.
    """
    if lmin < 1 or lmax < lmin:
        raise ValueError(f"bad length range {lmin}..{lmax}")
    rows = []
    for length in range(lmin, lmax + 1):
        predicted = count(enumeration_kind(kind, aperiodic), g, length)
        if predicted > budget:
            log.info("skip %s g=%d len=%d: %d outputs over budget %d", kind, g, length, predicted, budget)
            continue
        rows.append(measure_one(kind, g, length, aperiodic))
    return rows


def max_length_within(kind, g, budget=DEFAULT_OUTPUT_BUDGET, aperiodic=False):
    """Largest length whose output count fits the budget."""
    length = 1
    ck = enumeration_kind(kind, aperiodic)
    while count(ck, g, length + 1) <= budget:
        length += 1
    return length


def write_csv(rows, fh):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in sorted(rows, key=lambda r: (r.g, r.length)):
        writer.writerow(row.csv_fields())


def peak_then_decline(rows, slack=SHAPE_SLACK):
    """Check the empirical constant-amortized-time shape of a ratio series.

    With ``peak`` the length of the largest ratio, every step after
    ``peak + 1`` may grow by at most ``slack`` and the last ratio must sit
    strictly below the peak. Returns ``(ok, reason)``.
    """
    rows = sorted(rows, key=lambda r: r.length)
    if len(rows) < 2:
        return False, "need at least two rows"
    ratios = {r.length: r.ratio for r in rows}
    peak = max(ratios, key=ratios.get)
    last = rows[-1].length
    for length in range(peak + 1, last):
        if length + 1 in ratios and length in ratios:
            if ratios[length + 1] > ratios[length] * slack:
                return False, f"ratio rises at len {length + 1}: {ratios[length]:.6f} -> {ratios[length + 1]:.6f}"
    if not ratios[last] < ratios[peak]:
        return False, f"final ratio {ratios[last]:.6f} not below peak {ratios[peak]:.6f} at len {peak}"
    return True, f"peak {ratios[peak]:.6f} at len {peak}, final {ratios[last]:.6f} at len {last}"
