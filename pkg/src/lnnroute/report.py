"""Benchmark harness: run parse -> decompose -> count -> reorder -> count over
``.real`` files and render per-circuit cost reports as CSV or Markdown.

Total QC of a layout = base quantum cost of the decomposed circuit plus 6 per
SWAP pair (each pair is two SWAP gates of cost 3).
"""

from __future__ import annotations

import csv
import io
import re
import time
from dataclasses import dataclass, field
from pathlib import Path

from .circuit import CapacityError, Circuit, identity_ordering, quantum_cost
from .decompose import decompose_circuit
from .lnn import insert_swaps
from .ordering import reorder_pipeline
from .revlib import ParseError, parse_real, save_real
from .simulate import equivalent

# Published totals from the prior line-reordering work this method is compared
# against, keyed by benchmark name; used for the comparison column only.
WI09_TOTAL_QC = {
    "3_17_13": 28, "4_49_17": 98, "4gt4-v0_80": 138, "4gt5_75": 79,
    "4gt12-v1_89": 168, "4gt13-v1_93": 53, "4gt-10v1_81": 147,
    "4mod5-v1_23": 78, "aj-e11_165": 181, "cycle10_2_110": 8046,
    "decod24-v3_46": 21, "ham15_108": 2588, "hwb4_52": 65, "hwb5_55": 337,
    "mod5adder_128": 330, "mod8-10_177": 363, "plus127mod8192_162": 503516,
    "plus63mod4096_163": 210400, "plus63mod8192_164": 279016, "rd53_135": 303,
}

_COST_COMMENT = re.compile(r"#[^\n]*?cost\w*\s*:?\s*(\d+)", re.IGNORECASE)


@dataclass(frozen=True)
class CostReport:
    """One benchmark row: SWAP overhead and total cost before/after reordering."""

    name: str
    num_lines: int
    gate_count: int
    base_cost: int
    file_cost: int | None
    pairs_before: int
    pairs_after: int
    ordering: tuple[int, ...]
    strategy: str
    seed: int
    verified: bool | None  # None when the size guard skipped verification
    wall_time: float

    @property
    def swap_cost_before(self) -> int:
        return 6 * self.pairs_before

    @property
    def swap_cost_after(self) -> int:
        return 6 * self.pairs_after

    @property
    def total_before(self) -> int:
        return self.base_cost + self.swap_cost_before

    @property
    def total_after(self) -> int:
        return self.base_cost + self.swap_cost_after

    @property
    def percent_reduction(self) -> float:
        if self.total_before == 0:
            return 0.0
        return 100.0 * (self.total_before - self.total_after) / self.total_before

    @property
    def wi09_cost(self) -> int | None:
        return WI09_TOTAL_QC.get(self.name)

    @property
    def percent_vs_wi09(self) -> float | None:
        ref = self.wi09_cost
        if ref is None:
            return None
        return 100.0 * (ref - self.total_after) / ref


@dataclass
class SuiteResult:
    reports: list[CostReport] = field(default_factory=list)
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def average_reduction(self) -> float | None:
        if not self.reports:
            return None
        return sum(r.percent_reduction for r in self.reports) / len(self.reports)

    @property
    def ok(self) -> bool:
        return not self.failures and all(r.verified is not False for r in self.reports)


def run_file(path, *, strategy: str = "recursive", seed: int = 0, weighted: bool = True,
             keep_best: bool = False, emit_lnn=None, verify_max_lines: int = 12) -> CostReport:
    """Full pipeline over one ``.real`` file."""
    path = Path(path)
    started = time.perf_counter()
    text = path.read_text(encoding="utf-8")
    cost_note = _COST_COMMENT.search(text)
    original = parse_real(text)

    decomposed = decompose_circuit(original)
    base = quantum_cost(decomposed)
    outcome = reorder_pipeline(decomposed, strategy, seed=seed, weighted=weighted)
    reordered, ordering = outcome.circuit, outcome.ordering
    pairs_before, pairs_after = outcome.pairs_before.pairs, outcome.pairs_after.pairs
    if keep_best and pairs_after > pairs_before:
        reordered = decomposed
        ordering = identity_ordering(decomposed.num_lines)
        pairs_after = pairs_before

    lnn_before = insert_swaps(decomposed)
    lnn_after = insert_swaps(reordered)
    if emit_lnn is not None:
        out_dir = Path(emit_lnn)
        out_dir.mkdir(parents=True, exist_ok=True)
        save_real(out_dir / f"{path.stem}.before.real", lnn_before)
        save_real(out_dir / f"{path.stem}.after.real", lnn_after)

    verified: bool | None = None
    if decomposed.num_lines <= verify_max_lines:
        data_map = ordering[: original.num_lines]
        verified = equivalent(original, lnn_before, line_map=list(range(original.num_lines))) \
            and equivalent(original, lnn_after, line_map=data_map)

    return CostReport(
        name=path.stem,
        num_lines=original.num_lines,
        gate_count=len(original.gates),
        base_cost=base,
        file_cost=int(cost_note.group(1)) if cost_note else None,
        pairs_before=pairs_before,
        pairs_after=pairs_after,
        ordering=ordering,
        strategy=strategy,
        seed=seed,
        verified=verified,
        wall_time=time.perf_counter() - started,
    )


def run_suite(path, **options) -> SuiteResult:
    """Run every ``.real`` file under ``path`` (or the single file itself);
    per-file errors are collected, not raised."""
    path = Path(path)
    files = sorted(path.glob("*.real")) if path.is_dir() else [path]
    result = SuiteResult()
    for f in files:
        try:
            result.reports.append(run_file(f, **options))
        except (ParseError, CapacityError, ValueError) as exc:
            result.failures.append((f.stem, str(exc)))
    return result


# --- rendering ----------------------------------------------------------


_CSV_COLUMNS = [
    "name", "lines", "gates", "base_qc", "file_qc",
    "swap_pairs_before", "swap_cost_before", "total_qc_before",
    "swap_pairs_after", "swap_cost_after", "total_qc_after",
    "reduction_pct", "wi09_qc", "vs_wi09_pct",
    "strategy", "seed", "ordering", "verified",
]


def to_csv(suite: SuiteResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for r in suite.reports:
        writer.writerow([
            r.name, r.num_lines, r.gate_count, r.base_cost,
            "" if r.file_cost is None else r.file_cost,
            r.pairs_before, r.swap_cost_before, r.total_before,
            r.pairs_after, r.swap_cost_after, r.total_after,
            f"{r.percent_reduction:.2f}",
            "" if r.wi09_cost is None else r.wi09_cost,
            "" if r.percent_vs_wi09 is None else f"{r.percent_vs_wi09:.2f}",
            r.strategy, r.seed, " ".join(map(str, r.ordering)),
            "" if r.verified is None else str(r.verified).lower(),
        ])
    for name, error in suite.failures:
        writer.writerow([name, "FAILED", error] + [""] * (len(_CSV_COLUMNS) - 3))
    return buf.getvalue()


def to_markdown(suite: SuiteResult) -> str:
    head = ["Benchmark", "N", "GC", "QC", "SWAP cost", "Total QC",
            "SWAP cost*", "Total QC*", "% decrease", "Prior QC", "% vs prior", "verified"]
    rows = [head, ["---"] * len(head)]
    for r in suite.reports:
        rows.append([
            r.name, str(r.num_lines), str(r.gate_count), str(r.base_cost),
            str(r.swap_cost_before), str(r.total_before),
            str(r.swap_cost_after), str(r.total_after),
            f"{r.percent_reduction:.1f}",
            "-" if r.wi09_cost is None else str(r.wi09_cost),
            "-" if r.percent_vs_wi09 is None else f"{r.percent_vs_wi09:.1f}",
            {True: "yes", False: "FAILED", None: "skipped"}[r.verified],
        ])
    for name, error in suite.failures:
        rows.append([name, "FAILED: " + error] + ["-"] * (len(head) - 2))
    table = "\n".join("| " + " | ".join(row) + " |" for row in rows)
    avg = suite.average_reduction
    avg_text = "n/a" if avg is None else f"{avg:.1f}%"
    note = "\n\nColumns marked * are after reordering. Average cost reduction: " + avg_text + "\n"
    return table + note
