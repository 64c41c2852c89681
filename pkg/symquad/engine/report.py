from __future__ import annotations

import logging
import random
from pathlib import Path

import yaml

from symquad.engine.families import target_spec
from symquad.engine.quadratize import quadratize_family
from symquad.engine.verify import verify_quadratization
from symquad.models import CatalogEntry, QuadratizationFamily, ReportRow, SymmetricSpec

logger = logging.getLogger(__name__)

_GENERAL = frozenset({QuadratizationFamily.GENERAL_SYMMETRIC, QuadratizationFamily.GENERAL_SYMMETRIC_FIX})


class ReportBuilder:
    """Sweeps the catalogued families and certifies every construction."""

    def __init__(self, catalog_path: str | Path, seed: int = 0) -> None:
        self._catalog_path = Path(catalog_path)
        self.seed = seed
        self.entries: list[CatalogEntry] = self.load_catalog()

    def load_catalog(self) -> list[CatalogEntry]:
        raw = yaml.safe_load(self._catalog_path.read_text())
        items = raw.get("families", []) if isinstance(raw, dict) else raw or []
        entries: list[CatalogEntry] = []
        for item in items:
            try:
                entries.append(CatalogEntry(**item))
            except Exception:
                logger.warning("Skipping invalid catalog entry: %s", item.get("family", "?") if isinstance(item, dict) else item)
        return entries

    def random_spec(self, n: int) -> SymmetricSpec:
        rng = random.Random(self.seed + n)
        return SymmetricSpec(n=n, k=[rng.randint(-5, 5) for _ in range(n + 1)])

    def _thresholds(self, family: QuadratizationFamily, n: int) -> list[int | None]:
        if family is QuadratizationFamily.T_OUT_OF_N:
            return list(range(1, n + 1))
        if family is QuadratizationFamily.EXACT_T:
            return list(range(0, n + 1))
        return [None]

    def rows_for(self, entry: CatalogEntry, n: int) -> list[ReportRow]:
        rows: list[ReportRow] = []
        thresholds = self._thresholds(entry.family, n) if entry.sweep_t else [None]
        for t in thresholds:
            if entry.family in _GENERAL:
                spec = self.random_spec(n)
                result = quadratize_family(entry.family, spec=spec)
            else:
                spec = target_spec(entry.family, n, t)
                result = quadratize_family(entry.family, n=n, t=t)
            report = verify_quadratization(result.g, spec)
            rows.append(
                ReportRow(
                    family=entry.family,
                    n=n,
                    t=t,
                    aux_count=result.aux_count,
                    paper_bound=result.paper_bound,
                    verified=report.passed and report.global_min_match,
                )
            )
        return rows

    def run(self, n_max: int) -> list[ReportRow]:
        rows: list[ReportRow] = []
        for entry in self.entries:
            for n in range(entry.n_min, n_max + 1):
                if entry.odd_n_only and n % 2 == 0:
                    continue
                rows.extend(self.rows_for(entry, n))
        failed = sum(1 for row in rows if not row.verified)
        logger.info("report up to n=%d: %d rows, %d failed", n_max, len(rows), failed)
        return rows


def render_table(rows: list[ReportRow]) -> str:
    header = f"{'family':<26} {'n':>3} {'t':>3} {'aux':>4} {'bound':>5}  verified"
    lines = [header, "-" * len(header)]
    for row in rows:
        t = "-" if row.t is None else str(row.t)
        lines.append(
            f"{row.family.value:<26} {row.n:>3} {t:>3} {row.aux_count:>4} {row.paper_bound:>5}  {'yes' if row.verified else 'NO'}"
        )
    return "\n".join(lines)
