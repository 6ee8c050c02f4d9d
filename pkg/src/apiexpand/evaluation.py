"""Retrieval metrics and the experiment harness.

API suggestion is scored with Hit@K, MRR@K, MAP@K and MR@K against a
ground-truth API set; query reformulation is scored with query
effectiveness (rank of the first ground-truth code document) for the
baseline and the reformulated query.
"""
from __future__ import annotations

import csv
import io
import itertools
import logging
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from statistics import fmean
from typing import Hashable, Iterable, Optional, Sequence

from .corpus import Query, preprocess, read_jsonl
from .exceptions import ConfigError, CorpusFormatError, EmptyQueryError, NoFeedbackError
from .index import InvertedIndex, search

logger = logging.getLogger(__name__)

NOT_FOUND = None
"""Query effectiveness of a query whose ground truth is never retrieved."""


# ---------------------------------------------------------------------------
# Per-query metrics


def hit_at_k(results: Sequence, gt: Iterable, k: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    gt = set(gt)
    return int(any(r in gt for r in results[:k]))


def mrr_at_k(results: Sequence, gt: Iterable, k: int) -> float:
    gt = set(gt)
    for i, r in enumerate(results[:k], 1):
        if r in gt:
            return 1.0 / i
    return 0.0


def map_at_k(results: Sequence, gt: Iterable, k: int) -> float:
    """Average of precision@p over the positions p <= k holding a relevant item."""
    gt = set(gt)
    hits = 0
    precisions = []
    for i, r in enumerate(results[:k], 1):
        if r in gt:
            hits += 1
            precisions.append(hits / i)
    return sum(precisions) / len(precisions) if precisions else 0.0


def recall_at_k(results: Sequence, gt: Iterable, k: int) -> float:
    gt = set(gt)
    if not gt:
        raise ValueError("recall is undefined for an empty ground truth set")
    return len(gt.intersection(results[:k])) / len(gt)


def query_effectiveness(results: Sequence, gt_code: Iterable) -> Optional[int]:
    gt = set(gt_code)
    for i, r in enumerate(results, 1):
        if r in gt:
            return i
    return NOT_FOUND


@dataclass(frozen=True)
class QueryComparison:
    improved: int
    worsened: int
    preserved: int
    mrd_improved: Optional[float]
    mrd_worsened: Optional[float]

    @property
    def total(self) -> int:
        return self.improved + self.worsened + self.preserved


def _qe_key(rank):
    return float("inf") if rank is NOT_FOUND else rank


def compare_queries(baseline: Sequence, reformulated: Sequence) -> QueryComparison:
    """Count improved / worsened / preserved queries and mean rank differences.

    A missing ground truth ranks below every found one. Rank differences
    (reformulated minus baseline) are averaged only over pairs where both
    ranks are found.
    """
    if len(baseline) != len(reformulated):
        raise ValueError(f"length mismatch: {len(baseline)} baseline vs {len(reformulated)} reformulated")
    improved, worsened, preserved = [], [], 0
    for b, r in zip(baseline, reformulated):
        kb, kr = _qe_key(b), _qe_key(r)
        finite = b is not NOT_FOUND and r is not NOT_FOUND
        if kr < kb:
            improved.append(r - b if finite else None)
        elif kr > kb:
            worsened.append(r - b if finite else None)
        else:
            preserved += 1

    def mean(diffs):
        diffs = [d for d in diffs if d is not None]
        return fmean(diffs) if diffs else None

    return QueryComparison(len(improved), len(worsened), preserved, mean(improved), mean(worsened))


# ---------------------------------------------------------------------------
# Evaluation dataset


@dataclass(frozen=True)
class EvalRecord:
    query_id: Hashable
    query: Query
    gt_api: frozenset[str]
    gt_code: frozenset[Hashable] = frozenset()


def load_eval_set(path) -> list[EvalRecord]:
    """Read ``{id, query, gt_api[], gt_code_ids[]}`` JSON lines."""
    records = []
    for n, d in enumerate(read_jsonl(path), 1):
        try:
            records.append(
                EvalRecord(
                    query_id=d["id"],
                    query=Query.from_text(d["query"], id=d["id"] if isinstance(d["id"], int) else None),
                    gt_api=frozenset(d.get("gt_api", ())),
                    gt_code=frozenset(d.get("gt_code_ids", ())),
                )
            )
        except (KeyError, TypeError) as exc:
            raise CorpusFormatError(f"{path}: bad evaluation record #{n}: {exc}") from exc
    return records


def load_code_corpus(path) -> list[tuple[Hashable, str]]:
    docs = []
    for n, d in enumerate(read_jsonl(path), 1):
        try:
            docs.append((d["id"], d["code"]))
        except (KeyError, TypeError) as exc:
            raise CorpusFormatError(f"{path}: bad code record #{n}: {exc}") from exc
    return docs


# ---------------------------------------------------------------------------
# Experiments


@dataclass(frozen=True)
class Setting:
    m: int
    n: int
    k: int


def parse_sweep(specs: Iterable[str], defaults: Setting) -> list[Setting]:
    """Expand ``m=10..45:5``, ``n=5,16,30`` style specs into a settings grid.

    ``a..b`` steps by 1 unless ``:step`` is given. Unswept parameters keep
    their default.
    """
    grid = {"m": [defaults.m], "n": [defaults.n], "k": [defaults.k]}
    for spec in specs:
        name, sep, values = spec.partition("=")
        name = name.strip().lower()
        if not sep or name not in grid:
            raise ConfigError(f"bad sweep {spec!r}: expected m=.., n=.. or k=..")
        grid[name] = _parse_values(values, spec)
    settings = []
    for m, n, k in itertools.product(grid["m"], grid["n"], grid["k"]):
        for name, v in (("m", m), ("n", n), ("k", k)):
            if v < 1:
                raise ConfigError(f"sweep value {name}={v} is invalid, must be >= 1")
        settings.append(Setting(m, n, k))
    return settings


def _parse_values(values: str, spec: str) -> list[int]:
    out = []
    for part in values.split(","):
        part = part.strip()
        m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)(?::(\d+))?", part)
        try:
            if m:
                lo, hi, step = int(m[1]), int(m[2]), int(m[3] or 1)
                if step < 1 or hi < lo:
                    raise ValueError
                out.extend(range(lo, hi + 1, step))
            else:
                out.append(int(part))
        except ValueError:
            raise ConfigError(f"bad sweep {spec!r}") from None
    return out


@dataclass
class SettingResult:
    setting: Setting
    ks: tuple[int, ...]
    hit: dict[int, float]
    mrr: dict[int, float]
    map: dict[int, float]
    mr: dict[int, float]
    suggestions: dict[Hashable, tuple[str, ...]]
    qe_baseline: dict[Hashable, Optional[int]] = field(default_factory=dict)
    qe_reformulated: dict[Hashable, Optional[int]] = field(default_factory=dict)
    comparison: Optional[QueryComparison] = None


@dataclass
class MetricReport:
    ks: tuple[int, ...]
    results: list[SettingResult]
    query_count: int

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = ["m", "n", "k"]
        for metric in ("hit", "mrr", "map", "mr"):
            header += [f"{metric}@{K}" for K in self.ks]
        header += ["improved", "worsened", "preserved", "mrd_improved", "mrd_worsened"]
        writer.writerow(header)
        for res in self.results:
            row = [res.setting.m, res.setting.n, res.setting.k]
            for table in (res.hit, res.mrr, res.map, res.mr):
                row += [_fmt(table[K]) for K in self.ks]
            c = res.comparison
            if c is None:
                row += [""] * 5
            else:
                row += [c.improved, c.worsened, c.preserved, _fmt(c.mrd_improved), _fmt(c.mrd_worsened)]
            writer.writerow(row)
        return buf.getvalue()

    def qe_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "n", "k", "query_id", "baseline_qe", "reformulated_qe"])
        for res in self.results:
            for qid in res.qe_baseline:
                writer.writerow([
                    res.setting.m, res.setting.n, res.setting.k, qid,
                    _fmt_rank(res.qe_baseline[qid]), _fmt_rank(res.qe_reformulated[qid]),
                ])
        return buf.getvalue()

    def to_markdown(self) -> str:
        lines = [f"# API suggestion and reformulation report ({self.query_count} queries)", ""]
        for res in self.results:
            s = res.setting
            lines += [f"## M={s.m}, N={s.n}, K={s.k}", ""]
            lines.append("| Metric | " + " | ".join(f"Top-{K}" for K in self.ks) + " |")
            lines.append("|---|" + "---|" * len(self.ks))
            for label, table, pct in (
                ("Top-K Accuracy", res.hit, True),
                ("Mean Reciprocal Rank@K", res.mrr, False),
                ("Mean Average Precision@K", res.map, True),
                ("Mean Recall@K", res.mr, True),
            ):
                cells = [f"{100 * table[K]:.2f}%" if pct else f"{table[K]:.2f}" for K in self.ks]
                lines.append(f"| {label} | " + " | ".join(cells) + " |")
            c = res.comparison
            if c is not None:
                total = c.total or 1
                lines += [
                    "",
                    "| Improved/MRD | Worsened/MRD | Preserved |",
                    "|---|---|---|",
                    f"| {100 * c.improved / total:.2f}%/{_fmt_mrd(c.mrd_improved)} "
                    f"| {100 * c.worsened / total:.2f}%/{_fmt_mrd(c.mrd_worsened)} "
                    f"| {100 * c.preserved / total:.2f}% |",
                ]
            lines.append("")
        return "\n".join(lines)

    def write(self, out_dir) -> list[Path]:
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        paths = [out_dir / "report.csv", out_dir / "report.md"]
        paths[0].write_text(self.to_csv(), encoding="utf-8")
        paths[1].write_text(self.to_markdown(), encoding="utf-8")
        if any(r.qe_baseline for r in self.results):
            paths.append(out_dir / "qe.csv")
            paths[2].write_text(self.qe_csv(), encoding="utf-8")
        return paths


def _fmt(x) -> str:
    return "" if x is None else f"{x:.6f}"


def _fmt_rank(r) -> str:
    return "not-found" if r is NOT_FOUND else str(r)


def _fmt_mrd(x) -> str:
    return "n/a" if x is None else f"{x:+.0f}"


def code_tokens(tokens: Sequence[str], vocabulary=None) -> list[str]:
    """Normalize query tokens (keywords and class names) the way code documents are."""
    return preprocess(" ".join(tokens), vocabulary)


def _evaluate_query(engine, record: EvalRecord, setting: Setting, max_k: int, code_index):
    try:
        ref = engine.reformulate(record.query, k=max(setting.k, max_k), m=setting.m, n=setting.n)
        ranked_apis = ref.suggested
    except (NoFeedbackError, EmptyQueryError) as exc:
        logger.warning("query %r: %s", record.query_id, exc)
        ref, ranked_apis = None, ()
    qe_b = qe_r = NOT_FOUND
    if code_index is not None and record.gt_code:
        base_tokens = code_tokens(record.query.keywords, engine.vocabulary)
        hits = search(code_index, base_tokens, top=max(code_index.doc_count, 1))
        qe_b = query_effectiveness([h.doc_id for h in hits], record.gt_code)
        if ref is not None:
            full = code_tokens(record.query.keywords + tuple(ranked_apis[: setting.k]), engine.vocabulary)
            hits = search(code_index, full, top=max(code_index.doc_count, 1))
            qe_r = query_effectiveness([h.doc_id for h in hits], record.gt_code)
        else:
            qe_r = qe_b
    return tuple(ranked_apis), qe_b, qe_r


def run_experiment(
    engine,
    records: Sequence[EvalRecord],
    code_index: Optional[InvertedIndex] = None,
    settings: Optional[Sequence[Setting]] = None,
    ks: Sequence[int] = (1, 3, 5, 10),
    jobs: int = 1,
) -> MetricReport:
    """Evaluate API suggestion (and, with a code index, reformulation) per setting.

    Suggestion metrics use the top ``max(ks)`` ranked classes; code
    retrieval appends the top ``setting.k`` classes to the query.
    """
    if engine is None:
        raise ConfigError("missing component: reformulation engine")
    if not hasattr(engine, "index_"):
        raise ConfigError("missing component: engine is not fitted (Q&A index)")
    records = list(records)
    if not records:
        raise ConfigError("empty evaluation set")
    needs_code = any(r.gt_code for r in records)
    if needs_code and code_index is None:
        logger.warning("no code index given; query effectiveness is skipped")
    ks = tuple(sorted(set(ks)))
    if not ks or ks[0] < 1:
        raise ConfigError("ks must be positive")
    if settings is None:
        settings = [Setting(engine.m, engine.n, engine.k)]
    max_k = ks[-1]

    results = []
    for setting in settings:
        def work(rec, setting=setting):
            return _evaluate_query(engine, rec, setting, max_k, code_index)

        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                outcomes = list(pool.map(work, records))
        else:
            outcomes = [work(r) for r in records]

        res = SettingResult(setting, ks, {}, {}, {}, {}, suggestions={})
        api_records = [(rec, out) for rec, out in zip(records, outcomes) if rec.gt_api]
        for K in ks:
            res.hit[K] = _mean(hit_at_k(out[0], rec.gt_api, K) for rec, out in api_records)
            res.mrr[K] = _mean(mrr_at_k(out[0], rec.gt_api, K) for rec, out in api_records)
            res.map[K] = _mean(map_at_k(out[0], rec.gt_api, K) for rec, out in api_records)
            res.mr[K] = _mean(recall_at_k(out[0], rec.gt_api, K) for rec, out in api_records)
        for rec, out in zip(records, outcomes):
            res.suggestions[rec.query_id] = out[0]
            if code_index is not None and rec.gt_code:
                res.qe_baseline[rec.query_id] = out[1]
                res.qe_reformulated[rec.query_id] = out[2]
        if res.qe_baseline:
            res.comparison = compare_queries(
                list(res.qe_baseline.values()), list(res.qe_reformulated.values())
            )
        results.append(res)
    return MetricReport(ks=ks, results=results, query_count=len(records))


def _mean(values) -> float:
    values = list(values)
    return fmean(values) if values else 0.0
