"""Writers for json-lines, csv, plot-tsv and svg output."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Iterable, TextIO

from .records import DegenerateEntry, ExperimentRecord, dumps, loads

FORMATS = ("json", "csv", "tsv", "svg")

CSV_COLUMNS = (
    "spec", "d", "N", "box_total", "unimodal", "strictly_unimodal",
    "gcd_criterion", "idp_witness", "box", "degenerate",
)


def _flag(value) -> str:
    return "" if value is None else str(value).lower()


def write_jsonl(entries: Iterable, fh: TextIO, timings: bool = False) -> None:
    for e in entries:
        fh.write(dumps(e, timings) + "\n")


def write_csv(entries: Iterable, fh: TextIO) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for e in entries:
        if isinstance(e, DegenerateEntry):
            w.writerow([e.spec, len(e.a) + 1, "", "", "", "", "", "", "", e.reason])
            continue
        w.writerow([
            e.spec, e.simplex.d, e.simplex.N, e.box(1), _flag(e.unimodal),
            _flag(e.strictly_unimodal), _flag(e.gcd_criterion), e.idp_witness_found,
            " ".join(str(c) for c in e.box), "",
        ])


def write_tsv(entries: Iterable, fh: TextIO) -> None:
    """One block per record: ``age``, exact probability, decimal probability."""
    first = True
    for e in entries:
        if isinstance(e, DegenerateEntry) or e.box_distribution is None:
            continue
        if not first:
            fh.write("\n")
        first = False
        fh.write(f"# {e.spec}\n")
        fh.write("age\tprobability\tdecimal\n")
        for age, p in enumerate(e.box_distribution):
            fh.write(f"{age}\t{p.numerator}/{p.denominator}\t{float(p):.12g}\n")


def write_svg(entries: Iterable, fh: TextIO) -> None:
    """Distribution of each record as a line over ages (bars for a single record)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    records = [e for e in entries if isinstance(e, ExperimentRecord) and e.box_distribution]
    with matplotlib.rc_context({"svg.hashsalt": "boxpoly", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(6, 4))
        if len(records) == 1:
            probs = records[0].box_distribution.as_floats()
            ax.bar(range(len(probs)), probs, color="tab:blue")
            ax.set_title(records[0].spec if len(records[0].spec) < 60 else "")
        else:
            for r in records:
                probs = r.box_distribution.as_floats()
                ax.plot(range(len(probs)), probs, marker="o", markersize=2, linewidth=1)
        ax.set_xlabel("age")
        ax.set_ylabel("probability")
        buf = io.StringIO()
        fig.savefig(buf, format="svg", metadata={"Date": None})
        plt.close(fig)
    fh.write(buf.getvalue())


def emit(entries: Iterable, fmt: str, out: str | Path | TextIO, timings: bool = False) -> None:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    entries = list(entries)
    if isinstance(out, (str, Path)):
        with open(out, "w", encoding="utf-8", newline="") as fh:
            emit(entries, fmt, fh, timings)
        return
    if fmt == "json":
        write_jsonl(entries, out, timings)
    elif fmt == "csv":
        write_csv(entries, out)
    elif fmt == "tsv":
        write_tsv(entries, out)
    else:
        write_svg(entries, out)


def read_jsonl(path: str | Path) -> list:
    with open(path, encoding="utf-8") as fh:
        return [loads(line) for line in fh if line.strip()]


def existing_specs(path: str | Path) -> frozenset[str]:
    """Spec strings already recorded in a json-lines file (for resuming)."""
    p = Path(path)
    if not p.exists():
        return frozenset()
    return frozenset(e.spec for e in read_jsonl(p) if isinstance(e, ExperimentRecord))


def write_meta(path: str | Path, meta: dict, summary: dict) -> Path:
    """Write ``<path>.meta.json`` next to an output file."""
    target = Path(str(path) + ".meta.json")
    body = {"schema": 1, **meta, "summary": summary}
    target.write_text(json.dumps(body, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return target
