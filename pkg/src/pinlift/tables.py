"""Tables of chirality and spinoriality for small symmetric and alternating groups."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from importlib import resources
from itertools import groupby

from .partitions import Partition, as_partition, conjugate, enumerate_partitions, epsilon
from .reps import Specht
from .spinoriality import AnIrreducibleLabel, Variant, classify_an_irreducible, classify_an_restriction, classify_sn

TABLE1_HEADER = ("shape", "chirality", "sn_spinoriality", "an_spinoriality")
TABLE2_HEADER = ("shape", "size", "plus_minus_spinoriality")


def format_shape(lam) -> str:
    """Exponent notation, e.g. (2,2,1,1) -> "(2^2,1^2)"."""
    lam = as_partition(lam)
    parts = []
    for value, run in groupby(lam):
        k = len(list(run))
        parts.append(f"{value}^{k}" if k > 1 else str(value))
    return "(" + ",".join(parts) + ")"


def parse_shape(text: str) -> Partition:
    """Inverse of :func:`format_shape`; also accepts plain "4,2"."""
    text = text.strip().strip("()")
    out: list[int] = []
    for tok in filter(None, text.split(",")):
        if "^" in tok:
            value, k = tok.split("^")
            out += [int(value)] * int(k)
        else:
            out.append(int(tok))
    return Partition(out)


def _word(flag: bool) -> str:
    return "spinorial" if flag else "aspinorial"


@dataclass(frozen=True)
class TableRow:
    shape: Partition
    chirality: str
    sn_verdict: str
    an_verdict: str

    def as_tuple(self) -> tuple[str, str, str, str]:
        return format_shape(self.shape), self.chirality, self.sn_verdict, self.an_verdict


def table1_row(lam) -> TableRow:
    lam = as_partition(lam)
    rep = Specht(lam)
    sn = classify_sn(rep)
    if lam.n >= 4:
        an_spin = classify_an_restriction(rep).spinorial
    else:
        # A_2 and A_3 have odd order, so H^2 vanishes and every representation lifts
        an_spin = True
    return TableRow(lam, "chiral" if sn.chiral else "achiral", _word(sn.spinorial), _word(an_spin))


def emit_table1(min_n: int = 2, max_n: int = 6) -> list[TableRow]:
    return [table1_row(lam) for n in range(min_n, max_n + 1) for lam in enumerate_partitions(n)]


def table2_shapes(min_n: int = 3, max_n: int = 15) -> list[Partition]:
    """Self-conjugate shapes with epsilon = +1, by size then decreasing lexicographic."""
    return [
        lam
        for n in range(min_n, max_n + 1)
        for lam in enumerate_partitions(n)
        if lam == conjugate(lam) and epsilon(lam) == 1
    ]


def emit_table2(min_n: int = 3, max_n: int = 15) -> list[tuple[str, str, str]]:
    rows = []
    for lam in table2_shapes(min_n, max_n):
        report = classify_an_irreducible(AnIrreducibleLabel(lam, Variant.PLUS))
        rows.append((format_shape(lam), str(lam.n), _word(report.spinorial)))
    return rows


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def table1_csv() -> str:
    return to_csv(TABLE1_HEADER, [row.as_tuple() for row in emit_table1()])


def table2_csv() -> str:
    return to_csv(TABLE2_HEADER, emit_table2())


def golden(name: str) -> str:
    """Transcribed copy of a published table, shipped as package data."""
    return resources.files("pinlift").joinpath("data").joinpath(name).read_text()


def golden_rows(name: str) -> list[tuple[str, ...]]:
    rows = list(csv.reader(io.StringIO(golden(name))))
    return [tuple(r) for r in rows[1:]]


def _normalise(row):
    if row is None:
        return None
    return (tuple(parse_shape(row[0])),) + tuple(row[1:])


def diff_rows(computed, expected) -> list[tuple[Partition, tuple | None, tuple | None]]:
    """(shape, computed row, expected row) for every shape whose rows differ.

    Rows are matched by shape, compared as partitions so "(2,2)" and "(2^2)"
    agree.  A shape present on one side only has None on the other.
    """
    got = {r[0]: r for r in map(_normalise, computed)}
    want = {r[0]: r for r in map(_normalise, expected)}
    out = []
    for shape in list(got) + [s for s in want if s not in got]:
        a, b = got.get(shape), want.get(shape)
        if a != b:
            out.append((Partition(shape), a, b))
    return out
